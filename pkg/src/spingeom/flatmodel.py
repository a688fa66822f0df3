"""Flat-model field theory: Dirac/twistor operators, solvers, tractor calculus.

Everything lives on flat R^{p,q} with constant metric and Schouten tensor
identically zero, so the tractor connections are the displayed slot formulas
with P = 0:

    standard:  D_c(rho, phi^a, sigma) -> (D_c rho, D_c phi^a + rho delta^a_c,
                                          D_c sigma - g_{cp} phi^p)
    spin:      D_c(tau, chi)          -> (D_c tau, D_c chi + (1/sqrt2) gamma_c tau)

Solvers use a polynomial ansatz; the flat solutions are polynomial of degree
at most 2 and the solver demands the dimension stabilize between ansatz
degrees 2 and 3 (a non-stabilizing count means a convention bug).
"""

from __future__ import annotations

from dataclasses import dataclass
from gmpy2 import mpq

from .clifford import CliffordModel
from .fields import (
    Mono,
    Poly,
    PolyField,
    constant_field,
    field_from_polys,
    monomials_up_to,
    zero_field,
)
from .linalg import sparse_kernel
from .pairings import Pairing
from .scalars import INV_SQRT2, ONE, SQRT2, ZERO, Scalar

SPINOR_WEIGHT = mpq(1, 2)


class StabilizationError(RuntimeError):
    """Solution dimension failed to stabilize between ansatz degrees."""


def spinor_field(model: CliffordModel, polys, weight=SPINOR_WEIGHT, parity: str | None = None) -> PolyField:
    kind = "spinor" + (parity or "")
    return PolyField(kind, mpq(weight), polys[0].n, tuple(polys))


def _spinor_parity(kind: str) -> str | None:
    if kind.endswith("+"):
        return "+"
    if kind.endswith("-"):
        return "-"
    return None


def _flip_spinor_kind(model: CliffordModel, kind: str) -> str:
    p = _spinor_parity(kind)
    if p is None or model.pos_indices is None:
        return "spinor"
    return "spinor-" if p == "+" else "spinor+"


def dirac(model: CliffordModel, f: PolyField) -> PolyField:
    """Dslash = gamma^p D_p; lowers the weight label by 1 and flips parity."""
    if not f.kind.startswith("spinor"):
        raise ValueError("dirac acts on spinor fields")
    d = model.spinor_dim
    out = [Poly.zero(f.nvars) for _ in range(d)]
    for p in range(model.dim):
        g = model.raised_gammas[p]
        dcomp = [q.diff(p) for q in f.components]
        for j in range(d):
            acc = out[j]
            for i in range(d):
                c = g[j, i]
                if not c.is_zero() and not dcomp[i].is_zero():
                    acc = acc + dcomp[i].scale(c)
            out[j] = acc
    return PolyField(
        _flip_spinor_kind(model, f.kind), f.weight - 1, f.nvars, tuple(out)
    )


def dirac_companion(model: CliffordModel, chi: PolyField) -> PolyField:
    """tau = (sqrt2/n) Dslash chi, the top-slot partner of the twistor splitting."""
    n = model.dim
    return dirac(model, chi).scale(SQRT2 / Scalar(n))


def twistor_operator(model: CliffordModel, chi: PolyField) -> PolyField:
    """Theta(chi)_c = D_c chi + (1/n) gamma_c Dslash chi, a covector-spinor field."""
    n, d = model.dim, model.spinor_dim
    ds = dirac(model, chi)
    out = []
    inv_n = Scalar(n).inverse()
    for c in range(n):
        g = model.gammas[c]
        for j in range(d):
            acc = chi.components[j].diff(c)
            for i in range(d):
                coef = g[j, i]
                if not coef.is_zero() and not ds.components[i].is_zero():
                    acc = acc + ds.components[i].scale(inv_n * coef)
            out.append(acc)
    return PolyField("covspinor", chi.weight, chi.nvars, tuple(out))


def gamma_trace(model: CliffordModel, theta: PolyField) -> PolyField:
    """gamma^c Theta_c; identically zero for every twistor-operator image."""
    n, d = model.dim, model.spinor_dim
    out = [Poly.zero(theta.nvars) for _ in range(d)]
    for c in range(n):
        g = model.raised_gammas[c]
        block = theta.components[c * d : (c + 1) * d]
        for j in range(d):
            acc = out[j]
            for i in range(d):
                coef = g[j, i]
                if not coef.is_zero() and not block[i].is_zero():
                    acc = acc + block[i].scale(coef)
            out[j] = acc
    return PolyField("spinor", theta.weight - 1, theta.nvars, tuple(out))


def aes_operator(model: CliffordModel, sigma: PolyField) -> PolyField:
    """Trace-free Hessian (D_a D_b sigma)_0; components over pairs a <= b."""
    n = model.dim
    s = sigma.components[0]
    lap = Poly.zero(sigma.nvars)
    hinv = model.gram_inverse
    seconds = {}
    for p in range(n):
        for q in range(p, n):
            seconds[(p, q)] = s.diff(p).diff(q)
    for p in range(n):
        for q in range(n):
            c = hinv[p, q]
            if not c.is_zero():
                lap = lap + seconds[(min(p, q), max(p, q))].scale(c)
    inv_n = Scalar(n).inverse()
    out = []
    for a in range(n):
        for b in range(a, n):
            t = seconds[(a, b)]
            gab = model.gram[a, b]
            if not gab.is_zero():
                t = t - lap.scale(inv_n * gab)
            out.append(t)
    return PolyField("sym2", sigma.weight, sigma.nvars, tuple(out))


def ckf_operator(model: CliffordModel, xi: PolyField) -> PolyField:
    """Conformal Killing operator on a vector field: trace-free D_(a xi_b)."""
    n = model.dim
    lower = _lower(model, xi)
    div = Poly.zero(xi.nvars)
    hinv = model.gram_inverse
    for p in range(n):
        for q in range(n):
            c = hinv[p, q]
            if not c.is_zero():
                div = div + lower[q].diff(p).scale(c)
    out = []
    two_n = Scalar(2) / Scalar(n)
    for a in range(n):
        for b in range(a, n):
            t = lower[b].diff(a) + lower[a].diff(b)
            gab = model.gram[a, b]
            if not gab.is_zero():
                t = t - div.scale(two_n * gab)
            out.append(t)
    return PolyField("sym2", xi.weight, xi.nvars, tuple(out))


def _lower(model: CliffordModel, xi: PolyField) -> list[Poly]:
    n = model.dim
    out = []
    for a in range(n):
        acc = Poly.zero(xi.nvars)
        for b in range(n):
            c = model.gram[a, b]
            if not c.is_zero():
                acc = acc + xi.components[b].scale(c)
        out.append(acc)
    return out


# -- polynomial kernel solver -----------------------------------------------------


def solve_kernel(
    model: CliffordModel,
    equation: str,
    max_degree: int = 3,
    parity: str | None = None,
) -> list[PolyField]:
    """Exact basis of polynomial solutions of twistor / aes / ckf.

    The dimension must stabilize from ansatz degree 2 up to max_degree;
    non-stabilization raises StabilizationError.
    """
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    dims = {}
    basis = None
    for deg in range(2, max_degree + 1):
        basis = _solve_at_degree(model, equation, deg, parity)
        dims[deg] = len(basis)
    if len(set(dims.values())) != 1:
        raise StabilizationError(
            f"{equation} solution dimension does not stabilize: {dims}"
        )
    return basis


def _ansatz_spec(model: CliffordModel, equation: str, parity: str | None):
    n = model.dim
    if equation == "twistor":
        comps = (
            list(range(model.spinor_dim))
            if parity is None
            else list(model.half_indices(parity))
        )
        kind = "spinor" + (parity or "")
        weight = SPINOR_WEIGHT
        op = twistor_operator
        ncomp = model.spinor_dim
    elif equation == "aes":
        comps = [0]
        kind, weight, op, ncomp = "scalar", mpq(1), aes_operator, 1
    elif equation == "ckf":
        comps = list(range(n))
        kind, weight, op, ncomp = "vector", mpq(0), ckf_operator, n
    else:
        raise ValueError(f"unknown equation {equation!r}")
    return comps, kind, weight, op, ncomp


def _solve_at_degree(
    model: CliffordModel, equation: str, deg: int, parity: str | None
) -> list[PolyField]:
    n = model.dim
    comps, kind, weight, op, ncomp = _ansatz_spec(model, equation, parity)
    monos = monomials_up_to(n, deg)
    unknowns = [(c, m) for c in comps for m in monos]
    index = {u: k for k, u in enumerate(unknowns)}
    rows: dict[tuple, dict[int, Scalar]] = {}
    for k, (c, m) in enumerate(unknowns):
        polys = [Poly.zero(n) for _ in range(ncomp)]
        polys[c] = Poly(n, {m: ONE})
        probe = PolyField(kind, mpq(weight), n, tuple(polys))
        img = op(model, probe)
        for j, poly in enumerate(img.components):
            for mono, coeff in poly.terms.items():
                rows.setdefault((j, mono), {})[k] = coeff
    sols = sparse_kernel([rows[r] for r in sorted(rows)], len(unknowns))
    out = []
    for v in sols:
        polys = [Poly.zero(n) for _ in range(ncomp)]
        for k, coeff in enumerate(v):
            if not coeff.is_zero():
                c, m = unknowns[k]
                polys[c] = polys[c] + Poly(n, {m: coeff})
        out.append(PolyField(kind, mpq(weight), n, tuple(polys)))
    return out


def in_solution_space(model: CliffordModel, equation: str, f: PolyField) -> bool:
    comps, kind, weight, op, ncomp = _ansatz_spec(model, equation, _spinor_parity(f.kind))
    return op(model, f).is_zero()


# -- tractor sections ---------------------------------------------------------------


@dataclass(frozen=True)
class StdTractor:
    """Standard tractor section, slots (rho, phi^a, sigma) of weights (-1, 1, 1)."""

    rho: Poly
    phi: tuple[Poly, ...]
    sigma: Poly

    def is_zero(self) -> bool:
        return self.rho.is_zero() and self.sigma.is_zero() and all(
            p.is_zero() for p in self.phi
        )


@dataclass(frozen=True)
class SpinTractor:
    """Spin tractor section, slots (tau, chi) of weights (-1/2, 1/2)."""

    tau: tuple[Poly, ...]
    chi: tuple[Poly, ...]

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.tau) and all(
            p.is_zero() for p in self.chi
        )


@dataclass(frozen=True)
class AdjTractor:
    """Adjoint tractor as a pointwise h-antisymmetric (n+2)x(n+2) matrix."""

    mat: tuple[tuple[Poly, ...], ...]

    def is_zero(self) -> bool:
        return all(p.is_zero() for row in self.mat for p in row)


def splitting_spin(model: CliffordModel, chi: PolyField) -> SpinTractor:
    """L0: chi -> ((sqrt2/n) Dslash chi, chi)."""
    tau = dirac_companion(model, chi)
    return SpinTractor(tuple(tau.components), tuple(chi.components))


def splitting_std(model: CliffordModel, sigma: PolyField) -> StdTractor:
    """L0: sigma -> (-(1/n) Lap sigma, D^a sigma, sigma) with P = 0."""
    n = model.dim
    s = sigma.components[0]
    hinv = model.gram_inverse
    lap = Poly.zero(sigma.nvars)
    for p in range(n):
        for q in range(n):
            c = hinv[p, q]
            if not c.is_zero():
                lap = lap + s.diff(p).diff(q).scale(c)
    grad = []
    for a in range(n):
        acc = Poly.zero(sigma.nvars)
        for b in range(n):
            c = hinv[a, b]
            if not c.is_zero():
                acc = acc + s.diff(b).scale(c)
        grad.append(acc)
    return StdTractor(lap.scale(-(Scalar(n).inverse())), tuple(grad), s)


def splitting_adjoint(model: CliffordModel, xi: PolyField) -> AdjTractor:
    """L0 for vector fields: the displayed two-derivative slot formula, P = 0.

    Slots: nu_a = -(1/2n) D^p D_p xi_a + (1/2n) D^p D_a xi_p + (1/n^2) D_a D^p xi_p,
    mu_ab = D_[a xi_b], lam = -(1/n) D^p xi_p, bottom slot xi; assembled into the
    matrix picture of so(h-tractor) in the splitting (rho, phi^a, sigma).
    """
    n = model.dim
    nv = xi.nvars
    lower = _lower(model, xi)
    hinv = model.gram_inverse

    def raise_idx(covs: list[Poly]) -> list[Poly]:
        out = []
        for a in range(n):
            acc = Poly.zero(nv)
            for b in range(n):
                c = hinv[a, b]
                if not c.is_zero():
                    acc = acc + covs[b].scale(c)
            out.append(acc)
        return out

    div = Poly.zero(nv)
    for p in range(n):
        div = div + xi.components[p].diff(p)
    lam = div.scale(-(Scalar(n).inverse()))
    mu = {}
    half = Scalar(mpq(1, 2))
    for a in range(n):
        for b in range(n):
            mu[(a, b)] = (lower[b].diff(a) - lower[a].diff(b)).scale(half)
    inv2n = (Scalar(2) * Scalar(n)).inverse()
    invn2 = (Scalar(n) * Scalar(n)).inverse()
    nu = []
    for a in range(n):
        box = Poly.zero(nv)
        cross = Poly.zero(nv)
        for p in range(n):
            for q in range(n):
                c = hinv[p, q]
                if c.is_zero():
                    continue
                box = box + lower[a].diff(q).diff(p).scale(c)
                cross = cross + lower[q].diff(a).diff(p).scale(c)
        nu.append(
            box.scale(-inv2n) + cross.scale(inv2n) + div.diff(a).scale(invn2)
        )
    s_up = raise_idx(nu)
    mu_up = {
        (a, b): _sum_polys(
            [mu[(c, b)].scale(hinv[a, c]) for c in range(n) if not hinv[a, c].is_zero()],
            nv,
        )
        for a in range(n)
        for b in range(n)
    }
    N = n + 2
    mat = [[Poly.zero(nv) for _ in range(N)] for _ in range(N)]
    mat[0][0] = lam
    for b in range(n):
        mat[0][1 + b] = -nu[b]
    for a in range(n):
        mat[1 + a][0] = xi.components[a]
        mat[1 + a][N - 1] = s_up[a]
        for b in range(n):
            mat[1 + a][1 + b] = -mu_up[(a, b)]
    for b in range(n):
        mat[N - 1][1 + b] = -lower[b]
    mat[N - 1][N - 1] = -lam
    return AdjTractor(tuple(tuple(row) for row in mat))


def _sum_polys(ps, nv: int) -> Poly:
    out = Poly.zero(nv)
    for p in ps:
        out = out + p
    return out


def adjoint_projection(model: CliffordModel, A: AdjTractor) -> PolyField:
    """Bottom slot Pi(A): the underlying vector field."""
    n = model.dim
    return PolyField(
        "vector", mpq(0), A.mat[1][0].n, tuple(A.mat[1 + a][0] for a in range(n))
    )


# -- flat tractor connections ---------------------------------------------------------


def std_nabla(model: CliffordModel, t: StdTractor, c: int) -> StdTractor:
    n = model.dim
    phi = tuple(
        t.phi[a].diff(c) + (t.rho if a == c else Poly.zero(t.rho.n)) for a in range(n)
    )
    drop = Poly.zero(t.rho.n)
    for p in range(n):
        gcp = model.gram[c, p]
        if not gcp.is_zero():
            drop = drop + t.phi[p].scale(gcp)
    return StdTractor(t.rho.diff(c), phi, t.sigma.diff(c) - drop)


def spin_nabla(model: CliffordModel, s: SpinTractor, c: int) -> SpinTractor:
    d = model.spinor_dim
    g = model.gammas[c]
    chi = []
    for j in range(d):
        acc = s.chi[j].diff(c)
        for i in range(d):
            coef = g[j, i]
            if not coef.is_zero() and not s.tau[i].is_zero():
                acc = acc + s.tau[i].scale(INV_SQRT2 * coef)
        chi.append(acc)
    return SpinTractor(tuple(p.diff(c) for p in s.tau), tuple(chi))


def adj_nabla(model: CliffordModel, A: AdjTractor, c: int) -> AdjTractor:
    """D_c A + [Gamma_c, A] with Gamma_c the flat standard connection matrix."""
    n = model.dim
    N = n + 2
    nv = A.mat[0][0].n
    gamma = [[ZERO] * N for _ in range(N)]
    for a in range(n):
        gamma[1 + a][0] = ONE if a == c else ZERO
    for b in range(n):
        gamma[N - 1][1 + b] = -model.gram[c, b]
    out = [[A.mat[i][j].diff(c) for j in range(N)] for i in range(N)]
    for i in range(N):
        for j in range(N):
            acc = out[i][j]
            for k in range(N):
                gik = gamma[i][k]
                if not gik.is_zero():
                    acc = acc + A.mat[k][j].scale(gik)
                gkj = gamma[k][j]
                if not gkj.is_zero():
                    acc = acc - A.mat[i][k].scale(gkj)
            out[i][j] = acc
    return AdjTractor(tuple(tuple(row) for row in out))


def spin_parallel(model: CliffordModel, s: SpinTractor) -> bool:
    return all(spin_nabla(model, s, c).is_zero() for c in range(model.dim))


def std_parallel(model: CliffordModel, t: StdTractor) -> bool:
    return all(std_nabla(model, t, c).is_zero() for c in range(model.dim))


def adj_parallel(model: CliffordModel, A: AdjTractor) -> bool:
    return all(adj_nabla(model, A, c).is_zero() for c in range(model.dim))


# -- tractor Clifford action -------------------------------------------------------


def tractor_clifford(model: CliffordModel, s: StdTractor, X: SpinTractor) -> SpinTractor:
    """(rho, phi, sigma) . (tau, chi) = (-phi.tau - sqrt2 rho chi, phi.chi + sqrt2 sigma tau)."""
    d = model.spinor_dim
    nv = s.rho.n

    def gamma_phi(spinor: tuple[Poly, ...]) -> list[Poly]:
        out = [Poly.zero(nv) for _ in range(d)]
        for a in range(model.dim):
            g = model.gammas[a]
            pa = s.phi[a]
            if pa.is_zero():
                continue
            for j in range(d):
                for i in range(d):
                    coef = g[j, i]
                    if not coef.is_zero() and not spinor[i].is_zero():
                        out[j] = out[j] + pa * spinor[i].scale(coef)
        return out

    gt = gamma_phi(X.tau)
    gc = gamma_phi(X.chi)
    tau_out = tuple(
        -gt[j] - (s.rho * X.chi[j]).scale(SQRT2) for j in range(d)
    )
    chi_out = tuple(
        gc[j] + (s.sigma * X.tau[j]).scale(SQRT2) for j in range(d)
    )
    return SpinTractor(tau_out, chi_out)


def tractor_metric(model: CliffordModel, s: StdTractor, t: StdTractor) -> Poly:
    out = s.rho * t.sigma + s.sigma * t.rho
    for a in range(model.dim):
        for b in range(model.dim):
            c = model.gram[a, b]
            if not c.is_zero():
                out = out + (s.phi[a] * t.phi[b]).scale(c)
    return out


# -- the generic flat twistor spinor -------------------------------------------------


def generic_twistor(
    model: CliffordModel,
    base: Pairing,
    chi0,
    tau0,
    require_generic: bool = True,
) -> PolyField:
    """The twistor solution with value chi0 and Dirac companion tau0 at x = 0.

    Closed form chi(x) = chi0 - (1/sqrt2) gamma(x) tau0, obtained by integrating
    the flat parallel-transport equations of the spin tractor connection.
    Raises for a null seed (b(chi0, tau0) = 0) unless require_generic is False.
    """
    val = base.value(chi0, tau0)
    if require_generic and val.is_zero():
        raise ValueError("seed pair is null: b(chi0, tau0) = 0")
    n, d = model.dim, model.spinor_dim
    polys = [Poly.const(n, chi0[j]) for j in range(d)]
    for c in range(n):
        g = model.gammas[c]
        xc = Poly.coordinate(n, c)
        for j in range(d):
            acc = ZERO
            for i in range(d):
                coef = g[j, i]
                if not coef.is_zero() and not tau0[i].is_zero():
                    acc = acc + coef * tau0[i]
            if not acc.is_zero():
                polys[j] = polys[j] + xc.scale(-INV_SQRT2 * acc)
    parity = model.spinor_parity(chi0)
    return spinor_field(model, polys, parity=parity)


def pairing_poly(base: Pairing, f1: PolyField, f2: PolyField) -> Poly:
    """b(f1, f2) as an exact polynomial."""
    out = Poly.zero(f1.nvars)
    for i, p in enumerate(f1.components):
        if p.is_zero():
            continue
        for j, q in enumerate(f2.components):
            c = base.gram[i, j]
            if not c.is_zero() and not q.is_zero():
                out = out + (p * q).scale(c)
    return out


def gamma_field(model: CliffordModel, v: PolyField, s: PolyField) -> PolyField:
    """Pointwise Clifford product gamma(v) s of a vector field and a spinor field."""
    d = model.spinor_dim
    nv = v.nvars
    out = [Poly.zero(nv) for _ in range(d)]
    for a in range(model.dim):
        pa = v.components[a]
        if pa.is_zero():
            continue
        g = model.gammas[a]
        for j in range(d):
            for i in range(d):
                coef = g[j, i]
                if not coef.is_zero() and not s.components[i].is_zero():
                    out[j] = out[j] + pa * s.components[i].scale(coef)
    kind = _flip_spinor_kind(model, s.kind) if _spinor_parity(s.kind) else "spinor"
    return PolyField(kind, v.weight + s.weight + 1, nv, tuple(out))
