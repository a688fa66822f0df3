"""Distributions cut out by spinor fields: frames, growth vectors, brackets.

The kernel of a polynomial spinor field under Clifford multiplication is
computed as a polynomial frame on the cell where the elimination pivots do
not vanish.  Adapted frames need exact divisions (the bi-orthonormalization
g(e_i, f_j) = delta and the product normalization), so frame fields on the
cell are quotients of polynomials; all claimed identities are verified as
cross-multiplied polynomial identities, with no tolerance anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from gmpy2 import mpq

from .clifford import CliffordModel
from .fields import Poly, PolyField
from .flatmodel import dirac_companion, gamma_field, pairing_poly
from .linalg import ExactMatrix, Vector, span_rank
from .pairings import ConventionError, Pairing
from .scalars import ONE, ZERO, Scalar


class GenericityError(ValueError):
    """The required genericity invariant vanished; the message names it."""


# -- rational functions (no gcd reduction; equality by cross-multiplication) -----


class RatP:
    """num/den with polynomial parts; den is nonzero by construction."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None) -> None:
        self.num = num
        self.den = den if den is not None else Poly.const(num.n, ONE)
        if self.den.is_zero():
            raise ZeroDivisionError("zero denominator")

    @classmethod
    def of(cls, p: Poly) -> RatP:
        return cls(p)

    def __add__(self, other: RatP) -> RatP:
        return RatP(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: RatP) -> RatP:
        return RatP(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> RatP:
        return RatP(-self.num, self.den)

    def __mul__(self, other) -> RatP:
        if isinstance(other, RatP):
            return RatP(self.num * other.num, self.den * other.den)
        if isinstance(other, (Scalar, int)):
            return RatP(self.num * other, self.den)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: RatP) -> RatP:
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RatP(self.num * other.den, self.den * other.num)

    def diff(self, i: int) -> RatP:
        return RatP(
            self.num.diff(i) * self.den - self.num * self.den.diff(i),
            self.den * self.den,
        )

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def eq(self, other: RatP) -> bool:
        return (self.num * other.den - other.num * self.den).is_zero()

    def eq_const(self, c: Scalar) -> bool:
        return (self.num - self.den.scale(c)).is_zero()

    def constant_value(self) -> Scalar | None:
        """The constant this function equals identically, or None."""
        # num/den constant c  <=>  num = c * den; c = num(x0)/den(x0) for generic x0
        # determined here by matching leading coefficients exactly.
        if self.num.is_zero():
            return ZERO
        for m, c in self.den.terms.items():
            if m in self.num.terms:
                cand = self.num.terms[m] / c
                if self.eq_const(cand):
                    return cand
                return None
        return None

    def eval(self, point) -> Scalar:
        dv = self.den.eval(point)
        if dv.is_zero():
            raise ZeroDivisionError("evaluation outside the cell")
        return self.num.eval(point) / dv


RatVec = tuple[RatP, ...]


def ratvec_of_polys(polys) -> RatVec:
    return tuple(RatP.of(p) for p in polys)


def ratvec_bracket(x: RatVec, y: RatVec) -> RatVec:
    """Lie bracket of rational vector fields, [X,Y]^a = X^p d_p Y^a - Y^p d_p X^a."""
    n = len(x)
    out = []
    for a in range(n):
        acc = RatP(Poly.zero(x[0].num.n))
        for p in range(n):
            if not x[p].is_zero():
                acc = acc + x[p] * y[a].diff(p)
            if not y[p].is_zero():
                acc = acc - y[p] * x[a].diff(p)
        out.append(acc)
    return tuple(out)


def ratvec_pair_g(model: CliffordModel, x: RatVec, y: RatVec) -> RatP:
    acc = RatP(Poly.zero(x[0].num.n))
    for a in range(model.dim):
        for b in range(model.dim):
            c = model.gram[a, b]
            if not c.is_zero():
                acc = acc + (x[a] * y[b]) * c
    return acc


# -- polynomial kernels of polynomial matrices ---------------------------------


def poly_matrix_kernel(
    rows: list[list[Poly]], ncols: int, base_point=None
) -> tuple[list[list[Poly]], Poly]:
    """Kernel frame of a constant-rank polynomial matrix, valid on a cell.

    Elimination over the rational function field with pivots chosen to be
    nonvanishing at the base point whenever possible; returns polynomial
    kernel vectors (denominators cleared) and the cell polynomial (product of
    pivot numerators) on whose complement the frame is a pointwise basis.
    """
    nv = rows[0][0].n if rows else 0
    if base_point is None:
        base_point = (ZERO,) * nv
    work = [[RatP.of(p) for p in r] for r in rows]
    pivots: list[tuple[int, int]] = []
    cell = Poly.const(nv, ONE)
    used_rows: set[int] = set()
    for col in range(ncols):
        candidates = [
            r
            for r in range(len(work))
            if r not in used_rows and not work[r][col].is_zero()
        ]
        if not candidates:
            continue

        def quality(r: int):
            p = work[r][col]
            at0 = not p.num.eval(base_point).is_zero()
            return (0 if at0 else 1, p.num.degree(), r)

        pr = min(candidates, key=quality)
        used_rows.add(pr)
        pivots.append((pr, col))
        cell = cell * work[pr][col].num
        for r in range(len(work)):
            if r == pr or work[r][col].is_zero():
                continue
            f = work[r][col] / work[pr][col]
            work[r] = [work[r][c] - f * work[pr][c] for c in range(ncols)]
    piv_cols = [c for _, c in pivots]
    free_cols = [c for c in range(ncols) if c not in piv_cols]
    basis: list[list[Poly]] = []
    for f in free_cols:
        vec = [RatP(Poly.zero(nv)) for _ in range(ncols)]
        vec[f] = RatP(Poly.const(nv, ONE))
        for pr, pc in reversed(pivots):
            acc = RatP(Poly.zero(nv))
            for c in range(ncols):
                if c != pc and not vec[c].is_zero() and not work[pr][c].is_zero():
                    acc = acc + work[pr][c] * vec[c]
            vec[pc] = RatP(Poly.zero(nv)) - acc / work[pr][pc]
        cleared = []
        for v in vec:
            q = v.num
            for w in vec:
                if w is not v:
                    q = q * w.den
            cleared.append(q)
        basis.append(_strip_common_constant(cleared))
    return basis, cell


def _strip_common_constant(polys: list[Poly]) -> list[Poly]:
    """Divide by a common constant so some coefficient is 1 (determinism only)."""
    for p in polys:
        if not p.is_zero():
            lead = sorted(p.terms.items())[0][1]
            return [q.scale(lead.inverse()) for q in polys]
    return polys


# -- distribution from a spinor field ----------------------------------------------


@dataclass(frozen=True)
class DistributionField:
    """ker(gamma chi) as a polynomial frame on the complement of cell = 0."""

    model: CliffordModel
    chi: PolyField
    frame: tuple[PolyField, ...]
    cell: Poly
    generic: bool

    @property
    def rank(self) -> int:
        return len(self.frame)

    def in_cell(self, point) -> bool:
        return not self.cell.eval(point).is_zero()


def distribution_from_spinor(
    model: CliffordModel,
    base: Pairing,
    chi: PolyField,
    require_generic: bool = True,
) -> DistributionField:
    """The kernel distribution of a spinor field; rank 2 for (2,3), 3 for (3,3)."""
    companion = dirac_companion(model, chi)
    gen_poly = pairing_poly(base, chi, companion)
    generic = gen_poly.is_constant() and not gen_poly.constant_value().is_zero()
    if require_generic and not generic:
        raise GenericityError(
            "vanished invariant: b(chi, (sqrt2/n) Dslash chi) is not a nonzero constant"
        )
    d, n = model.spinor_dim, model.dim
    rows = []
    for s in range(d):
        row = []
        for k in range(n):
            acc = Poly.zero(chi.nvars)
            g = model.gammas[k]
            for i in range(d):
                c = g[s, i]
                if not c.is_zero() and not chi.components[i].is_zero():
                    acc = acc + chi.components[i].scale(c)
            row.append(acc)
        rows.append(row)
    basis, cell = poly_matrix_kernel(rows, n)
    expected = 2 if n == 5 else 3
    if len(basis) != expected:
        raise ConventionError(
            f"kernel rank {len(basis)} != expected {expected} on the cell"
        )
    if cell.eval((ZERO,) * n).is_zero():
        raise ConventionError("base point x = 0 lies outside the cell")
    frame = tuple(
        PolyField("vector", mpq(0), chi.nvars, tuple(vec)) for vec in basis
    )
    for v in frame:
        if not gamma_field(model, v, chi).is_zero():
            raise ConventionError("frame vector does not annihilate chi identically")
    return DistributionField(model, chi, frame, cell, generic)


def growth_vector(dist: DistributionField, point) -> tuple[int, ...]:
    """Ranks of D, D + [D,D], D + [D,D] + [D,[D,D]] at an exact point."""
    if not dist.in_cell(point):
        raise ValueError("point outside the frame cell")
    model = dist.model
    n = model.dim
    frame = [ratvec_of_polys(f.components) for f in dist.frame]
    layer1 = list(frame)
    layer2 = [ratvec_bracket(x, y) for i, x in enumerate(frame) for y in frame[i + 1 :]]
    layer3 = [ratvec_bracket(x, b) for x in frame for b in layer2]

    def ev(vs) -> list[Vector]:
        return [tuple(c.eval(point) for c in v) for v in vs]

    r1 = span_rank(ev(layer1))
    r2 = span_rank(ev(layer1 + layer2))
    if r2 == n:
        return (r1, r2)
    r3 = span_rank(ev(layer1 + layer2 + layer3))
    return (r1, r2, r3)


# -- adapted frames as fields --------------------------------------------------------


@dataclass(frozen=True)
class AdaptedFrameField:
    """Prop 2.6 / 2.13 frame with rational-function coefficients on a cell."""

    model: CliffordModel
    e: tuple[RatVec, ...]
    f: tuple[RatVec, ...]
    r: RatVec | None
    companion: Scalar  # the computed constant in f-product(chi) = companion * tau

    def eval_frame(self, point) -> list[Vector]:
        out = [tuple(c.eval(point) for c in v) for v in self.e]
        if self.r is not None:
            out.append(tuple(c.eval(point) for c in self.r))
        out.extend(tuple(c.eval(point) for c in v) for v in self.f)
        return out


def _gamma_ratvec(model: CliffordModel, v: RatVec, spinor: list[RatP]) -> list[RatP]:
    d = model.spinor_dim
    nv = v[0].num.n
    out = [RatP(Poly.zero(nv)) for _ in range(d)]
    for a in range(model.dim):
        if v[a].is_zero():
            continue
        g = model.gammas[a]
        for j in range(d):
            for i in range(d):
                c = g[j, i]
                if not c.is_zero() and not spinor[i].is_zero():
                    out[j] = out[j] + v[a] * spinor[i] * c
    return out


def adapted_frame_field(
    model: CliffordModel, base: Pairing, chi: PolyField
) -> AdaptedFrameField:
    """The adapted frame of a generic twistor field, as exact rational fields.

    Construction: polynomial kernel frames for chi and its Dirac companion,
    bi-orthonormalized with the exact Gram inverse; r from the bilinear
    r_a = -b(gamma_a chi, tau); the alpha-freedom normalizes the e-product to
    chi, after which the f-product is a constant multiple of tau (computed).
    All of (2.6)-(2.9) resp. (2.13)-(2.15) are then verified as identities by
    verify_adapted_frame_field.
    """
    dist = distribution_from_spinor(model, base, chi)
    tau = dirac_companion(model, chi)
    norm = pairing_poly(base, chi, tau)
    if not (norm.is_constant() and norm.constant_value() == ONE):
        raise ConventionError("adapted frame field requires b(chi, tau) = 1")
    d, n = model.spinor_dim, model.dim
    # tau kernel (a second distribution field, from the companion spinor)
    rows = []
    for s in range(d):
        row = []
        for k in range(n):
            acc = Poly.zero(chi.nvars)
            g = model.gammas[k]
            for i in range(d):
                c = g[s, i]
                if not c.is_zero() and not tau.components[i].is_zero():
                    acc = acc + tau.components[i].scale(c)
            row.append(acc)
        rows.append(row)
    fbasis, _ = poly_matrix_kernel(rows, n)
    k = len(dist.frame)
    if len(fbasis) != k:
        raise ConventionError("kernel ranks of chi and tau differ")
    ehat = [ratvec_of_polys(f.components) for f in dist.frame]
    fhat = [ratvec_of_polys(p) for p in fbasis]
    # Gram and its exact inverse over the rational function field
    G = [[ratvec_pair_g(model, e, f) for f in fhat] for e in ehat]
    inv = _rat_matrix_inverse(G)
    es = []
    for i in range(k):
        vec = []
        for a in range(n):
            acc = RatP(Poly.zero(chi.nvars))
            for s in range(k):
                if not inv[i][s].is_zero():
                    acc = acc + inv[i][s] * ehat[s][a]
            vec.append(acc)
        es.append(tuple(vec))
    fs = [tuple(v) for v in fhat]
    # normalize the e-product
    chi_r = [RatP.of(p) for p in chi.components]
    tau_r = [RatP.of(p) for p in tau.components]
    prod = tau_r
    for e in reversed(es):
        prod = _gamma_ratvec(model, e, prod)
    if k == 2:
        prod = [p * Scalar(mpq(1, 2)) for p in prod]
    lam = _rat_proportionality(prod, chi_r)
    if lam is None or lam.is_zero():
        raise ConventionError("e-product is not a multiple of chi on the cell")
    es[0] = tuple(c / lam for c in es[0])
    fs[0] = tuple(c * lam for c in fs[0])
    # companion constant
    check = chi_r
    for f in reversed(fs):
        check = _gamma_ratvec(model, f, check)
    if k == 2:
        check = [p * Scalar(mpq(1, 2)) for p in check]
    mu = _rat_proportionality(check, tau_r)
    if mu is None:
        raise ConventionError("f-product is not a multiple of tau")
    mu_const = mu.constant_value()
    if mu_const is None or mu_const.is_zero():
        raise ConventionError("f-product multiple is not a nonzero constant")
    r = None
    if k == 2:
        r_cov = []
        for a in range(n):
            ga_chi = [Poly.zero(chi.nvars) for _ in range(d)]
            g = model.gammas[a]
            for j in range(d):
                for i in range(d):
                    c = g[j, i]
                    if not c.is_zero():
                        ga_chi[j] = ga_chi[j] + chi.components[i].scale(c)
            acc = Poly.zero(chi.nvars)
            for jj in range(d):
                for ii in range(d):
                    c = base.gram[jj, ii]
                    if not c.is_zero():
                        acc = acc + (ga_chi[jj] * tau.components[ii]).scale(c)
            r_cov.append(-acc)
        hinv = model.gram_inverse
        r = tuple(
            RatP.of(_combine(r_cov, [hinv[a, b] for b in range(n)], chi.nvars))
            for a in range(n)
        )
    return AdaptedFrameField(model, tuple(es), tuple(fs), r, mu_const)


def _combine(polys: list[Poly], coeffs, nv: int) -> Poly:
    acc = Poly.zero(nv)
    for p, c in zip(polys, coeffs):
        if not c.is_zero():
            acc = acc + p.scale(c)
    return acc


def _rat_matrix_inverse(G: list[list[RatP]]) -> list[list[RatP]]:
    k = len(G)
    nv = G[0][0].num.n
    aug = [
        [G[i][j] for j in range(k)]
        + [RatP(Poly.const(nv, ONE if i == j else ZERO)) for j in range(k)]
        for i in range(k)
    ]
    for col in range(k):
        pr = next((r for r in range(col, k) if not aug[r][col].is_zero()), None)
        if pr is None:
            raise ConventionError("frame Gram is singular on the cell")
        aug[col], aug[pr] = aug[pr], aug[col]
        piv = aug[col][col]
        aug[col] = [x / piv for x in aug[col]]
        for r in range(k):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


def _rat_proportionality(u: list[RatP], v: list[RatP]) -> RatP | None:
    idx = next((i for i, x in enumerate(v) if not x.is_zero()), None)
    if idx is None:
        raise ValueError("proportionality against zero")
    c = u[idx] / v[idx]
    for x, y in zip(u, v):
        if not (x - c * y).is_zero():
            return None
    return c


def verify_adapted_frame_field(
    model: CliffordModel, base: Pairing, chi: PolyField, frame: AdaptedFrameField
) -> dict[str, bool]:
    """All frame identities, exactly, as rational-function identities."""
    tau = dirac_companion(model, chi)
    chi_r = [RatP.of(p) for p in chi.components]
    tau_r = [RatP.of(p) for p in tau.components]
    out: dict[str, bool] = {}
    k = len(frame.e)
    out["e_kernel"] = all(
        all(x.is_zero() for x in _gamma_ratvec(model, e, chi_r)) for e in frame.e
    )
    out["f_kernel"] = all(
        all(x.is_zero() for x in _gamma_ratvec(model, f, tau_r)) for f in frame.f
    )
    ok = True
    for i, e in enumerate(frame.e):
        for j, f in enumerate(frame.f):
            want = ONE if i == j else ZERO
            ok = ok and ratvec_pair_g(model, e, f).eq_const(want)
    for i, e in enumerate(frame.e):
        for j, e2 in enumerate(frame.e):
            ok = ok and ratvec_pair_g(model, e, e2).is_zero()
    for i, f in enumerate(frame.f):
        for j, f2 in enumerate(frame.f):
            ok = ok and ratvec_pair_g(model, f, f2).is_zero()
    out["gram"] = ok
    if frame.r is not None:
        r = frame.r
        out["r_norm"] = ratvec_pair_g(model, r, r).eq_const(Scalar(-1))
        out["r_orth"] = all(
            ratvec_pair_g(model, r, v).is_zero() for v in frame.e + frame.f
        )
        rchi = _gamma_ratvec(model, r, chi_r)
        rtau = _gamma_ratvec(model, r, tau_r)
        out["r_chi"] = all((a - b).is_zero() for a, b in zip(rchi, chi_r))
        out["r_tau"] = all((a - b).is_zero() for a, b in zip(rtau, tau_r))
        # f1.chi = -e2.tau, f2.chi = e1.tau
        f1chi = _gamma_ratvec(model, frame.f[0], chi_r)
        e2tau = _gamma_ratvec(model, frame.e[1], tau_r)
        out["f1_chi"] = all((a + b).is_zero() for a, b in zip(f1chi, e2tau))
        f2chi = _gamma_ratvec(model, frame.f[1], chi_r)
        e1tau = _gamma_ratvec(model, frame.e[0], tau_r)
        out["f2_chi"] = all((a - b).is_zero() for a, b in zip(f2chi, e1tau))
    # product normalizations
    prod = tau_r
    for e in reversed(frame.e):
        prod = _gamma_ratvec(model, e, prod)
    if k == 2:
        prod = [p * Scalar(mpq(1, 2)) for p in prod]
    out["e_product"] = all((a - b).is_zero() for a, b in zip(prod, chi_r))
    check = chi_r
    for f in reversed(frame.f):
        check = _gamma_ratvec(model, f, check)
    if k == 2:
        check = [p * Scalar(mpq(1, 2)) for p in check]
    out["f_product_constant"] = all(
        (a - b * frame.companion).is_zero() for a, b in zip(check, tau_r)
    )
    return out


# -- bracket relations of Prop 2.8 -----------------------------------------------------


@dataclass
class BracketReport:
    """Computed structure constants next to the paper's claimed values."""

    g_e1e2_r: Scalar | None
    class_e1e2_mod_D: Scalar | None  # coefficient of r in [e1,e2] mod D
    e1e2_f_components_vanish: bool
    ei_r_mod_D1: dict[str, Scalar | None]
    g_e1e2_eta_zero: bool
    pairing_r_constant: Scalar | None  # c in b(xi.chi, tau) = c g(xi, r)
    pairing_D_constant: Scalar | None  # c in b(xi.chi, eta.tau) = c g(xi, eta)
    paper_values: dict[str, str]

    def structural_ok(self) -> bool:
        return (
            self.g_e1e2_r is not None
            and not self.g_e1e2_r.is_zero()
            and self.class_e1e2_mod_D is not None
            and self.e1e2_f_components_vanish
            and all(v is not None for v in self.ei_r_mod_D1.values())
            and self.g_e1e2_eta_zero
            and self.pairing_r_constant is not None
            and self.pairing_D_constant is not None
        )


def bracket_relations_report(
    model: CliffordModel, base: Pairing, chi: PolyField
) -> BracketReport:
    """Prop 2.8 structure constants of the rank-2 distribution, computed exactly.

    The computed values are reported alongside the paper's claims (2 sqrt2;
    -sqrt2 r; +-(1/sqrt2) f_j) without asserting equality: the artifact's job
    is to settle the constants; only structural claims are hard assertions.
    """
    frame = adapted_frame_field(model, base, chi)
    tau = dirac_companion(model, chi)
    e1, e2 = frame.e
    f1, f2 = frame.f
    r = frame.r
    br = ratvec_bracket(e1, e2)
    # coordinates in the frame: g(w, f_j) = e_j-coeff, g(w, e_j) = f_j-coeff,
    # g(w, r) = -r-coeff
    g_wr = ratvec_pair_g(model, br, r)
    g_e1e2_r = g_wr.constant_value()
    coeff_r = (RatP(Poly.zero(chi.nvars)) - g_wr).constant_value()
    fcomps_vanish = ratvec_pair_g(model, br, e1).is_zero() and ratvec_pair_g(
        model, br, e2
    ).is_zero()
    g_eta_zero = True
    for eta in (e1, e2):
        val = ratvec_pair_g(model, br, eta)
        # g([e1,e2], eta) = 0 for eta in D requires pairing against f to read
        # e-components; the D-membership statement is g(., e_i) = 0 above.
    # g([e1,e2], eta) for eta in D: eta = e_i, computed via the metric directly
    for eta in (e1, e2):
        if not ratvec_pair_g(model, br, eta).is_zero():
            g_eta_zero = False
    ei_r: dict[str, Scalar | None] = {}
    for nm, ei in (("[e1,r]", e1), ("[e2,r]", e2)):
        w = ratvec_bracket(ei, r)
        # class mod D^1 = span(e1, e2, r): f_j coefficients are g(w, e_j)
        c1 = ratvec_pair_g(model, w, e1).constant_value()
        c2 = ratvec_pair_g(model, w, e2).constant_value()
        if c1 is None or c2 is None:
            ei_r[nm + " f1-coeff"] = None
            ei_r[nm + " f2-coeff"] = None
        else:
            ei_r[nm + " f1-coeff"] = c1
            ei_r[nm + " f2-coeff"] = c2
    # pairing identities with exact constants
    chi_r = [RatP.of(p) for p in chi.components]
    tau_r = [RatP.of(p) for p in tau.components]
    c_r: Scalar | None = None
    c_D: Scalar | None = None
    okr, okd = True, True
    n = model.dim
    for a in range(n):
        xi = tuple(
            RatP(Poly.const(chi.nvars, ONE if t == a else ZERO)) for t in range(n)
        )
        lhs = _rat_pairing(base, _gamma_ratvec(model, xi, chi_r), tau_r)
        rhs = ratvec_pair_g(model, xi, r)
        cand = _rat_ratio_const(lhs, rhs)
        if cand is not None and c_r is None:
            c_r = cand
        if cand is not None and c_r is not None and cand != c_r:
            okr = False
        for eta in (e1, e2):
            lhs2 = _rat_pairing(
                base, _gamma_ratvec(model, xi, chi_r), _gamma_ratvec(model, eta, tau_r)
            )
            rhs2 = ratvec_pair_g(model, xi, eta)
            cand2 = _rat_ratio_const(lhs2, rhs2)
            if cand2 is not None and c_D is None:
                c_D = cand2
            if cand2 is not None and c_D is not None and cand2 != c_D:
                okd = False
    if not (okr and okd):
        c_r = c_r if okr else None
        c_D = c_D if okd else None
    return BracketReport(
        g_e1e2_r=g_e1e2_r,
        class_e1e2_mod_D=coeff_r,
        e1e2_f_components_vanish=fcomps_vanish,
        ei_r_mod_D1=ei_r,
        g_e1e2_eta_zero=g_eta_zero,
        pairing_r_constant=c_r,
        pairing_D_constant=c_D,
        paper_values={
            "g([e1,e2],r)": "2*r2",
            "[e1,e2] mod D": "-r2 * r",
            "[e1,r] mod D1": "(1/r2) f2",
            "[e2,r] mod D1": "-(1/r2) f1",
            "b(xi.chi,tau) vs g(xi,r)": "-1",
            "b(xi.chi,eta.tau) vs g(xi,eta)": "-2",
        },
    )


def _rat_pairing(base: Pairing, u: list[RatP], v: list[RatP]) -> RatP:
    acc = RatP(Poly.zero(u[0].num.n))
    for i, x in enumerate(u):
        if x.is_zero():
            continue
        for j, y in enumerate(v):
            c = base.gram[i, j]
            if not c.is_zero() and not y.is_zero():
                acc = acc + (x * y) * c
    return acc


def _rat_ratio_const(lhs: RatP, rhs: RatP) -> Scalar | None:
    """c with lhs = c rhs identically, when rhs is not identically zero."""
    if rhs.is_zero():
        return None if not lhs.is_zero() else None
    ratio = lhs / rhs
    return ratio.constant_value()
