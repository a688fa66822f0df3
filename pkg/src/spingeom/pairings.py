"""Invariant spinor pairings, Clifford kernels, genericity, adapted frames.

The base pairings for (2,3) and (3,3) are not hard-coded: the linear system
{skew + move-a-vector-across compatibility b(xi.s, t) = b(s, xi.t)} is solved
and must have a one-dimensional solution space; the solution is normalized by
b(s_first, s_last) = 1.  The doubled-signature forms are assembled from the
block formula B((tau,chi),(tau',chi')) = b(chi,tau') + b(chi',tau) and are
symmetric of split signature.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from gmpy2 import mpq

from .clifford import CliffordModel, build_clifford, split_spinor, stack_spinor
from .linalg import (
    ExactMatrix,
    Vector,
    basis_vec,
    kernel,
    solve,
    vec_is_zero,
    vec_scale,
)
from .scalars import HALF, ONE, ZERO, Scalar


class ConventionError(RuntimeError):
    """A structural expectation failed; indicates a convention bug, not bad input."""


@dataclass(frozen=True)
class Pairing:
    """A spinor bilinear form with its symmetry type and weight label."""

    gram: ExactMatrix
    symmetry: str  # "skew" or "symmetric"
    weight: mpq

    def value(self, s: Vector, t: Vector) -> Scalar:
        out = ZERO
        for i, si in enumerate(s):
            if si.is_zero():
                continue
            row = self.gram.rows[i]
            for j, tj in enumerate(t):
                if not tj.is_zero():
                    out = out + si * row[j] * tj
        return out

    def dump(self) -> str:
        payload = {
            "gram": [[str(x) for x in row] for row in self.gram.rows],
            "symmetry": self.symmetry,
            "weight": str(self.weight),
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


_PAIRING_CACHE: dict[tuple[int, int], Pairing] = {}


def solve_invariant_pairing(model: CliffordModel) -> Pairing:
    """The unique-up-to-scale skew compatible form on the spinor module.

    Unknowns are the d(d-1)/2 entries of a skew form; the constraints are
    b(gamma_k s, t) - b(s, gamma_k t) = 0 for every basis vector and spinor
    pair.  Hard failure unless the solution space is exactly 1-dimensional.
    """
    key = (model.spec.p, model.spec.q)
    if key in _PAIRING_CACHE:
        return _PAIRING_CACHE[key]
    d = model.spinor_dim
    pairs = [(i, j) for i in range(d) for j in range(i + 1, d)]
    index = {pq: k for k, pq in enumerate(pairs)}

    def b_entry(coeffs_row, u: int, v: int, c: Scalar) -> None:
        # accumulate c * b(e_u, e_v) onto the row of unknown coefficients
        if u == v:
            return
        if u < v:
            coeffs_row[index[(u, v)]] = coeffs_row[index[(u, v)]] + c
        else:
            coeffs_row[index[(v, u)]] = coeffs_row[index[(v, u)]] - c

    rows = []
    for g in model.gammas:
        for alpha in range(d):
            col = g.col(alpha)
            for beta in range(alpha, d):
                colb = g.col(beta)
                row = [ZERO] * len(pairs)
                for s in range(d):
                    if not col[s].is_zero():
                        b_entry(row, s, beta, col[s])  # b(gamma alpha, beta)
                    if not colb[s].is_zero():
                        b_entry(row, alpha, s, -colb[s])  # -b(alpha, gamma beta)
                if any(not x.is_zero() for x in row):
                    rows.append(tuple(row))
    sol = kernel(ExactMatrix(rows))
    if len(sol) != 1:
        raise ConventionError(
            f"invariant pairing solution space has dimension {len(sol)}, expected 1"
        )
    coeffs = sol[0]
    norm = coeffs[index[(0, d - 1)]]
    if norm.is_zero():
        raise ConventionError("cannot normalize: b(s_0, s_last) = 0")
    inv = norm.inverse()
    G = [[ZERO] * d for _ in range(d)]
    for (i, j), k in index.items():
        G[i][j] = coeffs[k] * inv
        G[j][i] = -coeffs[k] * inv
    pairing = Pairing(ExactMatrix(G), "skew", mpq(-1))
    _PAIRING_CACHE[key] = pairing
    return pairing


def build_B(model_big: CliffordModel, base: Pairing) -> Pairing:
    """Clifford-invariant symmetric form on the doubled spinor space.

    B((tau,chi),(tau',chi')) = b(chi,tau') + b(chi',tau).  Defined on the full
    doubled module; for even signatures its restrictions to the two half-spin
    subspaces are the split-signature forms.
    """
    d2 = model_big.spinor_dim
    d = d2 // 2
    b = base.gram
    G = [[ZERO] * d2 for _ in range(d2)]
    for i in range(d):  # tau slot
        for j in range(d):  # chi slot
            G[i][d + j] = b[j, i]
            G[d + j][i] = b[j, i]
    return Pairing(ExactMatrix(G), "symmetric", mpq(0))


def restrict_gram(pairing: Pairing, indices: tuple[int, ...]) -> ExactMatrix:
    return ExactMatrix(
        [[pairing.gram[i, j] for j in indices] for i in indices]
    )


def clifford_kernel(model: CliffordModel, chi: Vector) -> list[Vector]:
    """Exact basis of {v : v . chi = 0}."""
    cols = [model.gammas[k].apply(chi) for k in range(model.dim)]
    return kernel(ExactMatrix.from_cols(cols))


def is_generic(pairing: Pairing, chi: Vector, tau: Vector) -> bool:
    return not pairing.value(chi, tau).is_zero()


def distinguished_pair(
    model: CliffordModel, pairing: Pairing, chi_parity: str | None = None
) -> tuple[Vector, Vector]:
    """A deterministic spinor pair (chi, tau) with b(chi, tau) = 1.

    For even signatures chi is taken in the requested half-spin subspace and
    tau in the opposite one.
    """
    d = model.spinor_dim
    if chi_parity is None or model.pos_indices is None:
        chi = basis_vec(d, 0)
        tau = basis_vec(d, d - 1)
    else:
        chi_idx = model.half_indices(chi_parity)
        tau_idx = model.half_indices("-" if chi_parity == "+" else "+")
        chi = basis_vec(d, chi_idx[0])
        tau = None
        for j in tau_idx:
            cand = basis_vec(d, j)
            if not pairing.value(chi, cand).is_zero():
                tau = cand
                break
        if tau is None:
            raise ConventionError("no dual basis spinor pairs with chi")
    c = pairing.value(chi, tau)
    if c.is_zero():
        raise ConventionError("distinguished pair is b-degenerate")
    return chi, vec_scale(c.inverse(), tau)


def distinguished_doubled_spinor(
    model_small: CliffordModel, pairing: Pairing, chi_parity: str | None = None
) -> tuple[Vector, Vector, Vector]:
    """(X, chi, tau): the non-null stacked spinor X = (tau, chi) with b(chi,tau)=1."""
    chi, tau = distinguished_pair(model_small, pairing, chi_parity)
    return stack_spinor(tau, chi), chi, tau


# -- adapted frames (Prop 2.6 / Prop 2.13, algebraic version) -----------------


@dataclass(frozen=True)
class AdaptedBasis:
    """Pointwise adapted basis: kernels of chi and tau plus r in the odd case.

    `companion` is the exact constant mu in f-product(chi) = mu * tau once the
    e-product is normalized to chi.  The product lambda*mu is an invariant of
    the Clifford convention (it equals -1 for (2,3) and 8 for (3,3) under
    gamma(v)gamma(w) + gamma(w)gamma(v) = -2h(v,w)), so mu cannot be scaled
    to 1; it is computed, frozen as a golden value and reported.
    """

    e: tuple[Vector, ...]
    f: tuple[Vector, ...]
    r: Vector | None
    companion: Scalar


def adapted_basis(
    model: CliffordModel, pairing: Pairing, chi: Vector, tau: Vector
) -> AdaptedBasis:
    """Build the adapted basis from a generic pair with b(chi, tau) = 1.

    e_i span ker(gamma chi), f_j span ker(gamma tau), g(e_i, f_j) = delta_ij;
    the rescaling freedom alpha e_1, (1/alpha) f_1 is used to arrange
    (1/2) e1.e2.tau = chi (resp. e1.e2.e3.tau = chi) exactly.  The companion
    product (1/2) f1.f2.chi (resp. f1.f2.f3.chi) is then automatically a fixed
    multiple of tau; the multiple is computed and stored, not assumed.
    """
    if pairing.value(chi, tau) != ONE:
        raise ConventionError("adapted basis requires b(chi, tau) = 1")
    ker_chi = clifford_kernel(model, chi)
    ker_tau = clifford_kernel(model, tau)
    k = len(ker_chi)
    if len(ker_tau) != k:
        raise ConventionError("kernel dimensions differ")
    gram = ExactMatrix(
        [[model.h(e, f) for f in ker_tau] for e in ker_chi]
    )
    # recombine ker_chi by rows of gram^{-1} so that g(e_i, f_j) = delta_ij
    inv_rows = [solve(gram.transpose(), basis_vec(k, i)) for i in range(k)]
    es = []
    for i in range(k):
        v = (ZERO,) * model.dim
        for s in range(k):
            v = tuple(a + inv_rows[i][s] * b for a, b in zip(v, ker_chi[s]))
        es.append(v)
    fs = list(ker_tau)
    for i in range(k):
        for j in range(k):
            want = ONE if i == j else ZERO
            if model.h(es[i], fs[j]) != want:
                raise ConventionError("bi-orthonormalization failed")

    prod = tau
    for e in reversed(es):
        prod = model.vector_action(e, prod)
    if k == 2:
        prod = vec_scale(HALF, prod)
    lam = _proportionality(prod, chi)
    if lam is None or lam.is_zero():
        raise ConventionError("e-product is not a nonzero multiple of chi")
    es[0] = vec_scale(lam.inverse(), es[0])
    fs[0] = vec_scale(lam, fs[0])

    check = chi
    for f in reversed(fs):
        check = model.vector_action(f, check)
    if k == 2:
        check = vec_scale(HALF, check)
    mu = _proportionality(check, tau)
    if mu is None or mu.is_zero():
        raise ConventionError("f-product of chi is not a nonzero multiple of tau")

    r = None
    if k == 2:
        r_cov = tuple(
            -pairing.value(model.gammas[a].apply(chi), tau) for a in range(model.dim)
        )
        r = solve(model.gram, r_cov)
        if model.vector_action(r, chi) != chi or model.vector_action(r, tau) != tau:
            raise ConventionError("r does not satisfy r.chi = chi, r.tau = tau")
    return AdaptedBasis(tuple(es), tuple(fs), r, mu)


def _proportionality(u: Vector, v: Vector) -> Scalar | None:
    """c with u = c v, or None (v must be nonzero)."""
    idx = next((i for i, x in enumerate(v) if not x.is_zero()), None)
    if idx is None:
        raise ValueError("proportionality against zero vector")
    c = u[idx] / v[idx]
    if all((x - c * y).is_zero() for x, y in zip(u, v)):
        return c
    return None


def base_pairing(p: int, q: int) -> Pairing:
    """The pairing used for signature (p, q): solved for (2,3)/(3,3), doubled above."""
    if (p, q) in ((2, 3), (3, 3)):
        return solve_invariant_pairing(build_clifford(p, q))
    if (p, q) == (3, 4):
        return build_B(build_clifford(3, 4), base_pairing(2, 3))
    if (p, q) == (4, 4):
        return build_B(build_clifford(4, 4), base_pairing(3, 3))
    raise ValueError(f"no canonical pairing for signature ({p},{q})")
