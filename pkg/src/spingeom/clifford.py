"""Clifford algebras and spin representations for the four split-ish signatures.

Models for (2,3), (3,3), (3,4), (4,4) are built by hyperbolic doubling: two
isotropic directions e+, e- with h(e+,e-) = 1 are adjoined and the spinor
space doubles, a vector rho*e+ + xi + sigma*e- acting on a stacked spinor
(tau, chi) by

    (rho, xi, sigma) . (tau, chi) = (-xi.tau - sqrt2 rho chi, xi.chi + sqrt2 sigma tau).

The convention throughout is gamma(v) gamma(w) + gamma(w) gamma(v) = -2 h(v,w),
i.e. v.v.s = -h(v,v) s.  Base cases of the recursion: the even chain starts at
a one-dimensional trivial module for (0,0); the odd chain starts at (0,1) with
the single gamma equal to +1.

so(p,q) is realized on wedge coordinates: a bivector u^v acts on vectors by
w -> h(u,w) v - h(v,w) u and on spinors by c [gamma(u), gamma(v)], where the
constant c is solved from the derivation property rather than hard-coded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from .linalg import ExactMatrix, Vector, basis_vec, vec_is_zero, zero_vec
from .scalars import ONE, SQRT2, ZERO, Scalar


@dataclass(frozen=True)
class SignatureSpec:
    """Signature data: counts, ordered basis labels and the exact Gram matrix."""

    p: int
    q: int
    labels: tuple[str, ...]
    gram: ExactMatrix

    @property
    def dim(self) -> int:
        return self.p + self.q

    def h(self, v, w) -> Scalar:
        return _bilinear(self.gram, v, w)


def _bilinear(G: ExactMatrix, v, w) -> Scalar:
    out = ZERO
    for i, vi in enumerate(v):
        if vi.is_zero():
            continue
        for j, wj in enumerate(w):
            if not wj.is_zero():
                out = out + vi * G[i, j] * wj
    return out


class CliffordModel:
    """Gamma matrices, half-spin data and the so(p,q) action for one signature."""

    def __init__(
        self,
        spec: SignatureSpec,
        gammas: tuple[ExactMatrix, ...],
        pos: tuple[int, ...] | None,
        neg: tuple[int, ...] | None,
    ) -> None:
        self.spec = spec
        self.gammas = gammas
        self.spinor_dim = gammas[0].nrows if gammas else 1
        self.pos_indices = pos
        self.neg_indices = neg

    # -- basic structure ---------------------------------------------------

    @property
    def dim(self) -> int:
        return self.spec.dim

    @property
    def gram(self) -> ExactMatrix:
        return self.spec.gram

    def h(self, v, w) -> Scalar:
        return self.spec.h(v, w)

    @cached_property
    def gram_inverse(self) -> ExactMatrix:
        n = self.dim
        from .linalg import solve

        cols = [solve(self.gram, basis_vec(n, i)) for i in range(n)]
        return ExactMatrix.from_cols(cols)

    @cached_property
    def raised_gammas(self) -> tuple[ExactMatrix, ...]:
        """gamma^p = h^{pq} gamma_q, so that gamma^p gamma_p = -dim * Id."""
        hinv = self.gram_inverse
        out = []
        for p in range(self.dim):
            m = ExactMatrix.zeros(self.spinor_dim, self.spinor_dim)
            for q in range(self.dim):
                c = hinv[p, q]
                if not c.is_zero():
                    m = m + self.gammas[q].scale(c)
            out.append(m)
        return tuple(out)

    def gamma(self, v) -> ExactMatrix:
        """Clifford multiplication matrix of the exact vector v."""
        if len(v) != self.dim:
            raise ValueError(f"vector length {len(v)} != dim {self.dim}")
        m = ExactMatrix.zeros(self.spinor_dim, self.spinor_dim)
        for i, c in enumerate(v):
            if not c.is_zero():
                m = m + self.gammas[i].scale(c)
        return m

    def vector_action(self, v, s: Vector) -> Vector:
        if len(s) != self.spinor_dim:
            raise ValueError(
                f"spinor length {len(s)} != spinor dim {self.spinor_dim}"
            )
        return self.gamma(v).apply(s)

    def half_indices(self, sign: str) -> tuple[int, ...]:
        if self.pos_indices is None:
            raise ValueError("odd-dimensional model has no half-spin split")
        return self.pos_indices if sign == "+" else self.neg_indices

    def half_basis(self, sign: str) -> list[Vector]:
        return [basis_vec(self.spinor_dim, i) for i in self.half_indices(sign)]

    def spinor_parity(self, s: Vector) -> str | None:
        """"+", "-" for pure half-spinors, None for mixed/zero."""
        if self.pos_indices is None:
            return None
        on_pos = any(not s[i].is_zero() for i in self.pos_indices)
        on_neg = any(not s[i].is_zero() for i in self.neg_indices)
        if on_pos and not on_neg:
            return "+"
        if on_neg and not on_pos:
            return "-"
        return None

    # -- bivectors and the Lie algebra action --------------------------------

    @cached_property
    def bivector_pairs(self) -> tuple[tuple[int, int], ...]:
        n = self.dim
        return tuple((i, j) for i in range(n) for j in range(i + 1, n))

    @property
    def so_dim(self) -> int:
        return len(self.bivector_pairs)

    def wedge(self, u, v) -> Vector:
        """Wedge coordinates of u^v over the i<j basis."""
        coeffs = []
        for i, j in self.bivector_pairs:
            coeffs.append(u[i] * v[j] - u[j] * v[i])
        return tuple(coeffs)

    def insert(self, u, biv: Vector) -> Vector:
        """Metric insertion i_u(v^w) = h(u,w) v - h(u,v) w (last-slot contraction).

        This is the convention under which the explicitly listed graded
        generators of the spinor stabilizers are exact members.
        """
        out = list(zero_vec(self.dim))
        for (i, j), c in zip(self.bivector_pairs, biv):
            if c.is_zero():
                continue
            hui = self.h(u, basis_vec(self.dim, i))
            huj = self.h(u, basis_vec(self.dim, j))
            if not huj.is_zero():
                out[i] = out[i] + c * huj
            if not hui.is_zero():
                out[j] = out[j] - c * hui
        return tuple(out)

    @cached_property
    def _vec_mats(self) -> tuple[ExactMatrix, ...]:
        n = self.dim
        mats = []
        for i, j in self.bivector_pairs:
            rows = [[ZERO] * n for _ in range(n)]
            for k in range(n):
                hik = self.gram[i, k]
                hjk = self.gram[j, k]
                if not hik.is_zero():
                    rows[j][k] = rows[j][k] + hik
                if not hjk.is_zero():
                    rows[i][k] = rows[i][k] - hjk
            mats.append(ExactMatrix(rows))
        return tuple(mats)

    @cached_property
    def _spin_mats(self) -> tuple[ExactMatrix, ...]:
        c = self.derivation_constant
        mats = []
        for i, j in self.bivector_pairs:
            gi, gj = self.gammas[i], self.gammas[j]
            mats.append((gi @ gj - gj @ gi).scale(c))
        return tuple(mats)

    @cached_property
    def derivation_constant(self) -> Scalar:
        """Unique c with [c [gamma_i, gamma_j], gamma_w] = gamma(A_ij w) for all i<j, w.

        Solved on one non-degenerate triple, then verified on all of them.
        """
        cand: Scalar | None = None
        for idx, (i, j) in enumerate(self.bivector_pairs):
            K = self.gammas[i] @ self.gammas[j] - self.gammas[j] @ self.gammas[i]
            for w in range(self.dim):
                comm = K @ self.gammas[w] - self.gammas[w] @ K
                target = self.gamma(self._vec_mats[idx].col(w))
                entry = next(
                    (
                        (r, s)
                        for r in range(self.spinor_dim)
                        for s in range(self.spinor_dim)
                        if not comm[r, s].is_zero()
                    ),
                    None,
                )
                if entry is None:
                    if not target.is_zero():
                        raise ValueError("derivation property unsolvable")
                    continue
                c = target[entry] / comm[entry]
                if cand is None:
                    cand = c
                if (comm.scale(cand) - target).is_zero():
                    continue
                raise ValueError("derivation property fails to hold globally")
        if cand is None:
            raise ValueError("no non-degenerate triple found")
        return cand

    def so_action(self, biv: Vector) -> tuple[ExactMatrix, ExactMatrix]:
        """(vector matrix, spinor matrix) of a bivector in wedge coordinates."""
        vec = ExactMatrix.zeros(self.dim, self.dim)
        spin = ExactMatrix.zeros(self.spinor_dim, self.spinor_dim)
        for k, c in enumerate(biv):
            if c.is_zero():
                continue
            vec = vec + self._vec_mats[k].scale(c)
            spin = spin + self._spin_mats[k].scale(c)
        return vec, spin

    def spin_apply(self, biv: Vector, s: Vector) -> Vector:
        out = zero_vec(self.spinor_dim)
        from .linalg import vec_add, vec_scale

        for k, c in enumerate(biv):
            if not c.is_zero():
                out = vec_add(out, vec_scale(c, self._spin_mats[k].apply(s)))
        return out

    def bivector_bracket(self, x: Vector, y: Vector) -> Vector:
        """Lie bracket of so(p,q) in wedge coordinates.

        [a^b, c^d] = -h(b,c) a^d + h(a,c) b^d + h(b,d) a^c - h(a,d) b^c,
        which matches the commutator of the vector matrices (tested).
        """
        acc: dict[tuple[int, int], Scalar] = {}

        def add(i: int, j: int, coef: Scalar) -> None:
            if i == j or coef.is_zero():
                return
            if i > j:
                i, j = j, i
                coef = -coef
            acc[(i, j)] = acc.get((i, j), ZERO) + coef

        G = self.gram
        for (a, b), cx in zip(self.bivector_pairs, x):
            if cx.is_zero():
                continue
            for (c, d), cy in zip(self.bivector_pairs, y):
                if cy.is_zero():
                    continue
                f = cx * cy
                add(a, d, -G[b, c] * f)
                add(b, d, G[a, c] * f)
                add(a, c, G[b, d] * f)
                add(b, c, -G[a, d] * f)
        return tuple(acc.get(pair, ZERO) for pair in self.bivector_pairs)

    # -- serialization --------------------------------------------------------

    def dump(self) -> str:
        """Deterministic JSON dump (sorted keys, canonical Scalar strings)."""
        payload = {
            "basis": list(self.spec.labels),
            "gammas": [
                [[str(x) for x in row] for row in g.rows] for g in self.gammas
            ],
            "gram": [[str(x) for x in row] for row in self.gram.rows],
            "signature": [self.spec.p, self.spec.q],
            "spinor_dim": self.spinor_dim,
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))


# -- construction ---------------------------------------------------------


def _base_even() -> CliffordModel:
    spec = SignatureSpec(0, 0, (), ExactMatrix([]))
    return CliffordModel(spec, (), (0,), ())


def _base_odd() -> CliffordModel:
    spec = SignatureSpec(0, 1, ("r",), ExactMatrix([[Scalar(-1)]]))
    return CliffordModel(spec, (ExactMatrix([[ONE]]),), None, None)


def _double(m: CliffordModel, plus: str, minus: str) -> CliffordModel:
    """Adjoin e+, e- (basis order: e+, inherited, e-) and double the spinors."""
    n, d = m.dim, m.spinor_dim
    G = ExactMatrix.zeros(n + 2, n + 2).rows
    G = [list(r) for r in G]
    G[0][n + 1] = ONE
    G[n + 1][0] = ONE
    for i in range(n):
        for j in range(n):
            G[1 + i][1 + j] = m.gram[i, j]
    spec = SignatureSpec(
        m.spec.p + 1, m.spec.q + 1, (plus,) + m.spec.labels + (minus,), ExactMatrix(G)
    )

    def block(tl, tr, bl, br) -> ExactMatrix:
        rows = []
        for i in range(d):
            rows.append(list(tl.rows[i]) + list(tr.rows[i]))
        for i in range(d):
            rows.append(list(bl.rows[i]) + list(br.rows[i]))
        return ExactMatrix(rows)

    zero = ExactMatrix.zeros(d, d)
    ident = ExactMatrix.identity(d)
    gam_plus = block(zero, ident.scale(-SQRT2), zero, zero)
    gam_minus = block(zero, zero, ident.scale(SQRT2), zero)
    mids = [block(g.scale(Scalar(-1)), zero, zero, g) for g in m.gammas]
    gammas = (gam_plus, *mids, gam_minus)
    if m.pos_indices is None:
        pos = neg = None
    else:
        pos = tuple(m.pos_indices) + tuple(d + i for i in m.neg_indices)
        neg = tuple(m.neg_indices) + tuple(d + i for i in m.pos_indices)
    return CliffordModel(spec, gammas, pos, neg)


def _permute_basis(m: CliffordModel, order: list[int], labels: tuple[str, ...]) -> CliffordModel:
    G = ExactMatrix(
        [[m.gram[order[i], order[j]] for j in range(m.dim)] for i in range(m.dim)]
    )
    spec = SignatureSpec(m.spec.p, m.spec.q, labels, G)
    return CliffordModel(
        spec, tuple(m.gammas[k] for k in order), m.pos_indices, m.neg_indices
    )


_SUPPORTED = {(0, 0), (1, 1), (2, 2), (3, 3), (4, 4), (0, 1), (1, 2), (2, 3), (3, 4)}
_CACHE: dict[tuple[int, int], CliffordModel] = {}


def build_clifford(p: int, q: int) -> CliffordModel:
    """Build (and cache) the model for one of the supported signatures."""
    key = (p, q)
    if key not in _SUPPORTED:
        raise ValueError(f"unsupported signature ({p},{q})")
    if key in _CACHE:
        return _CACHE[key]
    if key == (0, 0):
        model = _base_even()
    elif key == (0, 1):
        model = _base_odd()
    elif key == (2, 3):
        raw = _double(_double(_base_odd(), "a+", "a-"), "b+", "b-")
        model = _permute_basis(raw, [0, 1, 2, 4, 3], ("e1", "e2", "r", "f1", "f2"))
    elif key == (3, 3):
        raw = _double(
            _double(_double(_base_even(), "a+", "a-"), "b+", "b-"), "c+", "c-"
        )
        model = _permute_basis(
            raw, [0, 1, 2, 5, 4, 3], ("e1", "e2", "e3", "f1", "f2", "f3")
        )
    elif key == (3, 4):
        model = _double(build_clifford(2, 3), "ep", "em")
    elif key == (4, 4):
        model = _double(build_clifford(3, 3), "ep", "em")
    else:
        model = _double(build_clifford(p - 1, q - 1), f"u{p}+", f"u{p}-")
    _CACHE[key] = model
    return model


def embed_vector(m_small: CliffordModel, v: Vector) -> Vector:
    """Include a vector of the doubling ancestor into the doubled model."""
    return (ZERO,) + tuple(v) + (ZERO,)


def stack_spinor(tau: Vector, chi: Vector) -> Vector:
    """(tau, chi) stacked into the doubled spinor space."""
    return tuple(tau) + tuple(chi)


def split_spinor(m_small: CliffordModel, s: Vector) -> tuple[Vector, Vector]:
    d = m_small.spinor_dim
    return tuple(s[:d]), tuple(s[d:])


def label_vector(m: CliffordModel, name: str) -> Vector:
    return basis_vec(m.dim, m.spec.labels.index(name))
