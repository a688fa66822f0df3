"""Lie algebra cohomology differential, Kostant codifferential, normality checks.

A GradedLieData packages a parabolic grading of a (sub)algebra realized inside
one of the Clifford models: exact structure constants in its own basis, the
trace-form duality between the negative part and the nilradical, and the
bracket tables the two differentials need.  The codifferential is implemented
straight from its formula on decomposables,

    d*(X ^ Y (x) Z) = X (x) [Y,Z] - Y (x) [X,Z] - [X,Y] (x) Z,

extended in the standard homology pattern one degree up; the cohomology
differential of g_- with values in g is the usual Chevalley-Eilenberg one.
Harmonic 2-cochains are ker d ∩ ker d*, cross-checked against the kernel of
the Laplacian d d* + d* d.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .clifford import CliffordModel, build_clifford
from .linalg import (
    ExactMatrix,
    Vector,
    basis_vec,
    kernel,
    solve,
    sparse_kernel,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vec,
)
from .pairings import (
    ConventionError,
    adapted_basis,
    distinguished_doubled_spinor,
    solve_invariant_pairing,
)
from .scalars import ONE, ZERO, Scalar
from .stabilizers import stabilizer, verify_graded_basis

SparseVec = dict[int, Scalar]


class GradedLieData:
    """A |k|-graded Lie algebra with exact tables for d and d*."""

    def __init__(
        self,
        name: str,
        model: CliffordModel,
        basis: list[Vector],
        degrees: list[int],
    ) -> None:
        if len(basis) != len(degrees):
            raise ValueError("basis/degree length mismatch")
        self.name = name
        self.model = model
        order = sorted(range(len(basis)), key=lambda i: (degrees[i], i))
        self.basis = [basis[i] for i in order]
        self.degrees = [degrees[i] for i in order]
        self.dim = len(self.basis)
        self._coords_cache: dict[Vector, Vector] = {}
        self._prepare_coordinates()
        self._prepare_structure_constants()
        self._prepare_duality()

    # -- coordinates --------------------------------------------------------

    def _prepare_coordinates(self) -> None:
        rows = [list(b) for b in self.basis]
        red, pivots = _rref_with_pivots(rows)
        if len(pivots) != self.dim:
            raise ValueError("basis is linearly dependent")
        self._pivots = pivots
        sq = ExactMatrix([[b[c] for c in pivots] for b in self.basis])
        cols = [solve(sq.transpose(), basis_vec(self.dim, i)) for i in range(self.dim)]
        self._solver = ExactMatrix.from_cols(cols)  # (sq^T)^{-1}

    def coords(self, vec: Vector) -> Vector:
        """Own-basis coordinates of an ambient wedge vector (must lie in span)."""
        restricted = tuple(vec[c] for c in self._pivots)
        co = self._solver.apply(restricted)
        check = zero_vec(self.model.so_dim)
        for c, b in zip(co, self.basis):
            if not c.is_zero():
                check = vec_add(check, vec_scale(c, b))
        if check != tuple(vec):
            raise ValueError("vector is not in the algebra")
        return co

    def element(self, co: Vector) -> Vector:
        out = zero_vec(self.model.so_dim)
        for c, b in zip(co, self.basis):
            if not c.is_zero():
                out = vec_add(out, vec_scale(c, b))
        return out

    # -- structure ----------------------------------------------------------

    def _prepare_structure_constants(self) -> None:
        n = self.dim
        table: list[list[SparseVec]] = [[{} for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                br = self.model.bivector_bracket(self.basis[i], self.basis[j])
                co = self.coords(br)
                entry = {k: c for k, c in enumerate(co) if not c.is_zero()}
                table[i][j] = entry
                table[j][i] = {k: -c for k, c in entry.items()}
        self.struct = table

    def bracket_co(self, x: SparseVec, y: SparseVec) -> SparseVec:
        out: SparseVec = {}
        for i, ci in x.items():
            row = self.struct[i]
            for j, cj in y.items():
                f = ci * cj
                for k, c in row[j].items():
                    acc = out.get(k, ZERO) + f * c
                    if acc.is_zero():
                        out.pop(k, None)
                    else:
                        out[k] = acc
        return out

    def jacobi_ok(self) -> bool:
        n = self.dim
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    total: SparseVec = {}
                    for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
                        term = self.bracket_co({a: ONE}, self.struct[b][c])
                        for m, v in term.items():
                            acc = total.get(m, ZERO) + v
                            if acc.is_zero():
                                total.pop(m, None)
                            else:
                                total[m] = acc
                    if total:
                        return False
        return True

    def indices_of_degree(self, d: int) -> list[int]:
        return [i for i, dd in enumerate(self.degrees) if dd == d]

    @property
    def neg_indices(self) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d < 0]

    @property
    def pos_indices(self) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d > 0]

    def generated_by_gm1(self) -> bool:
        """g_- is generated by g_{-1} under brackets."""
        from .linalg import span_basis, span_rank

        gm1 = [{i: ONE} for i in self.indices_of_degree(-1)]

        def densify(x: SparseVec) -> Vector:
            return tuple(x.get(i, ZERO) for i in range(self.dim))

        collected = [densify(x) for x in gm1]
        frontier = list(gm1)
        while frontier:
            nxt = []
            before = span_rank(collected)
            for x in frontier:
                for y in gm1:
                    br = self.bracket_co(x, y)
                    if br:
                        nxt.append(br)
                        collected.append(densify(br))
            if span_rank(collected) == before:
                break
            frontier = nxt
        return span_rank(collected) == len(self.neg_indices)

    # -- duality g_- <-> p_+ via the defining-representation trace form -------

    def _prepare_duality(self) -> None:
        vec_mats = {}
        for i in (self.neg_indices + self.pos_indices):
            vec_mats[i] = self.model.so_action(self.basis[i])[0]
        neg, pos = self.neg_indices, self.pos_indices
        if len(neg) != len(pos):
            raise ConventionError("nilradical and its opposite have different dims")
        T = ExactMatrix(
            [
                [(vec_mats[p] @ vec_mats[w]).trace() for p in pos]
                for w in neg
            ]
        )
        # Z_alpha = sum_k c_k basis[pos[k]] with tr(Z_alpha W_beta) = delta
        cols = [solve(T, basis_vec(len(neg), a)) for a in range(len(neg))]
        self.w_indices = neg
        self.z_coords = [
            {pos[k]: c for k, c in enumerate(col) if not c.is_zero()}
            for col in cols
        ]
        self.w_degrees = [self.degrees[i] for i in neg]
        # bracket tables
        nw = len(neg)
        self.ww: list[list[SparseVec]] = [[{} for _ in range(nw)] for _ in range(nw)]
        for a in range(nw):
            for b in range(nw):
                if a == b:
                    continue
                full = self.struct[neg[a]][neg[b]]
                if any(k not in neg for k in full):
                    raise ConventionError("g_- is not bracket-closed")
                self.ww[a][b] = {neg.index(k): c for k, c in full.items()}
        self.zz: list[list[SparseVec]] = [[{} for _ in range(nw)] for _ in range(nw)]
        for a in range(nw):
            for b in range(nw):
                if a == b:
                    continue
                full = self.bracket_co(self.z_coords[a], self.z_coords[b])
                # p_+ is bracket-closed; re-express in the Z basis
                self.zz[a][b] = self._pplus_to_z(full)
        self.w_on_g: list[list[SparseVec]] = [
            [self.struct[neg[a]][v] for v in range(self.dim)] for a in range(nw)
        ]
        self.z_on_g: list[list[SparseVec]] = [
            [self.bracket_co(self.z_coords[a], {v: ONE}) for v in range(self.dim)]
            for a in range(nw)
        ]

    def _pplus_to_z(self, co: SparseVec) -> SparseVec:
        if any(k not in self.pos_indices for k in co):
            raise ConventionError("element is not in p_+")
        pos = self.pos_indices
        M = ExactMatrix(
            [
                [self.z_coords[a].get(p, ZERO) for a in range(len(pos))]
                for p in pos
            ]
        )
        rhs = tuple(co.get(p, ZERO) for p in pos)
        sol = solve(M, rhs)
        return {a: c for a, c in enumerate(sol) if not c.is_zero()}


def _rref_with_pivots(rows):
    from .linalg import rref

    return rref(rows)


# -- cochains -----------------------------------------------------------------


@dataclass(frozen=True)
class Cochain:
    """Exact multilinear alternating form on g/p with values in g.

    data maps (sorted W-index combo, value-basis index) -> Scalar.
    """

    data_dict: tuple  # canonical tuple of ((combo, v), Scalar) in sorted order
    degree: int
    owner: GradedLieData

    @staticmethod
    def make(owner: GradedLieData, degree: int, entries: dict) -> Cochain:
        clean = {k: v for k, v in entries.items() if not v.is_zero()}
        return Cochain(tuple(sorted(clean.items())), degree, owner)

    @property
    def entries(self) -> dict:
        return dict(self.data_dict)

    def is_zero(self) -> bool:
        return not self.data_dict

    def homogeneity_components(self) -> dict[int, Cochain]:
        out: dict[int, dict] = {}
        for (combo, v), c in self.data_dict:
            hom = sum(-self.owner.w_degrees[a] for a in combo) + self.owner.degrees[v]
            out.setdefault(hom, {})[(combo, v)] = c
        return {
            h: Cochain.make(self.owner, self.degree, d) for h, d in sorted(out.items())
        }

    def add(self, other: Cochain) -> Cochain:
        acc = self.entries
        for k, v in other.data_dict:
            s = acc.get(k, ZERO) + v
            if s.is_zero():
                acc.pop(k, None)
            else:
                acc[k] = s
        return Cochain.make(self.owner, self.degree, acc)


def cochain_basis(owner: GradedLieData, degree: int) -> list[tuple[tuple, int]]:
    nw = len(owner.w_indices)
    return [
        (combo, v)
        for combo in combinations(range(nw), degree)
        for v in range(owner.dim)
    ]


def codifferential(owner: GradedLieData, c: Cochain) -> Cochain:
    """Kostant codifferential on degree 2 or 3 cochains (homology boundary of p_+)."""
    if c.degree not in (2, 3):
        raise ValueError("codifferential implemented in degrees 2 and 3")
    out: dict = {}

    def put(combo: tuple, vco: SparseVec, sign: int, f: Scalar) -> None:
        combo, flip = _normalize_combo(combo)
        if combo is None:
            return
        s = f if (sign * flip) > 0 else -f
        for v, cv in vco.items():
            key = (combo, v)
            acc = out.get(key, ZERO) + s * cv
            if acc.is_zero():
                out.pop(key, None)
            else:
                out[key] = acc

    for (combo, v), coeff in c.data_dict:
        k = len(combo)
        for pos in range(k):
            rest = combo[:pos] + combo[pos + 1 :]
            sign = -1 if pos % 2 == 0 else 1  # (-1)^i with 1-based i = pos + 1
            put(rest, owner.z_on_g[combo[pos]][v], sign, coeff)
        for p1 in range(k):
            for p2 in range(p1 + 1, k):
                sign = 1 if (p1 + p2) % 2 == 0 else -1  # (-1)^{i+j} with 1-based i, j
                rest = tuple(x for t, x in enumerate(combo) if t not in (p1, p2))
                zbr = owner.zz[combo[p1]][combo[p2]]
                for znew, cz in zbr.items():
                    put((znew,) + rest, {v: ONE}, sign, coeff * cz)
    return Cochain.make(owner, c.degree - 1, out)


def _normalize_combo(combo: tuple):
    lst = list(combo)
    flip = 1
    for i in range(len(lst)):
        for j in range(len(lst) - 1 - i):
            if lst[j] > lst[j + 1]:
                lst[j], lst[j + 1] = lst[j + 1], lst[j]
                flip = -flip
    if len(set(lst)) != len(lst):
        return None, 1
    return tuple(lst), flip


def lie_differential(owner: GradedLieData, c: Cochain) -> Cochain:
    """Chevalley-Eilenberg differential of g_- with values in g, degrees 0..2."""
    if c.degree not in (0, 1, 2):
        raise ValueError("differential implemented in degrees 0, 1, 2")
    nw = len(owner.w_indices)
    out: dict = {}
    for combo in combinations(range(nw), c.degree + 1):
        entry: SparseVec = {}
        cmap = c.entries
        for pos in range(len(combo)):
            rest = combo[:pos] + combo[pos + 1 :]
            vco = {v: cv for (cb, v), cv in cmap.items() if cb == rest}
            if not vco:
                continue
            sign = 1 if pos % 2 == 0 else -1
            acted = owner.bracket_co({owner.w_indices[combo[pos]]: ONE}, vco)
            for v, cv in acted.items():
                s = cv if sign > 0 else -cv
                acc = entry.get(v, ZERO) + s
                if acc.is_zero():
                    entry.pop(v, None)
                else:
                    entry[v] = acc
        for p1 in range(len(combo)):
            for p2 in range(p1 + 1, len(combo)):
                sign = 1 if (p1 + p2) % 2 == 0 else -1  # (-1)^{i+j}, 0-based args
                rest = tuple(
                    x for t, x in enumerate(combo) if t not in (p1, p2)
                )
                br = owner.ww[combo[p1]][combo[p2]]
                for wnew, cw in br.items():
                    args, flip = _normalize_combo((wnew,) + rest)
                    if args is None:
                        continue
                    vco = {v: cv for (cb, v), cv in cmap.items() if cb == args}
                    for v, cv in vco.items():
                        s = cw * cv
                        if sign * flip < 0:
                            s = -s
                        acc = entry.get(v, ZERO) + s
                        if acc.is_zero():
                            entry.pop(v, None)
                        else:
                            entry[v] = acc
        for v, cv in entry.items():
            out[(combo, v)] = cv
    return Cochain.make(owner, c.degree + 1, out)


# -- harmonic modules -----------------------------------------------------------


def _operator_rows(owner: GradedLieData, op, degree: int, out_degree: int):
    """Sparse rows (equations) of a cochain operator on the degree-`degree` basis."""
    basis = cochain_basis(owner, degree)
    out_index = {key: r for r, key in enumerate(cochain_basis(owner, out_degree))}
    rows: dict[int, SparseVec] = {}
    for col, key in enumerate(basis):
        img = op(owner, Cochain.make(owner, degree, {key: ONE}))
        for okey, c in img.data_dict:
            rows.setdefault(out_index[okey], {})[col] = c
    return [rows[r] for r in sorted(rows)], len(basis)


def harmonic_module(owner: GradedLieData) -> list[Cochain]:
    """Exact basis of ker d ∩ ker d* in degree 2."""
    rows_star, ncols = _operator_rows(owner, codifferential, 2, 1)
    rows_d, _ = _operator_rows(owner, lie_differential, 2, 3)
    basis = cochain_basis(owner, 2)
    sols = sparse_kernel(rows_star + rows_d, ncols)
    out = []
    for v in sols:
        entries = {basis[i]: c for i, c in enumerate(v) if not c.is_zero()}
        out.append(Cochain.make(owner, 2, entries))
    return out


def laplacian_kernel(owner: GradedLieData) -> list[Cochain]:
    """ker(d d* + d* d) on degree-2 cochains; the independent harmonic oracle."""
    basis = cochain_basis(owner, 2)
    idx = {k: i for i, k in enumerate(basis)}
    rows: dict[int, SparseVec] = {}
    for col, key in enumerate(basis):
        c = Cochain.make(owner, 2, {key: ONE})
        img = lie_differential(owner, codifferential(owner, c)).add(
            codifferential(owner, lie_differential(owner, c))
        )
        for okey, coeff in img.data_dict:
            rows.setdefault(idx[okey], {})[col] = coeff
    sols = sparse_kernel([rows[r] for r in sorted(rows)], len(basis))
    return [
        Cochain.make(
            owner, 2, {basis[i]: c for i, c in enumerate(v) if not c.is_zero()}
        )
        for v in sols
    ]


def cochain_vectors(owner: GradedLieData, cochains: list[Cochain]) -> list[Vector]:
    basis = cochain_basis(owner, 2)
    idx = {k: i for i, k in enumerate(basis)}
    out = []
    for c in cochains:
        v = [ZERO] * len(basis)
        for key, coeff in c.data_dict:
            v[idx[key]] = coeff
        out.append(tuple(v))
    return out


def g0_action_on_cochain(owner: GradedLieData, a0_index: int, c: Cochain) -> Cochain:
    """(A.c)(W1,W2) = [A, c(W1,W2)] - c([A,W1], W2) - c(W1, [A,W2]) for A in g_0."""
    nw = len(owner.w_indices)
    cmap = c.entries
    out: dict = {}
    for combo in combinations(range(nw), 2):
        entry: SparseVec = {}
        vco = {v: cv for (cb, v), cv in cmap.items() if cb == combo}
        if vco:
            for v, cv in owner.bracket_co({a0_index: ONE}, vco).items():
                entry[v] = entry.get(v, ZERO) + cv
        for pos in range(2):
            other = combo[1 - pos]
            moved = owner.struct[a0_index][owner.w_indices[combo[pos]]]
            for k, ck in moved.items():
                if k not in owner.w_indices:
                    raise ConventionError("g_0 does not preserve g_-")
                wn = owner.w_indices.index(k)
                args, flip = _normalize_combo(
                    (wn, other) if pos == 0 else (other, wn)
                )
                if args is None:
                    continue
                for (cb, v), cv in cmap.items():
                    if cb != args:
                        continue
                    s = ck * cv
                    if flip < 0:
                        s = -s
                    entry[v] = entry.get(v, ZERO) - s
        for v, cv in entry.items():
            if not cv.is_zero():
                out[(combo, v)] = cv
    return Cochain.make(owner, 2, out)


# -- the four gradings in scope --------------------------------------------------


@lru_cache(maxsize=None)
def parabolic_data(which: str) -> GradedLieData:
    """"g2", "so34" (the two distribution gradings) or "conf34", "conf44"."""
    if which == "g2":
        m_small, m_big, parity = build_clifford(2, 3), build_clifford(3, 4), None
    elif which == "so34":
        m_small, m_big, parity = build_clifford(3, 3), build_clifford(4, 4), "-"
    elif which in ("conf34", "conf44"):
        model = build_clifford(3, 4) if which == "conf34" else build_clifford(4, 4)
        return _conformal_data(which, model)
    else:
        raise ValueError(f"unknown grading {which!r}")
    b = solve_invariant_pairing(m_small)
    X, chi, tau = distinguished_doubled_spinor(m_small, b, parity)
    sub = stabilizer(m_big, X)
    frame = adapted_basis(m_small, b, chi, tau)
    dec, _ = verify_graded_basis(m_big, sub, frame, which)
    basis: list[Vector] = []
    degrees: list[int] = []
    for d, vecs in sorted(dec.components.items()):
        for v in vecs:
            basis.append(v)
            degrees.append(d)
    return GradedLieData(which, m_big, basis, degrees)


def _conformal_data(name: str, model: CliffordModel) -> GradedLieData:
    n = model.dim
    weights = [0] * n
    weights[0] = 1
    weights[n - 1] = -1
    basis: list[Vector] = []
    degrees: list[int] = []
    for k, (i, j) in enumerate(model.bivector_pairs):
        basis.append(basis_vec(model.so_dim, k))
        degrees.append(weights[i] + weights[j])
    return GradedLieData(name, model, basis, degrees)


# -- normality of the two Fefferman-type constructions ---------------------------


@dataclass
class NormalityReport:
    case: str
    harmonic_dim: int
    homogeneity_dims: dict[int, int]
    quotient_identified: bool
    all_images_vanish: bool
    pplus_tensor_blocks: dict[str, int]
    failures: list[str]


def quotient_identification(small: GradedLieData, big: GradedLieData) -> ExactMatrix:
    """Matrix of g/p -> g~/p~ on the negative-part bases; must be invertible."""
    if small.model is not big.model:
        raise ValueError("small and big data must share the ambient model")
    nw = len(small.w_indices)
    nwb = len(big.w_indices)
    if nw != nwb:
        raise ConventionError("quotients have different dimensions")
    cols = []
    for a in range(nw):
        amb = small.basis[small.w_indices[a]]
        co = big.coords(amb)
        col = [co[big.w_indices[t]] for t in range(nwb)]
        cols.append(tuple(col))
    return ExactMatrix.from_cols(cols)


def include_cochain(
    small: GradedLieData, big: GradedLieData, c: Cochain, phi_inv: ExactMatrix
) -> Cochain:
    """I(c): pull back the arguments along the quotient identification, include values."""
    nw = len(big.w_indices)
    cmap = c.entries
    out: dict = {}
    for a in range(nw):
        for bidx in range(a + 1, nw):
            # small-coordinates of the two big quotient basis vectors
            xa = phi_inv.col(a)
            xb = phi_inv.col(bidx)
            val: SparseVec = {}
            for (combo, v), cv in cmap.items():
                al, be = combo
                det = xa[al] * xb[be] - xa[be] * xb[al]
                if det.is_zero():
                    continue
                acc = val.get(v, ZERO) + cv * det
                if acc.is_zero():
                    val.pop(v, None)
                else:
                    val[v] = acc
            if not val:
                continue
            amb = zero_vec(small.model.so_dim)
            for v, cv in val.items():
                amb = vec_add(amb, vec_scale(cv, small.basis[v]))
            for k, ck in enumerate(big.coords(amb)):
                if not ck.is_zero():
                    out[((a, bidx), k)] = ck
    return Cochain.make(big, 2, out)


def normality_check(small: GradedLieData, big: GradedLieData) -> NormalityReport:
    """d~* ∘ I on every harmonic basis cochain of the small geometry must vanish."""
    failures: list[str] = []
    phi = quotient_identification(small, big)
    from .linalg import rank as _rank

    identified = _rank(phi) == phi.nrows
    phi_inv = None
    if identified:
        cols = [solve(phi, basis_vec(phi.nrows, i)) for i in range(phi.nrows)]
        phi_inv = ExactMatrix.from_cols(cols)
    else:
        raise ConventionError("quotient identification is not bijective")
    harm = harmonic_module(small)
    hom_dims: dict[int, int] = {}
    for c in harm:
        for h, comp in c.homogeneity_components().items():
            if not comp.is_zero():
                hom_dims[h] = hom_dims.get(h, 0) + 1
    ok = True
    for i, c in enumerate(harm):
        image = codifferential(big, include_cochain(small, big, c, phi_inv))
        if not image.is_zero():
            ok = False
            failures.append(f"d*~ I(harmonic[{i}]) != 0")
    # document the p~_+ (x) p~_+ block dimensions under the small grading element
    blocks = _pplus_blocks(small, big)
    return NormalityReport(
        case=small.name,
        harmonic_dim=len(harm),
        homogeneity_dims=hom_dims,
        quotient_identified=identified,
        all_images_vanish=ok,
        pplus_tensor_blocks=blocks,
        failures=failures,
    )


def grading_element(data: GradedLieData) -> Vector:
    """The ambient wedge vector E with [E, b_i] = deg(b_i) b_i for every basis b_i."""
    n = data.dim
    rows: list[list[Scalar]] = []
    rhs: list[Scalar] = []
    for j in range(n):
        for comp in range(n):
            rows.append([data.struct[i][j].get(comp, ZERO) for i in range(n)])
            rhs.append(Scalar(data.degrees[j]) if comp == j else ZERO)
    co = solve(ExactMatrix(rows), tuple(rhs))
    return data.element(co)


def _pplus_blocks(small: GradedLieData, big: GradedLieData) -> dict[str, int]:
    """ad(E_small)-eigenspace dims of p~_+ and the tensor-square block dims.

    Documents the argument that p~_+ (x) p~_+ splits into blocks all smaller
    than the harmonic module, so the equivariant map into it must vanish.
    """
    E = grading_element(small)
    pplus_big = [big.basis[i] for i in big.pos_indices]
    from .linalg import coords_in_span

    ad_cols = []
    for p in pplus_big:
        br = small.model.bivector_bracket(E, p)
        co = coords_in_span(pplus_big, br)
        if co is None:
            raise ConventionError("ad(E_small) does not preserve p~_+")
        ad_cols.append(co)
    ad = ExactMatrix.from_cols(ad_cols)
    k = len(pplus_big)
    dims: dict[int, int] = {}
    total = 0
    for d in range(1, 2 * max(small.degrees) + 1):
        eig = kernel(ad - ExactMatrix.identity(k).scale(Scalar(d)))
        if eig:
            dims[d] = len(eig)
            total += len(eig)
    blocks = {f"pplus_deg_{d}": n for d, n in sorted(dims.items())}
    for a in sorted(dims):
        for b in sorted(dims):
            blocks[f"tensor_deg{a}_x_deg{b}"] = dims[a] * dims[b]
    blocks["pplus_dim"] = k
    blocks["pplus_graded_total"] = total
    return blocks
