"""Dense and sparse exact linear algebra over Q(sqrt2).

Everything is exact: kernels are certified by re-multiplication, ranks by
pivot counts of a reduced echelon form, and signatures by symmetric
congruence diagonalization (no eigenvalues, no tolerances).  Vectors are
tuples of Scalar; matrices are immutable grids of Scalar.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import ONE, ZERO, Scalar

Vector = tuple[Scalar, ...]


class InconsistentSystemError(ValueError):
    """Raised by solve() when A x = b has no exact solution."""


class ExactMatrix:
    """Immutable dense matrix with Scalar entries."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Scalar]]) -> None:
        object.__setattr__(
            self, "rows", tuple(tuple(_as_scalar(x) for x in r) for r in rows)
        )
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ValueError("ragged rows")

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("ExactMatrix is immutable")

    # -- shape & access -------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.rows[i][j]

    def row(self, i: int) -> Vector:
        return self.rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    # -- constructors ----------------------------------------------------

    @classmethod
    def zeros(cls, n: int, m: int) -> ExactMatrix:
        return cls([[ZERO] * m for _ in range(n)])

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_int_rows(cls, rows: Sequence[Sequence[int]]) -> ExactMatrix:
        return cls([[Scalar(x) for x in r] for r in rows])

    @classmethod
    def from_cols(cls, cols: Sequence[Vector]) -> ExactMatrix:
        n = len(cols[0]) if cols else 0
        return cls([[c[i] for c in cols] for i in range(n)])

    # -- algebra ----------------------------------------------------------

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return ExactMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ]
        )

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix([[-a for a in r] for r in self.rows])

    def scale(self, c: Scalar) -> ExactMatrix:
        c = _as_scalar(c)
        return ExactMatrix([[c * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            bt = other.transpose().rows
            return ExactMatrix(
                [[_dot(r, c) for c in bt] for r in self.rows]
            )
        return self.apply(other)

    def apply(self, v: Sequence[Scalar]) -> Vector:
        if len(v) != self.ncols:
            raise ValueError(
                f"dimension mismatch: matrix has {self.ncols} cols, vector {len(v)}"
            )
        return tuple(_dot(r, v) for r in self.rows)

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(
            [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        )

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.rows for x in r)

    def is_symmetric(self) -> bool:
        if self.nrows != self.ncols:
            return False
        return all(
            self.rows[i][j] == self.rows[j][i]
            for i in range(self.nrows)
            for j in range(i + 1, self.ncols)
        )

    def trace(self) -> Scalar:
        return _vsum(self.rows[i][i] for i in range(self.nrows))

    def __eq__(self, other) -> bool:
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"ExactMatrix[{self.nrows}x{self.ncols}: {body}]"


# -- vector helpers --------------------------------------------------------


def _as_scalar(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar(x)
    raise TypeError(f"expected Scalar or int, got {type(x)!r}")


def _dot(a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
    return _vsum(x * y for x, y in zip(a, b))


def _vsum(xs) -> Scalar:
    out = ZERO
    for x in xs:
        out = out + x
    return out


def vec_add(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_scale(c: Scalar, a: Vector) -> Vector:
    return tuple(c * x for x in a)


def vec_is_zero(a: Vector) -> bool:
    return all(x.is_zero() for x in a)


def zero_vec(n: int) -> Vector:
    return (ZERO,) * n


def basis_vec(n: int, i: int) -> Vector:
    return tuple(ONE if j == i else ZERO for j in range(n))


def dot(a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
    return _dot(a, b)


# -- echelon forms ----------------------------------------------------------


def rref(rows: Sequence[Sequence[Scalar]]) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices).

    Zero rows are dropped.  Deterministic: first nonzero entry of the
    first remaining row is taken as pivot (no magnitude heuristics; the
    field is exact).
    """
    mat = [list(r) for r in rows]
    ncols = len(mat[0]) if mat else 0
    pivots: list[int] = []
    out: list[list[Scalar]] = []
    rrows = mat
    for col in range(ncols):
        pivot_row = None
        for r in rrows:
            if not r[col].is_zero():
                pivot_row = r
                break
        if pivot_row is None:
            continue
        rrows.remove(pivot_row)
        inv = pivot_row[col].inverse()
        pivot_row = [inv * x for x in pivot_row]
        for rws in (out, rrows):
            for r in rws:
                c = r[col]
                if not c.is_zero():
                    for j in range(col, ncols):
                        r[j] = r[j] - c * pivot_row[j]
        out.append(pivot_row)
        pivots.append(col)
        if not rrows:
            break
    return out, pivots


def rank(A: ExactMatrix | Sequence[Sequence[Scalar]]) -> int:
    rows = A.rows if isinstance(A, ExactMatrix) else A
    return len(rref(rows)[1])


def kernel(A: ExactMatrix | Sequence[Sequence[Scalar]]) -> list[Vector]:
    """Exact basis of the right null space {v : A v = 0}."""
    rows = A.rows if isinstance(A, ExactMatrix) else [tuple(r) for r in A]
    ncols = len(rows[0]) if rows else 0
    red, pivots = rref(rows)
    pivset = set(pivots)
    basis: list[Vector] = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for r, pc in zip(red, pivots):
            v[pc] = -r[free]
        basis.append(tuple(v))
    return basis


def solve(A: ExactMatrix, b: Sequence[Scalar]) -> Vector:
    """One exact solution of A x = b; raises InconsistentSystemError if none."""
    aug = [list(r) + [bv] for r, bv in zip(A.rows, b)]
    red, pivots = rref(aug)
    n = A.ncols
    if n in pivots:
        raise InconsistentSystemError("A x = b has no solution")
    x = [ZERO] * n
    for r, pc in zip(red, pivots):
        x[pc] = r[n]
    return tuple(x)


def signature(B: ExactMatrix) -> tuple[int, int, int]:
    """Sylvester signature (p, q, r) of a symmetric matrix, exactly.

    Symmetric Gaussian congruence with explicit pivot search; when the
    remaining diagonal vanishes but the block is nonzero, a hyperbolic-pair
    basis change e_i -> e_i + e_j exposes a nonzero diagonal entry.
    """
    if not B.is_symmetric():
        raise ValueError("signature requires a symmetric matrix")
    n = B.nrows
    M = [list(r) for r in B.rows]
    pos = neg = 0
    for k in range(n):
        if M[k][k].is_zero():
            j = next(
                (j for j in range(k + 1, n) if not M[j][j].is_zero()), None
            )
            if j is not None:
                _sym_swap(M, k, j)
            else:
                pair = next(
                    (
                        (i, j)
                        for i in range(k, n)
                        for j in range(i + 1, n)
                        if not M[i][j].is_zero()
                    ),
                    None,
                )
                if pair is None:
                    return pos, neg, n - (pos + neg)
                i, j = pair
                _sym_add(M, i, j, ONE)  # e_i -> e_i + e_j; diagonal picks up 2 M[i][j]
                if i != k:
                    _sym_swap(M, k, i)
        piv = M[k][k]
        if piv.sign() > 0:
            pos += 1
        else:
            neg += 1
        inv = piv.inverse()
        for r in range(k + 1, n):
            f = M[r][k] * inv
            if not f.is_zero():
                _sym_add(M, r, k, -f)
    return pos, neg, n - (pos + neg)


def _sym_swap(M: list[list[Scalar]], i: int, j: int) -> None:
    M[i], M[j] = M[j], M[i]
    for r in M:
        r[i], r[j] = r[j], r[i]


def _sym_add(M: list[list[Scalar]], i: int, j: int, c: Scalar) -> None:
    """Congruence basis change e_i -> e_i + c e_j (row and column update)."""
    n = len(M)
    for t in range(n):
        M[i][t] = M[i][t] + c * M[j][t]
    for t in range(n):
        M[t][i] = M[t][i] + c * M[t][j]


# -- span utilities ---------------------------------------------------------


def span_basis(vectors: Sequence[Vector]) -> list[Vector]:
    """RREF basis of the span (canonical, deterministic)."""
    if not vectors:
        return []
    red, _ = rref(vectors)
    return [tuple(r) for r in red]


def span_rank(vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    return len(rref(vectors)[1])


def coords_in_span(basis: Sequence[Vector], v: Vector) -> Vector | None:
    """Coefficients of v in the given basis, or None if v is outside the span."""
    if not basis:
        return () if vec_is_zero(v) else None
    A = ExactMatrix.from_cols(list(basis))
    try:
        return solve(A, v)
    except InconsistentSystemError:
        return None


def in_span(basis: Sequence[Vector], v: Vector) -> bool:
    return coords_in_span(basis, v) is not None


def same_span(a: Sequence[Vector], b: Sequence[Vector]) -> bool:
    return span_basis(a) == span_basis(b)


def intersect_spans(a: Sequence[Vector], b: Sequence[Vector]) -> list[Vector]:
    """Basis of span(a) ∩ span(b)."""
    if not a or not b:
        return []
    n = len(a[0])
    # columns: a-coeffs then b-coeffs; kernel rows give x with a.x = b.y
    cols = [list(v) for v in a] + [[-x for x in v] for v in b]
    A = ExactMatrix.from_cols([tuple(c) for c in cols])
    out = []
    for k in kernel(A):
        vec = zero_vec(n)
        for coef, av in zip(k[: len(a)], a):
            vec = vec_add(vec, vec_scale(coef, av))
        if not vec_is_zero(vec):
            out.append(vec)
    return span_basis(out)


# -- sparse elimination ------------------------------------------------------

SparseRow = dict[int, Scalar]


def sparse_kernel(rows: Iterable[SparseRow], ncols: int) -> list[Vector]:
    """Exact kernel basis for a sparse system (rows are {col: coeff}).

    Gauss-Jordan with dict rows: pivot rows never contain other pivot
    columns, so reduction of an incoming row is a single pass over its
    support.  Deterministic for a fixed row order.
    """
    pivots: dict[int, SparseRow] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if not v.is_zero()}
        for c in sorted(row):
            if c in pivots and c in row:
                coef = row.pop(c)
                for pc, pv in pivots[c].items():
                    if pc == c:
                        continue
                    acc = row.get(pc, ZERO) - coef * pv
                    if acc.is_zero():
                        row.pop(pc, None)
                    else:
                        row[pc] = acc
        if not row:
            continue
        pcol = min(row)
        inv = row[pcol].inverse()
        newrow = {c: inv * v for c, v in row.items()}
        newrow[pcol] = ONE
        for prow in pivots.values():
            if pcol in prow:
                coef = prow.pop(pcol)
                for c, v in newrow.items():
                    if c == pcol:
                        continue
                    acc = prow.get(c, ZERO) - coef * v
                    if acc.is_zero():
                        prow.pop(c, None)
                    else:
                        prow[c] = acc
        pivots[pcol] = newrow
    basis: list[Vector] = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for pc, prow in pivots.items():
            if free in prow:
                v[pc] = -prow[free]
        basis.append(tuple(v))
    return basis


def sparse_rank(rows: Iterable[SparseRow], ncols: int) -> int:
    return ncols - len(sparse_kernel(rows, ncols))
