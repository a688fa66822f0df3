"""Sparse multivariate polynomials over Q(sqrt2) and typed polynomial fields.

A PolyField is a tuple of polynomials with a kind tag (scalar, vector,
covector, spinor, half-spinor, k-form, ...) and an additive conformal-weight
label.  Weights are pure bookkeeping on the flat model (densities are
trivialized by the fixed metric); every operation adds them, which is enough
to catch transcription errors in the section formulas.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from gmpy2 import mpq
from itertools import combinations

from .scalars import ONE, ZERO, Scalar

Mono = tuple[int, ...]


class Poly:
    """Polynomial in n variables, {monomial exponent tuple: Scalar}."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Mono, Scalar] | None = None) -> None:
        self.n = n
        self.terms = {m: c for m, c in (terms or {}).items() if not c.is_zero()}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> Poly:
        return cls(n)

    @classmethod
    def const(cls, n: int, c: Scalar) -> Poly:
        return cls(n, {(0,) * n: c})

    @classmethod
    def coordinate(cls, n: int, i: int) -> Poly:
        m = [0] * n
        m[i] = 1
        return cls(n, {tuple(m): ONE})

    # -- ring operations ------------------------------------------------------

    def __add__(self, other: Poly) -> Poly:
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, ZERO) + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return Poly(self.n, out)

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __neg__(self) -> Poly:
        return Poly(self.n, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other) -> Poly:
        if isinstance(other, Scalar):
            return self.scale(other)
        if isinstance(other, int):
            return self.scale(Scalar(other))
        out: dict[Mono, Scalar] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, ZERO) + c1 * c2
                if s.is_zero():
                    out.pop(m, None)
                else:
                    out[m] = s
        return Poly(self.n, out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> Poly:
        if c.is_zero():
            return Poly(self.n)
        return Poly(self.n, {m: c * v for m, v in self.terms.items()})

    def diff(self, i: int) -> Poly:
        out: dict[Mono, Scalar] = {}
        for m, c in self.terms.items():
            if m[i] == 0:
                continue
            mm = list(m)
            mm[i] -= 1
            out[tuple(mm)] = c * Scalar(m[i])
        return Poly(self.n, out)

    def eval(self, point) -> Scalar:
        out = ZERO
        for m, c in self.terms.items():
            term = c
            for i, e in enumerate(m):
                for _ in range(e):
                    term = term * point[i]
            out = out + term
        return out

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def constant_value(self) -> Scalar:
        return self.terms.get((0,) * self.n, ZERO)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, tuple(sorted(self.terms.items()))))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for m, c in sorted(self.terms.items()):
            mono = "*".join(
                f"x{i}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(m)
                if e
            )
            bits.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


def monomials_up_to(n: int, deg: int) -> list[Mono]:
    """All exponent tuples of total degree <= deg, in a fixed deterministic order."""
    out: list[Mono] = []

    def rec(prefix: list[int], rest: int, budget: int) -> None:
        if rest == 0:
            out.append(tuple(prefix))
            return
        for e in range(budget + 1):
            rec(prefix + [e], rest - 1, budget - e)

    for d in range(deg + 1):
        tmp: list[Mono] = []

        def rec_exact(prefix: list[int], rest: int, left: int) -> None:
            if rest == 1:
                tmp.append(tuple(prefix + [left]))
                return
            for e in range(left + 1):
                rec_exact(prefix + [e], rest - 1, left - e)

        rec_exact([], n, d)
        out.extend(sorted(tmp))
    return out


# -- typed fields ---------------------------------------------------------------


def form_index_tuples(n: int, k: int) -> list[tuple[int, ...]]:
    return list(combinations(range(n), k))


@dataclass(frozen=True)
class PolyField:
    """A typed tuple of polynomials with an additive weight label."""

    kind: str  # scalar | vector | covector | spinor | spinor+ | spinor- | form2 | form3
    weight: mpq
    nvars: int
    components: tuple[Poly, ...]

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components)

    def add(self, other: PolyField) -> PolyField:
        if self.kind != other.kind or self.weight != other.weight:
            raise ValueError(
                f"cannot add {self.kind}[{self.weight}] and {other.kind}[{other.weight}]"
            )
        return replace(
            self,
            components=tuple(a + b for a, b in zip(self.components, other.components)),
        )

    def sub(self, other: PolyField) -> PolyField:
        return self.add(replace(other, components=tuple(-p for p in other.components)))

    def scale(self, c: Scalar) -> PolyField:
        return replace(self, components=tuple(p.scale(c) for p in self.components))

    def scale_poly(self, p: Poly, extra_weight: mpq = mpq(0)) -> PolyField:
        return replace(
            self,
            weight=self.weight + extra_weight,
            components=tuple(p * q for q in self.components),
        )

    def eval(self, point) -> tuple[Scalar, ...]:
        return tuple(p.eval(point) for p in self.components)

    def max_degree(self) -> int:
        return max((p.degree() for p in self.components), default=-1)

    def with_weight(self, w) -> PolyField:
        return replace(self, weight=mpq(w))


def zero_field(kind: str, weight, nvars: int, ncomp: int) -> PolyField:
    return PolyField(kind, mpq(weight), nvars, tuple(Poly.zero(nvars) for _ in range(ncomp)))


def constant_field(kind: str, weight, nvars: int, values) -> PolyField:
    return PolyField(
        kind, mpq(weight), nvars, tuple(Poly.const(nvars, v) for v in values)
    )


def field_from_polys(kind: str, weight, polys) -> PolyField:
    polys = tuple(polys)
    return PolyField(kind, mpq(weight), polys[0].n, polys)
