"""Exact arithmetic in the real quadratic field Q(sqrt2).

Every number in this package is a `Scalar`, a + b*sqrt2 with exact rational
a, b.  Arithmetic is field arithmetic, equality is coefficient-wise, and the
sign of a nonzero element is decided exactly by comparing a^2 against 2 b^2.
Rationals are gmpy2.mpq (arbitrary precision; fixed-width integers are never
used).
"""

from __future__ import annotations

import re
from typing import Union

from gmpy2 import mpq

_RAT_RE = r"[+-]?\d+(?:/\d+)?"
_SQRT2_RE = re.compile(
    rf"^(?P<a>{_RAT_RE})?(?P<b>[+-]?(?:{_RAT_RE.lstrip('[+-]?')}|\d+(?:/\d+)?)?\*?(?:r2|sqrt2|s2))?$"
)

RatLike = Union[int, str, "mpq"]


def _as_mpq(x: RatLike) -> mpq:
    if isinstance(x, mpq.__class__ if not isinstance(mpq, type) else mpq):
        return x
    return mpq(x)


class Scalar:
    """An element a + b*sqrt2 of Q(sqrt2), immutable.

    Supports +, -, *, /, ** with other Scalars and ints.  `sign()` is exact,
    `inverse()` raises ZeroDivisionError on zero, `conj()` is the Galois
    conjugate a - b*sqrt2.  The canonical text form is "p/q" or
    "p/q+r/s*r2" (e.g. "3/2+1/2*r2", "-1", "0+1*r2"); `parse` is tolerant
    of whitespace and of sqrt2/s2 spellings.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: RatLike = 0, b: RatLike = 0) -> None:
        object.__setattr__(self, "a", mpq(a))
        object.__setattr__(self, "b", mpq(b))

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("Scalar is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_int(cls, n: int) -> Scalar:
        return cls(n, 0)

    @classmethod
    def rational(cls, p: int, q: int = 1) -> Scalar:
        return cls(mpq(p, q), 0)

    @classmethod
    def sqrt2(cls) -> Scalar:
        return cls(0, 1)

    @classmethod
    def parse(cls, text: str) -> Scalar:
        """Parse "p/q", "p/q+r/s*r2" and reasonable variants thereof."""
        s = re.sub(r"\s+", "", text)
        if not s:
            raise ValueError("empty scalar string")
        s = s.replace("sqrt2", "r2").replace("s2", "r2")
        # split off the sqrt2 part, if any
        m = re.match(rf"^(?P<a>{_RAT_RE})?(?P<sign>[+-])?(?P<b>\d+(?:/\d+)?)?\*?r2$", s)
        if s.endswith("r2"):
            if m is None:
                raise ValueError(f"cannot parse scalar {text!r}")
            a = mpq(m.group("a")) if m.group("a") else mpq(0)
            bs = m.group("b") or "1"
            b = mpq(bs)
            if m.group("sign") == "-":
                b = -b
            elif m.group("sign") is None and m.group("a"):
                raise ValueError(f"cannot parse scalar {text!r}")
            return cls(a, b)
        if re.match(rf"^{_RAT_RE}$", s):
            return cls(mpq(s), 0)
        raise ValueError(f"cannot parse scalar {text!r}")

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(self.a - other.a, self.b - other.b)

    def __rsub__(self, other) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(other.a - self.a, other.b - self.b)

    def __neg__(self) -> Scalar:
        return Scalar(-self.a, -self.b)

    def __mul__(self, other) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Scalar(
            self.a * other.a + 2 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        n = self.a * self.a - 2 * self.b * self.b
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt2)")
        return Scalar(self.a / n, -self.b / n)

    def __truediv__(self, other) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> Scalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n: int) -> Scalar:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- structure -----------------------------------------------------

    def conj(self) -> Scalar:
        """Galois conjugate a - b*sqrt2."""
        return Scalar(self.a, -self.b)

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1} of the real number a + b*sqrt2."""
        sa = _isign(self.a)
        sb = _isign(self.b)
        if sb == 0:
            return sa
        if sa == 0:
            return sb
        if sa == sb:
            return sa
        # opposite signs: compare a^2 with 2 b^2
        cmp = _isign(self.a * self.a - 2 * self.b * self.b)
        return sa * cmp

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __lt__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __le__(self, other) -> bool:
        return self == other or self < other

    def __gt__(self, other) -> bool:
        return not self <= other

    def __ge__(self, other) -> bool:
        return not self < other

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return _fmt_rat(self.a)
        sign = "+" if self.b > 0 else "-"
        return f"{_fmt_rat(self.a)}{sign}{_fmt_rat(abs(self.b))}*r2"

    def __repr__(self) -> str:
        return f"Scalar({str(self)!r})"


def _fmt_rat(x: mpq) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _isign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def _coerce(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, int):
        return Scalar(x, 0)
    return NotImplemented


ZERO = Scalar(0, 0)
ONE = Scalar(1, 0)
TWO = Scalar(2, 0)
SQRT2 = Scalar(0, 1)
HALF = Scalar(mpq(1, 2), 0)
INV_SQRT2 = Scalar(0, mpq(1, 2))  # 1/sqrt2 = (1/2) sqrt2


def sc(p, q: int = 1, r=0, s: int = 1) -> Scalar:
    """Shorthand: sc(p, q, r, s) = p/q + (r/s) sqrt2."""
    return Scalar(mpq(p, q), mpq(r, s))


def scalar_arith(x: Scalar, y: Scalar | None, op: str):
    """Dispatch entry point for the documented scalar operations.

    op in {"add", "mul", "inv", "neg", "sign"}; "inv", "neg" and "sign"
    ignore y.  Division by zero raises ZeroDivisionError.
    """
    if op == "add":
        return x + y
    if op == "mul":
        return x * y
    if op == "inv":
        return x.inverse()
    if op == "neg":
        return -x
    if op == "sign":
        return x.sign()
    raise ValueError(f"unknown scalar op {op!r}")
