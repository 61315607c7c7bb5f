"""Exact real numbers: rationals and elements of a real quadratic field.

Rationals are :class:`fractions.Fraction`.  :class:`Quadratic` holds
``a + b*sqrt(d)`` with rational ``a, b`` and a square-free ``d >= 2``; any
result with ``b == 0`` collapses back to a ``Fraction``.  Comparisons are
decided from the signs of ``a``, ``b`` and ``a**2 - b**2 * d``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Optional, Union

ExactReal = Union[Fraction, "Quadratic"]


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def squarefree_split(n: int):
    """``n = s**2 * d`` with ``d`` square-free; returns ``(s, d)``."""
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    s, d, p = 1, 1, 2
    while p * p <= n:
        while n % (p * p) == 0:
            n //= p * p
            s *= p
        if n % p == 0:
            n //= p
            d *= p
        p += 1
    return s, d * n


class Quadratic:
    """``a + b*sqrt(d)``; build through :func:`qsqrt` or :func:`make_quadratic`."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = int(d)

    # -- coercion -------------------------------------------------------------

    def _coerce(self, other) -> Optional["Quadratic"]:
        if isinstance(other, Quadratic):
            if other.d != self.d:
                raise ValueError(f"cannot mix sqrt({self.d}) and sqrt({other.d})")
            return other
        if isinstance(other, (int, Rational)):
            return Quadratic(other, 0, self.d)
        return None

    def sign(self) -> int:
        sa, sb = _sign(self.a), _sign(self.b)
        if sb == 0 or sa == sb:
            return sa or sb
        if sa == 0:
            return sb
        norm = self.a * self.a - self.b * self.b * self.d
        return sa if norm > 0 else sb

    def conjugate(self) -> "Quadratic":
        return Quadratic(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.d

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return make_quadratic(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return Quadratic(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return make_quadratic(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return make_quadratic(self.a * o.a + self.b * o.b * self.d, self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o._inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self._inverse()

    def _inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero")
        return make_quadratic(self.a / n, -self.b / n, self.d)

    # -- order ----------------------------------------------------------------

    def _cmp(self, other) -> Optional[int]:
        o = self._coerce(other)
        if o is None:
            return None
        return Quadratic(self.a - o.a, self.b - o.b, self.d).sign()

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __hash__(self):
        # b != 0 for every normalized instance, so no clash with Fraction equality
        return hash((self.a, self.b, self.d))

    def __float__(self):
        return float(self.a) + float(self.b) * self.d ** 0.5

    def __repr__(self):
        return f"Quadratic({self.a}, {self.b}, {self.d})"

    def __str__(self):
        return format_exact(self)


def make_quadratic(a, b, d: int) -> ExactReal:
    a, b = Fraction(a), Fraction(b)
    if b == 0:
        return a
    return Quadratic(a, b, d)


def qsqrt(n) -> ExactReal:
    """Exact square root of a non-negative rational."""
    n = Fraction(n)
    if n < 0:
        raise ValueError("square root of a negative number")
    if n == 0:
        return Fraction(0)
    # sqrt(p/q) = sqrt(p*q)/q
    s, d = squarefree_split(n.numerator * n.denominator)
    return make_quadratic(0, Fraction(s, n.denominator), d) if d > 1 else Fraction(s, n.denominator)


def as_exact(x) -> ExactReal:
    if isinstance(x, (Quadratic, Fraction)):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not exact; pass a Fraction or a string")
    if isinstance(x, str):
        return parse_exact(x)
    return Fraction(x)


def radicand(x) -> Optional[int]:
    return x.d if isinstance(x, Quadratic) else None


_RAT = r"[+-]?\d+(?:/\d+)?"
_QUAD = re.compile(
    rf"^\s*(?:(?P<a>{_RAT})\s*(?P<sign>[+-])|(?P<lead>[+-])?)"
    r"\s*(?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?sqrt\(\s*(?P<d>\d+)\s*\)\s*$"
)
_RATIONAL = re.compile(rf"^\s*{_RAT}\s*$")


def parse_exact(text: str) -> ExactReal:
    """Parse ``p``, ``p/q``, ``a+b*sqrt(d)``, ``a-b*sqrt(d)``, ``b*sqrt(d)`` or ``sqrt(d)``.

    ``a`` and ``b`` are rationals written ``p`` or ``p/q``; ``d`` is a positive integer.
    """
    if _RATIONAL.match(text):
        return Fraction(text.strip())
    m = _QUAD.match(text)
    if not m:
        raise ValueError(f"cannot parse exact number {text!r}; expected p/q or a+b*sqrt(d)")
    a = Fraction(m["a"]) if m["a"] else Fraction(0)
    b = Fraction(m["b"]) if m["b"] else Fraction(1)
    if (m["sign"] or m["lead"]) == "-":
        b = -b
    return a + b * qsqrt(int(m["d"]))


def _format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_exact(x) -> str:
    if isinstance(x, Quadratic):
        b = abs(x.b)
        tail = f"sqrt({x.d})" if b == 1 else f"{_format_rational(b)}*sqrt({x.d})"
        if x.a == 0:
            return tail if x.b > 0 else f"-{tail}"
        return f"{_format_rational(x.a)}{'+' if x.b > 0 else '-'}{tail}"
    return _format_rational(Fraction(x))
