"""Exact rational scalars, Pochhammer symbols and dense polynomial arithmetic.

Everything in here is exact: scalars are ``fractions.Fraction`` and no
operation ever rounds.  The zero polynomial has degree -1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[Fraction, int]

__all__ = [
    "Fraction",
    "parse_rational",
    "format_rational",
    "poch",
    "poch_many",
    "Poly",
    "X",
    "ONE",
    "ZERO",
]


def parse_rational(text: str) -> Fraction:
    """Parse a rational literal of the form ``p/q`` or ``p``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"invalid rational literal: {text!r}") from exc


def format_rational(value: Fraction) -> str:
    """Serialize a rational as ``p/q`` (or ``p`` for integers)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def poch(base: Scalar, length: int) -> Fraction:
    """Rising factorial (base)(base+1)...(base+length-1); 1 for length 0."""
    if length < 0:
        raise ValueError(f"poch length must be nonnegative, got {length}")
    result = Fraction(1)
    base = Fraction(base)
    for i in range(length):
        result *= base + i
        if result == 0:
            break
    return result


def poch_many(bases: Iterable[Scalar], length: int) -> Fraction:
    """Product of rising factorials with a shared length."""
    result = Fraction(1)
    for base in bases:
        result *= poch(base, length)
    return result


class Poly:
    """Dense univariate polynomial over exact rationals.

    Coefficients are stored lowest power first with no trailing zeros;
    the zero polynomial has an empty coefficient tuple and degree -1.
    Instances are immutable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            [
                (self.coeffs[i] if i < len(self.coeffs) else 0)
                + (other.coeffs[i] if i < len(other.coeffs) else 0)
                for i in range(n)
            ]
        )

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> "Poly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "Poly":
        return _coerce(other) + (-self)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for k, b in enumerate(other.coeffs):
                out[i + k] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __call__(self, x: Scalar) -> Fraction:
        """Exact Horner evaluation."""
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose(self, inner: "Poly") -> "Poly":
        """Exact composition self(inner(x)) by Horner on polynomials."""
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * inner + Poly([c])
        return acc

    def shift_down(self, k: int) -> "Poly":
        """Divide by x**k, requiring the low-order coefficients to vanish."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError("polynomial not divisible by x**k")
        return Poly(self.coeffs[k:])

    def valuation(self) -> int:
        """Index of the lowest nonzero coefficient (0 for the zero poly)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return 0

    def __repr__(self) -> str:
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(format_rational(c))
            else:
                xs = "x" if i == 1 else f"x^{i}"
                terms.append(xs if c == 1 else f"{format_rational(c)}*{xs}")
        return "Poly(" + " + ".join(terms) + ")"


def _coerce(value) -> Poly:
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly([value])
    raise TypeError(f"cannot coerce {value!r} to Poly")


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def monic_from_factors(roots: Iterable[Scalar]) -> Poly:
    """Expand the monic polynomial with the given roots."""
    out = ONE
    for r in roots:
        out = out * (X - Fraction(r))
    return out


def limit_ratio_at_zero(num: Poly, den: Poly) -> Fraction:
    """Limit of num(t)/den(t) as t -> 0, cancelling common powers of t.

    Raises ZeroDivisionError when the limit diverges.
    """
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return Fraction(0)
    k = min(num.valuation(), den.valuation())
    num, den = num.shift_down(k), den.shift_down(k)
    d0 = den(0)
    if d0 == 0:
        raise ZeroDivisionError("ratio diverges at t=0")
    return num(0) / d0
