"""Dunkl-difference operators and bispectrality verification.

P0/P2 use a second-order Dunkl operator with a free rational deformation
scalar beta; P1/P3 use the first-order operator F(x)(I-R) + G(x)(T+R - I).
The T+R composition acts as f -> f(-x-1): reflect first, then shift the
variable.  Operators are applied pointwise at rational x; agreement at
deg+2 points certifies the underlying polynomial identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, List, Tuple

from .exactpoly import Poly
from .families import FamilyCase, ParamSet, generate_polys

__all__ = [
    "PoleError",
    "OperatorSpec",
    "operator_for",
    "apply_operator",
    "eigenvalue",
    "verify_bispectrality",
]


class PoleError(ZeroDivisionError):
    """The operator was applied at a pole of a coefficient function."""


@dataclass(frozen=True)
class OperatorSpec:
    case: FamilyCase
    beta: Fraction
    poles: frozenset
    j: int
    _apply: Callable[[Poly, Fraction], Fraction]


def _p0_like_spec(params: ParamSet, beta: Fraction) -> OperatorSpec:
    a, b, j = params.a, params.b, params.j
    rho1, rho2 = params.rho1, params.rho2
    if params.case is FamilyCase.P0:
        omega = (2 * rho1 + j) * (2 * rho2 + j) - 4 * (1 + rho1) * (rho1 + rho2 + j)

        def coeff_a(x):
            return (
                (x + rho1 + 1)
                * (x + rho2 + 1)
                * (2 * x - 2 * rho1 - j)
                * (2 * x - 2 * rho2 - j)
                / (8 * (x + 1) * (2 * x + 1))
            )

        def coeff_b(x):
            return (
                (x - rho2)
                * (x - rho1 - 1)
                * (2 * x + 2 * rho1 + j)
                * (2 * x + 2 * rho2 + j)
                / (8 * x * (2 * x - 1))
            )

        def coeff_c(x):
            return (
                (x - rho2) * (4 * x * x + omega) / (8 * x)
                - (x - rho2)
                * (x + rho1 + 1)
                * (2 * x - 2 * rho1 - j)
                * (2 * x - 2 * rho2 - j)
                / (8 * x * (2 * x + 1))
                - coeff_b(x)
            )

        def coeff_d(x):
            return (
                rho2
                * (x + rho1 + 1)
                * (2 * x - 2 * rho1 - j)
                * (2 * x - 2 * rho2 - j)
                / (8 * x * (x + 1) * (2 * x + 1))
            )

        def beta_factor(x):
            return (x - rho2) / (2 * x)

    else:  # P2
        r1 = (a + j + 1 - b) / 4  # -r1 = (b - j - 1 - a)/4
        omega = 4 * (1 + rho1 - r1) * Fraction(1 - j, 2) + 4 * r1 * (1 - r1) - j

        def coeff_a(x):
            return (
                (x + rho1 + 1)
                * (x - rho1 + Fraction(1 - j, 2))
                * (2 * x - 2 * r1 + 1)
                * (2 * x + 2 * r1 - j)
                / (8 * (x + 1) * (2 * x + 1))
            )

        def coeff_b(x):
            return (
                (x + rho1 + Fraction(j + 1, 2))
                * (x - rho1 - 1)
                * (2 * x + 2 * r1 - 1)
                * (2 * x - 2 * r1 + j)
                / (8 * x * (2 * x - 1))
            )

        def coeff_c(x):
            return (
                (x + rho1 + Fraction(j + 1, 2)) * (4 * x * x + omega) / (8 * x)
                - (x + rho1 + Fraction(j + 1, 2))
                * (x + rho1 + 1)
                * (2 * x - 2 * r1 + 1)
                * (2 * x + 2 * r1 - j)
                / (8 * x * (2 * x + 1))
                - coeff_b(x)
            )

        def coeff_d(x):
            return (
                -(2 * rho1 + j + 1)
                * (x + rho1 + 1)
                * (2 * x - 2 * r1 + 1)
                * (2 * x + 2 * r1 - j)
                / (16 * x * (x + 1) * (2 * x + 1))
            )

        def beta_factor(x):
            return (4 * x + b + a + j + 1) / (8 * x)

    def apply(f: Poly, x: Fraction) -> Fraction:
        ca, cb, cc, cd = coeff_a(x), coeff_b(x), coeff_c(x), coeff_d(x)
        value = (
            ca * f(x + 1)
            + cb * f(x - 1)
            + cc * f(-x)
            + cd * f(-x - 1)
            - (ca + cb + cc + cd) * f(x)
        )
        if beta:
            value += beta * beta_factor(x) * (f(x) - f(-x))
        return value

    poles = frozenset(
        Fraction(v) for v in (0, -1, Fraction(1, 2), Fraction(-1, 2))
    )
    return OperatorSpec(params.case, Fraction(beta), poles, j, apply)


def _p1_like_spec(params: ParamSet) -> OperatorSpec:
    a, b, j = params.a, params.b, params.j
    if params.case is FamilyCase.P1:

        def coeff_g(x):
            return (
                (4 * x + 1 + a - b - j)
                * (4 * x + 1 - a - b - j)
                / (16 * (2 * x + 1))
            )

        def coeff_f(x):
            return (
                (4 * x + 1 + j + a - b) * (4 * x + 1 + j - a - b) / (32 * x)
            )

    else:  # P3

        def coeff_g(x):
            return (
                (4 * x + 1 + b - a - j)
                * (4 * x + 1 + a - b - j)
                / (16 * (2 * x + 1))
            )

        def coeff_f(x):
            return (
                (4 * x + j + 1 - a - b) * (4 * x + j + 1 + a + b) / (32 * x)
            )

    def apply(f: Poly, x: Fraction) -> Fraction:
        return coeff_f(x) * (f(x) - f(-x)) + coeff_g(x) * (f(-x - 1) - f(x))

    poles = frozenset((Fraction(0), Fraction(-1, 2)))
    return OperatorSpec(params.case, Fraction(0), poles, j, apply)


def operator_for(params: ParamSet, beta: Fraction = Fraction(0)) -> OperatorSpec:
    """The case-matching Dunkl-difference operator."""
    if params.case in (FamilyCase.P0, FamilyCase.P2):
        return _p0_like_spec(params, Fraction(beta))
    if beta:
        raise ValueError("odd-length families take no deformation scalar")
    return _p1_like_spec(params)


def apply_operator(spec: OperatorSpec, f: Poly, x) -> Fraction:
    """Exact value of (operator f)(x); raises PoleError on the pole set."""
    x = Fraction(x)
    if x in spec.poles:
        raise PoleError(f"x = {x} is a pole of the operator coefficients")
    return spec._apply(f, x)


def eigenvalue(case: FamilyCase, n: int, j: int, beta: Fraction = Fraction(0)) -> Fraction:
    """Displayed operator eigenvalue for degree n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    m, r = divmod(n, 2)
    if case in (FamilyCase.P0, FamilyCase.P2):
        if r == 0:
            return Fraction(m * (m - j))
        return Fraction(m * (m + 1 - j)) + Fraction(beta)
    if r == 0:
        return Fraction(m)
    return Fraction(j - m)


def _sample_points(spec: OperatorSpec, count: int) -> Iterator[Fraction]:
    k = 0
    produced = 0
    while produced < count:
        x = Fraction(2 * k + 1, 3)  # thirds are never poles
        k += 1
        if x in spec.poles:
            continue
        produced += 1
        yield x


def verify_bispectrality(
    params: ParamSet, beta: Fraction = Fraction(0), samples: int = 0
) -> List[Tuple[int, bool]]:
    """Check the eigenvalue identity for every n <= N at non-pole points.

    Each degree n is checked at max(samples, deg+2) points; agreement at
    deg+2 points certifies the polynomial identity exactly.
    """
    spec = operator_for(params, beta)
    polys = generate_polys(params, params.N)
    report = []
    for n, poly in enumerate(polys):
        lam = eigenvalue(params.case, n, params.j, beta)
        count = max(samples, poly.degree + 2)
        ok = all(
            apply_operator(spec, poly, x) == lam * poly(x)
            for x in _sample_points(spec, count)
        )
        report.append((n, ok))
    return report
