"""Explicit evaluation of para-Bannai-Ito polynomials via Pochhammer sums.

The even-length families (P0, P2) have branch-split summand tables with a
normalizer making the result monic; the odd-length families (P1, P3) are
the Geronimus combination P_n = Q_n - C_n Q_{n-1} of the matching
even-length family Q.  All evaluation is exact.

The k-branch boundary sits at j/2 (P0) or (j-1)/2 (P2); the deformation
parameter enters only through the 1/(1-alpha) (P0) or 1/alpha (P2) factor of
the high-k branch, which is why alpha = 1 (resp. 0) degenerates there.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exactpoly import poch, poch_many
from .families import (
    FamilyCase,
    ParamSet,
    SingularParameterError,
    recurrence_c,
)

__all__ = [
    "DegenerateDeformationError",
    "explicit_eval",
    "explicit_eval_series",
    "hypergeo_4F3",
]


class DegenerateDeformationError(ValueError):
    """alpha hit the endpoint that zeroes the selected summand branch."""


def hypergeo_4F3(
    numerators: Sequence[Fraction],
    denominators: Sequence[Fraction],
    terms: int,
) -> Fraction:
    """Terminating 4F3(...; 1) summed exactly over k = 0..terms.

    The series must terminate by a numerator Pochhammer vanishing at or
    before `terms`; a denominator Pochhammer vanishing first raises.
    """
    if len(numerators) != 4 or len(denominators) != 3:
        raise ValueError("expected 4 numerator and 3 denominator parameters")
    total = Fraction(0)
    for k in range(terms + 1):
        num = poch_many(numerators, k)
        if num == 0:
            return total
        den = poch(1, k) * poch_many(denominators, k)
        if den == 0:
            raise SingularParameterError(
                "denominator Pochhammer vanished before termination"
            )
        total += num / den
    # Termination must have occurred within the allotted terms.
    if poch_many(numerators, terms + 1) != 0:
        raise ValueError("series did not terminate within `terms`")
    return total


def _require_nonzero(value: Fraction, what: str) -> Fraction:
    if value == 0:
        raise SingularParameterError(f"vanishing Pochhammer in {what}")
    return value


# --- case P0: N = 2j, j even ---------------------------------------------


def _p0_even(params: ParamSet, m: int, x: Fraction) -> Fraction:
    a, b, al, j = params.a, params.b, params.alpha, params.j
    rho2 = params.rho2
    half = j // 2
    if m > half and al == 1:
        raise DegenerateDeformationError("alpha = 1 degenerates the high branch")
    kappa = _p0_even_kappa(params, m)
    total = Fraction(0)
    for k in range(m + 1):
        num = poch(-m, k) * poch(rho2 + x, k) * poch(rho2 - x, k)
        if k <= half:
            num *= poch(m - j, k)
            if num == 0:
                continue
            den = poch(1, k) * poch_many(
                [(1 + b - j) / 2, -(j + a) / 2, Fraction(-j, 2)], k
            )
        else:
            num *= poch(m - j, j - m) * poch(1, m + k - j - 1)
            if num == 0:
                continue
            den = (1 - al) * poch(1, k)
            den *= poch_many([(1 + b - j) / 2, -(j + a) / 2], k)
            den *= poch(Fraction(-j, 2), half) * poch(1, k - half - 1)
        total += num / _require_nonzero(den, "summand")
    return kappa * total


def _p0_odd(params: ParamSet, m: int, x: Fraction) -> Fraction:
    a, b, al, j = params.a, params.b, params.alpha, params.j
    z = params.rho2 + 1
    half = j // 2
    if m >= half and al == 1:
        raise DegenerateDeformationError("alpha = 1 degenerates the high branch")
    kappa = _p0_odd_kappa(params, m)
    total = Fraction(0)
    for k in range(m + 1):
        num = poch(-m, k) * poch(z + x, k) * poch(z - x, k)
        if k < half:
            num *= poch(m + 1 - j, k)
            if num == 0:
                continue
            den = poch(1, k) * poch_many(
                [(3 + b - j) / 2, (2 - j - a) / 2, Fraction(2 - j, 2)], k
            )
        else:
            num *= poch(m + 1 - j, j - m - 1) * poch(1, m + k - j)
            if num == 0:
                continue
            den = (1 - al) * poch(1, k)
            den *= poch_many([(3 + b - j) / 2, (2 - j - a) / 2], k)
            den *= poch(Fraction(2 - j, 2), half - 1) * poch(1, k - half)
        total += num / _require_nonzero(den, "summand")
    return kappa * (x - params.rho2) * total


# --- case P2: N = 2j, j odd ----------------------------------------------


def _p2_even(params: ParamSet, m: int, x: Fraction) -> Fraction:
    a, b, al, j = params.a, params.b, params.alpha, params.j
    z = -(b + j + 1 + a) / 4
    half = (j - 1) // 2
    if m <= half:
        kappa = poch_many([-(b + j) / 2, -(j + a) / 2, Fraction(1 - j, 2)], m)
        kappa /= _require_nonzero(poch(m - j, m), "normalizer")
    else:
        if al == 0:
            raise DegenerateDeformationError("alpha = 0 degenerates the high branch")
        kappa = al * poch_many([-(b + j) / 2, -(j + a) / 2], m)
        kappa *= poch(Fraction(1 - j, 2), half) * poch(1, m - half - 1)
        kappa /= _require_nonzero(
            poch(m - j, j - m) * poch(1, 2 * m - j - 1), "normalizer"
        )
    total = Fraction(0)
    for k in range(m + 1):
        num = poch(-m, k) * poch(z + x, k) * poch(z - x, k)
        if k <= half:
            num *= poch(m - j, k)
            if num == 0:
                continue
            den = poch(1, k) * poch_many(
                [-(b + j) / 2, -(j + a) / 2, Fraction(1 - j, 2)], k
            )
        else:
            num *= poch(m - j, j - m) * poch(1, m + k - j - 1)
            if num == 0:
                continue
            den = al * poch(1, k)
            den *= poch_many([-(b + j) / 2, -(j + a) / 2], k)
            den *= poch(Fraction(1 - j, 2), half) * poch(1, k - half - 1)
        total += num / _require_nonzero(den, "summand")
    return kappa * total


def _int_gamma_ratio(p: int, q: int) -> Fraction:
    """Regularized Gamma(p)/Gamma(q) for integers, as the eps -> 0 limit
    of Gamma(p+eps)/Gamma(q+eps).  Needed where the odd-degree display's
    poch(1, m+k-j)/poch(1, 2m-j) pair degenerates at the boundary
    half-degree."""
    if p >= 1 and q >= 1:
        return poch(1, p - 1) / poch(1, q - 1)
    if p <= 0 and q <= 0:
        if q < p:
            return poch(q, p - q)
        return 1 / _require_nonzero(poch(p, q - p), "gamma ratio")
    if q <= 0:
        return Fraction(0)  # Gamma(q) pole in the denominator
    raise SingularParameterError("diverging Gamma ratio in summand")


def _p2_odd(params: ParamSet, m: int, x: Fraction) -> Fraction:
    a, b, al, j = params.a, params.b, params.alpha, params.j
    if j == 1:
        raise NotImplementedError("odd-degree summand display degenerates at j=1")
    z = -(b + j - 3 + a) / 4
    half = (j - 1) // 2
    prefactor = x + (b + j + 1 + a) / 4
    p1 = (2 - j - a) / 2
    p2 = (2 - j - b) / 2
    if m < half:
        kappa = poch_many([p1, p2, Fraction(3 - j, 2)], m)
        kappa /= _require_nonzero(poch(m + 1 - j, m), "normalizer")
        total = Fraction(0)
        for k in range(m + 1):
            num = poch(-m, k) * poch(m + 1 - j, k) * poch(z + x, k) * poch(z - x, k)
            if num == 0:
                continue
            den = poch(1, k) * poch_many([p1, p2, Fraction(3 - j, 2)], k)
            total += num / _require_nonzero(den, "summand")
        return kappa * prefactor * total
    # m >= half: fold the normalizer into each term so the boundary
    # half-degree (where poch(1, 2m-j) degenerates) stays well defined.
    if al == 0:
        raise DegenerateDeformationError("alpha = 0 degenerates the high branch")
    scale = poch(p1, m) * poch(p2, m) * poch(1, m - half)
    g_const = poch(Fraction(3 - j, 2), (j - 3) // 2)
    t_const = _require_nonzero(poch(m + 1 - j, j - m - 1), "normalizer")
    total = Fraction(0)
    for k in range(m + 1):
        num = poch(-m, k) * poch(z + x, k) * poch(z - x, k)
        if num == 0:
            continue
        if k < half:
            num *= poch(m + 1 - j, k) * al * g_const
            num *= _int_gamma_ratio(1, 2 * m - j + 1)
            den = poch(1, k) * poch_many([p1, p2, Fraction(3 - j, 2)], k)
            den *= t_const
        else:
            num *= _int_gamma_ratio(m + k - j + 1, 2 * m - j + 1)
            den = poch(1, k) * poch(p1, k) * poch(p2, k) * poch(1, k - half)
        total += num / _require_nonzero(den, "summand")
    return scale * prefactor * total


def _even_family_eval(params: ParamSet, n: int, x: Fraction) -> Fraction:
    """P_n for the even-length family at the same (a, b, alpha, j).

    Degree 2j+1 (one past that family's range) comes from the factored
    characteristic polynomial, which the grid determines without the
    recurrence.
    """
    base_case = FamilyCase.P0 if params.j % 2 == 0 else FamilyCase.P2
    base = ParamSet(params.a, params.b, params.alpha, params.j, base_case)
    if n == 2 * params.j + 1:
        if base_case is FamilyCase.P0:
            from .spectra import char_poly_product

            return char_poly_product(base)(x)
        from .exactpoly import monic_from_factors
        from .spectra import grid

        return monic_from_factors(grid(base).points)(x)
    m, r = divmod(n, 2)
    if base_case is FamilyCase.P0:
        return _p0_even(base, m, x) if r == 0 else _p0_odd(base, m, x)
    return _p2_even(base, m, x) if r == 0 else _p2_odd(base, m, x)


def explicit_eval(params: ParamSet, n: int, x) -> Fraction:
    """Exact value of P_n(x) from the explicit displays (no recurrence)."""
    if not 0 <= n <= params.N:
        raise ValueError(f"n={n} outside 0..{params.N}")
    x = Fraction(x)
    if params.case in (FamilyCase.P0, FamilyCase.P2):
        return _even_family_eval(params, n, x)
    # Odd-length family: Geronimus combination of the even-length one.
    if n == 0:
        return Fraction(1)
    c_n = recurrence_c(params, n)
    return _even_family_eval(params, n, x) - c_n * _even_family_eval(
        params, n - 1, x
    )


# --- two-part 4F3 displays (P0 only), used as an independent cross-check ---


def explicit_eval_series(params: ParamSet, n: int, x) -> Fraction:
    """P_n(x) for case P0 via the plain / two-part 4F3 displays."""
    if params.case is not FamilyCase.P0:
        raise ValueError("the two-part 4F3 displays cover case P0 only")
    if not 0 <= n <= params.N:
        raise ValueError(f"n={n} outside 0..{params.N}")
    x = Fraction(x)
    a, b, al, j = params.a, params.b, params.alpha, params.j
    rho2 = params.rho2
    half = j // 2
    m, r = divmod(n, 2)
    if r == 0:
        kappa = _p0_even_kappa(params, m)
        main = hypergeo_4F3(
            [Fraction(-m), Fraction(m - j), rho2 + x, rho2 - x],
            [(1 + b - j) / 2, -(j + a) / 2, Fraction(-j, 2)],
            m,
        )
        if m <= half:
            return kappa * main
        if al == 1:
            raise DegenerateDeformationError("alpha = 1 degenerates the correction")
        corr = poch(m - j, j - m) * poch(-m, half + 1)
        corr *= poch(rho2 + x, half + 1) * poch(rho2 - x, half + 1)
        corr *= poch(1, m - half)
        corr /= (
            (1 - al)
            * poch(Fraction(-j, 2), half)
            * poch(1, half + 1)
            * poch((1 + b - j) / 2, half + 1)
            * poch(-(j + a) / 2, half + 1)
        )
        tail = hypergeo_4F3(
            [
                Fraction(half + 1 - m),
                Fraction(m) - Fraction(j - 2, 2),
                (b + j + 3 - a) / 4 + x,
                (b + j + 3 - a) / 4 - x,
            ],
            [(3 + b) / 2, (2 - a) / 2, Fraction(4 + j, 2)],
            m - half - 1 if m > half else 0,
        )
        return kappa * (main + corr * tail)
    kappa = _p0_odd_kappa(params, m)
    main = hypergeo_4F3(
        [Fraction(-m), Fraction(m + 1 - j), rho2 + 1 + x, rho2 + 1 - x],
        [(3 + b - j) / 2, (2 - j - a) / 2, Fraction(2 - j, 2)],
        m,
    )
    if m < half:
        return kappa * (x - rho2) * main
    if al == 1:
        raise DegenerateDeformationError("alpha = 1 degenerates the correction")
    corr = poch(m + 1 - j, j - m - 1) * poch(-m, half)
    corr *= poch(rho2 + 1 + x, half) * poch(rho2 + 1 - x, half)
    corr *= poch(1, m - half)
    corr /= (
        (1 - al)
        * poch(Fraction(2 - j, 2), half - 1)
        * poch(1, half)
        * poch((3 + b - j) / 2, half)
        * poch((2 - j - a) / 2, half)
    )
    # third denominator is (j+2)/2, one less than in the even-degree tail:
    # the reindexed summation starts at k = j/2 rather than j/2 + 1
    tail = hypergeo_4F3(
        [
            Fraction(half - m),
            Fraction(m) - Fraction(j - 2, 2),
            (b + j + 3 - a) / 4 + x,
            (b + j + 3 - a) / 4 - x,
        ],
        [(3 + b) / 2, (2 - a) / 2, Fraction(2 + j, 2)],
        max(m - half, 0),
    )
    return kappa * (x - rho2) * (main + corr * tail)


def _p0_even_kappa(params: ParamSet, m: int) -> Fraction:
    a, b, al, j = params.a, params.b, params.alpha, params.j
    half = j // 2
    if m <= half:
        return poch_many(
            [(1 + b - j) / 2, -(j + a) / 2, Fraction(-j, 2)], m
        ) / _require_nonzero(poch(m - j, m), "normalizer")
    kappa = (1 - al) * poch_many([(1 + b - j) / 2, -(j + a) / 2], m)
    kappa *= poch(Fraction(-j, 2), half) * poch(1, m - half - 1)
    return kappa / _require_nonzero(
        poch(m - j, j - m) * poch(1, 2 * m - j - 1), "normalizer"
    )


def _p0_odd_kappa(params: ParamSet, m: int) -> Fraction:
    a, b, al, j = params.a, params.b, params.alpha, params.j
    half = j // 2
    if m < half:
        return poch_many(
            [(3 + b - j) / 2, (2 - j - a) / 2, Fraction(2 - j, 2)], m
        ) / _require_nonzero(poch(m + 1 - j, m), "normalizer")
    kappa = (1 - al) * poch_many([(3 + b - j) / 2, (2 - j - a) / 2], m)
    kappa *= poch(Fraction(2 - j, 2), half - 1) * poch(1, m - half)
    return kappa / _require_nonzero(
        poch(m + 1 - j, j - m - 1) * poch(1, 2 * m - j), "normalizer"
    )
