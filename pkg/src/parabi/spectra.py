"""Orthogonality data: bi-lattice grids, weights, norms, persymmetry.

Grids are stored in the paper-index order (interlaced, not increasing);
the increasing view exists only for floating cross-checks.  Everything
about the norms h_n and the persymmetric weight display is stated on
squares and signs so that the whole surface stays inside exact rationals.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .exactpoly import (
    Poly,
    X,
    format_rational,
    monic_from_factors,
    poch,
)
from .families import (
    FamilyCase,
    ParamSet,
    generate_polys,
    offdiagonal,
    recurrence_a,
    recurrence_c,
)

__all__ = [
    "Grid",
    "SpectralData",
    "ClosedWeights",
    "grid",
    "grid_char_poly",
    "char_poly_product",
    "weights_direct",
    "weights_closed",
    "norms",
    "h2_closed",
    "spectral_data",
    "verify_orthogonality",
    "persymmetry_check",
]


@dataclass(frozen=True)
class Grid:
    """Grid points x_s in paper index order."""

    points: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValueError("degenerate spectrum: duplicate grid points")

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, s: int) -> Fraction:
        return self.points[s]

    def increasing(self) -> Tuple[Fraction, ...]:
        return tuple(sorted(self.points))

    def quadri_lattice(self) -> Tuple[Tuple[Fraction, ...], ...]:
        """The four interleaved arithmetic progressions x_{4s+r}."""
        return tuple(self.points[r::4] for r in range(4))


def grid(params: ParamSet) -> Grid:
    a, b, j = params.a, params.b, params.j
    n_pts = params.N + 1
    pts: List[Fraction] = [Fraction(0)] * n_pts
    if params.case in (FamilyCase.P0, FamilyCase.P1):
        s_odd_max = j if params.case is FamilyCase.P1 else j - 1
        for s in range(j + 1):
            pts[2 * s] = -((-1) ** s) * (2 * s - j - b + a) / 4 - Fraction(1, 4)
        for s in range(s_odd_max + 1):
            pts[2 * s + 1] = -((-1) ** s) * (2 * s - j - b - a) / 4 - Fraction(1, 4)
    else:
        half = (j - 1) // 2
        last = half if params.case is FamilyCase.P3 else (j - 3) // 2
        for s in range(half + 1):
            pts[4 * s] = -(4 * s - j + a - b) / 4 - Fraction(1, 4)
            pts[4 * s + 1] = (4 * s - j - a - b) / 4 - Fraction(1, 4)
            pts[4 * s + 2] = (4 * s + 2 - j + a - b) / 4 - Fraction(1, 4)
        for s in range(last + 1):
            pts[4 * s + 3] = -(4 * s + 2 - j - a - b) / 4 - Fraction(1, 4)
    return Grid(tuple(pts))


def grid_char_poly(params: ParamSet) -> Poly:
    """Monic polynomial of degree N+1 vanishing exactly on the grid."""
    return monic_from_factors(grid(params).points)


def char_poly_product(params: ParamSet) -> Poly:
    """Factored characteristic polynomial of case P0 (degree 2j+1)."""
    if params.case is not FamilyCase.P0:
        raise ValueError("the factored product display covers case P0 only")
    a, b, j = params.a, params.b, params.j
    out = Poly([1])
    for k in range(j + 1):
        out = out * (X + ((-1) ** k) * (2 * k - j - b + a) / 4 + Fraction(1, 4))
    for k in range(j):
        out = out * (X + ((-1) ** k) * (2 * k - j - b - a) / 4 + Fraction(1, 4))
    return out


def norms(params: ParamSet) -> Tuple[List[Fraction], List[Fraction]]:
    """(u_n for n=1..N, h_n^2 for n=0..N) from coefficient products."""
    u = [offdiagonal(params, n) for n in range(1, params.N + 1)]
    h2 = [Fraction(1)]
    for u_n in u:
        h2.append(h2[-1] * u_n)
    return u, h2


def weights_direct(params: ParamSet) -> List[Fraction]:
    """w_s = u_1...u_N / (P_N(x_s) P'_{N+1}(x_s)), exactly."""
    polys = generate_polys(params, params.N + 1)
    _, h2 = norms(params)
    dp = polys[params.N + 1].derivative()
    out = []
    for x in grid(params):
        den = polys[params.N](x) * dp(x)
        if den == 0:
            raise ArithmeticError("grid point is not a simple root")
        out.append(h2[params.N] / den)
    return out


def _at_half(params: ParamSet) -> ParamSet:
    return ParamSet(params.a, params.b, Fraction(1, 2), params.j, params.case)


@dataclass(frozen=True)
class ClosedWeights:
    """Closed-form weights under the squares-and-signs protocol.

    The displayed weights are (rational quotient) x h, with h the positive
    square root of `h_squared`.  Only quotients, squares and signs are
    exposed, keeping every assertion rational.
    """

    quotients: Tuple[Fraction, ...]
    h_squared: Fraction

    def squares(self) -> Tuple[Fraction, ...]:
        return tuple(q * q * self.h_squared for q in self.quotients)

    def signs(self) -> Tuple[int, ...]:
        return tuple((q > 0) - (q < 0) for q in self.quotients)


def _closed_quotients(params: ParamSet) -> List[Fraction]:
    """Rational parts of the displayed closed-form weights (without h)."""
    a, b, al, j = params.a, params.b, params.alpha, params.j
    n_pts = params.N + 1
    q: List[Fraction] = [Fraction(0)] * n_pts
    if params.case is FamilyCase.P0:
        half = j // 2
        for s in range(half + 1):
            q[4 * s] = 2 * al / (
                poch(-s, s)
                * poch(1, half - s)
                * poch(-s - a / 2, half)
                * poch(s + (1 + a - b - j) / 2, half)
                * poch(s + (1 - b - j) / 2, half)
            )
        for s in range(half):
            q[4 * s + 1] = -2 * (1 - al) / (
                poch(-s, s)
                * poch(1, half - s - 1)
                * poch(-s + a / 2, half + 1)
                * poch(s + (1 - a - b - j) / 2, half)
                * poch(s + (1 - b - j) / 2, half)
            )
            q[4 * s + 2] = -2 * al / (
                poch(-s, s)
                * poch(1, half - s - 1)
                * poch(-s - a / 2, half)
                * poch(s + (1 + a - b - j) / 2, half + 1)
                * poch(s + (1 - b - j) / 2, half)
            )
            q[4 * s + 3] = 2 * (1 - al) / (
                poch(-s, s)
                * poch(1, half - s - 1)
                * poch(-s + a / 2, half)
                * poch(s + (1 - a - b - j) / 2, half)
                * poch(s + (1 - b - j) / 2, half + 1)
            )
    elif params.case is FamilyCase.P1:
        half = j // 2
        for s in range(half + 1):
            q[4 * s] = 2 * al / (
                poch(-s, s)
                * poch(1, half - s)
                * poch(-s - a / 2, half + 1)
                * poch(s + (1 + a - b - j) / 2, half)
                * poch(s + (1 - b - j) / 2, half)
            )
            q[4 * s + 1] = -2 * (1 - al) / (
                poch(-s, s)
                * poch(1, half - s)
                * poch(-s + a / 2, half + 1)
                * poch(s + (1 - a - b - j) / 2, half)
                * poch(s + (1 - b - j) / 2, half)
            )
        for s in range(half):
            q[4 * s + 2] = -2 * al / (
                poch(-s, s)
                * poch(1, half - s - 1)
                * poch(-s - a / 2, half)
                * poch(s + (1 + a - b - j) / 2, half + 1)
                * poch(s + (1 - b - j) / 2, half + 1)
            )
            q[4 * s + 3] = 2 * (1 - al) / (
                poch(-s, s)
                * poch(1, half - s - 1)
                * poch(-s + a / 2, half)
                * poch(s + (1 - a - b - j) / 2, half + 1)
                * poch(s + (1 - b - j) / 2, half + 1)
            )
    elif params.case is FamilyCase.P2:
        hm, hp = (j - 1) // 2, (j + 1) // 2
        for s in range(hm + 1):
            q[4 * s] = 2 * al / (
                poch(-s, s)
                * poch(1, hm - s)
                * poch(-s + (1 - a) / 2, hm)
                * poch(s + (1 + a - b - j) / 2, hp)
                * poch(s - (b + j) / 2, hp)
            )
            q[4 * s + 1] = 2 * (1 - al) / (
                poch(-s, s)
                * poch(1, hm - s)
                * poch(-s + (1 + a) / 2, hp)
                * poch(s + (1 - a - b - j) / 2, hm)
                * poch(s - (b + j) / 2, hp)
            )
            q[4 * s + 2] = -2 * al / (
                poch(-s, s)
                * poch(1, hm - s)
                * poch(-s - (1 + a) / 2, hp)
                * poch(s + (1 + a - b - j) / 2, hp)
                * poch(s + (2 - b - j) / 2, hm)
            )
        for s in range((j - 3) // 2 + 1):
            q[4 * s + 3] = -2 * (1 - al) / (
                poch(-s, s)
                * poch(1, (j - 3) // 2 - s)
                * poch(-s - (1 - a) / 2, hp)
                * poch(s + (1 - a - b - j) / 2, hp)
                * poch(s + (2 - b - j) / 2, hp)
            )
    else:  # P3
        hm, hp = (j - 1) // 2, (j + 1) // 2
        for s in range(hm + 1):
            q[4 * s] = 2 * al / (
                poch(-s, s)
                * poch(1, hm - s)
                * poch(-s + (1 - a) / 2, hp)
                * poch(s + (1 + a - b - j) / 2, hp)
                * poch(s - (b + j) / 2, hp)
            )
            q[4 * s + 1] = 2 * (1 - al) / (
                poch(-s, s)
                * poch(1, hm - s)
                * poch(-s + (1 + a) / 2, hp)
                * poch(s + (1 - a - b - j) / 2, hp)
                * poch(s - (b + j) / 2, hp)
            )
            q[4 * s + 2] = -2 * al / (
                poch(-s, s)
                * poch(1, hm - s)
                * poch(-s - (1 + a) / 2, hp)
                * poch(s + (1 + a - b - j) / 2, hp)
                * poch(s + (2 - b - j) / 2, hp)
            )
            q[4 * s + 3] = -2 * (1 - al) / (
                poch(-s, s)
                * poch(1, hm - s)
                * poch(-s - (1 - a) / 2, hp)
                * poch(s + (1 - a - b - j) / 2, hp)
                * poch(s + (2 - b - j) / 2, hp)
            )
    return q


def weights_closed(params: ParamSet) -> ClosedWeights:
    """Closed-form weights; the positive scale h is carried as h^2.

    h is the top norm at the mirror-symmetric point alpha = 1/2, which is
    where the displayed Pochhammer quotients were derived.
    """
    _, h2_half = norms(_at_half(params))
    return ClosedWeights(
        quotients=tuple(_closed_quotients(params)),
        h_squared=h2_half[params.N],
    )


def h2_closed(params: ParamSet, n: int) -> Fraction:
    """Square of the displayed closed-form norm h_n (exact rational)."""
    a, b, al, j = params.a, params.b, params.alpha, params.j
    if not 0 <= n <= params.N:
        raise ValueError(f"n={n} outside 0..{params.N}")
    m, r = divmod(n, 2)
    four_aa = 4 * al * (1 - al)
    if params.case is FamilyCase.P0:
        if r == 0:
            base = (
                poch(-j, m)
                * poch(1, m)
                * poch((1 + b - j) / 2, m)
                * poch((1 - b - j) / 2, m)
                * poch(-(j + a) / 2, m)
                * poch((2 + a - j) / 2, m)
                / (Fraction(2) ** (4 * m) * poch(Fraction(1 - j, 2), m) ** 2)
            )
            tail = 1 if 2 * m < j else (2 * al if 2 * m == j else four_aa)
        else:
            base = (
                -poch(-j, m + 1)
                * poch(1, m)
                * poch((1 + b - j) / 2, m + 1)
                * poch((1 - b - j) / 2, m)
                * poch(-(j + a) / 2, m + 1)
                * poch((2 + a - j) / 2, m)
                / (
                    Fraction(2) ** (4 * m + 2)
                    * poch(Fraction(1 - j, 2), m)
                    * poch(Fraction(1 - j, 2), m + 1)
                )
            )
            tail = 1 if 2 * m < j else four_aa
        return base * tail
    if params.case is FamilyCase.P1:
        common = (
            poch(-j, m)
            * poch(1, m)
            * poch((1 - b - j) / 2, m)
            * poch((1 + b - j) / 2, m)
        )
        if r == 0:
            base = common * poch(-(j + a) / 2, m) * poch(-(j - a) / 2, m)
            base /= Fraction(2) ** (4 * m) * poch(Fraction(1 - j, 2), m) ** 2
            tail = 1 if 2 * m <= j else four_aa
        else:
            base = -common * poch(-(j + a) / 2, m + 1) * poch(-(j - a) / 2, m + 1)
            base /= Fraction(2) ** (4 * m + 2) * poch(Fraction(1 - j, 2), m) ** 2
            tail = 1 if 2 * m < j else four_aa
        return base * tail
    if params.case is FamilyCase.P2:
        if r == 0:
            base = (
                poch(-j, m)
                * poch(1, m)
                * poch((2 + a - j) / 2, m)
                * poch(-(j + a) / 2, m)
                * poch((2 + b - j) / 2, m)
                * poch(-(j + b) / 2, m)
                / (
                    Fraction(2) ** (4 * m)
                    * poch(Fraction(2 - j, 2), m)
                    * poch(Fraction(-j, 2), m)
                )
            )
            tail = 1 if 2 * m <= j - 1 else four_aa
        else:
            base = (
                -poch(-j, m + 1)
                * poch(1, m)
                * poch((2 + a - j) / 2, m)
                * poch(-(j + a) / 2, m + 1)
                * poch((2 + b - j) / 2, m)
                * poch(-(j + b) / 2, m + 1)
                / (
                    Fraction(2) ** (4 * m + 2)
                    * poch(Fraction(2 - j, 2), m)
                    * poch(Fraction(-j, 2), m + 1)
                )
            )
            tail = (
                1 if 2 * m < j - 1 else (2 * al if 2 * m == j - 1 else four_aa)
            )
        return base * tail
    # P3
    common = poch(-j, m) * poch(1, m)
    if r == 0:
        base = (
            common
            * poch(-(j - a) / 2, m)
            * poch(-(j + a) / 2, m)
            * poch(-(j - b) / 2, m)
            * poch(-(j + b) / 2, m)
            / (Fraction(2) ** (4 * m) * poch(Fraction(-j, 2), m) ** 2)
        )
        tail = 1 if 2 * m < j + 1 else four_aa
    else:
        base = (
            -common
            * poch(-(j - a) / 2, m + 1)
            * poch(-(j + a) / 2, m + 1)
            * poch(-(j - b) / 2, m + 1)
            * poch(-(j + b) / 2, m + 1)
            / (Fraction(2) ** (4 * m + 2) * poch(Fraction(-j, 2), m + 1) ** 2)
        )
        tail = 1 if 2 * m + 1 < j + 1 else four_aa
    return base * tail


@dataclass(frozen=True)
class SpectralData:
    grid: Grid
    weights: Tuple[Fraction, ...]
    u: Tuple[Fraction, ...]
    h2: Tuple[Fraction, ...]

    def to_jsonable(self) -> Dict:
        return {
            "grid": [format_rational(x) for x in self.grid],
            "weights": [format_rational(w) for w in self.weights],
            "u": [format_rational(v) for v in self.u],
            "h2": [format_rational(v) for v in self.h2],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_jsonable(), indent=indent)


def spectral_data(params: ParamSet) -> SpectralData:
    u, h2 = norms(params)
    return SpectralData(
        grid=grid(params),
        weights=tuple(weights_direct(params)),
        u=tuple(u),
        h2=tuple(h2),
    )


def verify_orthogonality(params: ParamSet) -> Dict[Tuple[int, int], bool]:
    """Exact pass/fail of sum_s w_s P_n(x_s) P_m(x_s) = delta_nm h_n^2."""
    polys = generate_polys(params, params.N)
    pts = grid(params).points
    w = weights_direct(params)
    _, h2 = norms(params)
    values = [[p(x) for x in pts] for p in polys]
    report = {}
    for n in range(params.N + 1):
        for m in range(n, params.N + 1):
            total = sum(
                w_s * vn * vm
                for w_s, vn, vm in zip(w, values[n], values[m])
            )
            expected = h2[n] if n == m else Fraction(0)
            report[(n, m)] = total == expected
    return report


def persymmetry_check(params: ParamSet) -> bool:
    """Mirror symmetry and the alternating-sign identity at alpha = 1/2.

    Checks b_n = b_{N-n}, u_n = u_{N+1-n}, and P_N(x_s)^2 = u_1...u_N with
    sign pattern (-1)^s across the interlaced grid ordering (equivalently
    (-1)^(N+s) for the even-length families).
    """
    if params.alpha != Fraction(1, 2):
        raise ValueError("persymmetry requires alpha = 1/2")
    N = params.N
    u, h2 = norms(params)
    diag = [params.rho1 - recurrence_a(params, n) - recurrence_c(params, n)
            for n in range(N + 1)]
    if any(diag[n] != diag[N - n] for n in range(N + 1)):
        return False
    if any(u[n - 1] != u[N - n] for n in range(1, N + 1)):
        return False
    p_top = generate_polys(params, N)[N]
    for s, x in enumerate(grid(params)):
        value = p_top(x)
        if value * value != h2[N]:
            return False
        sign = 1 if s % 2 == 0 else -1
        if (value > 0) != (sign > 0):
            return False
    return True
