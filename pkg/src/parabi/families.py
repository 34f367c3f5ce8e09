"""Parameter models and three-term recurrences for the para-Bannai-Ito families.

The four finite families are labelled by the length parity of the family
(N = 2j or N = 2j+1) and the parity of j:

    P0: N = 2j,   j even        P1: N = 2j+1, j even
    P2: N = 2j,   j odd         P3: N = 2j+1, j odd

Each family is monic and generated by x P_n = P_{n+1} + b_n P_n + u_n P_{n-1}
with b_n = (b-j-1+a)/4 - A_n - C_n and u_n = A_{n-1} C_n.  The coefficient
tables are piecewise in (parity of n, n == j or j+1); branch dispatch is kept
total and the guarded denominators are asserted unreachable.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .exactpoly import ONE, Poly, X, limit_ratio_at_zero

__all__ = [
    "FamilyCase",
    "ParamSet",
    "JacobiMatrix",
    "PositivityReport",
    "GeneralCBIParams",
    "QParaRacahParams",
    "SingularParameterError",
    "para_coeffs",
    "recurrence_a",
    "recurrence_c",
    "diagonal",
    "offdiagonal",
    "check_positivity",
    "generate_polys",
    "jacobi",
    "general_cbi_coeffs",
    "general_cbi_polys",
    "general_bi_polys",
    "general_bi_coeffs",
    "cbi_coeffs_para_limit",
    "cbi_polys_para_limit",
    "bi_polys_para_limit",
    "qpr_coeffs",
]


class SingularParameterError(ValueError):
    """A displayed denominator vanished for the requested parameters."""


class FamilyCase(enum.Enum):
    P0 = "p0"  # N = 2j, j even
    P1 = "p1"  # N = 2j+1, j even
    P2 = "p2"  # N = 2j, j odd
    P3 = "p3"  # N = 2j+1, j odd

    @property
    def j_parity(self) -> int:
        return 0 if self in (FamilyCase.P0, FamilyCase.P1) else 1

    @property
    def odd_length(self) -> bool:
        return self in (FamilyCase.P1, FamilyCase.P3)

    def n_points(self, j: int) -> int:
        return 2 * j + (2 if self.odd_length else 1)


@dataclass(frozen=True)
class ParamSet:
    """Concrete parameters (a, b, alpha, j) of one para-Bannai-Ito family."""

    a: Fraction
    b: Fraction
    alpha: Fraction
    j: int
    case: FamilyCase

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.j < 1:
            raise ValueError("j must be a positive integer")
        if self.j % 2 != self.case.j_parity:
            raise ValueError(f"j={self.j} has the wrong parity for {self.case}")
        if not (0 <= self.alpha <= 1):
            raise ValueError("alpha must lie in [0, 1]")

    @property
    def N(self) -> int:
        return 2 * self.j + (1 if self.case.odd_length else 0)

    @property
    def rho1(self) -> Fraction:
        return (self.b - self.j - 1 + self.a) / 4

    @property
    def rho2(self) -> Fraction:
        return (self.b - self.j - 1 - self.a) / 4


@dataclass(frozen=True)
class JacobiMatrix:
    """Tridiagonal recurrence data: diag b_n (n=0..N), offdiag u_n (n=1..N)."""

    diag: tuple
    offdiag: tuple

    @property
    def size(self) -> int:
        return len(self.diag)


@dataclass(frozen=True)
class PositivityReport:
    admissible: bool
    first_violation: Optional[int]
    parameter_box_ok: bool


def recurrence_a(params: ParamSet, n: int) -> Fraction:
    """Coefficient A_n of the branch table; defined for every n >= -1."""
    a, b, al, j = params.a, params.b, params.alpha, params.j
    case = params.case
    even = n % 2 == 0
    if case is FamilyCase.P0:
        if even:
            if n == j:
                return (1 - al) * a / 2
            return -(n - j - a) / 4
        assert n != j, "odd-branch denominator n-j hit"
        return -Fraction(n + 1) * (n - j - b) / (4 * (n - j))
    if case is FamilyCase.P1:
        if even:
            if n == j:
                return al * a / 2
            return (n - j + a) / 4
        assert n != j, "odd-branch denominator n-j hit"
        return Fraction(n - 2 * j - 1) * (n - j + b) / (4 * (n - j))
    if case is FamilyCase.P2:
        if even:
            assert n != j, "even-branch denominator n-j hit"
            return -(n - j - a) * (n - j - b) / (4 * (n - j))
        if n == j:
            return -(1 - al) * (j + 1) / 2
        return -Fraction(n + 1, 4)
    # P3
    if even:
        assert n != j, "even-branch denominator n-j hit"
        return (n - j + a) * (n - j + b) / (4 * (n - j))
    if n == j:
        return -al * (j + 1) / 2
    return Fraction(n - 2 * j - 1, 4)


def recurrence_c(params: ParamSet, n: int) -> Fraction:
    """Coefficient C_n of the branch table; defined for every n >= 0."""
    a, b, al, j = params.a, params.b, params.alpha, params.j
    case = params.case
    even = n % 2 == 0
    if case is FamilyCase.P0:
        if even:
            if n == j:
                return al * a / 2
            return (n - j + a) / 4
        assert n != j, "odd-branch denominator n-j hit"
        return Fraction(n - 2 * j - 1) * (n - j + b) / (4 * (n - j))
    if case is FamilyCase.P1:
        if even:
            assert n != j + 1, "even-branch denominator n-j-1 hit"
            return -Fraction(n) * (n - j - 1 - b) / (4 * (n - j - 1))
        if n == j + 1:
            return (1 - al) * a / 2
        return -(n - j - 1 - a) / 4
    if case is FamilyCase.P2:
        if even:
            assert n != j, "even-branch denominator n-j hit"
            return (n - j + a) * (n - j + b) / (4 * (n - j))
        if n == j:
            return -al * (j + 1) / 2
        return Fraction(n - 2 * j - 1, 4)
    # P3
    if even:
        if n == j + 1:
            return -(1 - al) * (j + 1) / 2
        return -Fraction(n, 4)
    assert n != j + 1, "odd-branch denominator n-j-1 hit"
    return -(n - j - 1 - a) * (n - j - 1 - b) / (4 * (n - j - 1))


def para_coeffs(params: ParamSet, n: int) -> tuple:
    """Pair (A_n, C_n) for 0 <= n <= N+1."""
    if not 0 <= n <= params.N + 1:
        raise ValueError(f"n={n} outside 0..{params.N + 1}")
    return recurrence_a(params, n), recurrence_c(params, n)


def diagonal(params: ParamSet, n: int) -> Fraction:
    a_n, c_n = para_coeffs(params, n)
    return params.rho1 - a_n - c_n


def offdiagonal(params: ParamSet, n: int) -> Fraction:
    """u_n = A_{n-1} C_n, valid for 0 <= n <= N+1."""
    if not 0 <= n <= params.N + 1:
        raise ValueError(f"n={n} outside 0..{params.N + 1}")
    return recurrence_a(params, n - 1) * recurrence_c(params, n)


def _parameter_box(params: ParamSet) -> bool:
    a, b, al, j = params.a, params.b, params.alpha, params.j
    if not 0 <= al <= 1:
        return False
    if params.case is FamilyCase.P0:
        return (a <= -j - 1 and abs(b) <= 1) or (b >= j and abs(a + 1) <= 1)
    if params.case is FamilyCase.P1:
        return abs(a) >= j + 1 and abs(b) <= 1
    if params.case is FamilyCase.P2:
        return (a <= -j and abs(b) <= 1) or (abs(a) <= 1 and b <= -j)
    return (abs(a) >= j and abs(b) <= 1) or (abs(a) <= 1 and abs(b) >= j)


def check_positivity(params: ParamSet) -> PositivityReport:
    """Admissible iff u_n > 0 for 1 <= n <= N, checked directly."""
    first = None
    for n in range(1, params.N + 1):
        if offdiagonal(params, n) <= 0:
            first = n
            break
    return PositivityReport(
        admissible=first is None,
        first_violation=first,
        parameter_box_ok=_parameter_box(params),
    )


def generate_polys(params: ParamSet, up_to: Optional[int] = None) -> list:
    """Monic P_0 .. P_{up_to} from the three-term recurrence."""
    if up_to is None:
        up_to = params.N + 1
    if not 0 <= up_to <= params.N + 1:
        raise ValueError(f"up_to={up_to} outside 0..{params.N + 1}")
    polys = [ONE]
    prev: Poly = Poly()
    for n in range(up_to):
        b_n = diagonal(params, n)
        u_n = offdiagonal(params, n)
        nxt = (X - b_n) * polys[-1] - u_n * prev
        prev = polys[-1]
        polys.append(nxt)
    return polys


def jacobi(params: ParamSet) -> JacobiMatrix:
    return JacobiMatrix(
        diag=tuple(diagonal(params, n) for n in range(params.N + 1)),
        offdiag=tuple(offdiagonal(params, n) for n in range(1, params.N + 1)),
    )


# --- general (untruncated) complementary Bannai-Ito and Bannai-Ito ---


@dataclass(frozen=True)
class GeneralCBIParams:
    rho1: Fraction
    rho2: Fraction
    r1: Fraction
    r2: Fraction

    def __post_init__(self):
        for name in ("rho1", "rho2", "r1", "r2"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def g(self) -> Fraction:
        return self.rho1 + self.rho2 - self.r1 - self.r2


def general_cbi_coeffs(p: GeneralCBIParams, n: int) -> tuple:
    """Pair (A_n, C_n) of the general complementary Bannai-Ito recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    den = 4 * (n + p.g + 1)
    if den == 0:
        raise SingularParameterError(f"denominator n+g+1 vanishes at n={n}")
    if n % 2 == 0:
        a_n = -(n + 2 * p.rho2 - 2 * p.r2 + 1) * (n + 2 * p.rho2 - 2 * p.r1 + 1) / den
        c_n = (n + 2 * p.rho1 - 2 * p.r1 + 1) * (n + 2 * p.rho1 - 2 * p.r2 + 1) / den
    else:
        a_n = -(n + 1) * (n - 2 * p.r1 - 2 * p.r2 + 1) / den
        c_n = (n + 2 * p.g + 1) * (n + 2 * p.rho1 + 2 * p.rho2 + 1) / den
    return a_n, c_n


def general_cbi_polys(p: GeneralCBIParams, up_to: int) -> list:
    """Monic I_0 .. I_{up_to} from the CBI recurrence."""
    polys = [ONE]
    prev: Poly = Poly()
    a_prev = Fraction(0)  # A_{-1} C_0 = 0 by convention (u_0 vanishes)
    for n in range(up_to):
        a_n, c_n = general_cbi_coeffs(p, n)
        b_n = p.rho1 - a_n - c_n
        u_n = a_prev * c_n
        nxt = (X - b_n) * polys[-1] - u_n * prev
        prev = polys[-1]
        polys.append(nxt)
        a_prev = a_n
    return polys


def general_bi_polys(p: GeneralCBIParams, up_to: int) -> list:
    """Monic B_n = I_n - A_{n-1} I_{n-1} (Geronimus transformation)."""
    cbi = general_cbi_polys(p, up_to)
    out = [ONE]
    for n in range(1, up_to + 1):
        a_prev, _ = general_cbi_coeffs(p, n - 1)
        out.append(cbi[n] - a_prev * cbi[n - 1])
    return out


def general_bi_coeffs(p: GeneralCBIParams, n: int) -> tuple:
    """Diagonal and off-diagonal of the general Bannai-Ito recurrence.

    Returns (b_n, u_n) with b_n = rho1 - A_{n-1} - C_n and u_n = A_{n-1} C_{n-1}.
    """
    a_prev = Fraction(0) if n == 0 else general_cbi_coeffs(p, n - 1)[0]
    c_prev = Fraction(0) if n == 0 else general_cbi_coeffs(p, n - 1)[1]
    c_n = general_cbi_coeffs(p, n)[1]
    return p.rho1 - a_prev - c_n, a_prev * c_prev


# --- para truncation of the general CBI as an exact t -> 0 limit ---


def _cbi_coeffs_poly_t(p: GeneralCBIParams, e1: Fraction, e2: Fraction, n: int):
    """CBI coefficients with r1 -> r1 - e1 t, r2 -> r2 - e2 t, as ratios of
    polynomials in t."""
    e1, e2 = Fraction(e1), Fraction(e2)
    r1 = Poly([p.r1, -e1])
    r2 = Poly([p.r2, -e2])
    g = Poly([p.rho1 + p.rho2]) - r1 - r2
    den = 4 * (g + (n + 1))
    if n % 2 == 0:
        a_num = -((2 * p.rho2 + n + 1) - 2 * r2) * ((2 * p.rho2 + n + 1) - 2 * r1)
        c_num = ((2 * p.rho1 + n + 1) - 2 * r1) * ((2 * p.rho1 + n + 1) - 2 * r2)
    else:
        a_num = Poly([-(n + 1)]) * ((n + 1) - 2 * r1 - 2 * r2)
        c_num = (2 * g + (n + 1)) * Poly([n + 2 * p.rho1 + 2 * p.rho2 + 1])
    return a_num, c_num, den


def cbi_coeffs_para_limit(p: GeneralCBIParams, e1, e2, n: int) -> tuple:
    """Exact t->0 limit of the CBI coefficients under the para perturbation.

    At the truncation locus the plain formulas are 0/0; the limit resolves
    them and depends on the direction (e1, e2) only through e1/(e1+e2).
    """
    a_num, c_num, den = _cbi_coeffs_poly_t(p, e1, e2, n)
    try:
        return limit_ratio_at_zero(a_num, den), limit_ratio_at_zero(c_num, den)
    except ZeroDivisionError as exc:
        raise SingularParameterError(f"CBI coefficient diverges at n={n}") from exc


def cbi_polys_para_limit(p: GeneralCBIParams, e1, e2, up_to: int) -> list:
    """Monic I_n generated with the limit-resolved coefficients."""
    polys = [ONE]
    prev: Poly = Poly()
    a_prev = Fraction(0)
    for n in range(up_to):
        a_n, c_n = cbi_coeffs_para_limit(p, e1, e2, n)
        b_n = p.rho1 - a_n - c_n
        u_n = a_prev * c_n
        nxt = (X - b_n) * polys[-1] - u_n * prev
        prev = polys[-1]
        polys.append(nxt)
        a_prev = a_n
    return polys


def bi_polys_para_limit(p: GeneralCBIParams, e1, e2, up_to: int) -> list:
    """Monic B_n = I_n - A_{n-1} I_{n-1} with limit-resolved coefficients."""
    cbi = cbi_polys_para_limit(p, e1, e2, up_to)
    out = [ONE]
    for n in range(1, up_to + 1):
        a_prev, _ = cbi_coeffs_para_limit(p, e1, e2, n - 1)
        out.append(cbi[n] - a_prev * cbi[n - 1])
    return out


# --- q-para-Racah recurrence coefficients (inexact by design) ---


@dataclass(frozen=True)
class QParaRacahParams:
    c: complex
    d: complex
    alpha: float
    j: int
    q: complex
    tol: float = field(default=1e-12)


def _check_den(value: complex, tol: float, label: str) -> complex:
    if abs(value) < tol:
        raise SingularParameterError(f"q-para-Racah denominator {label} ~ 0")
    return value


def qpr_coeffs(p: QParaRacahParams, n: int) -> tuple:
    """Complex pair (A_n^R, C_n^R) of the q-para-Racah recurrence (N = 2j+1)."""
    c, d, q, j, al = p.c, p.d, p.q, p.j, p.alpha
    cd = c * d
    if n == j:
        den = _check_den(2 * cd * (1 - q ** -1), p.tol, "(1-1/q)")
        a_n = al * (1 - cd * q ** j) * (d - c) * (1 - q ** (-j - 1)) / den
    else:
        den = _check_den(
            2 * cd * (1 - q ** (2 * n - 2 * j - 1)) * (1 + q ** (n - j)),
            p.tol,
            "(1-q^(2n-2j-1))(1+q^(n-j))",
        )
        a_n = (1 - cd * q ** n) * (d - c * q ** (n - j)) * (1 - q ** (n - 2 * j - 1)) / den
    if n == j + 1:
        den = _check_den(2 * cd * (1 - q), p.tol, "(1-q)")
        c_n = (1 - al) * (1 - q ** (j + 1)) * (c - d) * (cd - q ** -j) / den
    else:
        den = _check_den(
            2 * cd * (1 + q ** (n - j - 1)) * (1 - q ** (2 * n - 2 * j - 1)),
            p.tol,
            "(1+q^(n-j-1))(1-q^(2n-2j-1))",
        )
        c_n = (1 - q ** n) * (c - d * q ** (n - j - 1)) * (cd - q ** (n - 2 * j - 1)) / den
    return a_n, c_n


def qpr_from_para(target: ParamSet, eps: float) -> QParaRacahParams:
    """q-para-Racah parameters flowing to the given para family as eps -> 0."""
    a, b, j = float(target.a), float(target.b), target.j
    return QParaRacahParams(
        c=1j * cmath.exp(eps * (a + b - j) / 2),
        d=1j * cmath.exp(eps * (-a + b - j) / 2),
        alpha=float(target.alpha),
        j=j,
        q=-cmath.exp(eps),
    )
