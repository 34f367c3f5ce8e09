"""q -> -1 limit from q-para-Racah, and exact special-case reductions.

The limit study is the only deliberately inexact computation in the
package: scaled q-para-Racah recurrence data is compared against the
exact family data in double precision, with first-order convergence in
the deformation scale.  All reductions (general CBI/BI identification,
Krawtchouk, lattice spacings) are exact polynomial identities.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .exactpoly import ONE, Poly, X
from .families import (
    FamilyCase,
    GeneralCBIParams,
    ParamSet,
    bi_polys_para_limit,
    cbi_polys_para_limit,
    diagonal,
    generate_polys,
    offdiagonal,
    qpr_coeffs,
    qpr_from_para,
)
from .spectra import grid

__all__ = [
    "LimitStudy",
    "qpr_scaled_coeffs",
    "limit_study",
    "reduction_general_cbi",
    "krawtchouk_monic",
    "reduction_krawtchouk",
    "LatticeSpacings",
    "lattice_spacings",
]


def qpr_scaled_coeffs(
    target: ParamSet, eps: float, n: int
) -> Tuple[complex, complex]:
    """Scaled q-para-Racah recurrence data (diag_n, u_n) at deformation eps.

    Converges to the exact recurrence data of the target family (case P1)
    at first order in eps; the imaginary parts are O(eps) residuals.
    """
    if target.case is not FamilyCase.P1:
        raise ValueError("the displayed correspondence targets case P1")
    if not 0 <= n <= target.N:
        raise ValueError(f"n={n} outside 0..{target.N}")
    p = qpr_from_para(target, eps)
    scale = 2j * eps
    a_n, c_n = qpr_coeffs(p, n)
    diag = (p.c + 1 / p.c) / (2 * scale) - 0.25 - (a_n + c_n) / scale
    if n == 0:
        return diag, complex(0)
    a_prev, _ = qpr_coeffs(p, n - 1)
    return diag, (a_prev / scale) * (c_n / scale)


@dataclass(frozen=True)
class LimitStudy:
    target: ParamSet
    epsilons: Tuple[float, ...]
    max_dev_diag: Tuple[float, ...]
    max_dev_offdiag: Tuple[float, ...]
    max_imag: Tuple[float, ...]

    @property
    def fitted_order(self) -> Optional[float]:
        """Log-log slope of the max deviation against eps."""
        if len(self.epsilons) < 2:
            return None
        devs = [max(d, u) for d, u in zip(self.max_dev_diag, self.max_dev_offdiag)]
        xs = [math.log(e) for e in self.epsilons]
        ys = [math.log(d) for d in devs]
        n = len(xs)
        sx, sy = sum(xs), sum(ys)
        sxx = sum(x * x for x in xs)
        sxy = sum(x * y for x, y in zip(xs, ys))
        return (n * sxy - sx * sy) / (n * sxx - sx * sx)


def limit_study(target: ParamSet, epsilons: Sequence[float]) -> LimitStudy:
    """Per-eps deviation of scaled q-para-Racah data from the exact family."""
    exact_diag = [float(diagonal(target, n)) for n in range(target.N + 1)]
    exact_u = [float(offdiagonal(target, n)) for n in range(1, target.N + 1)]
    dev_d, dev_u, dev_i = [], [], []
    for eps in epsilons:
        dd = du = di = 0.0
        for n in range(target.N + 1):
            diag, u_n = qpr_scaled_coeffs(target, eps, n)
            dd = max(dd, abs(diag.real - exact_diag[n]))
            di = max(di, abs(diag.imag), abs(u_n.imag))
            if n >= 1:
                du = max(du, abs(u_n.real - exact_u[n - 1]))
        dev_d.append(dd)
        dev_u.append(du)
        dev_i.append(di)
    return LimitStudy(
        target=target,
        epsilons=tuple(epsilons),
        max_dev_diag=tuple(dev_d),
        max_dev_offdiag=tuple(dev_u),
        max_imag=tuple(dev_i),
    )


def _single_lattice_cbi_params(j: int, a: Fraction) -> GeneralCBIParams:
    return GeneralCBIParams(
        rho1=-(j + 1 - a) / 4,
        rho2=-(j + 1 + a) / 4,
        r1=(j + 1 - a) / 4,
        r2=(j + 1 + a) / 4,
    )


def reduction_general_cbi(params: ParamSet) -> bool:
    """Identify the b=0, alpha=1/2 families with general CBI / BI.

    The CBI parameters sit on the truncation locus, so the CBI recurrence
    coefficients are produced by the exact symmetric-direction limit; the
    identity is then checked as exact polynomial equality for n <= N+1
    (P0 against the CBI chain, P1 against its Geronimus transform).
    """
    if params.b != 0 or params.alpha != Fraction(1, 2):
        raise ValueError("the identification holds at b=0, alpha=1/2")
    if params.case not in (FamilyCase.P0, FamilyCase.P1):
        raise ValueError("the identification is displayed for j even")
    cbi = _single_lattice_cbi_params(params.j, params.a)
    up_to = 2 * params.j + 1
    if params.case is FamilyCase.P0:
        lhs = generate_polys(params, up_to)
        rhs = cbi_polys_para_limit(cbi, 1, 1, up_to)
    else:
        lhs = generate_polys(params, params.N)
        rhs = bi_polys_para_limit(cbi, 1, 1, params.N)
    return all(l == r for l, r in zip(lhs, rhs))


def krawtchouk_monic(n: int, p: Fraction, big_n: int) -> Poly:
    """Monic Krawtchouk polynomial K_n(x; p, N) from its recurrence."""
    if not 0 <= n <= big_n:
        raise ValueError(f"n={n} outside 0..{big_n}")
    p = Fraction(p)
    if not 0 < p < 1:
        raise ValueError("p must lie in (0, 1)")
    prev: Poly = Poly()
    cur = ONE
    for k in range(n):
        b_k = p * (big_n - k) + k * (1 - p)
        u_k = k * p * (1 - p) * (big_n - k + 1)
        cur, prev = (X - b_k) * cur - u_k * prev, cur
    return cur


def reduction_krawtchouk(params: ParamSet) -> bool:
    """P_n = 2^-n K_n(2x + j (+1); 1/2, N) at a=-j-1, b=0, alpha=1/2.

    Also checks that the doubled grid collapses to the integer lattice
    {-j..j} (resp. its odd-length analogue) as a set.
    """
    j = params.j
    if params.a != -(j + 1) or params.b != 0 or params.alpha != Fraction(1, 2):
        raise ValueError("the identification holds at a=-j-1, b=0, alpha=1/2")
    if params.case not in (FamilyCase.P0, FamilyCase.P1):
        raise ValueError("the identification is displayed for j even")
    shift = j if params.case is FamilyCase.P0 else j + 1
    inner = 2 * X + shift
    polys = generate_polys(params, params.N)
    for n in range(params.N + 1):
        kr = krawtchouk_monic(n, Fraction(1, 2), params.N)
        if polys[n] != Fraction(1, 2 ** n) * kr.compose(inner):
            return False
    doubled = {2 * x + shift for x in grid(params)}
    return doubled == {Fraction(k) for k in range(params.N + 1)}


@dataclass(frozen=True)
class LatticeSpacings:
    d1: Fraction
    d2: Fraction
    d3: Fraction
    d4: Fraction
    endpoint: Fraction
    matches_closed_forms: bool


def lattice_spacings(params: ParamSet) -> LatticeSpacings:
    """Measured grid gaps against the closed forms for a = -(c+j+1), c > 0.

    d1/d2 are the gaps from zero to the nearest negative/positive point;
    d3 and d4 alternate along each side.  Requires case P0 in the
    depicted parameter regime.
    """
    if params.case is not FamilyCase.P0:
        raise ValueError("the depicted regime is case P0")
    c = -params.a - params.j - 1
    b = params.b
    if c < 0 or abs(b) > 1:
        raise ValueError("parameters outside the depicted regime")
    d1 = (c + 2 - b) / 4
    d2 = (b + c) / 4
    d3 = (1 + b) / 2
    d4 = (1 - b) / 2
    pts = sorted(grid(params).points)
    endpoint = (2 * params.j + b + c) / 4
    ok = pts[0] == -endpoint and pts[-1] == endpoint
    neg = [x for x in pts if x < 0]
    pos = [x for x in pts if x > 0]
    zero_present = any(x == 0 for x in pts)
    if not zero_present:
        ok = ok and (pos and pos[0] == d2) and (neg and -neg[-1] == d1)
    # gaps outward from zero: negative side starts with d3, positive with d4
    neg_gaps = [abs(neg[i + 1] - neg[i]) for i in range(len(neg) - 1)][::-1]
    pos_gaps = [pos[i + 1] - pos[i] for i in range(len(pos) - 1)]
    for i, gap in enumerate(neg_gaps):
        ok = ok and gap == (d3 if i % 2 == 0 else d4)
    for i, gap in enumerate(pos_gaps):
        ok = ok and gap == (d4 if i % 2 == 0 else d3)
    return LatticeSpacings(d1, d2, d3, d4, endpoint, ok)
