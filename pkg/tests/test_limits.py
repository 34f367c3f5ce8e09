import math
from fractions import Fraction

import pytest

from parabi import (
    FamilyCase,
    ParamSet,
    grid,
    krawtchouk_monic,
    lattice_spacings,
    limit_study,
    qpr_scaled_coeffs,
    reduction_general_cbi,
    reduction_krawtchouk,
)

HALF = Fraction(1, 2)

TARGET = ParamSet(Fraction(-4), Fraction(0), HALF, 2, FamilyCase.P1)


def test_limit_deviations_vanish():
    study = limit_study(TARGET, [1e-2, 1e-3, 1e-4])
    devs = [
        max(d, u) for d, u in zip(study.max_dev_diag, study.max_dev_offdiag)
    ]
    # strictly decreasing, and at least first-order decay per decade
    assert devs[0] > devs[1] > devs[2]
    assert devs[1] <= devs[0] / (10 / 3)
    assert devs[2] <= devs[1] / (10 / 3)
    for eps, imag in zip(study.epsilons, study.max_imag):
        assert imag <= 10 * eps


def test_limit_observed_order_is_two():
    # the scaled data is even in the deformation scale, so convergence is
    # one order faster than generic
    study = limit_study(TARGET, [1e-2, 1e-3, 1e-4])
    assert study.fitted_order == pytest.approx(2.0, abs=0.3)


def test_limit_generic_alpha():
    target = ParamSet(Fraction(-4), Fraction(0), Fraction(1, 3), 2, FamilyCase.P1)
    study = limit_study(target, [1e-3, 1e-4])
    assert max(study.max_dev_diag[-1], study.max_dev_offdiag[-1]) < 1e-6


def test_qpr_scaled_coeffs_shape():
    diag, u0 = qpr_scaled_coeffs(TARGET, 1e-3, 0)
    assert u0 == 0
    assert isinstance(diag, complex)
    with pytest.raises(ValueError):
        qpr_scaled_coeffs(TARGET, 1e-3, TARGET.N + 1)
    p0 = ParamSet(Fraction(-4), Fraction(0), HALF, 2, FamilyCase.P0)
    with pytest.raises(ValueError):
        qpr_scaled_coeffs(p0, 1e-3, 0)


@pytest.mark.parametrize("case", [FamilyCase.P0, FamilyCase.P1])
@pytest.mark.parametrize("j", [2, 4])
def test_reduction_general_cbi(case, j):
    p = ParamSet(Fraction(-j - 2), Fraction(0), HALF, j, case)
    assert reduction_general_cbi(p)


def test_reduction_general_cbi_requires_locus():
    p = ParamSet(Fraction(-4), HALF, HALF, 2, FamilyCase.P0)
    with pytest.raises(ValueError):
        reduction_general_cbi(p)


@pytest.mark.parametrize("case", [FamilyCase.P0, FamilyCase.P1])
@pytest.mark.parametrize("j", [2, 4])
def test_reduction_krawtchouk(case, j):
    p = ParamSet(Fraction(-j - 1), Fraction(0), HALF, j, case)
    assert reduction_krawtchouk(p)


@pytest.mark.parametrize("p_succ", [HALF, Fraction(1, 3)])
@pytest.mark.parametrize("big_n", [3, 5, 6])
def test_krawtchouk_binomial_orthogonality(p_succ, big_n):
    polys = [krawtchouk_monic(n, p_succ, big_n) for n in range(big_n + 1)]
    weights = [
        math.comb(big_n, x) * p_succ ** x * (1 - p_succ) ** (big_n - x)
        for x in range(big_n + 1)
    ]
    norms = [Fraction(1)]
    for k in range(1, big_n + 1):
        norms.append(norms[-1] * k * p_succ * (1 - p_succ) * (big_n - k + 1))
    for n in range(big_n + 1):
        for m in range(n, big_n + 1):
            total = sum(
                w * polys[n](x) * polys[m](x)
                for x, w in enumerate(weights)
            )
            assert total == (norms[n] if n == m else 0)


def test_lattice_spacings_example():
    # a = -(c+j+1) with j=2, c=2, b=1/2
    p = ParamSet(Fraction(-5), HALF, HALF, 2, FamilyCase.P0)
    sp = lattice_spacings(p)
    assert (sp.d1, sp.d2, sp.d3, sp.d4) == (
        Fraction(7, 8),
        Fraction(5, 8),
        Fraction(3, 4),
        Fraction(1, 4),
    )
    assert sp.endpoint == Fraction(13, 8)
    assert sp.matches_closed_forms


def test_lattice_spacings_reductions():
    # b = 0 collapses d3 = d4; then c = 0 gives a uniform linear lattice
    b0 = lattice_spacings(ParamSet(Fraction(-5), Fraction(0), HALF, 2, FamilyCase.P0))
    assert b0.d3 == b0.d4 == HALF
    assert b0.matches_closed_forms
    uniform = ParamSet(Fraction(-3), Fraction(0), HALF, 2, FamilyCase.P0)
    b0c0 = lattice_spacings(uniform)
    assert b0c0.d1 == b0c0.d3 == b0c0.d4 == HALF
    assert b0c0.matches_closed_forms
    g = sorted(grid(uniform).points)
    assert {y - x for x, y in zip(g, g[1:])} == {HALF}
