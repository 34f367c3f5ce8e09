from fractions import Fraction

import numpy as np
import pytest

from parabi import (
    FamilyCase,
    GeneralCBIParams,
    ParamSet,
    SingularParameterError,
    bi_polys_para_limit,
    cbi_coeffs_para_limit,
    cbi_polys_para_limit,
    check_positivity,
    diagonal,
    general_bi_polys,
    general_cbi_coeffs,
    general_cbi_polys,
    generate_polys,
    grid,
    jacobi,
    offdiagonal,
    recurrence_a,
    recurrence_c,
)

HALF = Fraction(1, 2)


def test_parity_validation():
    with pytest.raises(ValueError):
        ParamSet(Fraction(-4), Fraction(0), HALF, 3, FamilyCase.P0)
    with pytest.raises(ValueError):
        ParamSet(Fraction(-4), Fraction(0), HALF, 2, FamilyCase.P2)
    with pytest.raises(ValueError):
        ParamSet(Fraction(-4), Fraction(0), Fraction(3, 2), 2, FamilyCase.P0)


def test_coefficient_examples_even_length():
    p = ParamSet(Fraction(-4), Fraction(0), HALF, 2, FamilyCase.P0)
    assert recurrence_a(p, 0) == Fraction(-1, 2)
    assert recurrence_c(p, 0) == Fraction(-3, 2)
    assert recurrence_a(p, p.j) == (1 - p.alpha) * p.a / 2
    assert recurrence_c(p, p.j) == p.alpha * p.a / 2


def test_truncation_endpoints(instance):
    # u_0 = A_{-1} C_0 and u_{N+1} = A_N C_{N+1} must vanish exactly
    assert offdiagonal(instance, 0) == 0
    assert offdiagonal(instance, instance.N + 1) == 0


def test_odd_length_tables_shift_the_even_ones():
    # A_n (odd length) = C_n (even length), C_n (odd length) = A_{n-1} (even)
    p1 = ParamSet(Fraction(-4), Fraction(0), Fraction(1, 3), 2, FamilyCase.P1)
    p0 = ParamSet(Fraction(-4), Fraction(0), Fraction(1, 3), 2, FamilyCase.P0)
    p3 = ParamSet(Fraction(-5), Fraction(1, 2), Fraction(2, 5), 3, FamilyCase.P3)
    p2 = ParamSet(Fraction(-5), Fraction(1, 2), Fraction(2, 5), 3, FamilyCase.P2)
    for odd, even in ((p1, p0), (p3, p2)):
        for n in range(odd.N + 1):
            assert recurrence_a(odd, n) == recurrence_c(even, n)
            assert recurrence_c(odd, n) == recurrence_a(even, n - 1)


def test_mirror_symmetry_at_half(instance):
    p = ParamSet(instance.a, instance.b, HALF, instance.j, instance.case)
    N = p.N
    for n in range(N + 1):
        assert diagonal(p, n) == diagonal(p, N - n)
    for n in range(1, N + 1):
        assert offdiagonal(p, n) == offdiagonal(p, N + 1 - n)


def test_polys_are_monic_of_correct_degree(instance):
    polys = generate_polys(instance, instance.N + 1)
    for n, p in enumerate(polys):
        assert p.degree == n
        assert p.leading == 1


def test_positivity(instance):
    report = check_positivity(instance)
    assert report.admissible
    assert report.first_violation is None
    assert report.parameter_box_ok


@pytest.mark.parametrize("alpha", [Fraction(0), Fraction(1)])
def test_endpoint_alpha_rejected(alpha):
    p = ParamSet(Fraction(-4), Fraction(0), alpha, 2, FamilyCase.P0)
    assert not check_positivity(p).admissible


def test_a_zero_rejected():
    p = ParamSet(Fraction(0), Fraction(0), HALF, 2, FamilyCase.P0)
    assert not check_positivity(p).admissible


@pytest.mark.parametrize(
    "case,j,a",
    [
        (FamilyCase.P0, 2, Fraction(-4)),
        (FamilyCase.P1, 2, Fraction(-4)),
        (FamilyCase.P2, 3, Fraction(-4)),
        (FamilyCase.P3, 3, Fraction(-5)),
        (FamilyCase.P0, 4, Fraction(-6)),
        (FamilyCase.P3, 5, Fraction(-8)),
    ],
)
def test_jacobi_spectrum_matches_grid(case, j, a):
    p = ParamSet(a, Fraction(1, 2), Fraction(1, 3), j, case)
    m = jacobi(p)
    diag = np.array([float(v) for v in m.diag])
    off = np.sqrt(np.array([float(v) for v in m.offdiag]))
    eigs = np.linalg.eigvalsh(np.diag(diag) + np.diag(off, 1) + np.diag(off, -1))
    expected = np.array([float(x) for x in grid(p).increasing()])
    assert np.max(np.abs(np.sort(eigs) - expected)) < 1e-10


def test_geronimus_combination(instance):
    if not instance.case.odd_length:
        pytest.skip("even-length family")
    base_case = FamilyCase.P0 if instance.j % 2 == 0 else FamilyCase.P2
    base = ParamSet(instance.a, instance.b, instance.alpha, instance.j, base_case)
    odd_polys = generate_polys(instance, instance.N)
    base_polys = generate_polys(base, base.N + 1)
    for n in range(1, instance.N + 1):
        c_n = recurrence_c(instance, n)
        assert odd_polys[n] == base_polys[n] - c_n * base_polys[n - 1]


# --- general (untruncated) families ---------------------------------------


GENERIC_CBI = GeneralCBIParams(
    Fraction(1, 3), Fraction(2, 5), Fraction(1, 7), Fraction(3, 4)
)


def test_general_cbi_polys_monic():
    polys = general_cbi_polys(GENERIC_CBI, 6)
    for n, p in enumerate(polys):
        assert p.degree == n and p.leading == 1


def test_general_bi_is_geronimus_of_cbi():
    cbi = general_cbi_polys(GENERIC_CBI, 6)
    bi = general_bi_polys(GENERIC_CBI, 6)
    for n in range(1, 7):
        a_prev, _ = general_cbi_coeffs(GENERIC_CBI, n - 1)
        assert bi[n] == cbi[n] - a_prev * cbi[n - 1]


def test_cbi_singular_truncation_locus():
    # g = -(j+1) makes the n=j coefficient denominator vanish
    j, a = 2, Fraction(-4)
    p = GeneralCBIParams(
        -(j + 1 - a) / 4, -(j + 1 + a) / 4, (j + 1 - a) / 4, (j + 1 + a) / 4
    )
    assert p.g == -(j + 1)
    with pytest.raises(SingularParameterError):
        general_cbi_coeffs(p, j)


def test_para_limit_matches_plain_coeffs_off_locus():
    for n in range(5):
        plain = general_cbi_coeffs(GENERIC_CBI, n)
        limited = cbi_coeffs_para_limit(GENERIC_CBI, 1, 1, n)
        assert plain == limited


def test_para_limit_direction_independent_symmetric():
    j, a = 2, Fraction(-4)
    p = GeneralCBIParams(
        -(j + 1 - a) / 4, -(j + 1 + a) / 4, (j + 1 - a) / 4, (j + 1 + a) / 4
    )
    one = cbi_polys_para_limit(p, 1, 1, 2 * j + 1)
    other = cbi_polys_para_limit(p, 7, 7, 2 * j + 1)
    assert one == other
    assert bi_polys_para_limit(p, 1, 1, 2 * j + 1) == bi_polys_para_limit(
        p, 3, 3, 2 * j + 1
    )
