from fractions import Fraction

import pytest

from parabi import (
    FamilyCase,
    Grid,
    ParamSet,
    char_poly_product,
    generate_polys,
    grid,
    grid_char_poly,
    h2_closed,
    norms,
    persymmetry_check,
    spectral_data,
    verify_orthogonality,
    weights_closed,
    weights_direct,
)

HALF = Fraction(1, 2)


def test_grid_example():
    p = ParamSet(Fraction(-4), Fraction(0), HALF, 2, FamilyCase.P0)
    assert grid(p).points == (
        Fraction(5, 4),
        Fraction(-3, 4),
        Fraction(-5, 4),
        Fraction(3, 4),
        Fraction(1, 4),
    )


def test_grid_rejects_duplicates():
    with pytest.raises(ValueError):
        Grid((Fraction(1), Fraction(1)))


def test_grid_size_and_quadri_lattice(instance):
    g = grid(instance)
    assert len(g) == instance.N + 1
    rows = g.quadri_lattice()
    assert sum(len(r) for r in rows) == len(g)
    for row in rows:  # each congruence class is an arithmetic progression
        diffs = {b - a for a, b in zip(row, row[1:])}
        assert len(diffs) <= 1


def test_top_poly_vanishes_on_grid(instance):
    top = generate_polys(instance, instance.N + 1)[instance.N + 1]
    assert all(top(x) == 0 for x in grid(instance))
    assert grid_char_poly(instance) == top


def test_saalschutz_product():
    for j, a, b in ((2, Fraction(-4), Fraction(0)), (4, Fraction(-6), HALF)):
        p = ParamSet(a, b, Fraction(1, 3), j, FamilyCase.P0)
        assert char_poly_product(p) == generate_polys(p, p.N + 1)[p.N + 1]


def test_orthogonality(instance):
    report = verify_orthogonality(instance)
    assert all(report.values())


def test_weight_sums(instance):
    w = weights_direct(instance)
    assert all(v > 0 for v in w)
    assert sum(w[0::2], Fraction(0)) == instance.alpha
    assert sum(w[1::2], Fraction(0)) == 1 - instance.alpha


def test_deformation_ratio(instance):
    w = weights_direct(instance)
    half = ParamSet(instance.a, instance.b, HALF, instance.j, instance.case)
    w_half = weights_direct(half)
    for s, (v, v_half) in enumerate(zip(w, w_half)):
        factor = 2 * instance.alpha if s % 2 == 0 else 2 * (1 - instance.alpha)
        assert v == factor * v_half


def test_closed_weights_squares_and_signs(instance):
    w = weights_direct(instance)
    cw = weights_closed(instance)
    assert cw.squares() == tuple(v * v for v in w)
    assert cw.signs() == tuple(1 for _ in w)


def test_h2_closed_matches_products(instance):
    _, h2 = norms(instance)
    for n in range(instance.N + 1):
        assert h2_closed(instance, n) == h2[n]


def test_persymmetry_at_half():
    for case, j, a, b in (
        (FamilyCase.P0, 2, Fraction(-4), Fraction(0)),
        (FamilyCase.P1, 2, Fraction(-4), Fraction(0)),
        (FamilyCase.P2, 3, Fraction(-4), HALF),
        (FamilyCase.P3, 3, Fraction(-5), HALF),
    ):
        p = ParamSet(a, b, HALF, j, case)
        assert persymmetry_check(p)


def test_persymmetry_requires_half():
    p = ParamSet(Fraction(-4), Fraction(0), Fraction(1, 3), 2, FamilyCase.P0)
    with pytest.raises(ValueError):
        persymmetry_check(p)


def test_spectral_data_serialization():
    p = ParamSet(Fraction(-4), Fraction(0), HALF, 2, FamilyCase.P0)
    data = spectral_data(p)
    payload = data.to_jsonable()
    assert payload["grid"] == ["5/4", "-3/4", "-5/4", "3/4", "1/4"]
    assert payload["weights"] == ["1/10", "1/6", "1/15", "1/3", "1/3"]
    assert all(isinstance(v, str) for key in payload for v in payload[key])
    assert "5/4" in data.to_json()
