from fractions import Fraction

import pytest

from parabi import FamilyCase, ParamSet

# Admissible reference instances, one per family case plus a larger even one.
REFERENCE_INSTANCES = [
    ParamSet(Fraction(-4), Fraction(0), Fraction(1, 2), 2, FamilyCase.P0),
    ParamSet(Fraction(-6), Fraction(1, 2), Fraction(1, 3), 4, FamilyCase.P0),
    ParamSet(Fraction(-4), Fraction(0), Fraction(1, 3), 2, FamilyCase.P1),
    ParamSet(Fraction(-4), Fraction(1, 2), Fraction(1, 2), 3, FamilyCase.P2),
    ParamSet(Fraction(-5), Fraction(1, 2), Fraction(2, 5), 3, FamilyCase.P3),
]


@pytest.fixture(params=REFERENCE_INSTANCES, ids=lambda p: f"{p.case.value}-j{p.j}")
def instance(request):
    return request.param
