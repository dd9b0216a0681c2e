from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from autmap.elliptic import (
    CURVE_37A1,
    INFINITY,
    P_37A1,
    Curve,
    ECPoint,
    add,
    infinite_order_sanity,
    multiples_table,
    neg,
    on_curve,
    scalar_mul,
)
from autmap.errors import PointNotOnCurve, PreconditionError, SingularCurve

E = CURVE_37A1
P = P_37A1
SMALL = [scalar_mul(k, P, E) for k in range(-6, 7)]


def test_curve_coefficients_and_discriminant():
    assert E.coefficients() == (0, 0, 1, -1, 0)
    assert E.discriminant() == 37
    with pytest.raises(SingularCurve):
        Curve(0, 0, 0, 0, 0)


def test_on_curve_examples():
    assert on_curve(ECPoint(0, 0), E)
    assert on_curve(ECPoint(1, 0), E)
    assert not on_curve(ECPoint(1, 1), E)
    assert on_curve(INFINITY, E)


def test_group_law_examples():
    assert add(P, INFINITY, E) == P
    # tangent at (0, 0) has slope -1 and meets the curve again at (1, -1)
    assert add(P, P, E) == ECPoint(1, 0)
    # chord y = 0 through (0, 0), (1, 0) meets the curve again at (-1, 0)
    assert add(P, ECPoint(1, 0), E) == ECPoint(-1, -1)
    assert scalar_mul(3, P, E) == ECPoint(-1, -1)


def test_negation_formula():
    assert neg(ECPoint(1, 0), E) == ECPoint(1, -1)
    assert add(ECPoint(1, 0), ECPoint(1, -1), E) == INFINITY


def test_off_curve_rejected():
    with pytest.raises(PointNotOnCurve):
        add(ECPoint(1, 1), P, E)


def test_multiples_table():
    table = multiples_table(P, 10, E)
    assert table[0] == INFINITY and table[1] == P and table[2] == ECPoint(1, 0)
    for k in range(-10, 10):
        assert add(table[k], P, E) == table[k + 1]
        assert table[-k] == neg(table[k], E)
    assert all(on_curve(pt, E) for pt in table.values())


def test_infinite_order_sanity():
    assert infinite_order_sanity(P, E)
    E2 = Curve(0, 0, 0, 1, 0)  # y^2 = x^3 + x
    assert add(ECPoint(0, 0), ECPoint(0, 0), E2) == INFINITY
    assert not infinite_order_sanity(ECPoint(0, 0), E2)
    with pytest.raises(PreconditionError):
        infinite_order_sanity(INFINITY, E)


def test_order_six_point():
    # on y^2 = x^3 + 1: 2(2, 3) = (0, 1), 3(2, 3) = (-1, 0), which is 2-torsion
    E6 = Curve(0, 0, 0, 0, 1)
    Q = ECPoint(2, 3)
    assert scalar_mul(2, Q, E6) == ECPoint(0, 1)
    assert scalar_mul(3, Q, E6) == ECPoint(-1, 0)
    assert scalar_mul(6, Q, E6) == INFINITY
    assert not infinite_order_sanity(Q, E6)


points = st.sampled_from(SMALL)


@given(points, points)
def test_commutative(p, q):
    assert add(p, q, E) == add(q, p, E)


@settings(max_examples=60)
@given(points, points, points)
def test_associative(p, q, r):
    assert add(add(p, q, E), r, E) == add(p, add(q, r, E), E)


@given(points)
def test_inverse_and_involution(p):
    assert add(p, neg(p, E), E) == INFINITY
    assert neg(neg(p, E), E) == p
    assert on_curve(add(p, p, E), E)


def test_double_and_add_matches_repeated_addition():
    acc = INFINITY
    for k in range(1, 21):
        acc = add(acc, P, E)
        assert scalar_mul(k, P, E) == acc
        assert on_curve(acc, E)
    assert scalar_mul(-3, P, E) == neg(ECPoint(-1, -1), E)


def test_coordinates_stay_exact():
    pt = scalar_mul(12, P, E)
    assert isinstance(pt.x, Fraction) and pt.x.denominator > 1
