import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from autmap.elliptic import CURVE_37A1, P_37A1, Curve, ECPoint, on_curve, scalar_mul
from autmap.errors import (
    ConstantInput,
    DimensionMismatch,
    InfiniteOrderSanityFailed,
    ZeroPolynomial,
    ZeroProjectivePoint,
)
from autmap.lattice import GElement
from autmap.polyring import (
    Polynomial,
    VarRegistry,
    dehomogenize,
    evaluate,
    is_homogeneous,
    parse_auto,
    parse_poly,
    total_degree,
)
from autmap.reducer import (
    check_descriptor,
    compile_instance,
    four_squares_transform,
    lagrange_four_squares,
    lift_natural_solution,
    normalize_projective,
    point_in_Z,
    sigma_image,
)

from oracles import brute_eval


@pytest.fixture(scope="module")
def t1_minus_5():
    return compile_instance(parse_auto("t1 - 5"))


def test_four_squares_example():
    g = four_squares_transform(parse_auto("u - 3"))
    assert g.registry.names == ("u_1", "u_2", "u_3", "u_4")
    assert g == parse_poly("u_1^2 + u_2^2 + u_3^2 + u_4^2 - 3", g.registry)
    assert lagrange_four_squares(3) == (1, 1, 1, 0)
    assert evaluate(g, (1, 1, 1, 0)) == 0


def test_four_squares_counts():
    f = parse_auto("u*v^2 - 3*u + 1")
    g = four_squares_transform(f)
    assert (f.registry.arity, total_degree(f)) == (2, 3)
    assert (g.registry.arity, total_degree(g)) == (8, 6)


def test_four_squares_no_solution_for_negative_target():
    g = four_squares_transform(parse_auto("u + 1"))
    # every value is (sum of squares) + 1 >= 1
    assert all(brute_eval(g, a) >= 1 for a in itertools.product(range(-2, 3), repeat=4))


def test_four_squares_errors():
    with pytest.raises(ZeroPolynomial):
        four_squares_transform(Polynomial.zero(VarRegistry(["u"])))


@given(st.integers(0, 2000))
def test_lagrange_decomposition(n):
    a, b, c, d = lagrange_four_squares(n)
    assert a * a + b * b + c * c + d * d == n and a >= b >= c >= d >= 0


@settings(max_examples=30, deadline=None)
@given(st.tuples(st.integers(0, 30), st.integers(0, 30)))
def test_natural_zero_lifts(point):
    u, v = point
    f = parse_auto(f"u*v - {u * v} + (u - {u})^2")
    g = four_squares_transform(f)
    assert evaluate(f, point) == 0
    assert evaluate(g, lift_natural_solution(point)) == 0


def test_compile_t1_minus_5(t1_minus_5):
    d = t1_minus_5
    assert d.n == 3 and d.smoothing.c == 1
    R = d.Z_equation.registry
    assert R.names == ("t1", "y", "t_h")
    assert d.Z_equation == parse_poly("y^2 - y*t_h + (t1 - 5*t_h)^2", R)
    assert d.S.points == ((0, 0, 0), (2, 0, 0), (0, 3, 0))
    assert d.base_point_x == (0, 0, 1)
    assert d.mode == "Z"
    check_descriptor(d)


def test_compile_S_prime_realization(t1_minus_5):
    d = t1_minus_5
    inf = ECPoint()
    assert d.S_prime[0] == (inf, inf, inf)
    assert d.S_prime[1] == (scalar_mul(2, P_37A1, CURVE_37A1), inf, inf)
    assert d.S_prime[2] == (inf, scalar_mul(3, P_37A1, CURVE_37A1), inf)
    assert d.S_prime[1][0] == ECPoint(1, -1) or d.S_prime[1][0] == scalar_mul(2, P_37A1, CURVE_37A1)


@pytest.mark.parametrize("text,m", [("t1 - 5", 1), ("t1*t2 - 6", 2), ("t1^2 + t2 - t3", 3)])
def test_n_is_m_plus_2(text, m):
    d = compile_instance(parse_auto(text))
    assert d.n == m + 2
    check_descriptor(d)


def test_compile_rejects_constant():
    with pytest.raises(ConstantInput):
        compile_instance(parse_auto("5"))


def test_compile_requires_infinite_order_point():
    E2 = Curve(0, 0, 0, 1, 0)
    with pytest.raises(InfiniteOrderSanityFailed):
        compile_instance(parse_auto("t1 - 5"), curve=E2, P=ECPoint(0, 0))


def test_n_mode_equals_z_mode_of_transform():
    f = parse_auto("u - 3")
    dn = compile_instance(f, mode="N")
    dz = compile_instance(four_squares_transform(f), mode="Z")
    assert dn.Z_equation == dz.Z_equation
    assert dn.smoothing == dz.smoothing
    assert dn.S == dz.S and dn.S_prime == dz.S_prime and dn.n == dz.n == 6


def test_sigma_image_examples():
    assert sigma_image(GElement.identity(3)) == (0, 0, 1)
    assert sigma_image(GElement((5, 0), 1)) == (5, 0, 1)
    assert sigma_image(GElement((-5, 0), -1)) == (-5, 0, -1)
    with pytest.raises(DimensionMismatch):
        sigma_image(GElement((1,), 1), n=3)


def test_point_in_Z_examples(t1_minus_5):
    d = t1_minus_5
    assert point_in_Z(d, (5, 0, 1))
    assert not point_in_Z(d, (0, 0, 1))
    assert evaluate(d.Z_equation, (0, 0, 1)) == 25
    for pt in [(5, 0, 1), (0, 0, 1), (5, 1, 1), (3, 2, -7)]:
        assert point_in_Z(d, pt) == point_in_Z(d, tuple(2 * v for v in pt))
    with pytest.raises(ZeroProjectivePoint):
        point_in_Z(d, (0, 0, 0))
    with pytest.raises(DimensionMismatch):
        point_in_Z(d, (1, 1))


def test_normalize_projective():
    assert normalize_projective((-5, 0, -1)) == (5, 0, 1)
    assert normalize_projective((4, 2, 0)) == (2, 1, 0)
    assert normalize_projective((Fraction(1, 2), 1)) == (1, 2)


@settings(max_examples=25, deadline=None)
@given(st.data())
def test_descriptor_coherence_on_corpus_sample(corpus, data):
    f = data.draw(st.sampled_from(corpus))
    d = compile_instance(f)
    check_descriptor(d)
    F, F_hat = d.smoothing.F, d.Z_equation
    assert dehomogenize(F_hat, d.homogenizing_variable) == F
    assert is_homogeneous(F_hat)
    deg = total_degree(F_hat)
    a = data.draw(st.tuples(*[st.integers(-6, 6)] * (d.n - 1)))
    lam = data.draw(st.integers(-4, 4))
    # affine chart and sign symmetry
    assert evaluate(F_hat, a + (1,)) == evaluate(F, a)
    neg = tuple(-v for v in a) + (-1,)
    assert evaluate(F_hat, neg) == (-1) ** deg * evaluate(F_hat, a + (1,))
    assert evaluate(F_hat, tuple(lam * v for v in a + (1,))) == lam ** deg * evaluate(F_hat, a + (1,))
    for s, row in zip(d.S.points, d.S_prime):
        for coord, pt in zip(s, row):
            assert pt == scalar_mul(coord, d.P, d.curve) and on_curve(pt, d.curve)
