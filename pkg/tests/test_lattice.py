import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from autmap.errors import DimensionMismatch, DimensionTooSmall, ResourceCap
from autmap.lattice import (
    AffineLatticeMap,
    GElement,
    apply,
    build_S,
    first_primes,
    g_to_affine,
    int_det,
    maps_S_to_S,
    stabilizer_bruteforce,
)

from oracles import det3, stabilizer_reference


def g_elements(n):
    return st.builds(GElement, st.tuples(*[st.integers(-20, 20)] * (n - 1)), st.sampled_from([1, -1]))


def test_first_primes():
    assert first_primes(10) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert first_primes(0) == []


def test_build_S_examples():
    assert build_S(3).points == ((0, 0, 0), (2, 0, 0), (0, 3, 0))
    assert build_S(4).points == ((0, 0, 0, 0), (2, 0, 0, 0), (0, 3, 0, 0), (0, 0, 5, 0))
    with pytest.raises(DimensionTooSmall):
        build_S(2)


def test_g_to_affine_examples():
    m = g_to_affine(GElement((0, 0), 1))
    assert m.A == ((1, 0, 0), (0, 1, 0), (0, 0, 1)) and m.b == (0, 0, 0)
    m = g_to_affine(GElement((5, 0), 1))
    assert [row[-1] for row in m.A] == [5, 0, 1]


@given(st.integers(3, 6).flatmap(g_elements))
def test_g_det_is_eps(g):
    assert g_to_affine(g).det() == g.eps


def test_apply_examples():
    ident = g_to_affine(GElement.identity(3))
    assert apply(ident, (2, 0, 0)) == (2, 0, 0)
    assert apply(g_to_affine(GElement((5, 0), 1)), (0, 0, 1)) == (5, 0, 1)
    with pytest.raises(DimensionMismatch):
        apply(ident, (1, 2))


@given(st.integers(3, 6).flatmap(g_elements))
def test_g_fixes_S_pointwise(g):
    S = build_S(g.n)
    m = g_to_affine(g)
    assert all(apply(m, s) == s for s in S)
    assert maps_S_to_S(m, S)


def test_maps_S_to_S_negative_examples():
    S = build_S(3)
    ident = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    assert not maps_S_to_S(AffineLatticeMap(ident, (1, 0, 0)), S)
    swap = AffineLatticeMap(((0, 1, 0), (1, 0, 0), (0, 0, 1)), (0, 0, 0))
    assert swap.det() == -1
    assert apply(swap, (2, 0, 0)) == (0, 2, 0)
    assert not maps_S_to_S(swap, S)
    with pytest.raises(DimensionMismatch):
        maps_S_to_S(g_to_affine(GElement.identity(4)), S)


@given(st.integers(3, 5).flatmap(lambda n: st.tuples(g_elements(n), g_elements(n), g_elements(n))))
def test_group_laws(gs):
    g, h, k = gs
    n = g.n
    e = GElement.identity(n)
    assert g.compose(e) == g == e.compose(g)
    assert g.compose(g.inverse()) == e == g.inverse().compose(g)
    assert g.compose(h).compose(k) == g.compose(h.compose(k))
    # composition agrees with matrix multiplication
    assert g_to_affine(g.compose(h)) == g_to_affine(g).compose(g_to_affine(h))
    assert g.inverse() == GElement(tuple(-g.eps * v for v in g.a), g.eps)


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=3, max_size=3))
def test_int_det_matches_cofactor(rows):
    assert int_det(rows) == det3(rows)


def _as_pairs(maps):
    return sorted((m.A, m.b) for m in maps)


@pytest.mark.parametrize("bound,count", [(1, 18), (2, 50)])
def test_stabilizer_matches_reference(bound, count):
    maps = stabilizer_bruteforce(3, bound)
    assert len(maps) == count
    assert _as_pairs(maps) == sorted(stabilizer_reference(bound))
    expected = {g_to_affine(GElement(a, eps))
                for a in itertools.product(range(-bound, bound + 1), repeat=2) for eps in (1, -1)}
    assert set(maps) == expected
    S = build_S(3)
    for m in maps:
        assert m.is_g_form() and m.b == (0, 0, 0)
        assert all(apply(m, s) == s for s in S)


def test_stabilizer_order_is_lexicographic():
    maps = stabilizer_bruteforce(3, 1)
    keys = [tuple(itertools.chain.from_iterable(m.A)) + m.b for m in maps]
    assert keys == sorted(keys)


@pytest.mark.slow
def test_stabilizer_n4_identity_present():
    maps = stabilizer_bruteforce(4, 1)
    assert g_to_affine(GElement.identity(4)) in maps
    assert len(maps) == 3 ** 3 * 2


def test_stabilizer_errors():
    with pytest.raises(DimensionTooSmall):
        stabilizer_bruteforce(2, 1)
    with pytest.raises(ResourceCap):
        stabilizer_bruteforce(3, 2, cap=1000)
