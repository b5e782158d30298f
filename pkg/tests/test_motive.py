from itertools import combinations
from math import prod

import pytest
from hypothesis import given, strategies as st

from motive_atlas.motive import (
    FlagDescriptor,
    InexactDivisionError,
    classify_subdiagram,
    coset_count,
    dimension_from_roots,
    evaluate,
    flag_dimension,
    generating_polynomial,
    levi_root_count,
    poly_div_exact,
    poly_mul,
    q_factorial,
    q_integer,
)
from motive_atlas.rootsys import SimpleType, all_types, positive_roots, weyl_order


def T(s):
    return SimpleType.parse(s)


def all_thetas(t):
    for k in range(t.rank + 1):
        yield from (frozenset(c) for c in combinations(range(1, t.rank + 1), k))


def test_poly_mul_examples():
    assert poly_mul((1,), (1, 1, 1)) == (1, 1, 1)
    assert poly_mul((1, 1), (1, 1)) == (1, 2, 1)
    assert poly_mul((1, 1, 1), (1, 1)) == (1, 2, 2, 1)


def test_poly_div_examples():
    assert poly_div_exact((1, 2, 1), (1, 1)) == (1, 1)
    assert poly_div_exact(poly_mul((1, 1, 1, 1), (1, 1)), (1, 1)) == (1, 1, 1, 1)


def test_inexact_division_raises():
    with pytest.raises(InexactDivisionError):
        poly_div_exact((1, 1, 1), (1, 1))
    with pytest.raises(ZeroDivisionError):
        poly_div_exact((1, 1), ())


def test_q_numbers():
    assert q_integer(3) == (1, 1, 1)
    assert q_factorial(3) == (1, 2, 2, 1)
    assert evaluate(q_factorial(4), 1) == 24


small_polys = st.lists(st.integers(-5, 5), min_size=1, max_size=7).filter(lambda c: c[-1] != 0)


@given(small_polys, small_polys)
def test_mul_then_div_round_trip(p, q):
    assert poly_div_exact(poly_mul(p, q), q) == tuple(p)


@given(small_polys, small_polys, st.integers(-3, 3))
def test_mul_is_evaluation_homomorphism(p, q, z):
    assert evaluate(poly_mul(p, q), z) == evaluate(p, z) * evaluate(q, z)


@pytest.mark.parametrize("t,theta,seq", [
    ("A4", {2, 3, 4}, (1, 1, 1, 1, 1)),
    ("G2", {1}, (1, 1, 1, 1, 1, 1)),
    ("B3", {2, 3}, (1, 1, 1, 1, 1, 1)),
    ("A3", {1}, (1, 2, 3, 3, 2, 1)),
    ("A2", set(), (1, 2, 2, 1)),
    ("A3", {1, 3}, (1, 1, 2, 1, 1)),
])
def test_generating_polynomial_examples(t, theta, seq):
    assert generating_polynomial(FlagDescriptor.simple(T(t), theta)) == seq


@pytest.mark.parametrize("t,theta,dim", [("A3", {1, 2, 3}, 0), ("G2", {1}, 5), ("A2", set(), 3)])
def test_flag_dimension_examples(t, theta, dim):
    assert flag_dimension(FlagDescriptor.simple(T(t), theta)) == dim


def test_maximal_constructor():
    assert FlagDescriptor.maximal(T("A4"), 1) == FlagDescriptor.simple(T("A4"), {2, 3, 4})
    assert FlagDescriptor.maximal(T("A3"), 1, 3).omitted() == (frozenset({1, 3}),)


def test_bad_theta_rejected():
    with pytest.raises(ValueError):
        FlagDescriptor.simple(T("A2"), {0})
    with pytest.raises(ValueError):
        FlagDescriptor((T("A2"),), ())


def test_levi_classification():
    # B3 without alpha_1 leaves the B2 tail; C3 likewise leaves C2 which is B2 with swapped nodes
    (typ, _), = classify_subdiagram(T("B3"), {2, 3})
    assert typ == T("B2")
    (typ, _), = classify_subdiagram(T("C3"), {2, 3})
    assert typ == T("B2")
    got = sorted(str(t) for t, _ in classify_subdiagram(T("E8"), {1, 3, 5, 6, 7, 8}))
    assert got == ["A2", "A4"]
    (typ, _), = classify_subdiagram(T("D5"), {2, 3, 4, 5})
    assert typ == T("D4")


def test_products_multiply():
    x = FlagDescriptor((T("A1"), T("A2")), (frozenset(), frozenset({1})))
    assert generating_polynomial(x) == poly_mul((1, 1), (1, 1, 1))
    assert flag_dimension(x) == 3


SCANNED = [t for t in all_types(5) if weyl_order(t) <= 51840]


@pytest.mark.parametrize("t", SCANNED, ids=str)
def test_structural_invariants_exhaustive(t):
    order = weyl_order(t)
    nroots = len(positive_roots(t))
    for theta in all_thetas(t):
        x = FlagDescriptor.simple(t, theta)
        p = generating_polynomial(x)
        assert p == p[::-1]
        assert all(c > 0 for c in p)
        assert evaluate(p, 1) == coset_count(x)
        assert coset_count(x) * prod(weyl_order(s) for s, _ in classify_subdiagram(t, theta)) == order
        assert len(p) - 1 == nroots - levi_root_count(t, theta) == dimension_from_roots(x)


@given(st.sampled_from(all_types(8)), st.data())
def test_random_parabolic_invariants(t, data):
    theta = data.draw(st.sets(st.integers(1, t.rank)))
    x = FlagDescriptor.simple(t, theta)
    p = generating_polynomial(x)
    assert p == p[::-1]
    assert len(p) - 1 == dimension_from_roots(x)
    # enlarging theta shrinks the variety
    for i in set(range(1, t.rank + 1)) - theta:
        assert flag_dimension(FlagDescriptor.simple(t, theta | {i})) < len(p) - 1
