from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import circle_points
from ratset.circle_group import (
    IDENTITY,
    CirclePoint,
    compose,
    halve,
    in_qtan4,
    inverse,
    is_root_of_unity,
    power,
)

P = CirclePoint(F(3, 5), F(4, 5))
P2 = CirclePoint(F(-7, 25), F(24, 25))


def test_invariant_enforced():
    with pytest.raises(ValueError):
        CirclePoint(F(1, 2), F(1, 2))


def test_compose_examples():
    assert compose(IDENTITY, P) == P
    assert compose(P, P) == P2
    assert compose(P, inverse(P)) == IDENTITY


def test_inverse_examples():
    assert inverse(IDENTITY) == IDENTITY
    assert inverse(P) == CirclePoint(F(3, 5), F(-4, 5))
    assert inverse(CirclePoint(0, 1)) == CirclePoint(0, -1)


def test_power_examples():
    assert power(P, 0) == IDENTITY
    assert power(P, 2) == P2
    assert power(P, -1) == inverse(P)


@pytest.mark.parametrize("point, half", [
    (P2, P),
    (P, None),
    (IDENTITY, IDENTITY),
    (CirclePoint(-1, 0), CirclePoint(0, 1)),
    (CirclePoint(0, 1), None),
    (CirclePoint(F(-7, 25), F(-24, 25)), CirclePoint(F(3, 5), F(-4, 5))),
])
def test_halve_examples(point, half):
    assert halve(point) == half


def test_in_qtan4_examples():
    assert in_qtan4(P2)
    assert not in_qtan4(P)
    assert in_qtan4(IDENTITY)


@pytest.mark.parametrize("point, expected", [
    (CirclePoint(0, 1), True), (P, False), (IDENTITY, True), (CirclePoint(-1, 0), True),
    (CirclePoint(0, -1), True), (P2, False),
])
def test_is_root_of_unity(point, expected):
    assert is_root_of_unity(point) == expected


def test_non_units_have_no_small_order():
    # brute force: no power up to 24 returns to the identity
    for pt in (P, P2, CirclePoint(F(5, 13), F(12, 13))):
        assert all(power(pt, n) != IDENTITY for n in range(1, 25))
    for pt in (CirclePoint(0, 1), CirclePoint(-1, 0)):
        assert power(pt, 4) == IDENTITY


@given(circle_points(), circle_points(), circle_points())
def test_group_laws(p, q, r):
    assert compose(compose(p, q), r) == compose(p, compose(q, r))
    assert compose(p, q) == compose(q, p)
    assert compose(p, IDENTITY) == p
    assert compose(inverse(p), p) == IDENTITY


@given(circle_points(), st.integers(-20, 20), st.integers(-20, 20))
def test_power_is_a_homomorphism(p, m, n):
    assert power(p, m + n) == compose(power(p, m), power(p, n))


@given(circle_points())
def test_halve_doubles_back(p):
    h = halve(p)
    if h is not None:
        assert compose(h, h) == p


@given(circle_points())
def test_doubles_are_in_qtan4(h):
    d = compose(h, h)
    assert in_qtan4(d)
    half = halve(d)
    assert half in (h, CirclePoint(-h.c, -h.s))
