import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import pyth_params, small_rats, sphere_point_from_north
from ratset.circle_sets import gen_dense_circle_set
from ratset.exact_core import (
    PointSet,
    classify,
    pairwise_distance_sq,
    rational_sqrt,
    verify_rational_set,
    verify_scaled_type,
)
from ratset.sphere_map import (
    DomainError,
    HypothesisNotMet,
    TransferError,
    dist_from_e,
    has_rational_half_angle,
    is_on_sphere,
    phi,
    phi_inv,
    pole,
    transfer_plane_to_sphere,
    transfer_sphere_to_plane,
    verify_t32,
)


def test_phi_examples():
    assert phi(pole(1)) == (0,)
    assert phi(pole(3)) == (0, 0, 0)
    assert phi((F(-7, 25), F(24, 25))) == (F(4, 3),)
    assert phi((0, 1)) == (1,)


def test_phi_rejects_antipode_and_off_sphere():
    with pytest.raises(DomainError):
        phi((-1, 0, 0))
    with pytest.raises(ValueError):
        phi((1, 1))


def test_phi_inv_examples():
    assert phi_inv((0,)) == pole(1)
    assert phi_inv((F(4, 3),)) == (F(-7, 25), F(24, 25))
    assert phi_inv((F(3, 4), 0)) == (F(7, 25), F(24, 25), 0)


def test_dist_from_e_examples():
    assert dist_from_e(pole(2)) == 0
    assert dist_from_e((F(-7, 25), F(24, 25))) == F(8, 5)
    assert dist_from_e((F(3, 5), F(4, 5))) is None


@given(st.lists(small_rats, min_size=1, max_size=4))
def test_phi_round_trips(u):
    x = phi_inv(u)
    assert is_on_sphere(x)
    assert phi(x) == tuple(u)
    assert phi_inv(phi(x)) == x


@given(st.lists(small_rats, min_size=2, max_size=5))
def test_phi_inv_of_phi_on_independent_sphere_points(v):
    x = sphere_point_from_north(v)
    if x[0] != -1:
        assert phi_inv(phi(x)) == x


def test_phi_is_the_half_angle_map():
    # tan(θ/2) = sinθ/(1+cosθ): on S¹ the image is the tangent of the half angle
    for p in gen_dense_circle_set(6):
        if p[0] != -1:
            (u,) = phi(p)
            assert (1 - u * u) / (1 + u * u) == p[0]


@given(pyth_params(), st.integers(1, 3))
def test_elliptic_magnitude_gives_twice_hyperbolic(p, k):
    # |u| = s/r with r² + s² = t²: distance from e is 2s/t, and s/t is hyperbolic
    r, s, t = abs(p.a), abs(p.b), p.t
    if r == 0:
        return
    direction = [1] + [0] * (k - 1)
    u = tuple(F(s, r) * c for c in direction)
    assert dist_from_e(phi_inv(u)) == F(2 * s, t)
    assert classify(F(s, t)).hyperbolic


def test_t32_degenerate_equal_points():
    x = phi_inv((F(3, 4), 0))
    assert verify_t32(x, x).as_dict() == {"cond1": True, "cond2": True, "cond3": True,
                                          "cond4": True, "consistent": True}


def test_t32_example_on_s2():
    x, y = (F(-7, 25), F(24, 25), 0), (F(-7, 25), F(-24, 25), 0)
    assert rational_sqrt(pairwise_distance_sq(x, y)) == F(48, 25)
    rep = verify_t32(x, y)
    assert rep.cond1 and rep.cond2 and rep.cond3 and rep.cond4 and rep.consistent


def test_t32_all_false_witness():
    x, y = phi_inv((F(3, 4), 0)), phi_inv((0, F(4, 3)))
    rep = verify_t32(x, y)
    assert not any([rep.cond1, rep.cond2, rep.cond3, rep.cond4]) and rep.consistent


def test_t32_hypothesis_checks():
    with pytest.raises(HypothesisNotMet):
        verify_t32(pole(2), phi_inv((F(3, 4), 0)))
    with pytest.raises(HypothesisNotMet):
        verify_t32((-1, 0, 0), phi_inv((F(3, 4), 0)))
    # rational distance from e but irrational half-angle cosine
    half_only = (F(1, 2), F(1, 2), F(1, 2), F(1, 2))
    assert dist_from_e(half_only) == 1 and not has_rational_half_angle(half_only)
    with pytest.raises(HypothesisNotMet):
        verify_t32(half_only, phi_inv((F(3, 4), 0, 0)))


ELLIPTIC_LENGTHS = [F(3, 4), F(4, 3), F(5, 12), F(12, 5), F(8, 15), F(15, 8), F(7, 24),
                    F(24, 7), F(20, 21), F(21, 20), F(9, 40), F(40, 9)]


def _rational_norm_tangent(rng, k):
    # rational unit direction from S^(k-1)
    v = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(k - 1)]
    unit = sphere_point_from_north(v) if k > 1 else (F(1),)
    # elliptic length, so that 1 + |u|² is a square and the half-angle is rational
    leg = rng.choice(ELLIPTIC_LENGTHS)
    return tuple(leg * c for c in unit)


def test_t32_consistent_on_random_pairs():
    rng = random.Random(11)
    for k in (2, 3):
        for _ in range(60):
            u, v = _rational_norm_tangent(rng, k), _rational_norm_tangent(rng, k)
            x, y = phi_inv(u), phi_inv(v)
            if x == pole(k) or y == pole(k):
                continue
            assert verify_t32(x, y).consistent


def _elliptic_line_set(count):
    from ratset.circle_sets import gen_params
    vals = [F(0)]
    for p in gen_params(40):
        if p.a > 0 and p.b > 0:
            r = F(p.b, p.a)
            if r not in vals:
                vals.append(r)
            if -r not in vals:
                vals.append(-r)
        if len(vals) >= count:
            break
    return PointSet(1, tuple((v,) for v in vals[:count]))


def test_transfer_plane_to_sphere_example():
    y = PointSet(1, ((0,), (F(3, 4),)))
    x = transfer_plane_to_sphere(y)
    assert x.points == (pole(1), (F(7, 25), F(24, 25)))
    assert dist_from_e(x.points[1]) == F(6, 5)
    assert classify(F(3, 5)).hyperbolic
    assert transfer_sphere_to_plane(x).points == y.points


def test_transfer_trivial_and_rejections():
    assert transfer_plane_to_sphere(PointSet(2, ((0, 0),))).points == (pole(2),)
    assert transfer_sphere_to_plane(PointSet(3, (pole(2),))).points == ((0, 0),)
    with pytest.raises(TransferError):
        transfer_plane_to_sphere(PointSet(2, ((0, 0), (1, 1))))
    with pytest.raises(TransferError):
        transfer_plane_to_sphere(PointSet(1, ((0,), (5,))))  # 5 is not elliptic
    with pytest.raises(TransferError):
        transfer_plane_to_sphere(PointSet(1, ((F(3, 4),),)))  # no base point
    with pytest.raises(TransferError):
        transfer_sphere_to_plane(PointSet(2, (pole(1), (-1, 0))))


def test_transfer_line_set_round_trip():
    y = _elliptic_line_set(20)
    x = transfer_plane_to_sphere(y)
    assert verify_rational_set(x).ok
    assert verify_scaled_type(x, pole(1), 2, "hyperbolic").ok
    back = transfer_sphere_to_plane(x)
    assert back.points == y.points
    assert verify_scaled_type(back, (0,), 1, "elliptic").ok
