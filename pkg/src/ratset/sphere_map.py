"""The half-angle map between S^k minus the antipode of e and the tangent space at e.

A sphere point at angle θ from e = (1, 0, ..., 0) goes to the tangent point
(1, u) of radius tan(θ/2) along the same direction, which in coordinates is
u = (x_1, ..., x_k) / (1 + x_0).  The inverse is the double-angle map
u -> ((1 - |u|²), 2u) / (1 + |u|²).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact_core import (
    PointSet,
    pairwise_distance_sq,
    rational_sqrt,
    verify_rational_set,
    verify_scaled_type,
)


class DomainError(ValueError):
    """A point outside the domain of the map (the antipode -e)."""


class HypothesisNotMet(ValueError):
    """Inputs to the equivalence check lack rational half-angles from e."""


class TransferError(ValueError):
    def __init__(self, message: str, index: Optional[int] = None, pair=None):
        super().__init__(message)
        self.index = index
        self.pair = pair


def pole(k: int) -> tuple:
    return (Fraction(1),) + (Fraction(0),) * k


def _norm_sq(v: Sequence) -> Fraction:
    return sum((Fraction(c) ** 2 for c in v), Fraction(0))


def is_on_sphere(p: Sequence) -> bool:
    return _norm_sq(p) == 1


def phi(p: Sequence) -> tuple:
    p = tuple(Fraction(c) for c in p)
    if len(p) < 2:
        raise ValueError("sphere points need at least two coordinates")
    if not is_on_sphere(p):
        raise ValueError(f"{p} is not on the unit sphere")
    denom = 1 + p[0]
    if denom == 0:
        raise DomainError("the antipode -e is excluded from the domain")
    return tuple(c / denom for c in p[1:])


def phi_inv(u: Sequence) -> tuple:
    u = tuple(Fraction(c) for c in u)
    if not u:
        raise ValueError("tangent points need at least one coordinate")
    n2 = _norm_sq(u)
    denom = 1 + n2
    return ((1 - n2) / denom,) + tuple(2 * c / denom for c in u)


def dist_from_e(p: Sequence) -> Optional[Fraction]:
    p = tuple(Fraction(c) for c in p)
    return rational_sqrt(pairwise_distance_sq(p, pole(len(p) - 1)))


def has_rational_half_angle(p: Sequence) -> bool:
    """Both sin and cos of half the angle from e are rational.

    Equivalent to the tangent image having rational norm.
    """
    x0 = Fraction(p[0])
    return (rational_sqrt((1 - x0) / 2) is not None
            and rational_sqrt((1 + x0) / 2) is not None)


@dataclass
class T32Report:
    cond1: bool
    cond2: bool
    cond3: bool
    cond4: bool

    @property
    def consistent(self) -> bool:
        return self.cond1 == self.cond2 == self.cond3 == self.cond4

    def as_dict(self) -> dict:
        return {"cond1": self.cond1, "cond2": self.cond2, "cond3": self.cond3,
                "cond4": self.cond4, "consistent": self.consistent}


def verify_t32(x: Sequence, y: Sequence) -> T32Report:
    """Evaluate the four equivalent rationality conditions for a sphere pair.

    1. |x - y| rational;  2. sin(∠xOy / 2) rational;  3. |BC| rational, with
    B, C the tangent images;  4. {A, B, C} a rational set, A = e.
    Raises HypothesisNotMet unless both points have rational half-angles
    from e and neither is ±e.
    """
    x = tuple(Fraction(c) for c in x)
    y = tuple(Fraction(c) for c in y)
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    k = len(x) - 1
    for name, p in (("X", x), ("Y", y)):
        if not is_on_sphere(p):
            raise HypothesisNotMet(f"{name} is not on the unit sphere")
        if p == pole(k) or p[0] == -1:
            raise HypothesisNotMet(f"{name} is ±e")
        if not has_rational_half_angle(p):
            raise HypothesisNotMet(f"{name} has no rational half-angle from e")

    cond1 = rational_sqrt(pairwise_distance_sq(x, y)) is not None
    dot = sum((a * b for a, b in zip(x, y)), Fraction(0))
    cond2 = rational_sqrt((1 - dot) / 2) is not None
    b, c = phi(x), phi(y)
    origin = (Fraction(0),) * k
    bc = rational_sqrt(pairwise_distance_sq(b, c)) is not None
    cond3 = bc
    cond4 = (bc
             and rational_sqrt(pairwise_distance_sq(origin, b)) is not None
             and rational_sqrt(pairwise_distance_sq(origin, c)) is not None)
    return T32Report(cond1, cond2, cond3, cond4)


def _require_rational(s: PointSet, what: str):
    rep = verify_rational_set(s)
    if not rep.ok:
        i, j = rep.violations[0]
        raise TransferError(f"{what}: irrational distance between points {i} and {j}",
                            pair=(i, j))


def transfer_plane_to_sphere(y: PointSet) -> PointSet:
    """Send a rational set in Q^k through the origin A with elliptic A-distances onto S^k."""
    k = y.dim
    origin = (Fraction(0),) * k
    if origin not in y:
        raise TransferError("input must contain the base point A (the origin)")
    _require_rational(y, "input")
    rep = verify_scaled_type(y, origin, Fraction(1), "elliptic")
    if not rep.ok:
        i = rep.violations[0]
        raise TransferError(f"distance from A to point {i} is not elliptic", index=i)
    meta = dict(y.meta)
    meta["transfer"] = "plane_to_sphere"
    return PointSet(k + 1, tuple(phi_inv(p) for p in y.points), meta)


def transfer_sphere_to_plane(x: PointSet) -> PointSet:
    """Inverse transfer: a rational set on S^k through e with e-distances twice hyperbolic."""
    k = x.dim - 1
    e = pole(k)
    for i, p in enumerate(x.points):
        if not is_on_sphere(p):
            raise TransferError(f"point {i} is not on the unit sphere", index=i)
        if p[0] == -1:
            raise TransferError(f"point {i} is the excluded antipode -e", index=i)
    if e not in x:
        raise TransferError("input must contain the pole e")
    _require_rational(x, "input")
    rep = verify_scaled_type(x, e, Fraction(2), "hyperbolic")
    if not rep.ok:
        i = rep.violations[0]
        raise TransferError(f"distance from e to point {i} is not twice a hyperbolic rational",
                            index=i)
    meta = dict(x.meta)
    meta["transfer"] = "sphere_to_plane"
    return PointSet(k, tuple(phi(p) for p in x.points), meta)
