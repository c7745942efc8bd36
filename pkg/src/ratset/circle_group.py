"""Rational points of the unit circle as a group under angle addition.

An angle is never stored; the pair (cos, sin) is the group element.  Every
rational point already has an angle whose tangent is an elliptic slope, so
the only membership question worth computing is whether a point is a
double, which :func:`halve` decides.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact_core import rational_sqrt


@dataclass(frozen=True)
class CirclePoint:
    c: Fraction
    s: Fraction

    def __post_init__(self):
        c, s = Fraction(self.c), Fraction(self.s)
        if c * c + s * s != 1:
            raise ValueError(f"({c}, {s}) is not on the unit circle")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "s", s)

    def __iter__(self):
        yield self.c
        yield self.s

    def __len__(self):
        return 2

    def __getitem__(self, i):
        return (self.c, self.s)[i]

    def as_tuple(self) -> tuple:
        return (self.c, self.s)


IDENTITY = CirclePoint(Fraction(1), Fraction(0))
_UNITS = {(1, 0), (-1, 0), (0, 1), (0, -1)}


def compose(p: CirclePoint, q: CirclePoint) -> CirclePoint:
    return CirclePoint(p.c * q.c - p.s * q.s, p.s * q.c + p.c * q.s)


def inverse(p: CirclePoint) -> CirclePoint:
    return CirclePoint(p.c, -p.s)


def power(p: CirclePoint, n: int) -> CirclePoint:
    if n < 0:
        p, n = inverse(p), -n
    result = IDENTITY
    while n:
        if n & 1:
            result = compose(result, p)
        p = compose(p, p)
        n >>= 1
    return result


def halve(p: CirclePoint) -> Optional[CirclePoint]:
    """Rational H with H·H = p, if any.

    Of the two halves (they differ by a half turn) the one with nonnegative
    cosine is returned, and nonnegative sine on a cosine tie.
    """
    ch = rational_sqrt((1 + p.c) / 2)
    if ch is None:
        return None
    sh = rational_sqrt((1 - p.c) / 2)
    if sh is None:
        return None
    if ch == 0:
        return CirclePoint(Fraction(0), Fraction(1))
    if p.s < 0:
        sh = -sh
    h = CirclePoint(ch, sh)
    assert compose(h, h) == p
    return h


def in_qtan4(p: CirclePoint) -> bool:
    return halve(p) is not None


def is_root_of_unity(p: CirclePoint) -> bool:
    # the Gaussian rationals hold no roots of unity besides ±1, ±i
    return (p.c, p.s) in _UNITS
