"""The dense rational-distance set on the unit circle.

Points are squares (in the circle group) of rational half-angle points
(a/t, b/t) with a² + b² = t², i.e. ((a²-b²)/t², 2ab/t²).  Any two of them are
at rational distance 2|ad - bc|/(t_p t_q), and the distance from (1, 0) is
twice the hyperbolic rational |b|/t.

``bound`` limits the Euclid generator height d·m of a parameter
(a, b) = d(m² - n², 2mn) up to swap and signs; the axis parameters come
from (m, n) = (1, 0).
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Optional

from .circle_group import CirclePoint, halve
from .exact_core import PointSet

PROBE_DENOMINATOR = 10 ** 6


@dataclass(frozen=True)
class PythParam:
    a: int
    b: int
    t: int

    def __post_init__(self):
        if self.t <= 0 or self.a * self.a + self.b * self.b != self.t * self.t:
            raise ValueError(f"({self.a}, {self.b}, {self.t}) violates a²+b²=t²>0")


def _generators(bound: int):
    gens = []
    for m in range(1, bound + 1):
        for n in range(0, m):
            if gcd(m, n) != 1 or (m - n) % 2 == 0:
                continue
            for d in range(1, bound // m + 1):
                gens.append((m + n, m, d, n))
    gens.sort()
    return gens


def gen_params(bound: int) -> list[PythParam]:
    """All parameters of generator height at most ``bound``, deduplicated.

    Order: ascending (m+n, m, d); within one generator the unswapped legs
    come first, each with sign patterns (+,+), (-,+), (+,-), (-,-).
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    out, seen = [], set()
    for _, m, d, n in _generators(bound):
        a0, b0, t0 = m * m - n * n, 2 * m * n, m * m + n * n
        for a, b in ((a0, b0), (b0, a0)):
            for sa, sb in ((1, 1), (-1, 1), (1, -1), (-1, -1)):
                key = (d * sa * a, d * sb * b)
                if key not in seen:
                    seen.add(key)
                    out.append(PythParam(key[0], key[1], d * t0))
    return out


def half_point(p: PythParam) -> CirclePoint:
    return CirclePoint(Fraction(p.a, p.t), Fraction(p.b, p.t))


def point_of(p: PythParam) -> CirclePoint:
    t2 = p.t * p.t
    return CirclePoint(Fraction(p.a * p.a - p.b * p.b, t2), Fraction(2 * p.a * p.b, t2))


def pair_distance(p: PythParam, q: PythParam) -> Fraction:
    return Fraction(2 * abs(p.a * q.b - p.b * q.a), p.t * q.t)


def in_X(p: CirclePoint) -> bool:
    return halve(p) is not None


def swapped_point(p: PythParam) -> CirclePoint:
    """The reflected point (2ab/t², (a²-b²)/t²); outside X when ab ≠ 0, |a| ≠ |b|."""
    pt = point_of(p)
    return CirclePoint(pt.s, pt.c)


def gen_dense_circle_set(bound: int) -> PointSet:
    pts = (point_of(p).as_tuple() for p in gen_params(bound))
    return PointSet.from_points(pts, meta={"generator": "circle", "bound": str(bound)}, dim=2)


# -- coverage probe ----------------------------------------------------------

@dataclass
class ProbeReport:
    arcs: int
    empty_arcs: list
    near_boundary: list  # point indices within 1/PROBE_DENOMINATOR of a boundary slope

    def as_dict(self) -> dict:
        return {"arcs": self.arcs, "empty_arcs": self.empty_arcs,
                "near_boundary": self.near_boundary}


@lru_cache(maxsize=None)
def _boundary_slopes(per_quadrant: int) -> tuple:
    """(lower, upper) rational brackets of tan(πi/(2M)), i = 1..M-1.

    Exact (lower == upper) where the tangent is rational, i.e. at π/4.
    """
    import mpmath

    out = []
    with mpmath.workdps(60):
        for i in range(1, per_quadrant):
            if 2 * i == per_quadrant:
                out.append((Fraction(1), Fraction(1)))
                continue
            lo = int(mpmath.floor(mpmath.tan(mpmath.pi * i / (2 * per_quadrant))
                                  * PROBE_DENOMINATOR))
            out.append((Fraction(lo, PROBE_DENOMINATOR),
                        Fraction(lo + 1, PROBE_DENOMINATOR)))
    return tuple(out)


def _quadrant(c: Fraction, s: Fraction):
    # rotate into [0, π/2): returns quadrant and rotated (c', s') with c' > 0, s' >= 0
    if c > 0 and s >= 0:
        return 0, c, s
    if c <= 0 and s > 0:
        return 1, s, -c
    if c < 0 and s <= 0:
        return 2, -c, -s
    return 3, -s, c


def arc_index(c: Fraction, s: Fraction, arcs: int) -> tuple[int, bool]:
    """Arc [2πj/arcs, 2π(j+1)/arcs) holding the angle of (c, s), and a near-boundary flag."""
    if arcs <= 0 or arcs % 4:
        raise ValueError("arcs must be a positive multiple of 4")
    per_q = arcs // 4
    q, cr, sr = _quadrant(Fraction(c), Fraction(s))
    slope = sr / cr
    brackets = _boundary_slopes(per_q)
    # a slope inside an irrational bracket counts as past the boundary
    sub = bisect_right([lo for lo, _ in brackets], slope)
    near = any(lo <= slope < hi for lo, hi in brackets if lo != hi)
    return q * per_q + sub, near


def coverage_probe(s: PointSet, arcs: int) -> ProbeReport:
    if arcs <= 0 or arcs % 4:
        raise ValueError("arcs must be a positive multiple of 4")
    hit = set()
    near = []
    for i, (c, sn) in enumerate(s.points):
        if c * c + sn * sn != 1:
            raise ValueError(f"point {i} is not on the unit circle")
        j, flagged = arc_index(c, sn, arcs)
        hit.add(j)
        if flagged:
            near.append(i)
    return ProbeReport(arcs, [j for j in range(arcs) if j not in hit], near)


def find_covering_bound(arcs: int, max_bound: int = 200) -> Optional[tuple[int, ProbeReport]]:
    """Smallest bound whose circle set hits every arc: doubling, then bisection.

    Sets grow with the bound, so coverage is monotone in it.
    """
    def covers(b):
        rep = coverage_probe(gen_dense_circle_set(b), arcs)
        return rep if not rep.empty_arcs else None

    lo, hi = 0, 1
    while hi <= max_bound and covers(hi) is None:
        lo, hi = hi, hi * 2
    if hi > max_bound:
        if covers(max_bound) is None:
            return None
        hi = max_bound
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if covers(mid) is None:
            lo = mid
        else:
            hi = mid
    return hi, covers(hi)
