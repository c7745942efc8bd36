"""Rational points on ellipses a x² + b y² = 1 from odd multiples of a base angle.

With (x0, y0) = (cos θ/√a, sin θ/√b) rational and u = a x0² = cos²θ, the
points (cos((2k+1)θ)/√a, sin((2k+1)θ)/√b) are x0·P_k(u), y0·Q_k(1-u).  Both
coordinates follow the Chebyshev three-term recurrence
    Z_{k+1} = 2(2u - 1) Z_k - Z_{k-1},
started from X_{-1} = X_0 = x0 and Y_{-1} = -y0, Y_0 = y0.

Only a = b = 1 gives squared distance 4 sin²(4(k-l)θ)/(ab) between the
8k+1 and 8l+1 points.  In general
    d² = 4 sin²(4(k-l)θ) · (sin²S / a + cos²S / b),   S = (4(k+l)+1)θ,
so for a ≠ b the distances are generally irrational; see
:func:`closed_form_distance_sq`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact_core import (
    PointSet,
    classify,
    format_rat,
    pairwise_distance_sq,
    rational_sqrt,
    verify_rational_set,
)

NIVEN_COSINES = frozenset(Fraction(v) for v in (0, 1, -1, Fraction(1, 2), Fraction(-1, 2)))
IRRATIONAL_MULTIPLE = "irrational_multiple"
RATIONAL_MULTIPLE = "rational_multiple"


@dataclass(frozen=True)
class Ellipse:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        a, b = Fraction(self.a), Fraction(self.b)
        if a <= 0 or b <= 0:
            raise ValueError("ellipse coefficients must be positive")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def contains(self, x, y) -> bool:
        return self.a * x * x + self.b * y * y == 1


@dataclass(frozen=True)
class EllipseBase:
    x0: Fraction
    y0: Fraction
    u: Fraction  # a·x0² = cos²θ

    @classmethod
    def on(cls, e: Ellipse, x0, y0) -> "EllipseBase":
        x0, y0 = Fraction(x0), Fraction(y0)
        if not e.contains(x0, y0):
            raise ValueError(f"({x0}, {y0}) is not on {e}")
        return cls(x0, y0, e.a * x0 * x0)


def standard_ellipse(a, b) -> tuple[Ellipse, EllipseBase]:
    """(x/a)² + (y/b)² = 1 in coefficient form, with base (3a/5, 4b/5)."""
    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise ValueError("semi-axes must be positive")
    e = Ellipse(1 / (a * a), 1 / (b * b))
    return e, EllipseBase.on(e, 3 * a / 5, 4 * b / 5)


def _check(e: Ellipse, base: EllipseBase):
    if not e.contains(base.x0, base.y0) or base.u != e.a * base.x0 ** 2:
        raise ValueError("base point does not match the ellipse")


def base_angle_status(e: Ellipse, base: EllipseBase) -> str:
    """Decide whether θ is a rational multiple of 2π.

    cos 2θ = 2u - 1 is rational, so by Niven's theorem θ can only be a
    rational multiple of π when 2u - 1 is 0, ±1/2 or ±1.  In those cases the
    orbit is confirmed periodic by running it (period at most 6).
    """
    _check(e, base)
    c2 = 2 * base.u - 1
    if c2 not in NIVEN_COSINES:
        return IRRATIONAL_MULTIPLE
    start = (base.x0, base.y0)
    for n in range(1, 13):
        if odd_multiple_coords(e, base, n) == start:
            return RATIONAL_MULTIPLE
    raise AssertionError("Niven cosine with an aperiodic orbit")  # unreachable


def odd_multiple_coords(e: Ellipse, base: EllipseBase, k: int) -> tuple:
    """Rational coordinates of the point at angle (2k+1)θ."""
    step = 2 * (2 * base.u - 1)
    if k >= 0:
        xp, x = base.x0, base.x0      # X_{-1}, X_0
        yp, y = -base.y0, base.y0
        for _ in range(k):
            xp, x = x, step * x - xp
            yp, y = y, step * y - yp
        return (x, y)
    # backward: Z_{k-1} = step·Z_k - Z_{k+1}, from (Z_0, Z_{-1})
    xn, x = base.x0, base.x0
    yn, y = base.y0, -base.y0
    for _ in range(-k - 1):
        xn, x = x, step * x - xn
        yn, y = y, step * y - yn
    return (x, y)


def orbit(e: Ellipse, base: EllipseBase, lo: int, hi: int) -> dict:
    """{k: odd_multiple_coords(k)} for lo <= k <= hi, in one pass each way."""
    step = 2 * (2 * base.u - 1)
    out = {}
    xp, x, yp, y = base.x0, base.x0, -base.y0, base.y0
    for k in range(0, hi + 1):
        if k >= lo:
            out[k] = (x, y)
        xp, x = x, step * x - xp
        yp, y = y, step * y - yp
    xn, x, yn, y = base.x0, base.x0, base.y0, -base.y0
    for k in range(-1, lo - 1, -1):
        if k <= hi:
            out[k] = (x, y)
        xn, x = x, step * x - xn
        yn, y = y, step * y - yn
    return out


def gen_ellipse_set(e: Ellipse, base: EllipseBase, count: int) -> PointSet:
    """Points at angles (8k+1)θ for -count <= k <= count, ascending k."""
    if count < 0:
        raise ValueError("count must be >= 0")
    if base_angle_status(e, base) != IRRATIONAL_MULTIPLE:
        raise ValueError("base angle is a rational multiple of 2π; the orbit is finite")
    pts = orbit(e, base, -4 * count, 4 * count)
    meta = {
        "generator": "ellipse",
        "a": format_rat(e.a), "b": format_rat(e.b),
        "x0": format_rat(base.x0), "y0": format_rat(base.y0),
        "count": str(count),
    }
    return PointSet.from_points((pts[4 * k] for k in range(-count, count + 1)), meta, dim=2)


def gen_odd_set(e: Ellipse, base: EllipseBase, count: int) -> PointSet:
    """The coarser (2k+1)θ orbit, -count <= k <= count; used for comparisons."""
    pts = orbit(e, base, -count, count)
    return PointSet.from_points((pts[k] for k in range(-count, count + 1)), dim=2)


def ellipse_pair_distance_sq(e: Ellipse, base: EllipseBase, k: int, l: int) -> Fraction:
    """Squared distance between the (8k+1)θ and (8l+1)θ points, from coordinates."""
    return pairwise_distance_sq(odd_multiple_coords(e, base, 4 * k),
                                odd_multiple_coords(e, base, 4 * l))


def _chebyshev_t(m: int, x: Fraction) -> Fraction:
    m = abs(m)
    prev, cur = Fraction(1), x
    if m == 0:
        return prev
    for _ in range(m - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def sin_sq_4m(base: EllipseBase, m: int) -> Fraction:
    """sin²(4mθ) = 4 cos²(2mθ)(1 - cos²(2mθ)), with cos(2mθ) = T_m(2u - 1)."""
    t = _chebyshev_t(m, 2 * base.u - 1)
    return 4 * t * t * (1 - t * t)


def closed_form_distance_sq(e: Ellipse, base: EllipseBase, k: int, l: int) -> Fraction:
    """4 sin²(4(k-l)θ)(sin²S/a + cos²S/b), S = (4(k+l)+1)θ, via the orbit."""
    sx, sy = odd_multiple_coords(e, base, 2 * (k + l))
    cos_sq, sin_sq = e.a * sx * sx, e.b * sy * sy
    return 4 * sin_sq_4m(base, k - l) * (sin_sq / e.a + cos_sq / e.b)


def unit_scale_distance_sq(e: Ellipse, base: EllipseBase, k: int, l: int) -> Fraction:
    """4 sin²(4(k-l)θ)/(ab): the distance formula valid when a = b = 1."""
    return 4 * sin_sq_4m(base, k - l) / (e.a * e.b)


@dataclass
class HyperbolicReport:
    applicable: bool
    ok: bool
    scale: Optional[Fraction]
    violations: list

    def as_dict(self) -> dict:
        return {"applicable": self.applicable, "ok": self.ok,
                "scale": None if self.scale is None else format_rat(self.scale),
                "violations": [list(v) for v in self.violations]}


def hyperbolic_scale_check(e: Ellipse, s: PointSet) -> HyperbolicReport:
    """When ab = g² is a rational square, test every distance d for d·g/2 hyperbolic.

    Pairs with an irrational distance count as violations.
    """
    g = rational_sqrt(e.a * e.b)
    if g is None:
        return HyperbolicReport(False, False, None, [])
    violations = []
    pts = s.points
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d = rational_sqrt(pairwise_distance_sq(pts[i], pts[j]))
            if d is None or not classify(d * g / 2).hyperbolic:
                violations.append((i, j))
    return HyperbolicReport(True, not violations, 2 / g, violations)


def ellipse_report(e: Ellipse, s: PointSet) -> dict:
    """Certificates recorded in generated ellipse files."""
    hyp = hyperbolic_scale_check(e, s)
    rat = verify_rational_set(s)
    return {
        "on_curve": str(all(e.contains(x, y) for x, y in s.points)).lower(),
        "rational_set": str(rat.ok).lower(),
        "irrational_pairs": str(len(rat.violations)),
        "hyperbolic_applicable": str(hyp.applicable).lower(),
        "hyperbolic_ok": str(hyp.ok).lower(),
        "hyperbolic_scale": "" if hyp.scale is None else format_rat(hyp.scale),
    }
