"""Exact rational arithmetic, square detection and rational-set verifiers.

Rationals are :class:`fractions.Fraction`, which is always reduced with a
positive denominator, so structural equality is exact equality.
"""
from __future__ import annotations

import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Iterable, Literal, Optional, Sequence

Rat = Fraction
QPoint = tuple  # tuple[Fraction, ...]

_RAT_RE = re.compile(r"-?[0-9]+(/[0-9]+)?")


class RationalParseError(ValueError):
    pass


def parse_rat(text: str) -> Fraction:
    """Parse ``-?[0-9]+(/[0-9]+)?`` into a reduced Fraction."""
    token = text.strip()
    if not _RAT_RE.fullmatch(token):
        raise RationalParseError(f"malformed rational {text!r}")
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise RationalParseError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(token))


def format_rat(r: Fraction) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def qpoint(*coords) -> QPoint:
    if not coords:
        raise ValueError("a point needs at least one coordinate")
    return tuple(Fraction(c) for c in coords)


def parse_point(text: str) -> QPoint:
    """Comma-separated rationals, e.g. ``1,0`` or ``-7/25,24/25``."""
    return qpoint(*(parse_rat(tok) for tok in text.split(",")))


# -- squares -----------------------------------------------------------------

def integer_sqrt(n: int) -> Optional[int]:
    """Exact root of a perfect square, else ``None``."""
    if n < 0:
        raise ValueError("integer_sqrt needs n >= 0")
    r = isqrt(n)
    return r if r * r == n else None


def is_square(n: int) -> bool:
    return n >= 0 and integer_sqrt(n) is not None


def rational_sqrt(r: Fraction) -> Optional[Fraction]:
    # a reduced p/q is a rational square iff p and q are both perfect squares
    r = Fraction(r)
    if r < 0:
        raise ValueError("rational_sqrt needs r >= 0")
    p = integer_sqrt(r.numerator)
    if p is None:
        return None
    q = integer_sqrt(r.denominator)
    if q is None:
        return None
    return Fraction(p, q)


# -- classification ----------------------------------------------------------

@dataclass(frozen=True)
class RationalClass:
    elliptic: bool
    hyperbolic: bool

    def as_dict(self) -> dict:
        return {"elliptic": self.elliptic, "hyperbolic": self.hyperbolic}


def classify(r: Fraction) -> RationalClass:
    """Elliptic: p²+q² is a square. Hyperbolic: p²-q² is ± a square.

    Classified on |r| = p/q in lowest terms; 0 = 0/1 is both.
    """
    r = abs(Fraction(r))
    p2, q2 = r.numerator ** 2, r.denominator ** 2
    return RationalClass(
        elliptic=is_square(p2 + q2),
        hyperbolic=is_square(abs(p2 - q2)),
    )


def has_class(r: Fraction, kind: str) -> bool:
    cls = classify(r)
    if kind == "elliptic":
        return cls.elliptic
    if kind == "hyperbolic":
        return cls.hyperbolic
    raise ValueError(f"unknown rational class {kind!r}")


# -- point sets --------------------------------------------------------------

@dataclass
class PointSet:
    """A finite set of rational points of one dimension plus provenance."""

    dim: int
    points: tuple
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dim must be >= 1")
        pts = tuple(tuple(Fraction(c) for c in p) for p in self.points)
        seen = set()
        for i, p in enumerate(pts):
            if len(p) != self.dim:
                raise ValueError(
                    f"point {i} has dimension {len(p)}, expected {self.dim}")
            if p in seen:
                raise ValueError(f"duplicate point at index {i}")
            seen.add(p)
        self.points = pts

    @classmethod
    def from_points(cls, points: Iterable[Sequence], meta: Optional[dict] = None,
                    dim: Optional[int] = None) -> "PointSet":
        """Build a set, silently dropping repeats (first occurrence wins)."""
        out, seen = [], set()
        for p in points:
            p = tuple(Fraction(c) for c in p)
            if p not in seen:
                seen.add(p)
                out.append(p)
        if dim is None:
            if not out:
                raise ValueError("cannot infer dimension of an empty set")
            dim = len(out[0])
        return cls(dim, tuple(out), dict(meta or {}))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(Fraction(c) for c in p) in set(self.points)

    def take(self, n: int) -> "PointSet":
        return PointSet(self.dim, self.points[:n], dict(self.meta))

    def dilate(self, factor: Fraction) -> "PointSet":
        factor = Fraction(factor)
        if factor == 0:
            raise ValueError("dilation factor must be nonzero")
        return PointSet(self.dim, tuple(tuple(factor * c for c in p) for p in self.points),
                        dict(self.meta))

    def translate(self, offset: Sequence) -> "PointSet":
        offset = tuple(Fraction(c) for c in offset)
        if len(offset) != self.dim:
            raise ValueError("offset dimension mismatch")
        return PointSet(self.dim,
                        tuple(tuple(c + o for c, o in zip(p, offset)) for p in self.points),
                        dict(self.meta))


def pairwise_distance_sq(p: Sequence, q: Sequence) -> Fraction:
    if len(p) != len(q):
        raise ValueError(f"dimension mismatch: {len(p)} vs {len(q)}")
    return sum(((Fraction(a) - Fraction(b)) ** 2 for a, b in zip(p, q)), Fraction(0))


def distance(p: Sequence, q: Sequence) -> Optional[Fraction]:
    """Exact euclidean distance when it is rational, else ``None``."""
    return rational_sqrt(pairwise_distance_sq(p, q))


@dataclass
class Report:
    ok: bool
    violations: list

    def as_dict(self) -> dict:
        return {"ok": self.ok, "violations": [list(v) if isinstance(v, tuple) else v
                                              for v in self.violations]}


_POOL_POINTS: list = []


def _init_pool(points):
    global _POOL_POINTS
    _POOL_POINTS = points


def _bad_pairs_from_row(i, points=None):
    points = _POOL_POINTS if points is None else points
    p = points[i]
    return [(i, j) for j in range(i + 1, len(points))
            if rational_sqrt(pairwise_distance_sq(p, points[j])) is None]


def worker_count() -> int:
    """Worker cap from RATSET_THREADS (default 1: run inline)."""
    try:
        return max(1, int(os.environ.get("RATSET_THREADS", "1")))
    except ValueError:
        return 1


def verify_rational_set(s: PointSet, workers: Optional[int] = None) -> Report:
    """Check every pairwise distance is rational; violations sorted by pair."""
    pts = list(s.points)
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(pts) > 64:
        with ProcessPoolExecutor(max_workers=workers, initializer=_init_pool,
                                 initargs=(pts,)) as ex:
            rows = list(ex.map(_bad_pairs_from_row, range(len(pts)), chunksize=16))
    else:
        rows = [_bad_pairs_from_row(i, pts) for i in range(len(pts))]
    violations = sorted(pair for row in rows for pair in row)
    return Report(not violations, violations)


def verify_scaled_type(s: PointSet, base: Sequence, scale: Fraction,
                       kind: Literal["elliptic", "hyperbolic"]) -> Report:
    """Check d(base, x)/scale is zero or a rational of class ``kind``, for all x."""
    base = tuple(Fraction(c) for c in base)
    scale = Fraction(scale)
    if len(base) != s.dim:
        raise ValueError("base dimension mismatch")
    if scale <= 0:
        raise ValueError("scale must be positive")
    violations = []
    for i, p in enumerate(s.points):
        d = rational_sqrt(pairwise_distance_sq(base, p))
        if d is None or (d != 0 and not has_class(d / scale, kind)):
            violations.append(i)
    return Report(not violations, violations)
