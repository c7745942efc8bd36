"""Lifting rational sets one dimension up, integral sets, and exact certificates."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .circle_sets import gen_dense_circle_set
from .exact_core import PointSet, format_rat, rational_sqrt, verify_rational_set
from .sphere_map import phi_inv


class LiftError(ValueError):
    def __init__(self, message: str, pair=None):
        super().__init__(message)
        self.pair = pair


@dataclass(frozen=True)
class LiftConfig:
    r0: Fraction = Fraction(3, 4)
    target_dim: int = 3
    base_bound: int = 5

    def __post_init__(self):
        r0 = Fraction(self.r0)
        object.__setattr__(self, "r0", r0)
        if r0 <= 0:
            raise ValueError("r0 must be positive")
        if rational_sqrt(1 + r0 * r0) is None:
            raise ValueError(f"1 + r0² = {1 + r0 * r0} is not a rational square")
        if self.target_dim < 2:
            raise ValueError("target_dim must be >= 2")
        if self.base_bound < 1:
            raise ValueError("base_bound must be >= 1")


def lift_once(x: PointSet, r0: Fraction) -> PointSet:
    """{phi_inv(r0·p) : p in X ∪ {0}}, a rational set on S^k ⊂ Q^(k+1).

    The origin comes first, so the pole e heads the output.
    """
    r0 = Fraction(r0)
    if rational_sqrt(1 + r0 * r0) is None:
        raise ValueError("1 + r0² must be a rational square")
    origin = (Fraction(0),) * x.dim
    seed = [origin] + [p for p in x.points if p != origin]
    out = PointSet(x.dim + 1, tuple(phi_inv(tuple(r0 * c for c in p)) for p in seed),
                   dict(x.meta))
    rep = verify_rational_set(out)
    if not rep.ok:
        i, j = rep.violations[0]
        raise LiftError(f"lifted points {i} and {j} are at irrational distance", pair=(i, j))
    return out


def build_rational_set(cfg: LiftConfig) -> PointSet:
    """Seed circle set lifted to S^(k-1) ⊂ Q^k, origin prepended, certified."""
    s = gen_dense_circle_set(cfg.base_bound)
    for _ in range(cfg.target_dim - 2):
        s = lift_once(s, cfg.r0)
    origin = (Fraction(0),) * s.dim
    out = PointSet(s.dim, (origin,) + s.points, {
        "generator": "lift",
        "dim": str(cfg.target_dim),
        "bound": str(cfg.base_bound),
        "r0": format_rat(cfg.r0),
    })
    certify(out)
    return out


def certify(s: PointSet) -> PointSet:
    """Record rank, cosphericity and rational-set status in ``s.meta``."""
    s.meta["rank"] = str(affine_rank(s))
    s.meta["cospherical"] = str(is_cospherical(s)).lower() if len(s) >= 2 else "true"
    s.meta["rational_set"] = str(verify_rational_set(s).ok).lower()
    return s


def integral_set(x: PointSet) -> PointSet:
    """Scale by the lcm of all coordinate denominators.

    Squared distances become integers, and a rational root of an integer is
    an integer, so the distances come out integral as well.
    """
    scale = 1
    for p in x.points:
        for c in p:
            scale = lcm(scale, c.denominator)
    meta = dict(x.meta)
    meta["scale_lcm"] = str(scale)
    return PointSet(x.dim, tuple(tuple(c * scale for c in p) for p in x.points), meta)


# -- exact linear algebra ----------------------------------------------------

def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        den = 1
        for c in row:
            den = lcm(den, Fraction(c).denominator)
        out.append([int(Fraction(c) * den) for c in row])
    return out


def bareiss_rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Rank by fraction-free elimination; rows are cleared to integers first."""
    m = _integer_rows(rows)
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    rank, prev = 0, 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        piv = m[rank][col]
        for r in range(rank + 1, n_rows):
            lead = m[r][col]
            for c in range(col, n_cols):
                # exact: Sylvester's identity guarantees divisibility by prev
                m[r][c] = (piv * m[r][c] - lead * m[rank][c]) // prev
        prev = piv
        rank += 1
        if rank == n_rows:
            break
    return rank


def affine_rank(x: PointSet) -> int:
    if not len(x):
        raise ValueError("affine rank of an empty set")
    p0 = x.points[0]
    return bareiss_rank([[a - b for a, b in zip(p, p0)] for p in x.points[1:]])


def is_cospherical(x: PointSet) -> bool:
    """True iff all points lie on one (k-1)-sphere.

    A sphere |p|² - 2c·p = r² - |c|² is a linear relation among the columns
    (p, |p|², 1) with a nonzero |p|² coefficient; one exists iff appending the
    |p|² column leaves the rank of [p | 1] unchanged.
    """
    if len(x) < 2:
        raise ValueError("cosphericity needs at least two points")
    base = [list(p) + [Fraction(1)] for p in x.points]
    lifted = [row + [sum((c * c for c in p), Fraction(0))] for row, p in zip(base, x.points)]
    return bareiss_rank(lifted) == bareiss_rank(base)
