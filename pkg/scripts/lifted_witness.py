"""Build a lifted rational set, scale it to integers and print its certificates."""
import argparse
from fractions import Fraction
from itertools import combinations

from ratset.exact_core import pairwise_distance_sq, rational_sqrt
from ratset.lifting import LiftConfig, build_rational_set, integral_set


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dim", type=int, default=3)
    ap.add_argument("--bound", type=int, default=5)
    ap.add_argument("--r0", type=Fraction, default=Fraction(3, 4))
    ap.add_argument("--take", type=int, default=9)
    args = ap.parse_args()

    s = build_rational_set(LiftConfig(r0=args.r0, target_dim=args.dim, base_bound=args.bound))
    print(f"lifted set: {len(s)} points, rank {s.meta['rank']}, "
          f"cospherical {s.meta['cospherical']}")
    z = integral_set(s.take(args.take))
    print(f"first {len(z)} scaled by {z.meta['scale_lcm']}: rank {z.meta['rank']}, "
          f"cospherical {z.meta['cospherical']}")
    for p in z:
        print("  (" + ", ".join(str(c) for c in p) + ")")
    dists = sorted(int(rational_sqrt(pairwise_distance_sq(p, q)))
                   for p, q in combinations(z.points, 2))
    print(f"integer distances: min {dists[0]}, max {dists[-1]}, distinct {len(set(dists))}")


if __name__ == "__main__":
    main()
