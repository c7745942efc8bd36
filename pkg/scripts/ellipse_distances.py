"""Count irrational pair distances of the 4k-step ellipse orbit over a grid of axes."""
import argparse
from fractions import Fraction

from ratset.ellipse_sets import IRRATIONAL_MULTIPLE, base_angle_status, gen_ellipse_set, standard_ellipse
from ratset.exact_core import verify_rational_set

AXES = [1, 2, 3, Fraction(1, 2), Fraction(3, 2)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=4)
    args = ap.parse_args()
    n = 2 * args.count + 1
    pairs = n * (n - 1) // 2
    print(f"{'a':>5} {'b':>5} {'irrational':>11} / {pairs}")
    for a in AXES:
        for b in AXES:
            e, base = standard_ellipse(a, b)
            if base_angle_status(e, base) != IRRATIONAL_MULTIPLE:
                continue
            bad = len(verify_rational_set(gen_ellipse_set(e, base, args.count)).violations)
            print(f"{str(a):>5} {str(b):>5} {bad:>11}")


if __name__ == "__main__":
    main()
