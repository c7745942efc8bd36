"""Smallest generator bound whose circle set meets every arc, for several arc counts."""
import argparse
import time

from ratset.circle_sets import find_covering_bound, gen_dense_circle_set


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--arcs", type=int, nargs="+", default=[4, 8, 16, 32, 64, 128])
    ap.add_argument("--max-bound", type=int, default=200)
    args = ap.parse_args()
    print(f"{'arcs':>6} {'bound':>6} {'points':>7} {'near':>5} {'secs':>6}")
    for arcs in args.arcs:
        t0 = time.perf_counter()
        found = find_covering_bound(arcs, args.max_bound)
        secs = time.perf_counter() - t0
        if found is None:
            print(f"{arcs:>6} {'-':>6} {'-':>7} {'-':>5} {secs:6.2f}")
            continue
        bound, rep = found
        n = len(gen_dense_circle_set(bound))
        print(f"{arcs:>6} {bound:>6} {n:>7} {len(rep.near_boundary):>5} {secs:6.2f}")


if __name__ == "__main__":
    main()
