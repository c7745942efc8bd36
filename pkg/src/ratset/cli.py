"""Command line: generate, map, lift and verify rational point sets.

Exit status is 0 when every check passes, 1 when a check fails (details as
JSON on stdout) and 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import io
from .circle_sets import coverage_probe, find_covering_bound, gen_dense_circle_set
from .ellipse_sets import (
    Ellipse,
    EllipseBase,
    ellipse_report,
    gen_ellipse_set,
    standard_ellipse,
)
from .exact_core import (
    PointSet,
    RationalParseError,
    classify,
    parse_point,
    parse_rat,
    verify_rational_set,
    verify_scaled_type,
)
from .lifting import LiftConfig, LiftError, build_rational_set, certify, integral_set
from .sphere_map import (
    DomainError,
    HypothesisNotMet,
    TransferError,
    phi,
    phi_inv,
    transfer_plane_to_sphere,
    transfer_sphere_to_plane,
    verify_t32,
)

OK, CHECK_FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _rat(text: str) -> Fraction:
    try:
        return parse_rat(text)
    except RationalParseError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _write(s: PointSet, out: Optional[str], plot: Optional[str] = None) -> None:
    if out:
        io.write_pointset(s, out)
    else:
        sys.stdout.write(io.dumps(s))
    if plot:
        _plot(s, plot)


def _plot(s: PointSet, path: str) -> None:
    # display only: floats never feed back into any check
    if s.dim != 2:
        raise UsageError("--plot supports two-dimensional sets only")
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(5, 5))
    ax.scatter([float(p[0]) for p in s.points], [float(p[1]) for p in s.points], s=4)
    ax.set_aspect("equal")
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)


def _summary(s: PointSet, out: Optional[str]) -> None:
    if out:
        _emit({"out": out, "points": len(s), "meta": s.meta})


# -- commands ----------------------------------------------------------------

def cmd_classify(args) -> int:
    _emit(classify(args.r).as_dict())
    return OK


def cmd_circle_gen(args) -> int:
    s = gen_dense_circle_set(args.bound)
    _write(s, args.out, args.plot)
    _summary(s, args.out)
    return OK


def cmd_circle_probe(args) -> int:
    s = io.read_pointset(args.inp)
    if s.dim != 2:
        raise UsageError("probe needs a two-dimensional set")
    try:
        rep = coverage_probe(s, args.arcs)
    except ValueError as exc:
        raise UsageError(str(exc))
    _emit(rep.as_dict())
    return OK if not rep.empty_arcs else CHECK_FAILED


def cmd_circle_cover(args) -> int:
    if args.arcs <= 0 or args.arcs % 4:
        raise UsageError("arcs must be a positive multiple of 4")
    found = find_covering_bound(args.arcs, args.max_bound)
    if found is None:
        _emit({"arcs": args.arcs, "max_bound": args.max_bound, "covering_bound": None})
        return CHECK_FAILED
    bound, rep = found
    s = gen_dense_circle_set(bound)
    s.meta.update({"arcs": str(args.arcs), "covering_bound": str(bound),
                   "near_boundary": str(len(rep.near_boundary))})
    _write(s, args.out)
    _summary(s, args.out)
    return OK


def cmd_sphere_map(args) -> int:
    s = io.read_pointset(args.inp)
    if args.transfer:
        out = transfer_sphere_to_plane(s)
    else:
        try:
            out = PointSet(s.dim - 1, tuple(phi(p) for p in s.points), dict(s.meta))
        except DomainError as exc:
            raise TransferError(str(exc))
    _write(out, args.out)
    _summary(out, args.out)
    return OK


def cmd_sphere_unmap(args) -> int:
    s = io.read_pointset(args.inp)
    if args.transfer:
        out = transfer_plane_to_sphere(s)
    else:
        out = PointSet(s.dim + 1, tuple(phi_inv(p) for p in s.points), dict(s.meta))
    _write(out, args.out)
    _summary(out, args.out)
    return OK


def cmd_sphere_verify(args) -> int:
    _, pairs = io.read_pairs(args.inp)
    results, code = [], OK
    for i, (x, y) in enumerate(pairs):
        try:
            rep = verify_t32(x, y).as_dict()
            rep["status"] = "consistent" if rep["consistent"] else "inconsistent"
        except HypothesisNotMet as exc:
            rep = {"status": "hypothesis_not_met", "reason": str(exc)}
        rep["pair"] = i
        if rep["status"] != "consistent":
            code = CHECK_FAILED
        results.append(rep)
    _emit({"pairs": results})
    return code


def cmd_lift(args) -> int:
    try:
        cfg = LiftConfig(r0=args.r0, target_dim=args.dim, base_bound=args.bound)
    except ValueError as exc:
        raise UsageError(str(exc))
    s = build_rational_set(cfg)
    _write(s, args.out)
    _summary(s, args.out)
    good = (s.meta["rank"] == str(args.dim) and s.meta["cospherical"] == "false"
            and s.meta["rational_set"] == "true")
    return OK if good else CHECK_FAILED


def cmd_integral(args) -> int:
    s = io.read_pointset(args.inp)
    if args.take is not None:
        if args.take < 1:
            raise UsageError("--take must be positive")
        s = s.take(args.take)
    rep = verify_rational_set(s)
    if not rep.ok:
        _emit({"error": "input is not a rational set", **rep.as_dict()})
        return CHECK_FAILED
    z = certify(integral_set(s))
    _write(z, args.out)
    _summary(z, args.out)
    return OK if z.meta["rational_set"] == "true" else CHECK_FAILED


def cmd_ellipse_gen(args) -> int:
    if not args.standard and (args.x0 is None or args.y0 is None):
        raise UsageError("--x0 and --y0 are required without --standard")
    try:
        if args.standard:
            e, base = standard_ellipse(args.a, args.b)
        else:
            e = Ellipse(args.a, args.b)
            base = EllipseBase.on(e, args.x0, args.y0)
        s = gen_ellipse_set(e, base, args.count)
    except ValueError as exc:
        raise UsageError(str(exc))
    s.meta.update(ellipse_report(e, s))
    _write(s, args.out, args.plot)
    _summary(s, args.out)
    failed = s.meta["rational_set"] != "true" or (
        s.meta["hyperbolic_applicable"] == "true" and s.meta["hyperbolic_ok"] != "true")
    return CHECK_FAILED if failed else OK


def cmd_verify(args) -> int:
    s = io.read_pointset(args.inp)
    rep = verify_rational_set(s)
    result = {"type": args.type, "rational": rep.as_dict()}
    ok = rep.ok
    if args.type != "rational":
        if args.base is None:
            raise UsageError("--base is required for elliptic/hyperbolic checks")
        base = parse_point(args.base)
        if len(base) != s.dim:
            raise UsageError(f"--base has dimension {len(base)}, set has {s.dim}")
        scaled = verify_scaled_type(s, base, args.scale, args.type)
        result["scaled"] = scaled.as_dict()
        ok = ok and scaled.ok
    result["ok"] = ok
    _emit(result)
    return OK if ok else CHECK_FAILED


def cmd_export(args) -> int:
    s = io.read_pointset(args.inp)
    text = io.to_csv(s)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return OK


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ratset", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="elliptic/hyperbolic class of a rational")
    c.add_argument("r", type=_rat)
    c.set_defaults(func=cmd_classify)

    circle = sub.add_parser("circle", help="dense rational sets on the unit circle").add_subparsers(dest="action", required=True)
    g = circle.add_parser("gen", help="generate the set up to a bound")
    g.add_argument("--bound", type=int, required=True)
    g.add_argument("--out")
    g.add_argument("--plot")
    g.set_defaults(func=cmd_circle_gen)
    pr = circle.add_parser("probe", help="report empty arcs")
    pr.add_argument("--arcs", type=int, required=True)
    pr.add_argument("--in", dest="inp", required=True)
    pr.set_defaults(func=cmd_circle_probe)
    cv = circle.add_parser("cover", help="smallest bound covering every arc")
    cv.add_argument("--arcs", type=int, required=True)
    cv.add_argument("--max-bound", type=int, default=200)
    cv.add_argument("--out")
    cv.set_defaults(func=cmd_circle_cover)

    sphere = sub.add_parser("sphere", help="tangent-plane map and pair verifier").add_subparsers(dest="action", required=True)
    for name, fn in (("map", cmd_sphere_map), ("unmap", cmd_sphere_unmap)):
        m = sphere.add_parser(name)
        m.add_argument("--in", dest="inp", required=True)
        m.add_argument("--out")
        m.add_argument("--transfer", action="store_true",
                       help="enforce the elliptic/hyperbolic transfer preconditions")
        m.set_defaults(func=fn)
    v = sphere.add_parser("verify-t32", help="four-condition check on sphere pairs")
    v.add_argument("--in", dest="inp", required=True)
    v.set_defaults(func=cmd_sphere_verify)

    lf = sub.add_parser("lift", help="rational set on S^(k-1) in general position")
    lf.add_argument("--dim", type=int, required=True)
    lf.add_argument("--bound", type=int, default=5)
    lf.add_argument("--r0", type=_rat, default=Fraction(3, 4))
    lf.add_argument("--out")
    lf.set_defaults(func=cmd_lift)

    it = sub.add_parser("integral", help="scale a prefix to integer coordinates")
    it.add_argument("--in", dest="inp", required=True)
    it.add_argument("--take", type=int)
    it.add_argument("--out")
    it.set_defaults(func=cmd_integral)

    ellipse = sub.add_parser("ellipse", help="rational points on ellipses").add_subparsers(dest="action", required=True)
    eg = ellipse.add_parser("gen", help="orbit set from a base point")
    eg.add_argument("--a", type=_rat, required=True)
    eg.add_argument("--b", type=_rat, required=True)
    eg.add_argument("--x0", type=_rat)
    eg.add_argument("--y0", type=_rat)
    eg.add_argument("--standard", action="store_true",
                    help="treat --a/--b as semi-axes and use the base (3a/5, 4b/5)")
    eg.add_argument("--count", type=int, default=5)
    eg.add_argument("--out")
    eg.add_argument("--plot")
    eg.set_defaults(func=cmd_ellipse_gen)

    vf = sub.add_parser("verify", help="rational / elliptic / hyperbolic check")
    vf.add_argument("--in", dest="inp", required=True)
    vf.add_argument("--type", choices=("rational", "elliptic", "hyperbolic"), default="rational")
    vf.add_argument("--base")
    vf.add_argument("--scale", type=_rat, default=Fraction(1))
    vf.set_defaults(func=cmd_verify)

    ex = sub.add_parser("export", help="CSV copy of a point-set file")
    ex.add_argument("--in", dest="inp", required=True)
    ex.add_argument("--out")
    ex.set_defaults(func=cmd_export)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, io.FormatError, RationalParseError, OSError) as exc:
        print(f"ratset: error: {exc}", file=sys.stderr)
        return USAGE
    except (TransferError, LiftError, HypothesisNotMet) as exc:
        detail = {"error": str(exc)}
        for attr in ("index", "pair"):
            if getattr(exc, attr, None) is not None:
                detail[attr] = getattr(exc, attr)
        _emit(detail)
        return CHECK_FAILED


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
