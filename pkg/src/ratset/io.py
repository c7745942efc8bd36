"""Point-set exchange files.

JSON layout::

    {"dim": 2, "meta": {"generator": "circle", ...}, "points": [["1", "0"], ...]}

Rationals are always strings in canonical ``p/q`` form, never floats.  Pair
files for the equivalence verifier use ``{"dim": d, "pairs": [[X, Y], ...]}``.
"""
from __future__ import annotations

import csv
import io as _io
import json
from pathlib import Path
from typing import Union

from .exact_core import PointSet, RationalParseError, format_rat, parse_rat

PathLike = Union[str, Path]


class FormatError(ValueError):
    pass


def _row(p) -> list:
    return [format_rat(c) for c in p]


def _parse_row(row, dim: int, where: str) -> tuple:
    if not isinstance(row, list) or len(row) != dim:
        raise FormatError(f"{where}: expected a list of {dim} rational strings")
    out = []
    for j, tok in enumerate(row):
        if not isinstance(tok, str):
            raise FormatError(f"{where}, coordinate {j}: rationals must be strings, got {tok!r}")
        try:
            out.append(parse_rat(tok))
        except RationalParseError as exc:
            raise FormatError(f"{where}, coordinate {j}: {exc}") from None
    return tuple(out)


def dumps(s: PointSet) -> str:
    # one point per line keeps large files diffable
    meta = json.dumps({str(k): str(v) for k, v in s.meta.items()}, sort_keys=True)
    rows = ",\n".join("  " + json.dumps(_row(p)) for p in s.points)
    body = f"[\n{rows}\n ]" if rows else "[]"
    return f'{{\n "dim": {s.dim},\n "meta": {meta},\n "points": {body}\n}}\n'


def loads(text: str) -> PointSet:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("dim"), int):
        raise FormatError("point-set file needs an integer 'dim'")
    dim = doc["dim"]
    pts = [_parse_row(row, dim, f"point {i}") for i, row in enumerate(doc.get("points", []))]
    meta = doc.get("meta", {})
    if not isinstance(meta, dict):
        raise FormatError("'meta' must be an object")
    try:
        return PointSet(dim, tuple(pts), {str(k): str(v) for k, v in meta.items()})
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def write_pointset(s: PointSet, path: PathLike) -> None:
    Path(path).write_text(dumps(s), encoding="utf-8")


def read_pointset(path: PathLike) -> PointSet:
    return loads(Path(path).read_text(encoding="utf-8"))


def to_csv(s: PointSet) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"x{i}" for i in range(s.dim)])
    for p in s.points:
        w.writerow(_row(p))
    return buf.getvalue()


def dumps_pairs(pairs, dim: int) -> str:
    doc = {"dim": dim, "pairs": [[_row(x), _row(y)] for x, y in pairs]}
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def read_pairs(path: PathLike) -> tuple[int, list]:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or not isinstance(doc.get("dim"), int):
        raise FormatError("pair file needs an integer 'dim'")
    dim = doc["dim"]
    pairs = []
    for i, pair in enumerate(doc.get("pairs", [])):
        if not isinstance(pair, list) or len(pair) != 2:
            raise FormatError(f"pair {i}: expected two points")
        pairs.append((_parse_row(pair[0], dim, f"pair {i}, X"),
                      _parse_row(pair[1], dim, f"pair {i}, Y")))
    return dim, pairs
