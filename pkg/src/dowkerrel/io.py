"""Reading and writing relations, vertex maps and shift witnesses.

Three relation formats are understood:

matrix
    Lines of whitespace-separated 0/1 entries. Optional ``#x: a b c`` and
    ``#y: d e f`` headers name the rows and columns. A square matrix without
    a ``#y:`` header is read as a self-relation.
edges
    One ``source target`` pair per line, giving a self-relation on the union
    of endpoints (in order of first appearance) unless a ``#vertices:``
    header fixes the vertex list.
json
    ``{"source_labels": [...], "target_labels": [...], "rows": [[0, 1], ...]}``.

Other lines starting with ``#`` and blank lines are ignored.
"""
from __future__ import annotations

import json
from pathlib import Path

from .errors import ParseError, RelationError
from .morphism import ShiftWitness
from .relation import Relation, from_matrix, from_pairs

FORMATS = ("auto", "matrix", "edges", "json")


def _header(line: str, key: str):
    body = line[1:].strip()
    if body.startswith(key + ":"):
        return body[len(key) + 1:].split()
    return None


def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line:
            yield lineno, line


def sniff_format(text: str) -> str:
    if text.lstrip().startswith("{"):
        return "json"
    for _, line in _data_lines(text):
        if line.startswith("#"):
            if _header(line, "vertices") is not None:
                return "edges"
            continue
        if any(tok not in ("0", "1") for tok in line.split()):
            return "edges"
    return "matrix"


def parse_matrix(text: str) -> Relation:
    xs = ys = None
    rows: list[list[int]] = []
    width = None
    for lineno, line in _data_lines(text):
        if line.startswith("#"):
            xs = _header(line, "x") if _header(line, "x") is not None else xs
            ys = _header(line, "y") if _header(line, "y") is not None else ys
            continue
        toks = line.split()
        if any(t not in ("0", "1") for t in toks):
            raise ParseError(f"matrix entries must be 0 or 1, got {line!r}", lineno)
        if width is not None and len(toks) != width:
            raise ParseError(f"row has {len(toks)} entries, expected {width}", lineno)
        width = len(toks)
        rows.append([int(t) for t in toks])
    if width is None and ys:
        width = len(ys)
    try:
        if not rows:
            return Relation(tuple(xs or ()), tuple(ys or xs or ()), ())
        return from_matrix(rows, xs, ys)
    except RelationError as exc:
        raise ParseError(str(exc)) from None


def parse_edges(text: str) -> Relation:
    pinned = None
    seen: dict[str, None] = {}
    pairs = []
    for lineno, line in _data_lines(text):
        if line.startswith("#"):
            v = _header(line, "vertices")
            if v is not None:
                if pinned is not None:
                    raise ParseError("more than one #vertices: header", lineno)
                pinned = v
            continue
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"expected 'source target', got {line!r}", lineno)
        if pinned is not None and any(t not in pinned for t in toks):
            bad = next(t for t in toks if t not in pinned)
            raise ParseError(f"vertex {bad!r} is not listed in #vertices:", lineno)
        seen.setdefault(toks[0])
        seen.setdefault(toks[1])
        pairs.append((toks[0], toks[1]))
    labels = pinned if pinned is not None else list(seen)
    try:
        return from_pairs(pairs, labels)
    except RelationError as exc:
        raise ParseError(str(exc)) from None


def relation_from_dict(data: dict) -> Relation:
    try:
        rows = data["rows"]
        return from_matrix(rows, data.get("source_labels"), data.get("target_labels"))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad relation JSON: {exc}") from None
    except RelationError as exc:
        raise ParseError(str(exc)) from None


def parse_json(text: str) -> Relation:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno) from None
    if not isinstance(data, dict):
        raise ParseError("relation JSON must be an object")
    return relation_from_dict(data)


def parse_relation(text: str, fmt: str = "auto") -> Relation:
    if fmt == "auto":
        fmt = sniff_format(text)
    if fmt == "matrix":
        return parse_matrix(text)
    if fmt == "edges":
        return parse_edges(text)
    if fmt == "json":
        return parse_json(text)
    raise ValueError(f"unknown relation format {fmt!r}")


def read_relation(path, fmt: str = "auto") -> Relation:
    path = Path(path)
    if fmt == "auto" and path.suffix == ".json":
        fmt = "json"
    return parse_relation(path.read_text(encoding="utf-8"), fmt)


def relation_to_dict(R: Relation) -> dict:
    return {
        "source_labels": list(R.source_labels),
        "target_labels": list(R.target_labels),
        "rows": R.matrix(),
    }


def format_matrix(R: Relation) -> str:
    lines = ["#x: " + " ".join(map(str, R.source_labels)), "#y: " + " ".join(map(str, R.target_labels))]
    lines += [" ".join(map(str, row)) for row in R.matrix()]
    return "\n".join(lines) + "\n"


def format_edges(R: Relation) -> str:
    lines = ["#vertices: " + " ".join(map(str, R.source_labels))]
    lines += [f"{x} {y}" for x, y in R.pairs()]
    return "\n".join(lines) + "\n"


def _load_json(path):
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc.msg}", exc.lineno) from None


def read_vertex_map(path) -> dict:
    """JSON object ``{"x1": "y2", ...}``."""
    data = _load_json(path)
    if not isinstance(data, dict) or not all(isinstance(v, str) for v in data.values()):
        raise ParseError(f"{path}: a vertex map is a JSON object of label -> label")
    return data


def read_multi_map(path) -> dict:
    """JSON object ``{"x1": ["y1", "y2"], ...}``."""
    data = _load_json(path)
    if not isinstance(data, dict) or not all(isinstance(v, list) for v in data.values()):
        raise ParseError(f"{path}: a multivalued map is a JSON object of label -> list of labels")
    return {k: frozenset(v) for k, v in data.items()}


def _witness_relation(obj, src, tgt, name) -> Relation:
    if isinstance(obj, dict):
        return relation_from_dict(obj)
    if isinstance(obj, list):
        try:
            return from_matrix(obj, src, tgt)
        except RelationError as exc:
            raise ParseError(f"{name}: {exc}") from None
    raise ParseError(f"{name} must be a matrix or a relation object")


def shift_witness_from_dict(data: dict, R1: Relation, R2: Relation) -> ShiftWitness:
    """``{"S": rows-or-relation, "T": rows-or-relation, "lag": l}``; bare
    rows take their labels from ``R1`` and ``R2``."""
    try:
        S, T, lag = data["S"], data["T"], data["lag"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"shift witness needs S, T and lag: missing {exc}") from None
    if not isinstance(lag, int) or lag < 1:
        raise ParseError("lag must be a positive integer")
    X, Y = R1.source_labels, R2.source_labels
    return ShiftWitness(_witness_relation(S, X, Y, "S"), _witness_relation(T, Y, X, "T"), lag)


def read_shift_witness(path, R1: Relation, R2: Relation) -> ShiftWitness:
    data = _load_json(path)
    if not isinstance(data, dict):
        raise ParseError(f"{path}: shift witness must be a JSON object")
    return shift_witness_from_dict(data, R1, R2)


def shift_witness_to_dict(w: ShiftWitness) -> dict:
    return {"S": relation_to_dict(w.S), "T": relation_to_dict(w.T), "lag": w.lag}
