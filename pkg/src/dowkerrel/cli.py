"""Command-line front end.

Exit codes: 0 on success, 1 when a hypothesis fails (a filtration on a
non-total relation, a power of a non-self-relation, a failed ``verify``),
2 on unreadable or malformed input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import digraph, io, morphism
from .dowker import dowker_K, dowker_L
from .errors import (
    DowkerError,
    HypothesisError,
    LabelMismatchError,
    MorphismError,
    NotBijectiveError,
    NotConvergentError,
    NotSelfRelationError,
    NotStronglyConnectedError,
    ParseError,
    RelationError,
)
from .persistence import barcode, bifiltration_grid, power_filtration
from .relation import Relation, domain, eventual_period, image, is_surjective, is_total, power
from .simplicial import DEFAULT_DIM_CAP, betti_numbers

EXIT_OK, EXIT_HYPOTHESIS, EXIT_PARSE = 0, 1, 2


class _ParseFailure(Exception):
    pass


def _read(path: str, fmt: str) -> Relation:
    try:
        return io.read_relation(path, fmt)
    except OSError as exc:
        raise _ParseFailure(f"{path}: {exc.strerror}") from None
    except ParseError as exc:
        raise _ParseFailure(f"{path}: {exc}") from None


def _labels(vs) -> list:
    return [str(v) for v in vs]


def _ordered(block, labels) -> list:
    return [str(v) for v in labels if v in block]


def _emit(obj) -> None:
    print(json.dumps(obj, ensure_ascii=False))


def analyze_report(R: Relation) -> dict:
    m, n = R.shape
    report = {
        "shape": [m, n],
        "self_relation": R.is_self_relation,
        "domain_size": len(domain(R)),
        "image_size": len(image(R)),
        "total": is_total(R),
        "surjective": is_surjective(R),
    }
    if not R.is_self_relation:
        return report
    labels = R.source_labels
    j, p = eventual_period(R)
    cc = digraph.connected_components(R)
    scc = digraph.strongly_connected_components(R)
    report.update(
        {
            "eventual_period": [j, p],
            "connected_components": len(cc),
            "strongly_connected_components": len(scc),
            "acyclic": digraph.is_acyclic(R),
            "simple": digraph.is_simple(R),
            "strongly_connected": digraph.is_strongly_connected(R),
            "positive_trace": digraph.has_positive_trace(R),
        }
    )
    if report["strongly_connected"]:
        try:
            qs = digraph.q_classes(R)
            report["q"] = qs.q
            report["q_classes"] = [_ordered(c, labels) for c in qs.classes]
        except NotStronglyConnectedError:
            pass
    if p == 1:
        report["minima"] = _ordered(digraph.minima(R), labels)
        report["maxima"] = _ordered(digraph.maxima(R), labels)
    return report


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def format_analyze_text(rep: dict) -> str:
    m, n = rep["shape"]
    kind = "self-relation" if rep["self_relation"] else "not self-relation"
    dom = "Dom = X" if rep["total"] else "Dom ≠ X"
    ima = "Ima = Y" if rep["surjective"] else "Ima ≠ Y"
    lines = [
        f"{m}×{n}, {kind}",
        f"domain: {rep['domain_size']}/{m} ({dom})",
        f"image: {rep['image_size']}/{n} ({ima})",
    ]
    if not rep["self_relation"]:
        return "\n".join(lines)
    j, p = rep["eventual_period"]
    lines += [
        f"eventual period ({j}, {p})",
        f"connected components: {rep['connected_components']}",
        f"strongly connected components: {rep['strongly_connected_components']}",
        f"acyclic: {_yn(rep['acyclic'])}",
        f"simple: {_yn(rep['simple'])}",
        f"strongly connected: {_yn(rep['strongly_connected'])}",
        f"positive trace: {_yn(rep['positive_trace'])}",
    ]
    if "q" in rep:
        lines.append(f"q = {rep['q']}")
        lines.append("q classes: " + " | ".join(" ".join(c) for c in rep["q_classes"]))
    if "minima" in rep:
        lines.append("minima: " + " ".join(rep["minima"]))
        lines.append("maxima: " + " ".join(rep["maxima"]))
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    R = _read(args.input, args.input_format)
    rep = analyze_report(R)
    if args.format == "json":
        _emit(rep)
    else:
        print(format_analyze_text(rep))
    return EXIT_OK


def cmd_complex(args) -> int:
    R = _read(args.input, args.input_format)
    if args.power != 1:
        if not R.is_self_relation:
            raise NotSelfRelationError("powers other than 1 need a self-relation")
        R = power(R, args.power)
    K = dowker_K(R) if args.side == "K" else dowker_L(R)
    betti = betti_numbers(K, args.dim_cap)
    if args.format == "json":
        _emit({"side": args.side, "power": args.power, "universe": _labels(K.universe),
               "maximal": [_labels(s) for s in K.maximal], "betti": list(betti)})
    else:
        print(f"{args.side}_(R^{args.power}): {len(K.maximal)} maximal simplices")
        for s in K.maximal:
            print("  [" + ", ".join(_labels(s)) + "]")
        print("betti: (" + ", ".join(map(str, betti)) + ")")
    return EXIT_OK


def cmd_barcode(args) -> int:
    R = _read(args.input, args.input_format)
    fc = power_filtration(R, args.side, args.include_zero)
    bc = barcode(fc, args.dim_cap)
    if args.format == "json":
        out = bc.to_dict()
        out["eventual_period"] = list(fc.eventual)
        out["levels"] = list(fc.powers)
        _emit(out)
    else:
        print(bc.to_text())
    return EXIT_OK


def cmd_bifiltration(args) -> int:
    R = _read(args.input, args.input_format)
    grid = bifiltration_grid(R, args.dim_cap)
    if args.format == "json":
        _emit({"index": grid.index,
               "cells": [{"m": m, "n": n, "betti": list(b)} for (m, n), b in sorted(grid.betti.items())]})
    else:
        sys.stdout.write(grid.to_csv())
    return EXIT_OK


VERIFY_KINDS = ("homomorphism", "conjugacy", "right", "left", "multi-right", "multi-left", "shift")


def _describe(kind: str, bad) -> str:
    if kind == "shift":
        return f"equation {bad} fails"
    if kind == "conjugacy":
        return f"φ∘R1 and R2∘φ differ at ({bad[0]}, {bad[1]})"
    if kind == "homomorphism":
        return f"{bad[0]} R {bad[1]} but not f({bad[0]}) R' f({bad[1]})"
    if kind == "right":
        return f"{bad[0]} R {bad[1]} but not {bad[0]} R' f({bad[1]})"
    if kind == "left":
        return f"{bad[0]} R {bad[1]} but not g({bad[0]}) R' {bad[1]}"
    if kind == "multi-right":
        return f"{bad[0]} R {bad[1]} but not {bad[0]} R' {bad[2]} for {bad[2]} in F({bad[1]})"
    return f"{bad[0]} R {bad[1]} but not {bad[2]} R' {bad[1]} for {bad[2]} in G({bad[0]})"


def cmd_verify(args) -> int:
    R1 = _read(args.first, args.input_format)
    R2 = _read(args.second, args.input_format)
    try:
        if args.kind == "shift":
            w = io.read_shift_witness(args.witness, R1, R2)
            bad = morphism.shift_equivalence_violation(R1, R2, w)
        elif args.kind in ("multi-right", "multi-left"):
            F = io.read_multi_map(args.witness)
            check = morphism.multi_right_morphism_violation if args.kind == "multi-right" \
                else morphism.multi_left_morphism_violation
            bad = check(F, R1, R2)
        else:
            f = io.read_vertex_map(args.witness)
            check = {
                "homomorphism": morphism.graph_homomorphism_violation,
                "conjugacy": morphism.conjugacy_violation,
                "right": morphism.right_morphism_violation,
                "left": morphism.left_morphism_violation,
            }[args.kind]
            bad = check(f, R1, R2)
    except NotBijectiveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except OSError as exc:
        raise _ParseFailure(f"{args.witness}: {exc.strerror}") from None
    except (ParseError, LabelMismatchError, MorphismError, RelationError) as exc:
        raise _ParseFailure(f"{args.witness}: {exc}") from None
    holds = bad is None
    if args.format == "json":
        violation = None if holds else (bad if isinstance(bad, str) else [str(v) for v in bad])
        _emit({"kind": args.kind, "holds": holds, "violation": violation})
    else:
        print("true" if holds else "false: " + _describe(args.kind, bad))
    return EXIT_OK if holds else EXIT_HYPOTHESIS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dowkerrel", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats, default, dim_cap=True):
        p.add_argument("--input-format", choices=io.FORMATS, default="auto")
        p.add_argument("--format", choices=formats, default=default)
        if dim_cap:
            p.add_argument("--dim-cap", type=int, default=DEFAULT_DIM_CAP)

    p = sub.add_parser("analyze", help="dimensions, Dom/Ima, eventual period, graph structure")
    p.add_argument("input")
    common(p, ("text", "json"), "text", dim_cap=False)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("complex", help="maximal simplices and Betti numbers of K or L")
    p.add_argument("input")
    p.add_argument("--side", choices=("K", "L"), default="K")
    p.add_argument("--power", type=int, default=1)
    common(p, ("json", "text"), "json")
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("barcode", help="barcode of the power filtration")
    p.add_argument("input")
    p.add_argument("--side", choices=("K", "L"), default="K")
    p.add_argument("--include-zero", action="store_true")
    common(p, ("text", "json"), "text")
    p.set_defaults(func=cmd_barcode)

    p = sub.add_parser("bifiltration", help="Betti grid of K_(R^m) ∩ L_(R^n)")
    p.add_argument("input")
    common(p, ("csv", "json"), "csv")
    p.set_defaults(func=cmd_bifiltration)

    p = sub.add_parser("verify", help="check a morphism, conjugacy or shift-equivalence witness")
    p.add_argument("kind", choices=VERIFY_KINDS)
    p.add_argument("first", help="relation R (or R1)")
    p.add_argument("second", help="relation R' (or R2)")
    p.add_argument("witness", help="JSON vertex map, multivalued map, or shift witness")
    common(p, ("text", "json"), "text", dim_cap=False)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "dim_cap", 0) < 0:
        print("error: --dim-cap must be non-negative", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args)
    except _ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (HypothesisError, NotSelfRelationError, NotConvergentError, NotStronglyConnectedError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except DowkerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
