"""Command-line surface: width, draw, gen, validate, render.

Exit codes: 0 success / all verdicts true, 1 a validation verdict failed,
2 malformed input or arguments.  All configuration is flags; no
environment variables are consulted.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .drawing import LayeredDrawing
from .families import FamilyParams, gen_C, gen_Chat, gen_F, gen_doubled
from .formats import (DocumentError, parse_drawing, render_svg,
                      serialize_drawing)
from .layout import (DrawingType, close_cycle, draw_halin_ymonotone,
                     draw_skirted)
from .pipeline import transform_to_halin
from .straighten import ymonotone_to_straightline
from .trees import (RootedOrderedTree, TreeFormatError, build_halin,
                    parse_edge_list, parse_tree, reroot_at,
                    serialize_edge_list, serialize_tree)
from .validate import check_bound, check_plane, check_type, validate_drawing
from .width import best_leaf_root, chi_ext, horton_strahler, width_report


def _load_tree(path: str) -> RootedOrderedTree:
    text = Path(path).read_text() if path != "-" else sys.stdin.read()
    stripped = text.lstrip()
    if stripped.lower().startswith("root"):
        return parse_edge_list(text)
    return parse_tree(text)


def _write(path, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _resolve_root(tree: RootedOrderedTree, spec: str) -> RootedOrderedTree:
    if spec == "auto":
        leaf, _ = best_leaf_root(tree)
        return reroot_at(tree, leaf)
    by_label = {tree.label_of(v): v for v in range(tree.n)}
    if spec not in by_label:
        raise TreeFormatError(f"no vertex named {spec!r}")
    return reroot_at(tree, by_label[spec])


def cmd_width(args) -> int:
    tree = _load_tree(args.tree)
    _write(args.out, json.dumps(width_report(tree).as_dict(tree),
                                indent=1, sort_keys=True) + "\n")
    return 0


def _draw_one(tree: RootedOrderedTree, args) -> LayeredDrawing:
    binary = args.binary
    use_binary = (binary == "on") or (binary == "auto"
                                      and tree.max_degree() <= 3)
    if args.type:
        rooted = _resolve_root(tree, args.root)
        td = draw_skirted(rooted, DrawingType.parse(args.type),
                          binary=use_binary)
        return td.drawing
    halin = build_halin(tree)
    if args.mode == "polyline-transform":
        return transform_to_halin(halin)
    ymono = draw_halin_ymonotone(halin, binary=args.binary)
    if args.mode == "ymonotone":
        return ymono
    return ymonotone_to_straightline(ymono)


def cmd_draw(args) -> int:
    if args.batch:
        outdir = Path(args.out or args.batch)
        for path in sorted(Path(args.batch).glob("*.tree")):
            drawing = _draw_one(_load_tree(str(path)), args)
            meta = {"algorithm": args.mode}
            (outdir / (path.stem + ".json")).write_text(
                serialize_drawing(drawing, meta))
        return 0
    tree = _load_tree(args.tree)
    drawing = _draw_one(tree, args)
    leaf, rpw_star = best_leaf_root(tree)
    meta = {
        "algorithm": args.mode if not args.type else f"skirted-{args.type}",
        "rpwStar": rpw_star,
        "chiExt": chi_ext(reroot_at(tree, leaf)),
        "height": drawing.height,
    }
    _write(args.out, serialize_drawing(drawing, meta))
    if args.svg:
        _write(args.svg, render_svg(drawing, labels=args.labels))
    return 0


def cmd_gen(args) -> int:
    params = FamilyParams(args.w, args.S, args.L)
    tree = {"C": gen_C, "F": gen_F, "Chat": gen_Chat,
            "doubled": gen_doubled}[args.family](params)
    if args.format == "edges":
        _write(args.out, serialize_edge_list(tree))
    else:
        _write(args.out, serialize_tree(tree) + "\n")
    return 0


def cmd_validate(args) -> int:
    drawing = parse_drawing(Path(args.drawing).read_text())
    report = validate_drawing(drawing)
    graph = drawing.graph
    if args.graph:
        graph = build_halin(_load_tree(args.graph))
    report = check_plane(drawing, graph, report=report)
    if args.bound:
        params = {}
        for kv in args.params or []:
            k, _, v = kv.partition("=")
            params[k] = int(v)
        report.bound = check_bound(drawing, args.bound, **params)
    _write(args.out, json.dumps(report.as_dict(), indent=1, sort_keys=True) + "\n")
    return 0 if report.all_ok else 1


def cmd_render(args) -> int:
    drawing = parse_drawing(Path(args.drawing).read_text())
    _write(args.out, render_svg(drawing, scale=args.scale,
                                labels=args.labels))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="halindraw",
        description="Layered drawings of Halin graphs with provably small height")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("width", help="print the width report for a tree")
    p.add_argument("tree")
    p.add_argument("--out")
    p.set_defaults(func=cmd_width)

    p = sub.add_parser("draw", help="draw the Halin graph of a skeleton tree")
    p.add_argument("tree", nargs="?")
    p.add_argument("--mode", default="straightline",
                   choices=["straightline", "ymonotone", "polyline-transform"])
    p.add_argument("--type", help="skirted-graph drawing type (no cycle)")
    p.add_argument("--root", default="auto")
    p.add_argument("--binary", default="auto", choices=["auto", "on", "off"])
    p.add_argument("--batch", help="directory of .tree files")
    p.add_argument("--out")
    p.add_argument("--svg")
    p.add_argument("--labels", action="store_true")
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("gen", help="generate a lower-bound family tree")
    p.add_argument("family", choices=["C", "F", "Chat", "doubled"])
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--S", type=int, default=FamilyParams.__dataclass_fields__["S"].default)
    p.add_argument("--L", type=int, default=FamilyParams.__dataclass_fields__["L"].default)
    p.add_argument("--format", default="text", choices=["text", "edges"])
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("validate", help="validate a drawing document")
    p.add_argument("drawing")
    p.add_argument("--graph", help="tree file; validates against its Halin graph")
    p.add_argument("--bound", help="bound formula id")
    p.add_argument("--params", nargs="*", help="bound inputs as key=value")
    p.add_argument("--out")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("render", help="render a drawing document to SVG")
    p.add_argument("drawing")
    p.add_argument("--out")
    p.add_argument("--scale", type=float, default=24.0)
    p.add_argument("--labels", action="store_true")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TreeFormatError, DocumentError, ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
