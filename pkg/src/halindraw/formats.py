"""Drawing documents (JSON) and SVG rendering.

The JSON schema is lossless and deterministic: vertices are listed in id
order under their display names, child lists carry the rotation system,
x-coordinates are exact "p" or "p/q" strings and layers are integers.
Cycle/path edges are regenerated from the graph kind, so a parsed
document rebuilds the identical drawing (golden files stay byte-stable).
"""

from __future__ import annotations

import json
from typing import Dict, List, Optional, Tuple

from .drawing import LayeredDrawing, graph_cycle_edges
from .rational import format_rat, parse_rat
from .trees import (HalinGraph, RootedOrderedTree, SkirtedGraph, build_halin,
                    build_skirted, tree_from_children)

SCHEMA = "halindraw/drawing-v1"


class DocumentError(ValueError):
    pass


def _graph_doc(graph) -> dict:
    if isinstance(graph, HalinGraph):
        kind, tree = "halin", graph.skeleton
    elif isinstance(graph, SkirtedGraph):
        kind, tree = "skirted", graph.skeleton
    elif isinstance(graph, RootedOrderedTree):
        kind, tree = "tree", graph
    else:
        raise DocumentError(f"cannot serialize graph of type {type(graph)!r}")
    names = [tree.label_of(v) for v in range(tree.n)]
    if len(set(names)) != tree.n:
        raise DocumentError("vertex names collide")
    return {
        "kind": kind,
        "root": names[tree.root],
        "vertices": names,
        "children": {names[v]: [names[c] for c in tree.children[v]]
                     for v in range(tree.n)},
    }


def _graph_from_doc(doc: dict):
    names = doc["vertices"]
    idx = {name: i for i, name in enumerate(names)}
    children = [[idx[c] for c in doc["children"].get(name, [])]
                for name in names]
    labels = {i: name for i, name in enumerate(names)}
    tree = tree_from_children(children, idx[doc["root"]], labels)
    kind = doc.get("kind", "tree")
    if kind == "halin":
        return build_halin(tree), tree
    if kind == "skirted":
        return build_skirted(tree), tree
    if kind == "tree":
        return tree, tree
    raise DocumentError(f"unknown graph kind {kind!r}")


def serialize_drawing(d: LayeredDrawing, metadata: Optional[dict] = None) -> str:
    """Serialize a drawing (with its graph) into deterministic JSON."""
    if d.graph is None:
        raise DocumentError("drawing has no graph attached")
    gdoc = _graph_doc(d.graph)
    names = gdoc["vertices"]

    def pt(p):
        x, y = p
        if not isinstance(y, int):
            raise DocumentError(f"non-integral layer {y!r}")
        return [format_rat(x), y]

    doc = {
        "schema": SCHEMA,
        "graph": gdoc,
        "vertexPos": {names[v]: pt(p) for v, p in sorted(d.points.items())},
        "edgeRoutes": [
            {"u": names[u], "v": names[v], "bends": [pt(b) for b in bends]}
            for (u, v), bends in sorted(d.routes.items())
        ],
        "metadata": metadata or {},
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def parse_drawing(text: str) -> LayeredDrawing:
    """Parse a drawing document; exact inverse of serialize_drawing."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise DocumentError(f"not valid JSON: {err}") from None
    if doc.get("schema") != SCHEMA:
        raise DocumentError(f"unsupported schema {doc.get('schema')!r}")
    graph, tree = _graph_from_doc(doc["graph"])
    idx = {tree.label_of(v): v for v in range(tree.n)}

    def pt(raw):
        x_raw, y = raw
        if not isinstance(y, int) or isinstance(y, bool):
            raise DocumentError(f"layer must be an integer, got {y!r}")
        return (parse_rat(str(x_raw)), y)

    points = {idx[name]: pt(raw) for name, raw in doc["vertexPos"].items()}
    routes = {}
    for rec in doc["edgeRoutes"]:
        routes[(idx[rec["u"]], idx[rec["v"]])] = [pt(b) for b in rec["bends"]]
    return LayeredDrawing(points, routes, graph)


# ---------------------------------------------------------------------------
# SVG
# ---------------------------------------------------------------------------

SVG_HEADER = ('<?xml version="1.0" encoding="UTF-8"?>\n'
              '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
              'viewBox="{vb}" width="{w}" height="{h}">\n')


def render_svg(d: LayeredDrawing, scale: float = 24.0, labels: bool = False,
               layer_grid: bool = True, precision: int = 4) -> str:
    """Render to SVG 1.1: one polyline per edge (cycle edges dashed), one
    marker per vertex, a horizontal guide per layer.  Rational coordinates
    are rendered at display precision only."""
    d = d.normalized()
    cyc = set(graph_cycle_edges(d.graph)) if d.graph is not None else set()
    cyc |= {(b, a) for (a, b) in cyc}

    def fx(x) -> float:
        return round(float(x) * scale, precision)

    def fy(y) -> float:
        return round(float(y) * scale, precision)

    xs = [fx(p[0]) for p in d.points.values()]
    for bends in d.routes.values():
        xs.extend(fx(b[0]) for b in bends)
    lo, hi = d.layers_used()
    pad = scale
    x0, x1 = (min(xs) if xs else 0) - pad, (max(xs) if xs else 0) + pad
    y0, y1 = fy(lo) - pad, fy(hi) + pad
    out = [SVG_HEADER.format(vb=f"{x0} {y0} {x1 - x0} {y1 - y0}",
                             w=round(x1 - x0, 2), h=round(y1 - y0, 2))]
    if layer_grid:
        for y in range(lo, hi + 1):
            out.append(f'<line x1="{x0}" y1="{fy(y)}" x2="{x1}" y2="{fy(y)}" '
                       'stroke="#dddddd" stroke-width="0.5"/>\n')
    for e, bends in sorted(d.routes.items()):
        pts = d.edge_polyline(e)
        coords = " ".join(f"{fx(x)},{fy(y)}" for x, y in pts)
        style = ('stroke="#3366cc" stroke-dasharray="6,4"' if e in cyc
                 else 'stroke="#222222"')
        out.append(f'<polyline points="{coords}" fill="none" {style} '
                   'stroke-width="1.4"/>\n')
    for v, (x, y) in sorted(d.points.items()):
        out.append(f'<circle cx="{fx(x)}" cy="{fy(y)}" r="2.6" '
                   'fill="#111111"/>\n')
        if labels and d.graph is not None:
            from .drawing import graph_vertices  # noqa: F401
            name = _vertex_name(d.graph, v)
            out.append(f'<text x="{fx(x) + 4}" y="{fy(y) - 4}" '
                       f'font-size="10">{name}</text>\n')
    out.append("</svg>\n")
    return "".join(out)


def _vertex_name(graph, v: int) -> str:
    tree = graph if isinstance(graph, RootedOrderedTree) else graph.skeleton
    return tree.label_of(v)
