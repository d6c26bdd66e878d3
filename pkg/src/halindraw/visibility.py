"""Flat visibility representations of layered straight-line tree drawings.

Every vertex becomes a horizontal segment on its own layer and every edge
a single vertical (or, between same-layer vertices, horizontal) segment,
interior-disjoint, with the height and the plane embedding of the input
drawing preserved.

Construction: one node per vertex-segment end (left/right fence) and one
node per edge column, partially ordered by
  * left fence < edge columns at the vertex < right fence,
  * per layer, the left-to-right order of vertices and edge crossings
    taken from the input drawing,
  * per vertex, the fan order of its up- and down-edges (the embedding).
The order is a DAG (the input drawing witnesses planarity), and longest-
path ranks give compact integer columns; fences sit strictly beside the
outermost attachment, so every segment overhangs its verticals by at
least one unit for free.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .drawing import LayeredDrawing
from .rational import rat

Edge = Tuple[int, int]


@dataclass
class FlatVisibilityRepresentation:
    """Segments on an integer grid; rows follow the input layers."""

    vertex_seg: Dict[int, Tuple[int, int, int]]  # v -> (row, x1, x2)
    edge_seg: Dict[Edge, Tuple]   # ("v", col, row1, row2) | ("h", row, x1, x2)
    height: int
    width: int

    def rotation(self, v: int) -> List[int]:
        """Counter-clockwise neighbor order around the vertex segment:
        west cap, down attachments west to east, east cap, up attachments
        east to west."""
        row, x1, x2 = self.vertex_seg[v]
        west = east = None
        ups: List[Tuple[int, int]] = []
        downs: List[Tuple[int, int]] = []
        for e, seg in self.edge_seg.items():
            if v not in e:
                continue
            other = e[0] if e[1] == v else e[1]
            if seg[0] == "h":
                if seg[2] == x2:
                    east = other
                else:
                    west = other
            else:
                _, col, r1, r2 = seg
                if max(r1, r2) > row:
                    downs.append((col, other))
                else:
                    ups.append((col, other))
        out: List[int] = []
        if west is not None:
            out.append(west)
        out.extend(w for _, w in sorted(downs))
        if east is not None:
            out.append(east)
        out.extend(w for _, w in sorted(ups, reverse=True))
        return out


class _DirCmp:
    """Exact west-to-east comparison of edge directions within a fan."""

    @staticmethod
    def key(dx, dy):
        return functools.cmp_to_key(_DirCmp.cmp)((dx, dy))

    @staticmethod
    def cmp(a, b):
        cross = a[0] * b[1] - b[0] * a[1]
        if cross < 0:
            return -1
        if cross > 0:
            return 1
        return 0


def build_fvr(d: LayeredDrawing):
    """Internal builder: returns the representation plus per-vertex ordered
    attachment bookkeeping used by the Halin transform."""
    if not d.is_straight_line():
        raise ValueError("visibility conversion needs a straight-line input")
    d = d.normalized()
    points = d.points

    nodes: Dict[object, int] = {}
    succ: List[List[int]] = []

    def node(key) -> int:
        if key not in nodes:
            nodes[key] = len(succ)
            succ.append([])
        return nodes[key]

    def arc(a, b) -> None:
        succ[node(a)].append(node(b))

    horizontals: List[Edge] = []
    verticals: List[Edge] = []
    for e in d.routes:
        (x1, y1), (x2, y2) = points[e[0]], points[e[1]]
        if y1 == y2:
            horizontals.append(e)
        else:
            verticals.append(e)

    for v in points:
        arc(("L", v), ("R", v))
    for e in verticals:
        for v in e:
            arc(("L", v), ("E", e))
            arc(("E", e), ("R", v))

    # Per-layer orders from the input geometry.
    rows: Dict[int, List[Tuple[object, object]]] = {}
    for v, (x, y) in points.items():
        rows.setdefault(y, []).append((x, ("v", v)))
    for e in verticals:
        (x1, y1), (x2, y2) = points[e[0]], points[e[1]]
        if y1 > y2:
            (x1, y1), (x2, y2) = (x2, y2), (x1, y1)
        for y in range(y1 + 1, y2):
            t = rat(y - y1, y2 - y1)
            rows.setdefault(y, []).append((x1 + t * (x2 - x1), ("e", e)))
    for y, items in rows.items():
        items.sort(key=lambda it: it[0])
        for (xa, a), (xb, b) in zip(items, items[1:]):
            if xa == xb:
                raise ValueError("input drawing is not planar")
            if a[0] == "v" and b[0] == "v":
                arc(("R", a[1]), ("L", b[1]))
            elif a[0] == "v":
                arc(("R", a[1]), ("E", b[1]))
            elif b[0] == "v":
                arc(("E", a[1]), ("L", b[1]))
            else:
                arc(("E", a[1]), ("E", b[1]))

    # Fan orders per vertex (this pins the embedding).
    fans: Dict[int, Dict[str, list]] = {v: {"up": [], "down": []} for v in points}
    for e in verticals:
        for v in e:
            other = e[1] if e[0] == v else e[0]
            dx = points[other][0] - points[v][0]
            dy = points[other][1] - points[v][1]
            side = "down" if dy > 0 else "up"
            fans[v][side].append(((dx, abs(dy)), e))
    for v, f in fans.items():
        for side in ("up", "down"):
            f[side].sort(key=lambda t: _DirCmp.key(*t[0]))
            for (_, e1), (_, e2) in zip(f[side], f[side][1:]):
                arc(("E", e1), ("E", e2))

    # Horizontal edges: order of endpoints along the shared row is already
    # in the row chains; remember which cap each one uses.
    west_att: Dict[int, Optional[Edge]] = {v: None for v in points}
    east_att: Dict[int, Optional[Edge]] = {v: None for v in points}
    for e in horizontals:
        u, w = e
        if points[u][0] > points[w][0]:
            u, w = w, u
        east_att[u] = e
        west_att[w] = e

    # Longest-path ranks over the DAG.
    n = len(succ)
    indeg = [0] * n
    for outs in succ:
        for b in outs:
            indeg[b] += 1
    rank = [0] * n
    stack = [i for i in range(n) if indeg[i] == 0]
    seen = 0
    while stack:
        a = stack.pop()
        seen += 1
        for b in succ[a]:
            if rank[b] < rank[a] + 1:
                rank[b] = rank[a] + 1
            indeg[b] -= 1
            if indeg[b] == 0:
                stack.append(b)
    if seen != n:
        raise ValueError("no visibility representation: order constraints cycle")
    # Tie-break equal ranks into globally distinct columns (incomparable
    # nodes may be ordered arbitrarily); distinct columns keep the later
    # pipeline stages free of attachment collisions.
    by_rank = sorted(range(n), key=lambda i: (rank[i], i))
    position = [0] * n
    for p, i in enumerate(by_rank):
        position[i] = p

    def col(key) -> int:
        return position[nodes[key]]

    vertex_seg = {v: (points[v][1], col(("L", v)), col(("R", v)))
                  for v in points}
    edge_seg: Dict[Edge, Tuple] = {}
    for e in verticals:
        (x1, y1), (x2, y2) = points[e[0]], points[e[1]]
        edge_seg[e] = ("v", col(("E", e)), min(y1, y2), max(y1, y2))
    for e in horizontals:
        u, w = e
        if points[u][0] > points[w][0]:
            u, w = w, u
        edge_seg[e] = ("h", points[u][1], col(("R", u)), col(("L", w)))

    lo, hi = d.layers_used()
    fvr = FlatVisibilityRepresentation(
        vertex_seg=vertex_seg,
        edge_seg=edge_seg,
        height=hi - lo + 1,
        width=n,
    )
    attachments = {
        v: {
            "up": [(col(("E", e)), e) for _, e in fans[v]["up"]],
            "down": [(col(("E", e)), e) for _, e in fans[v]["down"]],
            "west": west_att[v],
            "east": east_att[v],
        }
        for v in points
    }
    return fvr, attachments


def to_flat_visibility(d: LayeredDrawing) -> FlatVisibilityRepresentation:
    """Convert a straight-line plane layered drawing of a tree into a flat
    visibility representation of the same height and embedding."""
    from .validate import check_planar
    if not check_planar(d).ok:
        raise ValueError("input drawing is not planar")
    fvr, _ = build_fvr(d)
    return fvr
