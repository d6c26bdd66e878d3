"""Layered drawings: per-vertex points on integer layers, per-edge poly-lines
whose bends also sit on integer layers.

Layers are numbered top to bottom; the height of a drawing is the number of
integer layers it intersects, which for connected drawings equals
max layer - min layer + 1.  x-coordinates are exact rationals (plain ints
where possible).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from .trees import HalinGraph, RootedOrderedTree, SkirtedGraph

Point = Tuple[object, int]  # (x: rational, y: integer layer)
Edge = Tuple[int, int]


@dataclass
class LayeredDrawing:
    """A drawing of `graph` (tree, skirted or Halin graph)."""

    points: Dict[int, Point]
    routes: Dict[Edge, List[Point]]
    graph: object = None

    def edge_polyline(self, e: Edge) -> List[Point]:
        """Full point sequence of an edge: endpoint, bends, endpoint."""
        u, v = e
        return [self.points[u]] + list(self.routes[e]) + [self.points[v]]

    def layers_used(self) -> Tuple[int, int]:
        ys = [p[1] for p in self.points.values()]
        for bends in self.routes.values():
            ys.extend(b[1] for b in bends)
        return min(ys), max(ys)

    @property
    def height(self) -> int:
        lo, hi = self.layers_used()
        return hi - lo + 1

    def normalized(self) -> "LayeredDrawing":
        """Shift layers so the topmost used layer is 1."""
        lo, _ = self.layers_used()
        if lo == 1:
            return self
        d = 1 - lo
        return LayeredDrawing(
            points={v: (x, y + d) for v, (x, y) in self.points.items()},
            routes={e: [(x, y + d) for x, y in b] for e, b in self.routes.items()},
            graph=self.graph,
        )

    def segments(self) -> Iterator[Tuple[Point, Point, Edge]]:
        """All poly-line segments with their owning edge."""
        for e in self.routes:
            pts = self.edge_polyline(e)
            for a, b in zip(pts, pts[1:]):
                yield a, b, e

    def is_straight_line(self) -> bool:
        return all(not b for b in self.routes.values())

    def with_bends_at_layer_crossings(self) -> "LayeredDrawing":
        """Subdivide every segment at the integer layers it crosses, so all
        segments are horizontal or connect adjacent layers."""
        routes: Dict[Edge, List[Point]] = {}
        for e in self.routes:
            pts = self.edge_polyline(e)
            out: List[Point] = []
            for a, b in zip(pts, pts[1:]):
                out.append(a)
                out.extend(_crossing_points(a, b))
            routes[e] = out[1:]  # drop the leading endpoint
        return LayeredDrawing(dict(self.points), routes, self.graph)

    def remap_layers(self, ymap) -> "LayeredDrawing":
        """Apply an integer layer remap (after with_bends_at_layer_crossings
        this is planarity- and monotonicity-preserving when ymap is strictly
        monotone)."""
        return LayeredDrawing(
            points={v: (x, ymap(y)) for v, (x, y) in self.points.items()},
            routes={e: [(x, ymap(y)) for x, y in b] for e, b in self.routes.items()},
            graph=self.graph,
        )


def _crossing_points(a: Point, b: Point) -> List[Point]:
    """Interpolated points at the integer layers strictly between a and b."""
    (ax, ay), (bx, by) = a, b
    out: List[Point] = []
    if by > ay + 1:
        for y in range(ay + 1, by):
            out.append((_interp(ax, ay, bx, by, y), y))
    elif by < ay - 1:
        for y in range(ay - 1, by, -1):
            out.append((_interp(ax, ay, bx, by, y), y))
    return out


def _interp(ax, ay, bx, by, y):
    if ax == bx:
        return ax
    from .rational import rat
    return ax + rat((bx - ax) * (y - ay), (by - ay))


def y_monotone_route(pts: List[Point]) -> bool:
    """True if the point sequence never reverses its y direction
    (horizontal runs within a layer are allowed)."""
    sign = 0
    for (_, y0), (_, y1) in zip(pts, pts[1:]):
        d = y1 - y0
        if d == 0:
            continue
        s = 1 if d > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
    return True


# ---------------------------------------------------------------------------
# Graph adapters: uniform access to edges / rotations / cycle flags
# ---------------------------------------------------------------------------

def graph_edges(graph) -> List[Edge]:
    if isinstance(graph, (HalinGraph, SkirtedGraph)):
        return graph.all_edges()
    if isinstance(graph, RootedOrderedTree):
        return graph.edges()
    raise TypeError(f"unsupported graph object {type(graph)!r}")


def graph_cycle_edges(graph) -> List[Edge]:
    if isinstance(graph, HalinGraph):
        return list(graph.cycle_edges)
    if isinstance(graph, SkirtedGraph):
        return list(graph.path_edges)
    return []


def graph_rotation(graph, v: int) -> Tuple[int, ...]:
    if isinstance(graph, (HalinGraph, SkirtedGraph)):
        return graph.rotation(v)
    if isinstance(graph, RootedOrderedTree):
        return graph.rotation(v)
    raise TypeError(f"unsupported graph object {type(graph)!r}")


def graph_vertices(graph) -> List[int]:
    if isinstance(graph, (HalinGraph, SkirtedGraph)):
        return list(range(graph.skeleton.n))
    if isinstance(graph, RootedOrderedTree):
        return list(range(graph.n))
    raise TypeError(f"unsupported graph object {type(graph)!r}")
