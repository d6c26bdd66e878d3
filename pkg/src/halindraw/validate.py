"""Exact, independent certification of layered drawings.

Everything here works on exact rationals and shares no geometry helpers
with the constructors (only the rational kernel), so these checks serve as
the oracle for the acceptance suite: planarity, plane-ness (rotations and
outer face), y-monotonicity, straightness, type conditions (d1)-(d3), and
the height-bound formulas.

check_planar has two implementations: a banded sweep used in production
and the brute-force all-pairs test that defines correctness; the test
suite cross-validates them on random drawings.
"""

from __future__ import annotations

import functools
from bisect import bisect_right, insort
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .drawing import (LayeredDrawing, graph_cycle_edges, graph_edges,
                      graph_rotation, graph_vertices, y_monotone_route)
from .rational import rat
from .trees import HalinGraph, SkirtedGraph


@dataclass
class PlanarVerdict:
    ok: bool
    offending: Optional[Tuple[object, object]] = None  # pair of edge keys / vertex ids

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class ValidationReport:
    planar: bool
    plane_embedding: Optional[bool]
    y_monotone: bool
    straight_line: bool
    height: int
    integral_layers: bool
    offending: Optional[Tuple[object, object]] = None
    orientation: Optional[int] = None
    type_conditions: Optional[Dict[str, bool]] = None
    bound: Optional[Dict[str, object]] = None

    @property
    def all_ok(self) -> bool:
        checks = [self.planar, self.integral_layers, self.y_monotone]
        if self.plane_embedding is not None:
            checks.append(self.plane_embedding)
        if self.type_conditions is not None:
            checks.extend(self.type_conditions.values())
        if self.bound is not None:
            checks.append(bool(self.bound["satisfied"]))
        return all(checks)

    def as_dict(self) -> dict:
        out = {
            "planar": self.planar,
            "planeEmbedding": self.plane_embedding,
            "yMonotone": self.y_monotone,
            "straightLine": self.straight_line,
            "height": self.height,
            "integralLayers": self.integral_layers,
            "orientation": self.orientation,
        }
        if self.offending is not None:
            out["offending"] = [str(x) for x in self.offending]
        if self.type_conditions is not None:
            out["typeConditions"] = self.type_conditions
        if self.bound is not None:
            out["bound"] = self.bound
        return out


def check_integral_layers(d: LayeredDrawing) -> bool:
    for (_, y) in d.points.values():
        if not isinstance(y, int):
            return False
    for bends in d.routes.values():
        for (_, y) in bends:
            if not isinstance(y, int):
                return False
    return True


# ---------------------------------------------------------------------------
# Planarity, brute force (the reference definition)
# ---------------------------------------------------------------------------

def _orient(p, q, r):
    d = (q[0] - p[0]) * (r[1] - q[1]) - (q[1] - p[1]) * (r[0] - q[0])
    return 1 if d > 0 else (-1 if d < 0 else 0)


def _on_segment(p, q, r) -> bool:
    """r collinear with pq: is r within the closed box?"""
    return (min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
            and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]))


def _segments_meet(p1, p2, p3, p4) -> List[Tuple[object, object]]:
    """Intersection points of two closed segments (2 sentinel points for
    overlapping collinear segments, which always count as a violation)."""
    o1, o2 = _orient(p1, p2, p3), _orient(p1, p2, p4)
    o3, o4 = _orient(p3, p4, p1), _orient(p3, p4, p2)
    if o1 == 0 and o2 == 0 and o3 == 0 and o4 == 0:
        pts = [r for r in (p3, p4) if _on_segment(p1, p2, r)]
        pts += [r for r in (p1, p2) if _on_segment(p3, p4, r)]
        uniq = sorted(set(pts))
        return uniq if len(uniq) <= 1 else [uniq[0], uniq[-1]]
    if o1 != o2 and o3 != o4:
        # Proper or endpoint intersection: compute the point.
        den = ((p2[0] - p1[0]) * (p4[1] - p3[1])
               - (p2[1] - p1[1]) * (p4[0] - p3[0]))
        t_num = ((p3[0] - p1[0]) * (p4[1] - p3[1])
                 - (p3[1] - p1[1]) * (p4[0] - p3[0]))
        x = p1[0] + rat(t_num, den) * (p2[0] - p1[0])
        y = p1[1] + rat(t_num, den) * (p2[1] - p1[1])
        return [(x, y)]
    for a, b, r in ((p1, p2, p3), (p1, p2, p4), (p3, p4, p1), (p3, p4, p2)):
        if _orient(a, b, r) == 0 and _on_segment(a, b, r):
            return [r]
    return []


def check_planar_brute(d: LayeredDrawing) -> PlanarVerdict:
    """All-pairs O(m^2) reference: open poly-lines of distinct edges must be
    disjoint, may share only endpoints at common vertices, routes must be
    simple, and no vertex point may lie on a foreign element."""
    vertex_at = {}
    for v, p in d.points.items():
        if p in vertex_at:
            return PlanarVerdict(False, (vertex_at[p], v))
        vertex_at[p] = v

    segs = []  # (p, q, edge, index, last_index)
    for e in d.routes:
        pts = d.edge_polyline(e)
        for i, (a, b) in enumerate(zip(pts, pts[1:])):
            if a == b:
                return PlanarVerdict(False, (e, e))
            segs.append((a, b, e, i, len(pts) - 2))

    def shared_ok(P, s1, s2) -> bool:
        (a1, b1, e1, i1, n1), (a2, b2, e2, i2, n2) = s1, s2
        if P not in (a1, b1) or P not in (a2, b2):
            return False  # interior touch
        if e1 == e2:
            return abs(i1 - i2) == 1  # consecutive segments share a bend
        if P in vertex_at:
            w = vertex_at[P]
            return w in e1 and w in e2
        return False

    for i in range(len(segs)):
        a1, b1, e1 = segs[i][0], segs[i][1], segs[i][2]
        for j in range(i + 1, len(segs)):
            a2, b2, e2 = segs[j][0], segs[j][1], segs[j][2]
            if e1 == e2 and abs(segs[i][3] - segs[j][3]) == 1:
                pts = _segments_meet(a1, b1, a2, b2)
                if len(pts) > 1:  # collinear overlap of consecutive segments
                    return PlanarVerdict(False, (e1, e2))
                continue
            for P in _segments_meet(a1, b1, a2, b2):
                if not shared_ok(P, segs[i], segs[j]):
                    return PlanarVerdict(False, (e1, e2))
    # No vertex point inside a foreign segment.
    for P, w in vertex_at.items():
        for a, b, e, i, n in segs:
            if w in e and (P == a or P == b):
                continue
            if _orient(a, b, P) == 0 and _on_segment(a, b, P):
                return PlanarVerdict(False, (w, e))
    return PlanarVerdict(True)


# ---------------------------------------------------------------------------
# Planarity, banded sweep (production; exact, O(M log M))
# ---------------------------------------------------------------------------

def check_planar(d: LayeredDrawing) -> PlanarVerdict:
    """Exact planarity via per-layer ordering.

    Every feature sits on an integer layer, so two straight pieces can
    only cross if their left-to-right order differs between two integer
    layers they both meet, or if they touch a layer at one point.  The
    check therefore collects, per layer, the (merged) intersection of
    every edge with that layer plus all vertex points, sorts them, and
    inspects consecutive pairs; touches are allowed only at a vertex point
    shared by incident edges' route terminals.
    """
    vertex_at = {}
    for v, p in d.points.items():
        if p in vertex_at:
            return PlanarVerdict(False, (vertex_at[p], v))
        vertex_at[p] = v

    # Per layer: list of (x1, x2, owner, kind) with owner an edge or
    # ('vtx', v), kind 0 = interior crossing, 1 = route terminal at x1/x2.
    # Per band k (between layers k and k+1): (x_at_k, x_at_k+1, edge).
    layers: Dict[int, list] = {}
    bands: Dict[int, list] = {}

    for e, bends in d.routes.items():
        pts = [d.points[e[0]]] + list(bends) + [d.points[e[1]]]
        # Items per layer for this edge.  A segment's piece joins the
        # previous segment's piece only when their shared bend lies on
        # that layer; a route returning to a layer elsewhere forms a new
        # item (arbitrary poly-lines may legitimately revisit layers).
        raw: Dict[int, List[List]] = {}

        def add(y, x1, x2, join):
            lst = raw.setdefault(y, [])
            if join and lst:
                last = lst[-1]
                last[0] = min(last[0], x1)
                last[1] = max(last[1], x2)
            else:
                lst.append([x1, x2, 0])

        for i in range(len(pts) - 1):
            a, b = pts[i], pts[i + 1]
            if a == b:
                return PlanarVerdict(False, (e, e))
            (ax, ay), (bx, by) = a, b
            join_layer = ay if i > 0 else None
            if ay == by:
                x1, x2 = (ax, bx) if ax <= bx else (bx, ax)
                add(ay, x1, x2, join_layer == ay)
                continue
            flip = ay > by
            if flip:
                (ax, ay), (bx, by) = (bx, by), (ax, ay)
            span = by - ay
            step = rat(bx - ax, span) if bx != ax else 0
            xs = [ax]
            x = ax
            for k in range(1, span):
                x = x + step
                xs.append(x)
            xs.append(bx)
            for k in range(span):
                bands.setdefault(ay + k, []).append((xs[k], xs[k + 1], e))
            seq = range(span, -1, -1) if flip else range(span + 1)
            for pos, k in enumerate(seq):
                add(ay + k, xs[k], xs[k], pos == 0 and join_layer is not None)
        y0, yn = pts[0][1], pts[-1][1]
        if raw.get(y0):
            raw[y0][0][2] = 1
        if raw.get(yn):
            raw[yn][-1][2] = 1
        for y, pieces in raw.items():
            out = layers.setdefault(y, [])
            for x1, x2, term in pieces:
                out.append((x1, x2, e, term))
    for v, (x, y) in d.points.items():
        layers.setdefault(y, []).append((x, x, ("vtx", v), 1))

    def touch_ok(P, a_owner, a_kind, b_owner, b_kind) -> bool:
        if a_kind == 0 or b_kind == 0:
            return False
        w = vertex_at.get(P)
        if w is None:
            return False
        for owner in (a_owner, b_owner):
            if isinstance(owner, tuple) and owner[0] == "vtx":
                if owner[1] != w:
                    return False
            elif w not in owner:
                return False
        return True

    for y, items in layers.items():
        items.sort(key=lambda t: (t[0], t[1]))
        for p, q in zip(items, items[1:]):
            if q[0] < p[1]:
                return PlanarVerdict(False, (p[2], q[2]))
            if q[0] == p[1]:
                if p[2] == q[2]:
                    return PlanarVerdict(False, (p[2], q[2]))
                if not touch_ok((q[0], y), p[2], p[3], q[2], q[3]):
                    return PlanarVerdict(False, (p[2], q[2]))
    # Order flips inside a band are proper crossings (touches at the band
    # boundaries were already handled above).
    for pieces in bands.values():
        pieces.sort(key=lambda t: (t[0], t[1]))
        for p, q in zip(pieces, pieces[1:]):
            if q[1] < p[1]:
                return PlanarVerdict(False, (p[2], q[2]))
    return PlanarVerdict(True)


# ---------------------------------------------------------------------------
# Plane-ness: rotation system and outer face
# ---------------------------------------------------------------------------

def _dir_key(dx, dy_up):
    """CCW comparator key pieces: half plane then slope (exact)."""
    upper = dy_up > 0 or (dy_up == 0 and dx > 0)
    return upper, dx, dy_up


def _ccw_cmp(a, b) -> int:
    (ua, dxa, dya), (ub, dxb, dyb) = a, b
    if ua != ub:
        return -1 if ua else 1
    cross = dxa * dyb - dya * dxb
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


def _incidence(d: LayeredDrawing) -> Dict[int, List[Tuple[int, int]]]:
    inc: Dict[int, List[Tuple[int, int]]] = {}
    for e in d.routes:
        inc.setdefault(e[0], []).append(e)
        inc.setdefault(e[1], []).append(e)
    return inc


def geometric_rotation(d: LayeredDrawing, v: int,
                       incident: Optional[List[Tuple[int, int]]] = None) -> List[int]:
    """Neighbors of v sorted counter-clockwise by first-segment direction
    (layers increase downward, so geometric up is -layer)."""
    px, py = d.points[v]
    if incident is None:
        incident = [e for e in d.routes if v in e]
    dirs = []
    for e in incident:
        bends = d.routes[e]
        if e[0] == v:
            qx, qy = bends[0] if bends else d.points[e[1]]
            other = e[1]
        else:
            qx, qy = bends[-1] if bends else d.points[e[0]]
            other = e[0]
        dirs.append((_dir_key(qx - px, py - qy), other))
    dirs.sort(key=functools.cmp_to_key(lambda s, t: _ccw_cmp(s[0], t[0])))
    return [w for _, w in dirs]


def _cyclic_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    if len(a) != len(b):
        return False
    n = len(a)
    if n == 0:
        return True
    if b[0] not in a:
        return False
    for i in (i for i in range(n) if a[i] == b[0]):
        if all(a[(i + j) % n] == b[j] for j in range(n)):
            return True
    return False


def check_plane(d: LayeredDrawing, graph, allow_reflection: bool = True,
                report: Optional[ValidationReport] = None) -> ValidationReport:
    """Rotation-system equality (up to one global reflection) plus, for
    Halin graphs, the outer-face condition: the cycle edges form a simple
    closed curve with every other vertex strictly inside.

    Pass a precomputed `report` from validate_drawing to avoid re-running
    the planarity sweep."""
    base = report if report is not None else validate_drawing(d)
    if not base.planar:
        base.plane_embedding = False
        return base

    votes = set()
    ok = True
    inc = _incidence(d)
    for v in graph_vertices(graph):
        expected = list(graph_rotation(graph, v))
        got = geometric_rotation(d, v, inc.get(v, []))
        if len(got) != len(expected):
            ok = False
            break
        if len(got) <= 2:
            continue
        fwd = _cyclic_equal(got, expected)
        bwd = _cyclic_equal(got[::-1], expected)
        if fwd and not bwd:
            votes.add(1)
        elif bwd and not fwd:
            votes.add(-1)
        elif not fwd and not bwd:
            ok = False
            break
    orientation = votes.pop() if len(votes) == 1 else (1 if not votes else 0)
    if len(votes) >= 1:  # mixed orientations
        ok = False
    if not allow_reflection and orientation == -1:
        ok = False

    if ok and isinstance(graph, HalinGraph):
        ok = _cycle_is_outer_face(d, graph)
    base.plane_embedding = ok
    base.orientation = orientation if ok else None
    return base


def _cycle_is_outer_face(d: LayeredDrawing, graph: HalinGraph) -> bool:
    cyc = graph.cycle_vertices
    poly: List[Tuple[object, int]] = []
    for i, v in enumerate(cyc):
        w = cyc[(i + 1) % len(cyc)]
        e = (v, w) if (v, w) in d.routes else (w, v)
        if e not in d.routes:
            return False
        pts = d.edge_polyline(e)
        if e[0] != v:
            pts = pts[::-1]
        poly.extend(pts[:-1])
    # Crossing parity per integer layer, then binary search per query point.
    levels: Dict[int, list] = {}
    n = len(poly)
    for i in range(n):
        (x1, y1), (x2, y2) = poly[i], poly[(i + 1) % n]
        if y1 == y2:
            continue
        lo, hi = (y1, y2) if y1 < y2 else (y2, y1)
        for y in range(lo + 1, hi + 1):  # half-open rule: count y in (lo, hi]
            t = rat(y - y1, y2 - y1)
            levels.setdefault(y, []).append(x1 + t * (x2 - x1))
    for xs in levels.values():
        xs.sort()
    on_cycle = set(cyc)
    for v, (x, y) in d.points.items():
        if v in on_cycle:
            continue
        xs = levels.get(y, [])
        crossings = len(xs) - bisect_right(xs, x)
        if crossings % 2 == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# Type conditions (d1)-(d3)
# ---------------------------------------------------------------------------

def check_type(td) -> Dict[str, bool]:
    """Evaluate (d1), (d2), (d3) and y-monotonicity for a TypedDrawing."""
    d = td.drawing
    tree = td.tree
    lo, hi = d.layers_used()
    lL, lR = tree.leftmost_leaf(), tree.rightmost_leaf()
    root = tree.root
    rx, ry = d.points[root]

    d1 = d.points[lR][1] == lo and d.points[lL][1] == hi
    if not _root_alone_leftmost(d, root):
        d1 = False

    d2 = (_ray_unobstructed(d, d.points[lL], west=(td.dtype.alpha_l == "W"))
          and _ray_unobstructed(d, d.points[lR], west=(td.dtype.alpha_r == "W")))

    ar = td.dtype.alpha_root
    if ar == "N":
        d3 = ry == lo + 1
    elif ar == "S":
        d3 = ry == hi - 1
    else:
        d3 = True

    mono = all(y_monotone_route(d.edge_polyline(e)) for e in d.routes)
    return {"d1": d1, "d2": d2, "d3": d3, "yMonotone": mono}


def _root_alone_leftmost(d: LayeredDrawing, root: int) -> bool:
    rx, ry = d.points[root]
    rp = (rx, ry)
    for v, (x, y) in d.points.items():
        if v != root and x <= rx:
            return False
    for a, b, e in d.segments():
        for p in (a, b):
            if p[0] < rx or (p[0] == rx and p != rp):
                return False
        # segments cannot cross the column if no feature is at x <= rx
    return True


def _ray_unobstructed(d: LayeredDrawing, leaf_pt, west: bool) -> bool:
    """Closed horizontal ray from the leaf point; touching the leaf point
    itself never counts as obstruction."""
    lx, ly = leaf_pt

    def on_ray(x) -> bool:
        return x <= lx if west else x >= lx

    for v, (x, y) in d.points.items():
        if y == ly and (x, y) != (lx, ly) and on_ray(x):
            return False
    for bends in d.routes.values():
        for (x, y) in bends:
            if y == ly and (x, y) != (lx, ly) and on_ray(x):
                return False
    for a, b, _e in d.segments():
        (ax, ay), (bx, by) = a, b
        if ay == by:
            if ay != ly:
                continue
            x1, x2 = (ax, bx) if ax <= bx else (bx, ax)
            # Interval hits the ray in a point other than the leaf point?
            if west and x1 < lx:
                return False
            if not west and x2 > lx:
                return False
        elif min(ay, by) <= ly <= max(ay, by):
            t = rat(ly - ay, by - ay)
            x = ax + t * (bx - ax)
            if (x, ly) != (lx, ly) and on_ray(x):
                return False
    return True


# ---------------------------------------------------------------------------
# Height bounds
# ---------------------------------------------------------------------------

BOUND_FORMULAS = {
    "thm1-3h": lambda p: ("height <= 3*h_in", 3 * p["h_in"], "<="),
    "cor2": lambda p: ("height <= 6*pw + 3", 6 * p["pw"] + 3, "<="),
    "lemma3": lambda p: ("height <= 3 + eflags + 2*chi",
                         3 + p.get("eflags", 0) + 2 * p.get("chi", 0), "<="),
    "lemma5": lambda p: ("height <= 6*rpw - 9 + eflags + 2*chi",
                         6 * p["rpw"] - 9 + p.get("eflags", 0) + 2 * p.get("chi", 0), "<="),
    "lemma7": lambda p: ("height <= 3*rpw - 3 + eflags + chi",
                         3 * p["rpw"] - 3 + p.get("eflags", 0) + p.get("chi", 0), "<="),
    "thm6": lambda p: ("height <= 6*rpw - 9 + 2*chi (3 + 2*chi for rpw 2)",
                       (3 + 2 * p.get("chi", 0)) if p["rpw"] <= 2
                       else 6 * p["rpw"] - 9 + 2 * p.get("chi", 0), "<="),
    "thm8": lambda p: ("height <= 6*pw + chi", 6 * p["pw"] + p.get("chi", 0), "<="),
    "hw-lower": lambda p: ("height >= 6*w - 3", 6 * p["w"] - 3, ">="),
}


def check_bound(d: LayeredDrawing, formula: str, **params) -> Dict[str, object]:
    if formula not in BOUND_FORMULAS:
        raise KeyError(f"unknown bound formula {formula!r}")
    desc, value, op = BOUND_FORMULAS[formula](params)
    h = d.height
    ok = h <= value if op == "<=" else h >= value
    return {"formula": formula, "description": desc, "bound": value,
            "height": h, "satisfied": ok}


# ---------------------------------------------------------------------------
# Aggregate report
# ---------------------------------------------------------------------------

def validate_drawing(d: LayeredDrawing) -> ValidationReport:
    integral = check_integral_layers(d)
    planar = check_planar(d) if integral else PlanarVerdict(False)
    mono = all(y_monotone_route(d.edge_polyline(e)) for e in d.routes)
    return ValidationReport(
        planar=planar.ok,
        plane_embedding=None,
        y_monotone=mono,
        straight_line=d.is_straight_line(),
        height=d.height,
        integral_layers=integral,
        offending=planar.offending,
    )
