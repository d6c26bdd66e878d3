"""The poly-line transform: a drawing of the leaf-reduced inner skeleton
becomes a plane poly-line drawing of the whole Halin graph at three times
the height.

Stages, mirroring the constructive proof:

1.  bends of the input drawing become dummy vertices (straight-line now);
2.  flat visibility representation at the same height and embedding;
3.  the pendant chains removed by leaf reduction re-attach at the free end
    of each leaf segment, on the same row (columns are created on demand);
4.  segments already overhang their verticals by one unit (the fence
    construction guarantees it), and every skeleton leaf gets its own
    reserved column inside its parent's segment, placed per angle so the
    cyclic order of leaves matches the plane embedding;
5.  the grid is tripled;
6.  the enclosing cycle is traced one unit away from all segments;
7.  leaves land on their reserved columns one row off their parent's
    segment, which is on the cycle, and connect vertically;
8.  the flat orthogonal drawing collapses to a poly-line drawing of the
    same height (vertex segments shrink to the leftmost attachment, the
    attachment points become bends entering diagonally);
9.  dummy vertices revert to bends.

Columns live in a linked order structure so insertions cost O(1); real
x-coordinates appear only after the final renumbering.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .drawing import LayeredDrawing
from .layout import draw_skirted
from .trees import (HalinGraph, RootedOrderedTree, build_skirted,
                    induced_subtree, leaf_reduction, reroot_at,
                    tree_from_children)
from .visibility import FlatVisibilityRepresentation, build_fvr
from .width import best_leaf_root, horton_strahler

Edge = Tuple[int, int]


# ---------------------------------------------------------------------------
# Built-in tree drawer
# ---------------------------------------------------------------------------

def draw_tree_builtin(tree: RootedOrderedTree) -> LayeredDrawing:
    """Order-preserving poly-line drawing of a tree alone: reroot at the
    best leaf, draw the skirted graph, drop the leaf-path edges.  Height is
    1 for rooted paths, otherwise the skirted-graph bound."""
    leaf, rpw_star = best_leaf_root(tree)
    rooted = reroot_at(tree, leaf)
    if rpw_star <= 1:
        points = {v: (2 * i, 1) for i, v in enumerate(rooted.dfs_preorder())}
        routes = {e: [] for e in rooted.edges()}
        return LayeredDrawing(points, routes, rooted)
    td = draw_skirted(rooted, "WWW")
    path = set(td.drawing.graph.path_edges)
    routes = {e: b for e, b in td.drawing.routes.items() if e not in path}
    return LayeredDrawing(dict(td.drawing.points), routes, rooted).normalized()


# ---------------------------------------------------------------------------
# Ordered column keys
# ---------------------------------------------------------------------------

class _Cols:
    """Totally ordered column keys with O(1) insertion; integer positions
    are assigned once at the end."""

    def __init__(self, count: int):
        self.nxt = list(range(1, count)) + [-1]
        self.prv = [-1] + list(range(count - 1))
        self.head = 0

    def _new(self) -> int:
        self.nxt.append(-1)
        self.prv.append(-1)
        return len(self.nxt) - 1

    def insert_after(self, k: int) -> int:
        n = self._new()
        m = self.nxt[k]
        self.nxt[k] = n
        self.prv[n] = k
        self.nxt[n] = m
        if m != -1:
            self.prv[m] = n
        return n

    def insert_before(self, k: int) -> int:
        p = self.prv[k]
        if p == -1:
            n = self._new()
            self.nxt[n] = k
            self.prv[k] = n
            self.head = n
            return n
        return self.insert_after(p)

    def positions(self) -> List[int]:
        pos = [0] * len(self.nxt)
        k, i = self.head, 0
        while k != -1:
            pos[k] = i
            i += 1
            k = self.nxt[k]
        return pos


# ---------------------------------------------------------------------------
# Cycle tracing (offset boundary on the unit grid)
# ---------------------------------------------------------------------------

def _trace_offset_cycle(rects: Sequence[Tuple[int, int, int, int]]):
    """Closed rectilinear curve through all points at unit distance from
    the given segments, where rects are the unit-inflated segments
    (x1, x2, y1, y2).  Returns the corner list; raises if the offset
    boundary is not a single closed curve."""
    x_lo = min(r[0] for r in rects)
    x_hi = max(r[1] for r in rects)
    y_lo = min(r[2] for r in rects)
    y_hi = max(r[3] for r in rects)
    w, h = x_hi - x_lo, y_hi - y_lo
    cov = np.zeros((w + 2, h + 2), dtype=bool)  # 1-cell margin, all empty
    for (x1, x2, y1, y2) in rects:
        cov[x1 - x_lo + 1:x2 - x_lo + 1, y1 - y_lo + 1:y2 - y_lo + 1] = True

    # Total boundary-edge count (island/hole detector).
    edges = 0
    edges += int((cov[1:, :] != cov[:-1, :]).sum())
    edges += int(cov[0, :].sum()) + int(cov[-1, :].sum())
    edges += int((cov[:, 1:] != cov[:, :-1]).sum())
    edges += int(cov[:, 0].sum()) + int(cov[:, -1].sum())

    xs, ys = np.nonzero(cov)
    start = min(zip(ys.tolist(), xs.tolist()))
    sy, sx = start
    # Walk with the covered region on the right, starting eastwards along
    # the top edge of the topmost-leftmost cell.
    x, y = sx, sy
    dx, dy = 1, 0
    corners: List[Tuple[int, int]] = []
    steps = 0
    sx0, sy0, sdx, sdy = x, y, dx, dy
    while True:
        x2, y2 = x + dx, y + dy
        # Cells around the corner (x2, y2) relative to direction.
        if dx == 1:
            left, right = cov[x2, y2 - 1], cov[x2, y2]
        elif dx == -1:
            left, right = cov[x2 - 1, y2], cov[x2 - 1, y2 - 1]
        elif dy == 1:
            left, right = cov[x2, y2], cov[x2 - 1, y2]
        else:
            left, right = cov[x2 - 1, y2 - 1], cov[x2, y2 - 1]
        ndx, ndy = dx, dy
        if left:
            ndx, ndy = dy, -dx  # turn left (rows grow downward)
        elif not right:
            ndx, ndy = -dy, dx  # turn right
        if (ndx, ndy) != (dx, dy):
            corners.append((x2, y2))
        x, y, dx, dy = x2, y2, ndx, ndy
        steps += 1
        if (x, y, dx, dy) == (sx0, sy0, sdx, sdy):
            break
        if steps > edges + 4:
            raise ValueError("offset boundary does not close into one cycle")
    if steps != edges:
        raise ValueError(
            "offset boundary is not a single cycle (disconnected input "
            "or pockets; the grid must be tripled)")
    return [(cx + x_lo - 1, cy + y_lo - 1) for cx, cy in corners]


def trace_cycle(fvr: FlatVisibilityRepresentation) -> List[Tuple[int, int]]:
    """Trace the enclosing cycle around a flat visibility representation
    whose grid has been tripled; returns the corner points of the closed
    rectilinear curve (x, row)."""
    rects = []
    for (row, x1, x2) in fvr.vertex_seg.values():
        rects.append((x1 - 1, x2 + 1, row - 1, row + 1))
    for seg in fvr.edge_seg.values():
        if seg[0] == "v":
            _, col, r1, r2 = seg
            rects.append((col - 1, col + 1, r1 - 1, r2 + 1))
        else:
            _, row, x1, x2 = seg
            rects.append((x1 - 1, x2 + 1, row - 1, row + 1))
    return _trace_offset_cycle(rects)


# ---------------------------------------------------------------------------
# The transform
# ---------------------------------------------------------------------------

class TransformError(ValueError):
    pass


def transform_to_halin(halin: HalinGraph,
                       drawing: Optional[LayeredDrawing] = None,
                       tree_drawer=draw_tree_builtin) -> LayeredDrawing:
    """Theorem-1 pipeline: turn an order-preserving poly-line drawing of
    the leaf-reduced inner skeleton into a plane poly-line drawing of the
    whole Halin graph of at most three times the height.

    `drawing` may be keyed by skeleton vertex ids or carry a tree whose
    labels match the skeleton's; when omitted, the built-in drawer is run
    on the leaf-reduced inner skeleton."""
    skel = halin.skeleton
    kept, deletions = leaf_reduction(halin)
    kept_set = set(kept)

    if drawing is None:
        drawing = tree_drawer(induced_subtree(skel, kept))
    d_in = drawing.normalized()
    h_in = d_in.height
    mapping = _match_drawing_vertices(skel, kept, d_in)

    # Stage 1: dummy vertices at bends; rotations carry over.
    n0 = skel.n
    rot: Dict[int, List[int]] = {v: list(skel.rotation(v)) for v in range(n0)}
    points: Dict[int, Tuple[object, int]] = {}
    for dv, sv in mapping.items():
        points[sv] = d_in.points[dv]
    dummy_of_edge: Dict[Edge, List[int]] = {}
    next_id = n0
    edges_d: List[Edge] = []
    for e, bends in d_in.routes.items():
        a, b = mapping[e[0]], mapping[e[1]]
        if not bends:
            edges_d.append((a, b))
            continue
        chain = []
        for p in bends:
            points[next_id] = p
            chain.append(next_id)
            next_id += 1
        dummy_of_edge[(a, b)] = chain
        rot[a][rot[a].index(b)] = chain[0]
        rot[b][rot[b].index(a)] = chain[-1]
        for i, dv in enumerate(chain):
            before = a if i == 0 else chain[i - 1]
            after = b if i == len(chain) - 1 else chain[i + 1]
            rot[dv] = [before, after]
        edges_d.append((a, chain[0]))
        edges_d.extend(zip(chain, chain[1:]))
        edges_d.append((chain[-1], b))
    dummies = set(range(n0, next_id))
    d_sub = LayeredDrawing(points, {e: [] for e in edges_d}, None)

    # Stage 2: visibility representation (same height, same embedding).
    fvr, att = build_fvr(d_sub)
    if fvr.height != h_in:
        raise TransformError("visibility conversion changed the height")
    cols = _Cols(fvr.width)
    seg: Dict[int, Tuple[int, int, int]] = dict(fvr.vertex_seg)
    vert: Dict[Edge, Tuple[int, int, int]] = {}
    horiz: Dict[Edge, Tuple[int, int, int]] = {}
    for e, s in fvr.edge_seg.items():
        if s[0] == "v":
            vert[e] = (s[1], s[2], s[3])
        else:
            horiz[e] = (s[1], s[2], s[3])

    # Stage 3: re-attach the pendant chains at free leaf-segment ends.
    for (leaf, parent) in reversed(deletions):
        row, k_l, k_r = seg[parent]
        a = att[parent]
        e = (parent, leaf)
        att[leaf] = {"up": [], "down": [], "west": None, "east": None}
        if a["east"] is None:
            k1 = cols.insert_after(k_r)
            k2 = cols.insert_after(k1)
            horiz[e] = (row, k_r, k1)
            a["east"] = e
            seg[leaf] = (row, k1, k2)
            att[leaf]["west"] = e
        elif a["west"] is None:
            k1 = cols.insert_before(k_l)
            k0 = cols.insert_before(k1)
            horiz[e] = (row, k1, k_l)
            a["west"] = e
            seg[leaf] = (row, k0, k1)
            att[leaf]["east"] = e
        else:
            raise TransformError("chain attachment point is not a free leaf")

    inner = kept_set | {v for v, _ in deletions} | dummies
    skel_leaves = [v for v in range(n0) if v not in inner]

    # Stage 4: orientation, angles, and one reserved column per leaf.
    orientation = _global_orientation(rot, att, seg, inner)
    leaf_slots = _allocate_leaf_columns(rot, att, seg, cols, inner,
                                        set(skel_leaves), orientation)

    # Stage 5: renumber and triple the grid.
    pos = cols.positions()

    def cx(key: int) -> int:
        return 3 * pos[key] + 1

    def cy(row: int) -> int:
        return 3 * row - 1

    rects = []
    for v, (row, k1, k2) in seg.items():
        rects.append((cx(k1) - 1, cx(k2) + 1, cy(row) - 1, cy(row) + 1))
    for (key, r1, r2) in vert.values():
        rects.append((cx(key) - 1, cx(key) + 1, cy(r1) - 1, cy(r2) + 1))
    for (row, k1, k2) in horiz.values():
        rects.append((cx(k1) - 1, cx(k2) + 1, cy(row) - 1, cy(row) + 1))

    # Stage 6: the enclosing cycle.
    corners = _trace_offset_cycle(rects)

    # Stage 7: leaves onto the cycle.
    leaf_pts: Dict[int, Tuple[int, int]] = {}
    leaf_edge_col: Dict[int, int] = {}
    for leaf, (parent, key, side) in leaf_slots.items():
        row = seg[parent][0]
        y = cy(row) - 1 if side == "above" else cy(row) + 1
        leaf_pts[leaf] = (cx(key), y)
        leaf_edge_col[leaf] = cx(key)
    cycle_routes = _split_cycle(corners, leaf_pts, halin)

    # Stage 8: collapse to a poly-line drawing.
    out_points: Dict[int, Tuple[object, int]] = dict(leaf_pts)
    for v in inner:
        row, k1, k2 = seg[v]
        cands = [cx(k) for k, _ in att[v]["up"]] + \
                [cx(k) for k, _ in att[v]["down"]]
        if att[v]["west"] is not None:
            cands.append(cx(k1))
        if att[v]["east"] is not None:
            cands.append(cx(k2))
        cands.extend(cx(leaf_slots[lf][1]) for lf in rot[v]
                     if lf in leaf_slots and leaf_slots[lf][0] == v)
        x_v = min(cands) if cands else (cx(k1) + cx(k2)) // 2
        out_points[v] = (x_v, cy(row))

    routes: Dict[Edge, List[Tuple[object, int]]] = dict(cycle_routes)
    for e, (key, r1, r2) in vert.items():
        col, y1, y2 = cx(key), cy(r1), cy(r2)
        bends = []
        if y2 - y1 >= 2:
            bends = [(col, y1 + 1)] if y2 - y1 == 2 else [(col, y1 + 1),
                                                          (col, y2 - 1)]
        u, w = e
        if out_points[u][1] > out_points[w][1]:
            u, w = w, u
        routes[(u, w)] = bends
    for e in horiz:
        routes[e] = []
    for leaf, (parent, key, side) in leaf_slots.items():
        routes[(parent, leaf)] = []

    # Stage 9: revert dummies to bends and key edges like the Halin graph.
    final = _revert_dummies(routes, out_points, dummy_of_edge, dummies)
    final_routes = _rekey_edges(final, out_points, halin)
    out = LayeredDrawing(
        {v: p for v, p in out_points.items() if v not in dummies},
        final_routes, halin).normalized()
    if out.height > 3 * h_in:
        raise TransformError(
            f"transform exceeded the 3x height bound: {out.height} > {3 * h_in}")
    return out


def _match_drawing_vertices(skel: RootedOrderedTree, kept: List[int],
                            d_in: LayeredDrawing) -> Dict[int, int]:
    """Map drawing vertex ids onto skeleton ids.

    A drawing carrying its own tree (e.g. the built-in drawer's output on
    the renumbered reduced skeleton) is matched by vertex labels; a bare
    drawing keyed directly by skeleton ids passes through unchanged."""
    g = d_in.graph
    if isinstance(g, RootedOrderedTree) and g.n == len(kept):
        by_label = {skel.label_of(v): v for v in kept}
        labels = [g.label_of(v) for v in range(g.n)]
        if all(lab in by_label for lab in labels):
            return {v: by_label[lab] for v, lab in enumerate(labels)}
    if set(d_in.points) == set(kept):
        return {v: v for v in kept}
    raise TransformError(
        "drawing does not cover the leaf-reduced inner skeleton")


def _att_cycle(att_v, inner_neighbor) -> List[Tuple[str, object, int]]:
    """Counter-clockwise attachment list around a segment: west cap, down
    columns west to east, east cap, up columns east to west.  Entries are
    (kind, column key or None, neighbor id)."""
    out: List[Tuple[str, object, int]] = []
    if att_v["west"] is not None:
        out.append(("W", None, inner_neighbor(att_v["west"])))
    for key, e in att_v["down"]:
        out.append(("D", key, inner_neighbor(e)))
    if att_v["east"] is not None:
        out.append(("E", None, inner_neighbor(att_v["east"])))
    for key, e in reversed(att_v["up"]):
        out.append(("U", key, inner_neighbor(e)))
    return out


def _global_orientation(rot, att, seg, inner) -> int:
    """+1 when the drawing realizes the skeleton rotations directly, -1
    when it realizes their mirror image; mixed verdicts are an error."""
    votes = set()
    for v in inner:
        if v not in att:
            continue
        cyc = [w for (_, _, w) in
               _att_cycle(att[v], lambda e: e[1] if e[0] == v else e[0])]
        expected = [w for w in rot[v] if w in inner]
        if len(cyc) != len(expected):
            raise TransformError(f"degree mismatch at vertex {v}")
        if len(cyc) < 3:
            continue
        fwd = _cyclic_eq(cyc, expected)
        bwd = _cyclic_eq(cyc[::-1], expected)
        if not fwd and not bwd:
            raise TransformError(
                f"drawing is not order-preserving at vertex {v}")
        votes.add(1 if fwd else -1)
    if len(votes) > 1:
        raise TransformError("drawing mixes mirrored and direct rotations")
    return votes.pop() if votes else 1


def _cyclic_eq(a: List[int], b: List[int]) -> bool:
    if len(a) != len(b):
        return False
    if not a:
        return True
    if b[0] not in a:
        return False
    i = a.index(b[0])
    return all(a[(i + j) % len(a)] == b[j] for j in range(len(a)))


def _allocate_leaf_columns(rot, att, seg, cols: _Cols, inner, skel_leaves,
                           orientation: int):
    """Reserve one fresh column inside the parent segment for every
    skeleton leaf, placed in the angle dictated by the plane rotation."""
    slots: Dict[int, Tuple[int, int, str]] = {}
    for v in sorted(inner):
        if v not in att:
            continue
        leaves_here = [w for w in rot[v] if w in skel_leaves]
        if not leaves_here:
            continue
        rot_o = list(rot[v]) if orientation == 1 else list(reversed(rot[v]))
        row, k_l, k_r = seg[v]
        acyc = _att_cycle(att[v], lambda e: e[1] if e[0] == v else e[0])
        if not acyc:
            k = k_l
            for leaf in rot_o:
                k = cols.insert_after(k)
                slots[leaf] = (v, k, "below")
            continue
        m = len(acyc)
        for i in range(m):
            p_kind, p_key, p_nb = acyc[i]
            q_kind, q_key, q_nb = acyc[(i + 1) % m]
            angle_leaves = [w for w in _between(rot_o, p_nb, q_nb)
                            if w in skel_leaves]
            if not angle_leaves:
                continue
            side, anchor, forward = _angle_rule(p_kind, p_key, q_kind, q_key,
                                                k_l, k_r)
            keys = []
            k = anchor
            for _ in angle_leaves:
                k = cols.insert_after(k) if forward else cols.insert_before(k)
                keys.append(k)
            if not forward:
                # insert_before walks east to west; CCW top order is east
                # to west as well, so keys already match angle_leaves.
                pass
            for leaf, k in zip(angle_leaves, keys):
                slots[leaf] = (v, k, side)
    return slots


def _between(rot_o: List[int], a: int, b: int) -> List[int]:
    i = rot_o.index(a)
    out = []
    j = (i + 1) % len(rot_o)
    while rot_o[j] != b:
        out.append(rot_o[j])
        j = (j + 1) % len(rot_o)
        if j == i:
            break
    return out


def _angle_rule(p_kind, p_key, q_kind, q_key, k_l, k_r):
    """Placement stretch for one angle: (side, anchor key, forward).
    forward=True chains insert_after(anchor) west to east (bottom side),
    forward=False chains insert_before(anchor) east to west (top side)."""
    if p_kind == "D":
        return "below", p_key, True
    if p_kind == "W":
        return "below", k_l, True
    if p_kind == "E":
        return "above", k_r, False
    # p_kind == "U"
    if q_kind in ("U",):
        return "above", p_key, False
    return "above", p_key, False


def _split_cycle(corners, leaf_pts, halin: HalinGraph):
    """Cut the traced cycle at the leaf points and key each arc as the
    matching cycle edge of the Halin graph."""
    by_pt = {p: leaf for leaf, p in leaf_pts.items()}
    walk: List[Tuple[Tuple[int, int], Optional[int]]] = []
    m = len(corners)
    for i in range(m):
        (x1, y1), (x2, y2) = corners[i], corners[(i + 1) % m]
        walk.append(((x1, y1), by_pt.get((x1, y1))))
        on_run = []
        if y1 == y2:
            for (px, py), leaf in by_pt.items():
                if py == y1 and min(x1, x2) < px < max(x1, x2):
                    on_run.append((px, leaf))
            on_run.sort(reverse=x2 < x1)
        else:
            for (px, py), leaf in by_pt.items():
                if px == x1 and min(y1, y2) < py < max(y1, y2):
                    on_run.append((py, leaf))
            on_run.sort(reverse=y2 < y1)
        for coord, leaf in on_run:
            pt = (coord, y1) if y1 == y2 else (x1, coord)
            walk.append((pt, leaf))
    leaf_order = [lf for _, lf in walk if lf is not None]
    if set(leaf_order) != set(leaf_pts):
        raise TransformError("some leaves did not land on the cycle")
    expected = halin.cycle_vertices
    aligned = _align_cycles(leaf_order, expected)
    if aligned is None:
        raise TransformError("cycle order does not match the embedding")
    direction, offset = aligned
    if direction < 0:
        walk = [walk[0]] + walk[:0:-1]
        leaf_order = [lf for _, lf in walk if lf is not None]

    routes: Dict[Edge, List[Tuple[int, int]]] = {}
    idx = [i for i, (_, lf) in enumerate(walk) if lf is not None]
    nw = len(walk)
    for a_i, b_i in zip(idx, idx[1:] + [idx[0] + nw]):
        a_leaf = walk[a_i % nw][1]
        b_leaf = walk[b_i % nw][1]
        bends = [walk[j % nw][0] for j in range(a_i + 1, b_i)
                 if walk[j % nw][1] is None]
        key = (a_leaf, b_leaf)
        if key not in set(halin.cycle_edges):
            key = (b_leaf, a_leaf)
            bends = bends[::-1]
        routes[key] = _dedup_collinear(
            [leaf_pts[key[0]]] + bends + [leaf_pts[key[1]]])
    return routes


def _align_cycles(got: List[int], expected: List[int]):
    if len(got) != len(expected) or not got:
        return None
    if expected[0] not in got:
        return None
    i = got.index(expected[0])
    n = len(got)
    if all(got[(i + j) % n] == expected[j] for j in range(n)):
        return (1, i)
    if all(got[(i - j) % n] == expected[j] for j in range(n)):
        return (-1, i)
    return None


def _dedup_collinear(pts: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
    """Interior bend list with collinear and duplicate corners removed."""
    out: List[Tuple[int, int]] = []
    for p in pts:
        if out and out[-1] == p:
            continue
        while len(out) >= 2 and _collinear(out[-2], out[-1], p):
            out.pop()
        out.append(p)
    return out[1:-1]


def _collinear(a, b, c) -> bool:
    return (b[0] - a[0]) * (c[1] - b[1]) == (b[1] - a[1]) * (c[0] - b[0])


def _revert_dummies(routes, out_points, dummy_of_edge, dummies):
    """Merge subdivided routes back into single poly-lines with the dummy
    positions as bends."""
    if not dummies:
        return dict(routes)
    merged = dict(routes)
    for (a, b), chain in dummy_of_edge.items():
        pts: List[Tuple[object, int]] = []
        prev = a
        for dv in chain:
            key = (prev, dv) if (prev, dv) in merged else (dv, prev)
            bends = merged.pop(key)
            if key[0] != prev:
                bends = bends[::-1]
            pts.extend(bends)
            pts.append(out_points[dv])
            prev = dv
        key = (prev, b) if (prev, b) in merged else (b, prev)
        bends = merged.pop(key)
        if key[0] != prev:
            bends = bends[::-1]
        pts.extend(bends)
        merged[(a, b)] = pts
    return merged


def _rekey_edges(routes, out_points, halin: HalinGraph):
    """Key every route exactly like the Halin graph's edge list."""
    want = halin.all_edges()
    have = dict(routes)
    out = {}
    for e in want:
        u, v = e
        if (u, v) in have:
            out[e] = have.pop((u, v))
        elif (v, u) in have:
            out[e] = have.pop((v, u))[::-1]
        else:
            raise TransformError(f"missing edge {e} after the transform")
    if have:
        raise TransformError(f"unexpected extra edges: {list(have)[:4]}")
    return out
