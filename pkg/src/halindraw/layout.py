"""Recursive straight-line/y-monotone layout of skirted graphs.

The construction draws H^-(T) with typed boundary contracts: the type
alpha_L alpha_r alpha_R fixes which horizontal rays from the outer leaves
must stay unobstructed (W/E) and where the root sits (N = layer 2,
S = layer h-1, W = anywhere).  Heights:

* rooted pathwidth 2:        3 + [alpha_L=E] + [alpha_R=E] + 2*chi_ext
* rooted pathwidth >= 3:     6 rpw - 9 + [alpha_L=E] + [alpha_R=E] + 2*chi_ext
* binary trees, rpw >= 2:    3 rpw - 3 + [alpha_L=E] + [alpha_R=E] + chi_ext

Everything is drawn in a single left-to-right sweep directly into final
coordinates: a subtree is told its layer band up front and fills it (the
drawing is connected, so every band layer counts toward the height), and
x-columns come from one global cursor.  That makes the whole construction
linear time without the usual offset bookkeeping.  S-rooted drawings are
the vertical flip of the N-rooted drawing of the child-order-reversed
tree, realized by a per-call flipped layer map.

Shape of one induction step (view-relative layers, 1 = top): the root
goes to layer 2 and reserves its eastward ray for the edge to the last
child; children before the spine child become WWE drawings in layers 6..h
chained along layer h; then either the spine child is the last child and
is drawn WWW at full height, or it is drawn WSW at full height as the
easternmost piece, after an EWE child in layers 3..h-2, middle children
in layers 3..h-3, and the last child in layers 1..h-3 (an EWW child in
layers 1..h-5 when the spine child is second-to-last).  The binary
variant runs the same steps three layers tighter.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .drawing import LayeredDrawing
from .trees import (RootedOrderedTree, build_halin, build_skirted,
                    reroot_at)
from .width import best_leaf_root, horton_strahler

HALF = Fraction(1, 2)

ADMISSIBLE_TYPES = ("WWE", "EWW", "EWE", "WNW", "WSW")


@dataclass(frozen=True)
class DrawingType:
    """Boundary contract alpha_L alpha_r alpha_R."""

    alpha_l: str     # W | E
    alpha_root: str  # N | W | S
    alpha_r: str     # W | E

    @classmethod
    def parse(cls, text) -> "DrawingType":
        if isinstance(text, DrawingType):
            return text
        t = text.strip().upper()
        if len(t) != 3 or t[0] not in "WE" or t[1] not in "NWS" or t[2] not in "WE":
            raise ValueError(f"bad drawing type {text!r}")
        return cls(t[0], t[1], t[2])

    def __str__(self) -> str:
        return self.alpha_l + self.alpha_root + self.alpha_r

    @property
    def eflags(self) -> int:
        return (self.alpha_l == "E") + (self.alpha_r == "E")


@dataclass
class TypedDrawing:
    drawing: LayeredDrawing
    dtype: DrawingType
    tree: RootedOrderedTree


def skirted_height_bound(rpw: int, chi: int, eflags: int = 0,
                         binary: bool = False) -> int:
    """Promised height of the skirted-graph construction."""
    if binary:
        return 3 * rpw - 3 + eflags + chi
    if rpw <= 2:
        return 3 + eflags + 2 * chi
    return 6 * rpw - 9 + eflags + 2 * chi


# ---------------------------------------------------------------------------
# Tree view: orientation-aware access with cached widths
# ---------------------------------------------------------------------------

class _View:
    """A rooted ordered tree, possibly with all child orders reversed, plus
    cached per-vertex Horton-Strahler numbers and chi_ext flags."""

    __slots__ = ("tree", "hs", "chi", "rev")

    def __init__(self, tree, hs, chi, rev=False):
        self.tree = tree
        self.hs = hs
        self.chi = chi
        self.rev = rev

    @classmethod
    def of(cls, tree: RootedOrderedTree) -> "_View":
        hs = horton_strahler(tree)
        chi = [0] * tree.n
        for v in reversed(tree.dfs_preorder()):
            flag = 0
            for c in tree.children[v]:
                if chi[c] or len(tree.children[c]) == 1:
                    flag = 1
                    break
            chi[v] = flag
        return cls(tree, hs, chi)

    def flipped(self) -> "_View":
        return _View(self.tree, self.hs, self.chi, not self.rev)

    def children(self, v: int) -> Tuple[int, ...]:
        kids = self.tree.children[v]
        return tuple(reversed(kids)) if self.rev else kids

    def path_vertices(self, v: int) -> List[int]:
        out = [v]
        while True:
            kids = self.children(v)
            if not kids:
                return out
            v = kids[0]
            out.append(v)


# ---------------------------------------------------------------------------
# Builder: one global left-to-right coordinate sweep
# ---------------------------------------------------------------------------

class _Builder:
    __slots__ = ("cursor", "points", "routes", "incident")

    def __init__(self):
        self.cursor = 0
        self.points: Dict[int, Tuple[object, int]] = {}
        self.routes: Dict[Tuple[int, int], List[Tuple[object, int]]] = {}
        self.incident: Dict[int, List[Tuple[int, int]]] = {}

    def col(self) -> int:
        c = self.cursor
        self.cursor += 2
        return c

    def place(self, v: int, x, y: int) -> None:
        self.points[v] = (x, y)

    def route(self, u: int, v: int, bends, reverse: bool = False) -> None:
        """Add edge u->v with interior bends (reverse=True when the bends
        were collected walking from v)."""
        key = (u, v)
        self.routes[key] = bends[::-1] if reverse else list(bends)
        self.incident.setdefault(u, []).append(key)
        self.incident.setdefault(v, []).append(key)


@dataclass
class _Anchors:
    """Boundary vertices of a drawn subtree (points live in the builder)."""

    root: int
    ll: int  # view-leftmost leaf
    lr: int  # view-rightmost leaf


@dataclass
class _Pend:
    """A partially drawn leaf-path connector reserving an eastward ray.

    `prefix` bends are committed; `drop` bends realize the default descent
    to the target layer and are replaced when the construction reroutes the
    edge (the paper's "undo the partial routing")."""

    vertex: int
    exit_layer: int
    prefix: List[Tuple[object, int]]
    drop: List[Tuple[object, int]]

    def normal(self):
        return self.prefix + self.drop

    def rerouted(self, x, target_layer: int):
        """East of everything at `x`, then into the target's layer so the
        edge attaches horizontally (ray turns at the target need that)."""
        return self.prefix + [(x, self.exit_layer), (x, target_layer)]


def _turn_leaf(points, routes, incident, leaf: int, new_layer: int) -> None:
    """Move a boundary leaf into an adjacent empty layer (claim turnRight).

    Every incident edge keeps its old geometry and is extended by a bend
    near where the leaf used to be: a horizontal approach is shortened by
    half a unit toward its own side, any other approach bends exactly at
    the old point and rises vertically.  Both moves only ever occupy the
    previously empty region beyond the old extreme layer, so planarity is
    untouched.  At most one non-horizontal approach is supported (the
    constructions in this module guarantee that at every turned leaf)."""
    x0, y0 = points[leaf]
    edges = incident.get(leaf, [])
    assert len(edges) <= 2, "outer leaves have at most two incident edges"
    slanted = 0
    for key in edges:
        bends = routes[key]
        at_end = key[1] == leaf
        if bends:
            px, py = bends[-1] if at_end else bends[0]
        else:
            other = key[0] if at_end else key[1]
            px, py = points[other]
        if py == y0 and px != x0:
            step = HALF if abs(px - x0) >= 1 else Fraction(abs(px - x0), 2)
            bend = (x0 + step if px > x0 else x0 - step, y0)
        else:
            slanted += 1
            bend = (x0, y0)
        if at_end:
            bends.append(bend)
        else:
            bends.insert(0, bend)
    if slanted > 1:
        raise ValueError(
            "turn needs a free horizontal attachment; two non-horizontal "
            "approaches meet at the leaf")
    points[leaf] = (x0, new_layer)


# ---------------------------------------------------------------------------
# The core construction
# ---------------------------------------------------------------------------

def _lmap(t: int, b: int, flip: bool):
    """View layer k (1..h, top to bottom) to real layer."""
    if flip:
        return lambda k: b - k + 1
    return lambda k: t + k - 1


def _draw(view: _View, v: int, e_l: bool, e_r: bool, root_mode: str,
          t: int, b: int, flip: bool, B: _Builder, binary: bool) -> _Anchors:
    """Draw H^-(T_v) into real layers [t..b] honoring the type contract."""
    if root_mode == "S":
        assert not (e_l or e_r), "E flags only combine with a free root"
        a = _draw(view.flipped(), v, False, False, "N", t, b, not flip,
                  B, binary)
        return _Anchors(a.root, a.lr, a.ll)  # back to the caller's view
    h = b - t + 1
    need = skirted_height_bound(view.hs[v], view.chi[v], e_l + e_r, binary)
    assert h >= need, f"band of {h} layers too small for bound {need}"
    L = _lmap(t, b, flip)
    core_top, core_bot = L(1 + (1 if e_r else 0)), L(h - (1 if e_l else 0))
    if core_top > core_bot:
        core_top, core_bot = core_bot, core_top
    anchors = _draw_core(view, v, core_top, core_bot, flip, B, binary)
    if e_r:
        _turn_leaf(B.points, B.routes, B.incident, anchors.lr, L(1))
    if e_l:
        _turn_leaf(B.points, B.routes, B.incident, anchors.ll, L(h))
    return anchors


def _draw_core(view: _View, v: int, t: int, b: int, flip: bool,
               B: _Builder, binary: bool) -> _Anchors:
    """W.W drawing of H^-(T_v) filling real layers [t..b] exactly."""
    frames: List[_Frame] = []
    cur_view, cur_v, cur_flip = view, v, flip
    while True:
        if cur_view.hs[cur_v] == 2:
            if binary and cur_view.chi[cur_v]:
                child_anchors = _base_binary_zigzag(cur_view, cur_v, t, b,
                                                    cur_flip, B)
            else:
                child_anchors = _base_rpw2(cur_view, cur_v, t, b, cur_flip, B)
            break
        frame = _Frame(cur_view, cur_v, t, b, cur_flip, B, binary)
        descend = frame.build()
        frames.append(frame)
        if descend is None:
            child_anchors = frame.terminal_anchors
            break
        cur_view, cur_v, cur_flip = descend
    for frame in reversed(frames):
        child_anchors = frame.finish(child_anchors)
    return child_anchors


class _Frame:
    """One induction step: the root, its non-spine children and all
    connector-edge stubs; the spine child is drawn by the continuation and
    hooked up in finish()."""

    def __init__(self, view, v, t, b, flip, B, binary):
        self.view, self.v = view, v
        self.flip = flip
        self.B = B
        self.binary = binary
        self.L = _lmap(t, b, flip)
        self.h = b - t + 1
        self.case = ""
        self.terminal_anchors: Optional[_Anchors] = None
        self.first_ll: Optional[int] = None
        self.pend_to_ll: Optional[_Pend] = None   # (l_R^{s-1}, l_L^s)
        self.pend_to_lr: Optional[_Pend] = None   # (l_R^s, l_L^{s+1})
        self.rcs_bends: Optional[list] = None     # partial (root, c_s)
        self.lr_final: Optional[int] = None

    # -- small helpers -------------------------------------------------------

    def _fan(self, c: int, slot_top: int, slot_bot: int, e_l: bool,
             e_r: bool) -> _Anchors:
        a, bb = self.L(slot_top), self.L(slot_bot)
        if a > bb:
            a, bb = bb, a
        return _draw(self.view, c, e_l, e_r, "free", a, bb, self.flip,
                     self.B, self.binary)

    def _path_chain(self, c: int, chain_layer: int, leaf_layer: int) -> int:
        """Place a rooted-path subtree: interior vertices on one layer, the
        leaf on another; returns the leaf."""
        B, L = self.B, self.L
        verts = self.view.path_vertices(c)
        if len(verts) == 1:
            B.place(c, B.col(), L(leaf_layer))
            return c
        for u in verts[:-1]:
            B.place(u, B.col(), L(chain_layer))
        leaf = verts[-1]
        B.place(leaf, B.col(), L(leaf_layer))
        for a, c2 in zip(verts, verts[1:]):
            B.route(a, c2, [])
        return leaf

    def _path_edge(self, a: int, b: int, bends, from_b: bool = False) -> None:
        """Leaf-path edge between view-consecutive leaves a (earlier) and b,
        keyed in original leaf order; from_b when bends were collected
        starting at b."""
        if self.view.rev:
            self.B.route(b, a, bends, reverse=not from_b)
        else:
            self.B.route(a, b, bends, reverse=from_b)

    def _connect_child_root(self, c: int) -> None:
        """Edge (root, c) via a bend at view-layer 3 above c's column."""
        x_c, y_c = self.B.points[c]
        l3 = self.L(3)
        self.B.route(self.v, c, [] if y_c == l3 else [(x_c, l3)])

    def _connect_last_child_root(self, c: int) -> None:
        """Edge (root, c): the root's eastward layer-2 ray, then down."""
        x_c, y_c = self.B.points[c]
        l2 = self.L(2)
        self.B.route(self.v, c, [] if y_c == l2 else [(x_c, l2)])

    def _complete(self, pend: _Pend, target: int) -> None:
        self._path_edge(pend.vertex, target, pend.normal())

    def _complete_rerouted(self, pend: _Pend, target: int) -> None:
        x = self.B.col()
        t_layer = self.B.points[target][1]
        bends = pend.rerouted(x, t_layer)
        if bends and bends[-1] == bends[-2]:
            bends.pop()  # exit layer already equals the target layer
        self._path_edge(pend.vertex, target, bends)

    # -- the construction ------------------------------------------------------

    def build(self):
        """Draw everything except the spine child.  Returns the descend
        spec (view, vertex, flip) or None when this frame is terminal."""
        view, v, B, L, h = self.view, self.v, self.B, self.L, self.h
        kids = view.children(v)
        hs = view.hs
        d = len(kids)
        s = 0
        for i in range(1, d):
            if hs[kids[i]] > hs[kids[s]]:
                s = i
        if hs[kids[s]] < hs[v]:
            s = d - 1  # re-assign s = d: every child is narrower than T
        self.s, self.d = s, d
        fan_top = 3 if self.binary else 6

        self.x_r = B.col()
        B.place(v, self.x_r, L(2))

        # Children before the spine child: WWE drawings in layers
        # fan_top..h (rooted paths on layers h-1/h), chained along layer h.
        pend: Optional[_Pend] = None
        for i in range(s):
            c = kids[i]
            if hs[c] >= 2:
                a = self._fan(c, fan_top, h, False, True)
                ll_i, lr_i = a.ll, a.lr
            else:
                leaf = self._path_chain(c, h - 1, h)
                ll_i = lr_i = leaf
            self._connect_child_root(c)
            if pend is not None:
                self._complete(pend, ll_i)
            if self.first_ll is None:
                self.first_ll = ll_i
            if hs[c] >= 2:
                e_col = B.col()
                pend = _Pend(lr_i, L(fan_top),
                             [], [(e_col, L(fan_top)), (e_col, L(h))])
            else:
                pend = _Pend(lr_i, L(h), [], [])
        self.pend_to_ll = pend

        c_s = kids[s]
        if s == d - 1:
            if hs[c_s] == 1:
                self._spine_is_path(c_s)
                return None
            self.case = "last"
            return (view, c_s, self.flip)
        self._spread()
        assert hs[c_s] == hs[v] >= 3
        return (view.flipped(), c_s, not self.flip)

    def _spine_is_path(self, c_s: int) -> None:
        """s = d with a rooted-path spine child: the path sits on view
        layers 2 (interior) and 1 (leaf); the connector from the previous
        subtree is rerouted east of it and up."""
        B, L = self.B, self.L
        leaf = self._path_chain(c_s, 2, 1)
        x_c, y_c = B.points[c_s]
        B.route(self.v, c_s, [(x_c, L(2))] if y_c == L(1) else [])
        if self.pend_to_ll is not None:
            self._complete_rerouted(self.pend_to_ll, leaf)
            self.pend_to_ll = None
        self.terminal_anchors = _Anchors(
            self.v, self.first_ll if self.first_ll is not None else leaf, leaf)

    def _spread(self) -> None:
        """The spine child is not last: reserve the (root, c_s) route down
        to layer h-1, draw the remaining children, and lift the connector
        toward l_R^s up to layer 1."""
        view, v, B, L, h = self.view, self.v, self.B, self.L, self.h
        kids = view.children(v)
        hs = view.hs
        s, d = self.s, self.d

        x1 = B.col()
        self.rcs_bends = [(x1, L(3)), (x1, L(h - 1))]

        if s == d - 2:
            # Second-to-last spine child: one EWW drawing below.
            c_d = kids[d - 1]
            dslot_bot = (h - 2) if self.binary else (h - 5)
            if hs[c_d] >= 2:
                a = self._fan(c_d, 1, dslot_bot, True, False)
                self._connect_last_child_root(c_d)
                self.pend_to_lr = _Pend(a.ll, L(dslot_bot), [], [])
                self.lr_final = a.lr
            else:
                leaf = self._path_chain(c_d, 2, 1)
                x_c, y_c = B.points[c_d]
                B.route(v, c_d, [(x_c, L(2))] if y_c == L(1) else [])
                self.pend_to_lr = _Pend(leaf, L(1), [], [])
                self.lr_final = leaf
                return  # the layer-1 ray reaches l_R^s directly
            x8 = B.col()
            self.pend_to_lr = _Pend(
                self.pend_to_lr.vertex, L(1),
                [(x8, L(dslot_bot)), (x8, L(1))], [])
            return

        # s <= d-2 in paper terms: an EWE child, middle children, then the
        # last child; the connector toward l_R^s rises east of all of them.
        c_n = kids[s + 1]
        if hs[c_n] >= 2:
            a_n = self._fan(c_n, 3, h - 2, True, True)
            self._connect_child_root(c_n)
            self.pend_to_lr = _Pend(a_n.ll, L(h - 2), [], [])
            e_col = B.col()
            pend = _Pend(a_n.lr, L(3), [], [(e_col, L(3)), (e_col, L(h - 3))])
        else:
            leaf = self._path_chain(c_n, h - 2, h - 2)
            self._connect_child_root(c_n)
            self.pend_to_lr = _Pend(leaf, L(h - 2), [], [])
            # Step up one layer east of the leaf (a fresh column: the leaf's
            # own column carries the connector toward the root).
            e_col = B.col()
            pend = _Pend(leaf, L(h - 3), [(e_col, L(h - 3))], [])

        for i in range(s + 2, d - 1):
            c = kids[i]
            if hs[c] >= 2:
                a = self._fan(c, 3, h - 3, False, True)
                ll_i, lr_i = a.ll, a.lr
            else:
                leaf = self._path_chain(c, h - 4, h - 3)
                ll_i = lr_i = leaf
            self._connect_child_root(c)
            self._complete(pend, ll_i)
            if hs[c] >= 2:
                e_col = B.col()
                pend = _Pend(lr_i, L(3), [],
                             [(e_col, L(3)), (e_col, L(h - 3))])
            else:
                pend = _Pend(lr_i, L(h - 3), [], [])

        c_d = kids[d - 1]
        if hs[c_d] >= 2:
            a_d = self._fan(c_d, 1, h - 3, False, False)
            self._connect_last_child_root(c_d)
            self._complete(pend, a_d.ll)
            self.lr_final = a_d.lr
        else:
            leaf = self._path_chain(c_d, 2, 1)
            x_c, y_c = B.points[c_d]
            B.route(v, c_d, [(x_c, L(2))] if y_c == L(1) else [])
            self._complete_rerouted(pend, leaf)
            self.lr_final = leaf

        x8 = B.col()
        old = self.pend_to_lr
        self.pend_to_lr = _Pend(old.vertex, L(1),
                                old.prefix + [(x8, old.exit_layer), (x8, L(1))],
                                [])

    def finish(self, child: _Anchors) -> _Anchors:
        """Complete the connector edges into the spine child's anchors."""
        if self.terminal_anchors is not None:
            return self.terminal_anchors
        view, v, B = self.view, self.v, self.B
        c_s = view.children(v)[self.s]
        if self.case == "last":
            self._connect_last_child_root(c_s)
            lr_final = child.lr
        else:
            # The spine child was drawn under the flipped view: its anchors
            # come back mirrored.
            child = _Anchors(child.root, child.lr, child.ll)
            B.route(v, c_s, self.rcs_bends)
            self._path_edge(child.lr, self.pend_to_lr.vertex,
                            self.pend_to_lr.normal(), from_b=True)
            lr_final = self.lr_final
        if self.pend_to_ll is not None:
            self._complete(self.pend_to_ll, child.ll)
        first_ll = self.first_ll if self.first_ll is not None else child.ll
        return _Anchors(v, first_ll, lr_final)


# ---------------------------------------------------------------------------
# Base cases (rooted pathwidth 2)
# ---------------------------------------------------------------------------

def _rpw2_structure(view: _View, v: int):
    """Spine of an rpw-2 subtree plus per-vertex before/after components
    (each a rooted path)."""
    spine = [v]
    while True:
        kids = view.children(spine[-1])
        if not kids:
            break
        best = kids[0]
        for c in kids[1:]:
            if view.hs[c] > view.hs[best]:
                best = c
        spine.append(best)
    comps = []
    for i, u in enumerate(spine[:-1]):
        kids = view.children(u)
        si = kids.index(spine[i + 1])
        comps.append((kids[:si], kids[si + 1:]))
    return spine, comps


class _BasePlacer:
    """Shared sweep for the two rpw-2 base cases: walk the spine west to
    east, hang before-components toward the bottom and after-components
    toward the top, then join the leaves into the path."""

    def __init__(self, view, B, L, h):
        self.view, self.B, self.L, self.h = view, B, L, h
        self.bottom: List[int] = []
        self.top_rev: List[int] = []

    def comp(self, parent: int, c: int, spine_layer: int, chain_layer: int,
             leaf_layer: int) -> int:
        """Place one off-spine rooted path and its edge from the spine
        vertex.  A bare leaf whose layer is two or more away routes through
        a bend on the chain layer so it cannot stab nearer chains."""
        B, L = self.B, self.L
        verts = self.view.path_vertices(c)
        for u in verts[:-1]:
            B.place(u, B.col(), L(chain_layer))
        leaf = verts[-1]
        x_leaf = B.col()
        B.place(leaf, x_leaf, L(leaf_layer))
        for a, c2 in zip(verts, verts[1:]):
            B.route(a, c2, [])
        bends = []
        if len(verts) == 1 and min(spine_layer, leaf_layer) < chain_layer < max(
                spine_layer, leaf_layer):
            bends = [(x_leaf, L(chain_layer))]
        B.route(parent, c, bends)
        return leaf

    def leaf_path(self, tip: int) -> Tuple[int, int]:
        """Join the leaves: along the bottom layer, up past the spine tip,
        then westward along the top layer.  The two edges at the tip detour
        one column east of it so they cannot stab the spine and so that a
        tip sitting on an extreme layer keeps a horizontal attachment (a
        later ray turn needs one)."""
        order = self.bottom + [tip] + list(reversed(self.top_rev))
        x_tip, y_tip = self.B.points[tip]
        for p, q in zip(order, order[1:]):
            bends = []
            if q == tip and self.B.points[p][1] != y_tip:
                if tip == order[-1]:  # tip is the rightmost leaf: attach flat
                    bends = [(x_tip + 1, self.B.points[p][1]), (x_tip + 1, y_tip)]
                else:
                    bends = [(x_tip, self.B.points[p][1])]
            elif p == tip and self.B.points[q][1] != y_tip:
                if tip == order[0]:  # tip is the leftmost leaf: attach flat
                    bends = [(x_tip + 1, y_tip), (x_tip + 1, self.B.points[q][1])]
                else:
                    bends = [(x_tip, self.B.points[q][1])]
            if self.view.rev:
                self.B.route(q, p, bends, reverse=True)
            else:
                self.B.route(p, q, bends)
        return order[0], order[-1]


def _base_rpw2(view: _View, v: int, t: int, b: int, flip: bool,
               B: _Builder) -> _Anchors:
    """Lemma-3 base case: the spine on one layer with the root leftmost,
    single leaves right above/below, and degree-2 chains on extra layers
    next to the spine layer."""
    L = _lmap(t, b, flip)
    h = b - t + 1
    spine, comps = _rpw2_structure(view, v)
    has_a = any(after for _, after in comps)
    has_b = any(before for before, _ in comps)
    chains_a = any(len(view.path_vertices(c)) > 1 for _, af in comps for c in af)
    m = 3 if chains_a else 2  # spine layer
    assert h >= 3 + 2 * view.chi[v]
    P = _BasePlacer(view, B, L, h)

    for i, u in enumerate(spine[:-1]):
        before, after = comps[i]
        if i == 0:
            B.place(u, B.col(), L(m))
        for c in before if i > 0 else ():
            P.bottom.append(P.comp(u, c, m, m + 1, h))
        if i > 0:
            B.place(u, B.col(), L(m))
        for c in before if i == 0 else ():
            P.bottom.append(P.comp(u, c, m, m + 1, h))
        for c in reversed(after):
            P.top_rev.append(P.comp(u, c, m, m - 1, 1))
    tip = spine[-1]
    if not has_b:
        B.place(tip, B.col(), L(h))
    elif not has_a:
        B.place(tip, B.col(), L(1))
    else:
        B.place(tip, B.col(), L(m))
    for a, c2 in zip(spine, spine[1:]):
        B.route(a, c2, [])
    ll, lr = P.leaf_path(tip)
    return _Anchors(v, ll, lr)


def _base_binary_zigzag(view: _View, v: int, t: int, b: int, flip: bool,
                        B: _Builder) -> _Anchors:
    """Binary rpw-2 base on 4 layers: a spine vertex goes to view-layer 2
    when its spine child is the right child (off-path component on the
    left, hanging down) and to view-layer 3 otherwise."""
    L = _lmap(t, b, flip)
    h = b - t + 1
    assert h >= 4
    spine, comps = _rpw2_structure(view, v)
    has_a = any(after for _, after in comps)
    has_b = any(before for before, _ in comps)
    P = _BasePlacer(view, B, L, h)

    for i, u in enumerate(spine[:-1]):
        before, after = comps[i]
        assert len(before) + len(after) <= 1
        layer = 2 if before or not after else 3
        if before and i > 0:
            leaf = P.comp(u, before[0], layer, 3, h)
            B.place(u, B.col(), L(layer))
            P.bottom.append(leaf)
        else:
            B.place(u, B.col(), L(layer))
            if before:
                P.bottom.append(P.comp(u, before[0], layer, 3, h))
        if after:
            P.top_rev.append(P.comp(u, after[0], layer, 2, 1))
    tip = spine[-1]
    if not has_b:
        B.place(tip, B.col(), L(h))
    elif not has_a:
        B.place(tip, B.col(), L(1))
    else:
        B.place(tip, B.col(), L(2))
    for a, c2 in zip(spine, spine[1:]):
        B.route(a, c2, [])
    ll, lr = P.leaf_path(tip)
    return _Anchors(v, ll, lr)


# ---------------------------------------------------------------------------
# Public operations
# ---------------------------------------------------------------------------

def _materialize(B: _Builder, tree: RootedOrderedTree,
                 dtype: DrawingType) -> TypedDrawing:
    graph = build_skirted(tree)
    missing = set(graph.all_edges()) - set(B.routes)
    assert not missing, f"construction missed edges {sorted(missing)[:4]}"
    d = LayeredDrawing(B.points, B.routes, graph).normalized()
    return TypedDrawing(d, dtype, tree)


def _check_binary(tree: RootedOrderedTree) -> None:
    if any(len(tree.children[v]) > 2 for v in range(tree.n)):
        raise ValueError("tree is not binary (a vertex has three children)")


def draw_skirted(tree: RootedOrderedTree, dtype="WNW",
                 binary: bool = False) -> TypedDrawing:
    """Plane y-monotone alpha_L alpha_r alpha_R drawing of H^-(T).

    For rooted pathwidth 2 the type's root letter degrades to W (the base
    case fixes the root to the spine layer); admissible types otherwise
    are WWE, EWW, EWE, WNW, WSW plus WWW (drawn as WNW, promised as WWW).
    """
    dtype = DrawingType.parse(dtype)
    if binary:
        _check_binary(tree)
    view = _View.of(tree)
    rpw = view.hs[tree.root]
    if rpw < 2:
        raise ValueError("draw_skirted needs rooted pathwidth >= 2")
    if rpw >= 3 and str(dtype) not in ADMISSIBLE_TYPES + ("WWW",):
        raise ValueError(f"type {dtype} not admissible for rpw >= 3")
    e_l, e_r = dtype.alpha_l == "E", dtype.alpha_r == "E"
    root_mode = dtype.alpha_root if dtype.alpha_root in ("N", "S") else "free"
    if rpw == 2:
        root_mode = "free"
        dtype = DrawingType(dtype.alpha_l, "W", dtype.alpha_r)
    h = skirted_height_bound(rpw, view.chi[tree.root], dtype.eflags, binary)
    B = _Builder()
    _draw(view, tree.root, e_l, e_r, root_mode, 1, h, False, B, binary)
    return _materialize(B, tree, dtype)


def draw_skirted_binary(tree: RootedOrderedTree, dtype="WNW") -> TypedDrawing:
    """Binary specialization: height 3 rpw - 3 + E flags + chi_ext."""
    return draw_skirted(tree, dtype, binary=True)


def base_case_rpw2(tree: RootedOrderedTree, alpha_l: str = "W",
                   alpha_r: str = "W") -> TypedDrawing:
    """Lemma-3 drawing of an rpw-2 tree (root letter is always W)."""
    view = _View.of(tree)
    if view.hs[tree.root] != 2:
        raise ValueError("base_case_rpw2 requires rooted pathwidth exactly 2")
    return draw_skirted(tree, DrawingType(alpha_l, "W", alpha_r))


def turn_ray(td: TypedDrawing, side: str) -> TypedDrawing:
    """Free the eastward ray of one outer leaf by moving it into a fresh
    layer above (side R) or below (side L); height grows by one and an N/S
    root loses its letter."""
    side = side.upper()
    if side not in ("L", "R"):
        raise ValueError("side must be 'L' or 'R'")
    flag = td.dtype.alpha_r if side == "R" else td.dtype.alpha_l
    if flag == "E":
        raise ValueError(f"alpha_{side} is already E")
    if td.drawing.height < 3:
        raise ValueError("turn_ray requires height >= 3")
    d = td.drawing.normalized()
    points = dict(d.points)
    routes = {e: list(bn) for e, bn in d.routes.items()}
    incident: Dict[int, List[Tuple[int, int]]] = {}
    for e in routes:
        incident.setdefault(e[0], []).append(e)
        incident.setdefault(e[1], []).append(e)
    lo, hi = d.layers_used()
    if side == "R":
        leaf = td.tree.rightmost_leaf()
        _turn_leaf(points, routes, incident, leaf, lo - 1)
        dtype = DrawingType(td.dtype.alpha_l, "W", "E")
    else:
        leaf = td.tree.leftmost_leaf()
        _turn_leaf(points, routes, incident, leaf, hi + 1)
        dtype = DrawingType("E", "W", td.dtype.alpha_r)
    out = LayeredDrawing(points, routes, d.graph).normalized()
    return TypedDrawing(out, dtype, td.tree)


def pad_layers(td: TypedDrawing, h_target: int) -> TypedDrawing:
    """Stretch a typed drawing to exactly h_target layers (claim widenUU):
    insert bends at all layer crossings, then stretch between layers 2/3
    (N or W root) or h-2/h-1 (S root)."""
    d = td.drawing.normalized()
    h = d.height
    if h_target < h:
        raise ValueError(f"cannot shrink drawing of height {h} to {h_target}")
    if h_target == h:
        return td
    if h < 3:
        raise ValueError("pad_layers requires height >= 3")
    k = h_target - h
    anchor = (h - 2) if td.dtype.alpha_root == "S" else 2
    padded = d.with_bends_at_layer_crossings().remap_layers(
        lambda y: y if y <= anchor else y + k)
    return TypedDrawing(padded, td.dtype, td.tree)


def close_cycle(td: TypedDrawing,
                tree: Optional[RootedOrderedTree] = None) -> LayeredDrawing:
    """Complete a WWW drawing of H^-(T), T rooted at a leaf of the unrooted
    skeleton, into a y-monotone drawing of H(T): both missing cycle edges
    run along the unobstructed westward rays and through the root column."""
    tree = tree or td.tree
    if td.dtype.alpha_l != "W" or td.dtype.alpha_r != "W":
        raise ValueError("close_cycle needs a W.W (WWW) drawing")
    if len(tree.children[tree.root]) != 1:
        raise ValueError("the root must be a leaf of the unrooted skeleton")
    halin = build_halin(tree)
    d = td.drawing.normalized()
    points = dict(d.points)
    routes = {e: list(bn) for e, bn in d.routes.items()}
    x_r, y_r = points[tree.root]
    lo, hi = d.layers_used()
    l_l, l_r = tree.leftmost_leaf(), tree.rightmost_leaf()
    routes[(l_r, tree.root)] = [(x_r, lo)]
    routes[(tree.root, l_l)] = [(x_r, hi)]
    return LayeredDrawing(points, routes, halin)


def draw_halin_ymonotone(halin, binary: str = "auto") -> LayeredDrawing:
    """Reroot at the best leaf, draw the skirted graph WWW and close the
    cycle; the result is plane, y-monotone and height-bounded but still
    has bends."""
    tree = halin.skeleton
    leaf, rpw_star = best_leaf_root(tree)
    rooted = reroot_at(tree, leaf)
    if rpw_star < 2:
        raise ValueError("skeleton with >= 3 leaves cannot be a path")
    use_binary = (binary == "on") or (
        binary == "auto" and tree.max_degree() <= 3)
    td = draw_skirted(rooted, "WWW", binary=use_binary)
    return close_cycle(td, rooted)


def draw_halin_straightline(halin, binary: str = "auto") -> LayeredDrawing:
    """End-to-end driver: y-monotone drawing of H(T) then straightening.
    Height <= 6 rpw* - 9 + 2 chi_ext (rpw* >= 3), 3 + 2 chi_ext (rpw* = 2),
    or 3 rpw* - 3 + chi_ext on the binary path."""
    from .straighten import ymonotone_to_straightline
    return ymonotone_to_straightline(draw_halin_ymonotone(halin, binary))
