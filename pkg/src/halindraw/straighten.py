"""Straightening of y-monotone layered drawings at unchanged height.

A planar drawing whose edges are y-monotone poly-lines can be redrawn
straight-line with every vertex keeping its layer.  The witness used here:
record, per integer layer, the left-to-right order of vertices and edge
crossings; any x-assignment realizing these orders with crossings as
linear interpolations of their endpoints is planar, because two straight
segments ordered identically at every shared integer layer cannot cross,
and all endpoints sit on integer layers.  Existence of such an assignment
is the content of the classic straightening theorem, so the constraint
system below is always feasible.

Two solvers are tried:

* a linear-time greedy sweep that places vertices layer by layer into the
  interval induced by already-determined items (fast, but fan apexes with
  many long edges can make a late interval empty);
* a feasibility LP over the same constraints, solved in floats and then
  snapped to integers; the snapped solution is verified with exact
  rational arithmetic before it is accepted (solved with a unit-gap margin
  wide enough to absorb rounding).

Coordinates in the result are integers; only the exact verification and
the interpolation weights use rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .drawing import LayeredDrawing, y_monotone_route
from .rational import rat


class StraighteningError(RuntimeError):
    pass


def ymonotone_to_straightline(d: LayeredDrawing) -> LayeredDrawing:
    """Remove all bends while preserving every vertex's layer, the height,
    and the per-layer left-to-right order of vertices and edge crossings."""
    for e in d.routes:
        if not y_monotone_route(d.edge_polyline(e)):
            raise ValueError(f"route of edge {e} is not y-monotone")
    if d.is_straight_line():
        return d.normalized()
    d = d.normalized()
    problem = _Problem(d)
    xs = problem.solve_greedy(spread=64)
    if xs is None:
        xs = problem.solve_lp()
    if xs is None:
        raise StraighteningError("no order-preserving straight drawing found")
    return LayeredDrawing(
        points={v: (xs[v], y) for v, (_, y) in d.points.items()},
        routes={e: [] for e in d.routes},
        graph=d.graph,
    )


def _route_layer_hits(pts) -> Dict[int, Tuple[object, object]]:
    """Intersection intervals of a y-monotone poly-line with each integer
    layer strictly between its endpoint layers."""
    y0, y1 = pts[0][1], pts[-1][1]
    lo, hi = (y0, y1) if y0 <= y1 else (y1, y0)
    hits: Dict[int, Tuple[object, object]] = {}
    for (ax, ay), (bx, by) in zip(pts, pts[1:]):
        sy, ty = (ay, by) if ay <= by else (by, ay)
        for y in range(max(sy, lo + 1), min(ty, hi - 1) + 1):
            if ay == by:
                x_lo, x_hi = (ax, bx) if ax <= bx else (bx, ax)
            else:
                t = rat(y - ay, by - ay)
                x = ax + t * (bx - ax)
                x_lo = x_hi = x
            if y in hits:
                old = hits[y]
                hits[y] = (min(old[0], x_lo), max(old[1], x_hi))
            else:
                hits[y] = (x_lo, x_hi)
    return hits


class _Problem:
    """Per-layer order constraints: consecutive items must stay ordered.

    Items are vertices ('v', id) and edge crossings ('e', edge, t) with t
    the exact interpolation weight of the crossing layer."""

    def __init__(self, d: LayeredDrawing):
        self.d = d
        self.edge_span: Dict[Tuple[int, int], Tuple[int, int]] = {}
        per_layer: Dict[int, List[Tuple[object, Tuple]]] = {}
        for v, (x, y) in d.points.items():
            per_layer.setdefault(y, []).append(((x, x), ("v", v)))
        for e in d.routes:
            pts = d.edge_polyline(e)
            yu, yv = pts[0][1], pts[-1][1]
            if yu == yv:
                continue
            self.edge_span[e] = (yu, yv)
            for y, iv in _route_layer_hits(pts).items():
                t = Fraction(y - yu, yv - yu)
                per_layer.setdefault(y, []).append((iv, ("e", e, t)))
        self.order: Dict[int, List[Tuple]] = {}
        for y, items in per_layer.items():
            items.sort(key=lambda it: it[0])
            self.order[y] = [tag for _, tag in items]
        # Each adjacent pair only needs constraints at the extreme layers
        # where it occurs: item positions are linear in y, so a unit gap at
        # both extremes gives a unit gap on every layer between.
        pair_span: Dict[Tuple, List[int]] = {}
        for y, tags in self.order.items():
            for a, b in zip(tags, tags[1:]):
                key = (self._core(a), self._core(b))
                span = pair_span.get(key)
                if span is None:
                    pair_span[key] = [y, y]
                else:
                    span[0] = min(span[0], y)
                    span[1] = max(span[1], y)
        self.constraints: List[Tuple[Tuple, Tuple]] = []
        for (ca, cb), (y0, y1) in pair_span.items():
            for y in {y0, y1}:
                self.constraints.append((self._tag_at(ca, y),
                                         self._tag_at(cb, y)))

    @staticmethod
    def _core(tag) -> Tuple:
        return tag if tag[0] == "v" else ("e", tag[1])

    def _tag_at(self, core, y: int) -> Tuple:
        if core[0] == "v":
            return core
        e = core[1]
        yu, yv = self.edge_span[e]
        return ("e", e, Fraction(y - yu, yv - yu))

    # -- shared helpers --------------------------------------------------------

    @staticmethod
    def _vars_of(tag) -> Tuple[int, ...]:
        if tag[0] == "v":
            return (tag[1],)
        return tag[1]

    @staticmethod
    def _eval(tag, xs) -> Optional[object]:
        if tag[0] == "v":
            return xs.get(tag[1])
        _, (u, v), t = tag
        xu, xv = xs.get(u), xs.get(v)
        if xu is None or xv is None:
            return None
        return xu + t * (xv - xu)

    def _verify(self, xs) -> bool:
        for a, b in self.constraints:
            va, vb = self._eval(a, xs), self._eval(b, xs)
            if va is None or vb is None or vb <= va:
                return False
        return True

    # -- greedy sweep ------------------------------------------------------------

    def solve_greedy(self, spread: int = 1 << 16) -> Optional[Dict[int, object]]:
        """Bottom-up interval placement.  Returns None when some interval
        comes up empty or a deferred constraint fails."""
        xs: Dict[int, object] = {}
        by_vertex: Dict[int, List[int]] = {}
        missing: List[set] = []
        for idx, (a, b) in enumerate(self.constraints):
            vs = set(self._vars_of(a)) | set(self._vars_of(b))
            missing.append(vs)
            for w in vs:
                by_vertex.setdefault(w, []).append(idx)

        def coeff_const(tag, w):
            if tag[0] == "v":
                return (Fraction(1), Fraction(0)) if tag[1] == w \
                    else (Fraction(0), Fraction(xs[tag[1]]))
            _, (u, v), t = tag
            c = Fraction(0)
            k = Fraction(0)
            if u == w:
                c += 1 - t
            else:
                k += (1 - t) * Fraction(xs[u])
            if v == w:
                c += t
            else:
                k += t * Fraction(xs[v])
            return c, k

        for y in sorted(self.order, reverse=True):
            for tag in self.order[y]:
                if tag[0] != "v":
                    continue
                w = tag[1]
                lo = hi = None
                for idx in by_vertex.get(w, ()):
                    if missing[idx] - {w}:
                        continue
                    a, b = self.constraints[idx]
                    ca, ka = coeff_const(a, w)
                    cb, kb = coeff_const(b, w)
                    coeff, rhs = cb - ca, 1 + ka - kb
                    if coeff == 0:
                        if rhs > 0:
                            return None
                        continue
                    bound = rhs / coeff
                    if coeff > 0:
                        lo = bound if lo is None or bound > lo else lo
                    else:
                        hi = bound if hi is None or bound < hi else hi
                if lo is not None and hi is not None:
                    if lo > hi:
                        return None
                    xs[w] = (lo + hi) / 2
                elif lo is not None:
                    xs[w] = lo + spread
                elif hi is not None:
                    xs[w] = hi - spread
                else:
                    xs[w] = Fraction(0)
                for idx in by_vertex.get(w, ()):
                    missing[idx].discard(w)
        return xs if self._verify(xs) else None

    # -- LP fallback ---------------------------------------------------------------

    def solve_lp(self, gap: int = 8) -> Optional[Dict[int, object]]:
        """Feasibility LP with a gap wide enough that rounding the float
        solution to integers keeps all exact gaps positive."""
        import numpy as np
        from scipy.optimize import linprog
        from scipy.sparse import coo_matrix

        cols = {v: i for i, v in enumerate(self.d.points)}
        rows_i: List[int] = []
        cols_i: List[int] = []
        vals: List[float] = []

        def add(row, tag, sign):
            if tag[0] == "v":
                rows_i.append(row)
                cols_i.append(cols[tag[1]])
                vals.append(sign)
                return
            _, (u, v), t = tag
            tf = float(t)
            rows_i.append(row)
            cols_i.append(cols[u])
            vals.append(sign * (1.0 - tf))
            rows_i.append(row)
            cols_i.append(cols[v])
            vals.append(sign * tf)

        m = len(self.constraints)
        for i, (a, b) in enumerate(self.constraints):
            add(i, a, 1.0)   # X(a) - X(b) <= -gap
            add(i, b, -1.0)
        A = coo_matrix((vals, (rows_i, cols_i)), shape=(m, len(cols)))
        b_ub = np.full(m, -float(gap))
        res = linprog(np.zeros(len(cols)), A_ub=A.tocsr(), b_ub=b_ub,
                      bounds=(None, None), method="highs")
        if not res.success:
            return None
        base = res.x - res.x.min()
        for scale in (1, 4, 64, 1024):
            xs = {v: int(round(base[i] * scale)) for v, i in cols.items()}
            if self._verify(xs):
                return xs
        return None
