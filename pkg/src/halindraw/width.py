"""Width metrics: Horton-Strahler number / rooted pathwidth, spines, the
best leaf root, and tiny-scale brute-force oracles for both width notions.

The Horton-Strahler recursion used throughout: a leaf scores 1, an internal
vertex scores m+1 when the maximum m over its children is attained at least
twice and m otherwise.  This equals the rooted pathwidth of the subtree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Optional, Tuple

from .trees import RootedOrderedTree, reroot_at

BRUTE_RPW_LIMIT = 16
BRUTE_PW_LIMIT = 14


def _combine(values) -> int:
    """Strahler merge of child scores (1 for no children)."""
    m = 0
    cnt = 0
    for v in values:
        if v > m:
            m, cnt = v, 1
        elif v == m:
            cnt += 1
    if m == 0:
        return 1
    return m + 1 if cnt >= 2 else m


def horton_strahler(tree: RootedOrderedTree) -> List[int]:
    """Per-vertex Horton-Strahler numbers of the subtrees T_v."""
    hs = [0] * tree.n
    for v in reversed(tree.dfs_preorder()):
        hs[v] = _combine(hs[c] for c in tree.children[v])
    return hs


def rooted_pathwidth(tree: RootedOrderedTree) -> int:
    return horton_strahler(tree)[tree.root]


def chi_ext(tree: RootedOrderedTree) -> int:
    """1 iff the tree has a non-root vertex of degree 2 (exactly one child)."""
    for v in range(tree.n):
        if v != tree.root and len(tree.children[v]) == 1:
            return 1
    return 0


def spine_and_spinechild(tree: RootedOrderedTree) -> Tuple[List[int], Dict[int, int]]:
    """Spine (root-to-leaf path through maximal children) and the
    spine-child map.  Ties break to the leftmost maximal child so drawings
    are deterministic."""
    hs = horton_strahler(tree)
    spine_child: Dict[int, int] = {}
    for v in range(tree.n):
        kids = tree.children[v]
        if kids:
            best = kids[0]
            for c in kids[1:]:
                if hs[c] > hs[best]:
                    best = c
            spine_child[v] = best
    spine = [tree.root]
    while spine[-1] in spine_child:
        spine.append(spine_child[spine[-1]])
    return spine, spine_child


def _strahler_all_roots(tree: RootedOrderedTree) -> List[int]:
    """HS of the whole tree rooted at v, for every v, in O(n).

    down[v] is the usual subtree score; up[v] scores the complement of T_v
    seen as a subtree hanging below v.  Rerooting at v then merges up[v]
    with the child scores.
    """
    order = tree.dfs_preorder()
    down = [0] * tree.n
    for v in reversed(order):
        down[v] = _combine(down[c] for c in tree.children[v])
    up: List[Optional[int]] = [None] * tree.n
    for v in order:
        vals = [down[c] for c in tree.children[v]]
        if up[v] is not None:
            vals.append(up[v])
        # Two largest values with multiplicities, for leave-one-out merges.
        m1 = c1 = m2 = c2 = 0
        for x in vals:
            if x > m1:
                m2, c2 = m1, c1
                m1, c1 = x, 1
            elif x == m1:
                c1 += 1
            elif x > m2:
                m2, c2 = x, 1
            elif x == m2:
                c2 += 1
        for c in tree.children[v]:
            x = down[c]
            if x < m1 or (x == m1 and c1 >= 2):
                m, cnt = (m1, c1 - 1) if x == m1 else (m1, c1)
            else:  # removing the unique maximum
                m, cnt = m2, c2
            if m == 0:
                up[c] = 1
            else:
                up[c] = m + 1 if cnt >= 2 else m
    total = [0] * tree.n
    for v in range(tree.n):
        vals = [down[c] for c in tree.children[v]]
        if up[v] is not None:
            vals.append(up[v])
        total[v] = _combine(vals)
    return total


def best_leaf_root(tree: RootedOrderedTree) -> Tuple[int, int]:
    """Leaf of the underlying unrooted tree minimizing the rooted pathwidth
    after rerooting; ties break to the smallest id."""
    if tree.n == 1:
        return tree.root, 1
    candidates = [v for v in range(tree.n) if tree.degree(v) == 1]
    total = _strahler_all_roots(tree)
    best = min(candidates, key=lambda v: (total[v], v))
    return best, total[best]


def best_leaf_root_naive(tree: RootedOrderedTree) -> Tuple[int, int]:
    """Reference implementation: reroot at every leaf and evaluate."""
    if tree.n == 1:
        return tree.root, 1
    best: Optional[Tuple[int, int]] = None
    for v in range(tree.n):
        if tree.degree(v) != 1:
            continue
        r = rooted_pathwidth(reroot_at(tree, v))
        if best is None or (r, v) < best:
            best = (r, v)
    return best[1], best[0]


# ---------------------------------------------------------------------------
# Brute-force oracles (exponential; capped to tiny trees)
# ---------------------------------------------------------------------------

def brute_rpw(tree: RootedOrderedTree) -> int:
    """Exact rooted pathwidth by minimizing over all rooted paths."""
    if tree.n > BRUTE_RPW_LIMIT:
        raise ValueError(f"brute_rpw limited to {BRUTE_RPW_LIMIT} vertices")
    memo: Dict[int, int] = {}

    def is_path(v: int) -> bool:
        while True:
            cs = tree.children[v]
            if not cs:
                return True
            if len(cs) > 1:
                return False
            v = cs[0]

    def rpw(v: int) -> int:
        if v in memo:
            return memo[v]
        if is_path(v):
            memo[v] = 1
            return 1
        best = None
        # Descending paths from v: choose a child at every step (or stop).
        stack: List[Tuple[int, List[int]]] = [(v, [v])]
        while stack:
            u, path = stack.pop()
            on_path = set(path)
            worst = 0
            for w in path:
                for c in tree.children[w]:
                    if c not in on_path:
                        worst = max(worst, 1 + rpw(c))
            if worst:
                best = worst if best is None else min(best, worst)
            for c in tree.children[u]:
                stack.append((c, path + [c]))
        memo[v] = best
        return best

    return rpw(tree.root)


def brute_pw(tree: RootedOrderedTree) -> int:
    """Exact unrooted pathwidth via Suderman's recursion: 0 for a single
    vertex, otherwise min over all paths P of max over components C of
    T - P of 1 + pw(C)."""
    if tree.n > BRUTE_PW_LIMIT:
        raise ValueError(f"brute_pw limited to {BRUTE_PW_LIMIT} vertices")
    adj = {v: list(tree.neighbors(v)) for v in range(tree.n)}
    memo: Dict[FrozenSet[int], int] = {}

    def components(part: FrozenSet[int]) -> List[FrozenSet[int]]:
        todo = set(part)
        comps = []
        while todo:
            seed = todo.pop()
            comp = {seed}
            stack = [seed]
            while stack:
                u = stack.pop()
                for w in adj[u]:
                    if w in todo:
                        todo.discard(w)
                        comp.add(w)
                        stack.append(w)
            comps.append(frozenset(comp))
        return comps

    def tree_path(u: int, v: int, inside: FrozenSet[int]) -> List[int]:
        prev = {u: u}
        stack = [u]
        while stack:
            a = stack.pop()
            if a == v:
                break
            for w in adj[a]:
                if w in inside and w not in prev:
                    prev[w] = a
                    stack.append(w)
        path = [v]
        while path[-1] != u:
            path.append(prev[path[-1]])
        return path

    def pw(part: FrozenSet[int]) -> int:
        if len(part) == 1:
            return 0
        if part in memo:
            return memo[part]
        verts = sorted(part)
        best = None
        for i, u in enumerate(verts):
            for v in verts[i:]:
                path = set(tree_path(u, v, part))
                worst = 1
                for comp in components(part - path):
                    worst = max(worst, 1 + pw(comp))
                    if best is not None and worst >= best:
                        break
                best = worst if best is None else min(best, worst)
        memo[part] = best
        return best

    return pw(frozenset(range(tree.n)))


# ---------------------------------------------------------------------------
# Width report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WidthReport:
    hs: Tuple[int, ...]
    rpw: int
    best_leaf_root: int
    rpw_star: int
    pw_lower: int
    pw_upper: int
    chi_ext: int
    spine: Tuple[int, ...]

    def as_dict(self, tree: RootedOrderedTree) -> dict:
        return {
            "hs": {tree.label_of(v): self.hs[v] for v in range(len(self.hs))},
            "rpw": self.rpw,
            "bestLeafRoot": tree.label_of(self.best_leaf_root),
            "rpwStar": self.rpw_star,
            "pwLower": self.pw_lower,
            "pwUpper": self.pw_upper,
            "chiExt": self.chi_ext,
            "spine": [tree.label_of(v) for v in self.spine],
        }


def width_report(tree: RootedOrderedTree) -> WidthReport:
    hs = horton_strahler(tree)
    spine, _ = spine_and_spinechild(tree)
    leaf, rpw_star = best_leaf_root(tree)
    return WidthReport(
        hs=tuple(hs),
        rpw=hs[tree.root],
        best_leaf_root=leaf,
        rpw_star=rpw_star,
        pw_lower=rpw_star // 2,  # = ceil((rpw* - 1) / 2)
        pw_upper=rpw_star,
        chi_ext=chi_ext(tree),
        spine=tuple(spine),
    )
