"""Ordered rooted trees and the Halin / skirted graphs built from them.

Vertices are dense integer ids assigned in DFS order, so parsing the same
text always yields the same ids (golden files stay stable).  Trees are
immutable after construction and all operations here are pure.

Conventions:

* The child lists give the left-to-right order; equivalently the cyclic
  rotation at a non-root vertex is (parent, c_1, ..., c_k) counter-clockwise.
* The leaf sequence is the DFS order of childless vertices; its first entry
  is the leftmost leaf and its last the rightmost leaf.
* "Unrooted" notions (degree, skeleton leaves) count the parent edge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple


class TreeFormatError(ValueError):
    """Raised for malformed tree text or edge-list input."""


@dataclass(frozen=True)
class RootedOrderedTree:
    """Rooted tree with an explicit left-to-right child order."""

    root: int
    children: Tuple[Tuple[int, ...], ...]
    labels: Dict[int, str] = field(default_factory=dict)

    def __post_init__(self):
        parent: List[Optional[int]] = [None] * self.n
        seen = 0
        stack = [self.root]
        while stack:
            v = stack.pop()
            seen += 1
            for c in self.children[v]:
                if parent[c] is not None or c == self.root:
                    raise ValueError("child lists do not form a tree")
                parent[c] = v
                stack.append(c)
        if seen != self.n:
            raise ValueError("tree is not connected")
        object.__setattr__(self, "_parent", tuple(parent))

    # -- basic structure ---------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.children)

    def parent(self, v: int) -> Optional[int]:
        return self._parent[v]

    def degree(self, v: int) -> int:
        """Unrooted degree (parent edge included)."""
        d = len(self.children[v])
        if v != self.root:
            d += 1
        return d

    def neighbors(self, v: int) -> Tuple[int, ...]:
        if v == self.root:
            return self.children[v]
        return (self._parent[v],) + self.children[v]

    def rotation(self, v: int) -> Tuple[int, ...]:
        """Cyclic neighbor order: parent first, then children left to right."""
        return self.neighbors(v)

    def dfs_preorder(self) -> List[int]:
        order = []
        stack = [self.root]
        while stack:
            v = stack.pop()
            order.append(v)
            stack.extend(reversed(self.children[v]))
        return order

    def leaves(self) -> List[int]:
        """Leaf sequence in DFS order (root never counts unless n == 1)."""
        if self.n == 1:
            return [self.root]
        return [v for v in self.dfs_preorder() if not self.children[v]]

    def leftmost_leaf(self) -> int:
        v = self.root
        while self.children[v]:
            v = self.children[v][0]
        return v

    def rightmost_leaf(self) -> int:
        v = self.root
        while self.children[v]:
            v = self.children[v][-1]
        return v

    def subtree_vertices(self, v: int) -> List[int]:
        out = []
        stack = [v]
        while stack:
            u = stack.pop()
            out.append(u)
            stack.extend(self.children[u])
        return out

    def edges(self) -> List[Tuple[int, int]]:
        """Tree edges as (parent, child) pairs in DFS order."""
        return [(self._parent[v], v) for v in self.dfs_preorder() if v != self.root]

    def label_of(self, v: int) -> str:
        return self.labels.get(v, f"v{v}")

    def is_rooted_path(self) -> bool:
        v = self.root
        while True:
            cs = self.children[v]
            if not cs:
                return True
            if len(cs) > 1:
                return False
            v = cs[0]

    def max_degree(self) -> int:
        return max(self.degree(v) for v in range(self.n))


def tree_from_children(children: Sequence[Sequence[int]], root: int = 0,
                       labels: Optional[Dict[int, str]] = None) -> RootedOrderedTree:
    return RootedOrderedTree(root, tuple(tuple(c) for c in children), dict(labels or {}))


# ---------------------------------------------------------------------------
# Text format:  tree := label? '(' (tree (',' tree)*)? ')'
#
# An empty child token denotes an anonymous leaf, so "(,,)" is a 3-leaf star
# and "()" a rooted path on two vertices.  Whitespace is insignificant.
# ---------------------------------------------------------------------------

def parse_tree(text: str) -> RootedOrderedTree:
    """Parse nested-parentheses tree text into a RootedOrderedTree."""
    s = "".join(text.split())
    if not s:
        raise TreeFormatError("empty input")
    pos = 0

    children: List[List[int]] = []
    labels: Dict[int, str] = {}

    def new_vertex(label: str) -> int:
        vid = len(children)
        children.append([])
        if label:
            if label in labels.values():
                raise TreeFormatError(f"duplicate label {label!r}")
            labels[vid] = label
        return vid

    def parse_node(allow_empty: bool) -> int:
        nonlocal pos
        start = pos
        while pos < len(s) and s[pos] not in "(),":
            pos += 1
        label = s[start:pos]
        if pos < len(s) and s[pos] == "(":
            vid = new_vertex(label)
            pos += 1  # consume '('
            kids = [parse_node(allow_empty=True)]
            while pos < len(s) and s[pos] == ",":
                pos += 1
                kids.append(parse_node(allow_empty=True))
            if pos >= len(s) or s[pos] != ")":
                raise TreeFormatError("unbalanced parentheses")
            pos += 1  # consume ')'
            children[vid].extend(kids)
            return vid
        if not label and not allow_empty:
            raise TreeFormatError("expected a tree")
        return new_vertex(label)

    root = parse_node(allow_empty=False)
    if pos != len(s):
        raise TreeFormatError(f"trailing input at position {pos}")
    # Reassign ids to DFS preorder so that ids are stable and dense.
    tree = tree_from_children(children, root, labels)
    return _renumber_dfs(tree)


def _renumber_dfs(tree: RootedOrderedTree) -> RootedOrderedTree:
    order = tree.dfs_preorder()
    remap = {old: new for new, old in enumerate(order)}
    children = [[] for _ in order]
    for old in order:
        children[remap[old]] = [remap[c] for c in tree.children[old]]
    labels = {remap[v]: lab for v, lab in tree.labels.items()}
    return tree_from_children(children, remap[tree.root], labels)


def serialize_tree(tree: RootedOrderedTree) -> str:
    """Inverse of parse_tree (anonymous single vertices are not expressible)."""
    if tree.n == 1 and tree.root not in tree.labels:
        raise TreeFormatError(
            "anonymous single-vertex tree has no text form; label it or "
            "use the edge-list format")
    out: List[str] = []

    def emit(v: int) -> None:
        out.append(tree.labels.get(v, ""))
        if tree.children[v]:
            out.append("(")
            for i, c in enumerate(tree.children[v]):
                if i:
                    out.append(",")
                emit(c)
            out.append(")")

    emit(tree.root)
    return "".join(out)


def parse_edge_list(text: str) -> RootedOrderedTree:
    """Parse the "root NAME" header plus "parent child" lines."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].lower().startswith("root"):
        raise TreeFormatError("edge list must start with a 'root <name>' header")
    parts = lines[0].split()
    if len(parts) != 2:
        raise TreeFormatError("malformed root header")
    root_name = parts[1]
    ids: Dict[str, int] = {root_name: 0}
    children: List[List[int]] = [[]]

    def vid(name: str) -> int:
        if name not in ids:
            ids[name] = len(children)
            children.append([])
        return ids[name]

    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise TreeFormatError(f"malformed edge line {ln!r}")
        p, c = parts
        cv = vid(c)
        children[vid(p)].append(cv)
    tree = tree_from_children(children, 0, {v: name for name, v in ids.items()})
    return _renumber_dfs(tree)


def serialize_edge_list(tree: RootedOrderedTree) -> str:
    names = {v: tree.label_of(v) for v in range(tree.n)}
    if len(set(names.values())) != tree.n:
        raise TreeFormatError("vertex names collide; cannot serialize edge list")
    lines = [f"root {names[tree.root]}"]
    for p, c in tree.edges():
        lines.append(f"{names[p]} {names[c]}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Rerooting
# ---------------------------------------------------------------------------

def reroot_at(tree: RootedOrderedTree, vertex: int) -> RootedOrderedTree:
    """Reroot keeping the cyclic rotation at every vertex.

    Child orders are re-derived by walking each rotation counter-clockwise
    starting after the new parent edge; the new root's children start at its
    old parent edge.  Vertex ids are preserved.
    """
    if vertex == tree.root:
        return tree
    rot = {v: tree.rotation(v) for v in range(tree.n)}
    children: List[Tuple[int, ...]] = [()] * tree.n
    # New root: start the child order at the edge toward the old root.
    children[vertex] = rot[vertex]
    stack = [(vertex, c) for c in reversed(rot[vertex])]
    while stack:
        parent, v = stack.pop()
        r = rot[v]
        i = r.index(parent)
        kids = tuple(r[(i + j) % len(r)] for j in range(1, len(r)))
        children[v] = kids
        stack.extend((v, c) for c in reversed(kids))
    return RootedOrderedTree(vertex, tuple(children), dict(tree.labels))


def rotation_systems_equal(a: RootedOrderedTree, b: RootedOrderedTree) -> bool:
    """True if a and b have the same cyclic rotation at every vertex."""
    if a.n != b.n:
        return False
    for v in range(a.n):
        ra, rb = a.rotation(v), b.rotation(v)
        if len(ra) != len(rb):
            return False
        if len(ra) <= 1:
            continue
        if rb[0] not in ra:
            return False
        i = ra.index(rb[0])
        if tuple(ra[(i + j) % len(ra)] for j in range(len(ra))) != rb:
            return False
    return True


# ---------------------------------------------------------------------------
# Halin and skirted graphs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HalinGraph:
    """Skeleton tree plus the cycle through its (unrooted) leaves."""

    skeleton: RootedOrderedTree
    cycle_edges: Tuple[Tuple[int, int], ...]
    regular: bool

    @property
    def cycle_vertices(self) -> List[int]:
        return [e[0] for e in self.cycle_edges]

    def all_edges(self) -> List[Tuple[int, int]]:
        return self.skeleton.edges() + list(self.cycle_edges)

    def _cycle_pos(self) -> Tuple[List[int], Dict[int, int]]:
        cached = self.__dict__.get("_cyc_cache")
        if cached is None:
            cyc = self.cycle_vertices
            cached = (cyc, {u: i for i, u in enumerate(cyc)})
            object.__setattr__(self, "_cyc_cache", cached)
        return cached

    def rotation(self, v: int) -> Tuple[int, ...]:
        cyc, pos = self._cycle_pos()
        return _rotation_with_cycle(self.skeleton, cyc, pos, v, closed=True)


@dataclass(frozen=True)
class SkirtedGraph:
    """Skeleton tree plus the left-to-right path over its rooted leaves."""

    skeleton: RootedOrderedTree
    path_edges: Tuple[Tuple[int, int], ...]

    def all_edges(self) -> List[Tuple[int, int]]:
        return self.skeleton.edges() + list(self.path_edges)

    def _cycle_pos(self) -> Tuple[List[int], Dict[int, int]]:
        cached = self.__dict__.get("_cyc_cache")
        if cached is None:
            cyc = self.skeleton.leaves()
            cached = (cyc, {u: i for i, u in enumerate(cyc)})
            object.__setattr__(self, "_cyc_cache", cached)
        return cached

    def rotation(self, v: int) -> Tuple[int, ...]:
        cyc, pos = self._cycle_pos()
        return _rotation_with_cycle(self.skeleton, cyc, pos, v, closed=False)


def _rotation_with_cycle(tree: RootedOrderedTree, cyc: List[int],
                         pos: Dict[int, int], v: int,
                         closed: bool) -> Tuple[int, ...]:
    """Plane rotation of H(T) / H^-(T): each cycle edge sits between the two
    tree edges it is adjacent to, which for a cycle vertex gives the cyclic
    order (tree neighbor, previous cycle vertex, next cycle vertex)."""
    if v not in pos:
        return tree.rotation(v)
    i = pos[v]
    m = len(cyc)
    prev = cyc[i - 1] if (i > 0 or closed) else None
    nxt = cyc[(i + 1) % m] if (i < m - 1 or closed) else None
    tree_nb = tree.neighbors(v)[0] if tree.neighbors(v) else None
    out = [tree_nb, prev, nxt]
    return tuple(x for x in out if x is not None)


def unrooted_leaves_cyclic(tree: RootedOrderedTree) -> List[int]:
    """Leaves of the underlying unrooted tree in planar cyclic order.

    This is the rooted DFS leaf sequence, plus the root appended at the end
    when the root itself has degree 1.
    """
    if tree.n == 1:
        return [tree.root]
    out = tree.leaves()
    if len(tree.children[tree.root]) == 1:
        out.append(tree.root)
    return out


def build_halin(skeleton: RootedOrderedTree) -> HalinGraph:
    """Connect the skeleton's leaves in cyclic order."""
    cyc = unrooted_leaves_cyclic(skeleton)
    if len(cyc) < 3:
        raise ValueError(f"Halin graph needs >= 3 leaves, got {len(cyc)}")
    edges = tuple((cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc)))
    regular = all(skeleton.degree(v) != 2 for v in range(skeleton.n))
    return HalinGraph(skeleton, edges, regular)


def build_skirted(tree: RootedOrderedTree) -> SkirtedGraph:
    """Connect the rooted leaves left to right in an open path."""
    if tree.n == 1:
        raise ValueError("skirted graph needs at least two vertices")
    lv = tree.leaves()
    edges = tuple((lv[i], lv[i + 1]) for i in range(len(lv) - 1))
    return SkirtedGraph(tree, edges)


# ---------------------------------------------------------------------------
# Leaf-reduced inner skeleton
# ---------------------------------------------------------------------------

def leaf_reduction(halin: HalinGraph) -> Tuple[List[int], List[Tuple[int, int]]]:
    """Compute the leaf-reduced inner skeleton of a Halin graph.

    Returns (kept vertices of T'', deletion sequence).  The deletion
    sequence lists (removed vertex, its neighbor at removal time) such that
    replaying it backwards leaf-extends T'' to the inner skeleton T'.  The
    inner skeleton drops every unrooted leaf of the skeleton; the reduction
    then repeatedly removes a leaf whose sole neighbor has degree 2, and a
    surviving bare edge loses its endpoint farther from the root.
    """
    t = halin.skeleton
    alive = [True] * t.n
    deg = [t.degree(v) for v in range(t.n)]
    adj = {v: set(t.neighbors(v)) for v in range(t.n)}
    for v in range(t.n):
        if deg[v] == 1:
            alive[v] = False
    for v in range(t.n):
        if not alive[v]:
            for u in adj[v]:
                if alive[u]:
                    deg[u] -= 1
            adj[v] = set()
    for v in range(t.n):
        adj[v] = {u for u in adj[v] if alive[u]}

    # Deepest-first deletion: the result set is order-independent except
    # when the core is a path, where this keeps the root-closest vertex
    # (so e.g. the reduction of H(F_1) is the grand-parent g).
    import heapq
    deletions: List[Tuple[int, int]] = []
    depth = [0] * t.n
    for v in t.dfs_preorder():
        if v != t.root:
            depth[v] = depth[t.parent(v)] + 1
    heap = [(-depth[v], v) for v in range(t.n) if alive[v] and deg[v] == 1]
    heapq.heapify(heap)
    while heap:
        _, v = heapq.heappop(heap)
        if not alive[v] or len(adj[v]) != 1:
            continue
        (u,) = adj[v]
        if len(adj[u]) != 2:
            continue
        alive[v] = False
        adj[u].discard(v)
        adj[v] = set()
        deletions.append((v, u))
        if len(adj[u]) == 1:
            heapq.heappush(heap, (-depth[u], u))

    kept = [v for v in range(t.n) if alive[v]]
    if len(kept) == 2:
        # A path core: drop the endpoint farther from the skeleton root.
        u, v = kept
        keep = _closer_to_root(t, u, v)
        drop = v if keep == u else u
        deletions.append((drop, keep))
        kept = [keep]
    return kept, deletions


def _closer_to_root(tree: RootedOrderedTree, u: int, v: int) -> int:
    du = _depth(tree, u)
    dv = _depth(tree, v)
    if du != dv:
        return u if du < dv else v
    return min(u, v)


def _depth(tree: RootedOrderedTree, v: int) -> int:
    d = 0
    while v != tree.root:
        v = tree.parent(v)
        d += 1
    return d


def leaf_reduced_inner_skeleton(halin: HalinGraph) -> RootedOrderedTree:
    """The smallest subtree of the inner skeleton that leaf-extends to it."""
    kept, _ = leaf_reduction(halin)
    return induced_subtree(halin.skeleton, kept)


def induced_subtree(tree: RootedOrderedTree, vertices: Iterable[int]) -> RootedOrderedTree:
    """Induced subtree rooted at the kept vertex nearest the original root.

    Vertex ids are NOT preserved (the result is renumbered densely); labels
    carry over so vertices stay identifiable.
    """
    keep = set(vertices)
    root = min(keep, key=lambda v: (_depth(tree, v), v))
    remap = {}
    children: List[List[int]] = []
    labels: Dict[int, str] = {}

    def add(v: int) -> int:
        nv = len(children)
        remap[v] = nv
        children.append([])
        labels[nv] = tree.label_of(v)
        return nv

    add(root)
    stack = [root]
    while stack:
        v = stack.pop()
        kids = [c for c in tree.neighbors(v) if c in keep and c not in remap]
        for c in kids:
            add(c)
            children[remap[v]].append(remap[c])
            stack.append(c)
    return tree_from_children(children, 0, labels)
