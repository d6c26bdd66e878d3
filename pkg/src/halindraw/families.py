"""Lower-bound instance families.

C_1 is a two-vertex path with a leaf on each side at both vertices; F_w
adds a parent and grand-parent above C_w's root with a leaf on each side
at both; C_{w+1} is a spine of S vertices carrying L copies of F_w on each
side of every spine vertex except the last.  The hatted variants replace
the base case by a tree built around the 3-layer-hard caterpillar, giving
extended Halin graphs.  Any drawing of H^-(C_w) or H(C_w) needs at least
h(w) = 6w - 3 layers (hat: 6w - 7), which the consistency suite checks
against every layout path of this package.

The proof regime uses S = 42, L = 81; structural checks work at desk
scale (say S = 3, L = 1), which the generators default away from only on
request.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List

from .trees import RootedOrderedTree, tree_from_children

PROOF_S = 42
PROOF_L = 81


@dataclass(frozen=True)
class FamilyParams:
    w: int
    S: int = PROOF_S
    L: int = PROOF_L

    def __post_init__(self):
        if self.w < 1:
            raise ValueError("family level w must be >= 1")
        if self.S < 2 or self.L < 1:
            raise ValueError("need S >= 2 and L >= 1")


def height_target(w: int) -> int:
    """h(1) = 3 and h(w) = h(w-1) + 6 = 6w - 3."""
    if w < 1:
        raise ValueError("w must be >= 1")
    return 6 * w - 3


def height_target_hat(w: int) -> int:
    """hat h(2) = 5 and hat h(w) = hat h(w-1) + 6 = 6w - 7."""
    if w < 2:
        raise ValueError("hatted targets start at w = 2")
    return 6 * w - 7


class _TreeBuilder:
    def __init__(self):
        self.children: List[List[int]] = []

    def node(self) -> int:
        self.children.append([])
        return len(self.children) - 1

    def leaf_of(self, parent: int) -> int:
        v = self.node()
        self.children[parent].append(v)
        return v

    def tree(self, root: int) -> RootedOrderedTree:
        return tree_from_children(self.children, root)


def _build_c(b: _TreeBuilder, w: int, S: int, L: int, base) -> int:
    if w == 1:
        return base(b)
    spine = [b.node() for _ in range(S)]
    for i, s in enumerate(spine[:-1]):
        for _ in range(L):
            b.children[s].append(_build_f(b, w - 1, S, L, base))
        b.children[s].append(spine[i + 1])
        for _ in range(L):
            b.children[s].append(_build_f(b, w - 1, S, L, base))
    return spine[0]


def _build_f(b: _TreeBuilder, w: int, S: int, L: int, base) -> int:
    """Add the parent p and grand-parent g with a leaf on each side of the
    path at both; g is the new root."""
    r = _build_c(b, w, S, L, base)
    p = b.node()
    b.children[p] = [b.node(), r, b.node()]
    g = b.node()
    b.children[g] = [b.node(), p, b.node()]
    return g


def _base_c1(b: _TreeBuilder) -> int:
    r = b.node()
    c = b.node()
    b.children[r] = [b.node(), c, b.node()]
    b.children[c] = [b.node(), b.node()]
    return r


def _base_chat2(b: _TreeBuilder) -> int:
    """The extended base: the 3-layer-hard caterpillar (a path v1 v2 v3
    with three leaves at v1 and v3 and six at v2) grows a pendant at every
    leaf; the root is the pendant of v1's middle leaf, flanked by two new
    outer leaves."""
    v1, v2, v3 = b.node(), b.node(), b.node()
    a, mid, c = b.node(), b.node(), b.node()
    b.children[v1] = [a, v2, c]
    for lf in (a, c):
        b.leaf_of(lf)
    qs = [b.node() for _ in range(6)]
    b.children[v2] = qs[:3] + [v3] + qs[3:]
    for q in qs:
        b.leaf_of(q)
    for _ in range(3):
        b.leaf_of(b.leaf_of(v3))
    root = b.node()
    b.children[root] = [b.node(), mid, b.node()]
    b.children[mid] = [v1]
    return root


def gen_C(params: FamilyParams) -> RootedOrderedTree:
    """C_w rooted at the first spine vertex (C_1 at r)."""
    b = _TreeBuilder()
    return b.tree(_build_c(b, params.w, params.S, params.L, _base_c1))


def gen_F(params: FamilyParams) -> RootedOrderedTree:
    """F_w = C_w with a parent and grand-parent added, rooted at the
    grand-parent g."""
    b = _TreeBuilder()
    return b.tree(_build_f(b, params.w, params.S, params.L, _base_c1))


def gen_Chat(params: FamilyParams) -> RootedOrderedTree:
    """Hatted family for extended Halin graphs (w >= 2)."""
    if params.w < 2:
        raise ValueError("hatted family starts at w = 2")
    b = _TreeBuilder()
    return b.tree(_build_c(b, params.w - 1, params.S, params.L, _base_chat2))


def gen_doubled(params: FamilyParams) -> RootedOrderedTree:
    """Two copies of F_w joined between the roots g; for embedding-free
    lower-bound instances (w >= 2).  Returned rooted at one copy's g."""
    if params.w < 2:
        raise ValueError("doubled family starts at w = 2")
    b = _TreeBuilder()
    g1 = _build_f(b, params.w, params.S, params.L, _base_c1)
    g2 = _build_f(b, params.w, params.S, params.L, _base_c1)
    b.children[g1].append(g2)
    return b.tree(g1)
