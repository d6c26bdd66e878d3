"""Shared test helpers: seeded random trees and exhaustive enumerations."""

from __future__ import annotations

import random
from typing import Iterator, List, Optional

from halindraw.trees import RootedOrderedTree, tree_from_children


def random_tree(n: int, rng: random.Random,
                max_degree: Optional[int] = None) -> RootedOrderedTree:
    """Random ordered tree via random parent choice and shuffled orders."""
    children: List[List[int]] = [[] for _ in range(n)]
    for v in range(1, n):
        while True:
            p = rng.randrange(v)
            if max_degree is None or len(children[p]) < max_degree - 1:
                break
        children[p].append(v)
    for lst in children:
        rng.shuffle(lst)
    return tree_from_children(children, 0)


def random_halin_skeleton(n: int, rng: random.Random,
                          max_degree: Optional[int] = None,
                          regular: bool = False) -> RootedOrderedTree:
    """Random skeleton with at least 3 leaves; optionally no degree-2
    vertices (an extra leaf is hung at each one)."""
    t = random_tree(n, rng, max_degree)
    while len([v for v in range(t.n) if t.degree(v) == 1]) < 3:
        t = random_tree(n, rng, max_degree)
    if regular:
        children = [list(c) for c in t.children]
        for v in range(t.n):
            if t.degree(v) == 2:
                children.append([])
                children[v].append(len(children) - 1)
        t = tree_from_children(children, t.root)
    return t


def all_ordered_trees(n: int) -> Iterator[RootedOrderedTree]:
    """Every ordered rooted tree on n vertices (Catalan(n-1) shapes)."""
    for shape in _forest_shapes(n - 1):
        children: List[List[int]] = []
        _materialize(shape, children)
        yield tree_from_children(children, 0)


def _forest_shapes(total: int):
    """All ordered forests with `total` vertices, as nested lists."""
    if total == 0:
        yield []
        return
    for first in range(1, total + 1):
        for tree_shape in _tree_shapes(first):
            for rest in _forest_shapes(total - first):
                yield [tree_shape] + rest


def _tree_shapes(total: int):
    for sub in _forest_shapes(total - 1):
        yield sub


def _materialize(forest, children: List[List[int]]) -> int:
    me = len(children)
    children.append([])
    for sub in forest:
        kid = _materialize(sub, children)
        children[me].append(kid)
    return me
