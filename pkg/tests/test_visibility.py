"""Flat visibility representations: disjointness, height, embedding."""

import random
from fractions import Fraction

import pytest

from halindraw.drawing import LayeredDrawing
from halindraw.pipeline import draw_tree_builtin
from halindraw.trees import parse_tree
from halindraw.visibility import to_flat_visibility

from util import random_tree


def fvr_segments(fvr):
    segs = []
    for v, (row, x1, x2) in fvr.vertex_seg.items():
        segs.append((("vtx", v), x1, x2, row, row))
    for e, s in fvr.edge_seg.items():
        if s[0] == "v":
            segs.append((e, s[1], s[1], s[2], s[3]))
        else:
            segs.append((e, s[2], s[3], s[1], s[1]))
    return segs


def assert_fvr_valid(d, fvr):
    """Interior-disjointness and attachment of every edge segment."""
    for v, (row, x1, x2) in fvr.vertex_seg.items():
        assert x1 < x2 and row == d.points[v][1]
    for e, s in fvr.edge_seg.items():
        for v in e:
            row, x1, x2 = fvr.vertex_seg[v]
            if s[0] == "v":
                assert s[2] <= row <= s[3]
                assert x1 < s[1] < x2  # unit overhang on both sides
            else:
                assert s[1] == row and (s[2] == x2 or s[3] == x1)

    def box(seg):
        owner, s = seg
        if isinstance(owner, int):
            row, x1, x2 = fvr.vertex_seg[owner]
            return (x1, x2, row, row)
        if s[0] == "v":
            return (s[1], s[1], s[2], s[3])
        return (s[2], s[3], s[1], s[1])

    items = [(v, None) for v in fvr.vertex_seg] + list(fvr.edge_seg.items())
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            a, b = items[i], items[j]
            (ax1, ax2, ay1, ay2), (bx1, bx2, by1, by2) = box(a), box(b)
            if max(ax1, bx1) > min(ax2, bx2) or max(ay1, by1) > min(ay2, by2):
                continue
            # the only allowed contact: an edge segment ending on the
            # vertex segment of one of its endpoints
            vert, edge = (a, b) if isinstance(a[0], int) else (b, a)
            assert isinstance(vert[0], int) and not isinstance(edge[0], int), (a, b)
            assert vert[0] in edge[0], (a, b)


def test_single_edge():
    d = LayeredDrawing({0: (0, 1), 1: (0, 2)}, {(0, 1): []},
                       parse_tree("()"))
    fvr = to_flat_visibility(d)
    assert fvr.height == 2
    assert fvr.edge_seg[(0, 1)][0] == "v"
    assert_fvr_valid(d, fvr)


def test_star_two_layers():
    t = parse_tree("(,,)")
    d = LayeredDrawing({0: (2, 1), 1: (0, 2), 2: (2, 2), 3: (4, 2)},
                       {(0, 1): [], (0, 2): [], (0, 3): []}, t)
    fvr = to_flat_visibility(d)
    assert fvr.height == 2
    assert_fvr_valid(d, fvr)
    # embedding: children attach below, west to east in child order
    assert fvr.rotation(0) == [1, 2, 3]


def test_same_layer_edge_becomes_horizontal():
    t = parse_tree("()")
    d = LayeredDrawing({0: (0, 1), 1: (2, 1)}, {(0, 1): []}, t)
    fvr = to_flat_visibility(d)
    assert fvr.edge_seg[(0, 1)][0] == "h"
    assert_fvr_valid(d, fvr)


def test_rejects_bent_input():
    d = LayeredDrawing({0: (0, 1), 1: (0, 3)}, {(0, 1): [(1, 2)]},
                       parse_tree("()"))
    with pytest.raises(ValueError):
        to_flat_visibility(d)


def test_rejects_nonplanar_input():
    d = LayeredDrawing({0: (0, 1), 1: (2, 3), 2: (2, 1), 3: (0, 3)},
                       {(0, 1): [], (2, 3): []})
    with pytest.raises(ValueError):
        to_flat_visibility(d)


def test_builtin_drawings_convert():
    rng = random.Random(41)
    for _ in range(40):
        t = random_tree(rng.randrange(2, 30), rng)
        d = draw_tree_builtin(t)
        d2 = d.with_bends_at_layer_crossings()
        # subdivide bends into dummy-vertex-free straight input
        if not d.is_straight_line():
            continue
        fvr = to_flat_visibility(d)
        assert fvr.height == d.height
        assert_fvr_valid(d, fvr)


def test_embedding_preserved_on_straight_trees():
    rng = random.Random(42)
    checked = 0
    for _ in range(60):
        t = random_tree(rng.randrange(2, 16), rng)
        d = draw_tree_builtin(t)
        if not d.is_straight_line():
            continue
        tree = d.graph
        fvr = to_flat_visibility(d)
        from halindraw.validate import _cyclic_equal
        for v in range(tree.n):
            rot = list(tree.rotation(v))
            got = fvr.rotation(v)
            assert _cyclic_equal(got, rot) or _cyclic_equal(got[::-1], rot)
            checked += 1
    assert checked > 30
