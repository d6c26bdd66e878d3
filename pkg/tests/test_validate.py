"""Validators: planarity (banded vs brute), plane-ness, types, bounds."""

import random
from fractions import Fraction

import pytest

from halindraw.drawing import LayeredDrawing
from halindraw.layout import DrawingType, TypedDrawing, draw_skirted
from halindraw.trees import build_halin, parse_tree, reroot_at, tree_from_children
from halindraw.validate import (check_bound, check_planar, check_planar_brute,
                                check_plane, check_type, validate_drawing)
from halindraw.width import best_leaf_root

from util import random_tree


def drawing(points, routes, graph=None):
    return LayeredDrawing(dict(points), {e: list(b) for e, b in routes.items()},
                          graph)


def test_crossing_diagonals_rejected():
    d = drawing({0: (0, 1), 1: (2, 3), 2: (2, 1), 3: (0, 3)},
                {(0, 1): [], (2, 3): []})
    for checker in (check_planar, check_planar_brute):
        v = checker(d)
        assert not v.ok
        assert set(v.offending) == {(0, 1), (2, 3)}


def test_collinear_overlap_rejected():
    d = drawing({0: (0, 1), 1: (4, 1), 2: (1, 1), 3: (3, 1)},
                {(0, 1): [], (2, 3): []})
    assert not check_planar(d).ok
    assert not check_planar_brute(d).ok


def test_touch_at_shared_vertex_allowed():
    d = drawing({0: (0, 2), 1: (2, 1), 2: (2, 3)},
                {(0, 1): [], (0, 2): []})
    assert check_planar(d).ok and check_planar_brute(d).ok


def test_vertex_on_foreign_edge_rejected():
    d = drawing({0: (0, 1), 1: (2, 3), 2: (1, 2)}, {(0, 1): []})
    assert not check_planar(d).ok
    assert not check_planar_brute(d).ok


def test_crossing_between_layers_rejected():
    # order flips inside a band without touching any integer layer point
    d = drawing({0: (0, 1), 1: (3, 2), 2: (2, 1), 3: (1, 2)},
                {(0, 1): [], (2, 3): []})
    assert not check_planar(d).ok
    assert not check_planar_brute(d).ok


def _random_drawing(rng):
    """Small random drawing, sometimes planar, sometimes not."""
    n = rng.randrange(2, 7)
    pts = {}
    used = set()
    for v in range(n):
        while True:
            p = (Fraction(rng.randrange(0, 12), rng.choice((1, 2))),
                 rng.randrange(1, 5))
            if p not in used:
                used.add(p)
                pts[v] = p
                break
    routes = {}
    for _ in range(rng.randrange(1, n + 2)):
        u, v = rng.sample(range(n), 2)
        if (u, v) in routes or (v, u) in routes:
            continue
        bends = []
        if rng.random() < 0.4:
            bends = [(Fraction(rng.randrange(0, 12), 2), rng.randrange(1, 5))]
        routes[(u, v)] = bends
    return drawing(pts, routes)


def test_banded_matches_brute_on_random_drawings():
    """The production sweep must agree with the brute-force reference."""
    rng = random.Random(99)
    agree = disagree = 0
    for _ in range(1000):
        d = _random_drawing(rng)
        a = check_planar(d).ok
        b = check_planar_brute(d).ok
        if a == b:
            agree += 1
        else:
            disagree += 1
            print("DISAGREE", d.points, d.routes, a, b)
    assert disagree == 0 and agree == 1000


def test_check_plane_accepts_and_orients():
    star = parse_tree("(,,)")
    rooted = reroot_at(star, best_leaf_root(star)[0])
    from halindraw.layout import close_cycle
    closed = close_cycle(draw_skirted(rooted, "WWW"), rooted)
    rep = check_plane(closed, closed.graph)
    assert rep.plane_embedding and rep.orientation == 1


def test_check_plane_mirrored():
    t = parse_tree("((,,),(,,),(,,))")
    td = draw_skirted(t, "WNW")
    d = td.drawing
    mirrored = LayeredDrawing(
        {v: (-x, y) for v, (x, y) in d.points.items()},
        {e: [(-x, y) for (x, y) in b] for e, b in d.routes.items()},
        d.graph)
    rep = check_plane(mirrored, d.graph)
    assert rep.plane_embedding and rep.orientation == -1
    strict = check_plane(mirrored, d.graph, allow_reflection=False)
    assert not strict.plane_embedding


def test_check_plane_wrong_rotation():
    t = parse_tree("((,,),(,,),(,,))")
    td = draw_skirted(t, "WNW")
    # swap two subtrees' rotation expectation by mutating the graph's order
    other = tree_from_children(
        [tuple(reversed(c)) if v == 0 else c for v, c in enumerate(t.children)],
        t.root)
    from halindraw.trees import build_skirted
    rep = check_plane(td.drawing, build_skirted(other))
    assert not rep.plane_embedding


def test_check_type_detects_violations():
    t = parse_tree("(a,(c,),b)")
    td = draw_skirted(t, "WWW")
    assert all(check_type(td).values())
    # an extra point in the root's column breaks (d1)
    d = td.drawing
    bad = LayeredDrawing(dict(d.points), {e: list(b) for e, b in d.routes.items()},
                         d.graph)
    rx, ry = bad.points[t.root]
    lr = t.rightmost_leaf()
    bad.points[lr] = (rx, bad.points[lr][1])
    assert not check_type(TypedDrawing(bad, td.dtype, t))["d1"]


def test_check_type_root_layer():
    t = parse_tree("((,,),(,,),(,,))")
    td = draw_skirted(t, "WNW")
    wrong = TypedDrawing(td.drawing, DrawingType("W", "S", "W"), t)
    assert not check_type(wrong)["d3"]


def test_check_bound_table():
    t = parse_tree("((,,),(,,),(,,))")
    d = draw_skirted(t, "WNW").drawing
    assert d.height == 9
    assert check_bound(d, "lemma5", rpw=3, chi=0)["satisfied"]
    assert check_bound(d, "thm6", rpw=3, chi=0)["satisfied"]
    assert not check_bound(d, "lemma5", rpw=3, chi=0)["bound"] < 9
    assert check_bound(d, "hw-lower", w=2)["satisfied"]  # 9 >= 9
    assert not check_bound(d, "hw-lower", w=3)["satisfied"]
    assert check_bound(d, "thm1-3h", h_in=3)["satisfied"]
    with pytest.raises(KeyError):
        check_bound(d, "nonsense")


def test_validate_drawing_straightness_and_height():
    t = parse_tree("(a,(c,),b)")
    d = draw_skirted(t, "WWW").drawing
    rep = validate_drawing(d)
    assert rep.height == 3 and rep.y_monotone
    assert not rep.straight_line  # leaf path detours are bends
