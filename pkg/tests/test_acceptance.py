"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.  Heavy corpora are computed once in module-scoped
fixtures and shared between the bound checks (criteria 3-5), the type
contracts (criterion 6) and the straightening checks (criterion 7).
"""

import random
import time

import pytest

from halindraw.families import FamilyParams, gen_C, height_target
from halindraw.layout import (close_cycle, draw_skirted, draw_skirted_binary,
                              skirted_height_bound)
from halindraw.drawing import LayeredDrawing
from halindraw.pipeline import draw_tree_builtin, transform_to_halin
from halindraw.straighten import ymonotone_to_straightline
from halindraw.trees import (build_halin, leaf_reduced_inner_skeleton,
                             parse_tree, reroot_at, tree_from_children)
from halindraw.validate import (check_plane, check_planar, check_type,
                                validate_drawing)
from halindraw.width import (best_leaf_root, brute_pw, brute_rpw, chi_ext,
                             rooted_pathwidth)

from util import all_ordered_trees, random_halin_skeleton, random_tree


def _report(criterion, ok, detail):
    line = f"[criterion {criterion}] {'PASS' if ok else 'FAIL'}: {detail}"
    print(line)
    assert ok, line


# -- criterion 1: width oracle equivalence -----------------------------------

def test_criterion_1_width_oracle_exhaustive():
    t0 = time.time()
    count = 0
    for n in range(1, 11):
        for t in all_ordered_trees(n):
            assert rooted_pathwidth(t) == brute_rpw(t), t.children
            count += 1
    elapsed = time.time() - t0
    _report(1, count == 6918 and elapsed < 60,
            f"horton_strahler == brute_rpw on all {count} ordered trees "
            f"with <= 10 vertices ({elapsed:.1f}s)")


# -- criterion 2: pathwidth bracket -------------------------------------------

def test_criterion_2_pathwidth_bracket():
    t0 = time.time()
    rng = random.Random(2024)
    for i in range(500):
        t = random_tree(rng.randrange(2, 13), rng)
        pw = brute_pw(t)
        _, rpw_star = best_leaf_root(t)
        assert pw <= rpw_star <= 2 * pw + 1, (t.children, pw, rpw_star)
    elapsed = time.time() - t0
    _report(2, elapsed < 300,
            f"brute_pw <= rpw* <= 2 brute_pw + 1 on 500 random trees "
            f"({elapsed:.1f}s)")


# -- criteria 3, 4: straight-line bounds (shared corpora) ---------------------

def _run_straightline_suite(sizes, per_size, seed, binary):
    rng = random.Random(seed)
    stats = {"n": 0, "type_ok": 0, "straighten_ok": 0}
    t0 = time.time()
    for size in sizes:
        for _ in range(per_size):
            t = random_halin_skeleton(size, rng,
                                      max_degree=3 if binary else None)
            leaf, rpw_star = best_leaf_root(t)
            rooted = reroot_at(t, leaf)
            chi = chi_ext(rooted)
            td = (draw_skirted_binary if binary else draw_skirted)(rooted, "WWW")
            tc = check_type(td)
            stats["type_ok"] += all(tc.values())
            closed = close_cycle(td, rooted)
            straight = ymonotone_to_straightline(closed)
            bound = skirted_height_bound(rpw_star, chi, 0, binary)
            rep = validate_drawing(straight)
            assert rep.planar, (size, rep.offending)
            assert rep.straight_line and rep.integral_layers
            pl = check_plane(straight, straight.graph, report=rep)
            assert pl.plane_embedding, size
            assert straight.height <= bound, (size, straight.height, bound)
            # criterion 7 bookkeeping: straightening preserved all layers
            ok7 = straight.height == closed.normalized().height and all(
                straight.points[v][1] == y
                for v, (_, y) in closed.normalized().points.items())
            stats["straighten_ok"] += ok7
            stats["n"] += 1
    stats["elapsed"] = time.time() - t0
    return stats


@pytest.fixture(scope="module")
def suite3():
    return _run_straightline_suite((50, 500, 5000), 200, 333, binary=False)


@pytest.fixture(scope="module")
def suite4():
    return _run_straightline_suite((50, 500, 5000), 200, 444, binary=True)


def test_criterion_3_straightline_bound(suite3):
    _report(3, suite3["n"] == 600 and suite3["elapsed"] < 600,
            f"{suite3['n']} drawings planar+plane+straight within "
            f"6rpw*-9+2chi ({suite3['elapsed']:.0f}s)")


def test_criterion_4_binary_bound(suite4):
    _report(4, suite4["n"] == 600 and suite4["elapsed"] < 300,
            f"{suite4['n']} cubic drawings within 3rpw*-3+chi "
            f"({suite4['elapsed']:.0f}s)")


# -- criterion 5: transform bound ---------------------------------------------

def _handmade_fixtures():
    """Ten tiny skeletons whose reduced inner skeletons admit hand-made
    drawings of height exactly 2 pw + 1."""
    out = []
    # reduced skeleton = single vertex (pw 0, height 1)
    for text in ("(,,)", "(,,,)", "(,,,,)"):
        t = parse_tree(text)
        tpp = leaf_reduced_inner_skeleton(build_halin(t))
        hand = LayeredDrawing({0: (0, 1)}, {}, tpp)
        out.append((t, hand))
    # reduced skeleton = a star (pw 1, height 3): center on layer 2,
    # leaves alternating above/below
    for hubs in (3, 4, 5, 6):
        text = "(" + ",".join("(,,)" for _ in range(hubs)) + ")"
        t = parse_tree(text)
        tpp = leaf_reduced_inner_skeleton(build_halin(t))
        assert tpp.n == hubs + 1 and brute_pw(tpp) == 1
        pts = {tpp.root: (0, 2)}
        kids = tpp.children[tpp.root]
        half = (len(kids) + 1) // 2
        x = 2
        for c in kids[:half]:          # first half below, west to east
            pts[c] = (x, 3)
            x += 2
        for c in reversed(kids[half:]):  # second half above, east to west
            pts[c] = (x, 1)
            x += 2
        hand = LayeredDrawing(pts, {(tpp.root, c): [] for c in kids}, tpp)
        assert hand.height == 3
        out.append((t, hand))
    # reduced skeleton = a double star (pw 1, height 3): two adjacent hubs
    # on layer 2, their sub-hubs fanned alternately above and below
    for pre, post, kb in ((1, 1, 2), (2, 1, 2), (1, 2, 2)):
        hub = "(,,)"
        text = ("(" + ",".join([hub] * pre) + ","
                + "(" + ",".join([hub] * kb) + "),"
                + ",".join([hub] * post) + ")")
        t = parse_tree(text)
        tpp = leaf_reduced_inner_skeleton(build_halin(t))
        assert tpp.n == 2 + pre + post + kb and brute_pw(tpp) == 1
        a = tpp.root
        kids_a = tpp.children[a]
        b = next(c for c in kids_a if tpp.children[c])
        bi = kids_a.index(b)
        pts = {a: (0, 2)}
        x = 2
        for c in kids_a[:bi]:           # before the hub edge: below, west->east
            pts[c] = (x, 3)
            x += 2
        for c in reversed(kids_a[bi + 1:]):  # after: above, east->west
            pts[c] = (x, 1)
            x += 2
        pts[b] = (x, 2)
        for j, c in enumerate(tpp.children[b]):
            pts[c] = (x + 2 + 2 * j, 3 if j == 0 else 1)
        hand = LayeredDrawing(pts, {e: [] for e in tpp.edges()}, tpp)
        assert hand.height == 3
        out.append((t, hand))
    return out


def test_criterion_5_transform_bound():
    t0 = time.time()
    rng = random.Random(555)
    for _ in range(200):
        t = random_halin_skeleton(rng.randrange(4, 120), rng)
        h = build_halin(t)
        din = draw_tree_builtin(leaf_reduced_inner_skeleton(h))
        out = transform_to_halin(h, din)
        rep = validate_drawing(out)
        assert rep.planar and rep.integral_layers, rep.offending
        assert check_plane(out, h, report=rep).plane_embedding
        assert out.height <= 3 * din.height, (out.height, din.height)
    fixtures = _handmade_fixtures()
    assert len(fixtures) == 10
    for t, hand in fixtures:
        pw = brute_pw(hand.graph)
        assert hand.height == 2 * pw + 1
        h = build_halin(t)
        out = transform_to_halin(h, hand)
        rep = validate_drawing(out)
        assert rep.planar
        assert check_plane(out, h, report=rep).plane_embedding
        assert out.height <= 6 * pw + 3, (out.height, pw)
    elapsed = time.time() - t0
    _report(5, elapsed < 300,
            f"200 transforms within 3h plus 10 hand-made drawings within "
            f"6pw+3 ({elapsed:.0f}s)")


# -- criterion 6: type contracts ----------------------------------------------

def test_criterion_6_type_contracts(suite3, suite4):
    total = suite3["n"] + suite4["n"]
    good = suite3["type_ok"] + suite4["type_ok"]
    _report(6, good == total,
            f"(d1)(d2)(d3)+y-monotone hold for {good}/{total} typed drawings")


# -- criterion 7: straightening preserves layers ------------------------------

def test_criterion_7_straightening(suite3, suite4):
    total = suite3["n"] + suite4["n"]
    good = suite3["straighten_ok"] + suite4["straighten_ok"]
    rng = random.Random(777)
    extra = 0
    for _ in range(60):  # the builtin tree drawings that feed criterion 5
        t = random_halin_skeleton(rng.randrange(4, 120), rng)
        din = draw_tree_builtin(leaf_reduced_inner_skeleton(build_halin(t)))
        st = ymonotone_to_straightline(din)
        assert st.height == din.height
        assert all(st.points[v][1] == y for v, (_, y) in
                   din.normalized().points.items())
        assert check_planar(st).ok
        extra += 1
    _report(7, good == total,
            f"layers and height preserved on {good}/{total} closed drawings "
            f"and {extra} tree drawings; check_planar green")


# -- criterion 8: lower-bound consistency --------------------------------------

def _measure_family(w, S, L):
    params = FamilyParams(w, S, L)
    cw = gen_C(params)
    target = height_target(w)
    heights = {}
    td = draw_skirted(cw, "WWW")  # H^-(C_w) as rooted by the family
    heights["skirted"] = td.drawing.height
    halin = build_halin(cw)
    leaf, rpw_star = best_leaf_root(cw)
    rooted = reroot_at(cw, leaf)
    closed = close_cycle(draw_skirted(rooted, "WWW"), rooted)
    heights["ymonotone"] = closed.height
    heights["straight"] = ymonotone_to_straightline(closed).height
    heights["transform"] = transform_to_halin(halin).height
    return heights, target


def test_criterion_8_lower_bound_small():
    t0 = time.time()
    results = []
    for w, S, L in ((1, 2, 1), (2, 5, 3)):
        heights, target = _measure_family(w, S, L)
        for name, got in heights.items():
            assert got >= target, (w, S, L, name, got, target)
        results.append((w, S, L, heights))
    elapsed = time.time() - t0
    _report("8a", True,
            f"every layout of H^-(C_w)/H(C_w) needs >= 6w-3 layers at desk "
            f"scale {results} ({elapsed:.0f}s)")


def test_criterion_8_lower_bound_proof_scale():
    t0 = time.time()
    heights, target = _measure_family(2, 42, 81)
    elapsed = time.time() - t0
    ok = all(got >= target for got in heights.values()) and elapsed < 1800
    _report("8b", ok,
            f"C_2 at S=42, L=81 ({3 + 41 * 2 * 81 * 12} vertices): heights "
            f"{heights} all >= {target} ({elapsed:.0f}s)")


# -- criterion 9: K4 ------------------------------------------------------------

def test_criterion_9_k4_three_layers():
    star = parse_tree("(,,)")
    rooted = reroot_at(star, best_leaf_root(star)[0])
    straight = ymonotone_to_straightline(
        close_cycle(draw_skirted(rooted, "WWW"), rooted))
    rep = validate_drawing(straight)
    pl = check_plane(straight, straight.graph, report=rep)
    ok = (straight.height == 3 and rep.planar and rep.straight_line
          and pl.plane_embedding)
    _report(9, ok, f"K4 straight-line on exactly {straight.height} layers")


# -- criterion 10: near-linear scaling -----------------------------------------

def test_criterion_10_scaling():
    import numpy as np
    times = []
    rng = random.Random(101)
    wall_at_million = None
    for n in (10**3, 10**4, 10**5, 10**6):
        t = random_tree(n, rng)
        t0 = time.time()
        draw_skirted(t, "WNW")
        elapsed = time.time() - t0
        times.append((n, max(elapsed, 1e-3)))
        if n == 10**6:
            wall_at_million = elapsed
    slope = float(np.polyfit(np.log([n for n, _ in times]),
                             np.log([s for _, s in times]), 1)[0])
    ok = slope <= 1.2 and wall_at_million < 120
    _report(10, ok,
            f"draw_skirted log-log slope {slope:.2f} <= 1.2, "
            f"{wall_at_million:.1f}s at n=10^6")
