"""Width metrics: Horton-Strahler, oracles, best leaf root, spines."""

import random

import pytest
from hypothesis import given, settings, strategies as st

from halindraw.trees import parse_tree, reroot_at, tree_from_children
from halindraw.width import (best_leaf_root, best_leaf_root_naive, brute_pw,
                             brute_rpw, chi_ext, horton_strahler,
                             rooted_pathwidth, spine_and_spinechild,
                             width_report)

from util import all_ordered_trees, random_tree


def complete_binary(depth: int):
    text = ""
    for _ in range(depth):
        text = f"({text},{text})"
    return parse_tree(text) if text else tree_from_children([[]], 0)


def test_hs_basics():
    assert rooted_pathwidth(tree_from_children([[]], 0)) == 1
    assert rooted_pathwidth(parse_tree("((((()))))")) == 1
    assert rooted_pathwidth(complete_binary(4)) == 5


def test_hs_star():
    assert rooted_pathwidth(parse_tree("(,,,,)")) == 2


def test_brute_rpw_matches_hs_small():
    rng = random.Random(7)
    for _ in range(120):
        t = random_tree(rng.randrange(1, 12), rng)
        assert brute_rpw(t) == rooted_pathwidth(t)


def test_brute_rpw_two_level_binary():
    # two levels: the root and its two leaf children
    assert brute_rpw(complete_binary(1)) == 2


def test_brute_pw_basics():
    assert brute_pw(tree_from_children([[]], 0)) == 0
    assert brute_pw(parse_tree("(((())))")) == 1
    assert brute_pw(parse_tree("()")) == 1


def test_brute_limits():
    rng = random.Random(8)
    with pytest.raises(ValueError):
        brute_rpw(random_tree(17, rng))
    with pytest.raises(ValueError):
        brute_pw(random_tree(15, rng))


def test_pathwidth_bracket_random():
    rng = random.Random(9)
    for _ in range(60):
        t = random_tree(rng.randrange(2, 13), rng)
        pw = brute_pw(t)
        _, rpw_star = best_leaf_root(t)
        assert pw <= rpw_star <= 2 * pw + 1


def test_best_leaf_root_matches_naive():
    rng = random.Random(10)
    for _ in range(80):
        t = random_tree(rng.randrange(1, 16), rng)
        assert best_leaf_root(t) == best_leaf_root_naive(t)


def test_best_leaf_root_star():
    t = parse_tree("(,,,)")
    leaf, rpw_star = best_leaf_root(t)
    assert rpw_star == 2 and t.degree(leaf) == 1


def test_spine_properties():
    rng = random.Random(11)
    for _ in range(60):
        t = random_tree(rng.randrange(2, 20), rng)
        hs = horton_strahler(t)
        spine, spine_child = spine_and_spinechild(t)
        assert spine[0] == t.root and not t.children[spine[-1]]
        on_spine = set(spine)
        for v in spine:
            for c in t.children[v]:
                if c not in on_spine:
                    assert hs[c] <= hs[t.root] - 1
        # tie-break: leftmost maximal child
        for v, c in spine_child.items():
            kids = t.children[v]
            m = max(hs[k] for k in kids)
            assert hs[c] == m and kids.index(c) == \
                min(i for i, k in enumerate(kids) if hs[k] == m)


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_rpw_invariant_under_order_reversal(data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    t = random_tree(rng.randrange(1, 18), rng)
    rev = tree_from_children([tuple(reversed(c)) for c in t.children], t.root)
    assert rooted_pathwidth(t) == rooted_pathwidth(rev)


def test_chi_ext():
    assert chi_ext(parse_tree("(a,(b),c)")) == 1   # non-root degree-2 vertex
    assert chi_ext(parse_tree("(a,(b,c))")) == 0
    assert chi_ext(parse_tree("(())")) == 1
    assert chi_ext(parse_tree("(,)")) == 0  # root degree 2 does not count


def test_width_report_fields():
    t = parse_tree("(a,(c,),b)")
    rep = width_report(t)
    assert rep.rpw == rep.hs[t.root] == 2
    assert rep.pw_lower == rep.rpw_star // 2
    assert rep.pw_upper == rep.rpw_star
    d = rep.as_dict(t)
    assert d["spine"][0] == "v0"


def test_exhaustive_small_trees_hs_equals_brute():
    count = 0
    for n in range(1, 8):
        for t in all_ordered_trees(n):
            assert rooted_pathwidth(t) == brute_rpw(t)
            count += 1
    assert count == 1 + 1 + 2 + 5 + 14 + 42 + 132
