"""Lower-bound family generators."""

import pytest

from halindraw.families import (FamilyParams, gen_C, gen_Chat, gen_F,
                                gen_doubled, height_target, height_target_hat)
from halindraw.trees import build_halin, leaf_reduced_inner_skeleton
from halindraw.width import best_leaf_root, chi_ext, horton_strahler, rooted_pathwidth


def test_c1_shape():
    t = gen_C(FamilyParams(1))
    assert t.n == 6
    assert len(t.children[t.root]) == 3
    assert rooted_pathwidth(t) == 2


def test_f_adds_six_vertices():
    for w, S, L in ((1, 2, 1), (2, 3, 1), (2, 3, 2)):
        c = gen_C(FamilyParams(w, S, L))
        f = gen_F(FamilyParams(w, S, L))
        assert f.n == c.n + 6


def test_c2_count_small():
    t = gen_C(FamilyParams(2, S=3, L=1))
    assert t.n == 3 + 2 * 2 * 12


def test_hs_bound_small_params():
    for w in (1, 2, 3):
        t = gen_C(FamilyParams(w, S=3, L=1))
        assert horton_strahler(t)[t.root] <= w + 1
        f = gen_F(FamilyParams(w, S=3, L=1))
        assert horton_strahler(f)[f.root] <= w + 1


def test_f1_reduced_skeleton_is_g():
    f1 = gen_F(FamilyParams(1))
    tpp = leaf_reduced_inner_skeleton(build_halin(f1))
    assert tpp.n == 1


def test_regular_families():
    for tree in (gen_C(FamilyParams(1)), gen_C(FamilyParams(2, S=3, L=1)),
                 gen_F(FamilyParams(2, S=3, L=1)),
                 gen_doubled(FamilyParams(2, S=3, L=1))):
        assert build_halin(tree).regular


def test_chat_properties():
    chat = gen_Chat(FamilyParams(2, S=3, L=1))
    assert rooted_pathwidth(chat) == 2
    assert chi_ext(chat) == 1
    with pytest.raises(ValueError):
        gen_Chat(FamilyParams(1))


def test_doubled_properties():
    f = gen_F(FamilyParams(2, S=3, L=1))
    d = gen_doubled(FamilyParams(2, S=3, L=1))
    assert d.n == 2 * f.n
    _, rpw_star = best_leaf_root(d)
    assert rpw_star <= 3
    with pytest.raises(ValueError):
        gen_doubled(FamilyParams(1))


def test_height_targets():
    assert [height_target(w) for w in range(1, 11)] == \
        [3 + 6 * (w - 1) for w in range(1, 11)]
    assert height_target_hat(2) == 5
    for w in range(3, 11):
        assert height_target_hat(w) == height_target_hat(w - 1) + 6
    with pytest.raises(ValueError):
        height_target(0)
    with pytest.raises(ValueError):
        height_target_hat(1)


def test_param_validation():
    with pytest.raises(ValueError):
        FamilyParams(0)
    with pytest.raises(ValueError):
        FamilyParams(1, S=1)
    with pytest.raises(ValueError):
        FamilyParams(1, L=0)
