"""
Lower-bound families
====================

The trees C_w need h(w) = 6w - 3 layers in any plane drawing of their
skirted or Halin graphs, matching the constructions' upper bounds: the
straight-line height for C_2 comes out at exactly 9 = h(2).
"""

from halindraw import (FamilyParams, best_leaf_root, build_halin, chi_ext,
                       draw_halin_straightline, draw_skirted, gen_C, gen_Chat,
                       gen_F, height_target, height_target_hat,
                       leaf_reduced_inner_skeleton, reroot_at,
                       transform_to_halin, width_report)

# Desk-scale parameters; the proof regime uses S=42, L=81.
params = FamilyParams(2, S=5, L=3)
c2 = gen_C(params)
print("C_2 at S=5, L=3:", c2.n, "vertices, rpw* =",
      best_leaf_root(c2)[1], ", target h(2) =", height_target(2))

straight = draw_halin_straightline(build_halin(c2))
print("straight-line height:", straight.height, ">=", height_target(2))

poly = transform_to_halin(build_halin(c2))
print("transform height:", poly.height, ">=", height_target(2))

# F_w adds a parent and grand-parent; its reduced inner skeleton at w=1
# is a single vertex.
f1 = gen_F(FamilyParams(1))
print("F_1 reduced skeleton size:",
      leaf_reduced_inner_skeleton(build_halin(f1)).n)

# The hatted family gives extended Halin graphs (a non-root degree-2
# vertex appears, so chi_ext = 1) with targets 6w - 7.
chat = gen_Chat(FamilyParams(2, S=3, L=1))
print("Chat_2: rpw =", width_report(chat).rpw, "chi_ext =", chi_ext(chat),
      "target:", height_target_hat(2))
