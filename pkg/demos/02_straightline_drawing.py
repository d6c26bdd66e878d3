"""
Straight-line drawings of Halin graphs
======================================

The recursive construction draws the skirted graph (tree plus a path
through the leaves) with typed boundary contracts, closes the cycle along
the free westward rays, and straightens the result at the same height.
The height is at most 6 rpw* - 9 + 2 chi_ext, with rpw* the rooted
pathwidth at the best leaf root.
"""

from pathlib import Path

from halindraw import (best_leaf_root, build_halin, chi_ext, check_plane,
                       close_cycle, draw_skirted, parse_tree, render_svg,
                       reroot_at, serialize_drawing, skirted_height_bound,
                       validate_drawing, ymonotone_to_straightline)

skeleton = parse_tree("((a,b,(c,d)),(e,f),(g,(h,i),j))")

# Root at the best leaf and draw the skirted graph with both outer
# westward rays kept free (type WWW).
leaf, rpw_star = best_leaf_root(skeleton)
rooted = reroot_at(skeleton, leaf)
typed = draw_skirted(rooted, "WWW")
print("skirted drawing height:", typed.drawing.height,
      "bound:", skirted_height_bound(rpw_star, chi_ext(rooted)))

# Close the cycle: the two missing cycle edges run along the free rays
# and through the root's column, adding no layers.
ymono = close_cycle(typed, rooted)
print("closed y-monotone height:", ymono.height)

# Straighten at equal height: every vertex keeps its layer.
straight = ymonotone_to_straightline(ymono)
report = validate_drawing(straight)
report = check_plane(straight, straight.graph, report=report)
print("straight-line:", report.straight_line,
      "planar:", report.planar,
      "plane embedding:", report.plane_embedding,
      "height:", report.height)

out = Path("halin_straightline.svg")
out.write_text(render_svg(straight, labels=True))
print("wrote", out)

doc = Path("halin_straightline.json")
doc.write_text(serialize_drawing(straight, {"algorithm": "straightline"}))
print("wrote", doc)
