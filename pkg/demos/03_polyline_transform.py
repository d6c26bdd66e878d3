"""
The 3x poly-line transform
==========================

Any order-preserving drawing of the leaf-reduced inner skeleton turns
into a plane poly-line drawing of the whole Halin graph at three times
the height: the drawing becomes a flat visibility representation, the
pendant chains and leaves are re-inserted, the grid is tripled, and the
cycle is traced one unit around everything.
"""

from pathlib import Path

from halindraw import (build_halin, check_plane, draw_tree_builtin,
                       leaf_reduced_inner_skeleton, parse_tree, render_svg,
                       to_flat_visibility, transform_to_halin,
                       validate_drawing)

skeleton = parse_tree("((a,(b,c),d),(e,(f,g)),(h,i))")
halin = build_halin(skeleton)

# The subtree that actually gets drawn: delete the skeleton's leaves,
# then shave pendant chains.
reduced = leaf_reduced_inner_skeleton(halin)
print("skeleton:", skeleton.n, "vertices; reduced inner skeleton:",
      reduced.n)

# Draw the reduced skeleton with the built-in drawer...
inner_drawing = draw_tree_builtin(reduced)
print("inner drawing height:", inner_drawing.height)

# ...peek at its flat visibility representation (same height and
# embedding; this is the transform's stage 2)...
fvr = to_flat_visibility(inner_drawing.with_bends_at_layer_crossings()
                         if not inner_drawing.is_straight_line()
                         else inner_drawing)
print("visibility representation:", fvr.height, "rows x", fvr.width, "cols")

# ...and run the whole pipeline.
out = transform_to_halin(halin, inner_drawing)
report = validate_drawing(out)
report = check_plane(out, halin, report=report)
print("transform height:", out.height, "<= 3 x", inner_drawing.height,
      "| planar:", report.planar, "plane:", report.plane_embedding)

Path("halin_transform.svg").write_text(render_svg(out))
print("wrote halin_transform.svg")
