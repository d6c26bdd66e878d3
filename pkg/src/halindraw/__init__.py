"""halindraw: layered drawings of Halin graphs with provably small height.

A Halin graph is a plane tree plus a cycle through its leaves.  This
package draws them on integer layers two ways: a recursive straight-line
construction whose height is bounded by the rooted pathwidth of the
skeleton, and a transform that turns any drawing of the leaf-reduced
inner skeleton into a poly-line drawing of the whole graph at three times
the height.  Exact validators certify every drawing, and generators
produce the families that show the bounds are worst-case optimal.
"""

from .drawing import LayeredDrawing
from .families import (FamilyParams, gen_C, gen_Chat, gen_F, gen_doubled,
                       height_target, height_target_hat)
from .formats import parse_drawing, render_svg, serialize_drawing
from .layout import (DrawingType, TypedDrawing, base_case_rpw2, close_cycle,
                     draw_halin_straightline, draw_halin_ymonotone,
                     draw_skirted, draw_skirted_binary, pad_layers,
                     skirted_height_bound, turn_ray)
from .pipeline import draw_tree_builtin, trace_cycle, transform_to_halin
from .straighten import StraighteningError, ymonotone_to_straightline
from .trees import (HalinGraph, RootedOrderedTree, SkirtedGraph, build_halin,
                    build_skirted, leaf_reduced_inner_skeleton, parse_edge_list,
                    parse_tree, reroot_at, serialize_edge_list, serialize_tree)
from .validate import (check_bound, check_planar, check_planar_brute,
                       check_plane, check_type, validate_drawing)
from .visibility import FlatVisibilityRepresentation, to_flat_visibility
from .width import (WidthReport, best_leaf_root, brute_pw, brute_rpw, chi_ext,
                    horton_strahler, spine_and_spinechild, width_report)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
