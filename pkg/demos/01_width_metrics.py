"""
Width metrics of rooted trees
=============================

The Horton-Strahler number of a rooted tree (a leaf scores 1; an internal
vertex scores its children's maximum, plus one if that maximum ties)
equals the rooted pathwidth, and rooting a tree at its best leaf brackets
the ordinary pathwidth: pw <= rpw* <= 2 pw + 1.
"""

from halindraw import (best_leaf_root, brute_pw, brute_rpw, horton_strahler,
                       parse_tree, width_report)

# A small ordered tree in the nested-parentheses format: children are
# separated by commas, an empty slot is an anonymous leaf.
tree = parse_tree("((a,b),(c,(d,e),f),g)")

# Per-vertex Strahler numbers, bottom-up.
hs = horton_strahler(tree)
print("Horton-Strahler per vertex:", hs)
print("rooted pathwidth:", hs[tree.root])

# The tiny brute-force oracles agree (they enumerate all rooted paths /
# all paths, so keep them to at most ~15 vertices).
print("brute rpw:", brute_rpw(tree), " brute pw:", brute_pw(tree))

# Rerooting at the best leaf can only help, and the bracket is guaranteed.
leaf, rpw_star = best_leaf_root(tree)
print(f"best leaf root: vertex {leaf}, rpw* = {rpw_star}")

# Everything at once, as the CLI's `width` command prints it.
print(width_report(tree).as_dict(tree))
