"""
Searching for proper trees
==========================

A tree is proper when adjacent edges get different colors. The search
returns a smallest proper tree through a terminal set, or None when none
exists; is_k_proper runs it over every k-subset.
"""

from itertools import product

from properindex import (
    EdgeColoring,
    color_k2t,
    complete_bipartite,
    find_proper_s_tree,
    is_k_proper,
)

# the 3-color grid on K_{2,9}: w_1, w_2, w_3 have codes (1,1), (1,2), (1,3),
# so the three edges at u_2 are all different and form a star
con = color_k2t(9, 3)
g = con.graph
w = find_proper_s_tree(g, con.coloring, (2, 3, 4))
print("tree for {w1, w2, w3}:", w.edge_pairs(g))

# with a single color no tree on three or more vertices is proper
mono = EdgeColoring((1,) * 10)
print("monochromatic K_{2,5}:", find_proper_s_tree(complete_bipartite(2, 5), mono, (2, 3, 4)))

# every 3-subset of K_{2,9} has a proper tree under the grid coloring
report = is_k_proper(g, con.coloring, 3)
print("grid coloring 3-proper:", report.ok, "after", report.subsets_checked, "subsets")

# no 2-coloring of K_{2,5} is 3-proper; check all 1024 of them directly
k25 = complete_bipartite(2, 5)
bad = sum(not is_k_proper(k25, EdgeColoring(cs), 3).ok for cs in product((1, 2), repeat=10))
print("2-colorings of K_{2,5} that fail:", bad, "of 1024")
