"""
Graphs, colorings and color codes
=================================

Build a few complete bipartite and multipartite graphs, color K_{2,4} from
four color codes, and round-trip everything through the JSON document format.
"""

from properindex import (
    codes_from_coloring,
    coloring_from_codes,
    complete_bipartite,
    complete_multipartite,
    deserialize,
    serialize,
)

# K_{s,t} puts U = 0..s-1 first and W = s..s+t-1 after it; edges are (u, v)
# pairs with u < v in lexicographic order
g = complete_bipartite(2, 4)
print("K_{2,4}:", g.n, "vertices,", g.m, "edges")
print("edges:", g.edges)

# complete multipartite graphs keep their parts sorted by size
h = complete_multipartite((1, 2, 3))
print("K_{1,2,3} parts:", h.parts, "edges:", h.m)

# a color code lists the colors of one W-vertex's edges to u_1, ..., u_s
codes = [(1, 2), (2, 1), (1, 1), (2, 2)]
c = coloring_from_codes(2, 4, codes)
print("induced colors:", c.colors)
print("codes read back:", codes_from_coloring(g, c))

# one JSON object carries the graph and, optionally, its colors
doc = serialize(g, c)
print(doc)
assert deserialize(doc) == (g, c)
