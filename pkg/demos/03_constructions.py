"""
Explicit colorings
==================

Every construction claims a number of colors and a k. Here each one is
built and then handed to the verifier, which has the final word.
"""

from properindex import (
    color_k2t,
    color_k3t,
    color_kst_alternating,
    color_multipartite,
    color_star,
    is_k_proper,
)

built = [
    color_star(4),
    color_k2t(4),
    color_k2t(12),
    color_k2t(40),
    color_k3t(8),
    color_k3t(12),
    color_k3t(14),
    color_kst_alternating(4, 7, 3),
    color_kst_alternating(6, 8, 4),
    color_multipartite((1, 1, 5)),
    color_multipartite((1, 1, 1, 14)),
    color_multipartite((2, 2, 2)),
]

for con in built:
    report = is_k_proper(con.graph, con.coloring, con.claimed_k)
    print(
        f"{con.name:28s} n={con.graph.n:3d} k={con.claimed_k}"
        f" colors={con.coloring.num_colors} (claimed {con.claimed_colors})"
        f" verified={report.ok}"
    )
