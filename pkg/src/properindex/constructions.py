"""Explicit k-proper colorings of stars, complete bipartite and multipartite graphs.

Every builder returns a :class:`Construction`: the graph, the coloring, the
number of colors it is claimed to need and the k for which it is claimed to
be k-proper. Nothing here is trusted; ``is_k_proper`` is the judge.

Throughout, u_1..u_s are vertices ``0..s-1`` and w_1..w_t are ``s..s+t-1``.
Colorings written over {0, 1} in the literature are shifted to {1, 2}.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Sequence

from .graph import (
    ColorCode,
    EdgeColoring,
    Graph,
    codes_from_coloring,
    coloring_from_codes,
    complete_bipartite,
    complete_multipartite,
    family_of,
    serialize,
    split_sides,
)


class NotCoveredError(ValueError):
    """The parameters fall outside every case the constructions handle."""


@dataclass(frozen=True)
class Construction:
    name: str
    graph: Graph
    coloring: EdgeColoring
    claimed_colors: int
    claimed_k: int

    def __post_init__(self):
        self.coloring.check(self.graph)
        if self.coloring.num_colors > self.claimed_colors:
            raise AssertionError(
                f"{self.name}: uses {self.coloring.num_colors} colors, claims {self.claimed_colors}"
            )
        if self.claimed_k < 2:
            raise ValueError("claimed_k must be at least 2")

    def to_json(self) -> str:
        return serialize(
            self.graph,
            self.coloring,
            name=self.name,
            claimed_colors=self.claimed_colors,
            claimed_k=self.claimed_k,
        )


def ceil_sqrt_half(t: int) -> int:
    """Smallest k with 2k^2 >= t, i.e. ceil(sqrt(t/2)) in exact arithmetic."""
    k = isqrt(t // 2)
    while 2 * k * k < t:
        k += 1
    return k


def _shift(code: Sequence[int]) -> ColorCode:
    return tuple(c + 1 for c in code)


def color_star(t: int) -> Construction:
    if t < 2:
        raise ValueError("a star needs t >= 2 leaves")
    g = complete_bipartite(1, t)
    return Construction("star-rainbow", g, EdgeColoring(tuple(range(1, t + 1))), t, 3)


def k2t_codes(t: int, k: int | None = None) -> tuple[list[ColorCode], int]:
    """Codes for K_{2,t} and the number of colors they claim.

    With ``k`` given the k-color grid is used regardless of t: w_{(i-1)k+j}
    gets (i, j) and the second round of k^2 vertices repeats the first.
    """
    if k is None:
        if t <= 4:
            return [(1, 2), (2, 1), (1, 1), (2, 2)][:t], 2
        k = 3 if t <= 18 else ceil_sqrt_half(t)
    if t > 2 * k * k:
        raise NotCoveredError(f"a {k}-color grid covers at most {2 * k * k} vertices")
    grid = [(i, j) for i in range(1, k + 1) for j in range(1, k + 1)]
    return [grid[r % (k * k)] for r in range(t)], k


def color_k2t(t: int, k: int | None = None) -> Construction:
    if t < 2:
        raise ValueError("K_{2,t} needs t >= 2")
    codes, colors = k2t_codes(t, k)
    name = "k2t-four-codes" if colors == 2 else "k2t-grid"
    return Construction(name, complete_bipartite(2, t), coloring_from_codes(2, t, codes), colors, 3)


BINARY_CODES = [tuple(map(int, f"{i:03b}")) for i in range(8)]
SIX_CODES = [(0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0), (1, 0, 1), (1, 1, 0)]
SEVEN_CODES = SIX_CODES + [(1, 1, 1)]


def color_kst_dominating(s: int, t: int, k: int) -> Construction:
    """Three colors for K_{s,t}, t >= s >= k, lifted from a connected k-dominating set.

    D = {u_1..u_k, w_1..w_k} induces K_{k,k}, which is 2-colored along a
    Hamiltonian path; every other edge gets color 1.
    """
    if not (t >= s >= k >= 2):
        raise NotCoveredError(f"needs t >= s >= k (got s={s}, t={t}, k={k})")
    g = complete_bipartite(s, t)
    dom = list(range(k)) + list(range(s, s + k))
    inner_graph, _ = g.induced(dom)
    path = hamiltonian_path_multipartite(inner_graph.part_sizes)
    inner = color_traceable(inner_graph, path, k=k)
    return color_dominating(g, dom, inner, k, name="kst-dominating")


def color_k3t(t: int) -> Construction:
    if t < 3:
        raise ValueError("K_{3,t} needs t >= 3")
    if t <= 8:
        codes = [_shift(BINARY_CODES[j]) for j in range(t)]
        name = "k3t-binary"
    elif t <= 12:
        codes = [_shift(SIX_CODES[j % 6]) for j in range(t)]
        name = "k3t-six-codes"
    else:
        return color_kst_dominating(3, t, 3)
    return Construction(name, complete_bipartite(3, t), coloring_from_codes(3, t, codes), 2, 3)


def alternating_covers(s: int, t: int, k: int) -> bool:
    if k == 3:
        return t >= s >= 4
    return k >= 4 and t >= s >= 2 * (k - 1)


def color_kst_alternating(s: int, t: int, k: int = 3) -> Construction:
    """Two colors on K_{s,t}: the cycle u_1 w_1 u_2 w_2 ... u_s w_s u_1 alternates.

    c(u_i w_i) = 1, c(u_i w_j) = 2 for the other j <= s, and every later
    w_r (r > s) gets c(w_r u_i) = (i mod 2) + 1.
    """
    if not alternating_covers(s, t, k):
        raise NotCoveredError(
            f"alternating coloring is not covered for s={s}, t={t}, k={k}"
        )
    codes = []
    for j in range(1, t + 1):
        if j <= s:
            codes.append(tuple(1 if i == j else 2 for i in range(1, s + 1)))
        else:
            codes.append(tuple(i % 2 + 1 for i in range(1, s + 1)))
    return Construction(
        "kst-alternating", complete_bipartite(s, t), coloring_from_codes(s, t, codes), 2, k
    )


def is_k_dominating(graph: Graph, dom: Sequence[int], k: int) -> bool:
    inside = set(dom)
    return all(
        sum(1 for w in graph.neighbors(v) if w in inside) >= k
        for v in range(graph.n)
        if v not in inside
    )


def color_dominating(
    graph: Graph, dom: Sequence[int], inner: Construction, k: int, name: str = "dominating-lift"
) -> Construction:
    """Lift a k-proper coloring of G[D] to G with one extra color.

    Inner colors 1..x move to 2..x+1; every edge not inside D gets color 1.
    """
    dom = sorted(set(dom))
    if graph.min_degree < k:
        raise ValueError(f"minimum degree {graph.min_degree} is below k={k}")
    if not is_k_dominating(graph, dom, k):
        raise ValueError(f"D is not {k}-dominating")
    try:
        sub, keep = graph.induced(dom)
    except ValueError:
        raise ValueError("G[D] is disconnected") from None
    if sub.edges != inner.graph.edges or sub.n != inner.graph.n:
        raise ValueError("inner construction is not a coloring of G[D]")
    colors = [1] * graph.m
    for (a, b), c in zip(sub.edges, inner.coloring.colors):
        colors[graph.edge_index[(keep[a], keep[b])]] = c + 1
    return Construction(name, graph, EdgeColoring(tuple(colors)), inner.claimed_colors + 1, k)


def hamiltonian_path_multipartite(parts: Sequence[int]) -> list[int]:
    """Visit every vertex of K_{n_1,...,n_r} with consecutive vertices in different parts.

    Greedy: step into the part with the most unvisited vertices other than
    the current one, lowest part index on ties, lowest vertex inside a part.
    Requires n_1 + ... + n_{r-1} >= n_r.
    """
    sizes = sorted(int(p) for p in parts)
    if len(sizes) < 2 or sizes[0] < 1:
        raise ValueError("need at least two non-empty parts")
    if sum(sizes[:-1]) < sizes[-1]:
        raise NotCoveredError(
            f"largest part {sizes[-1]} exceeds the rest {sum(sizes[:-1])}"
        )
    starts = [sum(sizes[:i]) for i in range(len(sizes))]
    taken = [0] * len(sizes)
    path: list[int] = []
    current = -1
    for _ in range(sum(sizes)):
        best = -1
        for i, size in enumerate(sizes):
            if i != current and taken[i] < size:
                if best < 0 or size - taken[i] > sizes[best] - taken[best]:
                    best = i
        if best < 0:
            raise AssertionError("greedy Hamiltonian path got stuck")
        path.append(starts[best] + taken[best])
        taken[best] += 1
        current = best
    g = complete_multipartite(sizes)
    if not _is_hamiltonian_path(g, path):
        raise AssertionError("greedy produced an invalid path")
    return path


def _is_hamiltonian_path(graph: Graph, path: Sequence[int]) -> bool:
    return sorted(path) == list(range(graph.n)) and all(
        graph.has_edge(a, b) for a, b in zip(path, path[1:])
    )


def color_traceable(graph: Graph, path: Sequence[int], k: int = 3) -> Construction:
    """Alternate 1, 2 along a Hamiltonian path; all other edges get color 1."""
    path = list(path)
    if not _is_hamiltonian_path(graph, path):
        raise ValueError("sequence is not a Hamiltonian path of the graph")
    if not 2 <= k <= graph.n:
        raise ValueError(f"k={k} is out of range for n={graph.n}")
    colors = [1] * graph.m
    for pos, (a, b) in enumerate(zip(path, path[1:])):
        colors[graph.edge_index[(min(a, b), max(a, b))]] = pos % 2 + 1
    claimed = 2 if graph.n >= 3 else 1
    return Construction("traceable", graph, EdgeColoring(tuple(colors)), claimed, k)


def _with_intra(graph: Graph, codes: list[ColorCode], name: str, claimed: int, k: int):
    """Reuse cross-edge codes on a multipartite graph, intra-U edges colored 1."""
    u_side, w_side = split_sides(graph)
    wset = set(w_side)
    extra = {e: 1 for e in graph.edges if e[0] not in wset and e[1] not in wset}
    coloring = coloring_from_codes(len(u_side), len(w_side), codes, extra, graph=graph)
    return Construction(name, graph, coloring, claimed, k)


def color_multipartite(parts: Sequence[int], k: int = 3) -> Construction:
    sizes = sorted(int(p) for p in parts)
    if len(sizes) < 3:
        raise ValueError("use the bipartite colorers for two parts")
    if k < 3:
        raise ValueError("k must be at least 3")
    g = complete_multipartite(sizes)
    s, t = sum(sizes[:-1]), sizes[-1]
    if s >= t:
        return color_traceable(g, hamiltonian_path_multipartite(sizes), k=k)
    head = tuple(sizes[:-1])
    if k == 3:
        if head == (1, 1):
            base = color_k2t(t)
        elif head == (1, 2):
            base = color_k3t(t)
        elif head == (1, 1, 1):
            if t <= 14:
                codes = [_shift(SEVEN_CODES[j % 7]) for j in range(t)]
                return _with_intra(g, codes, "multipartite-seven-codes", 2, k)
            base = color_k3t(t)
        else:
            base = color_kst_alternating(s, t, 3)
    elif s >= 2 * (k - 1):
        base = color_kst_alternating(s, t, k)
    else:
        raise NotCoveredError(
            f"px_{k} of K_{{{','.join(map(str, sizes))}}} is not determined by any known case"
        )
    codes = codes_from_coloring(base.graph, base.coloring)
    return _with_intra(g, codes, f"multipartite-via-{base.name}", base.claimed_colors, k)


def color_bipartite(s: int, t: int, k: int = 3) -> Construction:
    """Dispatch to the best available coloring of K_{s,t} for the given k."""
    s, t = sorted((s, t))
    if s < 1:
        raise ValueError("K_{s,t} needs s, t >= 1")
    if s == 1:
        return color_star(t)
    if k == 3:
        if s == 2:
            return color_k2t(t)
        if s == 3:
            return color_k3t(t)
        return color_kst_alternating(s, t, 3)
    if alternating_covers(s, t, k):
        return color_kst_alternating(s, t, k)
    if s == t:
        return color_traceable(complete_bipartite(s, t), hamiltonian_path_multipartite((s, t)), k)
    if s >= k:
        return color_kst_dominating(s, t, k)
    raise NotCoveredError(f"no construction for px_{k}(K_{{{s},{t}}})")


def construction_for(graph: Graph, k: int) -> Construction | None:
    """Best known construction when ``graph`` is a recognized family, else None."""
    fam = family_of(graph)
    try:
        if fam.kind == "star":
            return color_star(fam.params[0]) if fam.params[0] >= 2 else None
        if fam.kind == "bipartite":
            return color_bipartite(*fam.params, k=k)
        if fam.kind == "multipartite":
            return color_multipartite(fam.params, k=k)
    except (NotCoveredError, ValueError):
        return None
    return None


