"""Graph families, edge colorings, color codes and their JSON documents.

Vertices are the integers ``0..n-1``. Edges are stored as pairs ``(u, v)``
with ``u < v`` in lexicographic order; every color array is aligned to that
order. Colors are positive integers starting at 1.

For the complete bipartite and multipartite families the parts are numbered
part by part with the smaller parts first, so the largest part (called W,
the side that carries color codes) always occupies the highest vertex ids.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping, Sequence

ColorCode = tuple[int, ...]
Edge = tuple[int, int]

FAMILY_KINDS = ("star", "bipartite", "multipartite", "path", "cycle", "custom")


class FormatError(ValueError):
    """Raised for malformed or inconsistent graph/coloring documents."""


def _canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple connected graph with an optional vertex partition.

    ``parts`` holding a single list means the graph carries no partition
    semantics (paths, cycles, custom graphs).
    """

    n: int
    parts: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a graph needs at least one vertex")
        parts = tuple(tuple(p) for p in self.parts)
        edges = tuple(tuple(e) for e in self.edges)
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "edges", edges)

        seen = sorted(v for p in parts for v in p)
        if seen != list(range(self.n)) or any(len(p) == 0 for p in parts):
            raise ValueError("parts must be non-empty and partition 0..n-1")
        for u, v in edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {(u, v)} is not a canonical pair of vertices")
        if list(edges) != sorted(set(edges)):
            raise ValueError("edges must be unique and sorted lexicographically")
        if not self._connected():
            raise ValueError("graph is not connected")

    def _connected(self) -> bool:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == self.n

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        return {e: i for i, e in enumerate(self.edges)}

    @cached_property
    def incidence(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the ``(neighbor, edge index)`` pairs sorted by neighbor."""
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append((v, i))
            inc[v].append((u, i))
        return tuple(tuple(sorted(x)) for x in inc)

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    @property
    def min_degree(self) -> int:
        return min(len(x) for x in self.incidence)

    @property
    def max_degree(self) -> int:
        return max(len(x) for x in self.incidence)

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.incidence[v]]

    def has_edge(self, u: int, v: int) -> bool:
        return _canon(u, v) in self.edge_index

    @cached_property
    def part_of(self) -> tuple[int, ...]:
        owner = [0] * self.n
        for i, p in enumerate(self.parts):
            for v in p:
                owner[v] = i
        return tuple(owner)

    @property
    def part_sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    @cached_property
    def is_complete_multipartite(self) -> bool:
        """True when there are >= 2 parts and the edges are exactly the cross pairs."""
        if len(self.parts) < 2:
            return False
        owner = self.part_of
        cross = sum(1 for u, v in combinations(range(self.n), 2) if owner[u] != owner[v])
        return cross == self.m and all(owner[u] != owner[v] for u, v in self.edges)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices``, relabeled in sorted order.

        Returns the subgraph and the list mapping new ids to original ids.
        Parts are inherited (empty intersections dropped). Raises ValueError
        when the induced subgraph is disconnected.
        """
        keep = sorted(set(vertices))
        new_id = {v: i for i, v in enumerate(keep)}
        edges = sorted(
            (new_id[u], new_id[v]) for u, v in self.edges if u in new_id and v in new_id
        )
        parts = [tuple(new_id[v] for v in p if v in new_id) for p in self.parts]
        parts = [p for p in parts if p]
        return Graph(len(keep), tuple(parts), tuple(edges)), keep


@dataclass(frozen=True)
class EdgeColoring:
    """Colors aligned with a graph's canonical edge order."""

    colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(self.colors)
        if any(not isinstance(c, int) or isinstance(c, bool) or c < 1 for c in colors):
            raise ValueError("colors must be positive integers")
        object.__setattr__(self, "colors", colors)

    def __len__(self) -> int:
        return len(self.colors)

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def check(self, graph: Graph) -> None:
        if len(self.colors) != graph.m:
            raise ValueError(
                f"coloring has {len(self.colors)} entries but the graph has {graph.m} edges"
            )

    def color_of(self, graph: Graph, u: int, v: int) -> int:
        return self.colors[graph.edge_index[_canon(u, v)]]


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if self.kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        params = tuple(int(p) for p in self.params)
        if self.kind == "custom":
            object.__setattr__(self, "params", params)
            return
        if any(p < 1 for p in params):
            raise ValueError("family parameters must be positive")
        if self.kind == "star":
            if len(params) == 2 and params[0] == 1:
                params = params[1:]
            if len(params) != 1:
                raise ValueError("star takes a single parameter t")
        elif self.kind == "bipartite":
            if len(params) != 2:
                raise ValueError("bipartite takes (s, t)")
            params = tuple(sorted(params))
        elif self.kind == "multipartite":
            if len(params) < 2:
                raise ValueError("multipartite needs at least two parts")
            params = tuple(sorted(params))
        elif len(params) != 1:
            raise ValueError(f"{self.kind} takes a single parameter n")
        object.__setattr__(self, "params", params)

    def build(self) -> Graph:
        if self.kind == "star":
            return complete_bipartite(1, self.params[0])
        if self.kind == "bipartite":
            return complete_bipartite(*self.params)
        if self.kind == "multipartite":
            return complete_multipartite(self.params)
        if self.kind == "path":
            return path_graph(self.params[0])
        if self.kind == "cycle":
            return cycle_graph(self.params[0])
        raise ValueError("custom families cannot be built from parameters")

    def __str__(self) -> str:
        if self.kind == "star":
            return f"K_{{1,{self.params[0]}}}"
        if self.kind in ("bipartite", "multipartite"):
            return "K_{" + ",".join(map(str, self.params)) + "}"
        if self.kind == "path":
            return f"P_{self.params[0]}"
        if self.kind == "cycle":
            return f"C_{self.params[0]}"
        return "custom"


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t} with U = 0..s-1 and W = s..s+t-1."""
    if s < 1 or t < 1:
        raise ValueError(f"K_{{s,t}} needs s, t >= 1 (got s={s}, t={t})")
    u_side = tuple(range(s))
    w_side = tuple(range(s, s + t))
    edges = tuple((u, w) for u in u_side for w in w_side)
    return Graph(s + t, (u_side, w_side), edges)


def complete_multipartite(parts: Sequence[int]) -> Graph:
    sizes = sorted(int(p) for p in parts)
    if len(sizes) < 2:
        raise ValueError("a complete multipartite graph needs at least two parts")
    if sizes[0] < 1:
        raise ValueError("part sizes must be positive")
    groups = []
    start = 0
    for size in sizes:
        groups.append(tuple(range(start, start + size)))
        start += size
    owner = [i for i, g in enumerate(groups) for _ in g]
    edges = tuple(
        (u, v) for u, v in combinations(range(start), 2) if owner[u] != owner[v]
    )
    return Graph(start, tuple(groups), edges)


def complete_graph(n: int) -> Graph:
    return complete_multipartite([1] * n)


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return Graph(n, (tuple(range(n)),), tuple((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    edges = sorted([(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])
    return Graph(n, (tuple(range(n)),), tuple(edges))


def graph_from_edges(n: int, edges: Iterable[Sequence[int]], parts=None) -> Graph:
    """Build a graph from arbitrary (unordered, unsorted) edge pairs."""
    canon = sorted({_canon(int(u), int(v)) for u, v in edges})
    if any(u == v for u, v in canon):
        raise ValueError("loops are not allowed")
    if parts is None:
        parts = (tuple(range(n)),)
    return Graph(n, tuple(tuple(p) for p in parts), tuple(canon))


def family_of(graph: Graph) -> FamilySpec:
    """Recognize the complete bipartite/multipartite families; otherwise custom."""
    if graph.is_complete_multipartite:
        sizes = graph.part_sizes
        if list(sizes) != sorted(sizes):
            return FamilySpec("custom")
        if len(sizes) == 2:
            if sizes[0] == 1:
                return FamilySpec("star", (sizes[1],))
            return FamilySpec("bipartite", sizes)
        return FamilySpec("multipartite", sizes)
    return FamilySpec("custom")


# ---------------------------------------------------------------- color codes


def split_sides(graph: Graph) -> tuple[list[int], list[int]]:
    """Return (U, W) where W is the last part and is joined to every vertex of U.

    This is the shape shared by K_{s,t} and by complete multipartite graphs,
    whose cross edges into the largest part are described by color codes.
    """
    if len(graph.parts) < 2:
        raise ValueError("color codes need a graph with at least two parts")
    w_side = list(graph.parts[-1])
    u_side = sorted(v for p in graph.parts[:-1] for v in p)
    wset = set(w_side)
    for w in w_side:
        nbrs = graph.neighbors(w)
        if sorted(nbrs) != u_side or wset.intersection(nbrs):
            raise ValueError("the last part is not completely joined to the others")
    return u_side, w_side


def coloring_from_codes(
    s: int,
    t: int,
    codes: Sequence[Sequence[int]],
    extra_edge_colors: Mapping[Edge, int] | None = None,
    graph: Graph | None = None,
) -> EdgeColoring:
    """Induce an edge coloring from one color code per W-vertex.

    Edge ``(u_i, w_j)`` gets ``codes[j][i]``. Edges not joining U to W (the
    intra-U edges of a multipartite graph) must be listed in
    ``extra_edge_colors``; ``graph`` defaults to K_{s,t}.
    """
    if graph is None:
        graph = complete_bipartite(s, t)
    u_side, w_side = split_sides(graph)
    if len(u_side) != s or len(w_side) != t:
        raise ValueError(f"graph sides are {len(u_side)}, {len(w_side)}, expected {s}, {t}")
    if len(codes) != t:
        raise ValueError(f"expected {t} codes, got {len(codes)}")
    colors: list[int | None] = [None] * graph.m
    index = graph.edge_index
    for j, code in enumerate(codes):
        if len(code) != s:
            raise ValueError(f"code {tuple(code)} does not have length {s}")
        w = w_side[j]
        for i, c in enumerate(code):
            colors[index[_canon(u_side[i], w)]] = int(c)
    extra = {_canon(*e): c for e, c in (extra_edge_colors or {}).items()}
    for e, c in extra.items():
        i = index.get(e)
        if i is None or colors[i] is not None:
            raise ValueError(f"{e} is not an intra-U edge of the graph")
        colors[i] = int(c)
    missing = [graph.edges[i] for i, c in enumerate(colors) if c is None]
    if missing:
        raise ValueError(f"no color given for edges {missing}")
    return EdgeColoring(tuple(colors))


def codes_from_coloring(graph: Graph, coloring: EdgeColoring) -> list[ColorCode]:
    coloring.check(graph)
    u_side, w_side = split_sides(graph)
    index = graph.edge_index
    return [
        tuple(coloring.colors[index[_canon(u, w)]] for u in u_side) for w in w_side
    ]


# ---------------------------------------------------------------- documents


def graph_to_dict(graph: Graph) -> dict:
    return {
        "n": graph.n,
        "parts": [list(p) for p in graph.parts],
        "edges": [list(e) for e in graph.edges],
    }


def graph_from_dict(doc: Mapping) -> Graph:
    try:
        n = doc["n"]
        parts = doc.get("parts") or [list(range(n))]
        raw_edges = doc["edges"]
        if not isinstance(n, int) or not isinstance(raw_edges, list):
            raise TypeError
        edges = []
        for e in raw_edges:
            if not (isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)):
                raise TypeError
            edges.append((e[0], e[1]))
        if edges != sorted(set(edges)) or any(u >= v for u, v in edges):
            raise FormatError("edges are not in canonical order")
        return Graph(n, tuple(tuple(p) for p in parts), tuple(edges))
    except FormatError:
        raise
    except (KeyError, TypeError) as exc:
        raise FormatError(f"malformed graph document: {exc!r}") from None
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def coloring_from_dict(doc: Mapping, graph: Graph) -> EdgeColoring:
    colors = doc.get("colors")
    if not isinstance(colors, list):
        raise FormatError("coloring document needs a 'colors' array")
    if len(colors) != graph.m:
        raise FormatError(f"'colors' has {len(colors)} entries, graph has {graph.m} edges")
    try:
        return EdgeColoring(tuple(colors))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def serialize(graph: Graph, coloring: EdgeColoring | None = None, **extra) -> str:
    """One JSON document: graph fields, then ``colors``, then any extra fields."""
    doc = graph_to_dict(graph)
    if coloring is not None:
        coloring.check(graph)
        doc["colors"] = list(coloring.colors)
    doc.update(extra)
    return json.dumps(doc)


def deserialize(text: str) -> tuple[Graph, EdgeColoring | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    graph = graph_from_dict(doc)
    coloring = coloring_from_dict(doc, graph) if "colors" in doc else None
    return graph, coloring
