"""Complete search for proper S-trees and k-proper verification.

A tree is proper when no two of its edges sharing an endpoint have the same
color. The search grows subtrees from the smallest terminal, deciding each
frontier edge in turn (take it, or drop it for the rest of that branch), so
every subtree containing the root is visited exactly once. Iterative
deepening on the edge count returns a smallest tree; among those, the
lexicographically smallest sorted edge-index tuple is reported.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice
from math import comb
from typing import Iterable, Sequence

from .graph import EdgeColoring, Graph


@dataclass(frozen=True)
class TreeWitness:
    edges: tuple[int, ...]
    terminals: tuple[int, ...]

    def edge_pairs(self, graph: Graph) -> list[tuple[int, int]]:
        return [graph.edges[i] for i in self.edges]


@dataclass
class VerifyReport:
    ok: bool
    failing_set: tuple[int, ...] | None = None
    witnesses: dict[tuple[int, ...], TreeWitness] | None = None
    subsets_checked: int = 0

    def to_dict(self) -> dict:
        doc: dict = {"ok": self.ok}
        if self.failing_set is not None:
            doc["failing_set"] = list(self.failing_set)
        return doc


def is_proper_tree(
    graph: Graph, coloring: EdgeColoring, edges: Iterable[int], terminals: Iterable[int]
) -> bool:
    """True iff ``edges`` form a proper tree whose vertex set contains ``terminals``.

    Invalid edge indices give False rather than raising.
    """
    coloring.check(graph)
    edges = list(edges)
    terminals = set(terminals)
    if len(set(edges)) != len(edges):
        return False
    if any(not isinstance(e, int) or not (0 <= e < graph.m) for e in edges):
        return False
    if not edges:
        return len(terminals) <= 1
    verts: set[int] = set()
    seen_colors: dict[int, set[int]] = {}
    for e in edges:
        u, v = graph.edges[e]
        c = coloring.colors[e]
        for x in (u, v):
            bucket = seen_colors.setdefault(x, set())
            if c in bucket:
                return False
            bucket.add(c)
        verts.update((u, v))
    if len(verts) != len(edges) + 1 or not terminals <= verts:
        return False
    # |V| = |E| + 1 plus connectivity makes it a tree
    adj: dict[int, list[int]] = {x: [] for x in verts}
    for e in edges:
        u, v = graph.edges[e]
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(verts))
    reached = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in reached:
                reached.add(y)
                stack.append(y)
    return len(reached) == len(verts)


class ProperTreeSearch:
    """Proper S-tree search bound to one colored graph.

    Results of :meth:`exists` are cached per terminal set; the cache never
    changes an answer, it only skips repeated work.
    """

    def __init__(self, graph: Graph, coloring: EdgeColoring):
        coloring.check(graph)
        self.graph = graph
        self.coloring = coloring
        colors = coloring.colors
        self._inc = [
            tuple((w, e, 1 << colors[e]) for w, e in graph.incidence[v])
            for v in range(graph.n)
        ]
        self._cache: dict[tuple[int, ...], bool] = {}
        self.nodes = 0

    def _grow(self, terminals: Sequence[int], budget: int, collect: bool):
        """Enumerate proper subtrees rooted at the first terminal within ``budget`` edges.

        Returns the terminal-covering trees met and whether the budget cut
        off any branch that could still have grown.
        """
        inc = self._inc
        n = self.graph.n
        root = terminals[0]
        in_tree = [False] * n
        in_tree[root] = True
        is_term = [False] * n
        for x in terminals:
            is_term[x] = True
        used = [0] * n
        tdeg = [0] * n
        banned = [False] * self.graph.m
        chosen: list[int] = []
        results: list[tuple[int, ...]] = []
        state = {"missing": len(terminals) - 1, "cutoff": False}

        def usable(x: int) -> bool:
            # some edge at x could still join the tree (x outside) or grow it (x inside)
            mine = used[x]
            for y, e, bit in inc[x]:
                if banned[e] or bit & mine:
                    continue
                if in_tree[x] != in_tree[y] and not (in_tree[y] and used[y] & bit):
                    return True
                if not in_tree[x] and not in_tree[y]:
                    return True
            return False

        def stuck_after_take(u: int, v: int) -> bool:
            # only vertices next to u or v can lose their last usable edge
            if not is_term[v] and not usable(v):
                return True
            for y, _, _ in inc[v]:
                if in_tree[y]:
                    if y != u and tdeg[y] == 1 and not is_term[y] and not usable(y):
                        return True
                elif is_term[y] and not usable(y):
                    return True
            for y, _, _ in inc[u]:
                if not in_tree[y] and is_term[y] and not usable(y):
                    return True
            return False

        def stuck_after_ban(u: int, v: int) -> bool:
            if is_term[v] and not usable(v):
                return True
            return tdeg[u] == 1 and not is_term[u] and not usable(u)

        def live(cands) -> bool:
            return any(not in_tree[v] and not used[u] & bit for u, v, _, bit in cands)

        def rec(cands) -> bool:
            self.nodes += 1
            if state["missing"] == 0:
                results.append(tuple(sorted(chosen)))
                return not collect
            if budget - len(chosen) < state["missing"]:
                if not state["cutoff"] and live(cands):
                    state["cutoff"] = True
                return False
            stop = False
            marked = []
            for i in range(len(cands)):
                u, v, e, bit = cands[i]
                if in_tree[v] or used[u] & bit:
                    continue
                in_tree[v] = True
                used[u] |= bit
                used[v] = bit
                tdeg[u] += 1
                tdeg[v] = 1
                chosen.append(e)
                if is_term[v]:
                    state["missing"] -= 1
                if state["missing"] == 0 or not stuck_after_take(u, v):
                    new = cands[i + 1 :]
                    for w, e2, bit2 in inc[v]:
                        if not in_tree[w] and bit2 != bit:
                            new.append((v, w, e2, bit2))
                    stop = rec(new)
                if is_term[v]:
                    state["missing"] += 1
                chosen.pop()
                tdeg[v] = 0
                tdeg[u] -= 1
                used[v] = 0
                used[u] ^= bit
                in_tree[v] = False
                if stop:
                    break
                # the remaining siblings all leave e out
                banned[e] = True
                marked.append(e)
                if stuck_after_ban(u, v):
                    break
            for e in marked:
                banned[e] = False
            return stop

        if any(not usable(x) for x in terminals[1:]):
            return results, False
        start = [(root, w, e, bit) for w, e, bit in inc[root]]
        rec(start)
        return results, state["cutoff"]

    def find(
        self, terminals: Iterable[int], max_edges: int | None = None, smallest: bool = True
    ) -> TreeWitness | None:
        """Smallest proper tree containing ``terminals`` with at most ``max_edges`` edges.

        With ``max_edges`` left at its default of n - 1 the search is
        exhaustive, so ``None`` proves no proper S-tree exists. Ties between
        smallest trees go to the lexicographically smallest edge tuple. With
        ``smallest=False`` a single full-budget pass returns the first proper
        S-tree it meets, of whatever size.
        """
        s = tuple(sorted(set(terminals)))
        if len(s) < 2:
            raise ValueError("need at least two terminals")
        if any(not (0 <= x < self.graph.n) for x in s):
            raise ValueError(f"terminals {s} are not vertices of the graph")
        cap = self.graph.n - 1 if max_edges is None else min(max_edges, self.graph.n - 1)
        if not smallest:
            results, _ = self._grow(s, cap, collect=False)
            return TreeWitness(results[0], s) if results else None
        for depth in range(len(s) - 1, cap + 1):
            results, cutoff = self._grow(s, depth, collect=True)
            if results:
                return TreeWitness(min(results), s)
            if not cutoff:
                # nothing was cut by the budget: larger budgets see the same trees
                break
        return None

    def exists(self, terminals: Iterable[int]) -> bool:
        s = tuple(sorted(set(terminals)))
        hit = self._cache.get(s)
        if hit is None:
            hit = self.find(s, smallest=False) is not None
            self._cache[s] = hit
        return hit

    def first_failure(self, subsets: Iterable[Sequence[int]]) -> tuple[int, ...] | None:
        for s in subsets:
            if not self.exists(s):
                return tuple(sorted(s))
        return None


def find_proper_s_tree(
    graph: Graph,
    coloring: EdgeColoring,
    terminals: Iterable[int],
    max_edges: int | None = None,
) -> TreeWitness | None:
    return ProperTreeSearch(graph, coloring).find(terminals, max_edges)


def _check_range(graph: Graph, coloring: EdgeColoring, k: int, start: int, stop: int, keep: bool):
    search = ProperTreeSearch(graph, coloring)
    witnesses = {} if keep else None
    checked = 0
    for s in islice(combinations(range(graph.n), k), start, stop):
        checked += 1
        if keep:
            w = search.find(s)
            if w is None:
                return s, witnesses, checked
            witnesses[s] = w
        elif not search.exists(s):
            return s, None, checked
    return None, witnesses, checked


def is_k_proper(
    graph: Graph,
    coloring: EdgeColoring,
    k: int,
    keep_witnesses: bool = False,
    jobs: int = 1,
) -> VerifyReport:
    """Check every k-subset of vertices for a proper S-tree.

    Subsets are visited in lexicographic order and the first failing one is
    reported. ``jobs > 1`` spreads contiguous blocks of subsets over worker
    processes; the merged report is identical to a serial run.
    """
    coloring.check(graph)
    if not (2 <= k <= graph.n):
        raise ValueError(f"k must satisfy 2 <= k <= n = {graph.n}, got {k}")
    total = comb(graph.n, k)
    if jobs <= 1 or total < 2 * jobs:
        fail, witnesses, checked = _check_range(graph, coloring, k, 0, total, keep_witnesses)
        return VerifyReport(fail is None, fail, witnesses, checked)

    bounds = [total * i // jobs for i in range(jobs + 1)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [
            pool.submit(_check_range, graph, coloring, k, bounds[i], bounds[i + 1], keep_witnesses)
            for i in range(jobs)
        ]
        parts = [f.result() for f in futures]
    witnesses = {} if keep_witnesses else None
    checked = 0
    for fail, wit, count in parts:
        checked += count
        if wit:
            witnesses.update(wit)
        if fail is not None:
            # blocks are in lexicographic order, so the first failing block wins
            return VerifyReport(False, fail, witnesses, checked)
    return VerifyReport(True, None, witnesses, checked)
