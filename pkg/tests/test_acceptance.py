"""End-to-end acceptance checks; each test records one PASS/FAIL line."""

import random
from itertools import combinations
from math import comb

import networkx as nx

from properindex.constructions import (
    ceil_sqrt_half,
    color_k2t,
    color_k3t,
    color_kst_alternating,
    color_multipartite,
    k2t_codes,
)
from properindex.graph import (
    EdgeColoring,
    FamilySpec,
    coloring_from_codes,
    complete_bipartite,
    complete_multipartite,
    graph_from_edges,
)
from properindex.search import find_proper_s_tree, is_k_proper, is_proper_tree
from properindex.solver import (
    exact_px_k,
    exists_k_proper_coloring,
    pigeonhole_lower_bound_k2t,
    px3_formula,
)

from conftest import lookup
from oracles import brute_tree, connected, has_hamiltonian_path

K2T_TABLE = {t: 2 if t <= 4 else 3 if t <= 18 else ceil_sqrt_half(t) for t in range(2, 21)}


def test_k2t_upper_bounds(report_line):
    problems = []
    for t in range(2, 21):
        con = color_k2t(t)
        if con.claimed_colors != K2T_TABLE[t] or con.coloring.num_colors != K2T_TABLE[t]:
            problems.append(f"t={t} colors {con.coloring.num_colors}")
        if not is_k_proper(con.graph, con.coloring, 3).ok:
            problems.append(f"t={t} not 3-proper")
    assert report_line("criterion 1 (K_{2,t} colorings, t=2..20)", not problems, "; ".join(problems))


def test_k2t_lower_bounds(report_line):
    raw = exists_k_proper_coloring(complete_bipartite(2, 5), 3, 2, "raw")
    coded = exists_k_proper_coloring(complete_bipartite(2, 9), 3, 2, "code-multiset")
    exact = {t: exact_px_k(complete_bipartite(2, t), 3).value for t in range(2, 10)}
    ok = (
        not raw.found
        and raw.classes_checked <= 1024
        and pigeonhole_lower_bound_k2t(19, 3)
        and not coded.found
        and all(exact[t] == K2T_TABLE[t] for t in exact)
    )
    detail = f"K_{{2,5}} raw {raw.classes_checked} classes; K_{{2,9}} {coded.classes_checked} multisets; exact {exact}"
    assert report_line("criterion 2 (K_{2,t} lower bounds)", ok, detail)


def test_k3t(report_line):
    problems = []
    for t in range(3, 17):
        con = color_k3t(t)
        want = 2 if t <= 12 else 3
        if con.coloring.num_colors != want or not is_k_proper(con.graph, con.coloring, 3).ok:
            problems.append(f"t={t}")
    out = exists_k_proper_coloring(complete_bipartite(3, 13), 3, 2, "code-multiset")
    if out.found or out.classes_checked != 77520:
        problems.append(f"K_{{3,13}} refutation: found={out.found} classes={out.classes_checked}")
    detail = "; ".join(problems) or f"K_{{3,13}} exhausted {out.classes_checked} multisets"
    assert report_line("criterion 3 (K_{3,t})", not problems, detail)


def test_alternating(report_line):
    cases = [(4, 4, 3), (4, 7, 3), (5, 8, 3), (6, 6, 4), (6, 8, 4)]
    subsets = {}
    problems = []
    for s, t, k in cases:
        con = color_kst_alternating(s, t, k)
        report = is_k_proper(con.graph, con.coloring, k)
        subsets[(s, t, k)] = report.subsets_checked
        if not report.ok or con.coloring.num_colors != 2:
            problems.append(f"K_{{{s},{t}}} k={k}")
    if subsets[(6, 6, 4)] != 495 or subsets[(6, 8, 4)] != 1001:
        problems.append(f"subset counts {subsets}")
    assert report_line("criterion 4 (alternating colorings)", not problems, "; ".join(problems))


def test_multipartite(report_line):
    grid = [(1, 1, t) for t in range(1, 9)] + [(1, 2, t) for t in range(1, 9)]
    grid += [(1, 1, 1, t) for t in range(1, 9)] + [(2, 2, 2), (1, 2, 3), (2, 3, 4)]
    problems = []
    for parts in grid:
        value = px3_formula(FamilySpec("multipartite", parts))
        con = color_multipartite(parts, 3)
        if con.coloring.num_colors != value or not is_k_proper(con.graph, con.coloring, 3).ok:
            problems.append(str(parts))
    out = exists_k_proper_coloring(complete_multipartite((1, 1, 5)), 3, 2, "code-multiset")
    if out.found or out.classes_checked > 2 * comb(4 + 5 - 1, 5):
        problems.append(f"K_{{1,1,5}}: found={out.found} classes={out.classes_checked}")
    detail = "; ".join(problems) or f"{len(grid)} families; K_{{1,1,5}} exhausted {out.classes_checked} classes"
    assert report_line("criterion 5 (multipartite)", not problems, detail)


def test_small_graph_properties(report_line, atlas):
    small = [e for e in atlas if e.n <= 5]
    problems = []
    pairs = 0
    for entry in small:
        for k, r in entry.px.items():
            if r.value is None or r.value < 2:
                problems.append(f"px_{k} {entry.graph.edges} = {r.lo}..{r.hi}")
        if has_hamiltonian_path(entry.n, entry.graph.edges):
            if any(r.value != 2 for r in entry.px.values()):
                problems.append(f"traceable {entry.graph.edges}")
        edges = list(entry.nx.edges())
        for size in range(entry.n - 1, len(edges)):
            for keep in combinations(edges, size):
                if not connected(entry.n, keep):
                    continue
                h = nx.Graph(keep)
                h.add_nodes_from(range(entry.n))
                sub = lookup(atlas, h)
                pairs += 1
                for k, r in entry.px.items():
                    if r.value > sub.px[k].value:
                        problems.append(f"monotonicity {entry.graph.edges} vs {keep} k={k}")
    detail = "; ".join(problems[:5]) or f"{len(small)} graphs, {pairs} spanning subgraph pairs"
    assert report_line("criterion 6 (small-graph properties)", not problems, detail)


def test_search_oracle(report_line):
    rng = random.Random(20240611)
    mismatches = 0
    checks = 0
    for trial in range(200):
        n = rng.randint(2, 7)
        edges = {(rng.randrange(v), v) for v in range(1, n)}
        for a, b in combinations(range(n), 2):
            if rng.random() < 0.3:
                edges.add((a, b))
        g = graph_from_edges(n, edges)
        c = EdgeColoring(tuple(rng.randint(1, 3) for _ in range(g.m)))
        for _ in range(3):
            s = tuple(sorted(rng.sample(range(n), rng.randint(2, n))))
            w = find_proper_s_tree(g, c, s)
            expected = brute_tree(n, g.edges, c.colors, s)
            checks += 1
            if (w.edges if w else None) != expected or (w and not is_proper_tree(g, c, w.edges, s)):
                mismatches += 1
    detail = f"{checks} terminal sets over 200 colorings, {mismatches} mismatches"
    assert report_line("criterion 7 (search vs brute force)", mismatches == 0, detail)


def test_grid_probe(report_line):
    verdicts = []
    emitted = True
    for t in range(5, 9):
        codes, k = k2t_codes(t, 3)
        g = complete_bipartite(2, t)
        report = is_k_proper(g, coloring_from_codes(2, t, codes), 3)
        emitted &= report.ok or report.failing_set is not None
        verdicts.append(f"t={t} " + ("ok" if report.ok else f"fails at {report.failing_set}"))
    assert report_line("criterion 8 (3-color grid on K_{2,t}, t=5..8)", emitted, ", ".join(verdicts))
