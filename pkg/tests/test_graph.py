import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from properindex.graph import (
    EdgeColoring,
    FamilySpec,
    FormatError,
    Graph,
    codes_from_coloring,
    coloring_from_codes,
    complete_bipartite,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    deserialize,
    family_of,
    graph_from_edges,
    path_graph,
    serialize,
)
from properindex.constructions import color_kst_alternating


def test_star_edges():
    g = complete_bipartite(1, 3)
    assert g.edges == ((0, 1), (0, 2), (0, 3))


def test_k22_is_four_cycle():
    g = complete_bipartite(2, 2)
    assert g.edges == ((0, 2), (0, 3), (1, 2), (1, 3))
    assert all(g.degree(v) == 2 for v in range(4))


def test_k3_13_counts():
    g = complete_bipartite(3, 13)
    assert g.m == 39
    assert g.min_degree == 3


@pytest.mark.parametrize("s,t", [(0, 3), (3, 0), (-1, 2)])
def test_bipartite_rejects_empty_side(s, t):
    with pytest.raises(ValueError):
        complete_bipartite(s, t)


@pytest.mark.parametrize("parts,n,m", [((1, 1, 1), 3, 3), ((1, 1, 5), 7, 11), ((1, 2, 3), 6, 11)])
def test_multipartite_counts(parts, n, m):
    g = complete_multipartite(parts)
    assert (g.n, g.m) == (n, m)


def test_multipartite_sorts_parts():
    g = complete_multipartite((3, 1, 2))
    assert g.part_sizes == (1, 2, 3)


@pytest.mark.parametrize("parts", [(), (2, 0, 3), (4,)])
def test_multipartite_rejects_bad_parts(parts):
    with pytest.raises(ValueError):
        complete_multipartite(parts)


@given(st.integers(1, 8), st.integers(1, 8))
def test_bipartite_invariants(s, t):
    g = complete_bipartite(s, t)
    assert g.m == s * t
    assert g.min_degree == min(s, t)
    assert list(g.edges) == sorted(g.edges)
    assert g.is_complete_multipartite


@given(st.lists(st.integers(1, 4), min_size=2, max_size=4))
def test_multipartite_edges_are_cross_pairs(parts):
    g = complete_multipartite(parts)
    n = sum(parts)
    total = n * (n - 1) // 2 - sum(p * (p - 1) // 2 for p in parts)
    assert g.m == total
    assert g.min_degree == n - max(parts)
    owner = g.part_of
    assert all(owner[u] != owner[v] for u, v in g.edges)


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(4, ((0, 1, 2, 3),), ((0, 1), (2, 3)))  # disconnected
    with pytest.raises(ValueError):
        Graph(3, ((0, 1, 2),), ((1, 0), (1, 2)))  # not canonical
    with pytest.raises(ValueError):
        Graph(3, ((0, 1, 2),), ((0, 1), (0, 1), (1, 2)))
    with pytest.raises(ValueError):
        graph_from_edges(2, [(0, 0), (0, 1)])


def test_graph_from_edges_canonicalizes():
    g = graph_from_edges(3, [(2, 1), (1, 0)])
    assert g.edges == ((0, 1), (1, 2))
    assert g == path_graph(3)


def test_small_families():
    assert cycle_graph(4).edges == ((0, 1), (0, 3), (1, 2), (2, 3))
    assert complete_graph(4).m == 6
    assert family_of(complete_bipartite(2, 5)) == FamilySpec("bipartite", (2, 5))
    assert family_of(complete_bipartite(1, 4)) == FamilySpec("star", (4,))
    assert family_of(complete_multipartite((1, 1, 5))) == FamilySpec("multipartite", (1, 1, 5))
    assert family_of(path_graph(4)).kind == "custom"
    assert str(FamilySpec("bipartite", (5, 2))) == "K_{2,5}"


def test_family_spec_rejects_nonsense():
    with pytest.raises(ValueError):
        FamilySpec("torus", (3,))
    with pytest.raises(ValueError):
        FamilySpec("bipartite", (2,))
    with pytest.raises(ValueError):
        FamilySpec("bipartite", (0, 3))


def test_edge_coloring_checks():
    c = EdgeColoring((1, 2, 2))
    assert c.num_colors == 2
    with pytest.raises(ValueError):
        EdgeColoring((1, 0))
    with pytest.raises(ValueError):
        c.check(complete_bipartite(2, 2))


# ---------------------------------------------------------------- codes

CLAIM_CODES = [(1, 2), (2, 1), (1, 1), (2, 2)]


def test_codes_induce_edge_colors():
    g = complete_bipartite(2, 4)
    c = coloring_from_codes(2, 4, CLAIM_CODES)
    # edge (u_i, w_j) carries codes[j][i]
    for j, code in enumerate(CLAIM_CODES):
        for i in range(2):
            assert c.color_of(g, i, 2 + j) == code[i]
    assert codes_from_coloring(g, c) == CLAIM_CODES


def test_single_code():
    assert coloring_from_codes(2, 1, [(1, 1)]).colors == (1, 1)


def test_all_ones_codes():
    c = coloring_from_codes(3, 2, [(1, 1, 1), (1, 1, 1)])
    assert c.colors == (1,) * 6
    assert c.num_colors == 1


def test_all_ones_k23_codes():
    g = complete_bipartite(2, 3)
    assert codes_from_coloring(g, EdgeColoring((1,) * 6)) == [(1, 1)] * 3


def test_alternating_k44_first_code():
    con = color_kst_alternating(4, 4, 3)
    assert codes_from_coloring(con.graph, con.coloring)[0] == (1, 2, 2, 2)


def test_code_errors():
    with pytest.raises(ValueError):
        coloring_from_codes(2, 2, [(1, 1), (1, 1, 1)])
    with pytest.raises(ValueError):
        coloring_from_codes(2, 3, [(1, 1), (1, 2)])
    # K_{1,1,3}: the intra-U edge needs an explicit color
    g = complete_multipartite((1, 1, 3))
    with pytest.raises(ValueError):
        coloring_from_codes(2, 3, [(1, 1)] * 3, graph=g)
    c = coloring_from_codes(2, 3, [(1, 1)] * 3, {(0, 1): 2}, graph=g)
    assert c.color_of(g, 0, 1) == 2
    with pytest.raises(ValueError):
        codes_from_coloring(path_graph(4), EdgeColoring((1, 1, 1)))


@settings(max_examples=60)
@given(st.data())
def test_codes_round_trip(data):
    s = data.draw(st.integers(1, 8))
    t = data.draw(st.integers(1, 8))
    codes = data.draw(
        st.lists(st.tuples(*[st.integers(1, 4)] * s), min_size=t, max_size=t)
    )
    g = complete_bipartite(s, t)
    c = coloring_from_codes(s, t, codes)
    assert codes_from_coloring(g, c) == codes


# ---------------------------------------------------------------- documents


def test_serialize_k22():
    doc = json.loads(serialize(complete_bipartite(2, 2)))
    assert doc["edges"] == [[0, 2], [0, 3], [1, 2], [1, 3]]
    assert doc["n"] == 4


@st.composite
def colored_graphs(draw):
    n = draw(st.integers(2, 7))
    # a random spanning tree plus extra edges keeps the graph connected
    edges = {(draw(st.integers(0, v - 1)), v) for v in range(1, n)}
    extra = draw(st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1))))
    edges |= {(min(a, b), max(a, b)) for a, b in extra if a != b}
    g = graph_from_edges(n, edges)
    colors = draw(st.lists(st.integers(1, 5), min_size=g.m, max_size=g.m))
    return g, EdgeColoring(tuple(colors))


@given(colored_graphs())
def test_document_round_trip(gc):
    g, c = gc
    assert deserialize(serialize(g, c)) == (g, c)
    assert deserialize(serialize(g)) == (g, None)


def test_round_trip_keeps_parts():
    g = complete_multipartite((1, 2, 3))
    assert deserialize(serialize(g))[0].parts == g.parts


def test_document_errors():
    text = serialize(complete_bipartite(2, 2))
    doc = json.loads(text)
    with pytest.raises(FormatError):
        deserialize(json.dumps(dict(doc, colors=[1, 2, 1])))
    with pytest.raises(FormatError):
        deserialize(json.dumps(dict(doc, edges=[[0, 3], [0, 2], [1, 2], [1, 3]])))
    with pytest.raises(FormatError):
        deserialize(json.dumps(dict(doc, edges=[[2, 0], [0, 3], [1, 2], [1, 3]])))
    with pytest.raises(FormatError):
        deserialize("{not json")
    with pytest.raises(FormatError):
        deserialize("[1, 2]")
    with pytest.raises(FormatError):
        deserialize(json.dumps({"edges": []}))
    with pytest.raises(FormatError):
        deserialize(json.dumps(dict(doc, colors=[1, 0, 1, 1])))
