import networkx as nx
import pytest

from properindex.graph import graph_from_edges
from properindex.solver import exact_px_k

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def report_line():
    """Record one PASS/FAIL line; all lines are echoed in the terminal summary."""

    def record(name, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else "")
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


class AtlasEntry:
    def __init__(self, nxg):
        self.nx = nxg
        self.n = nxg.number_of_nodes()
        self.graph = graph_from_edges(self.n, nxg.edges())
        self.px = {k: exact_px_k(self.graph, k) for k in range(3, self.n + 1)}
        self.hash = nx.weisfeiler_lehman_graph_hash(nxg)


@pytest.fixture(scope="session")
def atlas():
    """Every connected graph on 3..6 vertices with its exact px_k for k = 3..n."""
    return [
        AtlasEntry(g)
        for g in nx.graph_atlas_g()
        if 3 <= g.number_of_nodes() <= 6 and nx.is_connected(g)
    ]


def lookup(atlas, nxg):
    """Atlas entry isomorphic to ``nxg``."""
    h = nx.weisfeiler_lehman_graph_hash(nxg)
    for entry in atlas:
        if (
            entry.n == nxg.number_of_nodes()
            and entry.graph.m == nxg.number_of_edges()
            and entry.hash == h
            and nx.is_isomorphic(entry.nx, nxg)
        ):
            return entry
    raise LookupError("graph not in atlas")
