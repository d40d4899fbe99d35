import os
from pathlib import Path

import networkx as nx
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from scorient.experiments import load_graph6
from scorient.graph import DirectedGraph, UndirectedGraph

DATA = Path(__file__).parent / "data"

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", max_examples=300, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# (criterion id, passed, summary) rows filled in by test_acceptance.py
ACCEPTANCE_ROWS: list[tuple[int, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_ROWS:
        return
    terminalreporter.section("acceptance criteria")
    for cid, ok, text in sorted(ACCEPTANCE_ROWS):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {cid:2d}: {text}")


@st.composite
def graphs(draw, min_n=0, max_n=8, max_edges=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=max_edges)) if pairs else []
    return UndirectedGraph.from_edges(n, chosen)


@st.composite
def digraphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return DirectedGraph(n, frozenset(chosen))


@st.composite
def oriented_graphs(draw, max_n=7, max_edges=None):
    """An undirected graph together with a random orientation of its edges."""
    g = draw(graphs(max_n=max_n, max_edges=max_edges))
    flips = draw(st.lists(st.booleans(), min_size=g.m, max_size=g.m))
    arcs = [(v, u) if f else (u, v) for (u, v), f in zip(g.edge_list(), flips)]
    return g, DirectedGraph(g.n, frozenset(arcs))


def to_nx(g: UndirectedGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def to_nx_di(d: DirectedGraph) -> nx.DiGraph:
    h = nx.DiGraph()
    h.add_nodes_from(range(d.n))
    h.add_edges_from(d.arcs)
    return h


def from_nx(h) -> UndirectedGraph:
    h = nx.convert_node_labels_to_integers(h)
    return UndirectedGraph.from_edges(h.number_of_nodes(), h.edges())


def atlas(max_n: int) -> list[UndirectedGraph]:
    """Every graph on at most ``max_n <= 7`` vertices, one per isomorphism class."""
    return [from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() <= max_n]


@pytest.fixture(scope="session")
def connected_le7():
    return load_graph6(DATA / "connected_le7.g6")


@pytest.fixture(scope="session")
def all_le8():
    return atlas(7) + load_graph6(DATA / "all_8.g6")
