import itertools

import pytest
from hypothesis import given

from conftest import atlas, graphs
from scorient import named
from scorient.check import check_singly_connected, is_singly_connected
from scorient.core import biconnected_blocks, contract
from scorient.errors import InconsistentTranscript, TooLarge
from scorient.experiments import RandomGraphConfig, random_graphs
from scorient.graph import DirectedGraph, Orientation, UndirectedGraph
from scorient.patterns import find_triangle
from scorient.solve import (count_sc_orientations, decide_sc_orientable, iter_sc_orientations,
                            lift_orientation, naive_sc_orientable, preprocess)


def brute_count(g: UndirectedGraph) -> int:
    """Plain 2^m scan, kept independent of the pruned enumerator."""
    es = g.edge_list()
    total = 0
    for flips in itertools.product((False, True), repeat=len(es)):
        arcs = [(v, u) if f else (u, v) for (u, v), f in zip(es, flips)]
        total += is_singly_connected(DirectedGraph(g.n, frozenset(arcs)))
    return total


def two_triangles_apart():
    return UndirectedGraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


def triangle_pendant():
    return UndirectedGraph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])


# -- preprocess -------------------------------------------------------------------

def test_preprocess_diamond_is_early_no():
    pre = preprocess(named.diamond())
    assert pre.early_no and pre.obstruction.kind.name == "diamond"


def test_preprocess_k4_is_early_no():
    # K4 holds a diamond as a subgraph, though not an induced one
    assert preprocess(named.complete(4)).early_no


def test_preprocess_triangle_pendant():
    pre = preprocess(triangle_pendant())
    assert pre.status == "Reduced" and len(pre.transcript) == 1
    assert pre.reduced_graph.n == 2 and pre.reduced_graph.m == 1


def test_preprocess_triangle_free_input_untouched():
    pre = preprocess(named.cycle(5))
    assert pre.status == "Reduced" and pre.reduced_graph == named.cycle(5) and not pre.transcript


@given(graphs(max_n=8))
def test_preprocess_result_is_triangle_free(g):
    pre = preprocess(g)
    if not pre.early_no:
        assert find_triangle(pre.reduced_graph) is None


# -- lift ------------------------------------------------------------------------------

def test_lift_empty_transcript_is_identity():
    g = named.cycle(4)
    o = Orientation.from_arcs(g, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert lift_orientation((), o) == o


@pytest.mark.parametrize("flip", [False, True])
def test_lift_triangle_pendant(flip):
    pre = preprocess(triangle_pendant())
    red = pre.reduced_graph
    o = Orientation.from_arcs(red, [(1, 0)] if flip else [(0, 1)])
    lifted = lift_orientation(pre.transcript, o)
    assert len(lifted.arcs()) == 4 and check_singly_connected(lifted.digraph())


def test_lift_two_triangles_both_cyclic():
    pre = preprocess(two_triangles_apart())
    assert len(pre.transcript) == 2
    lifted = lift_orientation(pre.transcript, Orientation(pre.reduced_graph, {}))
    d = lifted.digraph()
    assert all(len(d.out[v]) == 1 and len(d.inc[v]) == 1 for v in range(6))


def test_lift_rejects_mismatched_orientation():
    pre = preprocess(triangle_pendant())
    with pytest.raises(InconsistentTranscript):
        lift_orientation(pre.transcript, Orientation(named.path(3), {(0, 1): 1, (1, 2): 2}))


# -- decide ------------------------------------------------------------------------------

@pytest.mark.parametrize("name, expected", [
    ("domino", True), ("gem", False), ("house", False), ("diamond", False),
    ("petersen", True), ("cycle(7)", True), ("laddercycle(8)", True), ("complete(4)", False),
])
def test_decide_examples(name, expected):
    res = decide_sc_orientable(named.make_named_graph(name))
    assert res.orientable == expected
    assert (res.orientation is not None) == expected
    if expected:
        assert check_singly_connected(res.orientation.digraph())


def test_decide_empty_and_edgeless():
    assert decide_sc_orientable(UndirectedGraph(0, frozenset())).orientable
    assert decide_sc_orientable(UndirectedGraph(4, frozenset())).orientable


def test_decide_stats_count_blocks():
    res = decide_sc_orientable(named.path(4))
    assert res.stats.blocks == 3 and res.method == "solver"


@given(graphs(max_n=8, max_edges=16))
def test_decide_agrees_with_naive(g):
    a, b = decide_sc_orientable(g), naive_sc_orientable(g)
    assert a.orientable == b.orientable
    for res in (a, b):
        if res.orientable:
            assert res.orientation.graph == g
            assert check_singly_connected(res.orientation.digraph())
            assert check_singly_connected(res.orientation.reversed().digraph())


def test_decide_agrees_on_random_graphs():
    for g in random_graphs(RandomGraphConfig(count=150, seed=99)):
        assert decide_sc_orientable(g).orientable == naive_sc_orientable(g).orientable


def test_block_decomposition_soundness():
    # sc-orientable iff every block is, on small graphs with several blocks
    seen = 0
    for g in atlas(7):
        dec = biconnected_blocks(g)
        if sum(1 for b in dec.blocks if len(b) > 1) < 2:
            continue
        per_block = all(naive_sc_orientable(g.induced(b)[0]).orientable for b in dec.blocks)
        assert decide_sc_orientable(g).orientable == per_block == naive_sc_orientable(g).orientable
        seen += 1
    assert seen > 100


@given(graphs(max_n=8))
def test_triangle_contraction_equivalence(g):
    tri = find_triangle(g)
    if tri is None or preprocess(g).early_no:
        return
    h, _ = contract(g, tri)
    assert decide_sc_orientable(g).orientable == decide_sc_orientable(h).orientable


# -- naive enumeration and counting ----------------------------------------------------

def test_naive_examples():
    assert not naive_sc_orientable(named.diamond()).orientable
    res = naive_sc_orientable(named.cycle(4))
    assert res.orientable and res.method == "naive"


def test_naive_guard():
    with pytest.raises(TooLarge):
        naive_sc_orientable(named.grid(4, 4).disjoint_union(named.cycle(3)))
    with pytest.raises(TooLarge):
        count_sc_orientations(named.laddercycle(10))


@pytest.mark.parametrize("name, count", [
    ("domino", 2), ("diamond", 0), ("house", 0), ("gem", 0), ("path(2)", 2),
    ("cycle(5)", 12), ("laddercycle(8)", 2), ("complete(4)", 0), ("triangle", 2),
])
def test_count_examples(name, count):
    assert count_sc_orientations(named.make_named_graph(name)) == count


def test_count_petersen():
    assert count_sc_orientations(named.petersen()) == 80


def test_count_edgeless():
    assert count_sc_orientations(UndirectedGraph(3, frozenset())) == 1


@given(graphs(max_n=7, max_edges=11))
def test_count_matches_brute_force(g):
    assert count_sc_orientations(g) == brute_count(g)


@given(graphs(max_n=7, max_edges=11))
def test_iter_yields_distinct_sc_orientations(g):
    seen = set()
    for o in iter_sc_orientations(g):
        assert check_singly_connected(o.digraph())
        key = tuple(o.arcs())
        assert key not in seen
        seen.add(key)
    assert len(seen) == count_sc_orientations(g)


def test_laddercycle_zero_steps_turn_together():
    # the 0th-step set of a laddercycle has exactly two joint orientations
    g = named.laddercycle(8)
    steps = named.laddercycle_zero_steps(8)
    patterns = {tuple(o.head(*s) for s in steps) for o in iter_sc_orientations(g)}
    assert len(patterns) == 2
