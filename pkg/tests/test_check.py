from dataclasses import replace

import networkx as nx
import pytest
from hypothesis import given

from conftest import digraphs, to_nx_di
from scorient.check import (check_singly_connected, count_simple_paths, directed_cycles,
                            eliminate_long_cycles, long_cycles, oracle_singly_connected_flow,
                            oracle_singly_connected_paths, replay_witness)
from scorient.errors import NotSinglyConnected
from scorient.experiments import RandomDigraphConfig, random_digraphs
from scorient.graph import DirectedGraph


def dg(n, arcs):
    return DirectedGraph(n, frozenset(arcs))


PATH = dg(3, [(0, 1), (1, 2)])
DIAMOND = dg(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
TRIANGLE = dg(3, [(0, 1), (1, 2), (2, 0)])


def test_directed_path_is_sc():
    v = check_singly_connected(PATH)
    assert v and v.witness is None


def test_oriented_diamond_witness():
    v = check_singly_connected(DIAMOND)
    assert not v
    w = v.witness
    assert (w.source, w.target) == (0, 3)
    assert {w.path1, w.path2} == {(0, 1, 3), (0, 2, 3)}
    assert replay_witness(DIAMOND, w)


def test_cyclic_triangle_is_sc():
    assert check_singly_connected(TRIANGLE)


def test_shortcut_gives_forward_arc_witness():
    d = dg(3, [(0, 1), (1, 2), (0, 2)])
    v = check_singly_connected(d)
    assert not v and replay_witness(d, v.witness)
    assert {v.witness.path1, v.witness.path2} == {(0, 1, 2), (0, 2)}


def test_back_arcs_alone_are_accepted():
    # cycle plus a tail: only back arcs close cycles
    assert check_singly_connected(dg(5, [(0, 1), (1, 2), (2, 3), (3, 1), (3, 4)]))


def test_two_cycles_sharing_an_arc_are_not_sc():
    d = dg(4, [(0, 1), (1, 2), (2, 0), (1, 3), (3, 0)])
    v = check_singly_connected(d)
    assert not v and replay_witness(d, v.witness)


@pytest.mark.parametrize("k", range(2, 9))
def test_directed_cycles_are_sc(k):
    c = dg(k, [(i, (i + 1) % k) for i in range(k)])
    assert check_singly_connected(c) and oracle_singly_connected_flow(c)


def test_flow_oracle_on_diamond():
    assert not oracle_singly_connected_flow(DIAMOND)
    assert not oracle_singly_connected_paths(DIAMOND)


def test_replay_rejects_bogus_witness():
    w = check_singly_connected(DIAMOND).witness
    assert not replay_witness(DIAMOND, replace(w, path2=w.path1))
    assert not replay_witness(DIAMOND, replace(w, path1=(0, 3)))


def test_count_simple_paths_matches_networkx():
    d = dg(5, [(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (1, 4)])
    h = to_nx_di(d)
    for s in range(5):
        for t in range(5):
            if s != t:
                n_paths = len(list(nx.all_simple_paths(h, s, t)))
                assert count_simple_paths(d, s, t, cap=10) == n_paths


@given(digraphs(max_n=6))
def test_three_checkers_agree(d):
    v = check_singly_connected(d)
    assert bool(v) == oracle_singly_connected_flow(d) == oracle_singly_connected_paths(d)
    if not v:
        assert replay_witness(d, v.witness)


@given(digraphs(max_n=6))
def test_transpose_invariance(d):
    assert bool(check_singly_connected(d)) == bool(check_singly_connected(d.reverse()))


def test_random_digraphs_agree():
    for d in random_digraphs(RandomDigraphConfig(count=200)):
        assert bool(check_singly_connected(d)) == oracle_singly_connected_flow(d)


# -- directed cycles and the rewrite ------------------------------------------------

@given(digraphs(max_n=5))
def test_directed_cycles_match_networkx_on_sc_inputs(d):
    if not check_singly_connected(d):
        return
    ours = sorted(directed_cycles(d))
    theirs = nx.simple_cycles(to_nx_di(d))
    canon = []
    for c in theirs:
        i = c.index(min(c))
        canon.append(tuple(c[i:] + c[:i]))
    assert ours == sorted(canon)


def test_eliminate_directed_c4():
    c4 = dg(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    trace = []
    out = eliminate_long_cycles(c4, trace)
    assert trace == [(0, 1, 2, 3)]
    assert out.arc_list() == [(1, 0), (1, 2), (3, 0), (3, 2)]
    assert out.underlying() == c4.underlying()
    assert check_singly_connected(out) and not long_cycles(out)


def test_eliminate_keeps_triangle_and_acyclic_inputs():
    assert eliminate_long_cycles(TRIANGLE) == TRIANGLE
    assert eliminate_long_cycles(PATH) == PATH


def test_eliminate_requires_sc_input():
    with pytest.raises(NotSinglyConnected):
        eliminate_long_cycles(DIAMOND)


@given(digraphs(max_n=6))
def test_eliminate_long_cycles_properties(d):
    if not check_singly_connected(d):
        return
    before = len(directed_cycles(d))
    trace = []
    out = eliminate_long_cycles(d, trace)
    assert len(trace) <= before
    assert out.underlying() == d.underlying()
    assert check_singly_connected(out)
    assert not long_cycles(out)
