import pytest
from hypothesis import given, settings

from conftest import graphs
from scorient import named
from scorient.check import check_singly_connected
from scorient.core import chromatic_number, clique_number, girth
from scorient.errors import BadParameter, GadgetPrecondition, OverlappingMarkedEdges
from scorient.gadgets import (CouplingGadget, domino_gadget, gadget_orientations, glue_coupling_cycle,
                              grid24k3_gadget, make_gadget, no_path_between, perfectify,
                              verify_coupling_gadget)
from scorient.patterns import find_triangle
from scorient.solve import count_sc_orientations, decide_sc_orientable, preprocess


def test_domino_has_properties_one_and_two_only():
    r = verify_coupling_gadget(domino_gadget())
    assert (r.property1, r.property2, r.property3) == (True, True, False)
    assert r.sc_orientations == 2 and r.chromatic_number == 2
    assert not r.is_coupling_gadget
    assert no_path_between(r.witness_no_path, domino_gadget())


def test_grid24k3_is_a_coupling_gadget():
    r = verify_coupling_gadget(grid24k3_gadget())
    assert r.is_coupling_gadget and r.chromatic_number == 3


def test_diamond_rejected_as_gadget():
    with pytest.raises(GadgetPrecondition):
        verify_coupling_gadget(CouplingGadget(named.diamond(), (0, 1), (2, 3)))


def test_marked_pairs_must_be_edges():
    with pytest.raises(GadgetPrecondition):
        verify_coupling_gadget(CouplingGadget(named.domino(), (0, 5), (2, 3)))


def test_make_gadget_unknown():
    with pytest.raises(BadParameter):
        make_gadget("tetrahedron")


def test_uncoupled_pairs_fail_property_one():
    # the two outer edges of a path orient independently
    r = verify_coupling_gadget(CouplingGadget(named.path(4), (0, 1), (2, 3)))
    assert not r.property1


@pytest.mark.parametrize("copies, twist, expected", [
    (3, True, False), (5, True, False), (4, False, True), (3, False, True), (2, False, True),
])
def test_glue_domino_parity(copies, twist, expected):
    g = glue_coupling_cycle(domino_gadget(), copies=copies, twist=twist)
    assert g.n == 4 * copies and decide_sc_orientable(g).orientable == expected


@pytest.mark.parametrize("target, copies", [(3, 3), (4, 5), (5, 5), (6, 7)])
def test_glue_default_copy_count_is_odd(target, copies):
    g = glue_coupling_cycle(domino_gadget(), target)
    assert g.n == 4 * copies and not decide_sc_orientable(g).orientable


def test_glue_grid24k3_not_orientable():
    g = glue_coupling_cycle(grid24k3_gadget(), 3)
    assert not decide_sc_orientable(g).orientable


def test_glue_overlapping_marked_edges():
    with pytest.raises(OverlappingMarkedEdges):
        glue_coupling_cycle(CouplingGadget(named.path(3), (0, 1), (1, 2)))


def test_glue_needs_two_copies():
    with pytest.raises(BadParameter):
        glue_coupling_cycle(domino_gadget(), copies=1)


def test_gadget_orientations_cover_both_directions():
    h = grid24k3_gadget()
    picks = gadget_orientations(h)
    assert set(picks) == {False, True}
    for fwd, o in picks.items():
        assert check_singly_connected(o.digraph())
        assert (o.head(*h.pair1) == h.pair1[1]) == fwd
        assert no_path_between(o, h)


# -- perfectify --------------------------------------------------------------------

def test_perfectify_single_edge():
    g = perfectify(named.path(2))
    assert g.n == 4 and g.edge_list() == [(0, 2), (0, 3), (1, 2), (2, 3)]


def test_perfectify_c4():
    g = perfectify(named.cycle(4))
    assert g.n == 12 and chromatic_number(g, 4)[0] == 3 and clique_number(g) == 3


@given(graphs(max_n=6))
@settings(max_examples=40)
def test_perfectify_sizes_and_perfection(g):
    h = perfectify(g)
    assert h.n == g.n + 2 * g.m and h.m == 4 * g.m
    if g.m:
        assert chromatic_number(h, 4)[0] == 3 and clique_number(h) == 3


@given(graphs(max_n=7))
@settings(max_examples=40)
def test_perfectify_preserves_verdict_without_triangles(g):
    if find_triangle(g) is not None:
        return
    assert decide_sc_orientable(perfectify(g)).orientable == decide_sc_orientable(g).orientable


@given(graphs(max_n=6))
@settings(max_examples=40)
def test_perfectify_never_creates_orientability(g):
    if decide_sc_orientable(perfectify(g)).orientable:
        assert decide_sc_orientable(g).orientable


def test_perfectify_breaks_the_triangle():
    # the triangle's three hanging triangles contract to a 4-cycle with a roof
    h = perfectify(named.triangle())
    assert decide_sc_orientable(named.triangle()).orientable
    assert count_sc_orientations(h) == 0
    assert preprocess(h).obstruction.kind.name == "house"


def test_perfectify_girth_three():
    assert girth(perfectify(named.petersen())) == 3
