import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scorient.check import check_singly_connected, replay_witness
from scorient.errors import BadParameter, NotSinglyConnected, ParseError
from scorient.experiments import small_formulas
from scorient.gadgets import domino_gadget, grid24k3_gadget
from scorient.io import format_edge_list
from scorient.patterns import find_triangle
from scorient.reduction import (CnfFormula, ReductionParams, clause_witness, decode_assignment,
                                expected_size, format_annotations, orient_from_assignment,
                                parse_artifacts, parse_assignment, reduce_3sat)
from scorient.solve import decide_sc_orientable

X, Y, Z = 1, 2, 3
TWO = CnfFormula(3, [(X, Y, Z), (-X, Y, Z)])
ONE = CnfFormula(3, [(X, -Y, Z)])
ALL_SIGNS = CnfFormula(3, [(sx * X, sy * Y, sz * Z) for sx in (1, -1) for sy in (1, -1) for sz in (1, -1)])


# -- formulas ------------------------------------------------------------------------

def test_formula_validation():
    with pytest.raises(BadParameter):
        CnfFormula(3, [(1, 2)])
    with pytest.raises(BadParameter):
        CnfFormula(3, [(1, 2, 3, -1)])
    with pytest.raises(BadParameter):
        CnfFormula(3, [(1, -1, 2)])
    with pytest.raises(BadParameter):
        CnfFormula(2, [(1, 2, 3)])


def test_formula_evaluation():
    a = parse_assignment("010", 3)
    assert a == {1: False, 2: True, 3: False}
    assert TWO.evaluate(a) and ONE.falsified(a) == [0]
    assert ALL_SIGNS.satisfying_assignment() is None
    assert len(list(TWO.assignments())) == 8
    with pytest.raises(BadParameter):
        parse_assignment("01", 3)


def test_from_dimacs():
    f = CnfFormula.from_dimacs("p cnf 3 2\n1 2 3 0\n-1 2 3 0\n")
    assert f == TWO


# -- parameters ----------------------------------------------------------------------

def test_params_text_round_trip():
    p = ReductionParams(link_length=2, clause_cycle_length=3, coupler=domino_gadget(), stack_depth=2)
    q = ReductionParams.from_text(p.to_text())
    assert q.to_text() == p.to_text()


@pytest.mark.parametrize("text", [
    "clause_cycle_length=2", "link_length=-1", "stack_depth=0", "min_var_cycle=5",
    "colour=3", "link_length", "link_length=x", "coupler=cube",
])
def test_params_rejected(text):
    with pytest.raises(BadParameter):
        ReductionParams.from_text(text)


# -- construction ------------------------------------------------------------------

def test_single_clause_size():
    a = reduce_3sat(ONE)
    assert (a.graph.n, a.graph.m) == (54, 91) == expected_size(ONE)


@pytest.mark.parametrize("ell, gp", [(0, 1), (1, 1), (2, 1), (0, 3), (1, 5)])
def test_size_matches_closed_form(ell, gp):
    params = ReductionParams(link_length=ell, clause_cycle_length=gp)
    for f in (ONE, TWO, ALL_SIGNS):
        a = reduce_3sat(f, params=params)
        assert (a.graph.n, a.graph.m) == expected_size(f, params)


def test_annotations_are_consistent():
    a = reduce_3sat(TWO)
    g = a.graph
    assert g.has_edge(*a.universal_step0)
    assert all(g.has_edge(*e) for e in a.var_step0.values())
    assert all(g.has_edge(*e) for e in a.clause_edges.values())
    assert set(a.var_step0) == {1, 2, 3}
    for (c, lit), par in a.literal_parity.items():
        assert par == ("odd" if lit < 0 else "even")
    # every clause gadget is one 8-cycle
    for c, cyc in a.clause_cycles.items():
        assert len(cyc) == 8
        assert all(g.has_edge(cyc[i], cyc[(i + 1) % 8]) for i in range(8))
    assert a.clause_edges[(0, "in")] == a.clause_edges[(0, "e1")]
    assert a.metadata["planarity"] == "not enforced"
    assert find_triangle(g) is None


def test_clause_types():
    a = reduce_3sat(CnfFormula(5, [(1, 2, 3), (1, 3, 5)]))
    assert a.clause_types == {0: 2, 1: 1}
    assert a.clause_edges[(0, "out")] == a.clause_edges[(0, "e4")]
    assert a.clause_edges[(1, "out")] == a.clause_edges[(1, "e3")]


def test_clause_cycle_length_parameter():
    a = reduce_3sat(ONE, params=ReductionParams(clause_cycle_length=3))
    assert len(a.clause_cycles[0]) == 10
    assert {(0, "e2_1"), (0, "e2_3")} <= set(a.clause_edges)


def test_bad_order():
    with pytest.raises(BadParameter):
        reduce_3sat(TWO, order=[0, 0])


# -- forward direction -------------------------------------------------------------

def test_two_clause_example_all_true():
    a = reduce_3sat(TWO)
    o = orient_from_assignment(a, {1: True, 2: True, 3: True})
    assert check_singly_connected(o.digraph())


def test_one_clause_exactly_one_literal_true():
    a = reduce_3sat(ONE)
    # x false, y true (so -y false), z true
    o = orient_from_assignment(a, {1: False, 2: True, 3: True})
    assert check_singly_connected(o.digraph())


def test_falsifying_assignment_gives_clause_witness():
    a = reduce_3sat(TWO)
    gamma = {1: False, 2: False, 3: False}
    o = orient_from_assignment(a, gamma)
    d = o.digraph()
    assert not check_singly_connected(d)
    w = clause_witness(a, o, 0)
    assert w is not None and replay_witness(d, w)
    assert len(w.path1) == 2 and len(w.path2) == 8
    assert clause_witness(a, o, 1) is None


def test_missing_variable_in_assignment():
    with pytest.raises(BadParameter):
        orient_from_assignment(reduce_3sat(TWO), {1: True})


@pytest.mark.parametrize("f", [ONE, TWO, CnfFormula(4, [(1, -2, 4), (-1, 3, -4), (2, 3, 4)])])
def test_forward_equivalence_over_all_assignments(f):
    a = reduce_3sat(f)
    for gamma in f.assignments():
        o = orient_from_assignment(a, gamma)
        v = check_singly_connected(o.digraph())
        assert bool(v) == f.evaluate(gamma)
        for c in f.falsified(gamma):
            assert replay_witness(o.digraph(), clause_witness(a, o, c))
        if v:
            assert decode_assignment(a, o) == gamma


@given(st.sampled_from(small_formulas()), st.data())
@settings(max_examples=30)
def test_forward_direction_on_small_formulas(f, data):
    a = reduce_3sat(f, params=ReductionParams(link_length=data.draw(st.integers(0, 1))))
    gamma = data.draw(st.sampled_from(list(f.assignments())))
    o = orient_from_assignment(a, gamma)
    assert bool(check_singly_connected(o.digraph())) == f.evaluate(gamma)


# -- reverse direction --------------------------------------------------------------

def test_decode_rejects_non_sc():
    a = reduce_3sat(TWO)
    with pytest.raises(NotSinglyConnected):
        decode_assignment(a, orient_from_assignment(a, {1: False, 2: False, 3: False}))


def test_decode_is_invariant_under_global_reversal():
    a = reduce_3sat(TWO)
    gamma = {1: True, 2: False, 3: True}
    o = orient_from_assignment(a, gamma)
    assert decode_assignment(a, o.reversed()) == gamma


@pytest.mark.parametrize("ell", [0, 1, 2])
def test_solver_orientation_decodes_to_model(ell):
    a = reduce_3sat(TWO, params=ReductionParams(link_length=ell))
    res = decide_sc_orientable(a.graph)
    assert res.orientable and TWO.evaluate(decode_assignment(a, res.orientation))


def test_unsatisfiable_formula_is_no_instance():
    a = reduce_3sat(ALL_SIGNS)
    assert not decide_sc_orientable(a.graph).orientable


@pytest.mark.parametrize("gadget, depth", [("domino", 1), ("grid24k3", 1), ("domino", 2)])
def test_coupler_mode(gadget, depth):
    coupler = domino_gadget() if gadget == "domino" else grid24k3_gadget()
    params = ReductionParams(coupler=coupler, stack_depth=depth)
    a = reduce_3sat(TWO, params=params)
    for gamma in TWO.assignments():
        o = orient_from_assignment(a, gamma)
        assert bool(check_singly_connected(o.digraph())) == TWO.evaluate(gamma)
    res = decide_sc_orientable(a.graph)
    assert res.orientable and TWO.evaluate(decode_assignment(a, res.orientation))


def test_coupler_mode_unsat():
    a = reduce_3sat(ALL_SIGNS, params=ReductionParams(coupler=domino_gadget()))
    assert not decide_sc_orientable(a.graph).orientable


# -- serialization ------------------------------------------------------------------

@pytest.mark.parametrize("params", [ReductionParams(), ReductionParams(link_length=1, coupler=domino_gadget())])
def test_artifacts_round_trip(params):
    a = reduce_3sat(TWO, order=[1, 0], params=params)
    b = parse_artifacts(format_edge_list(a.graph), format_annotations(a))
    assert b.graph == a.graph and b.formula == a.formula and b.order == (1, 0)
    assert b.rules == a.rules and b.clause_edges == a.clause_edges
    assert b.literal_parity == a.literal_parity and b.clause_types == a.clause_types
    assert b.var_step0 == a.var_step0 and b.universal_step0 == a.universal_step0
    assert format_annotations(b) == format_annotations(a)
    gamma = {1: False, 2: True, 3: False}
    assert orient_from_assignment(b, gamma) == orient_from_assignment(a, gamma)


def test_artifacts_parse_errors():
    a = reduce_3sat(ONE)
    text = format_annotations(a)
    with pytest.raises(ParseError):
        parse_artifacts(format_edge_list(a.graph), text + "bogus 1\n")
    with pytest.raises(ParseError):
        parse_artifacts(format_edge_list(a.graph), "num_vars 3\n")
    lines = [ln for ln in text.splitlines() if not ln.startswith("rule ")]
    with pytest.raises(ParseError):
        parse_artifacts(format_edge_list(a.graph), "\n".join(lines))
