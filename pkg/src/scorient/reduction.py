"""3-SAT to SC-Orientation reduction with both correctness directions.

Building blocks
---------------
* Coupling by a 4-cycle. In every sc-orientation of a 4-cycle, opposite edges
  run the same way around it. Joining edge (u, v) to edge (a, b) by u-a and
  v-b ("parallel") forces u->v iff b->a; joining by u-b and v-a ("crossed")
  forces u->v iff a->b. With a coupling gadget, a stack of gadget copies
  replaces the 4-cycle (a twisted identification gives the reversed sign).
* Ladders are chains of steps joined in parallel, so step s agrees with step
  0 iff s is even. The universal ladder U is open; each variable x gets a
  ladder-cycle with an even number of steps.
* A clause gadget is a cycle v0 .. v_{k-1} with edges, in order,
  e1, e_x, e2 (g' edges), e_y, e3, e_z, e4, e5. Its forward direction is
  v_i -> v_{i+1}. Generic edges e1..e4 hang on odd steps of U and e5 on an
  even step. A literal edge hangs on the variable's ladder-cycle, at an even
  step for a positive literal and an odd step for a negative one.

Semantics: value(x) = 1 iff step 0 of x's ladder-cycle points the same way as
step 0 of U. With U's step 0 pointing lo -> hi, generic edges point forward,
e5 backward, and a literal edge points backward exactly when the literal is
true. A clause whose literals are all false therefore carries two paths
between v0 and v_{k-1}: e5 alone and the run e1 .. e4.

Every edge carries a rule ``(src, b0, b1)``: its lo->hi bit when the source
value is 0 or 1, where source 0 is U and source x > 0 is variable x.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Mapping, Optional, Sequence

from .check import ScWitness, check_singly_connected
from .errors import BadParameter, NotSinglyConnected, ParseError
from .gadgets import CouplingGadget, gadget_orientations, make_gadget
from .graph import Orientation, UndirectedGraph, canon
from .io import format_edge_list, parse_dimacs, parse_edge_list

Rule = tuple[int, int, int]  # (source, lo->hi bit at value 0, at value 1)


# -- formulas -----------------------------------------------------------------

@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        for i, c in enumerate(self.clauses):
            if len(c) != 3:
                raise BadParameter(f"clause {i} has {len(c)} literals; exactly 3 required")
            if any(l == 0 or abs(l) > self.num_vars for l in c):
                raise BadParameter(f"clause {i} has a literal outside 1..{self.num_vars}")
            if len({abs(l) for l in c}) != 3:
                raise BadParameter(f"clause {i} repeats a variable")

    @classmethod
    def from_dimacs(cls, text: str) -> "CnfFormula":
        n, clauses = parse_dimacs(text)
        return cls(n, tuple(clauses))

    def evaluate(self, a: Mapping[int, bool]) -> bool:
        return not self.falsified(a)

    def falsified(self, a: Mapping[int, bool]) -> list[int]:
        return [i for i, c in enumerate(self.clauses)
                if not any(a[abs(l)] == (l > 0) for l in c)]

    def assignments(self) -> Iterator[dict[int, bool]]:
        for bits in itertools.product((False, True), repeat=self.num_vars):
            yield {x + 1: b for x, b in enumerate(bits)}

    def satisfying_assignment(self) -> Optional[dict[int, bool]]:
        return next((a for a in self.assignments() if self.evaluate(a)), None)


def parse_assignment(bits: str, num_vars: int) -> dict[int, bool]:
    """``"101"`` assigns x1=1, x2=0, x3=1."""
    bits = bits.strip()
    if len(bits) != num_vars or set(bits) - {"0", "1"}:
        raise BadParameter(f"assignment must be {num_vars} characters of 0/1")
    return {i + 1: b == "1" for i, b in enumerate(bits)}


def format_assignment(a: Mapping[int, bool]) -> str:
    return "".join("1" if a[x] else "0" for x in sorted(a))


# -- parameters and artifacts -------------------------------------------------

@dataclass(frozen=True)
class ReductionParams:
    link_length: int = 0          # intermediate steps between a clause edge and its ladder
    clause_cycle_length: int = 1  # number g' of edges replacing e2 (odd)
    coupler: Optional[CouplingGadget] = None
    stack_depth: int = 1          # gadget copies per coupling when a coupler is set
    min_var_cycle: int = 4        # smallest ladder-cycle length

    def validate(self) -> None:
        if self.link_length < 0:
            raise BadParameter("link_length must be >= 0")
        if self.clause_cycle_length < 1 or self.clause_cycle_length % 2 == 0:
            raise BadParameter("clause_cycle_length must be odd and >= 1")
        if self.stack_depth < 1:
            raise BadParameter("stack_depth must be >= 1")
        if self.min_var_cycle < 4 or self.min_var_cycle % 2:
            raise BadParameter("min_var_cycle must be even and >= 4")
        if self.coupler is not None:
            self.coupler.check_edges()
            if not self.coupler.disjoint:
                raise BadParameter("coupler marked edges must be vertex-disjoint")

    def to_text(self) -> str:
        c = "none" if self.coupler is None else self.coupler.name
        return (f"link_length={self.link_length},clause_cycle_length={self.clause_cycle_length},"
                f"coupler={c},stack_depth={self.stack_depth},min_var_cycle={self.min_var_cycle}")

    @classmethod
    def from_text(cls, text: str) -> "ReductionParams":
        kw: dict = {}
        for item in filter(None, (t.strip() for t in text.split(","))):
            key, sep, val = item.partition("=")
            key = key.strip()
            if not sep:
                raise BadParameter(f"parameter {item!r} is not key=value")
            if key == "coupler":
                kw[key] = None if val.strip() == "none" else make_gadget(val.strip())
            elif key in ("link_length", "clause_cycle_length", "stack_depth", "min_var_cycle"):
                try:
                    kw[key] = int(val)
                except ValueError:
                    raise BadParameter(f"parameter {key} needs an integer") from None
            else:
                raise BadParameter(f"unknown parameter {key!r}")
        p = cls(**kw)
        p.validate()
        return p


@dataclass
class ReductionArtifacts:
    graph: UndirectedGraph
    formula: CnfFormula
    order: tuple[int, ...]
    params: ReductionParams
    universal_step0: tuple[int, int]
    var_step0: dict[int, tuple[int, int]]
    clause_edges: dict[tuple[int, str], tuple[int, int]]
    literal_parity: dict[tuple[int, int], str]
    clause_types: dict[int, int]
    clause_cycles: dict[int, tuple[int, ...]]
    rules: dict[tuple[int, int], Rule]
    metadata: dict[str, str] = field(default_factory=dict)


# -- construction -------------------------------------------------------------

class _Builder:
    def __init__(self, params: ReductionParams):
        self.p = params
        self.n = 0
        self.rules: dict[tuple[int, int], Rule] = {}
        self.gorient = gadget_orientations(params.coupler) if params.coupler else None

    def fresh(self, k=1):
        out = list(range(self.n, self.n + k))
        self.n += k
        return out

    def set_rule(self, u, v, src, c0, c1):
        """Record that u -> v holds iff the source value maps to c0 / c1."""
        rule = (src, c0, c1) if u < v else (src, 1 - c0, 1 - c1)
        e = canon(u, v)
        old = self.rules.get(e)
        if old is not None and old != rule:
            raise AssertionError(f"conflicting orientation rules on edge {e}")
        self.rules[e] = rule

    def value(self, u, v) -> Rule:
        """Rule of the ordered pair u -> v."""
        src, b0, b1 = self.rules[canon(u, v)]
        return (src, b0, b1) if u < v else (src, 1 - b0, 1 - b1)

    def couple(self, e1, e2, sign):
        """Tie ordered edge e2 to e1: e2 points forward iff e1 does (sign +1) or does not (-1)."""
        x1, y1 = e1
        x2, y2 = e2
        src, c0, c1 = self.value(x1, y1)
        flip = 0 if sign > 0 else 1
        if self.gorient is None:
            self.set_rule(x2, y2, src, c0 ^ flip, c1 ^ flip)
            links = [(x1, y2), (y1, x2)] if sign > 0 else [(x1, x2), (y1, y2)]
            # alternating 4-cycle: a tail of e1 is a source, its head a sink
            self.set_rule(x1, links[0][1], src, c0, c1)
            self.set_rule(y1, links[1][1], src, 1 - c0, 1 - c1)
            return
        h = self.p.coupler
        cur = (x1, y1)
        for depth in range(self.p.stack_depth):
            last = depth == self.p.stack_depth - 1
            vmap = {}
            vmap[h.pair1[0]], vmap[h.pair1[1]] = cur
            if last:
                tgt = (x2, y2) if sign > 0 else (y2, x2)
                vmap[h.pair2[0]], vmap[h.pair2[1]] = tgt
            for v in range(h.graph.n):
                if v not in vmap:
                    vmap[v] = self.fresh()[0]
            s, k0, k1 = self.value(*cur)
            for p, q in h.graph.edges:
                P, Q = vmap[p], vmap[q]
                b0 = 1 if self.gorient[bool(k0)].head(p, q) == q else 0
                b1 = 1 if self.gorient[bool(k1)].head(p, q) == q else 0
                self.set_rule(P, Q, s, b0, b1)
            cur = (vmap[h.pair2[0]], vmap[h.pair2[1]])

    def attach(self, rung, target):
        """Join ordered clause edge ``target`` to ladder step ``rung``.

        The chain has ``link_length`` fresh intermediate steps. Its net effect
        is always "reversed" (target forward iff the rung points b -> a); the
        first coupling is crossed when the chain length would flip that.
        """
        ell = self.p.link_length
        cur = rung
        for i in range(ell + 1):
            sign = +1 if (i == 0 and ell % 2 == 1) else -1
            nxt = target if i == ell else tuple(self.fresh(2))
            self.couple(cur, nxt, sign)
            cur = nxt

    def ladder(self, steps, src, cyclic=False):
        rungs = [tuple(self.fresh(2)) for _ in range(steps)]
        a, b = rungs[0]
        self.set_rule(a, b, src, 0, 1)
        for i in range(steps - 1):
            self.couple(rungs[i], rungs[i + 1], -1)
        if cyclic:
            self.couple(rungs[-1], rungs[0], -1)
        return rungs


def _allocate(parities: Sequence[int]) -> list[int]:
    """Increasing steps with the requested parities and gaps of at least 2."""
    out, prev = [], -2
    for par in parities:
        s = prev + 2
        if s % 2 != par:
            s += 1
        out.append(s)
        prev = s
    return out


def _clause_type(clause: Sequence[int]) -> int:
    vs = sorted(abs(l) for l in clause)
    return 2 if vs[2] - vs[0] == 2 else 1


def reduce_3sat(f: CnfFormula, order: Optional[Sequence[int]] = None,
                params: Optional[ReductionParams] = None) -> ReductionArtifacts:
    params = params or ReductionParams()
    params.validate()
    m = len(f.clauses)
    order = tuple(range(m)) if order is None else tuple(order)
    if sorted(order) != list(range(m)):
        raise BadParameter("clause order must be a permutation of the clause indices")
    gp = params.clause_cycle_length
    roles = ["e1", "ex"] + ([f"e2_{i + 1}" for i in range(gp)] if gp > 1 else ["e2"]) \
        + ["ey", "e3", "ez", "e4", "e5"]
    generic = [r for r in roles if r.startswith("e") and r[1].isdigit() and r != "e5"]
    lit_roles = ("ex", "ey", "ez")
    k = len(roles)

    b = _Builder(params)
    cycles = {c: tuple(b.fresh(k)) for c in range(m)}

    # universal ladder steps, in clause order
    u_par, u_slots = [], []
    for c in order:
        for r in generic:
            u_par.append(1)
            u_slots.append((c, r))
        u_par.append(0)
        u_slots.append((c, "e5"))
    u_steps = _allocate(u_par)
    U = b.ladder(max(u_steps, default=0) + 1, 0)

    # ladder-cycle steps per variable
    occ: dict[int, list[tuple[int, int]]] = {x: [] for x in range(1, f.num_vars + 1)}
    for c in order:
        for pos, lit in enumerate(f.clauses[c]):
            occ[abs(lit)].append((c, pos))
    lc_steps, lc = {}, {}
    for x in range(1, f.num_vars + 1):
        par = [0 if f.clauses[c][pos] > 0 else 1 for c, pos in occ[x]]
        steps = _allocate(par)
        size = params.min_var_cycle
        if steps:
            size = max(size, steps[-1] + 2 - steps[0])
        size += size % 2
        lc_steps[x] = steps
        lc[x] = b.ladder(size, x, cyclic=True)

    clause_edges: dict[tuple[int, str], tuple[int, int]] = {}
    for c in range(m):
        cyc = cycles[c]
        for j, r in enumerate(roles):
            clause_edges[(c, r)] = (cyc[j], cyc[(j + 1) % k])
    for (c, r), s in zip(u_slots, u_steps):
        b.attach(U[s], clause_edges[(c, r)])
    literal_parity = {}
    for x in range(1, f.num_vars + 1):
        for (c, pos), s in zip(occ[x], lc_steps[x]):
            lit = f.clauses[c][pos]
            b.attach(lc[x][s], clause_edges[(c, lit_roles[pos])])
            literal_parity[(c, lit)] = "even" if s % 2 == 0 else "odd"

    # sanity: generic edges forward iff U, literal edges backward iff true
    for c in range(m):
        for r in generic:
            assert b.value(*clause_edges[(c, r)])[1:] == (0, 1)
        assert b.value(*clause_edges[(c, "e5")])[1:] == (1, 0)
        for pos, lit in enumerate(f.clauses[c]):
            src, c0, c1 = b.value(*clause_edges[(c, lit_roles[pos])])
            assert src == abs(lit) and (c0, c1) == ((1, 0) if lit > 0 else (0, 1))

    types = {}
    for c in range(m):
        types[c] = _clause_type(f.clauses[c])
        clause_edges[(c, "in")] = clause_edges[(c, "e1")]
        clause_edges[(c, "out")] = clause_edges[(c, "e3" if types[c] == 1 else "e4")]
    graph = UndirectedGraph(b.n, frozenset(b.rules))
    return ReductionArtifacts(
        graph=graph, formula=f, order=order, params=params,
        universal_step0=U[0], var_step0={x: lc[x][0] for x in lc},
        clause_edges=clause_edges, literal_parity=literal_parity, clause_types=types,
        clause_cycles=cycles, rules=dict(b.rules),
        metadata={"planarity": "not enforced", "params": params.to_text()},
    )


# -- both proof directions ----------------------------------------------------

def orient_from_assignment(a: ReductionArtifacts, gamma: Mapping[int, bool]) -> Orientation:
    """U's step 0 points lo -> hi; x's step 0 agrees with it iff gamma[x]."""
    missing = set(range(1, a.formula.num_vars + 1)) - set(gamma)
    if missing:
        raise BadParameter(f"assignment misses variables {sorted(missing)}")
    heads = {}
    for (u, v), (src, b0, b1) in a.rules.items():
        val = 1 if src == 0 else int(bool(gamma[src]))
        heads[(u, v)] = v if (b1 if val else b0) else u
    return Orientation(a.graph, heads)


def _points_lo_hi(o: Orientation, e) -> bool:
    u, v = canon(*e)
    return o.head(u, v) == v


def decode_assignment(a: ReductionArtifacts, o: Orientation) -> dict[int, bool]:
    if not check_singly_connected(o.digraph()):
        raise NotSinglyConnected("decode_assignment needs an sc-orientation")
    ref = _points_lo_hi(o, a.universal_step0)
    return {x: _points_lo_hi(o, e) == ref for x, e in sorted(a.var_step0.items())}


def clause_witness(a: ReductionArtifacts, o: Orientation, c: int) -> Optional[ScWitness]:
    """The two paths e5 versus e1..e4 of clause ``c``, if its cycle carries them."""
    cyc = a.clause_cycles[c]
    k = len(cyc)
    fwd = [o.head(cyc[j], cyc[(j + 1) % k]) == cyc[(j + 1) % k] for j in range(k)]
    if len(set(fwd[:-1])) != 1 or fwd[-1] == fwd[0]:
        return None
    if fwd[0]:
        return ScWitness(cyc[0], cyc[-1], (cyc[0], cyc[-1]), tuple(cyc))
    return ScWitness(cyc[-1], cyc[0], (cyc[-1], cyc[0]), tuple(reversed(cyc)))


# -- serialization ------------------------------------------------------------

ANNOTATION_HEADER = "# scorient reduction annotations"


def format_annotations(a: ReductionArtifacts) -> str:
    f = a.formula
    out = [ANNOTATION_HEADER, "planarity not-enforced", f"num_vars {f.num_vars}"]
    out += ["clause " + " ".join(map(str, c)) for c in f.clauses]
    out.append("order " + " ".join(map(str, a.order)))
    out.append("params " + a.params.to_text())
    out.append("universal_step0 %d %d" % a.universal_step0)
    out += [f"var_step0 {x} {e[0]} {e[1]}" for x, e in sorted(a.var_step0.items())]
    for c in sorted(a.clause_cycles):
        out.append(f"clause_type {c} {a.clause_types[c]}")
        out.append(f"clause_cycle {c} " + " ".join(map(str, a.clause_cycles[c])))
    out += [f"clause_edge {c} {r} {e[0]} {e[1]}" for (c, r), e in sorted(a.clause_edges.items())]
    out += [f"literal_parity {c} {lit} {p}" for (c, lit), p in sorted(a.literal_parity.items())]
    for e, (src, b0, b1) in sorted(a.rules.items()):
        out.append(f"rule {e[0]} {e[1]} {'U' if src == 0 else src} {b0}{b1}")
    return "\n".join(out) + "\n"


def parse_artifacts(graph_text: str, annotation_text: str) -> ReductionArtifacts:
    g = parse_edge_list(graph_text)
    num_vars = None
    clauses, order, params = [], None, ReductionParams()
    u0 = None
    var0, cedges, lpar, ctypes, cycles, rules = {}, {}, {}, {}, {}, {}
    for lineno, raw in enumerate(annotation_text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, *t = line.split()
        try:
            if key == "planarity":
                continue
            if key == "num_vars":
                num_vars = int(t[0])
            elif key == "clause":
                clauses.append(tuple(int(x) for x in t))
            elif key == "order":
                order = tuple(int(x) for x in t)
            elif key == "params":
                params = ReductionParams.from_text(t[0] if t else "")
            elif key == "universal_step0":
                u0 = (int(t[0]), int(t[1]))
            elif key == "var_step0":
                var0[int(t[0])] = (int(t[1]), int(t[2]))
            elif key == "clause_type":
                ctypes[int(t[0])] = int(t[1])
            elif key == "clause_cycle":
                cycles[int(t[0])] = tuple(int(x) for x in t[1:])
            elif key == "clause_edge":
                cedges[(int(t[0]), t[1])] = (int(t[2]), int(t[3]))
            elif key == "literal_parity":
                lpar[(int(t[0]), int(t[1]))] = t[2]
            elif key == "rule":
                src = 0 if t[2] == "U" else int(t[2])
                rules[(int(t[0]), int(t[1]))] = (src, int(t[3][0]), int(t[3][1]))
            else:
                raise ParseError(f"unknown annotation key {key!r}", lineno)
        except (IndexError, ValueError):
            raise ParseError(f"malformed annotation line {line!r}", lineno) from None
    if num_vars is None or u0 is None:
        raise ParseError("annotation document lacks num_vars or universal_step0")
    if set(rules) != set(g.edges):
        raise ParseError("annotation rules do not cover the graph's edge set")
    f = CnfFormula(num_vars, tuple(clauses))
    return ReductionArtifacts(
        graph=g, formula=f, order=order if order is not None else tuple(range(len(clauses))),
        params=params, universal_step0=u0, var_step0=var0, clause_edges=cedges,
        literal_parity=lpar, clause_types=ctypes, clause_cycles=cycles, rules=rules,
        metadata={"planarity": "not enforced", "params": params.to_text()},
    )


def write_artifacts(a: ReductionArtifacts, graph_path, annotation_path) -> None:
    with open(graph_path, "w") as fh:
        fh.write(format_edge_list(a.graph))
    with open(annotation_path, "w") as fh:
        fh.write(format_annotations(a))


def expected_size(f: CnfFormula, params: ReductionParams = ReductionParams()) -> tuple[int, int]:
    """Closed-form (vertices, edges) of a 4-cycle-coupled reduction.

    Clause cycles have ``7 + g'`` edges; U has ``L = m(2g' + 10) - 1`` steps;
    each of the ``m(7 + g')`` attachments adds ``2l`` vertices and ``3l + 2``
    edges; a ladder-cycle with K steps has 2K vertices and 3K edges.
    """
    if params.coupler is not None:
        raise BadParameter("closed form only covers 4-cycle couplings")
    m, gp, ell = len(f.clauses), params.clause_cycle_length, params.link_length
    L = max(m * (2 * gp + 10) - 1, 1)
    att = m * (7 + gp)
    ks = [_cycle_steps(f, x, params) for x in range(1, f.num_vars + 1)]
    verts = m * (7 + gp) + 2 * L + att * 2 * ell + sum(2 * k for k in ks)
    edges = m * (7 + gp) + (3 * L - 2) + att * (3 * ell + 2) + sum(3 * k for k in ks)
    return verts, edges


def _cycle_steps(f: CnfFormula, x: int, params: ReductionParams) -> int:
    """Ladder-cycle length for variable x when clauses are taken in index order."""
    signs = [l > 0 for c in f.clauses for l in c if abs(l) == x]
    if not signs:
        return params.min_var_cycle
    # steps grow by 2 on a repeated sign and by 3 on a sign change
    span = sum(2 if s == t else 3 for s, t in zip(signs, signs[1:]))
    k = max(params.min_var_cycle, span + 2)
    return k + k % 2

