"""Coupling gadgets, cyclic gluing with a twist, and the perfect-graph transform.

A coupling gadget is an sc-orientable graph H with marked ordered edges
(a1, b1), (a2, b2) such that

1. the marked edges are coupled: every sc-orientation points both from a to b
   or both from b to a;
2. some sc-orientation has no directed path from {a1, b1} to {a2, b2};
3. two chi(H)-colorings exist, one with f(a1)=f(a2), f(b1)=f(b2) and one with
   f(a1)=f(b2), f(b1)=f(a2).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import named
from .core import chromatic_number, identify, is_k_colorable
from .errors import BadParameter, GadgetPrecondition, OverlappingMarkedEdges
from .graph import Orientation, UndirectedGraph
from .solve import iter_sc_orientations


@dataclass(frozen=True)
class CouplingGadget:
    graph: UndirectedGraph
    pair1: tuple[int, int]
    pair2: tuple[int, int]
    name: str = "gadget"

    def check_edges(self) -> None:
        for a, b in (self.pair1, self.pair2):
            if not (0 <= a < self.graph.n and 0 <= b < self.graph.n) or not self.graph.has_edge(a, b):
                raise GadgetPrecondition(f"marked pair ({a}, {b}) is not an edge")

    @property
    def disjoint(self) -> bool:
        return not set(self.pair1) & set(self.pair2)


def domino_gadget() -> CouplingGadget:
    """The domino with its bottom and top edges marked."""
    return CouplingGadget(named.domino(), (0, 1), (4, 5), "domino")


def grid24k3_gadget() -> CouplingGadget:
    """The 2x4 grid plus a disjoint triangle; rung 3 is reverse-coupled to rung 0, hence (7, 6)."""
    g = named.grid(2, 4).disjoint_union(named.triangle())
    return CouplingGadget(g, (0, 1), (7, 6), "grid24k3")


GADGETS = {"domino": domino_gadget, "grid24k3": grid24k3_gadget}


def make_gadget(name: str) -> CouplingGadget:
    try:
        return GADGETS[name]()
    except KeyError:
        raise BadParameter(f"unknown gadget {name!r}; choose from {sorted(GADGETS)}") from None


@dataclass(frozen=True)
class CouplingReport:
    sc_orientations: int
    chromatic_number: int
    property1: bool
    property2: bool
    property3: bool
    witness_no_path: Optional[Orientation] = None

    @property
    def is_coupling_gadget(self) -> bool:
        return self.property1 and self.property2 and self.property3


def _reach(d, sources) -> set[int]:
    seen = set(sources)
    stack = list(sources)
    while stack:
        x = stack.pop()
        for y in d.out[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def _points_forward(o: Orientation, pair) -> bool:
    return o.head(*pair) == pair[1]


def no_path_between(o: Orientation, h: CouplingGadget, both_ways: bool = False) -> bool:
    d = o.digraph()
    if _reach(d, h.pair1) & set(h.pair2):
        return False
    if both_ways and _reach(d, h.pair2) & set(h.pair1):
        return False
    return True


def verify_coupling_gadget(h: CouplingGadget) -> CouplingReport:
    h.check_edges()
    orients = list(iter_sc_orientations(h.graph))
    if not orients:
        raise GadgetPrecondition("gadget graph is not sc-orientable")
    p1 = all(_points_forward(o, h.pair1) == _points_forward(o, h.pair2) for o in orients)
    witness = next((o for o in orients if no_path_between(o, h)), None)
    k, _ = chromatic_number(h.graph, max(1, h.graph.n))
    (a1, b1), (a2, b2) = h.pair1, h.pair2
    p3 = _colorable_with(h.graph, k, [(a1, a2), (b1, b2)]) and _colorable_with(h.graph, k, [(a1, b2), (b1, a2)])
    return CouplingReport(len(orients), k, p1, witness is not None, p3, witness)


def _colorable_with(g: UndirectedGraph, k: int, same: list[tuple[int, int]]) -> bool:
    """Is there a proper k-coloring giving each listed pair one color?"""
    groups = [sorted(set(p)) for p in same]
    if any(len(grp) == 2 and g.has_edge(*grp) for grp in groups):
        return False
    # merge overlapping groups before identifying
    merged: list[set[int]] = []
    for grp in groups:
        s = set(grp)
        for other in [m for m in merged if m & s]:
            merged.remove(other)
            s |= other
        merged.append(s)
    if any(g.has_edge(u, v) for s in merged for u in s for v in s if u < v):
        return False
    q, _ = identify(g, [sorted(s) for s in merged])
    return is_k_colorable(q, k)


def glue_coupling_cycle(h: CouplingGadget, girth_target: int = 3, copies: Optional[int] = None,
                        twist: bool = True) -> UndirectedGraph:
    """Glue copies of ``h`` in a cycle at their marked edges.

    Copy i's second pair is identified with copy i+1's first pair. The last
    copy closes the cycle with a twist (a2 to b1 and b2 to a1 of the first
    copy) unless ``twist`` is False. The copy count defaults to the odd value
    among ``girth_target`` and ``girth_target + 1``.
    """
    h.check_edges()
    if not h.disjoint:
        raise OverlappingMarkedEdges("marked edges share a vertex")
    if copies is None:
        copies = girth_target if girth_target % 2 else girth_target + 1
    if copies < 2:
        raise BadParameter("gluing needs at least 2 copies")
    n = h.graph.n
    big = UndirectedGraph(0, frozenset())
    for _ in range(copies):
        big = big.disjoint_union(h.graph)
    (a1, b1), (a2, b2) = h.pair1, h.pair2
    groups = []
    for i in range(copies - 1):
        groups.append((i * n + a2, (i + 1) * n + a1))
        groups.append((i * n + b2, (i + 1) * n + b1))
    last = (copies - 1) * n
    if twist:
        groups += [(last + a2, b1), (last + b2, a1)]
    else:
        groups += [(last + a2, a1), (last + b2, b1)]
    # union overlapping groups (a marked vertex may be hit twice)
    parent = list(range(big.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in groups:
        parent[find(u)] = find(v)
    classes: dict[int, list[int]] = {}
    for v in range(big.n):
        classes.setdefault(find(v), []).append(v)
    for cls in classes.values():
        if any(big.has_edge(u, v) for u in cls for v in cls if u < v):
            raise BadParameter("gluing would create a self-loop")
    glued, _ = identify(big, [c for c in classes.values() if len(c) > 1])
    return glued


def perfectify(g: UndirectedGraph) -> UndirectedGraph:
    """Replace each edge uv (u < v) by a path u-w-v and a triangle u-w-w'.

    For the i-th edge in sorted order, w = n + 2i and w' = n + 2i + 1.
    sc-orientability is preserved for triangle-free inputs. A triangle in the
    input turns into a hexagon with three hanging triangles, and contracting
    two of them leaves a house, so such inputs always come out "no".
    """
    es = []
    for i, (u, v) in enumerate(g.edge_list()):
        w, w2 = g.n + 2 * i, g.n + 2 * i + 1
        es += [(u, w), (w, v), (u, w2), (w, w2)]
    return UndirectedGraph.from_edges(g.n + 2 * g.m, es)


def gadget_orientations(h: CouplingGadget) -> dict[bool, Orientation]:
    """A preferred sc-orientation of ``h`` for each direction of the first marked edge.

    Preference: no directed path between the marked edges in either
    direction, then none from pair1 to pair2, then the smallest arc list.
    """
    best: dict[bool, tuple] = {}
    for o in iter_sc_orientations(h.graph):
        fwd = _points_forward(o, h.pair1)
        key = (not no_path_between(o, h, both_ways=True), not no_path_between(o, h), o.arcs())
        if fwd not in best or key < best[fwd][0]:
            best[fwd] = (key, o)
    if len(best) < 2:
        raise GadgetPrecondition("gadget lacks sc-orientations for both marked directions")
    return {k: v[1] for k, v in best.items()}

