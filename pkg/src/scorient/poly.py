"""Polynomial orientations for tractable classes and distance-hereditary tests.

* ``orient_by_coloring``: every edge points to its higher color. Arcs strictly
  increase color, so the result is always acyclic; with girth >= 2k - 1 it is
  singly connected.
* ``orient_near_bipartite``: for a partition into an independent set I and a
  forest F, I-vertices become sources and the forest is 2-colored with its
  edges pointing to color 2. Singly connected when the girth is >= 5.
* Strongly distance-hereditary graphs: every block is bipartite or a triangle.
  Bipartite blocks are oriented from one side to the other, triangles
  cyclically.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .core import biconnected_blocks, bipartition
from .errors import ImproperColoring, InvalidPartition, ParseError, RestrictionViolated
from .graph import Coloring, Orientation, UndirectedGraph, canon
from .patterns import DIAMOND, DOMINO, GEM, HOLE, HOUSE, PatternMatch, find_pattern

FVS_EXHAUSTIVE_MAX_N = 20


def orient_by_coloring(g: UndirectedGraph, c: Coloring) -> Orientation:
    if len(c.colors) != g.n or not c.is_proper(g):
        raise ImproperColoring("coloring is not proper on this graph")
    heads = {}
    for u, v in g.edges:
        heads[(u, v)] = v if c.colors[v] > c.colors[u] else u
    return Orientation(g, heads)


# -- near-bipartite -----------------------------------------------------------

@dataclass(frozen=True)
class NearBipartitePartition:
    I: frozenset[int]
    F: frozenset[int]

    def validate(self, g: UndirectedGraph) -> None:
        if self.I & self.F or (self.I | self.F) != frozenset(range(g.n)):
            raise InvalidPartition("I and F must partition the vertex set")
        for u in self.I:
            if g.adj[u] & self.I:
                raise InvalidPartition(f"I is not independent at vertex {u}")
        if _find_cycle(g, self.F) is not None:
            raise InvalidPartition("F does not induce a forest")


def _find_cycle(g: UndirectedGraph, allowed: Iterable[int]) -> Optional[list[int]]:
    """Some cycle of ``g[allowed]`` as a vertex list, or None for a forest."""
    allowed = set(allowed)
    parent: dict[int, int] = {}
    for root in sorted(allowed):
        if root in parent:
            continue
        parent[root] = -1
        stack = [root]
        while stack:
            x = stack.pop()
            for y in sorted(g.adj[x]):
                if y not in allowed or y == parent[x]:
                    continue
                if y in parent:
                    # x and y are both in the tree; walk up to their meeting point
                    px, py = [x], [y]
                    ax = set()
                    z = x
                    while z != -1:
                        ax.add(z)
                        z = parent[z]
                    z = y
                    while z not in ax:
                        z = parent[z]
                        py.append(z)
                    meet = z
                    z = x
                    while z != meet:
                        z = parent[z]
                        px.append(z)
                    return px + py[-2::-1]
                parent[y] = x
                stack.append(y)
    return None


def orient_near_bipartite(g: UndirectedGraph, p: NearBipartitePartition) -> Orientation:
    p.validate(g)
    forest, old = g.induced(sorted(p.F))
    sides, _ = bipartition(forest)
    color = {old[i]: sides.colors[i] for i in range(forest.n)}
    heads = {}
    for u, v in g.edges:
        if u in p.I:
            heads[(u, v)] = v
        elif v in p.I:
            heads[(u, v)] = u
        else:
            heads[(u, v)] = v if color[v] == 2 else u
    return Orientation(g, heads)


def find_independent_fvs(g: UndirectedGraph) -> Optional[NearBipartitePartition]:
    """An independent feedback vertex set, by branching on the vertices of a cycle."""

    def rec(I: frozenset[int]) -> Optional[frozenset[int]]:
        cyc = _find_cycle(g, set(range(g.n)) - I)
        if cyc is None:
            return I
        for v in sorted(cyc):
            if not g.adj[v] & I:
                hit = rec(I | {v})
                if hit is not None:
                    return hit
        return None

    I = rec(frozenset())
    if I is None:
        return None
    return NearBipartitePartition(I, frozenset(range(g.n)) - I)


def iter_independent_fvs(g: UndirectedGraph) -> Iterator[NearBipartitePartition]:
    """Every independent feedback vertex set (exhaustive, small graphs only)."""
    if g.n > FVS_EXHAUSTIVE_MAX_N:
        raise InvalidPartition(f"exhaustive search limited to {FVS_EXHAUSTIVE_MAX_N} vertices")
    everything = frozenset(range(g.n))
    for r in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), r):
            I = frozenset(combo)
            if any(g.adj[u] & I for u in I):
                continue
            if _find_cycle(g, everything - I) is None:
                yield NearBipartitePartition(I, everything - I)


# -- distance-hereditary ------------------------------------------------------

@dataclass(frozen=True)
class DhClassification:
    is_distance_hereditary: bool
    is_strongly_dh: bool
    per_block: tuple[str, ...]
    obstruction: Optional[PatternMatch]

    @property
    def blocks_ok(self) -> bool:
        return all(t in ("Bipartite", "Triangle") for t in self.per_block)


def block_tags(g: UndirectedGraph) -> tuple[str, ...]:
    dec = biconnected_blocks(g)
    tags = []
    for i, verts in enumerate(dec.blocks):
        sub, _ = g.induced(verts)
        if sub.n == 3 and sub.m == 3:
            tags.append("Triangle")
        elif bipartition(sub)[0] is not None:
            tags.append("Bipartite")
        else:
            tags.append("Other")
    return tuple(tags)


def _first_induced(g, patterns) -> Optional[PatternMatch]:
    for p in patterns:
        hit = find_pattern(g, p, induced=True)
        if hit is not None:
            return hit
    return None


def classify_dh(g: UndirectedGraph) -> DhClassification:
    """Distance-hereditary: no induced house, hole, domino or gem.

    Strongly DH: no induced house, hole or domino and no diamond subgraph at
    all. An induced-only diamond test would accept K4, whose block is neither
    bipartite nor a triangle.
    """
    shared = _first_induced(g, (HOUSE, HOLE, DOMINO))
    if shared is not None:
        dh_hit = strong_hit = shared
    else:
        dh_hit = _first_induced(g, (GEM,))
        strong_hit = find_pattern(g, DIAMOND, induced=False)
    tags = block_tags(g)
    is_dh = dh_hit is None
    strong = strong_hit is None
    blocks_ok = all(t in ("Bipartite", "Triangle") for t in tags)
    assert strong == (is_dh and blocks_ok), "pattern and block criteria disagree"
    return DhClassification(is_dh, strong, tags, strong_hit)


def orient_blocks(g: UndirectedGraph) -> Optional[Orientation]:
    """Bipartite blocks side to side, triangle blocks cyclic; None if another block exists."""
    dec = biconnected_blocks(g)
    heads = {}
    for i, verts in enumerate(dec.blocks):
        edges = dec.block_edges(i)
        if not edges:
            continue
        sub, old = g.induced(verts)
        if sub.n == 3 and sub.m == 3:
            a, b, c = old
            for x, y in ((a, b), (b, c), (c, a)):
                heads[canon(x, y)] = y
            continue
        sides, _ = bipartition(sub)
        if sides is None:
            return None
        # part A holds the block's lowest vertex; every edge goes A -> B
        a_side = sides.colors[0]
        for u, v in edges:
            iu = old.index(u)
            heads[(u, v)] = v if sides.colors[iu] == a_side else u
    return Orientation(g, heads)


def orient_strongly_dh(g: UndirectedGraph, require_dh: bool = True) -> Optional[Orientation]:
    """Block orientation of a strongly distance-hereditary graph.

    With ``require_dh`` (default) the graph must also be distance-hereditary,
    so the result is present exactly for strongly distance-hereditary graphs.
    With ``require_dh=False`` any graph whose blocks are all bipartite or
    triangles is oriented (the domino, for instance).
    """
    if require_dh and not classify_dh(g).is_strongly_dh:
        return None
    return orient_blocks(g)


# -- build scripts ------------------------------------------------------------

SdhOp = tuple[str, int]


def parse_sdh_script(text: str) -> list[SdhOp]:
    """Ops ``P u`` / ``T u`` / ``F u`` separated by newlines or semicolons."""
    ops = []
    for i, item in enumerate(re.split(r"[;\n]", text)):
        item = item.split("#", 1)[0].strip()
        if not item:
            continue
        m = re.fullmatch(r"([PTFptf])\s+(\d+)", item)
        if not m:
            raise ParseError(f"bad build op {item!r}", i + 1)
        ops.append((m.group(1).upper(), int(m.group(2))))
    return ops


def build_sdh(script: Sequence[SdhOp] | str) -> UndirectedGraph:
    if isinstance(script, str):
        script = parse_sdh_script(script)
    n = 1
    adj: list[set[int]] = [set()]
    for step, (op, u) in enumerate(script):
        op = op.upper()[0]
        if not 0 <= u < n:
            raise RestrictionViolated(step, f"vertex {u} does not exist yet")
        if op == "P":
            nb = {u}
        elif op == "T":
            if len(adj[u]) != 1:
                raise RestrictionViolated(step, f"true twin needs |N({u})| = 1, got {len(adj[u])}")
            nb = adj[u] | {u}
        elif op == "F":
            if any(adj[x] & adj[u] for x in adj[u]):
                raise RestrictionViolated(step, f"false twin needs N({u}) independent")
            nb = set(adj[u])
        else:
            raise RestrictionViolated(step, f"unknown op {op!r}")
        adj.append(set(nb))
        for x in nb:
            adj[x].add(n)
        n += 1
    edges = [(x, y) for x in range(n) for y in adj[x] if x < y]
    return UndirectedGraph.from_edges(n, edges)
