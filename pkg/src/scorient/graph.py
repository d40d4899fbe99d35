"""Immutable graph value types.

Vertices are dense integer ids ``0..n-1``. Undirected edges are stored as
``(u, v)`` tuples with ``u < v``; arcs are ordered ``(tail, head)`` tuples.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from .errors import FormatViolation, ScorientError

Edge = tuple[int, int]
Arc = tuple[int, int]


def canon(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    edges: frozenset[Edge]
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise FormatViolation("negative vertex count")
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise FormatViolation(f"bad edge ({u}, {v}) for n={self.n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], *, strict: bool = True) -> "UndirectedGraph":
        """Build a graph; with ``strict`` loops and repeated edges raise FormatViolation."""
        seen: set[Edge] = set()
        for u, v in edges:
            if u == v:
                if strict:
                    raise FormatViolation(f"self-loop at {u}")
                continue
            e = canon(u, v)
            if e in seen and strict:
                raise FormatViolation(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def edge_list(self) -> list[Edge]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def induced(self, vertices: Iterable[int]) -> tuple["UndirectedGraph", list[int]]:
        """Induced subgraph relabelled densely; also returns new->old ids."""
        old = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(old)}
        es = [(pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos]
        return UndirectedGraph.from_edges(len(old), es), old

    def without_edge(self, u: int, v: int) -> "UndirectedGraph":
        return UndirectedGraph(self.n, self.edges - {canon(u, v)})

    def disjoint_union(self, other: "UndirectedGraph") -> "UndirectedGraph":
        off = self.n
        es = set(self.edges) | {(u + off, v + off) for u, v in other.edges}
        return UndirectedGraph(self.n + other.n, frozenset(es))

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


@dataclass(frozen=True)
class DirectedGraph:
    n: int
    arcs: frozenset[Arc]
    out: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    inc: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        outs: list[list[int]] = [[] for _ in range(self.n)]
        ins: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.arcs:
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise FormatViolation(f"bad arc ({u}, {v}) for n={self.n}")
            outs[u].append(v)
            ins[v].append(u)
        object.__setattr__(self, "out", tuple(tuple(sorted(x)) for x in outs))
        object.__setattr__(self, "inc", tuple(tuple(sorted(x)) for x in ins))

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Arc]) -> "DirectedGraph":
        arcs = list(arcs)
        s = frozenset(arcs)
        if len(s) != len(arcs):
            raise FormatViolation("duplicate arc")
        return cls(n, s)

    def reverse(self) -> "DirectedGraph":
        return DirectedGraph(self.n, frozenset((v, u) for u, v in self.arcs))

    def arc_list(self) -> list[Arc]:
        return sorted(self.arcs)

    def underlying(self) -> UndirectedGraph:
        return UndirectedGraph.from_edges(self.n, self.arcs, strict=False)


@dataclass(frozen=True)
class Orientation:
    """A head endpoint for every edge of ``graph``."""

    graph: UndirectedGraph
    heads: Mapping[Edge, int]

    def __post_init__(self):
        if set(self.heads) != set(self.graph.edges):
            raise ScorientError("orientation domain differs from the edge set")
        for e, h in self.heads.items():
            if h not in e:
                raise ScorientError(f"head {h} is not an endpoint of {e}")

    @classmethod
    def from_arcs(cls, graph: UndirectedGraph, arcs: Iterable[Arc]) -> "Orientation":
        return cls(graph, {canon(u, v): v for u, v in arcs})

    def head(self, u: int, v: int) -> int:
        return self.heads[canon(u, v)]

    def arcs(self) -> list[Arc]:
        return sorted((e[0] if h == e[1] else e[1], h) for e, h in self.heads.items())

    def iter_arcs(self) -> Iterator[Arc]:
        for (a, b), h in self.heads.items():
            yield (a, b) if h == b else (b, a)

    def digraph(self) -> DirectedGraph:
        return DirectedGraph(self.graph.n, frozenset(self.iter_arcs()))

    def reversed(self) -> "Orientation":
        return Orientation(self.graph, {e: (e[0] if h == e[1] else e[1]) for e, h in self.heads.items()})


@dataclass(frozen=True)
class Coloring:
    """Proper coloring with colors ``1..k``; ``colors[v]`` is the color of v."""

    colors: tuple[int, ...]
    k: int

    def is_proper(self, g: UndirectedGraph) -> bool:
        return all(self.colors[u] != self.colors[v] for u, v in g.edges)
