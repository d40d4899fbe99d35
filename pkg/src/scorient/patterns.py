"""Search for small fixed patterns (diamond, house, gem, domino, holes, grids).

Matching is backtracking over pattern vertices in BFS order: each new pattern
vertex is drawn from the common neighbourhood of its already-mapped pattern
neighbours, with a degree filter. Holes of unbounded length use a dedicated
search: every hole of length >= 5 contains an induced P4 ``x1 x2 x3 x4``, and a
shortest x4-x1 path avoiding the closed neighbourhoods of x2 and x3 closes it
into a hole.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional

from . import named
from .errors import BadParameter
from .graph import UndirectedGraph


@dataclass(frozen=True)
class PatternKind:
    name: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.name not in ("diamond", "house", "gem", "domino", "hole", "triangle", "grid", "cycle"):
            raise BadParameter(f"unknown pattern {self.name!r}")
        if self.name == "hole" and self.params and self.params[0] < 5:
            raise BadParameter("hole length must be >= 5")

    @classmethod
    def parse(cls, text: str) -> "PatternKind":
        m = re.fullmatch(r"\s*([a-z]+)\s*(?:\(([\d,\s]*)\))?\s*", text.lower())
        if not m:
            raise BadParameter(f"bad pattern {text!r}")
        params = tuple(int(x) for x in (m.group(2) or "").split(",") if x.strip())
        return cls(m.group(1), params)

    def graph(self) -> UndirectedGraph:
        if self.name == "grid":
            return named.grid(*self.params)
        if self.name in ("cycle", "hole"):
            return named.cycle(self.params[0])
        return named.make_named_graph(self.name)

    def __str__(self):
        if self.params:
            return f"{self.name}({','.join(map(str, self.params))})"
        return self.name


DIAMOND = PatternKind("diamond")
HOUSE = PatternKind("house")
GEM = PatternKind("gem")
DOMINO = PatternKind("domino")
HOLE = PatternKind("hole")
TRIANGLE = PatternKind("triangle")


@dataclass(frozen=True)
class PatternMatch:
    """``vertices[i]`` is the host vertex playing pattern vertex ``i``."""

    kind: PatternKind
    vertices: tuple[int, ...]
    induced: bool


def _search_order(p: UndirectedGraph) -> list[int]:
    order: list[int] = []
    seen = set()
    for start in sorted(range(p.n), key=lambda v: (-p.degree(v), v)):
        if start in seen:
            continue
        seen.add(start)
        q = deque([start])
        while q:
            x = q.popleft()
            order.append(x)
            for y in sorted(p.adj[x], key=lambda v: (-p.degree(v), v)):
                if y not in seen:
                    seen.add(y)
                    q.append(y)
    return order


def iter_embeddings(g: UndirectedGraph, p: UndirectedGraph, induced: bool) -> Iterator[tuple[int, ...]]:
    """All injective maps of pattern ``p`` into ``g`` preserving edges (and non-edges if induced)."""
    k = p.n
    if k > g.n:
        return
    order = _search_order(p)
    earlier = []
    for i, pv in enumerate(order):
        prev = set(order[:i])
        earlier.append(([u for u in p.adj[pv] if u in prev],
                        [u for u in prev if u not in p.adj[pv]]))
    image = [-1] * k
    used = set()

    def rec(i):
        if i == k:
            yield tuple(image)
            return
        pv = order[i]
        nb, non = earlier[i]
        if nb:
            cands = set(g.adj[image[nb[0]]])
            for u in nb[1:]:
                cands &= g.adj[image[u]]
        else:
            cands = range(g.n)
        need = p.degree(pv)
        for t in sorted(cands):
            if t in used or g.degree(t) < need:
                continue
            if induced and any(g.has_edge(t, image[u]) for u in non):
                continue
            image[pv] = t
            used.add(t)
            yield from rec(i + 1)
            used.discard(t)
            image[pv] = -1

    yield from rec(0)


def find_hole(g: UndirectedGraph, induced: bool = True) -> Optional[list[int]]:
    """A chordless cycle of length >= 5 (or, non-induced, any cycle of length >= 5)."""
    if not induced:
        return _long_cycle(g, 5)
    adj = g.adj
    for x2 in range(g.n):
        for x3 in sorted(adj[x2]):
            closed = adj[x2] | adj[x3] | {x2, x3}
            for x1 in sorted(adj[x2] - adj[x3] - {x3}):
                for x4 in sorted(adj[x3] - adj[x2] - {x2}):
                    if x1 == x4 or x4 in adj[x1]:
                        continue
                    banned = closed - {x1, x4}
                    path = _bfs_path(g, x4, x1, banned)
                    if path is not None:
                        # path runs x4 ... x1; its interior closes the cycle
                        return [x1, x2, x3] + path
    return None


def _bfs_path(g, s, t, banned) -> Optional[list[int]]:
    prev = {s: None}
    q = deque([s])
    while q:
        x = q.popleft()
        if x == t:
            out = []
            while x is not None:
                out.append(x)
                x = prev[x]
            return out[::-1][:-1]
        for y in sorted(g.adj[x]):
            if y not in prev and y not in banned:
                prev[y] = x
                q.append(y)
    return None


def _long_cycle(g: UndirectedGraph, min_len: int) -> Optional[list[int]]:
    for s in range(g.n):
        path = [s]
        on = {s}

        def dfs(x):
            for y in sorted(g.adj[x]):
                if y == s and len(path) >= min_len:
                    return True
                if y > s and y not in on:
                    path.append(y)
                    on.add(y)
                    if dfs(y):
                        return True
                    path.pop()
                    on.discard(y)
            return False

        if dfs(s):
            return list(path)
    return None


def find_pattern(g: UndirectedGraph, p: PatternKind | str, induced: bool = True) -> Optional[PatternMatch]:
    if isinstance(p, str):
        p = PatternKind.parse(p)
    if p.name == "hole" and not p.params:
        cyc = find_hole(g, induced)
        return None if cyc is None else PatternMatch(p, tuple(cyc), induced)
    for emb in iter_embeddings(g, p.graph(), induced):
        return PatternMatch(p, emb, induced)
    return None


def has_pattern(g: UndirectedGraph, p: PatternKind | str, induced: bool = True) -> bool:
    return find_pattern(g, p, induced) is not None


def find_triangle(g: UndirectedGraph) -> Optional[tuple[int, int, int]]:
    for u, v in g.edge_list():
        common = g.adj[u] & g.adj[v]
        if common:
            return (u, v, min(common))
    return None
