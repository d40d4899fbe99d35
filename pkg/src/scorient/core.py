"""Classical subroutines on undirected graphs.

Girth, exact coloring, cliques, blocks, bipartition and vertex contraction.
Everything here is a pure function of an :class:`UndirectedGraph`.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DisconnectedContractionSet
from .graph import Coloring, Edge, UndirectedGraph, canon

INF = math.inf


def girth(g: UndirectedGraph) -> float:
    """Length of a shortest cycle, ``math.inf`` for forests."""
    best = INF
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        q = deque([root])
        while q:
            x = q.popleft()
            if 2 * dist[x] + 1 >= best:
                break
            for y in g.adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y:
                    best = min(best, dist[x] + dist[y] + 1)
    return best


# -- coloring -----------------------------------------------------------------

def greedy_coloring(g: UndirectedGraph) -> Coloring:
    """DSATUR greedy coloring; an upper bound on the chromatic number."""
    n = g.n
    colors = [0] * n
    sat: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if not colors[u]),
                key=lambda u: (len(sat[u]), g.degree(u), -u))
        c = 1
        while c in sat[v]:
            c += 1
        colors[v] = c
        for w in g.adj[v]:
            sat[w].add(c)
    return Coloring(tuple(colors), max(colors, default=1))


def max_clique(g: UndirectedGraph) -> list[int]:
    """A maximum clique (Bron-Kerbosch with pivoting)."""
    best: list[int] = []

    def expand(r: list[int], p: set[int], x: set[int]):
        nonlocal best
        if not p and not x:
            if len(r) > len(best):
                best = list(r)
            return
        if len(r) + len(p) <= len(best):
            return
        pivot = max(p | x, key=lambda u: len(g.adj[u] & p))
        for v in sorted(p - g.adj[pivot]):
            expand(r + [v], p & g.adj[v], x & g.adj[v])
            p = p - {v}
            x = x | {v}

    expand([], set(range(g.n)), set())
    return sorted(best)


def clique_number(g: UndirectedGraph) -> int:
    return len(max_clique(g))


def chromatic_number(g: UndirectedGraph, max_k: int) -> Optional[tuple[int, Coloring]]:
    """Exact chromatic number with a witness, or ``None`` if it exceeds ``max_k``.

    DSATUR branch and bound seeded with the greedy upper bound and a maximum
    clique as lower bound. Two-colorability is settled by BFS directly.
    """
    if max_k < 1:
        raise ValueError("max_k must be >= 1")
    n = g.n
    if n == 0:
        return 1, Coloring((), 1)
    if g.m == 0:
        return 1, Coloring((1,) * n, 1)
    sides, _ = bipartition(g)
    if sides is not None:
        return (2, sides) if max_k >= 2 else None
    clique = max_clique(g)
    lower = max(3, len(clique))
    if lower > max_k:
        return None
    greedy = greedy_coloring(g)
    if greedy.k == lower:
        return greedy.k, greedy
    best_k = greedy.k if greedy.k <= max_k else max_k + 1
    best = list(greedy.colors) if greedy.k <= max_k else None

    colors = [0] * n
    # Pre-color the clique: a symmetry break that loses no optimal solution.
    for i, v in enumerate(clique):
        colors[v] = i + 1
    # count[v][c] = number of neighbours of v carrying color c
    count = [[0] * (best_k + 2) for _ in range(n)]
    for v in clique:
        for w in g.adj[v]:
            count[w][colors[v]] += 1
    satur = [sum(1 for c in row if c) for row in count]

    def assign(v, c, sign):
        for w in g.adj[v]:
            row = count[w]
            if sign > 0:
                if row[c] == 0:
                    satur[w] += 1
                row[c] += 1
            else:
                row[c] -= 1
                if row[c] == 0:
                    satur[w] -= 1

    def search(uncolored: int, used: int):
        nonlocal best_k, best
        if uncolored == 0:
            best_k, best = used, list(colors)
            return best_k == lower
        v = -1
        key = None
        for u in range(n):
            if not colors[u]:
                k2 = (satur[u], g.degree(u))
                if key is None or k2 > key:
                    v, key = u, k2
        for c in range(1, min(used + 1, best_k - 1) + 1):
            if count[v][c]:
                continue
            colors[v] = c
            assign(v, c, +1)
            done = search(uncolored - 1, max(used, c))
            assign(v, c, -1)
            colors[v] = 0
            if done:
                return True
        return False

    search(n - len(clique), len(clique))
    if best is None or best_k > max_k:
        return None
    return best_k, Coloring(tuple(best), best_k)


def is_k_colorable(g: UndirectedGraph, k: int) -> bool:
    return chromatic_number(g, k) is not None


# -- blocks -------------------------------------------------------------------

@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    edge_to_block: dict

    def block_edges(self, i: int) -> list[Edge]:
        return sorted(e for e, b in self.edge_to_block.items() if b == i)


def biconnected_blocks(g: UndirectedGraph) -> BlockDecomposition:
    """Blocks and cut vertices (iterative Hopcroft-Tarjan with an edge stack)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    blocks: list[tuple[int, ...]] = []
    block_edge_sets: list[list[Edge]] = []
    cuts: set[int] = set()
    t = 0
    nbrs = [sorted(g.adj[v]) for v in range(n)]
    for root in range(n):
        if disc[root] != -1:
            continue
        if not nbrs[root]:
            disc[root] = t
            t += 1
            blocks.append((root,))
            block_edge_sets.append([])
            continue
        disc[root] = low[root] = t
        t += 1
        root_children = 0
        edge_stack: list[Edge] = []
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(nbrs[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if not stack:
                continue
            p = stack[-1][0]
            low[p] = min(low[p], low[v])
            if low[v] >= disc[p]:
                if p == root:
                    root_children += 1
                else:
                    cuts.add(p)
                comp_edges = []
                while True:
                    e = edge_stack.pop()
                    comp_edges.append(canon(*e))
                    if e == (p, v):
                        break
                verts = sorted({x for e in comp_edges for x in e})
                blocks.append(tuple(verts))
                block_edge_sets.append(comp_edges)
        if root_children >= 2:
            cuts.add(root)
    order = sorted(range(len(blocks)), key=lambda i: blocks[i])
    edge_to_block = {}
    for new, old in enumerate(order):
        for e in block_edge_sets[old]:
            edge_to_block[e] = new
    return BlockDecomposition(tuple(blocks[i] for i in order), frozenset(cuts), edge_to_block)


# -- bipartition --------------------------------------------------------------

def bipartition(g: UndirectedGraph) -> tuple[Optional[Coloring], Optional[list[int]]]:
    """``(coloring, None)`` with colors {1, 2} if bipartite, else ``(None, odd_cycle)``."""
    side = [0] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if side[root]:
            continue
        side[root] = 1
        q = deque([root])
        while q:
            x = q.popleft()
            for y in sorted(g.adj[x]):
                if not side[y]:
                    side[y] = 3 - side[x]
                    parent[y] = x
                    depth[y] = depth[x] + 1
                    q.append(y)
                elif side[y] == side[x]:
                    return None, _odd_cycle(x, y, parent, depth)
    return Coloring(tuple(side), 2), None


def _odd_cycle(x, y, parent, depth) -> list[int]:
    left, right = [x], [y]
    while depth[x] > depth[y]:
        x = parent[x]
        left.append(x)
    while depth[y] > depth[x]:
        y = parent[y]
        right.append(y)
    while x != y:
        x, y = parent[x], parent[y]
        left.append(x)
        right.append(y)
    return left + right[-2::-1]


# -- contraction --------------------------------------------------------------

def identify(g: UndirectedGraph, groups: Iterable[Sequence[int]]) -> tuple[UndirectedGraph, list[int]]:
    """Merge each vertex group into one vertex (loops dropped, parallels merged).

    The merged vertex takes the position of the group's smallest member;
    returns the new graph and the old->new vertex mapping.
    """
    rep = list(range(g.n))
    for grp in groups:
        grp = sorted(set(grp))
        for v in grp:
            rep[v] = grp[0]
    keep = [v for v in range(g.n) if rep[v] == v]
    pos = {v: i for i, v in enumerate(keep)}
    mapping = [pos[rep[v]] for v in range(g.n)]
    es = {canon(mapping[u], mapping[v]) for u, v in g.edges if mapping[u] != mapping[v]}
    return UndirectedGraph(len(keep), frozenset(es)), mapping


def contract(g: UndirectedGraph, s: Iterable[int]) -> tuple[UndirectedGraph, list[int]]:
    """Contract the connected vertex set ``s`` into a single vertex."""
    s = sorted(set(s))
    if not s:
        raise DisconnectedContractionSet("empty contraction set")
    inside = set(s)
    seen = {s[0]}
    stack = [s[0]]
    while stack:
        x = stack.pop()
        for y in g.adj[x]:
            if y in inside and y not in seen:
                seen.add(y)
                stack.append(y)
    if seen != inside:
        raise DisconnectedContractionSet(f"{s} does not induce a connected subgraph")
    return identify(g, [s])
