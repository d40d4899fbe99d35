"""Exact SC-orientation: preprocessing, block-wise search, lifting, naive oracle.

Pipeline of :func:`decide_sc_orientable`:

1. ``preprocess``: a graph containing a diamond or a house (as a subgraph) is
   a no-instance. Otherwise one triangle is contracted and the scan repeats
   until the graph is triangle-free.
2. The reduced graph is split into biconnected blocks. Two distinct s-t paths
   first diverge and then reconverge; the two pieces in between form a cycle,
   which lies inside one block. Hence an orientation is singly connected iff
   its restriction to every block is, and blocks are solved independently.
3. A triangle-free block is searched over acyclic orientations only. In such
   an orientation every 4-cycle alternates (each vertex is a source or sink on
   it), which ties the edges of a 4-cycle together. Edges are grouped into
   classes by these ties with a parity union-find, and the search branches
   per class with incremental reachability bitsets.
4. Contractions are undone newest-first and the result is re-verified.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from .check import check_singly_connected, first_violation
from .core import biconnected_blocks, contract
from .errors import InconsistentTranscript, NotSinglyConnected, TooLarge
from .graph import Orientation, UndirectedGraph, canon
from .patterns import DIAMOND, HOUSE, PatternMatch, find_pattern, find_triangle

NAIVE_MAX_EDGES = 24


@dataclass(frozen=True)
class ContractionRecord:
    """One triangle contraction: ``triangle`` (ids before) merged into ``merged`` (id after)."""

    before: UndirectedGraph
    triangle: tuple[int, int, int]
    mapping: tuple[int, ...]
    merged: int


@dataclass(frozen=True)
class PreprocessResult:
    status: str  # "EarlyNo" or "Reduced"
    reduced_graph: UndirectedGraph
    transcript: tuple[ContractionRecord, ...]
    obstruction: Optional[PatternMatch] = None

    @property
    def early_no(self) -> bool:
        return self.status == "EarlyNo"


@dataclass
class SolveStats:
    nodes: int = 0
    prunes: int = 0
    blocks: int = 0


@dataclass(frozen=True)
class SolveResult:
    orientable: bool
    orientation: Optional[Orientation]
    stats: SolveStats = field(default_factory=SolveStats)
    preprocess: Optional[PreprocessResult] = None
    method: str = "solver"


# -- preprocessing ------------------------------------------------------------

def find_obstruction(g: UndirectedGraph) -> Optional[PatternMatch]:
    """A diamond or house contained in ``g`` as a (not necessarily induced) subgraph."""
    for p in (DIAMOND, HOUSE):
        hit = find_pattern(g, p, induced=False)
        if hit is not None:
            return hit
    return None


def preprocess(g: UndirectedGraph) -> PreprocessResult:
    cur = g
    transcript: list[ContractionRecord] = []
    while True:
        tri = find_triangle(cur)
        if tri is None:
            # diamonds and houses both contain a triangle
            return PreprocessResult("Reduced", cur, tuple(transcript))
        hit = find_obstruction(cur)
        if hit is not None:
            return PreprocessResult("EarlyNo", cur, tuple(transcript), hit)
        nxt, mapping = contract(cur, tri)
        transcript.append(ContractionRecord(cur, tri, tuple(mapping), mapping[tri[0]]))
        cur = nxt


# -- lifting ------------------------------------------------------------------

def lift_orientation(transcript, o: Orientation) -> Orientation:
    """Undo contractions newest-first, orienting every restored triangle cyclically."""
    for rec in reversed(tuple(transcript)):
        before = rec.before
        if o.graph.n != max(rec.mapping, default=-1) + 1:
            raise InconsistentTranscript("orientation does not live on the contracted graph")
        tri = set(rec.triangle)
        heads: dict = {}
        for e in before.edges:
            u, v = e
            if u in tri and v in tri:
                continue
            mu, mv = rec.mapping[u], rec.mapping[v]
            key = canon(mu, mv)
            if key not in o.heads:
                raise InconsistentTranscript(f"edge {key} missing from the reduced orientation")
            h = o.heads[key]
            heads[e] = v if h == mv else u
        a, b, c = sorted(rec.triangle)
        for x, y in ((a, b), (b, c), (c, a)):
            heads[canon(x, y)] = y
        # an edge x-z of the contracted graph must come from a unique triangle vertex
        for x in range(before.n):
            if x not in tri and len(before.adj[x] & tri) > 1:
                raise InconsistentTranscript(f"vertex {x} sees several triangle vertices")
        o = Orientation(before, heads)
    return o


# -- block search -------------------------------------------------------------

class _ParityUF:
    def __init__(self, k):
        self.parent = list(range(k))
        self.par = [0] * k

    def find(self, x):
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        root, acc = x, 0
        for y in reversed(path):
            acc ^= self.par[y]
            self.par[y] = acc
            self.parent[y] = root
        return root

    def parity(self, x):
        self.find(x)
        return self.par[x]

    def union(self, a, b, r) -> bool:
        """Require X_a xor X_b == r; False on contradiction."""
        ra, rb = self.find(a), self.find(b)
        pa, pb = self.parity(a), self.parity(b)
        if ra == rb:
            return (pa ^ pb) == r
        self.parent[rb] = ra
        self.par[rb] = pa ^ pb ^ r
        return True


def _edge_classes(n, edges, adj):
    """Group edges by the 4-cycle alternation ties; None on contradiction.

    ``X_e = 0`` means edge ``e = (lo, hi)`` points lo -> hi. Returns a list of
    classes, each a list of ``(edge_index, parity)`` with ``X_e = parity xor b``.
    """
    idx = {e: i for i, e in enumerate(edges)}
    uf = _ParityUF(len(edges))

    def bit(x, y):  # value of X on edge {x,y} when it points x -> y
        return 0 if x < y else 1

    for a in range(n):
        nb = sorted(adj[a])
        for i, b in enumerate(nb):
            for d in nb[i + 1:]:
                for c in adj[b] & adj[d]:
                    if c == a or c < a:
                        continue
                    # a-b-c-d alternates: a->b <=> c->b <=> c->d <=> a->d
                    eab, ecb = idx[canon(a, b)], idx[canon(c, b)]
                    ecd, ead = idx[canon(c, d)], idx[canon(a, d)]
                    if not (uf.union(eab, ecb, bit(a, b) ^ bit(c, b))
                            and uf.union(ecb, ecd, bit(c, b) ^ bit(c, d))
                            and uf.union(ecd, ead, bit(c, d) ^ bit(a, d))):
                        return None
    groups: dict[int, list] = {}
    for i in range(len(edges)):
        groups.setdefault(uf.find(i), []).append((i, uf.parity(i)))
    return list(groups.values())


def _order_classes(classes, edges, deg):
    """Largest class first, then greedily the class most attached to covered vertices."""
    todo = list(range(len(classes)))
    verts = [{x for i, _ in c for x in edges[i]} for c in classes]
    weight = [max(min(deg[u], deg[v]) for u, v in (edges[i] for i, _ in c)) for c in classes]
    covered: set[int] = set()
    order = []
    while todo:
        best = max(todo, key=lambda j: (len(verts[j] & covered), len(classes[j]), weight[j], -j))
        todo.remove(best)
        order.append(best)
        covered |= verts[best]
    return [classes[j] for j in order]


def _bits(x):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _solve_block(n, edges, stats: SolveStats) -> Optional[list[tuple[int, int]]]:
    """Acyclic sc-orientation of a triangle-free block, as arcs; None if none exists."""
    if not edges:
        return []
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    classes = _edge_classes(n, edges, adj)
    if classes is None:
        stats.prunes += 1
        return None
    deg = [len(a) for a in adj]
    classes = _order_classes(classes, edges, deg)

    R = [0] * n  # strict descendants
    A = [0] * n  # strict ancestors
    trail: list[tuple[int, int, int]] = []  # (which, vertex, old value)

    def insert(u, v) -> bool:
        if (R[v] >> u) & 1:
            return False
        anc = A[u] | (1 << u)
        desc = R[v] | (1 << v)
        for s in _bits(anc):
            if R[s] & desc:
                return False
        for s in _bits(anc):
            trail.append((0, s, R[s]))
            R[s] |= desc
        for t in _bits(desc):
            trail.append((1, t, A[t]))
            A[t] |= anc
        return True

    def undo(mark):
        while len(trail) > mark:
            which, x, old = trail.pop()
            (R if which == 0 else A)[x] = old

    def arcs_of(cls, b):
        for i, p in cls:
            lo, hi = edges[i]
            yield (lo, hi) if (p ^ b) == 0 else (hi, lo)

    # iterative DFS; the first class is fixed to value 0 (global reversal symmetry)
    k = len(classes)
    choice = [-1] * k
    marks = [0] * k
    depth = 0
    while depth >= 0:
        if depth == k:
            out = []
            for cls, b in zip(classes, choice):
                out.extend(arcs_of(cls, b))
            return out
        choice[depth] += 1
        limit = 1 if depth == 0 else 2
        if choice[depth] >= limit:
            choice[depth] = -1
            depth -= 1
            if depth >= 0:
                undo(marks[depth])
            continue
        marks[depth] = len(trail)
        stats.nodes += 1
        if all(insert(u, v) for u, v in arcs_of(classes[depth], choice[depth])):
            depth += 1
        else:
            stats.prunes += 1
            undo(marks[depth])
    return None


def decide_sc_orientable(g: UndirectedGraph) -> SolveResult:
    stats = SolveStats()
    pre = preprocess(g)
    if pre.early_no:
        return SolveResult(False, None, stats, pre)
    red = pre.reduced_graph
    dec = biconnected_blocks(red)
    stats.blocks = len(dec.blocks)
    heads: dict = {}
    for bi, verts in enumerate(dec.blocks):
        bedges = dec.block_edges(bi)
        if not bedges:
            continue
        pos = {v: i for i, v in enumerate(verts)}
        local = [canon(pos[u], pos[v]) for u, v in bedges]
        arcs = _solve_block(len(verts), local, stats)
        if arcs is None:
            return SolveResult(False, None, stats, pre)
        for a, b in arcs:
            u, v = verts[a], verts[b]
            heads[canon(u, v)] = v
    o = lift_orientation(pre.transcript, Orientation(red, heads))
    if not check_singly_connected(o.digraph()):
        raise NotSinglyConnected("internal error: solver produced a non-sc orientation")
    return SolveResult(True, o, stats, pre)


# -- naive oracle -------------------------------------------------------------

def _closing_order(g: UndirectedGraph) -> list[tuple[int, int]]:
    """Edges ordered by BFS discovery so cycles close early."""
    pos = {}
    for comp in g.components():
        start = comp[0]
        order = [start]
        pos[start] = len(pos)
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for y in sorted(g.adj[x]):
                if y not in pos:
                    pos[y] = len(pos)
                    order.append(y)
    return sorted(g.edges, key=lambda e: (max(pos[e[0]], pos[e[1]]), min(pos[e[0]], pos[e[1]])))


def _search_orientations(g: UndirectedGraph, fix_first: bool, stats: SolveStats) -> Iterator[dict]:
    """All sc-orientations (as head maps), enumerated edge by edge.

    A partial orientation that already has two paths between some pair is cut:
    every completion keeps those paths. The leaves are exactly the
    orientations a plain 2^m scan would accept.
    """
    if g.m > NAIVE_MAX_EDGES:
        raise TooLarge(f"{g.m} edges exceed the enumeration guard of {NAIVE_MAX_EDGES}")
    edges = _closing_order(g)
    n = g.n
    out: list[list[int]] = [[] for _ in range(n)]
    inc: list[list[int]] = [[] for _ in range(n)]
    heads: dict = {}

    def ancestors(u):
        seen = {u}
        stack = [u]
        while stack:
            x = stack.pop()
            for y in inc[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return sorted(seen)

    def rec(i):
        if i == len(edges):
            yield dict(heads)
            return
        a, b = edges[i]
        options = ((a, b),) if (fix_first and i == 0) else ((a, b), (b, a))
        for u, v in options:
            stats.nodes += 1
            out[u].append(v)
            inc[v].append(u)
            if first_violation(n, out, ancestors(u)) is None:
                heads[edges[i]] = v
                yield from rec(i + 1)
                del heads[edges[i]]
            else:
                stats.prunes += 1
            out[u].pop()
            inc[v].pop()

    yield from rec(0)


def iter_sc_orientations(g: UndirectedGraph) -> Iterator[Orientation]:
    """Every sc-orientation of ``g`` (edge guard applies)."""
    for heads in _search_orientations(g, False, SolveStats()):
        yield Orientation(g, heads)


def naive_sc_orientable(g: UndirectedGraph) -> SolveResult:
    stats = SolveStats()
    for heads in _search_orientations(g, False, stats):
        return SolveResult(True, Orientation(g, heads), stats, method="naive")
    return SolveResult(False, None, stats, method="naive")


def count_sc_orientations(g: UndirectedGraph) -> int:
    if g.m == 0:
        return 1
    # reversing every arc is a bijection between the two halves
    return 2 * sum(1 for _ in _search_orientations(g, True, SolveStats()))
