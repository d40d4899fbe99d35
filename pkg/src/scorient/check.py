"""Singly-connectedness of digraphs: checker, independent oracles, cycle rewrite.

The main checker runs a DFS from every source. A digraph is singly connected
iff no such DFS meets a forward or cross arc; back arcs are harmless. Each
offending arc ``(u, w)`` yields two distinct simple paths to ``w``: the tree
path, and the tree path to ``u`` followed by the arc.

``oracle_singly_connected_flow`` is an independent check. Two distinct s-t
paths first diverge at some s' and next meet at some t'; their pieces between
s' and t' are internally vertex-disjoint. So a digraph is singly connected iff
no ordered pair admits two internally vertex-disjoint paths, which a
unit-capacity max flow on the vertex-split network decides.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

from .errors import NotSinglyConnected
from .graph import DirectedGraph


@dataclass(frozen=True)
class ScWitness:
    source: int
    target: int
    path1: tuple[int, ...]
    path2: tuple[int, ...]


@dataclass(frozen=True)
class Verdict:
    singly_connected: bool
    witness: Optional[ScWitness] = None

    def __bool__(self):
        return self.singly_connected


def _tree_path(parent, v):
    out = []
    while v != -1:
        out.append(v)
        v = parent[v]
    return out[::-1]


def first_violation(n: int, out, sources=None) -> Optional[ScWitness]:
    """DFS core of the checker over plain out-neighbour lists."""
    for s in (range(n) if sources is None else sources):
        if not out[s]:
            continue
        # state: 0 unseen, 1 on stack, 2 finished
        state = [0] * n
        parent = [-1] * n
        state[s] = 1
        stack = [(s, 0)]
        while stack:
            u, i = stack[-1]
            nbrs = out[u]
            if i == len(nbrs):
                stack.pop()
                state[u] = 2
                continue
            stack[-1] = (u, i + 1)
            w = nbrs[i]
            if state[w] == 0:
                state[w] = 1
                parent[w] = u
                stack.append((w, 0))
            elif state[w] == 2:
                p1 = _tree_path(parent, w)
                p2 = _tree_path(parent, u) + [w]
                return ScWitness(s, w, tuple(p1), tuple(p2))
    return None


def check_singly_connected(d: DirectedGraph) -> Verdict:
    w = first_violation(d.n, d.out)
    return Verdict(w is None, w)


def is_singly_connected(d: DirectedGraph) -> bool:
    return check_singly_connected(d).singly_connected


def replay_witness(d: DirectedGraph, w: ScWitness) -> bool:
    """True iff both witness paths are distinct simple directed s-t paths of ``d``."""
    for p in (w.path1, w.path2):
        if len(p) < 2 or p[0] != w.source or p[-1] != w.target or len(set(p)) != len(p):
            return False
        if any((a, b) not in d.arcs for a, b in zip(p, p[1:])):
            return False
    return w.path1 != w.path2


def _disjoint_paths_at_least_two(d: DirectedGraph, s: int, t: int) -> bool:
    # node x splits into x_in = 2x, x_out = 2x + 1; s and t are not split.
    cap: dict[tuple[int, int], int] = {}
    nbr: dict[int, set[int]] = {}

    def add(a, b):
        cap[(a, b)] = cap.get((a, b), 0) + 1
        cap.setdefault((b, a), 0)
        nbr.setdefault(a, set()).add(b)
        nbr.setdefault(b, set()).add(a)

    for x in range(d.n):
        if x not in (s, t):
            add(2 * x, 2 * x + 1)
    for u, v in d.arcs:
        if v == s or u == t:
            continue
        a = 2 * s + 1 if u == s else 2 * u + 1
        b = 2 * t if v == t else 2 * v
        add(a, b)
    src, snk = 2 * s + 1, 2 * t
    flow = 0
    while flow < 2:
        prev = {src: None}
        q = deque([src])
        while q and snk not in prev:
            x = q.popleft()
            for y in nbr.get(x, ()):
                if y not in prev and cap[(x, y)] > 0:
                    prev[y] = x
                    q.append(y)
        if snk not in prev:
            break
        y = snk
        while prev[y] is not None:
            x = prev[y]
            cap[(x, y)] -= 1
            cap[(y, x)] += 1
            y = x
        flow += 1
    return flow >= 2


def oracle_singly_connected_flow(d: DirectedGraph) -> bool:
    for s in range(d.n):
        for t in range(d.n):
            if s != t and _disjoint_paths_at_least_two(d, s, t):
                return False
    return True


def count_simple_paths(d: DirectedGraph, s: int, t: int, cap: int = 2) -> int:
    """Number of simple s-t paths, counting stops at ``cap``."""
    found = 0
    on = {s}

    def dfs(x):
        nonlocal found
        for y in d.out[x]:
            if found >= cap:
                return
            if y == t:
                found += 1
            elif y not in on:
                on.add(y)
                dfs(y)
                on.discard(y)

    dfs(s)
    return found


def oracle_singly_connected_paths(d: DirectedGraph) -> bool:
    """Brute force: every ordered pair has at most one simple path."""
    return all(count_simple_paths(d, s, t) <= 1
               for s in range(d.n) for t in range(d.n) if s != t)


# -- directed cycles ----------------------------------------------------------

def directed_cycles(d: DirectedGraph) -> list[tuple[int, ...]]:
    """All directed cycles of a singly connected digraph.

    In a singly connected digraph each arc (u, v) lies on at most one cycle:
    the arc plus the unique v-u path. Cycles are rotated to start at their
    smallest vertex.
    """
    found = set()
    for u, v in d.arc_list():
        prev = {v: None}
        q = deque([v])
        while q and u not in prev:
            x = q.popleft()
            for y in d.out[x]:
                if y not in prev:
                    prev[y] = x
                    q.append(y)
        if u not in prev:
            continue
        back = []
        x = u
        while x is not None:
            back.append(x)
            x = prev[x]
        cyc = back[::-1]  # v ... u, closed by the arc u -> v
        i = cyc.index(min(cyc))
        found.add(tuple(cyc[i:] + cyc[:i]))
    return sorted(found, key=lambda c: (len(c), c))


def long_cycles(d: DirectedGraph, min_len: int = 4) -> list[tuple[int, ...]]:
    return [c for c in directed_cycles(d) if len(c) >= min_len]


def eliminate_long_cycles(d: DirectedGraph, trace: Optional[list] = None) -> DirectedGraph:
    """Reverse arcs until no directed cycle of length >= 4 remains.

    For the shortest such cycle ``v1 .. vk`` (ties: smallest start vertex,
    rotation starting at it) the arcs (v1, v2) and (v3, v4) are reversed. This
    keeps the digraph singly connected and strictly lowers the number of
    directed cycles. ``trace`` collects the cycles that were broken.
    """
    if not is_singly_connected(d):
        raise NotSinglyConnected("eliminate_long_cycles needs a singly connected digraph")
    arcs = set(d.arcs)
    budget = len(directed_cycles(d))
    for _ in range(budget + 1):
        cur = DirectedGraph(d.n, frozenset(arcs))
        todo = long_cycles(cur)
        if not todo:
            return cur
        c = todo[0]
        if trace is not None:
            trace.append(c)
        for a, b in ((c[0], c[1]), (c[2], c[3])):
            arcs.remove((a, b))
            arcs.add((b, a))
    raise AssertionError("cycle elimination exceeded its iteration bound")
