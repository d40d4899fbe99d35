"""Named small graphs and ladder families with a fixed vertex numbering.

Numbering conventions (relied on by tests and the reduction):

* ``grid(x, y)``: vertex ``r * x + c`` for row ``r < y``, column ``c < x``.
  The domino is ``grid(2, 3)``; its bottom edge is (0, 1), its top edge (4, 5).
* ``ladder(n)`` is ``grid(2, n)``; step (rung) ``i`` is the edge ``(2i, 2i+1)``.
* ``laddercycle(k)``: the ladder closed cyclically, rails ``2i - 2(i+1 mod k)``
  and ``2i+1 - 2(i+1 mod k)+1``. Even steps are its 0th-steps.
* ``diamond``: K4 minus the edge {0, 3}.
* ``house``: square 0-1-2-3 with roof vertex 4 on the edge {2, 3}.
* ``gem``: path 1-2-3-4 plus vertex 0 adjacent to all of them.
"""
from __future__ import annotations

import re
from typing import Sequence

from .errors import BadParameter
from .graph import UndirectedGraph


def _g(n, edges):
    return UndirectedGraph.from_edges(n, edges)


def diamond() -> UndirectedGraph:
    return _g(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def house() -> UndirectedGraph:
    return _g(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)])


def gem() -> UndirectedGraph:
    return _g(5, [(1, 2), (2, 3), (3, 4)] + [(0, i) for i in range(1, 5)])


def triangle() -> UndirectedGraph:
    return cycle(3)


def complete(n: int) -> UndirectedGraph:
    return _g(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path(n: int) -> UndirectedGraph:
    return _g(n, [(i, i + 1) for i in range(n - 1)])


def cycle(k: int) -> UndirectedGraph:
    if k < 3:
        raise BadParameter("cycle length must be >= 3")
    return _g(k, [(i, (i + 1) % k) for i in range(k)])


def star(leaves: int) -> UndirectedGraph:
    return _g(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def grid(x: int, y: int) -> UndirectedGraph:
    if x < 1 or y < 1:
        raise BadParameter("grid dimensions must be positive")
    es = []
    for r in range(y):
        for c in range(x):
            v = r * x + c
            if c + 1 < x:
                es.append((v, v + 1))
            if r + 1 < y:
                es.append((v, v + x))
    return _g(x * y, es)


def domino() -> UndirectedGraph:
    return grid(2, 3)


def ladder(n: int) -> UndirectedGraph:
    if n < 2:
        raise BadParameter("a ladder needs at least 2 steps")
    return grid(2, n)


def ladder_steps(n: int) -> list[tuple[int, int]]:
    return [(2 * i, 2 * i + 1) for i in range(n)]


def laddercycle(k: int) -> UndirectedGraph:
    if k < 4 or k % 2:
        raise BadParameter("laddercycle needs an even number of steps >= 4")
    es = []
    for i in range(k):
        j = (i + 1) % k
        es += [(2 * i, 2 * i + 1), (2 * i, 2 * j), (2 * i + 1, 2 * j + 1)]
    return _g(2 * k, es)


def laddercycle_zero_steps(k: int) -> list[tuple[int, int]]:
    """The 0th-steps of ``laddercycle(k)``: every even step."""
    return [(2 * i, 2 * i + 1) for i in range(0, k, 2)]


def extended_ladder(n: int, attach: Sequence[tuple[int, bool]]) -> tuple[UndirectedGraph, list[tuple[int, int]]]:
    """A ladder with extra 4-cycles hung on chosen steps.

    ``attach`` lists ``(step, twist)``. For step ``(a, b)`` two new vertices
    ``p, q`` get the edges a-p, p-q, q-b (twisted: a-q, q-p, p-b). Returns the
    graph and the new edges ``(p, q)`` in ``attach`` order.
    """
    base = ladder(n)
    es = list(base.edges)
    nxt = base.n
    new_edges = []
    for step, twist in attach:
        if not 0 <= step < n:
            raise BadParameter(f"step {step} outside ladder of length {n}")
        a, b = 2 * step, 2 * step + 1
        p, q = nxt, nxt + 1
        nxt += 2
        if twist:
            es += [(a, q), (q, p), (p, b)]
        else:
            es += [(a, p), (p, q), (q, b)]
        new_edges.append((p, q))
    return _g(nxt, es), new_edges


def petersen() -> UndirectedGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return _g(10, outer + spokes + inner)


_SIMPLE = {
    "diamond": diamond,
    "house": house,
    "gem": gem,
    "domino": domino,
    "triangle": triangle,
    "petersen": petersen,
}


def make_named_graph(spec: str) -> UndirectedGraph:
    """Build a graph from a name such as ``domino``, ``grid(2,3)`` or ``laddercycle(8)``.

    ``extended_ladder(n; step:twist, ...)`` takes its attachment list after a
    semicolon, e.g. ``extended_ladder(4; 1:0, 3:1)``.
    """
    s = spec.strip().lower().replace(" ", "")
    if s in _SIMPLE:
        return _SIMPLE[s]()
    m = re.fullmatch(r"([a-z_0-9]+)\((.*)\)", s)
    if not m:
        raise BadParameter(f"unknown graph name {spec!r}")
    name, args = m.groups()
    try:
        if name == "extended_ladder":
            head, _, tail = args.partition(";")
            attach = []
            for item in filter(None, tail.split(",")):
                st, _, tw = item.partition(":")
                attach.append((int(st), tw not in ("", "0", "false")))
            return extended_ladder(int(head), attach)[0]
        nums = [int(a) for a in args.split(",") if a]
    except ValueError:
        raise BadParameter(f"bad parameters in {spec!r}") from None
    builders = {
        "grid": (grid, 2), "cycle": (cycle, 1), "ladder": (ladder, 1),
        "laddercycle": (laddercycle, 1), "complete": (complete, 1),
        "path": (path, 1), "star": (star, 1),
    }
    if name not in builders:
        raise BadParameter(f"unknown graph name {spec!r}")
    fn, arity = builders[name]
    if len(nums) != arity:
        raise BadParameter(f"{name} takes {arity} parameter(s)")
    return fn(*nums)
