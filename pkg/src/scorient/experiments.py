"""Seeded instance generators shared by the test suite and the scripts."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator

from .check import long_cycles
from .graph import DirectedGraph, UndirectedGraph
from .io import parse_graph6_stream
from .patterns import find_triangle
from .reduction import CnfFormula
from .solve import find_obstruction, iter_sc_orientations


@dataclass(frozen=True)
class RandomGraphConfig:
    count: int = 500
    n_min: int = 8
    n_max: int = 10
    p_min: float = 0.2
    p_max: float = 0.5
    max_edges: int = 24
    seed: int = 2024


@dataclass(frozen=True)
class RandomDigraphConfig:
    count: int = 1000
    n_min: int = 5
    n_max: int = 6
    p: float = 0.3
    seed: int = 7


@dataclass(frozen=True)
class CyclicSampleConfig:
    count: int = 200
    n_min: int = 4
    n_max: int = 8
    p: float = 0.45
    seed: int = 41


@dataclass(frozen=True)
class TriangleGraphConfig:
    count: int = 200
    n_min: int = 4
    n_max: int = 9
    p: float = 0.3
    seed: int = 5


def gnp(rng: random.Random, n: int, p: float) -> UndirectedGraph:
    return UndirectedGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_graphs(cfg: RandomGraphConfig) -> list[UndirectedGraph]:
    rng = random.Random(cfg.seed)
    out = []
    while len(out) < cfg.count:
        g = gnp(rng, rng.randint(cfg.n_min, cfg.n_max), rng.uniform(cfg.p_min, cfg.p_max))
        if g.m <= cfg.max_edges:
            out.append(g)
    return out


def random_digraphs(cfg: RandomDigraphConfig) -> list[DirectedGraph]:
    rng = random.Random(cfg.seed)
    out = []
    for _ in range(cfg.count):
        n = rng.randint(cfg.n_min, cfg.n_max)
        arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < cfg.p]
        out.append(DirectedGraph(n, frozenset(arcs)))
    return out


def all_digraphs(n: int) -> Iterator[DirectedGraph]:
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for mask in range(1 << len(pairs)):
        yield DirectedGraph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def cyclic_sc_orientations(cfg: CyclicSampleConfig) -> list[DirectedGraph]:
    """sc-orientations with a directed cycle of length >= 4, one per random graph."""
    rng = random.Random(cfg.seed)
    out = []
    while len(out) < cfg.count:
        g = gnp(rng, rng.randint(cfg.n_min, cfg.n_max), cfg.p)
        if g.m > 16:
            continue
        pool = [o.digraph() for o in iter_sc_orientations(g)]
        pool = [d for d in pool if long_cycles(d)]
        if pool:
            out.append(rng.choice(pool))
    return out


def triangle_graphs(cfg: TriangleGraphConfig) -> list[UndirectedGraph]:
    """Random graphs with a triangle and no diamond or house subgraph."""
    rng = random.Random(cfg.seed)
    out = []
    while len(out) < cfg.count:
        g = gnp(rng, rng.randint(cfg.n_min, cfg.n_max), cfg.p)
        if find_triangle(g) is not None and find_obstruction(g) is None:
            out.append(g)
    return out


def small_formulas(num_vars: int = 3, max_clauses: int = 3) -> list[CnfFormula]:
    """Formulas whose clauses are distinct sign patterns over variables 1..3."""
    patterns = [tuple(s * (i + 1) for i, s in enumerate(signs))
                for signs in itertools.product((1, -1), repeat=3)]
    out = []
    for k in range(1, max_clauses + 1):
        for combo in itertools.combinations(patterns, k):
            out.append(CnfFormula(num_vars, combo))
    return out


def load_graph6(path: str | Path) -> list[UndirectedGraph]:
    return parse_graph6_stream(Path(path).read_text())
