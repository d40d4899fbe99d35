"""Text formats: edge lists, graph6, arc lists and DIMACS CNF."""
from __future__ import annotations

from typing import Iterable, Iterator

from .errors import FormatViolation, ParseError
from .graph import DirectedGraph, UndirectedGraph

FORMATS = ("edge_list", "graph6")


def _content_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def parse_edge_list(text: str) -> UndirectedGraph:
    lines = _content_lines(text)
    try:
        lineno, first = next(lines)
    except StopIteration:
        raise ParseError("empty input: missing vertex count", 1) from None
    toks = first.split()
    if len(toks) != 1:
        raise ParseError("first line must hold the vertex count only", lineno)
    n = _int(toks[0], lineno)
    if n < 0:
        raise ParseError("negative vertex count", lineno)
    seen: set[tuple[int, int]] = set()
    for lineno, line in lines:
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        u, v = _int(toks[0], lineno), _int(toks[1], lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise FormatViolation(f"self-loop at {u}", lineno)
        e = (min(u, v), max(u, v))
        if e in seen:
            raise FormatViolation(f"duplicate edge {e}", lineno)
        seen.add(e)
    return UndirectedGraph(n, frozenset(seen))


def format_edge_list(g: UndirectedGraph) -> str:
    out = [str(g.n)]
    out += [f"{u} {v}" for u, v in g.edge_list()]
    return "\n".join(out) + "\n"


def _g6_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: UndirectedGraph) -> str:
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        body.append(chr(val + 63))
    return _g6_size(g.n) + "".join(body)


def from_graph6(s: str, lineno: int = 1) -> UndirectedGraph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ParseError("empty graph6 string", lineno)
    for off, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise ParseError(f"invalid graph6 character {ch!r} at offset {off}", lineno)
    vals = [ord(c) - 63 for c in s]
    if vals[0] < 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    elif len(vals) >= 8:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        raise ParseError("truncated graph6 size field", lineno)
    need = (n * (n - 1) // 2 + 5) // 6
    body = vals[pos:]
    if len(body) != need:
        raise ParseError(f"graph6 body has {len(body)} bytes, expected {need} (offset {pos})", lineno)
    edges = set()
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.add((i, j))
            k += 1
    return UndirectedGraph(n, frozenset(edges))


def parse_graph6_stream(text: str) -> list[UndirectedGraph]:
    return [from_graph6(line, lineno) for lineno, line in _content_lines(text)]


def parse_graph(text: str, format: str = "edge_list") -> UndirectedGraph:
    if format == "edge_list":
        return parse_edge_list(text)
    if format == "graph6":
        graphs = parse_graph6_stream(text)
        if len(graphs) != 1:
            raise ParseError(f"expected one graph6 line, found {len(graphs)}")
        return graphs[0]
    raise ValueError(f"unknown format {format!r}")


def serialize_graph(g: UndirectedGraph, format: str = "edge_list") -> str:
    if format == "edge_list":
        return format_edge_list(g)
    if format == "graph6":
        return to_graph6(g) + "\n"
    raise ValueError(f"unknown format {format!r}")


def parse_digraph(text: str) -> DirectedGraph:
    """Vertex count on the first line, then one ``u > v`` arc per line."""
    lines = _content_lines(text)
    try:
        lineno, first = next(lines)
    except StopIteration:
        raise ParseError("empty input: missing vertex count", 1) from None
    toks = first.split()
    if len(toks) != 1:
        raise ParseError("first line must hold the vertex count only", lineno)
    n = _int(toks[0], lineno)
    arcs: set[tuple[int, int]] = set()
    for lineno, line in lines:
        toks = line.replace(">", " > ").split()
        if len(toks) != 3 or toks[1] != ">":
            raise ParseError(f"expected 'u > v', got {line!r}", lineno)
        u, v = _int(toks[0], lineno), _int(toks[2], lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex out of range 0..{n - 1}", lineno)
        if u == v:
            raise FormatViolation(f"self-loop at {u}", lineno)
        if (u, v) in arcs:
            raise FormatViolation(f"duplicate arc {u} > {v}", lineno)
        arcs.add((u, v))
    return DirectedGraph(n, frozenset(arcs))


def format_digraph(d: DirectedGraph | int, arcs: Iterable[tuple[int, int]] | None = None) -> str:
    if isinstance(d, DirectedGraph):
        n, arcs = d.n, d.arc_list()
    else:
        n, arcs = d, sorted(arcs or ())
    return "\n".join([str(n)] + [f"{u} > {v}" for u, v in arcs]) + "\n"


def parse_dimacs(text: str) -> tuple[int, list[tuple[int, ...]]]:
    """Return ``(num_vars, clauses)``; literals are signed 1-based ints."""
    num_vars = num_clauses = None
    clauses: list[tuple[int, ...]] = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            toks = line.split()
            if len(toks) != 4 or toks[1] != "cnf":
                raise ParseError("header must be 'p cnf <vars> <clauses>'", lineno)
            num_vars, num_clauses = _int(toks[2], lineno), _int(toks[3], lineno)
            continue
        if num_vars is None:
            raise ParseError("clause before 'p cnf' header", lineno)
        for tok in line.split():
            lit = _int(tok, lineno)
            if lit == 0:
                clauses.append(tuple(current))
                current = []
            elif abs(lit) > num_vars:
                raise ParseError(f"literal {lit} exceeds declared {num_vars} variables", lineno)
            else:
                current.append(lit)
    if num_vars is None:
        raise ParseError("missing 'p cnf' header")
    if current:
        raise ParseError("last clause not terminated by 0")
    if num_clauses is not None and num_clauses != len(clauses):
        raise ParseError(f"header declares {num_clauses} clauses, found {len(clauses)}")
    return num_vars, clauses


def format_dimacs(num_vars: int, clauses: Iterable[Iterable[int]]) -> str:
    clauses = [tuple(c) for c in clauses]
    lines = [f"p cnf {num_vars} {len(clauses)}"]
    lines += [" ".join(map(str, c)) + " 0" for c in clauses]
    return "\n".join(lines) + "\n"
