"""Audit whether the perfect-graph transform keeps the sc-orientability verdict.

Usage: python3 scripts/perfectify_audit.py [--max-n N]

Runs over every graph on at most N vertices (networkx atlas, N <= 7) and
splits the results by whether the input has a triangle. Inputs with a
triangle that were "yes" come out "no": the triangle's hanging triangles
contract down to a house.
"""
import argparse

import networkx as nx

from scorient.gadgets import perfectify
from scorient.graph import UndirectedGraph
from scorient.patterns import find_triangle
from scorient.solve import decide_sc_orientable, preprocess


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()
    rows = {True: [0, 0], False: [0, 0]}  # has_triangle -> [same, flipped]
    example = None
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > args.max_n:
            break
        g = UndirectedGraph.from_edges(h.number_of_nodes(), list(h.edges()))
        p = perfectify(g)
        before, after = decide_sc_orientable(g).orientable, decide_sc_orientable(p).orientable
        tri = find_triangle(g) is not None
        rows[tri][before != after] += 1
        if before != after and example is None:
            example = (g, preprocess(p).obstruction)
    for tri in (False, True):
        same, flipped = rows[tri]
        print(f"{'with' if tri else 'without'} triangle: {same} preserved, {flipped} flipped")
    if example:
        g, obs = example
        print(f"first flip: {g.n} vertices, edges {g.edge_list()}; "
              f"image stops at {obs.kind.name if obs else 'search'}")


if __name__ == "__main__":
    main()
