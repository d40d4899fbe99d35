"""Write graph6 streams of small graphs for the test suite.

* ``connected_le7.g6``: every connected graph on 1..7 vertices (networkx atlas).
* ``all_8.g6``: every graph on exactly 8 vertices, obtained by adding a vertex
  with each possible neighbourhood to every 7-vertex graph and removing
  isomorphic duplicates (Weisfeiler-Lehman hash buckets, then exact test).

Usage: python3 scripts/enumerate_graphs.py [outdir]
"""
import sys
from pathlib import Path

import networkx as nx

from scorient.graph import UndirectedGraph
from scorient.io import to_graph6


def to_ug(G):
    G = nx.convert_node_labels_to_integers(G)
    return UndirectedGraph.from_edges(G.number_of_nodes(), G.edges())


def eight_vertex_graphs():
    sevens = [G for G in nx.graph_atlas_g() if G.number_of_nodes() == 7]
    buckets = {}
    out = []
    for G in sevens:
        for mask in range(1 << 7):
            H = G.copy()
            H.add_node(7)
            H.add_edges_from((7, i) for i in range(7) if mask >> i & 1)
            key = (H.number_of_edges(), tuple(sorted(d for _, d in H.degree())),
                   nx.weisfeiler_lehman_graph_hash(H, iterations=3))
            bucket = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(H, K) for K in bucket):
                continue
            bucket.append(H)
            out.append(H)
    return out


def main(outdir):
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    conn = [G for G in nx.graph_atlas_g()[1:] if nx.is_connected(G)]
    (outdir / "connected_le7.g6").write_text("".join(to_graph6(to_ug(G)) + "\n" for G in conn))
    eights = eight_vertex_graphs()
    (outdir / "all_8.g6").write_text("".join(to_graph6(to_ug(G)) + "\n" for G in eights))
    print(f"connected <=7: {len(conn)}, all on 8 vertices: {len(eights)}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "tests" / "data")
