"""Compare the exact solver with the enumeration oracle and report timings.

Usage: python3 scripts/oracle_sweep.py [--g6 FILE] [--count N] [--seed S]

Without --g6 it draws seeded random graphs (see RandomGraphConfig).
"""
import argparse
import time
from dataclasses import replace

from scorient.experiments import RandomGraphConfig, load_graph6, random_graphs
from scorient.solve import decide_sc_orientable, naive_sc_orientable


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--g6", help="graph6 stream to sweep instead of random graphs")
    ap.add_argument("--count", type=int, default=RandomGraphConfig.count)
    ap.add_argument("--seed", type=int, default=RandomGraphConfig.seed)
    args = ap.parse_args()
    if args.g6:
        gs = load_graph6(args.g6)
    else:
        gs = random_graphs(replace(RandomGraphConfig(), count=args.count, seed=args.seed))

    t_solver = t_naive = 0.0
    yes = disagree = nodes = 0
    for g in gs:
        t0 = time.perf_counter()
        a = decide_sc_orientable(g)
        t1 = time.perf_counter()
        b = naive_sc_orientable(g)
        t2 = time.perf_counter()
        t_solver += t1 - t0
        t_naive += t2 - t1
        nodes += a.stats.nodes
        yes += a.orientable
        if a.orientable != b.orientable:
            disagree += 1
            print("disagreement:", g.edge_list())
    print(f"graphs {len(gs)}  yes {yes}  no {len(gs) - yes}  disagreements {disagree}")
    print(f"solver {t_solver:.3f}s ({nodes} search nodes)  oracle {t_naive:.3f}s")


if __name__ == "__main__":
    main()
