"""Build a reduction instance and replay both proof directions on it.

Usage: python3 scripts/reduction_demo.py [CNF_FILE] [--params k=v,...]

Without a file the two-clause formula (x1 or x2 or x3) and (-x1 or x2 or x3)
is used. Every assignment is pushed through orient_from_assignment and
checked; then the solver's own orientation is decoded.
"""
import argparse

from scorient.check import check_singly_connected
from scorient.reduction import (CnfFormula, ReductionParams, decode_assignment, format_assignment,
                                orient_from_assignment, reduce_3sat)
from scorient.solve import decide_sc_orientable


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("cnf", nargs="?")
    ap.add_argument("--params", default="")
    args = ap.parse_args()
    if args.cnf:
        with open(args.cnf) as fh:
            f = CnfFormula.from_dimacs(fh.read())
    else:
        f = CnfFormula(3, [(1, 2, 3), (-1, 2, 3)])
    params = ReductionParams.from_text(args.params)
    a = reduce_3sat(f, params=params)
    print(f"{len(f.clauses)} clauses over {f.num_vars} variables -> "
          f"{a.graph.n} vertices, {a.graph.m} edges ({params.to_text()})")

    if f.num_vars <= 12:
        for gamma in f.assignments():
            sc = bool(check_singly_connected(orient_from_assignment(a, gamma).digraph()))
            print(f"  {format_assignment(gamma)}  satisfies={f.evaluate(gamma)!s:5}  singly connected={sc}")

    res = decide_sc_orientable(a.graph)
    print(f"solver: {'yes' if res.orientable else 'no'} ({res.stats.nodes} nodes, {res.stats.prunes} prunes)")
    if res.orientable:
        gamma = decode_assignment(a, res.orientation)
        print(f"decoded {format_assignment(gamma)}, satisfies={f.evaluate(gamma)}")


if __name__ == "__main__":
    main()
