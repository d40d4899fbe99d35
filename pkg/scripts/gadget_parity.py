"""Tabulate solver verdicts for cyclic gluings of a coupling gadget.

Usage: python3 scripts/gadget_parity.py [--gadget domino|grid24k3] [--max-copies N]

Twisted gluings of any copy count should be "no" for a coupled gadget; the
untwisted control should be "yes".
"""
import argparse

from scorient.gadgets import glue_coupling_cycle, make_gadget, verify_coupling_gadget
from scorient.solve import decide_sc_orientable


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--gadget", default="domino")
    ap.add_argument("--max-copies", type=int, default=7)
    args = ap.parse_args()
    h = make_gadget(args.gadget)
    r = verify_coupling_gadget(h)
    print(f"{h.name}: {r.sc_orientations} sc-orientations, chi={r.chromatic_number}, "
          f"properties {int(r.property1)}{int(r.property2)}{int(r.property3)}")
    print("copies  twisted  untwisted  vertices")
    for k in range(2, args.max_copies + 1):
        tw = glue_coupling_cycle(h, copies=k, twist=True)
        un = glue_coupling_cycle(h, copies=k, twist=False)
        yn = lambda g: "yes" if decide_sc_orientable(g).orientable else "no"
        print(f"{k:6d}  {yn(tw):7}  {yn(un):9}  {tw.n}")


if __name__ == "__main__":
    main()
