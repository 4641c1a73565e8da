#!/usr/bin/env python3
"""Render the staircase slices and the Apery poset for a showcase monoid.

Prints, for <7,9,11> under lex: the reduced basis corners, slices of the
staircase at x = 1, 2, 3 and 7 (the x ceiling), and the covering-relation
diagram of Ap(S, 11) whose sinks are the type set.

Usage: python scripts/staircase_gallery.py [--gens 7,9,11]
"""

import argparse
import sys

from aperykit.cli import render_staircase
from aperykit.groebner import buchberger, ideal_generators
from aperykit.orders import lex_order
from aperykit.semigroup import NumericalSemigroup, hasse_diagram, typeset_bruteforce


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("--gens", default="7,9,11")
    parser.add_argument("--slices", default="1,2,3,7", help="x values to render")
    parser.add_argument("--extent", type=int, default=6)
    args = parser.parse_args()

    S = NumericalSemigroup(int(p) for p in args.gens.split(","))
    k = len(S.generators)
    order = lex_order(k + 1)
    basis = buchberger(ideal_generators(S, order), order)

    print(f"S = <{', '.join(map(str, S.generators))}>, lex basis, "
          f"{len(basis.elements)} elements")
    print("corners:", sorted(basis.corners, key=lambda q: (q[0], q)))
    print()

    for x_value in (int(p) for p in args.slices.split(",")):
        fixed = {0: x_value}
        for c in range(3, k + 1):
            fixed[c] = 0
        print(render_staircase(basis, fixed, (1, 2), (args.extent, args.extent)))
        print()

    wrt = S.generators[-1]
    print(f"covering relations of Ap(S, {wrt}):")
    for x, y in hasse_diagram(S, wrt):
        print(f"  {x} -> {y}")
    print("sinks (the type set):", typeset_bruteforce(S))
    return 0


if __name__ == "__main__":
    sys.exit(main())
