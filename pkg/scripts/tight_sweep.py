#!/usr/bin/env python3
"""Greedy vs exact on the tight family; the ratio should equal 1/2 + 1/x."""

import argparse
from fractions import Fraction

from mwbis.generators import gen_tight
from mwbis.solvers import exact_mwbis, greedy_bipartite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ks", type=int, nargs="+", default=[2, 4, 6, 8])
    ap.add_argument("--xs", type=int, nargs="+", default=[5, 10, 50, 200])
    args = ap.parse_args()

    print(f"{'k':>3} {'x':>4} {'n':>5} {'exact':>6} {'greedy':>6} {'ratio':>8} {'1/2+1/x':>8}")
    for k in args.ks:
        for x in args.xs:
            inst, bip = gen_tight(k, x)
            opt = exact_mwbis(inst).value
            g = greedy_bipartite(inst, bip).value
            ratio = Fraction(g, opt)
            formula = Fraction(1, 2) + Fraction(1, x)
            flag = "" if ratio == formula else "  MISMATCH"
            print(f"{k:>3} {x:>4} {inst.graph.n:>5} {opt:>6} {g:>6} {str(ratio):>8} {str(formula):>8}{flag}")


if __name__ == "__main__":
    main()
