#!/usr/bin/env python3
"""IP and LP optima on the integrality-gap family, against k^3/(2k^3-3k^2+3k-1)."""

import argparse
import time

from mwbis.generators import gen_gap
from mwbis.lp import build_lp, gap_upper_bound_formula, solve_lp
from mwbis.solvers import SearchConfig, exact_mwbis


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmax", type=int, default=5)
    ap.add_argument("--node-limit", type=int, default=10**7)
    args = ap.parse_args()

    print(f"{'k':>3} {'n':>5} {'IP':>5} {'LP (exact)':>12} {'gap':>10} {'bound':>10} {'secs':>6}")
    for k in range(2, args.kmax + 1):
        inst, _ = gen_gap(k)
        t0 = time.perf_counter()
        ip = exact_mwbis(inst, SearchConfig(node_limit=args.node_limit))
        lp = solve_lp(build_lp(inst))
        dt = time.perf_counter() - t0
        exact = lp.exact_objective
        gap = ip.value / exact if exact is not None else ip.value / lp.objective
        tag = "" if ip.proven_optimal else " (IP not certified)"
        print(f"{k:>3} {inst.graph.n:>5} {ip.value:>5} {str(exact):>12} {float(gap):>10.6f} "
              f"{float(gap_upper_bound_formula(k)):>10.6f} {dt:>6.2f}{tag}")


if __name__ == "__main__":
    main()
