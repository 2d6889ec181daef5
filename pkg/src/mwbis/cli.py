"""Command-line entry point: ``mwbis {solve,generate,verify-reduction,bench}``.

Exit codes: 0 success, 1 user/input error, 2 verification mismatch,
3 resource cap.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from statistics import mean

import numpy as np

from . import generators as gen
from .graph import (
    GraphError,
    WeightedInstance,
    bipartition,
    degeneracy_coloring,
    greedy_coloring,
    is_independent,
)
from .io import GraphFormatError, format_graph, read_graph
from .lp import (
    CliqueLimitError,
    SimplexError,
    build_lp,
    format_lp,
    gap_upper_bound_formula,
    solve_lp,
)
from .reductions import (
    EquivalenceMismatch,
    ReductionError,
    coverage_target,
    verify_equivalence,
)
from .solvers import (
    SearchConfig,
    color_class_approx,
    exact_mwbis,
    greedy_bipartite,
    truncate_to_budget,
    truncated_mwis,
)

EXIT_OK, EXIT_USER, EXIT_MISMATCH, EXIT_CAP = 0, 1, 2, 3
METHODS = ("exact", "greedy", "color", "lp", "truncate")


class UserError(Exception):
    pass


class VerificationError(Exception):
    pass


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, np.generic):
        return v.item()
    return v


def _digest(inst: WeightedInstance) -> dict:
    return {"n": inst.graph.n, "m": inst.graph.m, "k": inst.k,
            "weights": "degree" if inst.mivc else "explicit"}


def run_method(inst: WeightedInstance, method: str, config: SearchConfig | None = None,
               coloring: str = "degeneracy", from_set=None) -> dict:
    """Solve ``inst`` with ``method`` and return the verified record fields."""
    extra = {}
    if method == "exact":
        sol = exact_mwbis(inst, config)
    elif method == "greedy":
        bip, cycle = bipartition(inst.graph)
        if bip is None:
            raise UserError(f"greedy needs a bipartite graph; odd cycle {[v + 1 for v in cycle]}")
        sol = greedy_bipartite(inst, bip)
    elif method == "color":
        col = degeneracy_coloring(inst.graph) if coloring == "degeneracy" else greedy_coloring(inst.graph)
        sol = color_class_approx(inst, col)
        extra["num_colors"] = col.num_colors
    elif method == "truncate":
        if from_set is not None:
            s = [v - 1 for v in from_set]
            if any(not 0 <= v < inst.graph.n for v in s):
                raise UserError("--from-set contains out-of-range vertex ids")
            if not is_independent(inst.graph, s):
                raise UserError("--from-set is not an independent set")
            sol = truncate_to_budget(s, inst.weights, inst.k, inst)
        else:
            bip, cycle = bipartition(inst.graph)
            if bip is None:
                raise UserError("truncate on a non-bipartite graph needs --from-set; "
                                f"odd cycle {[v + 1 for v in cycle]}")
            sol = truncated_mwis(inst, bip)
    elif method == "lp":
        model = build_lp(inst)
        lp = solve_lp(model)
        if lp.status != "optimal":
            raise UserError(f"LP is {lp.status}")
        resid = float(model.residuals(lp.values).max(initial=0.0))
        if resid > 1e-9 or lp.values.min(initial=0.0) < -1e-12:
            raise VerificationError(f"LP solution infeasible (residual {resid})")
        recomputed = float(np.dot(model.dense()[2], lp.values))
        if abs(recomputed - lp.objective) > 1e-9 * max(1.0, abs(lp.objective)):
            raise VerificationError("LP objective does not match its solution")
        return {"method": "lp", "value": lp.objective,
                "exact_value": _jsonable(lp.exact_objective),
                "x": [float(v) for v in lp.values], "vertices": [],
                "proven_optimal": True, "max_residual": resid, "iterations": lp.iterations}
    else:
        raise UserError(f"unknown method {method!r}")

    try:
        sol.check(inst)
    except GraphError as exc:
        raise VerificationError(str(exc)) from None
    if method == "exact" and not sol.proven_optimal:
        extra["limit_reached"] = True
    return {"method": sol.method, "value": _jsonable(sol.value),
            "vertices": sorted(v + 1 for v in sol.vertices),
            "proven_optimal": sol.proven_optimal, **extra}


def cmd_solve(args) -> int:
    try:
        gf = read_graph(args.input)
    except OSError as exc:
        raise UserError(str(exc)) from None
    inst = gf.instance(args.k)
    config = SearchConfig(args.node_limit,
                          None if args.time_limit_ms is None else args.time_limit_ms / 1000)
    t0 = time.perf_counter()
    rec = run_method(inst, args.method, config, args.coloring, args.from_set)
    wall = time.perf_counter() - t0
    out = {"command": " ".join(sys.argv), "instance": _digest(inst), **rec, "wall_time_s": wall}
    print(json.dumps(out))
    if args.lp_dump and args.method == "lp":
        with open(args.lp_dump, "w") as fh:
            fh.write(format_lp(build_lp(inst)))
    if rec.get("limit_reached"):
        return EXIT_CAP
    return EXIT_OK


def _gen_spec(args) -> gen.GenSpec:
    if args.family == "tight":
        params = {"k": args.k, "x": args.x}
    elif args.family == "gap":
        params = {"k": args.k}
    elif args.family == "regular":
        params = {"n": args.n, "r": args.r}
    else:
        params = {"n_a": args.n_a, "n_b": args.n_b, "edge_prob": args.edge_prob,
                  "weight_mode": args.weights}
        if args.weights == "uniform":
            params.update(lo=args.lo, hi=args.hi)
    return gen.GenSpec(args.family, params, args.seed)


def cmd_generate(args) -> int:
    try:
        spec = _gen_spec(args)
    except (TypeError, ValueError) as exc:
        raise UserError(str(exc)) from None
    graph, weights, _ = gen.generate(spec)
    text = format_graph(graph, weights, spec.comments())
    if args.output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_verify_reduction(args) -> int:
    coverage_target(args.n, args.k)  # precondition check before generating anything
    mismatches = skipped = 0
    for i, ss in enumerate(gen.spawn_seeds(args.seed, args.trials)):
        try:
            g = gen.gen_random_regular(args.n, args.n - 4, np.random.default_rng(ss))
        except gen.GenerationError as exc:
            skipped += 1
            print(json.dumps({"trial": i, "skipped": str(exc)}))
            continue
        t0 = time.perf_counter()
        rep = verify_equivalence(g, args.k, strict=False)
        rec = {"trial": i, **rep.as_dict(), "wall_time_s": time.perf_counter() - t0}
        print(json.dumps(rec))
        mismatches += not rep.equivalent
    print(json.dumps({"summary": True, "trials": args.trials, "skipped": skipped,
                      "mismatches": mismatches}))
    return EXIT_MISMATCH if mismatches else EXIT_OK


# --- bench -----------------------------------------------------------------

def _bench_corpus(name: str, count: int, seed: int):
    """Yield ``(instance_id, WeightedInstance, extra)`` for a named corpus."""
    if name == "bipartite":
        seeds = gen.spawn_seeds(seed, count)
        for i, ss in enumerate(seeds):
            rng = np.random.default_rng(ss)
            n_a, n_b = int(rng.integers(1, 9)), int(rng.integers(1, 9))
            p = (0.2, 0.5, 0.8)[i % 3]
            mode = ("degree", "uniform")[(i // 3) % 2]
            inst, _ = gen.gen_random_bipartite(n_a, n_b, p, rng, mode)
            for k in range(1, inst.graph.n + 1):
                yield f"bip{i}-k{k}", inst.with_budget(k), {}
    elif name == "tight":
        for k in (2, 4, 6, 8):
            for x in (5, 10, 50):
                inst, _ = gen.gen_tight(k, x)
                yield f"tight-k{k}-x{x}", inst, {"x": x}
    elif name == "gap":
        for k in (2, 3, 4):
            inst, _ = gen.gen_gap(k)
            yield f"gap-k{k}", inst, {"gap_k": k}
    else:
        raise UserError(f"unknown corpus {name!r}")


def _bench_one(job):
    iid, inst, extra, methods, node_limit = job
    rows = []
    config = SearchConfig(node_limit)
    t0 = time.perf_counter()
    exact = exact_mwbis(inst, config)
    t_exact = time.perf_counter() - t0
    exact_val = exact.value if exact.proven_optimal else None
    for method in methods:
        row = {"instance": iid, "n": inst.graph.n, "m": inst.graph.m, "k": inst.k,
               "method": method, "exact": _jsonable(exact_val)}
        try:
            t0 = time.perf_counter()
            if method == "exact":
                rec = {"value": exact.value}
                row["time_s"] = t_exact
            else:
                rec = run_method(inst, method, config)
                row["time_s"] = time.perf_counter() - t0
            val = rec["value"]
            row["value"] = _jsonable(val)
            if exact_val is not None and val:
                if isinstance(val, int) and isinstance(exact_val, int):
                    ratio = Fraction(val, exact_val) if method != "lp" else None
                else:
                    ratio = None
                if method == "lp":
                    ev = rec.get("exact_value")
                    gap = Fraction(exact_val) / Fraction(ev) if ev is not None else exact_val / val
                    row["gap"] = str(gap) if isinstance(gap, Fraction) else gap
                    row["ratio_float"] = float(gap)
                else:
                    row["ratio"] = str(ratio) if ratio is not None else val / exact_val
                    row["ratio_float"] = float(ratio) if ratio is not None else val / exact_val
            elif exact_val == 0:
                row["ratio_float"] = 1.0
            if "x" in extra:
                row["tight_formula"] = str(Fraction(1, 2) + Fraction(1, extra["x"]))
            if "gap_k" in extra:
                row["gap_bound"] = str(gap_upper_bound_formula(extra["gap_k"]))
        except Exception as exc:  # recorded; the run continues
            row["error"] = f"{type(exc).__name__}: {exc}"
        rows.append(row)
    return rows


FIELDS = ["instance", "n", "m", "k", "method", "value", "exact", "ratio", "gap",
          "ratio_float", "tight_formula", "gap_bound", "time_s", "error"]


def run_bench(corpus: str, methods, count: int = 500, seed: int = 0, jobs: int = 1,
              node_limit: int | None = None) -> list[dict]:
    work = [(iid, inst, extra, tuple(methods), node_limit)
            for iid, inst, extra in _bench_corpus(corpus, count, seed)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            chunks = list(pool.map(_bench_one, work, chunksize=16))
    else:
        chunks = [_bench_one(w) for w in work]
    rows = [row for chunk in chunks for row in chunk]
    for method in methods:
        ratios = [r["ratio_float"] for r in rows if r["method"] == method and "ratio_float" in r]
        if ratios:
            rows.append({"instance": "SUMMARY", "method": method,
                         "ratio": f"min={min(ratios):.6f}", "gap": f"mean={mean(ratios):.6f}"})
    return rows


def cmd_bench(args) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    bad = [m for m in methods if m not in METHODS]
    if bad:
        raise UserError(f"unknown methods {bad}")
    rows = run_bench(args.corpus, methods, args.count, args.seed, args.jobs, args.node_limit)
    out = sys.stdout if args.output in (None, "-") else open(args.output, "w", newline="")
    try:
        w = csv.DictWriter(out, FIELDS)
        w.writeheader()
        w.writerows(rows)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mwbis", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="solve one graph file")
    s.add_argument("-i", "--input", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--method", choices=METHODS, default="exact")
    s.add_argument("--coloring", choices=("degeneracy", "natural"), default="degeneracy")
    s.add_argument("--from-set", type=lambda t: [int(v) for v in t.split(",") if v],
                   help="comma-separated 1-based independent set for --method truncate")
    s.add_argument("--node-limit", type=int)
    s.add_argument("--time-limit-ms", type=int)
    s.add_argument("--lp-dump", help="also write the LP model in CPLEX LP format")
    s.set_defaults(func=cmd_solve)

    g = sub.add_parser("generate", help="write an instance file")
    g.add_argument("family", choices=("tight", "gap", "regular", "bipartite"))
    g.add_argument("--k", type=int)
    g.add_argument("--x", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--r", type=int)
    g.add_argument("--n-a", type=int, default=8)
    g.add_argument("--n-b", type=int, default=8)
    g.add_argument("--edge-prob", type=float, default=0.5)
    g.add_argument("--weights", choices=("degree", "uniform"), default="degree")
    g.add_argument("--lo", type=float, default=1.0)
    g.add_argument("--hi", type=float, default=10.0)
    g.add_argument("--seed", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify-reduction", help="check the clique/coverage equivalence")
    v.add_argument("--n", type=int, default=12)
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--trials", type=int, default=20)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify_reduction)

    b = sub.add_parser("bench", help="approximation-ratio benchmark to CSV")
    b.add_argument("--corpus", choices=("bipartite", "tight", "gap"), default="bipartite")
    b.add_argument("--methods", default="greedy,exact")
    b.add_argument("--count", type=int, default=500)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--node-limit", type=int)
    b.add_argument("-o", "--output")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UserError, GraphFormatError, GraphError, ReductionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USER
    except (VerificationError, EquivalenceMismatch) as exc:
        print(f"verification mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (CliqueLimitError, SimplexError, gen.GenerationError) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
