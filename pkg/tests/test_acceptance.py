"""Acceptance criteria. Each test records one PASS/FAIL line, shown in the
pytest terminal summary (and printed directly when run as a script)."""

import time
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from mwbis.generators import (
    gen_gap,
    gen_random_bipartite,
    gen_random_graph,
    gen_random_regular,
    gen_tight,
    spawn_seeds,
)
from mwbis.graph import (
    WeightedInstance,
    build_graph,
    covered_edges,
    degeneracy_coloring,
    greedy_coloring,
    is_independent,
)
from mwbis.lp import CliqueLimitError, build_lp, gap_upper_bound_formula, solve_lp
from mwbis.reductions import (
    clique_to_solution,
    construct_bipartite,
    exact_mivc_reduction,
    has_k_clique,
)
from mwbis.solvers import SearchConfig, color_class_approx, exact_mwbis, greedy_bipartite
from mwbis.solvers import mwis_bipartite_exact

from conftest import ACCEPTANCE_RESULTS
from oracles import naive_has_clique, naive_mwbis, naive_mwis

CORPUS_SEED = 2024
CORPUS_SIZE = 504


def record(name, ok, detail):
    ACCEPTANCE_RESULTS[name] = (bool(ok), detail)
    print(f"{'PASS' if ok else 'FAIL'}  {name}  {detail}")
    assert ok, f"{name}: {detail}"


def exact_sum(inst, vertices):
    return sum(Fraction(inst.weights[v]) for v in vertices)


def bipartite_corpus():
    """504 instances: sides 1..8, edge_prob cycling 0.2/0.5/0.8, degree and uniform weights."""
    out = []
    for i, ss in enumerate(spawn_seeds(CORPUS_SEED, CORPUS_SIZE)):
        rng = np.random.default_rng(ss)
        n_a, n_b = int(rng.integers(1, 9)), int(rng.integers(1, 9))
        p = (0.2, 0.5, 0.8)[i % 3]
        mode = ("degree", "uniform")[(i // 3) % 2]
        out.append(gen_random_bipartite(n_a, n_b, p, rng, mode))
    return out


@pytest.fixture(scope="module")
def corpus():
    return bipartite_corpus()


def test_c1_greedy_half_guarantee(corpus):
    t0 = time.perf_counter()
    checked = violations = 0
    for inst, bip in corpus:
        for k in range(1, inst.graph.n + 1):
            ik = inst.with_budget(k)
            g = greedy_bipartite(ik, bip)
            opt = exact_mwbis(ik)
            g.check(ik)
            opt.check(ik)
            assert opt.proven_optimal
            # exact rational comparison, also for float weights
            if 2 * exact_sum(ik, g.vertices) < exact_sum(ik, opt.vertices):
                violations += 1
            checked += 1
    elapsed = time.perf_counter() - t0
    record("C1 greedy 2*value >= OPT", violations == 0 and elapsed < 60 and len(corpus) >= 500,
           f"{len(corpus)} instances, {checked} (instance,k) pairs, "
           f"{violations} violations, {elapsed:.1f}s (<60s)")


def test_c2_tight_family():
    bad = []
    big_time = None
    for k in (2, 4, 6, 8):
        for x in (5, 10, 50):
            inst, bip = gen_tight(k, x)
            t0 = time.perf_counter()
            opt = exact_mwbis(inst)
            dt = time.perf_counter() - t0
            if (k, x) == (8, 50):
                big_time = dt
            g = greedy_bipartite(inst, bip)
            ratio = Fraction(g.value, opt.value)
            if not (opt.proven_optimal and opt.value == k * x and g.value == k * x // 2 + k
                    and ratio == Fraction(1, 2) + Fraction(1, x)):
                bad.append((k, x, opt.value, g.value))
    record("C2 tight family exact=kx, greedy=kx/2+k, ratio=1/2+1/x",
           not bad and big_time < 5, f"12 cases, mismatches={bad}, k=8 x=50 solve {big_time:.3f}s (<5s)")


def test_c3_integrality_gap_family():
    details, ok = [], True
    for k in (2, 3, 4):
        inst, _ = gen_gap(k)
        ip = exact_mwbis(inst)
        lp = solve_lp(build_lp(inst))
        floor = (k * (k - 1) + 1) * (2 * k - 1) / k
        gap = ip.value / lp.objective
        bound = float(gap_upper_bound_formula(k))
        ok &= ip.proven_optimal and ip.value == k * k
        ok &= lp.objective >= floor - 1e-6
        ok &= gap <= bound + 1e-6
        details.append(f"k={k}: IP={ip.value} LP={lp.objective:.6f} gap={gap:.6f}<={bound:.6f}")
    inst5, _ = gen_gap(5)
    ip5 = exact_mwbis(inst5, SearchConfig(node_limit=10**7))
    ok &= ip5.proven_optimal and ip5.value == 25
    details.append(f"k=5: IP={ip5.value} certified={ip5.proven_optimal}")
    record("C3 integrality gap family", ok, "; ".join(details))


def three_k4_complement():
    blocks = [range(4 * c, 4 * c + 4) for c in range(3)]
    return build_graph(12, [e for b in blocks for e in combinations(b, 2)]).complement()


@pytest.fixture(scope="module")
def regular_sources():
    return [gen_random_regular(12, 8, np.random.default_rng(ss))
            for ss in spawn_seeds(CORPUS_SEED, 20)]


def test_c4_reduction_equivalence(regular_sources):
    mismatches, worst, counts = 0, 0.0, {True: 0, False: 0}
    sources = [(g, "random") for g in regular_sources]
    sources.append((three_k4_complement(), "3K4-complement"))
    for g, _ in sources:
        for k in (3, 4, 5):
            t0 = time.perf_counter()
            clique = naive_has_clique(12, g.edges(), k)
            ri = construct_bipartite(g, k)
            opt = exact_mivc_reduction(ri)
            worst = max(worst, time.perf_counter() - t0)
            counts[clique] += 1
            if clique != (opt.value >= ri.target):
                mismatches += 1
    record("C4 k-clique <=> reduction optimum >= target",
           mismatches == 0 and worst < 10 and counts[False] > 0,
           f"20 random + 1 structured source x k in {{3,4,5}}: {counts[True]} with clique, "
           f"{counts[False]} without, {mismatches} mismatches, worst trial {worst:.2f}s (<10s)")


def test_c5_clique_to_solution(regular_sources):
    checked, bad = 0, 0
    for g in regular_sources:
        for k in (3, 4, 5):
            clique = has_k_clique(g, k)
            if clique is None:
                continue
            ri = construct_bipartite(g, k)
            t = clique_to_solution(ri, clique)
            r = ri.r
            ok = (is_independent(ri.host, t) and len(t) == k + ri.x
                  and covered_edges(ri.host, t) == k * r + ri.x * (r - 1))
            bad += not ok
            checked += 1
    record("C5 clique -> independent set of size k+x covering kr+x(r-1)",
           bad == 0 and checked > 0, f"{checked} cliques mapped, {bad} failures")


def test_c6_coloring_extension():
    violations = checked = 0
    for i, ss in enumerate(spawn_seeds(CORPUS_SEED + 6, 200)):
        rng = np.random.default_rng(ss)
        n = int(rng.integers(1, 13))
        g = gen_random_graph(n, float(rng.uniform(0.1, 0.9)), rng)
        colorings = (greedy_coloring(g), degeneracy_coloring(g))
        for k in range(1, n + 1):
            inst = WeightedInstance.degree_weighted(g, k)
            opt = exact_mwbis(inst).value
            for col in colorings:
                assert col.is_proper_for(g)
                if col.num_colors * color_class_approx(inst, col).value < opt:
                    violations += 1
                checked += 1
    record("C6 p * color-class value >= OPT (Delta+1 and degeneracy colorings)",
           violations == 0, f"200 graphs, {checked} checks, {violations} violations")


def test_c7_oracle_cross_validation(regular_sources):
    bad_exact = bad_mwis = bad_red = 0
    for i, ss in enumerate(spawn_seeds(CORPUS_SEED + 7, 200)):
        rng = np.random.default_rng(ss)
        n = int(rng.integers(1, 13))
        g = gen_random_graph(n, float(rng.uniform(0.1, 0.9)), rng)
        weights = (g.degrees if i % 2 else tuple(int(w) for w in rng.integers(1, 20, n)))
        for k in range(n + 1):
            if i % 2:
                inst = WeightedInstance.degree_weighted(g, k)
            else:
                inst = WeightedInstance(g, weights, k)
            bad_exact += exact_mwbis(inst).value != naive_mwbis(n, g.edges(), weights, k)
    for ss in spawn_seeds(CORPUS_SEED + 77, 200):
        rng = np.random.default_rng(ss)
        n_a = int(rng.integers(0, 7))
        n_b = int(rng.integers(0, 13 - n_a))
        inst, bip = gen_random_bipartite(n_a, n_b, float(rng.uniform(0.1, 1.0)), rng, "uniform")
        s = mwis_bipartite_exact(inst.graph, inst.weights, bip)
        brute = naive_mwis(inst.graph.n, inst.graph.edges(), inst.weights)
        got = sum(inst.weights[v] for v in s)
        bad_mwis += not (is_independent(inst.graph, s) and abs(got - brute) <= 1e-9 * max(1, brute))
    hosts = 0
    for g in regular_sources[:5]:
        ri = construct_bipartite(g, 3)
        for budget in range(1, 7):
            general = exact_mwbis(ri.host_instance(budget))
            bad_red += not general.proven_optimal or exact_mivc_reduction(ri, budget).value != general.value
            hosts += 1
    record("C7 oracle cross-validation", bad_exact == bad_mwis == bad_red == 0,
           f"exact vs enumeration: {bad_exact} bad over 200 graphs; "
           f"bipartite MWIS vs brute force: {bad_mwis} bad over 200; "
           f"reduction oracle vs exact: {bad_red} bad over {hosts} host budgets")


def test_c8_lp_dominance(corpus):
    checked = skipped = bad = 0
    worst_resid = 0.0
    for inst, _ in corpus:
        for k in range(1, inst.graph.n + 1):
            ik = inst.with_budget(k)
            try:
                model = build_lp(ik)
            except CliqueLimitError:
                skipped += 1
                continue
            lp = solve_lp(model)
            resid = float(model.residuals(lp.values).max(initial=0.0))
            worst_resid = max(worst_resid, resid)
            ip = exact_mwbis(ik).value
            tol = 0 if lp.exact_objective is not None else 1e-9 * max(1.0, abs(ip))
            lp_val = lp.exact_objective if lp.exact_objective is not None else lp.objective
            bad += lp.status != "optimal" or lp_val < ip - tol or resid > 1e-9
            checked += 1
    record("C8 LP >= IP with residuals <= 1e-9", bad == 0,
           f"{checked} LPs, {skipped} skipped, {bad} failures, max residual {worst_resid:.2e}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
