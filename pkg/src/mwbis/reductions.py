"""Clique on regular graphs -> independent vertex coverage on bipartite graphs.

From an ``r``-regular source graph ``G`` (``r = n - 4``, ``n > 11``) the host
``H`` has one vertex ``a_i`` per source edge, one vertex ``b_j`` per source
vertex, and ``r - 3`` pendant leaves hanging off every ``a_i``. ``a_i`` is
joined to ``b_j`` when edge ``i`` touches vertex ``j``. ``G`` has a
``k``-clique iff ``H`` has ``k + x`` independent vertices covering at least
``target`` edges.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import combinations
from math import comb

from .graph import (
    Graph,
    GraphError,
    Solution,
    WeightedInstance,
    build_graph,
    covered_edges,
    is_independent,
)


class ReductionError(ValueError):
    pass


class EquivalenceMismatch(AssertionError):
    pass


def coverage_target(n: int, k: int) -> tuple[int, int]:
    """``(x, target)`` with ``x = m - (kr - C(k,2))`` and ``target = kr + x(r-1)``."""
    if n <= 11:
        raise ReductionError(f"n must be greater than 11, got {n}")
    if not 1 <= k or 2 * k >= n:
        raise ReductionError(f"need 1 <= k < n/2, got n={n}, k={k}")
    r = n - 4
    if n * r % 2:
        raise ReductionError(f"no {r}-regular graph on {n} vertices (n*r is odd)")
    m = n * r // 2
    x = m - (k * r - comb(k, 2))
    return x, k * r + x * (r - 1)


@dataclass(frozen=True)
class ReductionInstance:
    source: Graph
    k: int
    host: Graph
    a_of_edge: tuple[int, ...]
    b_of_vertex: tuple[int, ...]
    pendants: dict
    x: int
    target: int

    @property
    def r(self) -> int:
        return self.source.n - 4

    @property
    def budget(self) -> int:
        return self.k + self.x

    def host_instance(self, budget: int | None = None) -> WeightedInstance:
        return WeightedInstance.degree_weighted(self.host, self.budget if budget is None else budget)


def construct_bipartite(source: Graph, k: int) -> ReductionInstance:
    """Build the host graph. Ids: ``a`` block (source edge order), then ``b``, then pendants."""
    n = source.n
    if n <= 11:
        raise ReductionError(f"source must have more than 11 vertices, got {n}")
    r = n - 4
    if any(d != r for d in source.degrees):
        raise ReductionError(f"source is not {r}-regular")
    if not 1 <= k or 2 * k >= n:
        raise ReductionError(f"need 1 <= k < n/2, got k={k}, n={n}")
    x, target = coverage_target(n, k)
    src_edges = source.edges()
    m = len(src_edges)
    a_of_edge = tuple(range(m))
    b_of_vertex = tuple(range(m, m + n))
    edges = []
    for i, (u, v) in enumerate(src_edges):
        edges.append((a_of_edge[i], b_of_vertex[u]))
        edges.append((a_of_edge[i], b_of_vertex[v]))
    pendants = {}
    nxt = m + n
    for i in range(m):
        for j in range(r - 3):
            pendants[(i, j)] = nxt
            edges.append((a_of_edge[i], nxt))
            nxt += 1
    host = build_graph(nxt, edges)
    return ReductionInstance(source, k, host, a_of_edge, b_of_vertex, pendants, x, target)


def _is_clique(graph: Graph, vertices) -> bool:
    return all(graph.has_edge(u, v) for u, v in combinations(vertices, 2))


def clique_to_solution(ri: ReductionInstance, clique) -> frozenset[int]:
    """``b`` vertices of the clique plus ``a`` vertices of all edges it does not touch."""
    clique = set(clique)
    if len(clique) != ri.k or not _is_clique(ri.source, clique):
        raise ReductionError(f"{sorted(clique)} is not a {ri.k}-clique of the source")
    untouched = [i for i, (u, v) in enumerate(ri.source.edges()) if u not in clique and v not in clique]
    return frozenset([ri.a_of_edge[i] for i in untouched] + [ri.b_of_vertex[j] for j in clique])


def exact_mivc_reduction(ri: ReductionInstance, budget: int | None = None,
                         max_source_vertices: int = 22) -> Solution:
    """Exact degree-weighted optimum on a host graph, by enumerating ``b`` subsets.

    Fixing the chosen ``b`` vertices forces the rest: every ``a`` vertex
    whose source edge avoids them is free and independent of the others, and
    each is worth ``r-1`` against a pendant's 1, so take as many as the
    budget allows and fill up with pendants of unchosen ``a`` vertices.
    Taking one ``a`` fewer frees ``r-3 < r-1`` pendants at most, so the
    greedy completion is optimal even when pendants run short.
    """
    budget = ri.budget if budget is None else budget
    src = ri.source
    n, r = src.n, ri.r
    if n > max_source_vertices:
        raise ReductionError(f"2^{n} subsets is too many; use exact_mwbis on the host instead")
    src_edges = src.edges()
    m = len(src_edges)
    edge_masks = [(1 << u) | (1 << v) for u, v in src_edges]
    best_val, best_mask, best_a = -1, 0, 0
    for mask in range(1 << n):
        s = mask.bit_count()
        if s > budget:
            continue
        free = sum(1 for em in edge_masks if not em & mask)
        a = min(budget - s, free)
        pend = min(budget - s - a, (m - a) * (r - 3))
        val = s * r + a * (r - 1) + pend
        if val > best_val:
            best_val, best_mask, best_a = val, mask, a
    chosen = [ri.b_of_vertex[j] for j in range(n) if best_mask >> j & 1]
    free_edges = [i for i, em in enumerate(edge_masks) if not em & best_mask]
    taken = free_edges[:best_a]
    chosen += [ri.a_of_edge[i] for i in taken]
    room = budget - len(chosen)
    taken_set = set(taken)
    for (i, _j), p in ri.pendants.items():
        if room == 0:
            break
        if i not in taken_set:
            chosen.append(p)
            room -= 1
    chosen_set = frozenset(chosen)
    value = covered_edges(ri.host, chosen_set)
    if value != best_val or not is_independent(ri.host, chosen_set):
        raise GraphError("forced completion produced an inconsistent witness")
    return Solution(chosen_set, value, "mivc-reduction", True)


def has_k_clique(graph: Graph, k: int) -> frozenset[int] | None:
    """A ``k``-clique of ``graph`` if one exists, else ``None``."""
    if k <= 0:
        return frozenset()
    nbr = graph.neighbor_sets
    eligible = [v for v in range(graph.n) if graph.degree(v) >= k - 1]

    def extend(clique: list[int], cands: list[int]):
        if len(clique) == k:
            return frozenset(clique)
        if len(clique) + len(cands) < k:
            return None
        for i, v in enumerate(cands):
            if len(clique) + len(cands) - i < k:
                break
            found = extend(clique + [v], [u for u in cands[i + 1:] if u in nbr[v]])
            if found is not None:
                return found
        return None

    return extend([], eligible)


@dataclass(frozen=True)
class EquivalenceReport:
    n: int
    k: int
    r: int
    m: int
    x: int
    target: int
    clique_found: bool
    mivc_opt: int
    equivalent: bool

    def as_dict(self) -> dict:
        return asdict(self)


def verify_equivalence(source: Graph, k: int, strict: bool = True) -> EquivalenceReport:
    """Check ``clique exists <=> host optimum >= target`` on one source graph.

    When a clique is found, its mapped vertex set is also checked to be
    independent, of size ``k + x``, and to cover exactly ``target`` edges.
    With ``strict`` a mismatch raises ``EquivalenceMismatch``.
    """
    ri = construct_bipartite(source, k)
    clique = has_k_clique(source, k)
    opt = exact_mivc_reduction(ri)
    ok = (clique is not None) == (opt.value >= ri.target)
    if clique is not None:
        t = clique_to_solution(ri, clique)
        ok = ok and (
            is_independent(ri.host, t) and len(t) == ri.budget
            and covered_edges(ri.host, t) == ri.target
        )
    report = EquivalenceReport(source.n, k, ri.r, source.m, ri.x, ri.target,
                               clique is not None, opt.value, ok)
    if strict and not ok:
        raise EquivalenceMismatch(f"reduction equivalence failed: {report}")
    return report
