"""Exact and approximate solvers for the budgeted weighted independent set problem."""

from __future__ import annotations

import heapq
import time
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import (
    Bipartition,
    Coloring,
    Graph,
    GraphError,
    Solution,
    WeightedInstance,
    make_solution,
    set_weight,
)


@dataclass(frozen=True)
class SearchConfig:
    node_limit: int | None = None
    time_limit: float | None = None  # seconds

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise ValueError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


class _LimitReached(Exception):
    pass


def top_k(vertices: Iterable[int], weights: Sequence, k: int) -> list[int]:
    """The ``k`` heaviest of ``vertices``; ties go to the lower id."""
    return heapq.nsmallest(k, vertices, key=lambda v: (-weights[v], v))


def exact_mwbis(instance: WeightedInstance, config: SearchConfig | None = None) -> Solution:
    """Branch and bound over vertices in non-increasing weight order.

    At each node the remaining candidates are sorted heaviest first, so the
    bound ``value + (sum of the next b candidate weights)`` is a prefix sum,
    where ``b`` is the unused budget. Choosing a vertex deletes its
    neighbours from the candidate list.

    If a node or time limit in ``config`` is hit, the best solution found so
    far is returned with ``proven_optimal=False``.
    """
    config = config or SearchConfig()
    g, w, k = instance.graph, instance.weights, instance.k
    nbr = g.neighbor_sets
    # weight-0 vertices (isolated, under degree weights) never help
    order = sorted((v for v in range(g.n) if w[v] > 0), key=lambda v: (-w[v], v))
    eps = 0 if instance.integral else 1e-12 * max(1.0, sum(w[v] for v in order))

    best_set = _greedy_incumbent(order, nbr, k)
    best_val = set_weight(instance, best_set)
    nodes = 0
    deadline = None if config.time_limit is None else time.monotonic() + config.time_limit

    def search(cands: list[int], chosen: list[int], value, budget: int):
        nonlocal best_set, best_val, nodes
        if budget == 0 or not cands:
            return
        prefix = [0]
        for v in cands:
            prefix.append(prefix[-1] + w[v])
        n_c = len(cands)
        for i, v in enumerate(cands):
            bound = value + prefix[min(n_c, i + budget)] - prefix[i]
            if bound <= best_val + eps:
                return
            nodes += 1
            if config.node_limit is not None and nodes > config.node_limit:
                raise _LimitReached
            if deadline is not None and nodes % 512 == 0 and time.monotonic() > deadline:
                raise _LimitReached
            chosen.append(v)
            new_value = value + w[v]
            if new_value > best_val + eps:
                best_val, best_set = new_value, list(chosen)
            nv = nbr[v]
            search([u for u in cands[i + 1:] if u not in nv], chosen, new_value, budget - 1)
            chosen.pop()

    proven = True
    try:
        search(order, [], 0, k)
    except _LimitReached:
        proven = False
    return make_solution(instance, best_set, "exact", proven)


def _greedy_incumbent(order, nbr, k):
    chosen: list[int] = []
    blocked: set[int] = set()
    for v in order:
        if len(chosen) == k:
            break
        if v not in blocked:
            chosen.append(v)
            blocked |= nbr[v]
    return chosen


def greedy_bipartite(instance: WeightedInstance, bip: Bipartition) -> Solution:
    """Take the ``k`` heaviest vertices of each side and return the heavier set.

    Ties favour ``side_a``. Guarantees at least half the optimum on
    bipartite graphs.
    """
    s_a = top_k(bip.side_a, instance.weights, instance.k)
    s_b = top_k(bip.side_b, instance.weights, instance.k)
    if set_weight(instance, s_a) >= set_weight(instance, s_b):
        return make_solution(instance, s_a, "greedy")
    return make_solution(instance, s_b, "greedy")


def color_class_approx(instance: WeightedInstance, coloring: Coloring) -> Solution:
    """Heaviest per-class top-``k`` set; a ``1/p`` approximation for ``p`` colors."""
    best, best_val = [], None
    for cls_ in coloring.classes:
        s = top_k(cls_, instance.weights, instance.k)
        val = set_weight(instance, s)
        if best_val is None or val > best_val:
            best, best_val = s, val
    return make_solution(instance, best, "color")


def mwis_bipartite_exact(graph: Graph, weights: Sequence, bip: Bipartition) -> frozenset[int]:
    """Maximum-weight independent set of a bipartite graph (no budget).

    Computes a minimum cut of the network source -> side_a -> side_b -> sink,
    with vertex weights on the terminal arcs and unbounded middle arcs. The
    source side of the cut, restricted to side_a, together with side_b minus
    the source side, is the complement of a minimum-weight vertex cover.
    """
    n = graph.n
    src, snk = n, n + 1
    cap: list[dict[int, float]] = [dict() for _ in range(n + 2)]

    def arc(u, v, c):
        cap[u][v] = cap[u].get(v, 0) + c
        cap[v].setdefault(u, 0)

    inf = float("inf")
    for v in bip.side_a:
        arc(src, v, weights[v])
        for u in graph.adjacency[v]:
            arc(v, u, inf)
    for v in bip.side_b:
        arc(v, snk, weights[v])

    tol = 1e-12
    while True:
        # shortest augmenting path by BFS
        pred = {src: None}
        queue = deque([src])
        while queue and snk not in pred:
            u = queue.popleft()
            for v, c in cap[u].items():
                if c > tol and v not in pred:
                    pred[v] = u
                    queue.append(v)
        if snk not in pred:
            break
        path, v = [], snk
        while pred[v] is not None:
            path.append((pred[v], v))
            v = pred[v]
        delta = min(cap[u][v] for u, v in path)
        for u, v in path:
            cap[u][v] -= delta
            cap[v][u] += delta

    reach = set(pred)
    return frozenset((bip.side_a & reach) | (bip.side_b - reach))


def truncate_to_budget(vertices: Iterable[int], weights: Sequence, k: int,
                       instance: WeightedInstance | None = None) -> Solution:
    """Keep the ``k`` heaviest vertices of an independent set (ties: lower id).

    The result weighs at least ``k/|S|`` of the input set ``S``. When
    ``instance`` is omitted the value is summed over ``weights`` directly.
    """
    kept = top_k(set(vertices), weights, k)
    if instance is not None:
        return make_solution(instance, kept, "truncate")
    return Solution(frozenset(kept), sum(weights[v] for v in sorted(kept)), "truncate")


def truncated_mwis(instance: WeightedInstance, bip: Bipartition) -> Solution:
    """Exact bipartite MWIS cut down to the budget; a ``k/n`` approximation."""
    if not bip.is_valid_for(instance.graph):
        raise GraphError("bipartition does not match the graph")
    s = mwis_bipartite_exact(instance.graph, instance.weights, bip)
    return truncate_to_budget(s, instance.weights, instance.k, instance)
