"""Graphs, weighted budgeted instances, and the independence/coverage primitives.

Vertices are the integers ``0..n-1``. Graph objects are immutable once built.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from numbers import Real
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for malformed graphs, instances, or solutions."""


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: tuple[tuple[int, ...], ...]
    m: int = field(init=False)

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise GraphError(f"adjacency has {len(self.adjacency)} rows, expected n={self.n}")
        total = 0
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"neighbor list of {v} is not sorted and duplicate-free")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbor {u} of vertex {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at vertex {v}")
            total += len(nbrs)
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if v not in self.neighbor_sets[u]:
                    raise GraphError(f"adjacency not symmetric on edge ({v}, {u})")
        object.__setattr__(self, "m", total // 2)

    @cached_property
    def neighbor_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(nbrs) for nbrs in self.adjacency)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(nbrs) for nbrs in self.adjacency)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbor_sets[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def complement(self) -> Graph:
        return build_graph(
            self.n,
            [(u, v) for u in range(self.n) for v in range(u + 1, self.n) if not self.has_edge(u, v)],
        )


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple undirected graph; duplicate edges are collapsed.

    Raises
    ------
    GraphError
        On a self-loop or an out-of-range endpoint; the message names the edge.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
        if u == v:
            raise GraphError(f"edge ({u}, {v}) is a self-loop")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


def degree_weights(graph: Graph) -> tuple[int, ...]:
    return graph.degrees


def _is_integral(w) -> bool:
    return isinstance(w, int) and not isinstance(w, bool)


@dataclass(frozen=True)
class WeightedInstance:
    """A graph, per-vertex weights, and a cardinality budget ``k``.

    Weights must be positive. The one exception is a degree-weighted (MIVC)
    instance, where isolated vertices carry weight 0.
    """

    graph: Graph
    weights: tuple
    k: int
    mivc: bool = False

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))
        if len(self.weights) != self.graph.n:
            raise GraphError(f"{len(self.weights)} weights for {self.graph.n} vertices")
        if not isinstance(self.k, int) or self.k < 0:
            raise GraphError(f"budget k must be a non-negative integer, got {self.k!r}")
        for v, w in enumerate(self.weights):
            if not isinstance(w, Real) or isinstance(w, bool) or not math.isfinite(w):
                raise GraphError(f"weight of vertex {v} is not a finite real: {w!r}")
        if self.mivc:
            if self.weights != self.graph.degrees:
                raise GraphError("MIVC instance weights must equal vertex degrees")
        else:
            for v, w in enumerate(self.weights):
                if w <= 0:
                    raise GraphError(f"weight of vertex {v} must be positive, got {w}")

    @classmethod
    def degree_weighted(cls, graph: Graph, k: int) -> WeightedInstance:
        return cls(graph, degree_weights(graph), k, mivc=True)

    @cached_property
    def integral(self) -> bool:
        return all(_is_integral(w) for w in self.weights)

    def with_budget(self, k: int) -> WeightedInstance:
        return WeightedInstance(self.graph, self.weights, k, self.mivc)


def is_independent(graph: Graph, vertices: Iterable[int]) -> bool:
    chosen = set(vertices)
    nbr = graph.neighbor_sets
    return all(nbr[v].isdisjoint(chosen) for v in chosen)


def set_weight(instance: WeightedInstance, vertices: Iterable[int]):
    """Total weight of ``vertices``: exact ``int`` for integer weights, ``fsum`` otherwise."""
    ws = [instance.weights[v] for v in sorted(set(vertices))]
    if instance.integral:
        return sum(ws)
    return math.fsum(ws)


def covered_edges(graph: Graph, vertices: Iterable[int]) -> int:
    chosen = set(vertices)
    covered = sum(graph.degree(v) for v in chosen)
    # edges with both endpoints chosen were counted twice
    inner = sum(1 for v in chosen for u in graph.adjacency[v] if u in chosen) // 2
    return covered - inner


@dataclass(frozen=True)
class Solution:
    vertices: frozenset[int]
    value: float
    method: str
    proven_optimal: bool = False

    def check(self, instance: WeightedInstance) -> None:
        """Raise ``GraphError`` unless this is a feasible solution with the right value."""
        if any(not 0 <= v < instance.graph.n for v in self.vertices):
            raise GraphError("solution contains out-of-range vertex ids")
        if not is_independent(instance.graph, self.vertices):
            raise GraphError("solution is not an independent set")
        if len(self.vertices) > instance.k:
            raise GraphError(f"solution has {len(self.vertices)} vertices, budget is {instance.k}")
        expected = set_weight(instance, self.vertices)
        if instance.integral:
            ok = self.value == expected
        else:
            ok = math.isclose(self.value, expected, rel_tol=1e-12, abs_tol=1e-12)
        if not ok:
            raise GraphError(f"solution value {self.value} differs from recomputed {expected}")


def make_solution(instance: WeightedInstance, vertices: Iterable[int], method: str,
                  proven_optimal: bool = False) -> Solution:
    chosen = frozenset(vertices)
    return Solution(chosen, set_weight(instance, chosen), method, proven_optimal)


@dataclass(frozen=True)
class Bipartition:
    side_a: frozenset[int]
    side_b: frozenset[int]

    def is_valid_for(self, graph: Graph) -> bool:
        if self.side_a & self.side_b or len(self.side_a) + len(self.side_b) != graph.n:
            return False
        if any(not 0 <= v < graph.n for v in self.side_a | self.side_b):
            return False
        return all((u in self.side_a) != (v in self.side_a) for u, v in graph.edges())


def bipartition(graph: Graph) -> tuple[Bipartition | None, tuple[int, ...] | None]:
    """2-color ``graph`` by breadth-first layering, one component at a time.

    Returns ``(Bipartition, None)`` for bipartite graphs and ``(None, cycle)``
    otherwise, where ``cycle`` lists the vertices of an odd cycle in order.
    """
    side = [-1] * graph.n
    parent = [-1] * graph.n
    depth = [0] * graph.n
    for root in range(graph.n):
        if side[root] != -1:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in graph.adjacency[u]:
                if side[v] == -1:
                    side[v] = 1 - side[u]
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif side[v] == side[u]:
                    return None, _odd_cycle(u, v, parent, depth)
    a = frozenset(v for v in range(graph.n) if side[v] == 0)
    return Bipartition(a, frozenset(range(graph.n)) - a), None


def _odd_cycle(u, v, parent, depth):
    # walk both tree paths up to their lowest common ancestor
    pu, pv = [u], [v]
    while depth[pu[-1]] > depth[pv[-1]]:
        pu.append(parent[pu[-1]])
    while depth[pv[-1]] > depth[pu[-1]]:
        pv.append(parent[pv[-1]])
    while pu[-1] != pv[-1]:
        pu.append(parent[pu[-1]])
        pv.append(parent[pv[-1]])
    lca = pu.pop()
    pv.pop()
    return (lca, *reversed(pu), *pv)


@dataclass(frozen=True)
class Coloring:
    classes: tuple[frozenset[int], ...]

    @property
    def num_colors(self) -> int:
        return len(self.classes)

    @classmethod
    def from_bipartition(cls, bip: Bipartition) -> Coloring:
        return cls((bip.side_a, bip.side_b))

    def is_proper_for(self, graph: Graph) -> bool:
        seen: set[int] = set()
        for cls_ in self.classes:
            if seen & cls_ or not is_independent(graph, cls_):
                return False
            seen |= cls_
        return seen == set(range(graph.n))


def greedy_coloring(graph: Graph, order: Sequence[int] | None = None) -> Coloring:
    """First-fit coloring: each vertex, in ``order``, takes the smallest free color."""
    if order is None:
        order = range(graph.n)
    if sorted(order) != list(range(graph.n)):
        raise GraphError("order must be a permutation of the vertices")
    color = [-1] * graph.n
    for v in order:
        used = {color[u] for u in graph.adjacency[v]}
        c = 0
        while c in used:
            c += 1
        color[v] = c
    classes = [set() for _ in range(max(color, default=-1) + 1)]
    for v, c in enumerate(color):
        classes[c].add(v)
    return Coloring(tuple(frozenset(c) for c in classes))


def degeneracy_order(graph: Graph) -> tuple[list[int], int]:
    """Peel a minimum-degree vertex (lowest id on ties) until the graph is empty.

    Returns the removal order and the degeneracy ``d``, the largest degree
    seen at removal time. Coloring in the *reverse* order uses at most
    ``d + 1`` colors.
    """
    deg = list(graph.degrees)
    removed = [False] * graph.n
    heap = [(d, v) for v, d in enumerate(deg)]
    heapq.heapify(heap)
    order: list[int] = []
    d_max = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        order.append(v)
        d_max = max(d_max, d)
        for u in graph.adjacency[v]:
            if not removed[u]:
                deg[u] -= 1
                heapq.heappush(heap, (deg[u], u))
    return order, d_max


def degeneracy_coloring(graph: Graph) -> Coloring:
    order, _ = degeneracy_order(graph)
    return greedy_coloring(graph, order[::-1])
