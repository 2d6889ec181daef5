"""Brute-force reference implementations, independent of the package solvers."""

from itertools import combinations


def independent(adj, vs):
    return all(v not in adj[u] for u, v in combinations(vs, 2))


def naive_mwbis(n, edges, weights, k):
    """Best weight over every independent subset of size <= k."""
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    best = 0
    for size in range(1, min(k, n) + 1):
        for vs in combinations(range(n), size):
            if independent(adj, vs):
                best = max(best, sum(weights[v] for v in vs))
    return best


def naive_mwis(n, edges, weights):
    """Best weight over every independent set, by bitmask."""
    nbr = [0] * n
    for u, v in edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    best = 0
    for mask in range(1 << n):
        if all(not (mask >> v & 1) or not (nbr[v] & mask) for v in range(n)):
            best = max(best, sum(weights[v] for v in range(n) if mask >> v & 1))
    return best


def naive_has_clique(n, edges, k):
    es = {frozenset(e) for e in edges}
    return any(all(frozenset(p) in es for p in combinations(vs, 2))
               for vs in combinations(range(n), k))


def naive_degeneracy(n, edges):
    """Max over subgraphs of the min degree, by peeling any min-degree vertex."""
    alive = set(range(n))
    adj = [set() for _ in range(n)]
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    d = 0
    while alive:
        v = min(alive, key=lambda u: len(adj[u] & alive))
        d = max(d, len(adj[v] & alive))
        alive.remove(v)
    return d
