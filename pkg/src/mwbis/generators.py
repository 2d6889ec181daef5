"""Instance families: tight example, integrality-gap example, random graphs.

Randomness comes from numpy's PCG64 bit generator (``numpy.random.default_rng``),
seeded with a 64-bit integer. Corpora derive per-instance streams with
``SeedSequence.spawn`` so they reproduce across platforms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import Bipartition, Graph, WeightedInstance, build_graph


class GenerationError(RuntimeError):
    pass


def make_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def spawn_seeds(seed: int, count: int) -> list[np.random.SeedSequence]:
    return np.random.SeedSequence(seed).spawn(count)


def gen_tight(k: int, x: int) -> tuple[WeightedInstance, Bipartition]:
    """Two mirrored chains of ``k/2`` degree-``x`` hubs joined by one bridge edge.

    In each copy, hub ``i`` has ``x`` leaves ``b[i][0..x-1]`` and consecutive
    hubs share an endpoint (``b[i][x-1] == b[i+1][0]``). The bridge joins
    ``b[0][0]`` of the two copies, which puts the hubs of the second copy on
    the opposite side. Vertex ids: copy-1 hubs, copy-1 leaves, copy-2 hubs,
    copy-2 leaves. Degree weights, budget ``k``.
    """
    if not isinstance(k, int) or k < 2 or k % 2:
        raise ValueError(f"k must be an even integer >= 2, got {k!r}")
    if not isinstance(x, int) or x < 2:
        raise ValueError(f"x must be an integer >= 2, got {x!r}")
    half = k // 2
    n_b = half * (x - 1) + 1
    copy_size = half + n_b
    edges = []
    hubs, leaves = [], []
    for base in (0, copy_size):
        for i in range(half):
            hub = base + i
            for j in range(x):
                edges.append((hub, base + half + i * (x - 1) + j))
        hubs.append(range(base, base + half))
        leaves.append(range(base + half, base + copy_size))
    edges.append((half, copy_size + half))
    graph = build_graph(2 * copy_size, edges)
    side_a = frozenset(hubs[0]) | frozenset(leaves[1])
    bip = Bipartition(side_a, frozenset(range(graph.n)) - side_a)
    return WeightedInstance.degree_weighted(graph, k), bip


def gen_gap(k: int) -> tuple[WeightedInstance, Bipartition]:
    """Hub ``a0`` joined to ``p = k(k-1)+1`` vertices ``b_i``, each with ``k-1`` private leaves.

    Ids: ``a0 = 0``, ``b_i = i`` for ``i = 1..p``, then the leaves of ``b_1``,
    ``b_2``, ... in order. Degree weights, budget ``k``.
    """
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"k must be an integer >= 2, got {k!r}")
    p = k * (k - 1) + 1
    edges = [(0, i) for i in range(1, p + 1)]
    nxt = p + 1
    for i in range(1, p + 1):
        for _ in range(k - 1):
            edges.append((i, nxt))
            nxt += 1
    graph = build_graph(nxt, edges)
    side_b = frozenset(range(1, p + 1))
    bip = Bipartition(frozenset(range(graph.n)) - side_b, side_b)
    return WeightedInstance.degree_weighted(graph, k), bip


def _configuration_model(n: int, r: int, rng: np.random.Generator, max_tries: int,
                         forbid: frozenset[int] = frozenset()) -> list[tuple[int, int]]:
    """Uniform stub pairing with whole-sample rejection of loops and multi-edges.

    Stubs of ``forbid`` vertices are paired only with stubs of other
    vertices, so ``forbid`` comes out as an independent set.
    """
    inside = np.repeat(np.array(sorted(forbid), dtype=np.int64), r)
    outside = np.repeat(np.array([v for v in range(n) if v not in forbid], dtype=np.int64), r)
    if len(inside) > len(outside):
        raise GenerationError(f"cannot keep {len(forbid)} vertices independent at degree {r}")
    for _ in range(max_tries):
        out = rng.permutation(outside)
        ins = rng.permutation(inside)
        rest = out[len(ins):]
        us = np.concatenate([ins, rest[0::2]])
        vs = np.concatenate([out[:len(ins)], rest[1::2]])
        if np.any(us == vs):
            continue
        pairs = set()
        ok = True
        for u, v in zip(us.tolist(), vs.tolist()):
            e = (u, v) if u < v else (v, u)
            if e in pairs:
                ok = False
                break
            pairs.add(e)
        if ok:
            return sorted(pairs)
    raise GenerationError(f"no simple {r}-regular graph on {n} vertices after {max_tries} tries")


def gen_random_regular(n: int, r: int, seed=None, max_tries: int = 10_000) -> Graph:
    """Uniformly random simple ``r``-regular graph on ``n`` vertices.

    For ``r > (n-1)/2`` the complement degree ``n-1-r`` is sampled instead
    and the result complemented; complementing is a bijection, so the
    sample stays uniform while rejection becomes far cheaper.
    """
    if n * r % 2:
        raise ValueError(f"n*r must be even, got n={n}, r={r}")
    if not 0 <= r < n:
        raise ValueError(f"need 0 <= r < n, got n={n}, r={r}")
    rng = make_rng(seed)
    if r > (n - 1) / 2:
        return gen_random_regular(n, n - 1 - r, rng, max_tries).complement()
    return build_graph(n, _configuration_model(n, r, rng, max_tries))


def gen_planted_clique_regular(n: int, r: int, k: int, seed=None,
                               max_tries: int = 10_000) -> tuple[Graph, frozenset[int]]:
    """Random ``r``-regular graph containing a clique on ``k`` random vertices.

    Samples the ``(n-1-r)``-regular complement with the planted set kept
    independent, then complements. Raises ``GenerationError`` when no such
    graph turns up within ``max_tries``.
    """
    if n * r % 2:
        raise ValueError(f"n*r must be even, got n={n}, r={r}")
    if not 0 <= r < n or not 1 <= k <= r + 1:
        raise ValueError(f"bad parameters n={n}, r={r}, k={k}")
    rng = make_rng(seed)
    planted = frozenset(int(v) for v in rng.choice(n, size=k, replace=False))
    edges = _configuration_model(n, n - 1 - r, rng, max_tries, planted)
    return build_graph(n, edges).complement(), planted


def gen_random_bipartite(n_a: int, n_b: int, edge_prob: float, seed=None,
                         weight_mode: str = "degree", lo: float = 1.0, hi: float = 10.0,
                         k: int = 1) -> tuple[WeightedInstance, Bipartition]:
    """Each of the ``n_a * n_b`` cross pairs is an edge independently.

    Side A is ``0..n_a-1``. ``weight_mode`` is ``"degree"`` or ``"uniform"``
    (reals drawn from ``[lo, hi)``, ``lo > 0``).
    """
    if not 0 < edge_prob <= 1:
        raise ValueError(f"edge_prob must be in (0, 1], got {edge_prob}")
    if n_a < 0 or n_b < 0:
        raise ValueError("side sizes must be non-negative")
    rng = make_rng(seed)
    mask = rng.random((n_a, n_b)) < edge_prob
    edges = [(i, n_a + j) for i, j in zip(*np.nonzero(mask))]
    graph = build_graph(n_a + n_b, [(int(u), int(v)) for u, v in edges])
    side_a = frozenset(range(n_a))
    bip = Bipartition(side_a, frozenset(range(n_a, n_a + n_b)))
    if weight_mode == "degree":
        return WeightedInstance.degree_weighted(graph, k), bip
    if weight_mode == "uniform":
        if not 0 < lo < hi:
            raise ValueError(f"need 0 < lo < hi, got lo={lo}, hi={hi}")
        weights = tuple(float(w) for w in rng.uniform(lo, hi, size=graph.n))
        return WeightedInstance(graph, weights, k), bip
    raise ValueError(f"unknown weight_mode {weight_mode!r}")


def gen_random_graph(n: int, edge_prob: float, seed=None) -> Graph:
    """Erdős–Rényi ``G(n, p)``."""
    rng = make_rng(seed)
    mask = np.triu(rng.random((n, n)) < edge_prob, 1)
    return build_graph(n, [(int(u), int(v)) for u, v in zip(*np.nonzero(mask))])


@dataclass(frozen=True)
class GenSpec:
    family: str  # tight | gap | regular | bipartite
    params: dict = field(default_factory=dict)
    seed: int | None = None

    def __post_init__(self):
        p = self.params
        if self.family == "tight":
            k, x = p.get("k"), p.get("x")
            if not isinstance(k, int) or k < 2 or k % 2 or not isinstance(x, int) or x < 2:
                raise ValueError("tight needs even k >= 2 and x >= 2")
        elif self.family == "gap":
            if not isinstance(p.get("k"), int) or p["k"] < 2:
                raise ValueError("gap needs k >= 2")
        elif self.family == "regular":
            n, r = p.get("n"), p.get("r")
            if not isinstance(n, int) or not isinstance(r, int) or n * r % 2 or not 0 <= r < n:
                raise ValueError("regular needs n*r even and 0 <= r < n")
        elif self.family == "bipartite":
            if not 0 < p.get("edge_prob", 0.5) <= 1:
                raise ValueError("bipartite needs edge_prob in (0, 1]")
        else:
            raise ValueError(f"unknown family {self.family!r}")

    def comments(self) -> list[str]:
        args = " ".join(f"{key}={val}" for key, val in sorted(self.params.items()))
        out = [f"family {self.family} {args}".rstrip()]
        if self.seed is not None:
            out.append(f"seed {self.seed} rng PCG64")
        return out


def generate(spec: GenSpec) -> tuple[Graph, tuple | None, Bipartition | None]:
    """Graph, explicit weights (``None`` means degree weights), and bipartition if known."""
    p = spec.params
    if spec.family == "tight":
        inst, bip = gen_tight(p["k"], p["x"])
        return inst.graph, None, bip
    if spec.family == "gap":
        inst, bip = gen_gap(p["k"])
        return inst.graph, None, bip
    if spec.family == "regular":
        return gen_random_regular(p["n"], p["r"], spec.seed), None, None
    inst, bip = gen_random_bipartite(
        p.get("n_a", 8), p.get("n_b", 8), p.get("edge_prob", 0.5), spec.seed,
        p.get("weight_mode", "degree"), p.get("lo", 1.0), p.get("hi", 10.0),
    )
    return inst.graph, (None if inst.mivc else inst.weights), bip
