from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mwbis.generators import gen_gap, gen_random_regular, gen_tight
from mwbis.graph import (
    Bipartition,
    Coloring,
    GraphError,
    Solution,
    WeightedInstance,
    bipartition,
    build_graph,
    covered_edges,
    degeneracy_coloring,
    degeneracy_order,
    degree_weights,
    greedy_coloring,
    is_independent,
    set_weight,
)

from oracles import naive_degeneracy

P3 = build_graph(3, [(0, 1), (1, 2)])
TRIANGLE = build_graph(3, [(0, 1), (1, 2), (0, 2)])
EDGE = build_graph(2, [(0, 1)])
STAR3 = build_graph(4, [(0, 1), (0, 2), (0, 3)])


@st.composite
def graphs(draw, max_n=12):
    n = draw(st.integers(1, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return build_graph(n, chosen)


def test_build_graph_basic():
    assert EDGE.m == 1 and EDGE.degrees == (1, 1)
    assert P3.degrees == (1, 2, 1)
    g = build_graph(3, [(0, 1), (1, 0), (1, 2)])
    assert g.m == 2
    assert g.adjacency == ((1,), (0, 2), (1,))


@pytest.mark.parametrize("edge", [(1, 1), (0, 3), (-1, 0)])
def test_build_graph_rejects(edge):
    with pytest.raises(GraphError, match=str(edge[0])):
        build_graph(3, [(0, 1), edge])


@given(graphs())
def test_graph_invariants(g):
    assert g.m * 2 == sum(g.degrees)
    for v, nbrs in enumerate(g.adjacency):
        assert list(nbrs) == sorted(set(nbrs))
        assert v not in nbrs
        for u in nbrs:
            assert v in g.adjacency[u]
    assert len(g.edges()) == g.m


def test_degree_weights():
    assert degree_weights(EDGE) == (1, 1)
    assert degree_weights(STAR3) == (3, 1, 1, 1)
    g = gen_random_regular(12, 8, seed=3)
    assert set(degree_weights(g)) == {8}


def test_is_independent():
    assert is_independent(P3, {0, 2})
    assert not is_independent(P3, {0, 1})
    assert is_independent(P3, set())


def test_set_weight_and_coverage():
    inst = WeightedInstance.degree_weighted(P3, 1)
    assert set_weight(inst, {1}) == 2
    assert set_weight(inst, {0, 2}) == 2
    assert covered_edges(P3, {1}) == 2
    assert covered_edges(P3, {0, 1}) == 2
    gap, _ = gen_gap(3)
    # hub a0 plus two leaves
    assert set_weight(gap, {0, 8, 9}) == 9


def test_weights_validation():
    with pytest.raises(GraphError):
        WeightedInstance(P3, (1, 0, 1), 1)
    with pytest.raises(GraphError):
        WeightedInstance(P3, (1, 2), 1)
    with pytest.raises(GraphError):
        WeightedInstance(P3, (1, 2, 1), -1)
    with pytest.raises(GraphError):
        WeightedInstance(P3, (1, 3, 1), 1, mivc=True)
    # isolated vertex: weight 0 only under degree weights
    iso = build_graph(3, [(0, 1)])
    assert WeightedInstance.degree_weighted(iso, 2).weights == (1, 1, 0)
    assert WeightedInstance(P3, (1.5, 2, 1), 1).integral is False
    assert WeightedInstance.degree_weighted(P3, 1).integral


@settings(max_examples=60)
@given(graphs(max_n=10))
def test_coverage_equals_degree_sum_on_independent_sets(g):
    inst = WeightedInstance.degree_weighted(g, g.n)
    for size in range(g.n + 1):
        for s in combinations(range(g.n), size):
            if is_independent(g, s):
                assert covered_edges(g, s) == set_weight(inst, s)
            else:
                assert covered_edges(g, s) < sum(g.degree(v) for v in s)


def test_solution_check():
    inst = WeightedInstance.degree_weighted(P3, 1)
    Solution(frozenset({1}), 2, "t").check(inst)
    with pytest.raises(GraphError, match="independent"):
        Solution(frozenset({0, 1}), 3, "t").check(inst.with_budget(2))
    with pytest.raises(GraphError, match="budget"):
        Solution(frozenset({0, 2}), 2, "t").check(inst)
    with pytest.raises(GraphError, match="value"):
        Solution(frozenset({1}), 3, "t").check(inst)


def test_bipartition_examples():
    bip, cyc = bipartition(P3)
    assert cyc is None
    assert {bip.side_a, bip.side_b} == {frozenset({0, 2}), frozenset({1})}
    bip, cyc = bipartition(TRIANGLE)
    assert bip is None and set(cyc) == {0, 1, 2}
    inst, _ = gen_tight(4, 5)
    bip, _ = bipartition(inst.graph)
    assert len(bip.side_a) == len(bip.side_b) == 11


@given(graphs())
def test_bipartition_certificate_or_odd_cycle(g):
    bip, cyc = bipartition(g)
    if bip is not None:
        assert bip.is_valid_for(g)
    else:
        assert len(cyc) % 2 == 1 and len(set(cyc)) == len(cyc)
        for i, v in enumerate(cyc):
            assert g.has_edge(v, cyc[(i + 1) % len(cyc)])


def test_invalid_bipartition_detected():
    assert not Bipartition(frozenset({0, 1}), frozenset({2})).is_valid_for(P3)


def test_colorings_small():
    assert greedy_coloring(TRIANGLE).num_colors == 3
    assert greedy_coloring(EDGE).num_colors == 2
    order, d = degeneracy_order(P3)
    assert d == naive_degeneracy(3, P3.edges()) == 1
    assert greedy_coloring(P3, order[::-1]).num_colors == 2
    assert degeneracy_order(TRIANGLE)[1] == 2
    star5 = build_graph(6, [(0, i) for i in range(1, 6)])
    assert degeneracy_order(star5)[1] == 1


def test_coloring_rejects_bad_order():
    with pytest.raises(GraphError):
        greedy_coloring(P3, [0, 1])


@given(graphs())
def test_coloring_bounds(g):
    natural = greedy_coloring(g)
    assert natural.is_proper_for(g)
    assert natural.num_colors <= g.max_degree + 1
    order, d = degeneracy_order(g)
    assert sorted(order) == list(range(g.n))
    assert d == naive_degeneracy(g.n, g.edges())
    degen = degeneracy_coloring(g)
    assert degen.is_proper_for(g)
    assert degen.num_colors <= d + 1


def test_coloring_from_bipartition():
    bip, _ = bipartition(P3)
    col = Coloring.from_bipartition(bip)
    assert col.num_colors == 2 and col.is_proper_for(P3)
