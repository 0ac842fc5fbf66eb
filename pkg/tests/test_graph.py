import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dense_anchor import (
    DomainError,
    GraphValidationError,
    WeightedGraph,
    connected_components,
    density,
    extreme_weights,
    induced,
    weighted_degree,
)
from graphgen import complete, graphs, path, random_graph, triangle123, two_k10_shared


def test_constructor_rejects_non_simple_input():
    with pytest.raises(GraphValidationError):
        WeightedGraph(2, [(0, 0, 1)])
    with pytest.raises(GraphValidationError):
        WeightedGraph(2, [(0, 1, 1), (1, 0, 2)])
    with pytest.raises(GraphValidationError):
        WeightedGraph(2, [(0, 1, 0)])
    with pytest.raises(GraphValidationError):
        WeightedGraph(2, [(0, 1, F(-1, 2))])


def test_induced_k4_gives_k3():
    sub = induced(complete(4), [0, 2, 3])
    assert sub.n == 3 and sub.num_edges == 3
    assert sub.origin == (0, 2, 3)


def test_induced_path_endpoints_has_no_edges():
    sub = induced(path(3), [0, 2])
    assert sub.n == 2 and sub.num_edges == 0


def test_induced_empty_is_domain_error():
    with pytest.raises(DomainError):
        induced(complete(3), [])


def test_induced_matches_direct_filter():
    rng = random.Random(5)
    for _ in range(30):
        g = random_graph(rng, 8, 0.5)
        s = sorted(rng.sample(range(8), 5))
        sub = induced(g, s)
        expected = {(u, v, w) for u, v, w in g.edges() if u in s and v in s}
        got = {(sub.origin[u], sub.origin[v], w) for u, v, w in sub.edges()}
        assert got == expected


def test_density_examples():
    assert density(complete(5), range(5)) == 2
    assert density(complete(5), [3]) == 0
    assert density(two_k10_shared(), range(19)) == F(90, 19)
    with pytest.raises(DomainError):
        density(complete(3), [])


def test_weighted_degree_examples():
    g = complete(4)
    assert all(weighted_degree(g, range(4), v) == 3 for v in range(4))
    assert weighted_degree(triangle123(), range(3), 0) == 4
    with pytest.raises(DomainError):
        weighted_degree(g, [0, 1], 2)


def test_weighted_degree_matches_direct_sum():
    rng = random.Random(9)
    for _ in range(20):
        g = random_graph(rng, 9, 0.5, "rational")
        s = sorted(rng.sample(range(9), 6))
        for v in s:
            expected = sum((w for a, b, w in g.edges() if (a == v and b in s) or (b == v and a in s)), F(0))
            assert weighted_degree(g, s, v) == expected


def test_extreme_weights():
    assert extreme_weights(complete(4)) == (1, 1)
    g = WeightedGraph(3, [(0, 1, F(1, 2)), (1, 2, F(3, 2))])
    assert extreme_weights(g) == (F(1, 2), F(3, 2))
    with pytest.raises(DomainError):
        extreme_weights(WeightedGraph(3))
    rng = random.Random(2)
    edges = [(i, i + 1, F(rng.randint(1, 50), rng.randint(1, 50))) for i in range(100)]
    ws = sorted(w for *_, w in edges)
    assert extreme_weights(WeightedGraph(101, edges)) == (ws[0], ws[-1])


def _union_find_components(g):
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v, _ in g.edges():
        parent[find(u)] = find(v)
    groups = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(tuple(sorted(c)) for c in groups.values())


def test_connected_components_examples():
    assert connected_components(complete(4)) == [(0, 1, 2, 3)]
    g = WeightedGraph(6, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (3, 4, 1), (4, 5, 1), (3, 5, 1)])
    assert connected_components(g) == [(0, 1, 2), (3, 4, 5)]
    rng = random.Random(11)
    for _ in range(30):
        g = random_graph(rng, 20, 0.08)
        assert connected_components(g) == _union_find_components(g)


@given(graphs(max_n=10), st.data())
@settings(max_examples=80, deadline=None)
def test_density_times_size_is_internal_weight(g, data):
    s = data.draw(st.lists(st.integers(0, g.n - 1), min_size=1, unique=True))
    internal = sum((w for u, v, w in g.edges() if u in s and v in s), F(0))
    assert density(g, s) * len(s) == internal
    assert isinstance(density(g, s), F)


@given(graphs(max_n=10))
@settings(max_examples=60, deadline=None)
def test_degree_sum_is_twice_total_weight(g):
    assert sum(weighted_degree(g, range(g.n), v) for v in range(g.n)) == 2 * g.total_weight


@given(graphs(max_n=10))
@settings(max_examples=40, deadline=None)
def test_induced_on_all_vertices_is_identity(g):
    assert induced(g, range(g.n)) == g
