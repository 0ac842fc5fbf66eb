"""Random and structured graph builders shared by the test modules."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction as F

from hypothesis import strategies as st

from dense_anchor import WeightedGraph

RATIONAL_WEIGHTS = [F(1, 2), F(1), F(3, 2), F(2), F(5, 3), F(3), F(7, 4)]


def clique_edges(labels, w=1):
    return [(a, b, w) for a, b in itertools.combinations(labels, 2)]


def complete(n, w=1) -> WeightedGraph:
    return WeightedGraph(n, clique_edges(range(n), w))


def cycle(n) -> WeightedGraph:
    return WeightedGraph(n, [(i, (i + 1) % n, 1) for i in range(n)])


def path(n) -> WeightedGraph:
    return WeightedGraph(n, [(i, i + 1, 1) for i in range(n - 1)])


def two_k10_shared() -> WeightedGraph:
    return WeightedGraph(19, clique_edges(range(10)) + clique_edges(range(9, 19)))


def two_k10_bridge() -> WeightedGraph:
    return WeightedGraph(20, clique_edges(range(10)) + clique_edges(range(10, 20)) + [(9, 10, 1)])


def triangle123() -> WeightedGraph:
    return WeightedGraph(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)])


def random_graph(rng: random.Random, n: int, p: float, weights: str = "mixed") -> WeightedGraph:
    """G(n, p) with at least one edge; weights 'unit', 'rational' or 'mixed'."""
    if weights == "mixed":
        weights = rng.choice(["unit", "rational"])
    while True:
        edges = []
        for u, v in itertools.combinations(range(n), 2):
            if rng.random() < p:
                w = F(1) if weights == "unit" else rng.choice(RATIONAL_WEIGHTS)
                edges.append((u, v, w))
        if edges:
            return WeightedGraph(n, edges)


def corpus(seed: int, count: int, n_range=(2, 10), p_range=(0.25, 0.8), weights="mixed"):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(*n_range)
        yield random_graph(rng, n, rng.uniform(*p_range), weights)


@st.composite
def graphs(draw, min_n=2, max_n=9, weighted=True):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=1, unique=True))
    if weighted:
        ws = draw(st.lists(st.sampled_from(RATIONAL_WEIGHTS), min_size=len(chosen), max_size=len(chosen)))
    else:
        ws = [F(1)] * len(chosen)
    return WeightedGraph(n, [(u, v, w) for (u, v), w in zip(chosen, ws)])
