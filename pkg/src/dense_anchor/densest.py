"""Densest subgraph: exact flow-based solver and greedy peeling.

The exact solver maximizes ``w(S) - g|S|`` with one min cut per threshold
``g`` and raises ``g`` to the density of the maximizer until no set beats it.
Thresholds are exact rationals and capacities are scaled to integers, so the
final answer is certified optimal, not approximately optimal.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .flow import FlowNetwork
from .graph import VertexSet, WeightedGraph, edge_weight_within

__all__ = ["DensestResult", "densest_exact", "densest_greedy"]


@dataclass(frozen=True)
class DensestResult:
    subset: VertexSet
    density: Fraction
    exact: bool


def _tie_key(s) -> tuple[int, VertexSet]:
    t = tuple(sorted(s))
    return (len(t), t)


class _ThresholdNetwork:
    """Cut network whose minimum cut is ``2 w(V) - 2 max_S (w(S) - g|S|)``.

    source -> v carries deg(v), v -> sink carries 2g, each edge both ways
    carries w(e); all multiplied by ``q * D`` to stay integral.
    """

    def __init__(self, g: WeightedGraph, vs: list[int], threshold: Fraction, forced: int | None = None):
        denom, iadj = g.scaled()
        p, q = threshold.numerator, threshold.denominator
        self.vs = vs
        index = {v: i for i, v in enumerate(vs)}
        n = len(vs)
        self.source, self.sink = n, n + 1
        net = FlowNetwork(n + 2)
        total = 0
        for v in vs:
            i = index[v]
            deg = 0
            for u, c in iadj[v].items():
                j = index.get(u)
                if j is None:
                    continue
                deg += c
                if v < u:
                    net.add_edge(i, j, q * c, q * c)
            total += deg
            net.add_edge(self.source, i, q * deg)
            net.add_edge(i, self.sink, 2 * p * denom)
        self.big = q * total + 2 * p * denom * n + 1
        if forced is not None:
            net.add_edge(self.source, index[forced], self.big)
        self.net = net
        self.total = total * q
        self.cut = net.max_flow(self.source, self.sink)

    def minimal_side(self) -> frozenset[int]:
        reach = self.net.reachable(self.source)
        return frozenset(v for i, v in enumerate(self.vs) if i in reach)

    def maximal_side(self) -> frozenset[int]:
        reach = self.net.reaching(self.sink)
        return frozenset(v for i, v in enumerate(self.vs) if i not in reach)


def _density(g: WeightedGraph, s) -> Fraction:
    return edge_weight_within(g, s) / len(s)


def densest_exact(g: WeightedGraph) -> DensestResult:
    """A maximum-density vertex set.

    Among equally dense sets the smallest is returned, then the
    lexicographically smallest sorted tuple.
    """
    if not g.num_edges:
        raise DomainError("densest subgraph of an edgeless graph is undefined")
    vs = [v for v in g.vertices() if g.degree(v) > 0]
    best = frozenset(vs)
    best_d = _density(g, best)
    while True:
        net = _ThresholdNetwork(g, vs, best_d)
        side = net.minimal_side()
        # empty minimal side means no set has w(S) - g|S| > 0
        if not side:
            break
        best, best_d = side, _density(g, side)
    # densest sets form a lattice under union/intersection; all lie inside
    # the maximal maximizer at the optimal threshold
    top = sorted(net.maximal_side() or best)
    candidates = []
    for v in top:
        forced = _ThresholdNetwork(g, top, best_d, forced=v)
        side = forced.minimal_side()
        if side and _density(g, side) == best_d:
            candidates.append(side)
    if candidates:
        best = min(candidates, key=_tie_key)
    return DensestResult(tuple(sorted(best)), best_d, True)


def densest_greedy(g: WeightedGraph) -> DensestResult:
    """Greedy peeling: drop a minimum weighted-degree vertex (smallest id on
    ties) and keep the densest prefix. The density is at least half optimal."""
    if not g.num_edges:
        raise DomainError("densest subgraph of an edgeless graph is undefined")
    deg = [sum(g.neighbors(v).values(), Fraction(0)) for v in g.vertices()]
    alive = set(g.vertices())
    heap = [(deg[v], v) for v in alive]
    heapq.heapify(heap)
    weight = g.total_weight
    best_d = weight / len(alive)
    best_size = len(alive)
    removed: list[int] = []
    while len(alive) > 1:
        d, v = heapq.heappop(heap)
        if v not in alive or d != deg[v]:
            continue
        alive.discard(v)
        removed.append(v)
        weight -= deg[v]
        for u, w in g.neighbors(v).items():
            if u in alive:
                deg[u] -= w
                heapq.heappush(heap, (deg[u], u))
        cur = weight / len(alive)
        if cur >= best_d:
            best_d, best_size = cur, len(alive)
    subset = set(g.vertices()) - set(removed[: g.n - best_size])
    return DensestResult(tuple(sorted(subset)), best_d, False)
