"""Peeling and extraction of highly connected, high-degree subgraphs.

A graph of density ``d`` with heaviest edge ``w_max`` always contains a
``tau``-vertex-connected subgraph whose weighted degrees all exceed ``d``,
where ``tau = floor(ceil(d / w_max) / 2) + 1``. :func:`mader_subgraph` finds
one by splitting along small separators and re-peeling; the edge variant
finds a ``w_min * tau``-edge-connected one by splitting along light cuts.
"""

from __future__ import annotations

import heapq
import math
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .connectivity import _min_cut, _min_separator
from .errors import DomainError, InternalInvariantError
from .graph import (
    VertexSet,
    WeightedGraph,
    components_within,
    density,
    edge_weight_within,
    extreme_weights,
    is_clique,
    min_weighted_degree,
)

__all__ = ["MaderThreshold", "MaderResult", "mader_tau", "peel", "mader_subgraph", "mader_edge_subgraph"]


def mader_tau(d: Fraction, w_max: Fraction) -> int:
    """floor(ceil(d / w_max) / 2) + 1, exactly."""
    return math.ceil(Fraction(d) / Fraction(w_max)) // 2 + 1


@dataclass(frozen=True)
class MaderThreshold:
    d: Fraction
    w_min_local: Fraction
    w_max_local: Fraction
    tau: int
    edge_tau: Fraction

    @classmethod
    def of(cls, g: WeightedGraph) -> MaderThreshold:
        """Threshold from the density and weight range of the whole of ``g``."""
        w_min, w_max = extreme_weights(g)
        d = density(g, range(g.n))
        tau = mader_tau(d, w_max)
        return cls(d, w_min, w_max, tau, w_min * tau)


@dataclass(frozen=True)
class MaderResult:
    subset: VertexSet
    threshold: MaderThreshold
    achieved_connectivity: Union[int, Fraction]
    min_weighted_degree: Fraction
    iterations: int


def _peel(g: WeightedGraph, members: Iterable[int], d: Fraction) -> frozenset[int] | None:
    """Repeatedly drop a minimum weighted-degree vertex while that degree is <= d."""
    alive = set(members)
    deg = {v: sum((w for u, w in g._adj[v].items() if u in alive), Fraction(0)) for v in alive}
    heap = [(deg[v], v) for v in alive]
    heapq.heapify(heap)
    while heap:
        dv, v = heapq.heappop(heap)
        if v not in alive or dv != deg[v]:
            continue
        if dv > d:
            return frozenset(alive)
        alive.discard(v)
        for u, w in g._adj[v].items():
            if u in alive:
                deg[u] -= w
                heapq.heappush(heap, (deg[u], u))
    return None


def peel(g: WeightedGraph, d) -> VertexSet | None:
    """The maximal vertex set whose induced weighted degrees all exceed ``d``,
    or ``None`` when peeling empties the graph."""
    d = Fraction(d)
    if d <= 0:
        raise DomainError("peel threshold must be positive")
    s = _peel(g, range(g.n), d)
    return None if s is None else tuple(sorted(s))


def _pick_order(g: WeightedGraph, th: MaderThreshold) -> Callable[[frozenset[int]], tuple]:
    """Pieces meeting |S| >= c and w(S) > d(|S| - c/2), c = ceil(d / w_max),
    come first; then fewer vertices, then lexicographic. Any order is valid;
    this one returns a set that also satisfies the counting condition."""
    c = math.ceil(th.d / th.w_max_local)

    def key(s: frozenset[int]) -> tuple:
        t = tuple(sorted(s))
        ok = len(t) >= c and edge_weight_within(g, t) > th.d * (len(t) - Fraction(c, 2))
        return (not ok, len(t), t)

    return key


def _counting_clique(g, pieces, pick) -> frozenset[int] | None:
    """First clique under ``pick`` that meets the counting condition."""
    for s in sorted(pieces, key=pick):
        if not pick(s)[0] and is_clique(g, s):
            return s
    return None


def _result(g, s, threshold, connectivity, iterations) -> MaderResult:
    return MaderResult(
        tuple(sorted(s)), threshold, connectivity, min_weighted_degree(g, s), iterations
    )


def mader_subgraph(
    g: WeightedGraph,
    observer: Callable[[Sequence[frozenset[int]]], None] | None = None,
) -> MaderResult:
    """A ``tau``-vertex-connected subgraph with every weighted degree above d(V).

    ``tau`` is computed from the density and the maximum weight of ``g``
    itself. Cliques short-circuit only when they meet the counting condition
    of :func:`_pick_order`; others wait in the family. ``observer``, if given,
    receives the family at the start of every loop iteration and
    ``result.iterations`` counts those iterations.
    """
    if not g.num_edges:
        raise DomainError("graph has no edges")
    th = MaderThreshold.of(g)
    tau, d = th.tau, th.d
    pick = _pick_order(g, th)
    h = _peel(g, range(g.n), d)
    if h is None:
        raise InternalInvariantError("initial peel emptied a graph of positive density")
    family = [frozenset(c) for c in components_within(g, h) if len(c) >= tau + 1]
    k = _counting_clique(g, family, pick)
    if k is not None:
        return _result(g, k, th, len(k) - 1, 0)
    iterations = 0
    while True:
        if not family:
            raise InternalInvariantError("candidate family became empty")
        if observer is not None:
            observer(tuple(family))
        family.sort(key=pick)
        current = family.pop(0)
        iterations += 1
        if is_clique(g, current):
            # only reached when no remaining piece meets the counting condition
            return _result(g, current, th, len(current) - 1, iterations)
        kappa, sep = _min_separator(g, current)
        if sep is None:
            raise InternalInvariantError("clique reached the separator step")
        if len(sep) >= tau:
            return _result(g, current, th, kappa, iterations)
        fresh = []
        for part in components_within(g, current - sep):
            piece = _peel(g, frozenset(part) | sep, d)
            if piece is not None and len(piece) >= tau + 1:
                fresh.append(piece)
        k = _counting_clique(g, fresh, pick)
        if k is not None:
            return _result(g, k, th, len(k) - 1, iterations)
        family.extend(fresh)


def mader_edge_subgraph(g: WeightedGraph) -> MaderResult:
    """A ``w_min * tau``-edge-connected subgraph with every weighted degree above d(V).

    Each subproblem is peeled at d(V) first and split along its minimum cut
    while that cut is lighter than the threshold.
    """
    if not g.num_edges:
        raise DomainError("graph has no edges")
    th = MaderThreshold.of(g)
    stack = [frozenset(range(g.n))]
    iterations = 0
    while stack:
        sub = stack.pop()
        piece = _peel(g, sub, th.d)
        if piece is None or len(piece) < 2:
            continue
        iterations += 1
        lam, side = _min_cut(g, piece)
        if lam >= th.edge_tau:
            return _result(g, piece, th, lam, iterations)
        stack.append(side)
        stack.append(piece - side)
    raise InternalInvariantError("no subgraph met the edge threshold")
