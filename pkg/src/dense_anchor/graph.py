"""Immutable weighted graphs, induced subgraphs, densities and degrees.

All arithmetic is exact: weights are :class:`fractions.Fraction` values and no
floating point is used anywhere in this module.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Mapping, Sequence
from fractions import Fraction
from types import MappingProxyType
from typing import Union

from .errors import DomainError, GraphValidationError

Weight = Fraction
WeightLike = Union[int, str, Fraction]
# Sorted tuple of vertex ids; the unit of all algorithm input and output.
VertexSet = tuple[int, ...]


def as_weight(value: WeightLike) -> Fraction:
    w = Fraction(value)
    if w <= 0:
        raise GraphValidationError(f"edge weight must be positive, got {value!r}")
    return w


class WeightedGraph:
    """Simple undirected graph with exact positive rational edge weights.

    Vertices are the dense ids ``0..n-1``. ``labels[v]`` keeps the original
    label of vertex ``v`` and ``origin[v]`` its id in the graph this one was
    induced from (identity for graphs built directly).
    """

    __slots__ = ("_n", "_adj", "_labels", "_origin", "_edges", "_total", "_scaled")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int, WeightLike]] = (),
        labels: Sequence[str] | None = None,
        origin: Sequence[int] | None = None,
    ):
        if n < 0:
            raise GraphValidationError("vertex count must be non-negative")
        adj: list[dict[int, Fraction]] = [{} for _ in range(n)]
        for u, v, w in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise GraphValidationError(f"parallel edge ({u}, {v})")
            weight = as_weight(w)
            adj[u][v] = weight
            adj[v][u] = weight
        self._n = n
        self._adj = tuple(adj)
        self._labels = tuple(str(x) for x in labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self._labels) != n:
            raise GraphValidationError("labels must have one entry per vertex")
        self._origin = tuple(origin) if origin is not None else tuple(range(n))
        if len(self._origin) != n:
            raise GraphValidationError("origin must have one entry per vertex")
        self._edges = tuple(
            (u, v, w) for u in range(n) for v, w in sorted(adj[u].items()) if u < v
        )
        self._total = sum((w for _, _, w in self._edges), Fraction(0))
        self._scaled: tuple[int, tuple[dict[int, int], ...]] | None = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def origin(self) -> tuple[int, ...]:
        return self._origin

    @property
    def num_edges(self) -> int:
        return len(self._edges)

    @property
    def total_weight(self) -> Fraction:
        return self._total

    def vertices(self) -> range:
        return range(self._n)

    def edges(self) -> tuple[tuple[int, int, Fraction], ...]:
        """Edges as ``(u, v, w)`` with ``u < v``, sorted."""
        return self._edges

    def neighbors(self, v: int) -> Mapping[int, Fraction]:
        return MappingProxyType(self._adj[v])

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def weight(self, u: int, v: int) -> Fraction:
        return self._adj[u][v]

    def scaled(self) -> tuple[int, tuple[dict[int, int], ...]]:
        """Common denominator ``D`` and adjacency with integer weights ``w * D``.

        Flow and cut routines run on these integers; divide results by ``D``.
        """
        if self._scaled is None:
            denom = 1
            for _, _, w in self._edges:
                denom = denom * w.denominator // math.gcd(denom, w.denominator)
            iadj = tuple(
                {u: int(w * denom) for u, w in nbrs.items()} for nbrs in self._adj
            )
            self._scaled = (denom, iadj)
        return self._scaled

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return (self._n, self._edges, self._labels) == (other._n, other._edges, other._labels)

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self._n}, m={len(self._edges)}, w={self._total})"

    @classmethod
    def from_labeled_edges(
        cls, edges: Iterable[tuple[str, str] | tuple[str, str, WeightLike]]
    ) -> WeightedGraph:
        """Build from labeled edges; ids follow first appearance of each label."""
        index: dict[str, int] = {}
        triples = []
        for e in edges:
            a, b = str(e[0]), str(e[1])
            w = e[2] if len(e) > 2 else 1  # type: ignore[misc]
            for x in (a, b):
                if x not in index:
                    index[x] = len(index)
            triples.append((index[a], index[b], w))
        return cls(len(index), triples, labels=list(index))


def vertex_set(g: WeightedGraph, s: Iterable[int]) -> VertexSet:
    """Normalise ``s`` into a sorted duplicate-free tuple of ids of ``g``."""
    members = tuple(sorted(set(s)))
    if members and (members[0] < 0 or members[-1] >= g.n):
        raise DomainError(f"vertex set {members} not contained in 0..{g.n - 1}")
    return members


def _nonempty(g: WeightedGraph, s: Iterable[int]) -> VertexSet:
    members = vertex_set(g, s)
    if not members:
        raise DomainError("vertex set must be nonempty")
    return members


def induced(g: WeightedGraph, s: Iterable[int]) -> WeightedGraph:
    """Subgraph induced by ``s``, re-indexed ``0..|s|-1`` in ascending id order.

    ``result.origin[i]`` is the id in ``g`` of new vertex ``i``.
    """
    members = _nonempty(g, s)
    index = {v: i for i, v in enumerate(members)}
    edges = [
        (index[u], index[v], w)
        for u in members
        for v, w in g._adj[u].items()
        if u < v and v in index
    ]
    return WeightedGraph(
        len(members),
        edges,
        labels=[g.labels[v] for v in members],
        origin=members,
    )


def lift(sub: WeightedGraph, s: Iterable[int]) -> VertexSet:
    """Map a vertex set of an induced subgraph back to ids of its parent."""
    return tuple(sorted(sub.origin[v] for v in s))


def edge_weight_within(g: WeightedGraph, s: Iterable[int]) -> Fraction:
    """w(S): total weight of edges with both endpoints in ``s``."""
    members = set(s)
    total = Fraction(0)
    for u in members:
        for v, w in g._adj[u].items():
            if u < v and v in members:
                total += w
    return total


def density(g: WeightedGraph, s: Iterable[int]) -> Fraction:
    """d(S) = w(S) / |S|, exactly."""
    members = _nonempty(g, s)
    return edge_weight_within(g, members) / len(members)


def weighted_degree(g: WeightedGraph, s: Iterable[int], v: int) -> Fraction:
    """Weighted degree of ``v`` inside G[s]."""
    members = set(vertex_set(g, s))
    if v not in members:
        raise DomainError(f"vertex {v} is not a member of the set")
    return sum((w for u, w in g._adj[v].items() if u in members), Fraction(0))


def min_weighted_degree(g: WeightedGraph, s: Iterable[int]) -> Fraction:
    members = set(_nonempty(g, s))
    return min(
        sum((w for u, w in g._adj[v].items() if u in members), Fraction(0))
        for v in members
    )


def extreme_weights(g: WeightedGraph) -> tuple[Fraction, Fraction]:
    """``(w_min, w_max)`` over all edges."""
    if not g.num_edges:
        raise DomainError("graph has no edges")
    weights = [w for _, _, w in g.edges()]
    return min(weights), max(weights)


def is_clique(g: WeightedGraph, s: Iterable[int]) -> bool:
    members = set(s)
    k = len(members)
    return all(
        sum(1 for u in g._adj[v] if u in members) == k - 1 for v in members
    )


def components_within(g: WeightedGraph, s: Iterable[int]) -> list[VertexSet]:
    """Connected components of G[s], each sorted, ordered by smallest member."""
    members = set(s)
    seen: set[int] = set()
    out: list[VertexSet] = []
    for root in sorted(members):
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        stack = [root]
        while stack:
            u = stack.pop()
            for v in g._adj[u]:
                if v in members and v not in seen:
                    seen.add(v)
                    comp.append(v)
                    stack.append(v)
        out.append(tuple(sorted(comp)))
    return out


def connected_components(g: WeightedGraph) -> list[VertexSet]:
    return components_within(g, range(g.n))
