"""Vertex and edge connectivity with certificates, and searches built on them.

Edge connectivity is the global minimum cut (Stoer-Wagner on integer-scaled
weights). Vertex connectivity ignores weights and is computed from
unit-capacity vertex-split max flows over non-adjacent pairs. Ties are broken
by ascending vertex id throughout, so every result is reproducible.
"""

from __future__ import annotations

import heapq
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .flow import FlowNetwork
from .graph import VertexSet, WeightedGraph, components_within, is_clique

__all__ = [
    "CutCertificate",
    "SeparatorCertificate",
    "ConnectivityReport",
    "edge_connectivity",
    "vertex_connectivity",
    "connectivity_report",
    "maximal_k_edge_connected",
    "maximal_k_vertex_connected",
    "most_connected_vertex",
    "most_connected_edge",
]


@dataclass(frozen=True)
class CutCertificate:
    side: VertexSet
    cut_edges: tuple[tuple[int, int, Fraction], ...]
    weight: Fraction


@dataclass(frozen=True)
class SeparatorCertificate:
    separator: VertexSet
    witness_sides: tuple[VertexSet, VertexSet]


@dataclass(frozen=True)
class ConnectivityReport:
    kappa: int
    lambda_: Fraction
    separator: SeparatorCertificate | None
    cut: CutCertificate | None


# --------------------------------------------------------------------------- #
# minimum cut


def _crossing_edges(g: WeightedGraph, members: frozenset[int], side: frozenset[int]):
    return tuple(
        (min(u, v), max(u, v), w)
        for u in sorted(side)
        for v, w in sorted(g._adj[u].items())
        if v in members and v not in side
    )


def _stoer_wagner(g: WeightedGraph, vs: list[int]) -> tuple[int, list[int]]:
    """Minimum cut of connected G[vs] in scaled integer units and one shore."""
    _, iadj = g.scaled()
    inside = set(vs)
    w = {v: {u: c for u, c in iadj[v].items() if u in inside} for v in vs}
    merged = {v: [v] for v in vs}
    alive = set(vs)
    best: int | None = None
    best_shore: list[int] = []
    while len(alive) > 1:
        start = min(alive)
        key = {v: 0 for v in alive}
        heap = [(0, v) for v in alive if v != start]
        for u, c in w[start].items():
            key[u] = c
            heap.append((-c, u))
        heapq.heapify(heap)
        added = {start}
        order = [start]
        last = 0
        while len(added) < len(alive):
            neg, u = heapq.heappop(heap)
            if u in added or -neg != key[u]:
                continue
            added.add(u)
            order.append(u)
            last = key[u]
            for x, c in w[u].items():
                if x not in added:
                    key[x] += c
                    heapq.heappush(heap, (-key[x], x))
        s, t = order[-2], order[-1]
        if best is None or last < best:
            best = last
            best_shore = list(merged[t])
        for x, c in w.pop(t).items():
            del w[x][t]
            if x != s:
                w[s][x] = w[s].get(x, 0) + c
                w[x][s] = w[x].get(s, 0) + c
        merged[s].extend(merged.pop(t))
        alive.discard(t)
    assert best is not None
    return best, best_shore


def _min_cut(g: WeightedGraph, members: Iterable[int]) -> tuple[Fraction, frozenset[int]]:
    """λ(G[members]) and the shore not containing the smallest member."""
    vs = sorted(set(members))
    if len(vs) < 2:
        raise DomainError("edge connectivity needs at least two vertices")
    comps = components_within(g, vs)
    if len(comps) > 1:
        return Fraction(0), frozenset(vs) - frozenset(comps[0])
    denom, _ = g.scaled()
    value, shore = _stoer_wagner(g, vs)
    side = frozenset(shore)
    if vs[0] in side:
        side = frozenset(vs) - side
    return Fraction(value, denom), side


def edge_connectivity(g: WeightedGraph) -> tuple[Fraction, CutCertificate]:
    """Global minimum cut weight λ(G) with a witnessing cut.

    A disconnected graph has λ = 0 and an empty ``cut_edges``; ``side`` is then
    every vertex outside the component of vertex 0.
    """
    members = frozenset(range(g.n))
    value, side = _min_cut(g, members)
    cert = CutCertificate(tuple(sorted(side)), _crossing_edges(g, members, side), value)
    return value, cert


# --------------------------------------------------------------------------- #
# vertex connectivity


def _local_separator(
    g: WeightedGraph, vs: list[int], x: int, y: int, limit: int
) -> tuple[int, frozenset[int] | None]:
    """Max number of internally disjoint x-y paths in G[vs], capped at ``limit``.

    When the value is below ``limit`` a minimum x-y vertex separator is returned.
    """
    index = {v: i for i, v in enumerate(vs)}
    big = len(vs) + 1
    net = FlowNetwork(2 * len(vs))
    for v, i in index.items():
        net.add_edge(2 * i, 2 * i + 1, big if v in (x, y) else 1)
    for u in vs:
        iu = index[u]
        for v in g._adj[u]:
            iv = index.get(v)
            if iv is not None and u < v:
                net.add_edge(2 * iu + 1, 2 * iv, big)
                net.add_edge(2 * iv + 1, 2 * iu, big)
    value = net.max_flow(2 * index[x] + 1, 2 * index[y], limit=limit)
    if value >= limit:
        return value, None
    reach = net.reachable(2 * index[x] + 1)
    sep = frozenset(v for v, i in index.items() if 2 * i in reach and 2 * i + 1 not in reach)
    assert len(sep) == value
    return value, sep


def _min_separator(
    g: WeightedGraph, members: Iterable[int], below: int | None = None
) -> tuple[int, frozenset[int] | None]:
    """κ(G[members]) and a minimum separator (``None`` for cliques).

    With ``below`` set, return as soon as any separator smaller than ``below``
    is found; the value is then an upper bound rather than κ.
    """
    vs = sorted(set(members))
    n = len(vs)
    if n == 0:
        raise DomainError("vertex connectivity of the empty graph is undefined")
    if len(components_within(g, vs)) > 1:
        return 0, frozenset()
    if is_clique(g, vs):
        return n - 1, None
    best, best_sep = n - 1, None
    for i, x in enumerate(vs):
        if i > best:
            break
        nbrs = g._adj[x]
        for y in vs[i + 1:]:
            if y in nbrs:
                continue
            value, sep = _local_separator(g, vs, x, y, best)
            if sep is not None:
                best, best_sep = value, sep
                if below is not None and best < below:
                    return best, best_sep
    return best, best_sep


def _separator_certificate(
    g: WeightedGraph, members: Iterable[int], sep: frozenset[int]
) -> SeparatorCertificate:
    rest = sorted(set(members) - sep)
    comps = components_within(g, rest)
    first = comps[0]
    others = tuple(sorted(v for c in comps[1:] for v in c))
    return SeparatorCertificate(tuple(sorted(sep)), (first, others))


def vertex_connectivity(g: WeightedGraph) -> tuple[int, SeparatorCertificate | None]:
    """κ(G) under the clique convention (``|V|-1`` for complete graphs).

    Weights are ignored. The certificate is ``None`` exactly for cliques.
    """
    members = range(g.n)
    kappa, sep = _min_separator(g, members)
    if sep is None:
        return kappa, None
    return kappa, _separator_certificate(g, members, sep)


def connectivity_report(g: WeightedGraph) -> ConnectivityReport:
    kappa, sep = vertex_connectivity(g)
    if g.n >= 2:
        lam, cut = edge_connectivity(g)
    else:
        lam, cut = Fraction(0), None
    return ConnectivityReport(kappa, lam, sep, cut)


# --------------------------------------------------------------------------- #
# decompositions


def _core(g: WeightedGraph, members: Iterable[int], min_deg: int) -> set[int]:
    """Largest subset in which every vertex has at least ``min_deg`` neighbours."""
    alive = set(members)
    deg = {v: sum(1 for u in g._adj[v] if u in alive) for v in alive}
    queue = [v for v in alive if deg[v] < min_deg]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in g._adj[v]:
            if u in alive:
                deg[u] -= 1
                if deg[u] < min_deg:
                    queue.append(u)
    return alive


def _weighted_core(g: WeightedGraph, members: Iterable[int], bound: Fraction) -> set[int]:
    """Largest subset in which every weighted degree is strictly above ``bound``."""
    alive = set(members)
    deg = {v: sum((w for u, w in g._adj[v].items() if u in alive), Fraction(0)) for v in alive}
    queue = [v for v in alive if deg[v] <= bound]
    while queue:
        v = queue.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u, w in g._adj[v].items():
            if u in alive:
                deg[u] -= w
                if deg[u] <= bound:
                    queue.append(u)
    return alive


def _by_min(sets: Iterable[Iterable[int]]) -> list[VertexSet]:
    return sorted({tuple(sorted(s)) for s in sets})


def maximal_k_edge_connected(g: WeightedGraph, k) -> list[VertexSet]:
    """All maximal S (|S| >= 2) with λ(G[S]) >= k; pairwise disjoint."""
    k = Fraction(k)
    if k <= 0:
        raise DomainError("k must be positive")
    out: list[frozenset[int]] = []
    stack = [frozenset(c) for c in reversed(components_within(g, range(g.n)))]
    while stack:
        s = stack.pop()
        if len(s) < 2:
            continue
        lam, side = _min_cut(g, s)
        if lam >= k:
            out.append(s)
            continue
        other = s - side
        stack.append(side)
        stack.append(other)
    return _by_min(out)


def maximal_k_vertex_connected(g: WeightedGraph, k: int) -> list[VertexSet]:
    """All maximal S with κ(G[S]) >= k. Sets may overlap; none contains another."""
    if int(k) != k or k < 1:
        raise DomainError("k must be a positive integer")
    k = int(k)
    found: set[frozenset[int]] = set()
    seen: set[frozenset[int]] = set()
    stack = [frozenset(range(g.n))]
    while stack:
        s = stack.pop()
        if s in seen:
            continue
        seen.add(s)
        # every vertex of a k-vertex-connected set has at least k neighbours in it
        core = _core(g, s, k)
        for comp in components_within(g, core):
            if len(comp) < k + 1:
                continue
            piece = frozenset(comp)
            _, sep = _min_separator(g, piece, below=k)
            if sep is None or len(sep) >= k:
                found.add(piece)
                continue
            for part in components_within(g, piece - sep):
                stack.append(frozenset(part) | sep)
    maximal = [s for s in found if not any(s < t for t in found)]
    return _by_min(maximal)


# --------------------------------------------------------------------------- #
# most highly connected subgraphs


def most_connected_vertex(g: WeightedGraph) -> tuple[VertexSet, int]:
    """An S maximizing κ(G[S]) over all S with |S| >= 2.

    Candidates are split along minimum separators; a subgraph can only beat
    the best value found so far if it survives the (best+1)-core.
    """
    if not g.num_edges:
        raise DomainError("graph has no edges")
    best_k = 0
    best_s: frozenset[int] | None = None
    stack = [frozenset(range(g.n))]
    while stack:
        s = stack.pop()
        core = _core(g, s, best_k + 1)
        pieces = [c for c in components_within(g, core) if len(c) >= best_k + 2]
        for comp in reversed(pieces):
            piece = frozenset(comp)
            kappa, sep = _min_separator(g, piece)
            if kappa > best_k or best_s is None:
                best_k, best_s = kappa, piece
            if sep is None:
                continue
            parts = components_within(g, piece - sep)
            for part in reversed(parts):
                stack.append(frozenset(part) | sep)
    assert best_s is not None
    return tuple(sorted(best_s)), best_k


def most_connected_edge(g: WeightedGraph) -> tuple[VertexSet, Fraction]:
    """An S (|S| >= 2) maximizing λ(G[S]); recursion along minimum cuts."""
    if not g.num_edges:
        raise DomainError("graph has no edges")
    best_l = Fraction(0)
    best_s: frozenset[int] | None = None
    stack = [frozenset(range(g.n))]
    while stack:
        s = stack.pop()
        # a subgraph beating best_l needs every weighted degree above best_l
        if best_s is not None:
            s = frozenset(_weighted_core(g, s, best_l))
        if len(s) < 2:
            continue
        lam, side = _min_cut(g, s)
        if best_s is None or lam > best_l:
            best_l, best_s = lam, s
        other = s - side
        # process the shore holding the smallest id first
        stack.append(side)
        stack.append(other)
    assert best_s is not None
    return tuple(sorted(best_s)), best_l
