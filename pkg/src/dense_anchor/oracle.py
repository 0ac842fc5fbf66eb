"""Exhaustive reference implementations for tests.

Everything here works from ``g.n`` and ``g.edges()`` with its own bitmask
code and never calls the production algorithms, so agreement between the two
is meaningful. Inputs above the vertex budget are refused.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .densest import DensestResult
from .errors import OracleBudgetError
from .graph import WeightedGraph
from .solvers import Guarantee, Mode, ProblemSpec, SolveOutcome, Status

DEFAULT_MAX_VERTICES = 12


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = DEFAULT_MAX_VERTICES


class _Table:
    """Bitmask view of a small graph with w(mask) precomputed for every mask."""

    def __init__(self, g: WeightedGraph, budget: OracleBudget | None):
        limit = (budget or OracleBudget()).max_vertices
        if g.n > limit:
            raise OracleBudgetError(f"{g.n} vertices exceeds oracle budget of {limit}")
        n = g.n
        self.n = n
        self.nbr = [0] * n
        self.w = [[Fraction(0)] * n for _ in range(n)]
        for u, v, wt in g.edges():
            self.nbr[u] |= 1 << v
            self.nbr[v] |= 1 << u
            self.w[u][v] = self.w[v][u] = wt
        # Gray-code walk: one vertex flips per step, inner[v] = weight from v into mask
        total = [Fraction(0)] * (1 << n)
        inner = [Fraction(0)] * n
        mask = 0
        cur = Fraction(0)
        for i in range(1, 1 << n):
            v = (i & -i).bit_length() - 1
            bit = 1 << v
            if mask & bit:
                mask ^= bit
                cur -= inner[v]
                for u in range(n):
                    inner[u] -= self.w[u][v]
            else:
                cur += inner[v]
                mask |= bit
                for u in range(n):
                    inner[u] += self.w[u][v]
            total[mask] = cur
        self.weight = total

    def members(self, mask: int) -> list[int]:
        return [v for v in range(self.n) if mask >> v & 1]

    def connected(self, mask: int) -> bool:
        if not mask:
            return True
        start = mask & -mask
        seen = start
        frontier = start
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = self.nbr[v] & mask & ~seen
            seen |= new
            frontier |= new
        return seen == mask

    def kappa(self, mask: int, stop_at: int | None = None) -> int:
        """κ of G[mask] by enumerating removal sets; clique convention.

        With ``stop_at``, returns ``stop_at`` as soon as κ >= stop_at is certain.
        """
        vs = self.members(mask)
        s = len(vs)
        if all((self.nbr[v] & mask) == mask & ~(1 << v) for v in vs):
            return s - 1
        top = s - 2 if stop_at is None else min(s - 2, stop_at - 1)
        for size in range(top + 1):
            for rem in combinations(vs, size):
                rmask = 0
                for v in rem:
                    rmask |= 1 << v
                if not self.connected(mask & ~rmask):
                    return size
        return top + 1 if stop_at is not None and top + 1 >= stop_at else s - 2

    def cut(self, mask: int, shore: int) -> Fraction:
        return self.weight[mask] - self.weight[shore] - self.weight[mask & ~shore]

    def lam(self, mask: int) -> Fraction:
        """λ of G[mask] (|mask| >= 2) by enumerating shores holding the lowest bit."""
        low = mask & -mask
        rest = mask & ~low
        best = None
        sub = rest
        # every sub-mask of rest, proper shores are low|sub with sub != rest
        while True:
            if sub != rest:
                c = self.cut(mask, low | sub)
                if best is None or c < best:
                    best = c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        assert best is not None
        return best

    def density(self, mask: int) -> Fraction:
        return self.weight[mask] / bin(mask).count("1")


def _tuple(mask: int, n: int) -> tuple[int, ...]:
    return tuple(v for v in range(n) if mask >> v & 1)


def _rank(t: _Table, mask: int):
    """Sort key: density descending, then size, then lexicographic."""
    members = _tuple(mask, t.n)
    return (-t.density(mask), len(members), members)


def brute_densest(g: WeightedGraph, budget: OracleBudget | None = None) -> DensestResult:
    t = _Table(g, budget)
    best = min(range(1, 1 << t.n), key=lambda m: _rank(t, m))
    return DensestResult(_tuple(best, t.n), t.density(best), True)


def brute_kappa(g: WeightedGraph, budget: OracleBudget | None = None) -> int:
    t = _Table(g, budget)
    return t.kappa((1 << t.n) - 1)


def brute_lambda(g: WeightedGraph, budget: OracleBudget | None = None) -> Fraction:
    t = _Table(g, budget)
    if t.n < 2:
        raise ValueError("λ needs at least two vertices")
    return t.lam((1 << t.n) - 1)


def brute_min_weighted_degree(g: WeightedGraph, subset) -> Fraction:
    s = set(subset)
    return min(
        sum((w for u, v, w in g.edges() if (u == x and v in s) or (v == x and u in s)), Fraction(0))
        for x in s
    )


def _masks_of_size_two_plus(n: int):
    return (m for m in range(1, 1 << n) if m & (m - 1))


def brute_maximal_k_edge_connected(g: WeightedGraph, k, budget: OracleBudget | None = None):
    t = _Table(g, budget)
    k = Fraction(k)
    good = [m for m in _masks_of_size_two_plus(t.n) if t.lam(m) >= k]
    return sorted(_tuple(m, t.n) for m in good if not any(o != m and o & m == m for o in good))


def brute_maximal_k_vertex_connected(g: WeightedGraph, k: int, budget: OracleBudget | None = None):
    t = _Table(g, budget)
    good = [m for m in _masks_of_size_two_plus(t.n) if t.kappa(m, stop_at=k) >= k]
    return sorted(_tuple(m, t.n) for m in good if not any(o != m and o & m == m for o in good))


def brute_max_kappa(g: WeightedGraph, budget: OracleBudget | None = None) -> int:
    t = _Table(g, budget)
    return max(t.kappa(m) for m in _masks_of_size_two_plus(t.n))


def brute_max_lambda(g: WeightedGraph, budget: OracleBudget | None = None) -> Fraction:
    t = _Table(g, budget)
    return max(t.lam(m) for m in _masks_of_size_two_plus(t.n))


def brute_mader_subgraphs(g: WeightedGraph, tau: int, d: Fraction, budget: OracleBudget | None = None):
    """Every S that is tau-vertex-connected with all weighted degrees above d."""
    t = _Table(g, budget)
    out = []
    for m in _masks_of_size_two_plus(t.n):
        vs = t.members(m)
        if any(sum((t.w[v][u] for u in vs), Fraction(0)) <= d for v in vs):
            continue
        if t.kappa(m, stop_at=tau) >= tau:
            out.append(_tuple(m, t.n))
    return out


def brute_problem(g: WeightedGraph, spec: ProblemSpec, budget: OracleBudget | None = None) -> SolveOutcome:
    """Exact optimum of the densest k-connected subgraph problem (|S| >= 2).

    Subsets are scanned in order of decreasing density; the first one passing
    the connectivity test is optimal.
    """
    t = _Table(g, budget)
    guarantee = Guarantee(Fraction(1), Fraction(1), "exhaustive")
    ordered = sorted(_masks_of_size_two_plus(t.n), key=lambda m: _rank(t, m))
    for m in ordered:
        vs = t.members(m)
        if spec.mode is Mode.VERTEX:
            # κ >= k forces every degree >= k
            if any(bin(t.nbr[v] & m).count("1") < spec.k for v in vs):
                continue
            value = t.kappa(m, stop_at=spec.k)
        else:
            if any(sum((t.w[v][u] for u in vs), Fraction(0)) < spec.k for v in vs):
                continue
            value = t.lam(m)
        if value >= spec.k:
            return SolveOutcome(Status.FEASIBLE, spec.mode, spec.k, _tuple(m, t.n), t.density(m), value, guarantee)
    return SolveOutcome(Status.INFEASIBLE, spec.mode, spec.k, None, None, None, guarantee)
