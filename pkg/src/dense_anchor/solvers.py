"""Densest k-vertex-connected / k-edge-connected subgraph approximations.

``bicriteria_*`` decompose the graph into maximal k-connected pieces, take a
densest subgraph of each and, when its density is high enough, replace the
piece by a Mader-type subgraph of that densest part. ``approx_*`` return the
most highly connected subgraph when it meets the bound.
"""

from __future__ import annotations

import enum
import os
from collections.abc import Callable, Iterable, Sequence
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TypeVar, Union

from .connectivity import (
    _min_cut,
    _min_separator,
    maximal_k_edge_connected,
    maximal_k_vertex_connected,
    most_connected_edge,
    most_connected_vertex,
)
from .densest import densest_exact
from .errors import DomainError, ParameterError
from .graph import VertexSet, WeightedGraph, density, extreme_weights, induced, lift
from .mader import mader_edge_subgraph, mader_subgraph, mader_tau

__all__ = [
    "Mode",
    "Status",
    "ProblemSpec",
    "Guarantee",
    "Candidate",
    "SolveOutcome",
    "bicriteria_vertex",
    "bicriteria_edge",
    "approx_vertex",
    "approx_edge",
    "solve",
]

T = TypeVar("T")
R = TypeVar("R")


class Mode(str, enum.Enum):
    VERTEX = "vertex"
    EDGE = "edge"


class Status(str, enum.Enum):
    FEASIBLE = "FEASIBLE"
    INFEASIBLE = "INFEASIBLE"


def _vertex_k(k) -> int:
    try:
        kf = Fraction(k)
    except (TypeError, ValueError):
        raise ParameterError(f"k must be a positive integer, got {k!r}") from None
    if kf.denominator != 1 or kf < 1:
        raise ParameterError(f"k must be a positive integer in vertex mode, got {k}")
    return int(kf)


def _edge_k(k) -> Fraction:
    try:
        kf = Fraction(k)
    except (TypeError, ValueError):
        raise ParameterError(f"k must be a positive number, got {k!r}") from None
    if kf <= 0:
        raise ParameterError(f"k must be positive, got {k}")
    return kf


def _gamma(gamma) -> Fraction:
    try:
        gf = Fraction(gamma)
    except (TypeError, ValueError):
        raise ParameterError(f"gamma must be a rational in [1, 2], got {gamma!r}") from None
    if not 1 <= gf <= 2:
        raise ParameterError(f"gamma must lie in [1, 2], got {gamma}")
    return gf


@dataclass(frozen=True)
class ProblemSpec:
    mode: Mode
    k: Union[int, Fraction]
    gamma: Fraction = Fraction(1)

    def __post_init__(self):
        mode = Mode(self.mode)
        object.__setattr__(self, "mode", mode)
        object.__setattr__(self, "k", _vertex_k(self.k) if mode is Mode.VERTEX else _edge_k(self.k))
        object.__setattr__(self, "gamma", _gamma(self.gamma))


@dataclass(frozen=True)
class Guarantee:
    ratio_density: Fraction
    ratio_connectivity: Fraction
    theorem: str
    # the winning piece came from the Mader branch, hence density >= OPT_i / 2
    half_approximation: bool = False


@dataclass(frozen=True)
class Candidate:
    """Per-piece trace of a bicriteria run."""

    piece: VertexSet
    densest: VertexSet
    mader_applied: bool
    chosen: VertexSet
    density: Fraction


@dataclass(frozen=True)
class SolveOutcome:
    status: Status
    mode: Mode
    k: Union[int, Fraction]
    subset: VertexSet | None
    density: Fraction | None
    achieved_connectivity: Union[int, Fraction, None]
    guarantee: Guarantee
    candidates: tuple[Candidate, ...] = field(default=(), compare=False)

    @property
    def feasible(self) -> bool:
        return self.status is Status.FEASIBLE


def _workers() -> int:
    try:
        return max(1, int(os.environ.get("DENSE_ANCHOR_THREADS", "1")))
    except ValueError:
        return 1


def _ordered_map(fn: Callable[[T], R], items: Sequence[T]) -> list[R]:
    """``map`` that may fan out to threads; the result order never changes."""
    workers = min(_workers(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _best(cands: Iterable[Candidate]) -> Candidate:
    return min(cands, key=lambda c: (-c.density, len(c.chosen), c.chosen))


def _require_edges(g: WeightedGraph) -> tuple[Fraction, Fraction]:
    if not g.num_edges:
        raise DomainError("graph has no edges")
    return extreme_weights(g)


def _infeasible(mode: Mode, k, guarantee: Guarantee) -> SolveOutcome:
    return SolveOutcome(Status.INFEASIBLE, mode, k, None, None, None, guarantee)


def _bicriteria(
    g: WeightedGraph,
    mode: Mode,
    k,
    gamma: Fraction,
) -> SolveOutcome:
    w_min, w_max = _require_edges(g)
    guarantee = Guarantee(gamma / 4 * w_min / w_max, 1 / gamma, f"{mode.value}-bicriteria")
    if mode is Mode.VERTEX:
        pieces = maximal_k_vertex_connected(g, k)
    else:
        pieces = maximal_k_edge_connected(g, k)
    if not pieces:
        return _infeasible(mode, k, guarantee)

    def process(piece: VertexSet) -> Candidate:
        sub = induced(g, piece)
        ds_local = densest_exact(sub).subset
        ds = lift(sub, ds_local)
        # the branch test uses the weight extremes of all of g, not of the piece
        tau = mader_tau(density(g, ds), w_max)
        bound = gamma * tau if mode is Mode.VERTEX else gamma * w_min * tau
        if k <= bound:
            cut = induced(g, ds)
            res = mader_subgraph(cut) if mode is Mode.VERTEX else mader_edge_subgraph(cut)
            chosen = lift(cut, res.subset)
            return Candidate(piece, ds, True, chosen, density(g, chosen))
        return Candidate(piece, ds, False, piece, density(g, piece))

    cands = _ordered_map(process, pieces)
    win = _best(cands)
    if mode is Mode.VERTEX:
        achieved: Union[int, Fraction] = _min_separator(g, win.chosen)[0]
    else:
        achieved = _min_cut(g, win.chosen)[0]
    guarantee = Guarantee(
        guarantee.ratio_density, guarantee.ratio_connectivity, guarantee.theorem, win.mader_applied
    )
    return SolveOutcome(
        Status.FEASIBLE, mode, k, win.chosen, win.density, achieved, guarantee, tuple(cands)
    )


def bicriteria_vertex(g: WeightedGraph, k, gamma=1) -> SolveOutcome:
    """Output is (k/gamma)-vertex-connected with density at least
    (gamma/4)(w_min/w_max) times the best k-vertex-connected density."""
    return _bicriteria(g, Mode.VERTEX, _vertex_k(k), _gamma(gamma))


def bicriteria_edge(g: WeightedGraph, k, gamma=1) -> SolveOutcome:
    """Edge-connectivity counterpart of :func:`bicriteria_vertex`."""
    return _bicriteria(g, Mode.EDGE, _edge_k(k), _gamma(gamma))


def approx_vertex(g: WeightedGraph, k) -> SolveOutcome:
    """Most vertex-connected subgraph if its κ reaches k; ratio (6/19)(w_min/w_max)."""
    k = _vertex_k(k)
    w_min, w_max = _require_edges(g)
    guarantee = Guarantee(Fraction(6, 19) * w_min / w_max, Fraction(1), "vertex-matula")
    s, kappa = most_connected_vertex(g)
    if kappa < k:
        return _infeasible(Mode.VERTEX, k, guarantee)
    return SolveOutcome(Status.FEASIBLE, Mode.VERTEX, k, s, density(g, s), kappa, guarantee)


def approx_edge(g: WeightedGraph, k) -> SolveOutcome:
    """Most edge-connected subgraph if its λ reaches k; ratio (6/19)(w_min/w_max)."""
    k = _edge_k(k)
    w_min, w_max = _require_edges(g)
    guarantee = Guarantee(Fraction(6, 19) * w_min / w_max, Fraction(1), "edge-matula")
    s, lam = most_connected_edge(g)
    if lam < k:
        return _infeasible(Mode.EDGE, k, guarantee)
    return SolveOutcome(Status.FEASIBLE, Mode.EDGE, k, s, density(g, s), lam, guarantee)


def solve(g: WeightedGraph, spec: ProblemSpec, algorithm: str = "bicriteria") -> SolveOutcome:
    if algorithm == "bicriteria":
        return _bicriteria(g, spec.mode, spec.k, spec.gamma)
    if algorithm == "matula":
        fn = approx_vertex if spec.mode is Mode.VERTEX else approx_edge
        return fn(g, spec.k)
    raise ParameterError(f"unknown algorithm {algorithm!r}")
