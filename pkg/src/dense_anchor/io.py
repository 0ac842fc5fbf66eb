"""SNAP-style edge-list ingestion plus canonical edge-list and DOT export."""

from __future__ import annotations

import io
import logging
import os
import warnings
from collections.abc import Iterable
from fractions import Fraction
from typing import BinaryIO, TextIO, Union

from .errors import GraphParseError, GraphValidationError
from .graph import WeightedGraph

logger = logging.getLogger(__name__)

Source = Union[str, os.PathLike, bytes, BinaryIO, TextIO]


class MultiEdgeWeightWarning(UserWarning):
    """A repeated edge carried a different weight; the first one was kept."""


def _lines(source: Source) -> Iterable[str]:
    if isinstance(source, bytes):
        yield from io.StringIO(source.decode("utf-8"))
    elif isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            yield from fh
    else:
        for line in source:
            yield line.decode("utf-8") if isinstance(line, bytes) else line


def _parse_weight(token: str, lineno: int, line: str) -> Fraction:
    try:
        w = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise GraphParseError(lineno, line, f"bad weight {token!r}") from None
    if w <= 0:
        raise GraphValidationError(f"line {lineno}: weight must be positive, got {token}")
    return w


def load_edge_list(source: Source, weighted: bool | None = None) -> WeightedGraph:
    """Read an edge list and simplify it into a :class:`WeightedGraph`.

    Lines are ``u v`` or ``u v w``; blank lines and lines starting with ``#``
    are skipped. Direction is ignored, self-loops are dropped (their endpoint
    is kept as a vertex) and repeated edges are merged, keeping the first
    weight seen. ``weighted=None`` uses a third column when present,
    ``True`` requires it, ``False`` ignores it and gives every edge weight 1.

    Weights are decimal strings (or ``p/q`` fractions) converted exactly.
    """
    index: dict[str, int] = {}
    weights: dict[tuple[int, int], Fraction] = {}
    order: list[tuple[int, int]] = []
    conflicts = 0

    def vid(label: str) -> int:
        if label not in index:
            index[label] = len(index)
        return index[label]

    for lineno, raw in enumerate(_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) not in (2, 3):
            raise GraphParseError(lineno, raw, "expected 'u v' or 'u v w'")
        if weighted is True and len(tokens) != 3:
            raise GraphParseError(lineno, raw, "missing weight column")
        w = Fraction(1)
        if len(tokens) == 3 and weighted is not False:
            w = _parse_weight(tokens[2], lineno, raw)
        u, v = vid(tokens[0]), vid(tokens[1])
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key in weights:
            if weights[key] != w:
                conflicts += 1
                logger.debug("line %d: conflicting weight %s for edge %s", lineno, w, key)
            continue
        weights[key] = w
        order.append(key)

    if not order:
        raise GraphValidationError("edge list contains no edges")
    if conflicts:
        warnings.warn(
            f"{conflicts} repeated edge(s) had conflicting weights; first weight kept",
            MultiEdgeWeightWarning,
            stacklevel=2,
        )
    return WeightedGraph(
        len(index), ((u, v, weights[(u, v)]) for u, v in order), labels=list(index)
    )


def format_weight(w: Fraction) -> str:
    """Exact rendering: integer, terminating decimal, or ``p/q``."""
    w = Fraction(w)
    if w.denominator == 1:
        return str(w.numerator)
    q = w.denominator
    twos = fives = 0
    while q % 2 == 0:
        q //= 2
        twos += 1
    while q % 5 == 0:
        q //= 5
        fives += 1
    if q != 1:
        return f"{w.numerator}/{w.denominator}"
    places = max(twos, fives)
    scaled = w * 10**places
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled.numerator)).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def format_decimal(x: Fraction, places: int = 2) -> str:
    """Round half away from zero to ``places`` decimals, exactly."""
    x = Fraction(x)
    scale = 10**places
    scaled = abs(x) * scale
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r >= scaled.denominator:
        q += 1
    sign = "-" if x < 0 and q else ""
    s = str(q).rjust(places + 1, "0")
    return f"{sign}{s[:-places]}.{s[-places:]}" if places else f"{sign}{s}"


def export_edgelist(g: WeightedGraph) -> str:
    """Canonical ``u v w`` lines, ordered by label rather than internal id.

    Isolated vertices are written as a self-loop line, which the loader drops
    while keeping the vertex, so export is a fixed point of load-then-export.
    """
    key = [_label_key(x) for x in g.labels]
    rows = []
    for u, v, w in g.edges():
        if key[v] < key[u]:
            u, v = v, u
        rows.append(((key[u], key[v]), f"{g.labels[u]} {g.labels[v]} {format_weight(w)}\n"))
    for v in g.vertices():
        if g.degree(v) == 0:
            rows.append(((key[v], key[v]), f"{g.labels[v]} {g.labels[v]} 1\n"))
    rows.sort(key=lambda r: r[0])
    return "".join(line for _, line in rows)


def _label_key(label: str) -> tuple:
    # integer labels in numeric order, ahead of all other labels
    try:
        return (0, int(label), label)
    except ValueError:
        return (1, 0, label)


def _dot_id(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: WeightedGraph, highlight: Iterable[int] = ()) -> str:
    """Graphviz rendering; vertices in ``highlight`` are filled."""
    marked = set(highlight)
    lines = ["graph G {", "  node [shape=circle];"]
    for v in g.vertices():
        attrs = ' [style=filled, fillcolor="#e4572e"]' if v in marked else ""
        lines.append(f"  {_dot_id(g.labels[v])}{attrs};")
    for u, v, w in g.edges():
        wl = format_weight(w)
        lines.append(
            f"  {_dot_id(g.labels[u])} -- {_dot_id(g.labels[v])} [weight={_dot_id(wl)}, label={_dot_id(wl)}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"
