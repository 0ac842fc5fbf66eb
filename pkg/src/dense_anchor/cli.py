"""``dense-anchor`` command line: stats, densest, solve, export.

Exit codes: 0 success / feasible, 2 usage error, 3 infeasible, 4 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from fractions import Fraction
from typing import Sequence

from .connectivity import edge_connectivity, vertex_connectivity
from .densest import densest_exact, densest_greedy
from .errors import DenseAnchorError, ParameterError
from .graph import WeightedGraph, induced, min_weighted_degree
from .io import export_dot, export_edgelist, format_decimal, format_weight, load_edge_list
from .solvers import Mode, ProblemSpec, SolveOutcome, solve

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INFEASIBLE = 3
EXIT_INPUT = 4


class UsageError(Exception):
    pass


def _number(x: Fraction | int) -> dict[str, str]:
    x = Fraction(x)
    exact = str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return {"exact": exact, "decimal": format_decimal(x)}


def _load(path: str, weighted: bool | None) -> WeightedGraph:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        g = load_edge_list(path, weighted=weighted)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    return g


def _stats(args) -> int:
    g = _load(args.graph, args.weighted)
    res = densest_greedy(g) if args.greedy else densest_exact(g)
    sub = induced(g, res.subset)
    kappa, _ = vertex_connectivity(sub)
    lam = edge_connectivity(sub)[0] if sub.n >= 2 else Fraction(0)
    delta = min_weighted_degree(sub, range(sub.n))
    row = {
        "size": sub.n,
        "edges": sub.num_edges,
        "density": _number(res.density),
        "kappa": kappa,
        "lambda": _number(lam),
        "min_degree": _number(delta),
        "exact": res.exact,
    }
    if args.format == "json":
        print(json.dumps(row, indent=2))
    else:
        print("size\tedges\tdensity\tdensity_exact\tkappa\tlambda\tmin_degree")
        print("\t".join([
            str(row["size"]), str(row["edges"]), row["density"]["decimal"], row["density"]["exact"],
            str(kappa), format_weight(lam), format_weight(delta),
        ]))
    return EXIT_OK


def _densest(args) -> int:
    g = _load(args.graph, args.weighted)
    res = densest_greedy(g) if args.greedy else densest_exact(g)
    print(json.dumps({
        "vertices": [g.labels[v] for v in res.subset],
        "size": len(res.subset),
        "density": _number(res.density),
        "exact": res.exact,
    }, indent=2))
    return EXIT_OK


def outcome_json(g: WeightedGraph, outcome: SolveOutcome, algorithm: str) -> dict:
    """Stable JSON document for a solver outcome."""
    spec_k = outcome.k
    doc: dict = {
        "status": outcome.status.value,
        "mode": outcome.mode.value,
        "algorithm": algorithm,
        "k": _number(spec_k),
    }
    if outcome.feasible:
        assert outcome.subset is not None and outcome.density is not None
        doc["vertices"] = [g.labels[v] for v in outcome.subset]
        doc["size"] = len(outcome.subset)
        doc["density"] = _number(outcome.density)
        doc["connectivity"] = _number(outcome.achieved_connectivity)  # type: ignore[arg-type]
    else:
        doc["vertices"] = []
        doc["size"] = 0
        doc["density"] = None
        doc["connectivity"] = None
    gu = outcome.guarantee
    doc["guarantee"] = {
        "theorem": gu.theorem,
        "density_ratio": _number(gu.ratio_density),
        "connectivity_ratio": _number(gu.ratio_connectivity),
        "half_approximation": gu.half_approximation,
    }
    return doc


def _solve(args) -> int:
    if args.algorithm == "matula" and args.gamma is not None:
        raise UsageError("--gamma is only valid with --algorithm bicriteria")
    try:
        k = Fraction(args.k)
        gamma = Fraction(args.gamma) if args.gamma is not None else Fraction(1)
        spec = ProblemSpec(Mode(args.mode), k, gamma)
    except (ValueError, ZeroDivisionError, ParameterError) as exc:
        raise UsageError(str(exc)) from None
    g = _load(args.graph, args.weighted)
    outcome = solve(g, spec, args.algorithm)
    doc = outcome_json(g, outcome, args.algorithm)
    if args.algorithm == "bicriteria":
        doc["gamma"] = _number(spec.gamma)
    print(json.dumps(doc, indent=2))
    return EXIT_OK if outcome.feasible else EXIT_INFEASIBLE


def _export(args) -> int:
    g = _load(args.graph, args.weighted)
    highlight: list[int] = []
    if args.subset:
        index = {label: v for v, label in enumerate(g.labels)}
        with open(args.subset, encoding="utf-8") as fh:
            wanted = [line.strip() for line in fh if line.strip()]
        unknown = [x for x in wanted if x not in index]
        if unknown:
            raise DenseAnchorError("unknown vertex labels in subset: " + ", ".join(unknown))
        highlight = [index[x] for x in wanted]
    if args.dot:
        sys.stdout.write(export_dot(g, highlight))
    else:
        sys.stdout.write(export_edgelist(g))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    wgroup = common.add_mutually_exclusive_group()
    wgroup.add_argument("--weighted", dest="weighted", action="store_const", const=True, default=None,
                        help="require a weight column on every edge line")
    wgroup.add_argument("--unweighted", dest="weighted", action="store_const", const=False,
                        help="ignore any weight column")
    p = _Parser(prog="dense-anchor", description="Dense, well-connected subgraph discovery.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    st = sub.add_parser("stats", parents=[common], help="statistics of the densest subgraph")
    st.add_argument("graph")
    st.add_argument("--greedy", action="store_true", help="use greedy peeling instead of the exact solver")
    st.add_argument("--format", choices=("tsv", "json"), default="tsv")
    st.set_defaults(func=_stats)

    ds = sub.add_parser("densest", parents=[common], help="print a densest subgraph")
    ds.add_argument("graph")
    ds.add_argument("--greedy", action="store_true")
    ds.set_defaults(func=_densest)

    so = sub.add_parser("solve", parents=[common], help="densest k-vertex/edge-connected subgraph")
    so.add_argument("graph")
    so.add_argument("--mode", choices=("vertex", "edge"), required=True)
    so.add_argument("--k", required=True)
    so.add_argument("--gamma", default=None, help="bicriteria relaxation in [1, 2] (default 1)")
    so.add_argument("--algorithm", choices=("bicriteria", "matula"), default="bicriteria")
    so.set_defaults(func=_solve)

    ex = sub.add_parser("export", parents=[common], help="canonical edge list or DOT rendering")
    ex.add_argument("graph")
    fmt = ex.add_mutually_exclusive_group(required=True)
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--edgelist", action="store_true")
    ex.add_argument("--subset", help="file with one vertex label per line to highlight")
    ex.set_defaults(func=_export)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"dense-anchor: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, DenseAnchorError) as exc:
        print(f"dense-anchor: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
