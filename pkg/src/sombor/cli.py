"""Command-line entry point: ``sombor <subcommand> ...``.

Exit codes: 0 success, 1 a check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import graph as gc
from ._accel import THREADS_ENV
from .connectivity import edge_connectivity, vertex_connectivity
from .invariants import INDICES, index_with
from .qspr import PROPERTIES, acid_graph, bundled_dataset, check_published, fit_all, load_dataset

SCHEMA = "sombor-cli/1"
FAMILIES = ("path", "star", "cycle", "complete", "empty", "knk", "acid")


class UsageError(Exception):
    pass


def _round(obj, precision: int):
    if isinstance(obj, float):
        return round(obj, precision)
    if isinstance(obj, dict):
        return {k: _round(v, precision) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round(v, precision) for v in obj]
    return obj


def _emit(payload: dict, precision: int) -> None:
    payload = {"schema": SCHEMA, **payload}
    print(json.dumps(_round(payload, precision), indent=2))


def family_graph(name: str, n: int | None, k: int | None) -> gc.Graph:
    if n is None:
        raise UsageError(f"--family {name} needs --n")
    if name == "knk":
        if k is None:
            raise UsageError("--family knk needs --k")
        return gc.k_n_k(n, k)
    if name == "acid":
        return acid_graph(n)
    return {"path": gc.path, "star": gc.star, "cycle": gc.cycle,
            "complete": gc.complete, "empty": gc.empty}[name](n)


def read_graph(args) -> gc.Graph:
    sources = [s for s in (args.graph6, args.file, args.family) if s is not None]
    if len(sources) != 1:
        raise UsageError("give exactly one of: a graph6 string, --file, --family")
    if args.graph6 is not None:
        return gc.parse_graph6(args.graph6)
    if args.file is not None:
        path = Path(args.file)
        if path.suffix.lower() == ".csv":
            return gc.read_edge_csv(path)
        lines = [ln for ln in path.read_text().splitlines() if ln.strip()]
        if not lines:
            raise UsageError(f"{path} is empty")
        return gc.parse_graph6(lines[0])
    return family_graph(args.family, args.n, args.k)


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph6", nargs="?", help="graph in graph6 format")
    p.add_argument("--file", help="file holding a graph6 line or a u,v edge-list CSV")
    p.add_argument("--family", choices=FAMILIES, help="named graph family")
    p.add_argument("--n", type=int, help="order of the family (carbon count for acid)")
    p.add_argument("--k", type=int, help="connectivity parameter for knk")


def cmd_so(args) -> int:
    G = read_graph(args)
    if args.index not in INDICES:
        raise UsageError(f"unknown index {args.index!r}; choose from {', '.join(INDICES)}")
    report = index_with(G, INDICES[args.index])
    if args.json:
        _emit({"graph6": gc.write_graph6(G), **report.to_json()}, args.precision)
    else:
        print(f"{report.index_name}: {report.total:.{args.precision}f}")
    return 0


def cmd_kappa(args) -> int:
    G = read_graph(args)
    kv, vcert = vertex_connectivity(G)
    ke, ecert = edge_connectivity(G)
    _emit({
        "graph6": gc.write_graph6(G),
        "n": G.n,
        "kappa": kv,
        "kappa_edge": ke,
        "min_degree": G.min_degree(),
        "vertex_cut": vcert.to_json() if vcert else "complete",
        "edge_cut": ecert.to_json() if ecert else None,
    }, args.precision)
    return 0


def cmd_gen(args) -> int:
    G = family_graph(args.family, args.n, args.k)
    if args.format == "csv":
        sys.stdout.write(gc.write_edge_csv(G))
    else:
        print(gc.write_graph6(G))
    return 0


def cmd_extremal(args) -> int:
    from .extremal import extremal_in_class

    report = extremal_in_class(args.n, args.k, args.mode, args.objective, args.backend)
    if args.json:
        _emit(report.to_json(), args.precision)
    else:
        p = args.precision
        print(f"class: n={report.n}, {args.mode} connectivity <= {report.k} "
              f"({report.class_size} connected labelled graphs)")
        print(f"{report.objective} SO = {report.best_value:.{p}f}  "
              f"closed form = {report.theorem_value:.{p}f}")
        print(f"optimal graphs (up to isomorphism): {' '.join(report.argbest)}")
        print(f"agrees: {report.agrees}")
    return 0 if report.agrees else 1


def cmd_verify(args) -> int:
    from .extremal import verify_all

    results = verify_all(args.nmax, args.samples, args.seed, args.backend)
    if args.json:
        _emit({"claims": [r.to_json() for r in results]}, args.precision)
    else:
        width = max(len(r.claim) for r in results)
        for r in results:
            margin = "" if r.margin is None else f"margin {r.margin:.{args.precision}f}"
            status = "PASS" if r.passed else "FAIL"
            print(f"{status}  {r.claim:<{width}}  {r.scope:<34} {margin}")
        failed = sum(not r.passed for r in results)
        print(f"{len(results) - failed}/{len(results)} claims pass")
    return 0 if all(r.passed for r in results) else 1


def cmd_counterexample(args) -> int:
    from .transforms import alpha_family

    try:
        sizes = tuple(int(s) for s in args.cliques.split(","))
    except ValueError:
        raise UsageError(f"--cliques expects comma-separated integers, got {args.cliques!r}") from None
    pairs = alpha_family(args.dmin, args.dmax, sizes)
    if not args.all:
        pairs = [p for p in pairs if p.reversed]
    _emit({
        "dmin": args.dmin, "dmax": args.dmax, "clique_sizes": list(sizes),
        "pairs": [{
            "hub_degrees": list(p.hub_degrees),
            "clique_size": p.clique_size,
            "n": p.gamma.n,
            "gamma": gc.write_graph6(p.gamma),
            "gamma_alpha": gc.write_graph6(p.gamma_alpha),
            "so_gamma": p.so_gamma,
            "so_gamma_alpha": p.so_gamma_alpha,
            "gain": p.gain,
        } for p in pairs],
    }, args.precision)
    return 0


def cmd_qspr(args) -> int:
    ds = load_dataset(args.dataset) if args.dataset else bundled_dataset()
    summary = fit_all(ds, compare=args.compare)
    checks = check_published(summary) if args.check else []
    so = ds.column("so")
    if args.json:
        payload = {
            "rows": len(ds),
            "models": {p: {
                "slope": m.slope, "intercept": m.intercept, "r_squared": m.r_squared,
                "adjusted_r_squared": m.adjusted_r_squared, "rmse": m.rmse,
                "rmse_population": m.rmse_population,
                "points": [[x, y, m.predict(x)] for x, y in zip(so, ds.column(p))],
            } for p, m in summary.models.items()},
        }
        if args.compare:
            payload["comparison_r_squared"] = summary.comparison
        if args.check:
            payload["checks"] = [{"name": n, "passed": ok, "detail": d} for n, ok, d in checks]
        _emit(payload, args.precision)
    else:
        p = args.precision
        print(f"{'compound':<20} {'SO':>10}")
        for r in ds.rows:
            print(f"{r.compound:<20} {r.so:>10.{p}f}")
        print()
        for prop in PROPERTIES:
            m = summary.models[prop]
            print(f"{prop:<6} = {m.slope:.4g} * SO {m.intercept:+.4g}   "
                  f"R2 {m.r_squared:.5f}  RMSE {m.rmse:.5g}")
        if args.compare:
            print()
            print("R^2 by index: " + "  ".join(PROPERTIES))
            for name, row in summary.comparison.items():
                print(f"  {name:<14} " + "  ".join(f"{row[q]:.5f}" for q in PROPERTIES))
        for name, ok, detail in checks:
            print(f"{'PASS' if ok else 'FAIL'}  {name:<16} {detail}")
    return 0 if all(ok for _, ok, _ in checks) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sombor", description=__doc__)
    parser.add_argument("--precision", type=int, default=6, help="decimals in printed floats")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--precision", type=int, default=argparse.SUPPRESS)
        return p

    p = common(sub.add_parser("so", help="Sombor (or another degree-based) index of a graph"))
    _add_graph_input(p)
    p.add_argument("--index", default="sombor", help=f"one of: {', '.join(INDICES)}")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_so)

    p = common(sub.add_parser("kappa", help="vertex and edge connectivity with cuts (JSON)"))
    _add_graph_input(p)
    p.set_defaults(func=cmd_kappa)

    p = common(sub.add_parser("gen", help="emit a named family as graph6 or CSV"))
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--format", choices=("graph6", "csv"), default="graph6")
    p.set_defaults(func=cmd_gen)

    def scan_opts(p):
        p.add_argument("--threads", type=int, help=f"scan workers (default ${THREADS_ENV} or 1)")
        p.add_argument("--backend", choices=("numba", "numpy"))

    p = common(sub.add_parser("extremal", help="exhaustive Sombor optimum in a connectivity class"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=("vertex", "edge"), default="vertex")
    p.add_argument("--objective", choices=("max", "min"), default="max")
    p.add_argument("--json", action="store_true")
    scan_opts(p)
    p.set_defaults(func=cmd_extremal)

    p = common(sub.add_parser("verify", help="run every extremal/monotonicity claim up to --nmax"))
    p.add_argument("--nmax", type=int, default=7)
    p.add_argument("--samples", type=int, default=10_000, help="random neighbour-switch cases")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    scan_opts(p)
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("counterexample",
                              help="two-hub pairs where subdividing the hub edge raises SO (JSON)"))
    p.add_argument("--dmin", type=int, default=2)
    p.add_argument("--dmax", type=int, default=12)
    p.add_argument("--cliques", default="3,4,5", help="donor clique sizes, comma separated")
    p.add_argument("--all", action="store_true", help="list every family member, not just reversals")
    p.set_defaults(func=cmd_counterexample)

    p = common(sub.add_parser("qspr", help="fit the acid series against the Sombor index"))
    p.add_argument("--dataset", help="CSV: compound,dhc,dhf,dhsub,dhvap[,so][,carbons]")
    p.add_argument("--json", action="store_true")
    p.add_argument("--check", action="store_true", help="exit 1 unless published fits are reproduced")
    p.add_argument("--compare", action="store_true", help="also fit the comparison indices")
    p.set_defaults(func=cmd_qspr)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", None) is not None:
        if args.threads < 1:
            parser.error("--threads must be positive")
        os.environ[THREADS_ENV] = str(args.threads)
    if args.precision < 0:
        parser.error("--precision must be non-negative")
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"sombor {args.command}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
