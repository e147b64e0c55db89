"""Command-line front end.

Machine-readable output goes to stdout, log lines to stderr. Exit codes:
0 success, 1 input or parse problem, 2 bound-ordering violation (the
implementation is falsified), 3 verification-suite violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bounds import BoundsReport, bounds_report
from .distances import dl_matrix
from .ensembles import EnsembleConfig, default_workers, gen_ba, gen_er, gen_named, run_ensemble
from .graph import Graph, GraphError, dumps_graph, read_graph
from .pmi import ExactCapExceeded, delta
from .rank import gamma_upper_estimate
from .verify import find_strict_combined_example, run_exhaustive_suite, run_random_suite
from .zero_forcing import derived_set


def _log(msg: str) -> None:
    print(msg, file=sys.stderr)


def _parse_leaders(spec: str) -> list[int]:
    if spec.startswith("@"):
        text = Path(spec[1:]).read_text(encoding="utf-8")
        tokens = text.replace(",", " ").split()
    else:
        tokens = spec.split(",")
    try:
        return [int(t) for t in tokens if t.strip()]
    except ValueError:
        raise GraphError(f"leaders must be integers, got {spec!r}") from None


def _load(graph_file: str) -> Graph:
    return read_graph(graph_file)


def cmd_bounds(args: argparse.Namespace) -> int:
    g = _load(args.graph_file)
    leaders = _parse_leaders(args.leaders)
    report = bounds_report(
        g,
        leaders,
        mode=args.mode,
        with_rank=args.rank is not None,
        samples=args.rank or 1,
        scheme=args.scheme,
        seed=args.seed,
    )
    _log(f"seed: {args.seed}")
    if args.format == "csv":
        print(BoundsReport.csv_header())
        print(report.to_csv_row())
    else:
        print(report.to_json())
    if report.violations():
        _log(f"bound ordering violated: {', '.join(report.violations())}")
        return 2
    return 0


def cmd_zf(args: argparse.Namespace) -> int:
    g = _load(args.graph_file)
    leaders = _parse_leaders(args.leaders)
    dset = derived_set(g, leaders)
    out = {
        "zeta": len(dset),
        "is_zfs": len(dset) == g.n,
        "derived_set": sorted(dset.members),
    }
    if args.trace:
        out["trace"] = dset.trace_events()
    print(json.dumps(out))
    return 0


def cmd_delta(args: argparse.Namespace) -> int:
    g = _load(args.graph_file)
    leaders = _parse_leaders(args.leaders)
    result = delta(g, leaders, mode=args.mode)
    dl = dl_matrix(g, leaders)
    out = {
        "delta": result.value,
        "exact": result.exact,
        "sequence": json.loads(result.sequence.to_json(dl)),
    }
    print(json.dumps(out))
    return 0


def cmd_gamma(args: argparse.Namespace) -> int:
    g = _load(args.graph_file)
    leaders = _parse_leaders(args.leaders)
    evidence = gamma_upper_estimate(
        g, leaders, samples=args.samples, scheme=args.scheme, seed=args.seed
    )
    _log(f"seed: {args.seed}")
    out = {
        "gamma_upper": evidence.min_rank,
        "sample_ranks": list(evidence.ranks),
        "sample_seeds": list(evidence.seeds),
        "scheme": evidence.scheme,
        "exact_arithmetic": evidence.exact,
    }
    print(json.dumps(out))
    if args.evidence_out:
        with open(args.evidence_out, "w", encoding="utf-8") as fh:
            evidence.to_csv(fh)
        _log(f"evidence written to {args.evidence_out}")
    return 0


def cmd_ensemble(args: argparse.Namespace) -> int:
    cfg = EnsembleConfig.from_json(Path(args.config_file).read_text(encoding="utf-8"))
    _log(f"seed: {cfg.seed}")
    result = run_ensemble(cfg, workers=args.workers)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = f"{cfg.family}{'_' + cfg.param_label() if cfg.param_label() else ''}_n{cfg.n}"
    instances_path = out_dir / f"{stem}_instances.csv"
    summary_path = out_dir / f"{stem}_summary.csv"
    with open(instances_path, "w", encoding="utf-8") as fh:
        result.write_instances_csv(fh)
    with open(summary_path, "w", encoding="utf-8") as fh:
        result.write_summary_csv(fh)
    for failure in result.failures:
        _log(f"instance failed: {failure}")
    print(str(instances_path))
    print(str(summary_path))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    _log(f"seed: {args.seed}")
    if args.suite == "exhaustive":
        if args.max_n > 8:
            _log("exhaustive suite capped at max-n 8")
            return 1
        summary = run_exhaustive_suite(
            max_n=args.max_n,
            digraph_max_n=min(args.max_n, 4),
            rank_samples=args.rank_samples,
            rank_seed=args.seed,
        )
    else:
        summary = run_random_suite(
            count=args.count,
            seed=args.seed,
            max_n=args.max_n,
            rank_samples=args.rank_samples,
        )
    print(summary.to_text(), end="")
    if args.suite == "exhaustive" and args.strict_combined_search:
        hit = find_strict_combined_example(max_n=7)
        if hit:
            g, leaders, d, z, c = hit
            print(f"strict-combined instance: delta={d} zeta={z} combined={c}")
            print(dumps_graph(g), end="")
            print(f"# leaders {','.join(map(str, leaders))}")
        else:
            print("strict-combined instance: none up to n=7")
    if summary.violation_count:
        return 3
    return 0


def cmd_generate(args: argparse.Namespace) -> int:
    if args.family == "er":
        if args.p is None:
            raise GraphError("er requires --p")
        g = gen_er(args.n, args.p, args.seed)
    elif args.family == "ba":
        if args.eps is None:
            raise GraphError("ba requires --eps")
        g = gen_ba(args.n, args.eps, args.seed)
    else:
        g = gen_named(args.family, args.n)
    _log(f"seed: {args.seed}")
    payload = dumps_graph(g, fmt=args.format)
    if args.output:
        Path(args.output).write_text(payload, encoding="utf-8")
        _log(f"graph written to {args.output}")
    else:
        print(payload, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sscbounds",
        description="Lower bounds on the strong structurally controllable subspace",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, leaders: bool = True) -> None:
        p.add_argument("graph_file")
        if leaders:
            p.add_argument("--leaders", required=True, help="comma-separated ids or @file")

    p = sub.add_parser("bounds", help="all three bounds plus optional rank evidence")
    add_common(p)
    p.add_argument("--mode", choices=("auto", "exact", "greedy"), default="auto")
    p.add_argument("--rank", type=int, default=None, metavar="K", help="weight samples")
    p.add_argument("--scheme", choices=("unit", "integer", "uniform"), default="integer")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("zf", help="derived set and zero-forcing bound")
    add_common(p)
    p.add_argument("--trace", action="store_true", help="include forcing events")
    p.set_defaults(func=cmd_zf)

    p = sub.add_parser("delta", help="distance bound with certificate")
    add_common(p)
    p.add_argument("--mode", choices=("auto", "exact", "greedy"), default="auto")
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("gamma", help="sampled upper estimate of the subspace dimension")
    add_common(p)
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--scheme", choices=("unit", "integer", "uniform"), default="integer")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--evidence-out", default=None, help="per-sample CSV path")
    p.set_defaults(func=cmd_gamma)

    p = sub.add_parser("ensemble", help="run a sweep from a JSON config")
    p.add_argument("config_file")
    p.add_argument("--out-dir", default=".")
    p.add_argument("--workers", type=int, default=default_workers())
    p.set_defaults(func=cmd_ensemble)

    p = sub.add_parser("verify", help="run the theorem property suites")
    p.add_argument("--suite", choices=("exhaustive", "random"), default="exhaustive")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--count", type=int, default=500, help="random-suite instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--rank-samples", type=int, default=3)
    p.add_argument(
        "--no-strict-combined-search",
        dest="strict_combined_search",
        action="store_false",
        help="skip the search for a strictly better combined bound",
    )
    p.set_defaults(func=cmd_verify, strict_combined_search=True)

    p = sub.add_parser("generate", help="write a graph from a named or random family")
    p.add_argument("--family", choices=("er", "ba", "path", "cycle", "star"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=float, default=None)
    p.add_argument("--eps", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_generate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, ExactCapExceeded, ValueError, OSError, json.JSONDecodeError) as exc:
        _log(f"error: {exc}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
