"""Command-line front end.

Two modes: analyze a two-column data file (default), or time the
estimators on synthetic data (--bench).  Exit status is 0 on success,
2 for unusable invocations (bad flags, bad flag combinations), and 1
for data problems (unreadable file, malformed rows, sample too small).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict

from .bench import NAIVE_SIZE_CAP, bench
from .errors import TauStarError
from .fast import t_star
from .io import read_xy_file
from .naive import naive_t_star_u, naive_t_star_v
from .subsample import SubsampleConfig, estimate

__all__ = ["build_parser", "main"]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="taustar",
        description="Exact (or subsampled) tau-star sign covariance of a paired sample.",
    )
    p.add_argument(
        "input",
        nargs="?",
        help="two-column comma- or tab-separated file of (x, y) rows",
    )
    p.add_argument(
        "--kind",
        choices=("u", "v"),
        default="u",
        help="u: unbiased over distinct quadruples (needs n >= 4); "
        "v: averaged over all quadruples (any n)",
    )
    p.add_argument(
        "--method",
        choices=("auto", "fast", "naive", "subsample"),
        default="auto",
        help="auto/fast: exact sweep; naive: exact brute force; "
        "subsample: randomized approximation",
    )
    p.add_argument("--m", type=int, help="subsample size (subsample method only)")
    p.add_argument(
        "--resamples", type=int, help="number of subsamples (subsample method only)"
    )
    p.add_argument("--seed", type=int, help="RNG seed (subsample or --bench)")
    p.add_argument(
        "--ranks",
        action="store_true",
        help="replace each axis by midranks before estimating",
    )
    p.add_argument(
        "--allow-large-naive",
        action="store_true",
        help=f"lift the n <= {NAIVE_SIZE_CAP} safety cap on the naive method",
    )
    p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p.add_argument(
        "--bench",
        action="store_true",
        help="time the exact methods on synthetic normal data instead of reading a file",
    )
    p.add_argument("--sizes", help="comma-separated sample sizes for --bench")
    p.add_argument(
        "--trials", type=int, help="timed repetitions per bench cell (default 10)"
    )
    return p


def _validate(parser: argparse.ArgumentParser, args: argparse.Namespace) -> None:
    if args.seed is not None and args.seed < 0:
        parser.error("--seed must be non-negative")
    if args.trials is not None and args.trials < 1:
        parser.error("--trials must be at least 1")
    if args.bench:
        if args.input is not None:
            parser.error("--bench generates its own data; drop the input file")
        if args.sizes is None:
            parser.error("--bench requires --sizes")
        if args.kind != "u":
            parser.error("--bench times the unbiased statistic only; drop --kind v")
        if args.method == "subsample":
            parser.error("--bench supports --method auto, fast or naive")
        if args.m is not None or args.resamples is not None:
            parser.error("--m/--resamples apply only to --method subsample")
        if args.ranks:
            parser.error("--ranks has no effect under --bench")
    else:
        if args.input is None:
            parser.error("an input file is required (or use --bench)")
        if args.sizes is not None or args.trials is not None:
            parser.error("--sizes/--trials apply only to --bench")
        if args.method == "subsample":
            if args.m is None or args.resamples is None:
                parser.error("--method subsample requires --m and --resamples")
            if args.m < 4:
                parser.error("--m must be at least 4")
            if args.resamples < 1:
                parser.error("--resamples must be at least 1")
        else:
            if args.m is not None or args.resamples is not None or args.seed is not None:
                parser.error("--m/--resamples/--seed apply only to --method subsample")


def _parse_sizes(parser: argparse.ArgumentParser, text: str) -> list[int]:
    try:
        sizes = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        parser.error(f"--sizes must be comma-separated integers, got {text!r}")
    if not sizes:
        parser.error("--sizes must name at least one size")
    return sizes


def _run_bench(parser: argparse.ArgumentParser, args: argparse.Namespace) -> str:
    methods = ("fast", "naive") if args.method == "auto" else (args.method,)
    try:
        report = bench(
            _parse_sizes(parser, args.sizes),
            methods=methods,
            trials=args.trials if args.trials is not None else 10,
            seed=args.seed if args.seed is not None else 0,
            allow_large_naive=args.allow_large_naive,
        )
    except ValueError as e:
        parser.error(str(e))
    if args.format == "csv":
        return report.to_csv().rstrip("\n")
    if args.format == "json":
        return json.dumps({"rows": [asdict(r) for r in report.rows]}, sort_keys=True)
    lines = [f"{'n':>8}  {'method':>6}  {'mean_seconds':>14}  {'trials':>6}"]
    for row in report.rows:
        lines.append(
            f"{row.n:>8}  {row.method:>6}  {row.mean_seconds:>14.6f}  {row.trials:>6}"
        )
    return "\n".join(lines)


def _run_file(parser: argparse.ArgumentParser, args: argparse.Namespace) -> str:
    sample = read_xy_file(args.input, ranks=args.ranks)
    kind = args.kind.upper()
    if args.method == "subsample":
        config = SubsampleConfig(
            m=args.m,
            resamples=args.resamples,
            seed=args.seed if args.seed is not None else 0,
            kind=kind,
        )
        start = time.perf_counter()
        est = estimate(sample, config)
        elapsed = time.perf_counter() - start
        if args.format == "plain":
            return str(est.mean)
        if args.format == "json":
            payload = {
                "kind": est.kind,
                "m": est.m,
                "mean": est.mean,
                "method": "subsample",
                "n": sample.n,
                "per_resample_variance": est.per_resample_variance,
                "ranks": args.ranks,
                "resamples": est.resamples,
                "seed": est.seed,
                "value": est.mean,
                "wall_time_seconds": elapsed,
            }
            return json.dumps(payload, sort_keys=True)
        var = "" if est.per_resample_variance is None else repr(est.per_resample_variance)
        return (
            "n,kind,method,m,resamples,seed,mean,per_resample_variance\n"
            f"{sample.n},{est.kind},subsample,{est.m},{est.resamples},{est.seed},"
            f"{est.mean!r},{var}"
        )

    if args.method == "naive":
        if sample.n > NAIVE_SIZE_CAP and not args.allow_large_naive:
            parser.error(
                f"method naive at n = {sample.n} exceeds the safety cap of "
                f"{NAIVE_SIZE_CAP}; pass --allow-large-naive to force it"
            )
        runner = naive_t_star_u if kind == "U" else naive_t_star_v
        start = time.perf_counter()
        result = runner(sample)
        elapsed = time.perf_counter() - start
    else:
        start = time.perf_counter()
        result = t_star(sample, kind=kind)
        elapsed = time.perf_counter() - start

    if args.format == "plain":
        return str(result.value)
    if args.format == "json":
        payload = {
            "concordant_weighted": result.concordant_weighted,
            "denominator": result.denominator,
            "discordant_weighted": result.discordant_weighted,
            "has_ties_x": sample.has_ties_x,
            "has_ties_y": sample.has_ties_y,
            "kind": result.kind,
            "method": args.method,
            "n": sample.n,
            "path": result.path,
            "ranks": args.ranks,
            "value": result.value,
            "wall_time_seconds": elapsed,
        }
        return json.dumps(payload, sort_keys=True)
    return (
        "n,kind,method,path,value,concordant_weighted,discordant_weighted,denominator\n"
        f"{sample.n},{result.kind},{args.method},{result.path},{result.value!r},"
        f"{result.concordant_weighted},{result.discordant_weighted},{result.denominator}"
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(parser, args)
    try:
        out = _run_bench(parser, args) if args.bench else _run_file(parser, args)
    except TauStarError as e:
        print(f"taustar: error: {e}", file=sys.stderr)
        return 1
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
