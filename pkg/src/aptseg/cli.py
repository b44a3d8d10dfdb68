"""Command-line entry point.

    aptseg run --gen example1 --algo apts --svg ex1.svg
    aptseg run --input data.csv --algo bu --k 5 --out report.txt
    aptseg run --from-report report.txt
    aptseg scaling --counts 1,10,50,100 --algos apts,ggs --threads 1
"""
from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

import numpy as np

from .bench import ALGOS, bench_scaling, format_table, solver, stretch, time_call
from .core import AptsConfig, MultiSeries, SegmentationError
from .generators import gen_example1, gen_example2, gen_noisy_replicas
from .io import FORMATS, RunReport, load_series
from .plot import write_svg

log = logging.getLogger("aptseg")

GENERATORS = {"example1": gen_example1, "example2": gen_example2}
# below this many values a process pool costs more than it saves
PARALLEL_MIN_VALUES = 100_000


def _read_weights(path) -> list[float]:
    text = Path(path).read_text().replace(",", " ")
    return [float(t) for t in text.split()]


def _add_run_args(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("input")
    src.add_argument("--input", type=Path, help="series file")
    src.add_argument("--format", choices=FORMATS, default=None,
                     help="file format (default: from the file extension, else csv)")
    src.add_argument("--rows", type=str, default=None, help="UCR rows to stack as channels, e.g. 0,3")
    src.add_argument("--gen", choices=("example1", "example2", "noisy"), help="synthetic series")
    src.add_argument("--base", choices=tuple(GENERATORS), default="example1",
                     help="base series for --gen noisy")
    src.add_argument("--channels", type=int, default=100, help="replica count for --gen noisy")
    src.add_argument("--seed", type=int, default=0)
    src.add_argument("--sigma", type=float, default=0.2)
    src.add_argument("--from-report", type=Path, help="rerun the configuration echoed in a report")

    alg = p.add_argument_group("algorithm")
    alg.add_argument("--algo", choices=ALGOS, default="apts")
    alg.add_argument("--k", type=int, default=None, help="breakpoint count for bu/ggs (default: APTS count)")
    alg.add_argument("--lambda", dest="lam", type=float, default=0.1, help="GGS regularizer")
    d = AptsConfig()
    alg.add_argument("--eps-min", type=float, default=d.eps_min)
    alg.add_argument("--eps-max", type=float, default=d.eps_max)
    alg.add_argument("--gamma-mult", type=float, default=d.gamma_mult)
    alg.add_argument("--gamma-close", type=float, default=None, help="default max(0.01 T, 2)")
    alg.add_argument("--gamma-plat", type=float, default=d.gamma_plat)
    alg.add_argument("--k-max", type=int, default=d.k_max)
    alg.add_argument("--weights", type=Path, help="file with one weight per channel")

    out = p.add_argument_group("output")
    out.add_argument("--out", type=Path, help="report path (default: stdout)")
    out.add_argument("--svg", type=Path, help="write an SVG plot")
    out.add_argument("--bench", action="store_true", help="time repeated solves")
    out.add_argument("--repeat", type=int, default=5)
    out.add_argument("--threads", type=int, default=None, help="APTS worker processes (default: all cores)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="aptseg", description="Multivariate time-series segmentation")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    _add_run_args(sub.add_parser("run", help="segment one series"))

    sc = sub.add_parser("scaling", help="time algorithms against the channel count")
    sc.add_argument("--base", choices=tuple(GENERATORS), default="example1")
    sc.add_argument("--input", type=Path, help="use this file as the base instead")
    sc.add_argument("--format", choices=FORMATS, default=None)
    sc.add_argument("--length", type=int, default=430, help="resample the base to this many points")
    sc.add_argument("--counts", type=str, default="1,10,50,100")
    sc.add_argument("--algos", type=str, default="apts,ggs")
    sc.add_argument("--k", type=int, default=5)
    sc.add_argument("--lambda", dest="lam", type=float, default=0.1)
    sc.add_argument("--sigma", type=float, default=0.2)
    sc.add_argument("--seed", type=int, default=0)
    sc.add_argument("--repeat", type=int, default=3)
    sc.add_argument("--threads", type=int, default=1)
    sc.add_argument("--out", type=Path)
    return parser


def _guess_format(path: Path, given: str | None) -> str:
    if given:
        return given
    suffix = path.suffix.lower().lstrip(".")
    return {"tsv": "tsv", "txt": "ucr", "ucr": "ucr"}.get(suffix, "csv")


def _config_from_report(args: argparse.Namespace) -> None:
    rep = RunReport.from_text(Path(args.from_report).read_text())
    for key, value in rep.config.items():
        dest = key.replace("-", "_")
        if dest in ("input", "weights_path") and value is not None:
            value = Path(value)
        setattr(args, dest, value)
    args.algo = rep.algo


def load_input(args: argparse.Namespace) -> tuple[MultiSeries, str]:
    if args.input is not None:
        fmt = _guess_format(args.input, args.format)
        rows = args.rows
        if isinstance(rows, str):
            rows = [int(r) for r in rows.split(",") if r.strip()] or None
        elif isinstance(rows, int):
            rows = [rows]
        return load_series(args.input, fmt, rows=rows), str(args.input)
    if args.gen is None:
        raise SegmentationError("give --input, --gen or --from-report")
    if args.gen == "noisy":
        base = GENERATORS[args.base]()
        return (gen_noisy_replicas(base, args.channels, args.sigma, args.seed),
                f"gen:noisy({args.base},n_x={args.channels},sigma={args.sigma},seed={args.seed})")
    return GENERATORS[args.gen](), f"gen:{args.gen}"


def _apts_config(args) -> AptsConfig:
    weights = getattr(args, "weight_values", None)
    if weights is None and args.weights is not None:
        weights = _read_weights(args.weights)
    return AptsConfig(eps_min=args.eps_min, eps_max=args.eps_max, gamma_mult=args.gamma_mult,
                      gamma_close=args.gamma_close, gamma_plat=args.gamma_plat, k_max=args.k_max,
                      weights=tuple(weights) if weights else None)


def run(args: argparse.Namespace) -> RunReport:
    if args.from_report is not None:
        _config_from_report(args)
    series, source = load_input(args)
    cfg = _apts_config(args)
    threads = args.threads or os.cpu_count() or 1
    workers = threads if series.values.size >= PARALLEL_MIN_VALUES else 1

    k = args.k
    epsilons: tuple = ()
    if args.algo in ("bu", "ggs") and k is None:
        from .pipeline import apts
        # same segment count as APTS, as in the comparison protocol
        k = apts(series, cfg, workers=workers).segmentation.k
        log.info("using k=%d from APTS", k)
    fn = solver(args.algo, series, cfg=cfg, k=k if k is not None else 0, lam=args.lam, workers=workers)
    result, timing = time_call(fn, args.repeat if args.bench else 1)
    if args.algo == "apts":
        seg = result.segmentation
        epsilons = tuple(result.epsilons)
    else:
        seg = result

    config = {
        "input": str(args.input) if args.input is not None else None,
        "format": args.format,
        "rows": ",".join(str(r) for r in args.rows) if isinstance(args.rows, list) else args.rows,
        "gen": args.gen, "base": args.base, "channels": args.channels,
        "seed": args.seed, "sigma": args.sigma,
        "k": k, "lam": args.lam,
        "eps_min": cfg.eps_min, "eps_max": cfg.eps_max, "gamma_mult": cfg.gamma_mult,
        "gamma_close": cfg.gamma_close, "gamma_plat": cfg.gamma_plat, "k_max": cfg.k_max,
        "weight_values": list(cfg.weights) if cfg.weights else None,
    }
    timings = {}
    if args.bench:
        timings = {"seconds_min": timing.min, "seconds_median": timing.median, "repeat": len(timing.seconds)}
    report = RunReport(algo=args.algo, source=source, n_x=series.n_x, T=series.T,
                       breakpoints=seg.breakpoints, epsilons=epsilons,
                       seconds=timing.seconds[-1], config=config, timings=timings)
    if args.svg is not None:
        write_svg(args.svg, series, seg.breakpoints, title=f"{args.algo}: {source}", max_panels=20)
    return report


def scaling(args: argparse.Namespace) -> str:
    if args.input is not None:
        base = load_series(args.input, _guess_format(args.input, args.format))
    else:
        base = GENERATORS[args.base]()
    base = stretch(base, args.length)
    counts = [int(c) for c in args.counts.split(",")]
    algos = [a for a in args.algos.split(",") if a]
    rows = bench_scaling(base, counts, algos, sigma=args.sigma, seed=args.seed, repeat=args.repeat,
                         k=args.k, lam=args.lam)
    return format_table(rows, algos)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.command == "run":
            text = run(args).to_text()
        else:
            text = scaling(args)
    except (SegmentationError, OSError, ValueError) as exc:
        print(f"aptseg: error: {exc}", file=sys.stderr)
        return 2
    if getattr(args, "out", None) is not None:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
