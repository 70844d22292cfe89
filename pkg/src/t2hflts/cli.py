"""Command-line interface: parse, envelope, decide, sweep, baseline.

Exit codes: 0 success, 2 invalid input, 3 numeric failure.  Diagnostics go
to stderr; results go to stdout or the requested files.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .aggregation import AggregationError
from .envelope import EnvelopeConfig, EnvelopeError, represent_response
from .io import CONFIG_ENV, ValidationError, load_lts, load_survey
from .it2 import FuzzyError, IT2TrFN
from .linguistic import LinguisticError, parse_cle, render_cle, transform
from .pipeline import (PipelineError, RunConfig, baseline, baseline_table, emit, geometry_table,
                       rank_matrix_table, run, score_table, sweep, sweep_table, to_json)
from .ranking import RankingError

EXIT_OK, EXIT_INVALID, EXIT_NUMERIC = 0, 2, 3


def _envelope_cfg(args, lts) -> EnvelopeConfig:
    over = {}
    if getattr(args, "alpha", None) is not None:
        over["alpha"] = args.alpha
    if getattr(args, "mode", None):
        over["fuzziness_mode"] = args.mode
    if getattr(args, "shoulder", None):
        over["shoulder_policy"] = args.shoulder
    if getattr(args, "n", None):
        over["n"] = args.n
    return EnvelopeConfig.for_lts(lts, **over)


def _write(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(text, encoding="utf-8")


def cmd_parse(args) -> int:
    lts = load_lts(args.lts)
    cle = parse_cle(args.phrase, lts)
    h = transform(cle, lts)
    _write(to_json({"cle": cle.to_dict(), "canonical": render_cle(cle, lts),
                    "terms": h.labels, "indices": list(h.indices)}), None)
    return EXIT_OK


def cmd_envelope(args) -> int:
    lts = load_lts(args.lts)
    cfg = _envelope_cfg(args, lts)
    cle = parse_cle(args.phrase, lts)
    rep = represent_response(cle, lts, cfg)
    if isinstance(rep, IT2TrFN):
        doc = {"phrase": render_cle(cle, lts), "envelope": False,
               "umf": list(rep.umf.knots), "lmf": list(rep.lmf.knots), "lmf_height": rep.lmf.h}
    else:
        a, f, g, o, h = rep.lower.effective_knots()
        doc = {"phrase": render_cle(cle, lts), "envelope": True,
               "umf": list(rep.umf.knots), "lmf_t1": list(rep.lmf_t1.knots),
               "lmf_t1_height": rep.lmf_t1.h, "lmf_effective": [a, f, g, o],
               "lmf_height": rep.lower.height, "entropy": rep.entropy.to_dict()}
    if args.geometry:
        _write(geometry_table([(render_cle(cle, lts), rep.sample(cfg.n))]), None)
    else:
        _write(to_json(doc), None)
    if args.figure:
        from .plotting import plot_sets
        plot_sets([(render_cle(cle, lts), rep.sample(cfg.n))], args.figure, render_cle(cle, lts, True))
    return EXIT_OK


def cmd_decide(args) -> int:
    lts = load_lts(args.lts)
    survey = load_survey(args.survey)
    cfg = RunConfig(envelope=_envelope_cfg(args, lts), inject_ranks=args.inject_ranks,
                    jobs=args.jobs)
    result = run(survey, lts, cfg)
    _write(emit(result, args.format).decode(), args.out)
    if args.report:
        from .plotting import plot_aggregates, plot_scores
        rep = Path(args.report)
        _write(emit(result, "json").decode(), rep / "result.json")
        _write(score_table(result), rep / "scores.tsv")
        _write(rank_matrix_table(result), rep / "rank_matrix.tsv")
        _write(emit(result, "geometry").decode(), rep / "aggregates.tsv")
        plot_aggregates(result, rep / "aggregates.png")
        plot_scores(result, rep / "scores.png")
    print(f"envelopes built: {result.envelope_count} of {result.response_count} responses "
          f"({100 * result.bypass_rate:.1f}% single terms bypassed)", file=sys.stderr)
    return EXIT_OK


def cmd_sweep(args) -> int:
    lts = load_lts(args.lts)
    rows = sweep(lts, args.case, args.mode)
    _write(sweep_table(rows), args.out)
    if args.figure:
        from .plotting import plot_sweep
        plot_sweep(rows, args.figure, f"case {args.case}")
    return EXIT_OK


def cmd_baseline(args) -> int:
    lts = load_lts(args.lts)
    survey = load_survey(args.survey)
    res = baseline(survey, lts, args.method, _envelope_cfg(args, lts))
    _write(to_json(res) if args.format == "json" else baseline_table(res), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="t2hflts",
        description="Group decision making with type-2 hesitant fuzzy linguistic term sets.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, survey=False):
        p.add_argument("--lts", type=Path, default=None,
                       help=f"term-set JSON (default: ${CONFIG_ENV}, then the bundled set)")
        if survey:
            p.add_argument("--survey", type=Path, required=True, help="survey JSON")

    def tuning(p):
        p.add_argument("--alpha", type=float, help="OWA alpha (default: calibrated)")
        p.add_argument("--mode", choices=["midpoint", "left", "right"], help="fuzziness collapse")
        p.add_argument("--shoulder", choices=["clamp", "plain"])
        p.add_argument("--n", type=int, help="grid points on [0, 1]")

    p = sub.add_parser("parse", help="parse a comparative linguistic expression")
    p.add_argument("phrase")
    common(p)
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("envelope", help="build the IT2 representation of one expression")
    p.add_argument("phrase")
    common(p)
    tuning(p)
    p.add_argument("--geometry", action="store_true", help="emit x, lower, upper rows")
    p.add_argument("--figure", type=Path, help="write a plot of the footprint")
    p.set_defaults(func=cmd_envelope)

    p = sub.add_parser("decide", help="run the full decision pipeline on a survey")
    common(p, survey=True)
    tuning(p)
    p.add_argument("--out", type=Path, help="output file (default stdout)")
    p.add_argument("--format", choices=["json", "table", "geometry"], default="json")
    p.add_argument("--inject-ranks", action="store_true",
                   help="use the survey's rank_matrix instead of centroid rankings")
    p.add_argument("--jobs", type=int, default=1, help="parallel workers (same output)")
    p.add_argument("--report", type=Path, help="directory for tables and figures")
    p.set_defaults(func=cmd_decide)

    p = sub.add_parser("sweep", help="entropy sensitivity sweep")
    common(p)
    p.add_argument("--case", type=int, choices=[1, 2], required=True)
    p.add_argument("--mode", choices=["midpoint", "left", "right"])
    p.add_argument("--out", type=Path)
    p.add_argument("--figure", type=Path)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("baseline", help="run a comparison method")
    common(p, survey=True)
    tuning(p)
    p.add_argument("--method", choices=["topsis", "wlq"], required=True)
    p.add_argument("--format", choices=["json", "table"], default="table")
    p.add_argument("--out", type=Path)
    p.set_defaults(func=cmd_baseline)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValidationError, LinguisticError, RankingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (FuzzyError, EnvelopeError, AggregationError, PipelineError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    raise SystemExit(main())
