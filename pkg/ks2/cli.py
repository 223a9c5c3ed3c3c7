# ks2/cli.py
"""
CLI entrypoint `ks2`.

Commands:
  * ks2 test X Y [--method M] [--ties reject|resolve] [--json]
  * ks2 pvalue --m M --n N (--c C | --d D) [--method M|all] [--json]
  * ks2 compare --m-max A --n-max B [--m-min ..] [--n-min ..] [--samples K] [--seed S]
                [--workers W] [--with-asymptotic]

Exit codes: 0 ok; 1 unexpected failure; 2 invalid input; 3 ties rejected;
4 resource limit (exact-rational cap, path enumeration, full table, compare grid).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import List, Optional

from dotenv import load_dotenv

from ks2.compare import run_compare
from ks2.config import get_settings
from ks2.corridor import CorridorSpec
from ks2.errors import KsError
from ks2.logging_config import setup_logging
from ks2.report import (
    build_all_reports,
    build_report,
    render_all_human,
    render_all_json,
    render_human,
    render_json,
)
from ks2.sample_io import read_sample_file
from ks2.schemas import ALL_METHODS, CompareParams, Method, PvalueParams
from ks2.statistic import TiePolicy, compute_statistic
from ks2.validation import validate_params

logger = logging.getLogger(__name__)

METHOD_CHOICES = [m.value for m in Method]


# =========================
# Commands
# =========================
def cmd_test(args: argparse.Namespace) -> int:
    xs = read_sample_file(args.xfile)
    ys = read_sample_file(args.yfile)
    stat = compute_statistic(xs, ys, TiePolicy(args.ties))

    report = build_report(CorridorSpec.from_statistic(stat), Method(args.method), ties_detected=stat.ties_detected)
    print(render_json(report) if args.json else render_human(report))
    return 0


def cmd_pvalue(args: argparse.Namespace) -> int:
    params, error = validate_params(
        PvalueParams,
        {"m": args.m, "n": args.n, "c": args.c, "d": args.d, "method": args.method},
    )
    if error is not None:
        print(json.dumps(error), file=sys.stderr)
        return 2

    spec = CorridorSpec(m=params.m, n=params.n, c=params.threshold())
    if params.method == ALL_METHODS:
        reports, skipped = build_all_reports(spec)
        print(render_all_json(reports, skipped) if args.json else render_all_human(reports, skipped))
        return 0

    report = build_report(spec, params.method)
    print(render_json(report) if args.json else render_human(report))
    return 0


def cmd_compare(args: argparse.Namespace) -> int:
    params, error = validate_params(
        CompareParams,
        {
            "m_min": args.m_min,
            "m_max": args.m_max,
            "n_min": args.n_min,
            "n_max": args.n_max,
            "samples": args.samples,
            "seed": args.seed,
            "workers": args.workers if args.workers is not None else get_settings().workers,
            "with_asymptotic": args.with_asymptotic,
        },
    )
    if error is not None:
        print(json.dumps(error), file=sys.stderr)
        return 2

    df = run_compare(params)
    df.to_csv(sys.stdout, index=False)
    return 0


# =========================
# Parser
# =========================
def build_arg_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ks2",
        description="Exact p-values for the two-sided two-sample Kolmogorov-Smirnov test.",
    )
    p.add_argument("--verbose", action="store_true", help="Log at INFO level (JSON to stderr).")
    p.add_argument("--debug", action="store_true", help="Log at DEBUG level (JSON to stderr).")
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("test", help="Run the test on two sample files.")
    t.add_argument("xfile", help="First sample: one number per line, '#' comments.")
    t.add_argument("yfile", help="Second sample, same format.")
    t.add_argument("--method", choices=METHOD_CHOICES, default=Method.STABLE.value)
    t.add_argument("--ties", choices=[tp.value for tp in TiePolicy], default=TiePolicy.RESOLVE.value)
    t.add_argument("--json", action="store_true", help="Print the report as one JSON object.")
    t.set_defaults(handler=cmd_test)

    pv = sub.add_parser("pvalue", help="P-value for given sizes and threshold.")
    # numbers stay strings here; PvalueParams validates them
    pv.add_argument("--m", required=True)
    pv.add_argument("--n", required=True)
    g = pv.add_mutually_exclusive_group(required=True)
    g.add_argument("--c", help="Integer threshold numerator over m*n.")
    g.add_argument("--d", help="Decimal threshold; converted exactly to the smallest c with c/(m*n) >= d.")
    pv.add_argument("--method", choices=METHOD_CHOICES + [ALL_METHODS], default=Method.STABLE.value)
    pv.add_argument("--json", action="store_true")
    pv.set_defaults(handler=cmd_pvalue)

    cp = sub.add_parser("compare", help="CSV sweep: stable vs exact-rational.")
    cp.add_argument("--m-min", default=1)
    cp.add_argument("--m-max", required=True)
    cp.add_argument("--n-min", default=1)
    cp.add_argument("--n-max", required=True)
    cp.add_argument("--samples", default=None, help="Thresholds per (m, n) pair; default: all.")
    cp.add_argument("--seed", default=0)
    cp.add_argument("--workers", default=None, help="Process pool size (default KS2_WORKERS or 1).")
    cp.add_argument("--with-asymptotic", action="store_true", help="Add x, p_asymptotic, asym_abs_err columns.")
    cp.set_defaults(handler=cmd_compare)

    return p


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv(override=False)
    get_settings.cache_clear()

    parser = build_arg_parser()
    args = parser.parse_args(argv)

    level = "DEBUG" if args.debug else ("INFO" if args.verbose else None)
    setup_logging(level)

    logger.info("ks2 command started", extra={"command": args.command})
    try:
        rc = args.handler(args)
    except KsError as exc:
        logger.warning("ks2 command failed", extra={"command": args.command, "error": type(exc).__name__})
        print(f"ks2: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        # bad env configuration (Settings) and similar
        logger.exception("ks2 command rejected input")
        print(f"ks2: error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:
        logger.exception("ks2 command crashed")
        print(f"ks2: unexpected error: {exc}", file=sys.stderr)
        return 1

    logger.info("ks2 command finished", extra={"command": args.command, "exit_code": rc})
    return rc


if __name__ == "__main__":
    raise SystemExit(main())
