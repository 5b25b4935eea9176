# jobs/cli.py
# Command-line front end:
#   python -m jobs.cli enumerate --input FILE
#   python -m jobs.cli diff      --input FILE [--audit-candidates]
#   python -m jobs.cli exhaust   --n 5 [--resume] [--jobs 4]
#   python -m jobs.cli shrink    --input FIXTURE
#   python -m jobs.cli bench     [--n 10 15 20] [--p 0.2] [--seeds 0 1 2] [--max-partials N] [--time-limit S]
# Common flags: --mode {strict,literal} --out DIR --cap N --log-level LEVEL --quiet
# Exit codes: 0 ok/agree, 2 mismatch found, 1 usage/parse/refusal/internal error.

import argparse
import logging
import os
import sys
from typing import List, Optional

from engine.cycsub import MODES, EngineInvariantError, IterationCapExceeded
from graphs.core import CapExceededError, GraphInputError
from jobs.bench_gnp import run_bench
from jobs.diff_graph import EXIT_ERROR, run_diff
from jobs.enumerate_graph import run_enumerate
from jobs.exhaust_small import run_exhaust
from jobs.shrink_fixture import NotACounterexample, run_shrink
from parser.edge_list import GraphParseError
from rules.settings import load_settings

log = logging.getLogger("cycsub")


def _int_list(values: List[str]) -> List[int]:
    """Accept both '--n 10 15' and '--n 10,15'."""
    out = []
    for v in values:
        out.extend(int(x) for x in v.split(",") if x.strip())
    return out


def build_parser() -> argparse.ArgumentParser:
    cfg = load_settings()

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=MODES, default=cfg.mode, help="join guard (default: %(default)s)")
    common.add_argument("--out", default=cfg.out_dir, help="output directory (default: %(default)s)")
    common.add_argument("--cap", type=int, default=None,
                        help="oracle vertex cap for diff/shrink, labeled-graph cap for exhaust")
    common.add_argument("--jobs", type=int, default=cfg.jobs, help="parallel workers for exhaust/bench")
    common.add_argument("--log-level", default=os.getenv("LOG_LEVEL", "INFO"))
    common.add_argument("--quiet", action="store_true", help="no progress bars")

    ap = argparse.ArgumentParser(prog="cycsub", description="Cyclic-subset enumeration and audit harness")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="run the engine on a graph file")
    p.add_argument("--input", required=True)

    p = sub.add_parser("diff", parents=[common], help="engine vs brute-force oracle on a graph file")
    p.add_argument("--input", required=True)
    p.add_argument("--audit-candidates", action="store_true",
                   help="count pre-filter candidates that induce no spanning cycle")
    p.add_argument("--oracle-first", action="store_true", help="run the oracle before the engine")

    p = sub.add_parser("exhaust", parents=[common], help="diff every labeled graph on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--resume", action="store_true", help="skip chunks recorded in the progress file")
    p.add_argument("--chunk-size", type=int, default=cfg.chunk_size)
    p.add_argument("--audit-candidates", action="store_true")

    p = sub.add_parser("shrink", parents=[common], help="minimize a mismatching graph")
    p.add_argument("--input", required=True)

    p = sub.add_parser("bench", parents=[common], help="time the engine on G(n, p) samples")
    p.add_argument("--n", nargs="+", default=[str(x) for x in cfg.bench_n_list])
    p.add_argument("--p", type=float, default=cfg.bench_p)
    p.add_argument("--seeds", nargs="+", default=[str(x) for x in cfg.bench_seeds])
    p.add_argument("--max-partials", type=int, default=None,
                   help="per-run partial-cycle budget, 0 for none (default: %s)" % cfg.bench_max_partials)
    p.add_argument("--time-limit", type=float, default=None,
                   help="per-run seconds budget, 0 for none (default: %s)" % cfg.bench_time_limit)

    return ap


def dispatch(args: argparse.Namespace) -> int:
    if args.command == "enumerate":
        return run_enumerate(args.input, args.mode, args.out)
    if args.command == "diff":
        return run_diff(args.input, args.mode, args.out, cap=args.cap,
                        audit=args.audit_candidates, engine_first=not args.oracle_first)
    if args.command == "exhaust":
        return run_exhaust(args.n, args.mode, args.out, cap=args.cap, jobs=args.jobs,
                           chunk_size=args.chunk_size, resume=args.resume,
                           audit=args.audit_candidates, quiet=args.quiet)
    if args.command == "shrink":
        return run_shrink(args.input, args.mode, args.out, cap=args.cap)
    if args.command == "bench":
        return run_bench(_int_list(args.n), args.p, _int_list(args.seeds), args.mode, args.out,
                         jobs=args.jobs, quiet=args.quiet,
                         max_partials=args.max_partials, time_limit=args.time_limit)
    raise ValueError(f"unknown command {args.command!r}")


def main(argv: Optional[List[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse exits 2 on usage errors; 2 is reserved for mismatches here
        return EXIT_ERROR if e.code else 0

    level = str(args.log_level).upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        return dispatch(args)
    except (GraphParseError, GraphInputError, CapExceededError, NotACounterexample) as e:
        log.error(f"[ERR] {e}")
        return EXIT_ERROR
    except FileNotFoundError as e:
        log.error(f"[ERR] {e}")
        return EXIT_ERROR
    except IterationCapExceeded as e:
        log.error(f"[CAP] {e}")
        return EXIT_ERROR
    except EngineInvariantError:
        log.exception("[ERR] engine invariant violated")
        return EXIT_ERROR
    except ValueError as e:
        log.error(f"[ERR] {e}")
        return EXIT_ERROR
    except Exception:
        log.exception("[ERR] unexpected failure")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
