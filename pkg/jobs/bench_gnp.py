# jobs/bench_gnp.py
# Engine-only timings and counters on seeded G(n, p) samples, plus log-log slope fits.
# Each run has a work budget (rules/harness.yaml bench.max_partials / bench.time_limit); a run that
# exhausts it is still written, flagged budget_hit, with the counters it reached, and left out of the fits.
# Rows are appended to the CSV as runs finish.
# No pass/fail on the slope: the table and fit are reported as measured.

import hashlib
import json
import logging
import os
from typing import Any, Dict, List, Optional, Sequence

from joblib import Parallel, delayed
from tqdm import tqdm

from engine.cycsub import BudgetExceeded, IterationCapExceeded, cycsub
from engine.trace import EngineTrace, engine_stats
from graphs.core import Graph
from graphs.generate import gen_gnp
from jobs.reports import BENCH_SCHEMA, BenchRecord, BenchTable, fit_loglog, harness_version, write_json
from rules.settings import load_settings

log = logging.getLogger("bench")


def _record(g: Graph, p: float, seed: int, trace: Optional[EngineTrace], *, cap_hit: bool = False,
            budget_hit: bool = False) -> BenchRecord:
    if trace is None:
        return BenchRecord(
            n=g.n, p=p, seed=seed, m=g.m, cap_hit=cap_hit, budget_hit=budget_hit,
            classify_s=0.0, loop_s=0.0, cliques_s=0.0, filter_s=0.0, total_s=0.0,
            triples=0, foundations=0, extensions=0, cliques=0, max_partials=0, max_surviving=0,
            partial_bound_ok=True, entry_bound_ok=True,
            loop_iterations=0, join_checks=0, z_size=0, result_size=0,
        )
    phases = trace.phase_seconds
    stats = engine_stats(trace)
    return BenchRecord(
        n=g.n, p=p, seed=seed, m=g.m, cap_hit=cap_hit, budget_hit=budget_hit,
        classify_s=phases.get("classify", 0.0),
        loop_s=phases.get("loop", 0.0),
        cliques_s=phases.get("cliques", 0.0),
        filter_s=phases.get("filter", 0.0),
        total_s=trace.total_seconds,
        triples=trace.triples,
        foundations=trace.foundations,
        extensions=trace.extensions,
        cliques=trace.cliques,
        max_partials=trace.max_partials,
        max_surviving=trace.max_surviving,
        partial_bound_ok=stats.compliant,
        entry_bound_ok=not stats.entry_violations,
        loop_iterations=len(trace.iterations),
        join_checks=trace.join_checks,
        z_size=trace.z_size,
        result_size=trace.result_size,
    )


def bench_one(
    n: int,
    p: float,
    seed: int,
    mode: str,
    max_partials: Optional[int] = None,
    time_limit: Optional[float] = None,
) -> BenchRecord:
    g = gen_gnp(n, p, seed)
    try:
        _, trace = cycsub(g, mode, max_partials=max_partials, time_limit=time_limit)
    except BudgetExceeded as e:
        log.warning(f"[BUDGET] n={n} seed={seed}: {e.reason}")
        return _record(g, p, seed, e.trace, budget_hit=True)
    except IterationCapExceeded as e:
        log.warning(f"[CAP] n={n} seed={seed}: {e}")
        return _record(g, p, seed, None, cap_hit=True)
    return _record(g, p, seed, trace)


def counters_digest(records: Sequence[BenchRecord]) -> str:
    blob = json.dumps([r.counters() for r in records], sort_keys=True)
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def summarize(records: List[BenchRecord], p: float, mode: str) -> Dict[str, Any]:
    ok = [r for r in records if r.complete]
    return {
        "schema": BENCH_SCHEMA,
        "version": harness_version(),
        "mode": mode,
        "p": p,
        "records": len(records),
        "cap_hits": sum(1 for r in records if r.cap_hit),
        "budget_hits": sum(1 for r in records if r.budget_hit),
        "fit_total_seconds": fit_loglog([r.n for r in ok], [r.total_s for r in ok]),
        "fit_join_checks": fit_loglog([r.n for r in ok], [r.join_checks for r in ok]),
        "partial_bound_violations": sum(1 for r in records if not r.partial_bound_ok),
        "entry_bound_violations": sum(1 for r in records if not r.entry_bound_ok),
        "max_foundation_ratio": max((r.foundations / r.triples for r in records if r.triples), default=0.0),
        "counters_digest": counters_digest(records),
    }


def run_bench(
    n_list: Sequence[int],
    p: float,
    seeds: Sequence[int],
    mode: str,
    out_dir: str,
    *,
    jobs: int = 1,
    quiet: bool = False,
    max_partials: Optional[int] = None,
    time_limit: Optional[float] = None,
) -> int:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    cfg = load_settings()
    max_partials = cfg.bench_max_partials if max_partials is None else max_partials or None
    time_limit = cfg.bench_time_limit if time_limit is None else time_limit or None
    tasks = [(n, seed) for n in n_list for seed in seeds]
    log.info(f"[BENCH] {len(tasks)} run(s): n={list(n_list)} p={p} seeds={list(seeds)} mode={mode} "
             f"budget: {max_partials} partials, {time_limit}s")

    stem = f"bench_p{p:g}_{mode}"
    csv_path = os.path.join(out_dir, f"{stem}.csv")
    records: List[BenchRecord] = []
    # ordered generator: rows arrive in task order as soon as each run is done
    results = Parallel(n_jobs=jobs, return_as="generator")(
        delayed(bench_one)(n, p, seed, mode, max_partials, time_limit) for n, seed in tasks
    )
    with BenchTable(csv_path) as table:
        for r in tqdm(results, total=len(tasks), desc="bench", unit="run", disable=True if quiet else None):
            table.add(r)
            records.append(r)
            flag = " [BUDGET]" if r.budget_hit else " [CAP]" if r.cap_hit else ""
            log.info(f"[BENCH] n={r.n} seed={r.seed} m={r.m} |F|={r.foundations} max|I|={r.max_partials} "
                     f"max|I| pruned={r.max_surviving} |Z|={r.z_size} |Z'|={r.result_size} {r.total_s:.3f}s{flag}")

    summary = summarize(records, p, mode)
    summary_path = write_json(os.path.join(out_dir, f"{stem}.summary.json"), summary)

    fit = summary["fit_total_seconds"]
    if fit:
        log.info(f"[OK] time ~ n^{fit['slope']:.2f} (R^2={fit['r2']:.3f}) over {fit['points']} complete run(s), "
                 f"{summary['budget_hits']} over budget :: {csv_path}, {summary_path}")
    else:
        log.info(f"[OK] not enough complete runs for a fit, {summary['budget_hits']} over budget "
                 f":: {csv_path}, {summary_path}")
    return 0
