# jobs/reports.py
# Report records shared by the harness jobs, and the JSON / CSV / text writers.
# Every writer is deterministic: sorted keys, fixed column order, "\n" line endings.

import csv
import json
import logging
import os
import subprocess
from dataclasses import asdict, dataclass, field, fields
from functools import lru_cache
from time import perf_counter
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from engine.cycsub import IterationCapExceeded, cycsub
from engine.trace import EngineTrace, engine_stats
from graphs.core import CandidateFamily, Graph, induced_is_hamiltonian
from oracle.brute import oracle_cyclic_subsets
from parser.diffing import diff_families, fingerprint, format_family
from rules.settings import load_settings

logger = logging.getLogger(__name__)

DIFF_SCHEMA = "cycsub.diff/1"
EXHAUST_SCHEMA = "cycsub.exhaust/1"
BENCH_SCHEMA = "cycsub.bench/1"

AGREE = "agree"
MISMATCH = "mismatch"
CAP_EXCEEDED = "cap_exceeded"


@lru_cache(maxsize=1)
def harness_version() -> str:
    from jobs import __version__

    try:
        out = subprocess.run(
            ["git", "describe", "--always", "--dirty", "--tags"],
            capture_output=True, text=True, timeout=5,
            cwd=os.path.dirname(os.path.abspath(__file__)),
        )
        if out.returncode == 0 and out.stdout.strip():
            return f"{__version__}+{out.stdout.strip()}"
    except (OSError, subprocess.SubprocessError):
        pass
    return __version__


# -------------------- diff --------------------

@dataclass
class DiffReport:
    source: str
    graph_id: str
    n: int
    m: int
    mode: str
    verdict: str
    engine_count: int
    oracle_count: int
    engine_sizes: Dict[int, int]
    oracle_sizes: Dict[int, int]
    engine_missing: List[str]
    engine_extra: List[str]
    loop_iterations: Optional[int]
    partial_bound: Optional[Dict[str, Any]]
    error: Optional[str] = None
    audit: Optional[Dict[str, int]] = None
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def agrees(self) -> bool:
        return self.verdict == AGREE

    def to_dict(self, include_timings: bool = True) -> Dict[str, Any]:
        doc = {"schema": DIFF_SCHEMA, "version": harness_version(), **asdict(self)}
        # JSON object keys must be strings; keep numeric order
        doc["engine_sizes"] = {str(k): v for k, v in sorted(self.engine_sizes.items())}
        doc["oracle_sizes"] = {str(k): v for k, v in sorted(self.oracle_sizes.items())}
        if not include_timings:
            doc.pop("timings")
        return doc


def audit_candidates(g: Graph, trace: EngineTrace) -> Dict[str, int]:
    """Count pre-filter candidates whose induced subgraph has no spanning cycle."""
    checked = skipped = failed = 0
    # exponential in candidate size; larger candidates are counted as skipped
    limit = load_settings().audit_max_size
    for s in trace.candidates or ():
        if len(s) > limit:
            skipped += 1
            continue
        checked += 1
        if not induced_is_hamiltonian(g, s):
            failed += 1
    return {"checked": checked, "skipped": skipped, "non_hamiltonian": failed}


def build_diff_report(
    g: Graph,
    source: str,
    mode: str,
    *,
    oracle_cap: Optional[int] = None,
    audit: bool = False,
    engine_first: bool = True,
) -> DiffReport:
    timings: Dict[str, float] = {}
    engine_result: Optional[CandidateFamily] = None
    trace: Optional[EngineTrace] = None
    error: Optional[str] = None

    def run_engine():
        nonlocal engine_result, trace, error
        t0 = perf_counter()
        try:
            engine_result, trace = cycsub(g, mode, keep_candidates=audit)
        except IterationCapExceeded as e:
            error = str(e)
        timings["engine"] = perf_counter() - t0

    def run_oracle() -> CandidateFamily:
        t0 = perf_counter()
        fam = oracle_cyclic_subsets(g, oracle_cap)
        timings["oracle"] = perf_counter() - t0
        return fam

    if engine_first:
        run_engine()
        oracle_result = run_oracle()
    else:
        oracle_result = run_oracle()
        run_engine()

    if engine_result is None:
        verdict, missing, extra = CAP_EXCEEDED, [], []
    else:
        missing, extra = diff_families(engine_result, oracle_result)
        verdict = AGREE if not missing and not extra else MISMATCH

    return DiffReport(
        source=source,
        graph_id=fingerprint(g),
        n=g.n,
        m=g.m,
        mode=mode,
        verdict=verdict,
        engine_count=len(engine_result) if engine_result is not None else 0,
        oracle_count=len(oracle_result),
        engine_sizes=engine_result.size_histogram() if engine_result is not None else {},
        oracle_sizes=oracle_result.size_histogram(),
        engine_missing=format_family(missing).splitlines(),
        engine_extra=format_family(extra).splitlines(),
        loop_iterations=len(trace.iterations) if trace else None,
        partial_bound=engine_stats(trace).to_dict() if trace else None,
        error=error,
        audit=audit_candidates(g, trace) if audit and trace else None,
        timings=timings,
    )


# -------------------- bench --------------------

@dataclass
class BenchRecord:
    n: int
    p: float
    seed: int
    m: int
    cap_hit: bool
    budget_hit: bool
    classify_s: float
    loop_s: float
    cliques_s: float
    filter_s: float
    total_s: float
    triples: int
    foundations: int
    extensions: int
    cliques: int
    max_partials: int
    max_surviving: int
    partial_bound_ok: bool
    entry_bound_ok: bool
    loop_iterations: int
    join_checks: int
    z_size: int
    result_size: int

    TIMING_FIELDS = ("classify_s", "loop_s", "cliques_s", "filter_s", "total_s")

    @classmethod
    def columns(cls) -> List[str]:
        return [f.name for f in fields(cls)]

    def counters(self) -> Dict[str, Any]:
        return {k: v for k, v in asdict(self).items() if k not in self.TIMING_FIELDS}

    @property
    def complete(self) -> bool:
        """Ran to the end; only these rows go into the fits."""
        return not (self.cap_hit or self.budget_hit)


def fit_loglog(xs: Sequence[float], ys: Sequence[float]) -> Optional[Dict[str, float]]:
    """Least-squares line through (log x, log y); points with y <= 0 are dropped."""
    pts = [(x, y) for x, y in zip(xs, ys) if x > 0 and y > 0]
    if len({x for x, _ in pts}) < 2:
        return None
    lx = np.log(np.array([x for x, _ in pts], dtype=float))
    ly = np.log(np.array([y for _, y in pts], dtype=float))
    slope, intercept = np.polyfit(lx, ly, 1)
    pred = slope * lx + intercept
    ss_res = float(np.sum((ly - pred) ** 2))
    ss_tot = float(np.sum((ly - ly.mean()) ** 2))
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0
    return {"slope": float(slope), "intercept": float(intercept), "r2": r2, "points": len(pts)}


# -------------------- writers --------------------

def _ensure_parent(path: str) -> None:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)


def write_json(path: str, doc: Dict[str, Any]) -> str:
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        json.dump(doc, f, indent=2, sort_keys=True)
        f.write("\n")
    return path


def write_text(path: str, text: str) -> str:
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    return path


class BenchTable:
    """Bench CSV written one row at a time, flushed per row, so an interrupted run keeps what finished."""

    def __init__(self, path: str):
        self.path = path
        self.columns = BenchRecord.columns()
        self._file = None
        self._writer = None

    def __enter__(self) -> "BenchTable":
        _ensure_parent(self.path)
        self._file = open(self.path, "w", encoding="utf-8", newline="")
        self._writer = csv.writer(self._file, lineterminator="\n")
        self._writer.writerow(self.columns)
        self._file.flush()
        return self

    def add(self, record: BenchRecord) -> None:
        row = asdict(record)
        self._writer.writerow([row[c] for c in self.columns])
        self._file.flush()

    def __exit__(self, *exc) -> None:
        self._file.close()
