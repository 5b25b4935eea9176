# jobs/exhaust_small.py
# Diff every labeled graph on n vertices against the oracle.
# Work is cut into chunks of graph indices; each finished chunk is appended to a progress file
# (one JSON line), so an interrupted sweep can --resume. The summary is rebuilt from that file
# alone and carries no timings, so reruns produce byte-identical summaries.
# Mismatches never stop the sweep: each one is written to fixtures/ and the job exits 2 at the end.

import json
import logging
import os
from typing import Any, Dict, List, Optional

from joblib import Parallel, delayed
from tqdm import tqdm

from engine.cycsub import STRICT
from graphs.generate import check_labeled_cap, labeled_graph, labeled_graph_count, labeled_pairs
from jobs.diff_graph import EXIT_MISMATCH, EXIT_OK
from jobs.reports import AGREE, CAP_EXCEEDED, EXHAUST_SCHEMA, MISMATCH, build_diff_report, harness_version, write_json
from parser.diffing import fingerprint
from parser.edge_list import serialize_edge_list
from rules.settings import load_settings

log = logging.getLogger("exhaust")

COUNT_KEYS = (
    "graphs", AGREE, MISMATCH, "cap_hits",
    "partial_bound_violations", "entry_bound_violations",
    "iteration_bound_violations", "non_hamiltonian_candidates",
)


def _diff_chunk(n: int, mode: str, chunk: int, start: int, stop: int, chunk_size: int, audit: bool) -> Dict[str, Any]:
    pairs = labeled_pairs(n)
    out: Dict[str, Any] = {k: 0 for k in COUNT_KEYS}
    out.update({"chunk": chunk, "start": start, "stop": stop, "chunk_size": chunk_size,
                "mismatch_indices": [], "cap_hit_indices": [], "partial_bound_indices": []})
    bound = max(n - 3, 0)
    for index in range(start, stop):
        g = labeled_graph(n, index, pairs)
        report = build_diff_report(g, f"labeled:n={n}:{index}", mode, audit=audit)
        out["graphs"] += 1
        if report.verdict == CAP_EXCEEDED:
            out["cap_hits"] += 1
            out["cap_hit_indices"].append(index)
            continue
        out[report.verdict] += 1
        if report.verdict == MISMATCH:
            out["mismatch_indices"].append(index)
        if report.partial_bound and not report.partial_bound["compliant"]:
            out["partial_bound_violations"] += 1
            out["partial_bound_indices"].append(index)
        if report.partial_bound and report.partial_bound["entry_violations"]:
            out["entry_bound_violations"] += 1
        if mode == STRICT and (report.loop_iterations or 0) > bound:
            out["iteration_bound_violations"] += 1
        if report.audit:
            out["non_hamiltonian_candidates"] += report.audit["non_hamiltonian"]
    return out


def _chunks(n: int, chunk_size: int) -> List[Dict[str, int]]:
    total = labeled_graph_count(n)
    return [
        {"chunk": k, "start": start, "stop": min(start + chunk_size, total)}
        for k, start in enumerate(range(0, total, chunk_size))
    ]


def _load_progress(path: str, chunk_size: int) -> Dict[int, Dict[str, Any]]:
    done: Dict[int, Dict[str, Any]] = {}
    if not os.path.exists(path):
        return done
    with open(path, "r", encoding="utf-8") as f:
        for lineno, line in enumerate(f, 1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                log.warning(f"[SKIP] {path}:{lineno}: unreadable progress line (interrupted write?)")
                continue
            if rec.get("chunk_size") != chunk_size:
                continue
            done[int(rec["chunk"])] = rec
    return done


def fixture_path(out_dir: str, n: int, mode: str, g) -> str:
    return os.path.join(out_dir, "fixtures", f"n{n}_{mode}_{fingerprint(g)}.txt")


def _persist_fixtures(out_dir: str, n: int, mode: str, indices: List[int]) -> List[str]:
    pairs = labeled_pairs(n)
    written = []
    for index in indices:
        g = labeled_graph(n, index, pairs)
        path = fixture_path(out_dir, n, mode, g)
        if not os.path.exists(path):
            os.makedirs(os.path.dirname(path), exist_ok=True)
            with open(path, "w", encoding="utf-8", newline="\n") as f:
                f.write(f"# labeled graph n={n} index={index}, mismatch in mode={mode}\n")
                f.write(serialize_edge_list(g))
        written.append(os.path.relpath(path, out_dir))
    return written


def summarize(n: int, mode: str, records: List[Dict[str, Any]], fixtures: List[str]) -> Dict[str, Any]:
    totals = {k: sum(r.get(k, 0) for r in records) for k in COUNT_KEYS}
    mismatches = [i for r in records for i in r["mismatch_indices"]]
    cap_hits = [i for r in records for i in r["cap_hit_indices"]]
    partial_bound = [i for r in records for i in r["partial_bound_indices"]]
    # indices listed verbatim; counts are always complete
    listed = load_settings().max_listed
    return {
        "schema": EXHAUST_SCHEMA,
        "version": harness_version(),
        "n": n,
        "mode": mode,
        "expected_graphs": labeled_graph_count(n),
        **totals,
        "mismatch_indices": mismatches[:listed],
        "cap_hit_indices": cap_hits[:listed],
        "partial_bound_indices": partial_bound[:listed],
        "fixtures": sorted(fixtures),
    }


def run_exhaust(
    n: int,
    mode: str,
    out_dir: str,
    *,
    cap: Optional[int] = None,
    jobs: int = 1,
    chunk_size: int = 1024,
    resume: bool = False,
    audit: bool = False,
    quiet: bool = False,
) -> int:
    check_labeled_cap(n, cap)
    os.makedirs(out_dir, exist_ok=True)
    progress_path = os.path.join(out_dir, f"exhaust_n{n}_{mode}.progress.jsonl")
    summary_path = os.path.join(out_dir, f"exhaust_n{n}_{mode}.summary.json")

    if not resume and os.path.exists(progress_path):
        os.remove(progress_path)
    done = _load_progress(progress_path, chunk_size)
    todo = [c for c in _chunks(n, chunk_size) if c["chunk"] not in done]
    log.info(f"n={n} mode={mode}: {labeled_graph_count(n)} graphs, {len(done)} chunk(s) already done, {len(todo)} to go")

    batch = max(1, jobs)
    with tqdm(total=len(todo), desc=f"exhaust n={n}", unit="chunk", disable=True if quiet else None) as bar:
        for at in range(0, len(todo), batch):
            group = todo[at:at + batch]
            results = Parallel(n_jobs=jobs)(
                delayed(_diff_chunk)(n, mode, c["chunk"], c["start"], c["stop"], chunk_size, audit) for c in group
            )
            with open(progress_path, "a", encoding="utf-8", newline="\n") as f:
                for rec in results:
                    f.write(json.dumps(rec, sort_keys=True) + "\n")
                    done[rec["chunk"]] = rec
                    if rec["mismatch_indices"]:
                        log.warning(f"[MISMATCH] n={n} indices {rec['mismatch_indices'][:10]}")
            bar.update(len(group))

    records = [done[k] for k in sorted(done)]
    mismatch_indices = [i for r in records for i in r["mismatch_indices"]]
    fixtures = _persist_fixtures(out_dir, n, mode, mismatch_indices)
    summary = summarize(n, mode, records, fixtures)
    write_json(summary_path, summary)

    log.info(
        f"[OK] n={n} mode={mode}: {summary['graphs']} graphs, {summary[AGREE]} agree, "
        f"{summary[MISMATCH]} mismatch, {summary['cap_hits']} cap hit(s), "
        f"{summary['partial_bound_violations']} graph(s) with pruned |I_m| > |F| "
        f"({summary['entry_bound_violations']} counting on entry) :: {summary_path}"
    )
    return EXIT_MISMATCH if summary[MISMATCH] else EXIT_OK
