# jobs/diff_graph.py
# Engine vs brute-force oracle on one graph file; writes <stem>.diff.json.
# Exit codes: 0 agree, 2 mismatch, 1 engine hit its iteration cap.

import logging
import os
from typing import Optional

from jobs.enumerate_graph import output_stem
from jobs.reports import AGREE, CAP_EXCEEDED, build_diff_report, write_json
from parser.edge_list import load_graph

log = logging.getLogger("diff")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_MISMATCH = 2


def run_diff(
    input_path: str,
    mode: str,
    out_dir: str,
    cap: Optional[int] = None,
    audit: bool = False,
    engine_first: bool = True,
) -> int:
    g = load_graph(input_path)
    report = build_diff_report(g, input_path, mode, oracle_cap=cap, audit=audit, engine_first=engine_first)
    path = write_json(os.path.join(out_dir, f"{output_stem(input_path)}.diff.json"), report.to_dict())

    if report.verdict == AGREE:
        log.info(f"[AGREE] {input_path}: {report.engine_count} cyclic subset(s), mode={mode} :: {path}")
        return EXIT_OK
    if report.verdict == CAP_EXCEEDED:
        log.error(f"[CAP] {input_path}: {report.error} :: {path}")
        return EXIT_ERROR
    log.warning(
        f"[MISMATCH] {input_path}: engine missing {len(report.engine_missing)}, "
        f"extra {len(report.engine_extra)}, mode={mode} :: {path}"
    )
    return EXIT_MISMATCH
