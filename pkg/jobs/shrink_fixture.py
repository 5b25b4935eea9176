# jobs/shrink_fixture.py
# Greedy one-at-a-time reduction of a mismatching graph: delete a vertex (else an edge) whenever the
# smaller graph still mismatches, until no single deletion keeps the mismatch.

import logging
import os
from typing import Callable, Optional

from graphs.core import Graph
from jobs.diff_graph import EXIT_MISMATCH
from jobs.enumerate_graph import output_stem
from jobs.reports import MISMATCH, build_diff_report, write_json, write_text
from parser.edge_list import load_graph, serialize_edge_list

log = logging.getLogger("shrink")


class NotACounterexample(ValueError):
    pass


def is_mismatch(g: Graph, mode: str, cap: Optional[int] = None) -> bool:
    return build_diff_report(g, "shrink", mode, oracle_cap=cap).verdict == MISMATCH


def shrink_graph(g: Graph, still_failing: Callable[[Graph], bool]) -> Graph:
    current = g
    while True:
        for v in range(current.n):
            candidate = current.without_vertex(v)
            if still_failing(candidate):
                log.info(f"[SHRINK] drop vertex {v}: n={candidate.n} m={candidate.m}")
                current = candidate
                break
        else:
            for u, v in current.edge_list():
                candidate = current.without_edge(u, v)
                if still_failing(candidate):
                    log.info(f"[SHRINK] drop edge {u}-{v}: n={candidate.n} m={candidate.m}")
                    current = candidate
                    break
            else:
                return current


def run_shrink(input_path: str, mode: str, out_dir: str, cap: Optional[int] = None) -> int:
    g = load_graph(input_path)
    if not is_mismatch(g, mode, cap):
        raise NotACounterexample(f"{input_path} is not a counterexample in mode={mode} (engine and oracle agree)")

    small = shrink_graph(g, lambda h: is_mismatch(h, mode, cap))
    stem = output_stem(input_path)
    header = f"# shrunk from {os.path.basename(input_path)} (n={g.n} m={g.m}), mode={mode}\n"
    graph_path = write_text(os.path.join(out_dir, f"{stem}.min.txt"), header + serialize_edge_list(small))
    report = build_diff_report(small, graph_path, mode, oracle_cap=cap)
    write_json(os.path.join(out_dir, f"{stem}.min.diff.json"), report.to_dict())

    log.info(f"[OK] {input_path}: n={g.n} m={g.m} -> n={small.n} m={small.m} :: {graph_path}")
    return EXIT_MISMATCH
