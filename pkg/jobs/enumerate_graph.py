# jobs/enumerate_graph.py
# Run the engine on one graph file; write the cyclic subsets (one per line) and the JSON trace.

import logging
import os

from engine.cycsub import cycsub
from jobs.reports import harness_version, write_json, write_text
from parser.diffing import format_family
from parser.edge_list import load_graph

log = logging.getLogger("enumerate")


def output_stem(input_path: str) -> str:
    base = os.path.basename(input_path)
    return os.path.splitext(base)[0] or base


def run_enumerate(input_path: str, mode: str, out_dir: str) -> int:
    g = load_graph(input_path)
    result, trace = cycsub(g, mode)

    stem = output_stem(input_path)
    result_path = write_text(os.path.join(out_dir, f"{stem}.cycsub.txt"), format_family(result))
    doc = {"source": input_path, "version": harness_version(), **trace.to_dict()}
    trace_path = write_json(os.path.join(out_dir, f"{stem}.trace.json"), doc)

    log.info(f"[OK] {input_path}: n={g.n} m={g.m} mode={mode} -> {len(result)} cyclic subset(s) :: {result_path}, {trace_path}")
    return 0
