import csv
import json
import os
from dataclasses import replace

import pytest

from engine.cycsub import STRICT, cycsub
from engine.triples import classify_triples
from graphs.core import CandidateFamily, Graph, complete_graph, cycle_graph, induced_summary, petersen_graph
from graphs.generate import gen_gnp
from jobs.bench_gnp import bench_one, counters_digest, summarize
from jobs.cli import main
from jobs.reports import AGREE, BenchRecord, BenchTable, build_diff_report, fit_loglog
from jobs.shrink_fixture import shrink_graph
from oracle.brute import oracle_cyclic_subsets
from parser.edge_list import load_graph, write_graph


def run(*argv):
    return main([*argv, "--quiet"])


def read_json(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def read_bytes(path):
    with open(path, "rb") as f:
        return f.read()


def has_triangle(g):
    return bool(classify_triples(g).cliques)


# -------------------- enumerate --------------------

@pytest.mark.parametrize(
    "name, expected",
    [("c5.txt", "0 1 2 3 4\n"), ("k3.txt", "0 1 2\n"), ("edgeless6.txt", ""), ("k4.dimacs", "0 1 2\n0 1 3\n0 2 3\n1 2 3\n")],
)
def test_enumerate_writes_one_subset_per_line(tmp_path, fixture_path, name, expected):
    assert run("enumerate", "--input", fixture_path(name), "--out", str(tmp_path)) == 0
    stem = os.path.splitext(name)[0]
    assert (tmp_path / f"{stem}.cycsub.txt").read_text(encoding="utf-8") == expected
    trace = read_json(tmp_path / f"{stem}.trace.json")
    assert trace["schema"] == "cycsub.trace/1"
    assert trace["mode"] == STRICT


def test_enumerate_is_byte_identical_across_runs(tmp_path, fixture_path):
    first, second = tmp_path / "a", tmp_path / "b"
    assert run("enumerate", "--input", fixture_path("petersen.txt"), "--out", str(first)) == 0
    assert run("enumerate", "--input", fixture_path("petersen.txt"), "--out", str(second)) == 0
    assert read_bytes(first / "petersen.cycsub.txt") == read_bytes(second / "petersen.cycsub.txt")
    assert read_json(first / "petersen.trace.json")["result_size"] == 22


def test_bad_input_exits_with_error(tmp_path):
    bad = tmp_path / "loop.txt"
    bad.write_text("n 3\n0 1\n2 2\n", encoding="utf-8")
    assert run("enumerate", "--input", str(bad), "--out", str(tmp_path)) == 1
    assert run("enumerate", "--input", str(tmp_path / "missing.txt"), "--out", str(tmp_path)) == 1


def test_usage_error_is_not_a_mismatch():
    assert main(["bogus"]) == 1
    assert main(["diff"]) == 1


# -------------------- diff --------------------

@pytest.mark.parametrize(
    "name, count, compliant", [("petersen.txt", 22, False), ("c6.txt", 1, True), ("k3.txt", 1, True)]
)
def test_diff_agrees_on_fixtures(tmp_path, fixture_path, name, count, compliant):
    assert run("diff", "--input", fixture_path(name), "--out", str(tmp_path)) == 0
    report = read_json(tmp_path / f"{os.path.splitext(name)[0]}.diff.json")
    assert report["schema"] == "cycsub.diff/1"
    assert report["verdict"] == AGREE
    assert report["engine_count"] == report["oracle_count"] == count
    assert report["engine_missing"] == [] and report["engine_extra"] == []
    assert report["partial_bound"]["compliant"] is compliant
    assert report["partial_bound"]["max_surviving"] <= report["partial_bound"]["max_partials"]


def test_diff_literal_mode_reports_cap(tmp_path, fixture_path):
    assert run("diff", "--input", fixture_path("c5.txt"), "--mode", "literal", "--out", str(tmp_path)) == 1
    report = read_json(tmp_path / "c5.diff.json")
    assert report["verdict"] == "cap_exceeded"
    assert report["oracle_count"] == 1
    assert "iterations" in report["error"]


def test_diff_refuses_above_oracle_cap(tmp_path, fixture_path):
    assert run("diff", "--input", fixture_path("petersen.txt"), "--cap", "5", "--out", str(tmp_path)) == 1
    assert not (tmp_path / "petersen.diff.json").exists()


def test_run_order_does_not_change_the_report():
    g = petersen_graph()
    engine_first = build_diff_report(g, "petersen", STRICT).to_dict(include_timings=False)
    oracle_first = build_diff_report(g, "petersen", STRICT, engine_first=False).to_dict(include_timings=False)
    assert engine_first == oracle_first
    assert "timings" not in engine_first


def test_candidate_audit_finds_only_hamiltonian_candidates():
    report = build_diff_report(petersen_graph(), "petersen", STRICT, audit=True)
    assert report.audit["checked"] > 0
    assert report.audit["non_hamiltonian"] == 0


# -------------------- exhaust --------------------

def test_exhaust_small_n(tmp_path):
    assert run("exhaust", "--n", "3", "--out", str(tmp_path)) == 0
    summary = read_json(tmp_path / "exhaust_n3_strict.summary.json")
    assert summary["schema"] == "cycsub.exhaust/1"
    assert summary["graphs"] == summary["agree"] == summary["expected_graphs"] == 8
    assert summary["mismatch"] == 0
    assert summary["fixtures"] == []


def test_exhaust_rerun_and_resume_are_byte_identical(tmp_path):
    out = str(tmp_path)
    summary = tmp_path / "exhaust_n4_strict.summary.json"
    progress = tmp_path / "exhaust_n4_strict.progress.jsonl"

    assert run("exhaust", "--n", "4", "--chunk-size", "10", "--out", out) == 0
    fresh = read_bytes(summary)
    assert read_json(summary)["graphs"] == 64
    assert read_json(summary)["iteration_bound_violations"] == 0
    assert len(progress.read_text(encoding="utf-8").splitlines()) == 7

    assert run("exhaust", "--n", "4", "--chunk-size", "10", "--out", out) == 0
    assert read_bytes(summary) == fresh

    # keep three finished chunks, as if the sweep had been interrupted
    lines = progress.read_text(encoding="utf-8").splitlines()[:3]
    progress.write_text("\n".join(lines) + "\n", encoding="utf-8")
    assert run("exhaust", "--n", "4", "--chunk-size", "10", "--resume", "--out", out) == 0
    assert read_bytes(summary) == fresh


def test_exhaust_literal_mode_counts_cap_hits(tmp_path):
    assert run("exhaust", "--n", "4", "--mode", "literal", "--out", str(tmp_path)) == 0
    summary = read_json(tmp_path / "exhaust_n4_literal.summary.json")
    assert summary["mismatch"] == 0
    assert summary["cap_hits"] > 0
    assert summary["agree"] + summary["cap_hits"] == 64


def test_exhaust_refuses_above_labeled_cap(tmp_path):
    assert run("exhaust", "--n", "7", "--out", str(tmp_path)) == 1


@pytest.mark.slow
def test_exhaust_five_vertices(tmp_path):
    assert run("exhaust", "--n", "5", "--out", str(tmp_path), "--audit-candidates") == 0
    summary = read_json(tmp_path / "exhaust_n5_strict.summary.json")
    assert summary["graphs"] == summary["agree"] == 1024
    assert summary["non_hamiltonian_candidates"] == 0


@pytest.mark.slow
def test_exhaust_six_vertices(tmp_path):
    assert run("exhaust", "--n", "6", "--out", str(tmp_path)) == 0
    summary = read_json(tmp_path / "exhaust_n6_strict.summary.json")
    assert summary["graphs"] == summary["agree"] == summary["expected_graphs"] == 32768
    assert summary["mismatch"] == 0
    assert summary["cap_hits"] == 0
    assert summary["iteration_bound_violations"] == 0
    assert summary["entry_bound_violations"] == 19092
    assert summary["partial_bound_violations"] == 180
    assert len(summary["partial_bound_indices"]) == 50


# -------------------- shrink --------------------

def test_shrink_graph_is_locally_minimal():
    small = shrink_graph(complete_graph(5), has_triangle)
    assert small == complete_graph(3)


def test_shrink_refuses_agreeing_input(tmp_path, fixture_path):
    assert run("shrink", "--input", fixture_path("c5.txt"), "--out", str(tmp_path)) == 1


def test_shrink_writes_minimized_fixture(tmp_path, monkeypatch):
    monkeypatch.setattr("jobs.shrink_fixture.is_mismatch", lambda g, mode, cap=None: has_triangle(g))
    src = write_graph(str(tmp_path / "k5.txt"), complete_graph(5))
    assert run("shrink", "--input", src, "--out", str(tmp_path / "out")) == 2
    assert load_graph(str(tmp_path / "out" / "k5.min.txt")) == complete_graph(3)
    assert read_json(tmp_path / "out" / "k5.min.diff.json")["n"] == 3


# -------------------- bench --------------------

def test_bench_writes_table_and_summary(tmp_path):
    args = ("bench", "--n", "6", "8", "10", "--p", "0.3", "--seeds", "0,1")
    assert run(*args, "--out", str(tmp_path)) == 0
    with open(tmp_path / "bench_p0.3_strict.csv", newline="", encoding="utf-8") as f:
        rows = list(csv.DictReader(f))
    assert len(rows) == 6
    assert list(rows[0]) == BenchRecord.columns()
    for row in rows:
        assert int(row["foundations"]) <= int(row["triples"])
    summary = read_json(tmp_path / "bench_p0.3_strict.summary.json")
    assert summary["schema"] == "cycsub.bench/1"
    assert summary["records"] == 6
    assert summary["max_foundation_ratio"] <= 1.0
    assert summary["fit_join_checks"]["points"] > 0

    assert run(*args, "--out", str(tmp_path / "again")) == 0
    again = read_json(tmp_path / "again" / "bench_p0.3_strict.summary.json")
    assert again["counters_digest"] == summary["counters_digest"]


def test_bench_record_counters_skip_timings():
    record = bench_one(8, 0.4, 3, STRICT)
    assert not record.cap_hit
    assert "total_s" not in record.counters()
    assert counters_digest([record]) == counters_digest([bench_one(8, 0.4, 3, STRICT)])


def triangle_pair_graph():
    return Graph.from_edges(6, [(0, 3), (0, 4), (0, 5), (1, 2), (1, 5), (2, 3), (2, 4), (3, 4)])


@pytest.fixture
def sampler_with_a_blowup(monkeypatch):
    # n=6 gives a graph whose second iteration holds 13 partial cycles; other sizes give C_n
    def sample(n, p, seed):
        return triangle_pair_graph() if n == 6 else cycle_graph(n)

    monkeypatch.setattr("jobs.bench_gnp.gen_gnp", sample)


def test_bench_one_over_budget_keeps_counters(sampler_with_a_blowup):
    record = bench_one(6, 0.3, 0, STRICT, max_partials=10)
    assert record.budget_hit and not record.cap_hit
    assert not record.complete
    assert record.foundations == 8
    assert record.loop_iterations == 1
    assert record.max_partials == 8
    assert record.result_size == 0

    done = bench_one(6, 0.3, 0, STRICT, max_partials=13)
    assert done.complete
    assert done.loop_iterations == 3
    assert done.max_surviving == 9
    assert not done.partial_bound_ok and not done.entry_bound_ok


def test_bench_writes_budget_rows_and_leaves_them_out_of_the_fit(tmp_path, sampler_with_a_blowup):
    args = ("bench", "--n", "6", "7", "8", "9", "--p", "0.3", "--seeds", "0", "--jobs", "1")
    assert run(*args, "--max-partials", "10", "--time-limit", "0", "--out", str(tmp_path)) == 0
    with open(tmp_path / "bench_p0.3_strict.csv", newline="", encoding="utf-8") as f:
        rows = list(csv.DictReader(f))
    assert [row["n"] for row in rows] == ["6", "7", "8", "9"]
    assert [row["budget_hit"] for row in rows] == ["True", "False", "False", "False"]
    assert rows[0]["loop_iterations"] == "1"
    summary = read_json(tmp_path / "bench_p0.3_strict.summary.json")
    assert summary["records"] == 4
    assert summary["budget_hits"] == 1
    assert summary["fit_join_checks"]["points"] == 3


def test_bench_budget_comes_from_settings(tmp_path, monkeypatch, sampler_with_a_blowup):
    monkeypatch.setenv("CYCSUB_BENCH_MAX_PARTIALS", "10")
    args = ("bench", "--n", "6", "--p", "0.3", "--seeds", "0", "--jobs", "1", "--time-limit", "0")
    assert run(*args, "--out", str(tmp_path / "configured")) == 0
    assert read_json(tmp_path / "configured" / "bench_p0.3_strict.summary.json")["budget_hits"] == 1
    # an explicit 0 disables the budget
    assert run(*args, "--max-partials", "0", "--out", str(tmp_path / "unbounded")) == 0
    assert read_json(tmp_path / "unbounded" / "bench_p0.3_strict.summary.json")["budget_hits"] == 0


def test_summarize_fits_complete_runs_only():
    base = bench_one(8, 0.4, 3, STRICT)
    records = [replace(base, n=n, join_checks=n ** 2, total_s=n / 100) for n in (6, 8, 10)]
    records.append(replace(base, n=12, join_checks=10 ** 9, total_s=300.0, budget_hit=True))
    summary = summarize(records, 0.4, STRICT)
    assert summary["records"] == 4
    assert summary["budget_hits"] == 1
    assert summary["fit_join_checks"]["points"] == 3
    assert summary["fit_join_checks"]["slope"] == pytest.approx(2.0)


def test_bench_table_flushes_each_row(tmp_path):
    path = tmp_path / "table.csv"
    record = bench_one(8, 0.4, 3, STRICT)
    with BenchTable(str(path)) as table:
        assert path.read_text(encoding="utf-8").splitlines() == [",".join(BenchRecord.columns())]
        table.add(record)
        table.add(record)
        assert len(path.read_text(encoding="utf-8").splitlines()) == 3


def test_fit_loglog_recovers_a_power_law():
    xs = [10, 20, 40, 80]
    fit = fit_loglog(xs, [x ** 3 for x in xs])
    assert fit["slope"] == pytest.approx(3.0)
    assert fit["r2"] == pytest.approx(1.0)
    assert fit_loglog([10, 10], [1, 2]) is None


# -------------------- random sample --------------------

@pytest.mark.slow
def test_random_graphs_agree_with_the_oracle():
    for seed in range(500):
        g = gen_gnp(12, (0.1, 0.3, 0.5)[seed % 3], seed)
        result, trace = cycsub(g)
        assert result == oracle_cyclic_subsets(g), seed
        assert len(trace.iterations) <= 9
        for s in result:
            shape = induced_summary(g, s)
            assert shape["size"] >= 3 and shape["edges"] == shape["size"], (seed, s)
            assert shape["connected"] == 1, (seed, s)
            assert shape["min_degree"] == shape["max_degree"] == 2, (seed, s)


def test_cycle_fixture_matches_named_family(fixture_path):
    assert load_graph(fixture_path("c6.txt")) == cycle_graph(6)


# -------------------- forced mismatch --------------------

@pytest.fixture
def engine_drops_large_cycles(monkeypatch):
    import jobs.reports

    real = jobs.reports.cycsub

    def lossy(g, mode, keep_candidates=False):
        result, trace = real(g, mode, keep_candidates=keep_candidates)
        return CandidateFamily(s for s in result if len(s) == 3), trace

    monkeypatch.setattr(jobs.reports, "cycsub", lossy)


def test_diff_reports_the_symmetric_difference(tmp_path, fixture_path, engine_drops_large_cycles):
    assert run("diff", "--input", fixture_path("c5.txt"), "--out", str(tmp_path)) == 2
    report = read_json(tmp_path / "c5.diff.json")
    assert report["verdict"] == "mismatch"
    assert report["engine_missing"] == ["0 1 2 3 4"]
    assert report["engine_extra"] == []


def test_exhaust_persists_fixtures_that_reproduce(tmp_path, monkeypatch, engine_drops_large_cycles):
    monkeypatch.setenv("CYCSUB_MAX_LISTED", "1")
    out = tmp_path / "sweep"
    assert run("exhaust", "--n", "4", "--out", str(out)) == 2
    summary = read_json(out / "exhaust_n4_strict.summary.json")
    assert summary["mismatch"] > 0
    assert summary["graphs"] == 64
    assert len(summary["fixtures"]) == summary["mismatch"]
    assert len(summary["mismatch_indices"]) == 1
    for rel in summary["fixtures"]:
        path = out / rel
        g = load_graph(str(path))
        assert g.n == 4
        assert build_diff_report(g, str(path), STRICT).verdict == "mismatch"
        assert run("diff", "--input", str(path), "--out", str(tmp_path / "rediff")) == 2
