import pytest

from engine.cycsub import MODES as ENGINE_MODES
from engine.cycsub import STRICT
from graphs.core import petersen_graph
from jobs.reports import build_diff_report
from rules import settings
from rules.settings import LITERAL, MODES, load_settings


def test_defaults_come_from_harness_yaml():
    cfg = load_settings()
    assert cfg.mode == STRICT
    assert cfg.max_listed == 50
    assert cfg.audit_max_size == 16
    assert cfg.bench_max_partials == 20000
    assert cfg.bench_time_limit == 10.0


def test_engine_uses_the_same_modes():
    assert ENGINE_MODES is MODES
    assert MODES == (STRICT, LITERAL)


def test_env_overrides(monkeypatch):
    monkeypatch.setenv("CYCSUB_MODE", "Literal")
    monkeypatch.setenv("CYCSUB_MAX_LISTED", "3")
    monkeypatch.setenv("CYCSUB_AUDIT_MAX_SIZE", "5")
    monkeypatch.setenv("CYCSUB_BENCH_MAX_PARTIALS", "500")
    monkeypatch.setenv("CYCSUB_BENCH_TIME_LIMIT", "2.5")
    cfg = load_settings()
    assert cfg.mode == LITERAL
    assert cfg.max_listed == 3
    assert cfg.audit_max_size == 5
    assert cfg.bench_max_partials == 500
    assert cfg.bench_time_limit == 2.5


@pytest.mark.parametrize("value", ["0", "-1"])
def test_non_positive_budget_disables_it(monkeypatch, value):
    monkeypatch.setenv("CYCSUB_BENCH_MAX_PARTIALS", value)
    monkeypatch.setenv("CYCSUB_BENCH_TIME_LIMIT", value)
    cfg = load_settings()
    assert cfg.bench_max_partials is None
    assert cfg.bench_time_limit is None


@pytest.mark.parametrize("name, value", [("CYCSUB_MODE", "loose"), ("CYCSUB_MAX_LISTED", "many"), ("CYCSUB_BENCH_TIME_LIMIT", "soon")])
def test_bad_values_are_rejected(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ValueError):
        load_settings()


def test_missing_yaml_falls_back_to_defaults(monkeypatch, tmp_path):
    monkeypatch.setattr(settings, "_YAML_PATH", str(tmp_path / "absent.yaml"))
    cfg = load_settings()
    assert cfg.oracle_cap == 20
    assert cfg.bench_n_list == (10, 15, 20, 25, 30, 35, 40)
    assert cfg.bench_max_partials == 20000


def test_audit_skips_candidates_above_the_configured_size(monkeypatch):
    monkeypatch.setenv("CYCSUB_AUDIT_MAX_SIZE", "4")
    audit = build_diff_report(petersen_graph(), "petersen", STRICT, audit=True).audit
    assert audit["checked"] == 0
    assert audit["skipped"] > 0
