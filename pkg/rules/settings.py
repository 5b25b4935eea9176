# rules/settings.py
# Loader for harness.yaml with env overrides, so jobs/ and the library share one view of the knobs.

import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Dict, Optional, Tuple

import yaml
from dotenv import load_dotenv

load_dotenv()

# Allow override via env; default to rules/harness.yaml next to this file
_YAML_PATH = os.getenv(
    "CYCSUB_SETTINGS_YAML",
    os.path.join(os.path.dirname(os.path.abspath(__file__)), "harness.yaml"),
)

STRICT = "strict"
LITERAL = "literal"
MODES = (STRICT, LITERAL)


@dataclass(frozen=True)
class Settings:
    mode: str
    oracle_cap: int
    labeled_cap: int
    chunk_size: int
    jobs: int
    max_listed: int
    audit_max_size: int
    bench_n_list: Tuple[int, ...]
    bench_p: float
    bench_seeds: Tuple[int, ...]
    bench_max_partials: Optional[int]
    bench_time_limit: Optional[float]
    out_dir: str


def _load_yaml(path: str) -> Dict[str, Any]:
    if not os.path.exists(path):
        return {}
    with open(path, "r", encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


def _env_int(name: str, fallback: int) -> int:
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


def _env_float(name: str, fallback: float) -> float:
    raw = (os.getenv(name) or "").strip()
    if not raw:
        return fallback
    try:
        return float(raw)
    except ValueError:
        raise ValueError(f"{name} must be a number, got {raw!r}")


def _positive_or_none(value: Optional[float]) -> Optional[float]:
    # 0 or a negative value switches the budget off
    return value if value is not None and value > 0 else None


@lru_cache(maxsize=1)
def load_settings() -> Settings:
    data = _load_yaml(_YAML_PATH)
    engine = data.get("engine") or {}
    oracle = data.get("oracle") or {}
    labeled = data.get("labeled") or {}
    exhaust = data.get("exhaust") or {}
    audit = data.get("audit") or {}
    bench = data.get("bench") or {}
    output = data.get("output") or {}

    mode = (os.getenv("CYCSUB_MODE") or engine.get("mode") or STRICT).strip().lower()
    if mode not in MODES:
        raise ValueError(f"unknown engine mode {mode!r}; expected one of {MODES}")

    max_partials = _positive_or_none(_env_int("CYCSUB_BENCH_MAX_PARTIALS", int(bench.get("max_partials", 20000))))
    time_limit = _positive_or_none(_env_float("CYCSUB_BENCH_TIME_LIMIT", float(bench.get("time_limit", 10.0))))

    return Settings(
        mode=mode,
        oracle_cap=_env_int("CYCSUB_ORACLE_CAP", int(oracle.get("cap", 20))),
        labeled_cap=_env_int("CYCSUB_LABELED_CAP", int(labeled.get("cap", 6))),
        chunk_size=max(1, _env_int("CYCSUB_CHUNK_SIZE", int(exhaust.get("chunk_size", 1024)))),
        jobs=max(1, _env_int("CYCSUB_JOBS", int(exhaust.get("jobs", 1)))),
        max_listed=max(0, _env_int("CYCSUB_MAX_LISTED", int(exhaust.get("max_listed", 50)))),
        audit_max_size=_env_int("CYCSUB_AUDIT_MAX_SIZE", int(audit.get("max_size", 16))),
        bench_n_list=tuple(int(x) for x in bench.get("n_list", [10, 15, 20, 25, 30, 35, 40])),
        bench_p=float(bench.get("p", 0.2)),
        bench_seeds=tuple(int(x) for x in bench.get("seeds", [0, 1, 2])),
        bench_max_partials=int(max_partials) if max_partials is not None else None,
        bench_time_limit=time_limit,
        out_dir=os.getenv("CYCSUB_OUT_DIR") or str(output.get("dir", "out")),
    )
