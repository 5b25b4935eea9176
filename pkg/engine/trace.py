# engine/trace.py
# Counters recorded by the cycsub loop, plus the |I_m| <= |F| audit over them.

from dataclasses import asdict, dataclass, field
from math import comb
from typing import Any, Dict, List, Optional

from graphs.core import CandidateFamily

TRACE_SCHEMA = "cycsub.trace/1"


@dataclass
class IterationRecord:
    m: int
    partials: int            # |I_m| entering the iteration, deduplicated on (vertices, open_pair)
    pruned: int              # removed by the clique filter
    closing_checks: int      # (partial, foundation) pairs sharing the tracked non-edge
    extension_checks: int    # (partial, extension) pairs sharing the tracked non-edge
    z_added: int
    min_size: int
    max_size: int
    seconds: float

    @property
    def surviving(self) -> int:
        """Partials left after the clique filter; the ones the joins actually use."""
        return self.partials - self.pruned


@dataclass
class EngineTrace:
    mode: str
    n: int
    m_edges: int
    foundations: int = 0
    extensions: int = 0
    cliques: int = 0
    iterations: List[IterationRecord] = field(default_factory=list)
    z_size: int = 0
    result_size: int = 0
    phase_seconds: Dict[str, float] = field(default_factory=dict)
    candidates: Optional[CandidateFamily] = field(default=None, repr=False)

    @property
    def triples(self) -> int:
        return comb(self.n, 3)

    @property
    def z_bound(self) -> int:
        # worst case for |Z| in the complexity argument: (n - 3) iterations of C(n, 3) closings, plus Q(G)
        return max(self.n - 3, 0) * self.triples + self.cliques

    @property
    def max_partials(self) -> int:
        return max((r.partials for r in self.iterations), default=0)

    @property
    def max_surviving(self) -> int:
        return max((r.surviving for r in self.iterations), default=0)

    @property
    def join_checks(self) -> int:
        return sum(r.closing_checks + r.extension_checks for r in self.iterations)

    @property
    def total_seconds(self) -> float:
        return sum(self.phase_seconds.values())

    def counters(self) -> Dict[str, Any]:
        """Everything except wall-clock timings; identical across reruns on the same input."""
        return {
            "mode": self.mode,
            "n": self.n,
            "m": self.m_edges,
            "triples": self.triples,
            "foundations": self.foundations,
            "extensions": self.extensions,
            "cliques": self.cliques,
            "loop_iterations": len(self.iterations),
            "max_partials": self.max_partials,
            "max_surviving": self.max_surviving,
            "join_checks": self.join_checks,
            "z_size": self.z_size,
            "z_bound": self.z_bound,
            "z_within_bound": self.z_size <= self.z_bound,
            "result_size": self.result_size,
            "iterations": [
                {**{k: v for k, v in asdict(r).items() if k != "seconds"}, "surviving": r.surviving}
                for r in self.iterations
            ],
        }

    def to_dict(self) -> Dict[str, Any]:
        doc = {"schema": TRACE_SCHEMA, **self.counters()}
        doc["iterations"] = [{**asdict(r), "surviving": r.surviving} for r in self.iterations]
        doc["phase_seconds"] = dict(self.phase_seconds)
        doc["total_seconds"] = self.total_seconds
        return doc


@dataclass(frozen=True)
class PartialBoundReport:
    foundations: int
    max_partials: int        # max |I_m| on entry
    max_surviving: int       # max |I_m| after the clique filter
    compliant: bool          # surviving count <= |F| at every m
    violations: List[int]    # iteration indices m with surviving count > |F|
    entry_violations: List[int]  # iteration indices m with entry count > |F|

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def engine_stats(trace: EngineTrace, foundations_count: Optional[int] = None) -> PartialBoundReport:
    """
    Compare |I_m| with |F(G)| at every iteration. The bound is checked on the partials that
    survive the clique filter; the entry count is reported next to it. Violations are
    recorded, never raised.
    """
    bound = trace.foundations if foundations_count is None else foundations_count
    violations = [r.m for r in trace.iterations if r.surviving > bound]
    return PartialBoundReport(
        foundations=bound,
        max_partials=trace.max_partials,
        max_surviving=trace.max_surviving,
        compliant=not violations,
        violations=violations,
        entry_violations=[r.m for r in trace.iterations if r.partials > bound],
    )
