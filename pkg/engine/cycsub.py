# engine/cycsub.py
# Cyclic-subset search by joining 3-vertex building blocks:
#   classify triples -> I_0 = foundations
#   loop: drop partials holding a 3-clique, close partials with foundations into Z,
#         extend partials with extensions into the next I
#   add 3-cliques to Z -> keep only the inclusion-minimal members of Z.
#
# Join guard ("j is new relative to i"):
#   strict  : j.vertices not a subset of i.vertices (every join adds a vertex)
#   literal : j.vertices != i.vertices (a join may add nothing; bounded by the iteration cap)

import logging
from collections import defaultdict
from dataclasses import dataclass
from time import perf_counter
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Tuple

from engine.trace import EngineTrace, IterationRecord
from engine.triples import Clique3, Extension, Foundation, classify_triples
from graphs.core import CandidateFamily, Graph, Pair, VertexSet
from rules.settings import LITERAL, MODES, STRICT  # noqa: F401

logger = logging.getLogger(__name__)


class IterationCapExceeded(RuntimeError):
    def __init__(self, mode: str, cap: int, partials: int):
        super().__init__(
            f"join loop still had {partials} partial cycle(s) after {cap} iterations (mode={mode})"
        )
        self.mode = mode
        self.cap = cap
        self.partials = partials


class BudgetExceeded(RuntimeError):
    """Work budget ran out; `trace` holds the counters reached so far."""

    def __init__(self, reason: str, trace: EngineTrace):
        super().__init__(f"work budget exceeded: {reason}")
        self.reason = reason
        self.trace = trace


class EngineInvariantError(AssertionError):
    pass


def check_mode(mode: str) -> str:
    mode = (mode or "").strip().lower()
    if mode not in MODES:
        raise ValueError(f"unknown join mode {mode!r}; expected one of {MODES}")
    return mode


@dataclass(frozen=True)
class PartialCycle:
    vertices: VertexSet
    open_pair: Pair

    @property
    def non_edges(self) -> FrozenSet[Pair]:
        return frozenset((self.open_pair,))

    def sort_key(self) -> Tuple[Tuple[int, ...], Pair]:
        return self.vertices.members, self.open_pair


class JoinIndex:
    """Foundations and extensions bucketed by the non-edge(s) they carry."""

    def __init__(self, foundations: Iterable[Foundation], extensions: Iterable[Extension]):
        self.foundations_by_pair: Dict[Pair, List[Foundation]] = defaultdict(list)
        self.extensions_by_pair: Dict[Pair, List[Extension]] = defaultdict(list)
        for f in foundations:
            self.foundations_by_pair[f.open_pair].append(f)
        for t in extensions:
            for pair in sorted(t.non_edges):
                self.extensions_by_pair[pair].append(t)

    def closing_checks(self, partials: Iterable["PartialCycle"]) -> int:
        return sum(len(self.foundations_by_pair.get(p.open_pair, ())) for p in partials)

    def extension_checks(self, partials: Iterable["PartialCycle"]) -> int:
        return sum(len(self.extensions_by_pair.get(p.open_pair, ())) for p in partials)


def _is_new(j: VertexSet, i: VertexSet, mode: str) -> bool:
    if mode == STRICT:
        return not j.issubset(i)
    return j != i


def _closing_pairs(partials: Iterable[PartialCycle], index: JoinIndex) -> Iterator[Tuple[PartialCycle, Foundation]]:
    # i[1] = j[1]: both sides carry exactly one pair
    for i in partials:
        for j in index.foundations_by_pair.get(i.open_pair, ()):
            yield i, j


def _extension_pairs(partials: Iterable[PartialCycle], index: JoinIndex) -> Iterator[Tuple[PartialCycle, Extension]]:
    # |i[1] ∩ j[1]| = 1 reduces to membership since i[1] is a singleton
    for i in partials:
        for j in index.extensions_by_pair.get(i.open_pair, ()):
            yield i, j


# -------------------- loop body steps --------------------

def prune_with_cliques(partials: List[PartialCycle], cliques: List[Clique3]) -> List[PartialCycle]:
    if not cliques:
        return list(partials)
    masks = [q.vertices.mask for q in cliques]
    return [p for p in partials if not any(q & ~p.vertices.mask == 0 for q in masks)]


def close_with_foundations(
    partials: List[PartialCycle],
    foundations: List[Foundation],
    z: CandidateFamily,
    mode: str = STRICT,
    index: Optional[JoinIndex] = None,
) -> CandidateFamily:
    """Add i ∪ j to z for every partial i and foundation j with the same open pair. Mutates and returns z."""
    mode = check_mode(mode)
    index = index or JoinIndex(foundations, ())
    for i, j in _closing_pairs(partials, index):
        if _is_new(j.vertices, i.vertices, mode):
            z.add(i.vertices | j.vertices)
    return z


def extend_with_extensions(
    partials: List[PartialCycle],
    extensions: List[Extension],
    mode: str = STRICT,
    index: Optional[JoinIndex] = None,
) -> List[PartialCycle]:
    mode = check_mode(mode)
    index = index or JoinIndex((), extensions)
    out: Dict[PartialCycle, None] = {}
    for i, j in _extension_pairs(partials, index):
        if _is_new(j.vertices, i.vertices, mode):
            out[PartialCycle(i.vertices | j.vertices, j.other_non_edge(i.open_pair))] = None
    return sorted(out, key=PartialCycle.sort_key)


def include_cliques(cliques: List[Clique3], z: CandidateFamily) -> CandidateFamily:
    z.update(q.vertices for q in cliques)
    return z


def minimal_filter(z: CandidateFamily) -> CandidateFamily:
    """Members of z with no proper subset in z."""
    kept: List[VertexSet] = []
    # a proper subset is strictly smaller, so comparing against survivors of smaller size is enough
    for s in sorted(z.as_frozenset(), key=lambda s: (len(s), s.members)):
        if not any(k.mask & ~s.mask == 0 for k in kept):
            kept.append(s)
    return CandidateFamily(kept)


# -------------------- full run --------------------

def _check_open_pairs(g: Graph, partials: List[PartialCycle], mode: str) -> None:
    for p in partials:
        if g.adjacent(*p.open_pair):
            raise EngineInvariantError(f"tracked pair {p.open_pair} of {p.vertices!r} is an edge (mode={mode})")


def _drop_saturated(partials: List[PartialCycle], n: int) -> List[PartialCycle]:
    # a strict join always brings in a vertex outside i, so spanning partials are dead ends
    return [p for p in partials if len(p.vertices) < n]


def cycsub(
    g: Graph,
    mode: str = STRICT,
    *,
    cap: Optional[int] = None,
    keep_candidates: bool = False,
    max_partials: Optional[int] = None,
    time_limit: Optional[float] = None,
) -> Tuple[CandidateFamily, EngineTrace]:
    """
    All cyclic subsets of g, in canonical order, plus the trace of the run.
    Raises IterationCapExceeded when partial cycles remain after `cap` (default n) iterations.
    Raises BudgetExceeded when an iteration produces more than `max_partials` partial cycles,
    or when an iteration would start after `time_limit` seconds; no budget by default.
    """
    mode = check_mode(mode)
    cap = g.n if cap is None else cap
    trace = EngineTrace(mode=mode, n=g.n, m_edges=g.m)
    started = perf_counter()

    t0 = perf_counter()
    classes = classify_triples(g)
    trace.foundations = len(classes.foundations)
    trace.extensions = len(classes.extensions)
    trace.cliques = len(classes.cliques)
    index = JoinIndex(classes.foundations, classes.extensions)
    trace.phase_seconds["classify"] = perf_counter() - t0

    t0 = perf_counter()
    z = CandidateFamily()
    partials = [PartialCycle(f.vertices, f.open_pair) for f in classes.foundations]
    if mode == STRICT:
        partials = _drop_saturated(partials, g.n)

    def out_of_budget(reason: str) -> BudgetExceeded:
        trace.phase_seconds["loop"] = perf_counter() - t0
        trace.z_size = len(z)
        return BudgetExceeded(reason, trace)

    m = 0
    while partials:
        if m >= cap:
            raise IterationCapExceeded(mode, cap, len(partials))
        if time_limit is not None and perf_counter() - started > time_limit:
            raise out_of_budget(f"{time_limit:g}s elapsed before iteration {m}")
        t_iter = perf_counter()
        sizes = [len(p.vertices) for p in partials]
        entering = len(partials)

        partials = prune_with_cliques(partials, classes.cliques)

        z_before = len(z)
        closing = index.closing_checks(partials)
        close_with_foundations(partials, classes.foundations, z, mode, index)

        extending = index.extension_checks(partials)
        nxt = extend_with_extensions(partials, classes.extensions, mode, index)
        _check_open_pairs(g, nxt, mode)
        if mode == STRICT:
            nxt = _drop_saturated(nxt, g.n)

        trace.iterations.append(IterationRecord(
            m=m,
            partials=entering,
            pruned=entering - len(partials),
            closing_checks=closing,
            extension_checks=extending,
            z_added=len(z) - z_before,
            min_size=min(sizes),
            max_size=max(sizes),
            seconds=perf_counter() - t_iter,
        ))
        logger.debug(f"m={m} |I|={entering} pruned={entering - len(partials)} |Z|={len(z)} next={len(nxt)}")
        if max_partials is not None and len(nxt) > max_partials:
            raise out_of_budget(f"iteration {m} produced {len(nxt)} partial cycles (limit {max_partials})")
        partials = nxt
        m += 1
    trace.phase_seconds["loop"] = perf_counter() - t0

    t0 = perf_counter()
    include_cliques(classes.cliques, z)
    trace.z_size = len(z)
    if keep_candidates:
        trace.candidates = z.copy()
    trace.phase_seconds["cliques"] = perf_counter() - t0

    t0 = perf_counter()
    result = minimal_filter(z)
    trace.result_size = len(result)
    trace.phase_seconds["filter"] = perf_counter() - t0
    return result, trace
