# oracle/brute.py
# Ground truth straight from the definition: a subset is cyclic iff the subgraph it induces is a cycle.
# Walks every subset of size >= 3 (by size, then lexicographic) and checks it with induced_is_cycle.
# Shares nothing with engine/ on purpose.

import logging
from itertools import combinations
from typing import Dict, List, Optional

from graphs.core import CandidateFamily, CapExceededError, Graph, VertexSet, induced_is_cycle
from rules.settings import load_settings

logger = logging.getLogger(__name__)


def check_oracle_cap(g: Graph, cap: Optional[int] = None) -> None:
    cap = load_settings().oracle_cap if cap is None else cap
    if g.n > cap:
        raise CapExceededError(
            f"refusing brute-force enumeration on n={g.n} vertices (2^{g.n} subsets); "
            f"cap is {cap} (CYCSUB_ORACLE_CAP / --cap)"
        )


def _two_core(g: Graph) -> List[int]:
    """Vertices of the 2-core. Anything outside it has induced degree < 2 in every subset."""
    alive = (1 << g.n) - 1
    changed = True
    while changed:
        changed = False
        for v in range(g.n):
            if alive >> v & 1 and (g.adjacency[v] & alive).bit_count() < 2:
                alive &= ~(1 << v)
                changed = True
    return [v for v in range(g.n) if alive >> v & 1]


def oracle_cyclic_subsets(g: Graph, cap: Optional[int] = None) -> CandidateFamily:
    check_oracle_cap(g, cap)
    pool = _two_core(g)
    found = CandidateFamily()
    for k in range(3, len(pool) + 1):
        for combo in combinations(pool, k):
            s = VertexSet.of(combo)
            if induced_is_cycle(g, s):
                found.add(s)
    logger.debug(f"oracle: n={g.n} m={g.m} core={len(pool)} -> {len(found)} cyclic subsets")
    return found


def oracle_count_by_size(g: Graph, cap: Optional[int] = None) -> Dict[int, int]:
    return oracle_cyclic_subsets(g, cap).size_histogram()
