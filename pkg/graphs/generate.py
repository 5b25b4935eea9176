# graphs/generate.py
# Input families for the harness: seeded G(n, p) samples and the exhaustive stream of labeled graphs.

import logging
import random
from itertools import combinations
from typing import Iterator, List, Optional

from graphs.core import CapExceededError, Graph, Pair
from rules.settings import load_settings

logger = logging.getLogger(__name__)


def gen_gnp(n: int, p: float, seed: int) -> Graph:
    """
    Erdős–Rényi G(n, p). Pairs (i, j), i < j, are visited in lexicographic order and each
    draws one rng.random() from a private random.Random(seed); the edge is kept when the
    draw is < p. Same seed, same graph (for a given CPython random implementation).
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must be in [0, 1], got {p}")
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    rng = random.Random(seed)
    edges = [pair for pair in combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def labeled_pairs(n: int) -> List[Pair]:
    """Bit b of a labeled-graph index selects the b-th pair of this list."""
    return list(combinations(range(n), 2))


def labeled_graph_count(n: int) -> int:
    return 1 << (n * (n - 1) // 2)


def labeled_graph(n: int, index: int, pairs: Optional[List[Pair]] = None) -> Graph:
    pairs = pairs if pairs is not None else labeled_pairs(n)
    if not 0 <= index < 1 << len(pairs):
        raise ValueError(f"labeled graph index {index} out of range for n={n}")
    return Graph.from_edges(n, (pair for b, pair in enumerate(pairs) if index >> b & 1))


def check_labeled_cap(n: int, cap: Optional[int] = None) -> None:
    cap = load_settings().labeled_cap if cap is None else cap
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n > cap:
        raise CapExceededError(
            f"refusing to enumerate labeled graphs on n={n} vertices "
            f"({labeled_graph_count(n)} graphs); cap is {cap} (CYCSUB_LABELED_CAP)"
        )


def enumerate_labeled_graphs(n: int, cap: Optional[int] = None) -> Iterator[Graph]:
    """
    Every labeled simple graph on n vertices, exactly once, ordered by index
    0 .. 2^(n(n-1)/2) - 1 (see labeled_pairs for the bit layout).
    """
    check_labeled_cap(n, cap)
    pairs = labeled_pairs(n)
    logger.debug(f"enumerating {labeled_graph_count(n)} labeled graphs on n={n}")
    for index in range(1 << len(pairs)):
        yield labeled_graph(n, index, pairs)
