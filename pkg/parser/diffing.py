# parser/diffing.py
# Content hashes for graphs and set differences between two candidate families.

import hashlib
from typing import Iterable, List, Tuple

from graphs.core import CandidateFamily, Graph, VertexSet
from parser.edge_list import serialize_edge_list


def sha256(s: str) -> str:
    return hashlib.sha256(s.encode("utf-8")).hexdigest()


def fingerprint(g: Graph, length: int = 12) -> str:
    # canonical edge list, so the same labeled graph always gets the same id
    return sha256(serialize_edge_list(g))[:length]


def diff_families(engine: CandidateFamily, oracle: CandidateFamily) -> Tuple[List[VertexSet], List[VertexSet]]:
    """Return (missing from engine, extra in engine), each in canonical order."""
    e, o = engine.as_frozenset(), oracle.as_frozenset()
    missing = sorted(o - e, key=VertexSet.sort_key)
    extra = sorted(e - o, key=VertexSet.sort_key)
    return missing, extra


def format_family(family: Iterable[VertexSet]) -> str:
    """One subset per line, members ascending and space separated."""
    return "".join(" ".join(str(v) for v in s.members) + "\n" for s in family)
