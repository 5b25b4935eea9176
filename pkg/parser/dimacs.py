# parser/dimacs.py
# DIMACS-like graph files: "c" comments, "p edge <n> <m>", "e <u> <v>" with 1-based ids.
# Ids are shifted to 0-based; the m in the header is informational only.

from parser.edge_list import GraphParseError, _content_lines, _ints, checked_edge
from graphs.core import Graph


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = set()
    for lineno, parts in _content_lines(text, "c"):
        tag = parts[0]
        if tag == "p":
            if n is not None:
                raise GraphParseError(lineno, "duplicate 'p' header")
            if len(parts) != 4:
                raise GraphParseError(lineno, f"expected 'p edge <n> <m>', got {' '.join(parts)!r}")
            if parts[1] != "edge":
                raise GraphParseError(lineno, f"unsupported problem type {parts[1]!r}; expected 'edge'")
            n, _ = _ints(parts[2:], lineno)
            if n < 0:
                raise GraphParseError(lineno, f"vertex count must be non-negative, got {n}")
        elif tag == "e":
            if n is None:
                raise GraphParseError(lineno, "edge before 'p' header")
            if len(parts) != 3:
                raise GraphParseError(lineno, f"expected 'e <u> <v>', got {' '.join(parts)!r}")
            u, v = _ints(parts[1:], lineno)
            edges.add(checked_edge(n, u - 1, v - 1, lineno))
        else:
            raise GraphParseError(lineno, f"unknown line type {tag!r}")
    if n is None:
        raise GraphParseError(1, "missing 'p edge <n> <m>' header")
    return Graph.from_edges(n, edges)
