# parser/edge_list.py
# Edge-list text format (see READMECYCSUB.txt, "Graph files"):
#   n <count>          header, first non-comment line
#   u v                one edge per line, 0-based ids
#   # ...              comment; blank lines ignored

import logging
import os
from typing import List, Tuple

from graphs.core import Graph, GraphInputError, make_pair

logger = logging.getLogger(__name__)


class GraphParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _ints(parts: List[str], lineno: int) -> List[int]:
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise GraphParseError(lineno, f"expected integers, got {' '.join(parts)!r}")


def _content_lines(text: str, comment: str) -> List[Tuple[int, List[str]]]:
    out = []
    for lineno, raw in enumerate(text.lstrip("\ufeff").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith(comment):
            continue
        out.append((lineno, line.split()))
    return out


def checked_edge(n: int, u: int, v: int, lineno: int) -> Tuple[int, int]:
    if u == v:
        raise GraphParseError(lineno, f"self-loop at vertex {u}")
    for x in (u, v):
        if not 0 <= x < n:
            raise GraphParseError(lineno, f"vertex {x} out of range 0..{n - 1}")
    return make_pair(u, v)


def parse_edge_list(text: str) -> Graph:
    lines = _content_lines(text, "#")
    if not lines:
        raise GraphParseError(1, "missing header 'n <count>'")

    lineno, head = lines[0]
    if len(head) != 2 or head[0] != "n":
        raise GraphParseError(lineno, f"expected header 'n <count>', got {' '.join(head)!r}")
    (n,) = _ints(head[1:], lineno)
    if n < 0:
        raise GraphParseError(lineno, f"vertex count must be non-negative, got {n}")

    edges = set()
    for lineno, parts in lines[1:]:
        if len(parts) != 2:
            raise GraphParseError(lineno, f"expected 'u v', got {' '.join(parts)!r}")
        u, v = _ints(parts, lineno)
        edge = checked_edge(n, u, v, lineno)
        if edge in edges:
            logger.debug(f"line {lineno}: duplicate edge {edge} ignored")
        edges.add(edge)
    return Graph.from_edges(n, edges)


def serialize_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"] + [f"{u} {v}" for u, v in g.edge_list()]
    return "\n".join(lines) + "\n"


def load_graph(path: str) -> Graph:
    """Read a graph file; DIMACS when the first content line starts with 'p', else edge list."""
    from parser.dimacs import parse_dimacs

    with open(path, "rb") as f:
        text = f.read().decode("utf-8-sig")
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith(("#", "c ")) or line == "c":
            continue
        if line.startswith("p"):
            return parse_dimacs(text)
        break
    return parse_edge_list(text)


def write_graph(path: str, g: Graph) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize_edge_list(g))
    return path

