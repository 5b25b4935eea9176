# graphs/core.py
# Simple undirected graphs over 0..n-1 with bitmask adjacency, canonical vertex sets,
# and the induced-subgraph queries everything else is built on.

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Set, Tuple

Pair = Tuple[int, int]


class GraphInputError(ValueError):
    """Vertex id out of range, self-loop, or otherwise not a simple graph."""


class CapExceededError(ValueError):
    """Input too large for an exponential-time routine (oracle, labeled sweep)."""


def make_pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -------------------- vertex sets --------------------

@dataclass(frozen=True, eq=True)
class VertexSet:
    """
    Canonical vertex subset. Stored as an int bitmask (bit v set iff v is a member),
    so equality, hashing and subset tests are integer operations.
    """
    mask: int

    def __post_init__(self):
        if self.mask < 0:
            raise GraphInputError("vertex ids must be non-negative")

    @classmethod
    def of(cls, members: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in members:
            if v < 0:
                raise GraphInputError(f"negative vertex id {v}")
            mask |= 1 << v
        return cls(mask)

    @cached_property
    def members(self) -> Tuple[int, ...]:
        return tuple(_bits(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, v: int) -> bool:
        return v >= 0 and bool(self.mask >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask)

    def issubset(self, other: "VertexSet") -> bool:
        return self.mask & ~other.mask == 0

    def is_proper_subset(self, other: "VertexSet") -> bool:
        return self.mask != other.mask and self.issubset(other)

    def max_member(self) -> int:
        return self.mask.bit_length() - 1

    def sort_key(self) -> Tuple[int, ...]:
        return self.members

    def __lt__(self, other: "VertexSet") -> bool:
        return self.members < other.members

    def __repr__(self) -> str:
        return "{" + ",".join(str(v) for v in self.members) + "}"


class CandidateFamily:
    """Set of VertexSets; iteration is always lexicographic on sorted members."""

    def __init__(self, members: Iterable[VertexSet] = ()):
        self._members: Set[VertexSet] = set(members)

    def add(self, s: VertexSet) -> None:
        self._members.add(s)

    def update(self, items: Iterable[VertexSet]) -> None:
        self._members.update(items)

    def __contains__(self, s: VertexSet) -> bool:
        return s in self._members

    def __len__(self) -> int:
        return len(self._members)

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.ordered())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CandidateFamily):
            return NotImplemented
        return self._members == other._members

    def ordered(self) -> List[VertexSet]:
        return sorted(self._members, key=VertexSet.sort_key)

    def as_frozenset(self) -> FrozenSet[VertexSet]:
        return frozenset(self._members)

    def copy(self) -> "CandidateFamily":
        return CandidateFamily(self._members)

    def size_histogram(self) -> Dict[int, int]:
        hist: Dict[int, int] = {}
        for s in self._members:
            hist[len(s)] = hist.get(len(s), 0) + 1
        return dict(sorted(hist.items()))

    def __repr__(self) -> str:
        return f"CandidateFamily({self.ordered()!r})"


# -------------------- graphs --------------------

@dataclass(frozen=True)
class Graph:
    """
    Finite simple undirected graph on vertices 0..n-1.
    Build with Graph.from_edges; it validates, deduplicates and fills the adjacency masks.
    """
    n: int
    edges: FrozenSet[Pair]
    adjacency: Tuple[int, ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphInputError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        canon: Set[Pair] = set()
        for u, v in edges:
            if u == v:
                raise GraphInputError(f"self-loop at vertex {u}")
            for x in (u, v):
                if not 0 <= x < n:
                    raise GraphInputError(f"vertex {x} out of range 0..{n - 1}")
            canon.add(make_pair(u, v))
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n=n, edges=frozenset(canon), adjacency=tuple(adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> VertexSet:
        return VertexSet(self.adjacency[v])

    def edge_list(self) -> List[Pair]:
        return sorted(self.edges)

    def check_subset(self, s: VertexSet) -> None:
        if s.mask >> self.n:
            raise GraphInputError(f"vertex {s.max_member()} out of range 0..{self.n - 1}")

    def without_edge(self, u: int, v: int) -> "Graph":
        pair = make_pair(u, v)
        if pair not in self.edges:
            raise GraphInputError(f"edge {pair} not in graph")
        return Graph.from_edges(self.n, (e for e in self.edges if e != pair))

    def without_vertex(self, v: int) -> "Graph":
        """Delete v and relabel the vertices above it down by one."""
        if not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v} out of range 0..{self.n - 1}")

        def shift(x: int) -> int:
            return x - 1 if x > v else x

        kept = ((shift(a), shift(b)) for a, b in self.edges if v not in (a, b))
        return Graph.from_edges(self.n - 1, kept)


# -------------------- induced-subgraph queries --------------------

def induced_edges(g: Graph, s: VertexSet) -> Set[Pair]:
    g.check_subset(s)
    out: Set[Pair] = set()
    for u in s:
        for v in _bits(g.adjacency[u] & s.mask):
            if u < v:
                out.add((u, v))
    return out


def complement_pairs(g: Graph, s: VertexSet) -> Set[Pair]:
    g.check_subset(s)
    return {(u, v) for u, v in combinations(s.members, 2) if not g.adjacent(u, v)}


def induced_degree(g: Graph, s: VertexSet, v: int) -> int:
    return (g.adjacency[v] & s.mask).bit_count()


def induced_is_connected(g: Graph, s: VertexSet) -> bool:
    g.check_subset(s)
    if not s.mask:
        return True
    start = s.mask & -s.mask
    seen = start
    frontier = start
    while frontier:
        grow = 0
        for v in _bits(frontier):
            grow |= g.adjacency[v]
        frontier = grow & s.mask & ~seen
        seen |= frontier
    return seen == s.mask


def induced_is_cycle(g: Graph, s: VertexSet) -> bool:
    g.check_subset(s)
    if len(s) < 3:
        return False
    if any(induced_degree(g, s, v) != 2 for v in s):
        return False
    return induced_is_connected(g, s)


def induced_is_hamiltonian(g: Graph, s: VertexSet) -> bool:
    """Spanning cycle in the induced subgraph on s (|s| >= 3); subset DP over paths from the lowest member."""
    g.check_subset(s)
    verts = s.members
    k = len(verts)
    if k < 3:
        return False
    local = [0] * k
    for i, u in enumerate(verts):
        for j, v in enumerate(verts):
            if g.adjacent(u, v):
                local[i] |= 1 << j
    # reach[sub] = bitmask of end vertices j such that a path 0 -> j covers exactly sub
    full = (1 << k) - 1
    reach = [0] * (1 << k)
    reach[1] = 1
    for sub in range(1, full + 1):
        ends = reach[sub]
        if not ends or not sub & 1:
            continue
        for j in _bits(ends):
            for nxt in _bits(local[j] & ~sub):
                reach[sub | 1 << nxt] |= 1 << nxt
    return bool(reach[full] & local[0])


def induced_summary(g: Graph, s: VertexSet) -> Dict[str, int]:
    degrees = [induced_degree(g, s, v) for v in s] or [0]
    return {
        "size": len(s),
        "edges": len(induced_edges(g, s)),
        "min_degree": min(degrees),
        "max_degree": max(degrees),
        "connected": int(induced_is_connected(g, s)),
    }


# -------------------- named families --------------------

def empty_graph(n: int) -> Graph:
    return Graph.from_edges(n, ())


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)

