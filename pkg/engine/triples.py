# engine/triples.py
# Sort every 3-subset of V(G) by its induced edge count:
#   2 edges -> Foundation (an induced P3, keeps its single non-edge as the open pair)
#   1 edge  -> Extension  (keeps both non-edges)
#   3 edges -> Clique3
#   0 edges -> dropped

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, List, NamedTuple

from graphs.core import Graph, Pair, VertexSet


@dataclass(frozen=True)
class Foundation:
    vertices: VertexSet
    open_pair: Pair

    @property
    def non_edges(self) -> FrozenSet[Pair]:
        return frozenset((self.open_pair,))

    @property
    def midpoint(self) -> int:
        (mid,) = set(self.vertices.members) - set(self.open_pair)
        return mid


@dataclass(frozen=True)
class Extension:
    vertices: VertexSet
    non_edges: FrozenSet[Pair]

    def other_non_edge(self, pair: Pair) -> Pair:
        (other,) = self.non_edges - {pair}
        return other


@dataclass(frozen=True)
class Clique3:
    vertices: VertexSet


class TripleClasses(NamedTuple):
    foundations: List[Foundation]
    extensions: List[Extension]
    cliques: List[Clique3]


def classify_triples(g: Graph) -> TripleClasses:
    foundations: List[Foundation] = []
    extensions: List[Extension] = []
    cliques: List[Clique3] = []

    for a, b, c in combinations(range(g.n), 3):
        pairs = ((a, b), (a, c), (b, c))
        missing = [p for p in pairs if not g.adjacent(*p)]
        vertices = VertexSet.of((a, b, c))
        if len(missing) == 1:
            foundations.append(Foundation(vertices, missing[0]))
        elif len(missing) == 2:
            extensions.append(Extension(vertices, frozenset(missing)))
        elif not missing:
            cliques.append(Clique3(vertices))

    return TripleClasses(foundations, extensions, cliques)
