# oracle/crosscheck.py
# Second opinion for the oracle: enumerate simple cycles with networkx and keep those without chords.

import networkx as nx

from graphs.core import CandidateFamily, Graph, VertexSet, induced_edges


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edge_list())
    return G


def simple_cycle_cyclic_subsets(g: Graph) -> CandidateFamily:
    found = CandidateFamily()
    for cycle in nx.simple_cycles(to_networkx(g)):
        s = VertexSet.of(cycle)
        # chordless iff the cycle's own |s| edges are the only ones induced
        if len(s) >= 3 and len(induced_edges(g, s)) == len(s):
            found.add(s)
    return found


def networkx_chordless_subsets(g: Graph) -> CandidateFamily:
    return CandidateFamily(VertexSet.of(c) for c in nx.chordless_cycles(to_networkx(g)))
