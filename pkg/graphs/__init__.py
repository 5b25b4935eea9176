from graphs.core import (  # noqa: F401
    CandidateFamily,
    CapExceededError,
    Graph,
    GraphInputError,
    Pair,
    VertexSet,
    complement_pairs,
    induced_edges,
    induced_is_cycle,
    induced_is_hamiltonian,
    make_pair,
)
