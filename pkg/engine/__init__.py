from engine.cycsub import (  # noqa: F401
    LITERAL,
    MODES,
    STRICT,
    BudgetExceeded,
    EngineInvariantError,
    IterationCapExceeded,
    PartialCycle,
    close_with_foundations,
    cycsub,
    extend_with_extensions,
    include_cliques,
    minimal_filter,
    prune_with_cliques,
)
from engine.trace import EngineTrace, PartialBoundReport, engine_stats  # noqa: F401
from engine.triples import Clique3, Extension, Foundation, classify_triples  # noqa: F401
