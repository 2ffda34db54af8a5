"""Radials and semiradials of bidirected graphs: sign-aware trails, recognition,
and replayable construction certificates."""

from .core import (
    MINUS,
    PLUS,
    BidirectedGraph,
    DiwalkInfo,
    Edge,
    EdgeKind,
    End,
    Refutation,
    Sign,
    Walk,
    blocks_over,
    classify_edge,
    concat,
    cut,
    reverse,
    validate_diwalk,
)
from .digraphic import (
    SccPoset,
    covering_pairs,
    is_digraphic,
    is_flowgraph,
    is_strongly_connected,
    realize_poset,
    scc_poset,
    strong_ears_build,
    strong_ears_extract,
)
from .errors import (
    BiradialError,
    BudgetExceeded,
    GraphError,
    PreconditionError,
    ReplayError,
    SchemaError,
    TrivialAlmostStrongError,
    UnsatisfiableSize,
    WalkError,
)
from .radials import (
    CHARACTERIZED,
    ClassLabel,
    criticality_crosscheck,
    find_b_factor,
    is_b_critical,
    recognize,
    refute,
    signed_from_factor,
    strong_via_absolute,
)
from .reach import (
    DEFAULT_BUDGET,
    SignConstraint,
    diwalk_reachable,
    enumerate_ditrails,
    exists_closed_ditrail,
    exists_ditrail,
)

__version__ = "0.1.0"
