"""Maximum k-dependent set on bipartite graphs: matching-removal approximation,
tight worst-case instances, and exact brute-force oracles."""

from ._backend import BACKEND
from .approx import (
    HopcroftKarpProvider,
    RunTrace,
    ScriptedProvider,
    check_lemma1,
    check_lemma2,
    check_ratio,
    ratio_bound,
    solve,
)
from .errors import (
    ConstructionFailure,
    EdgeNotPresent,
    InvalidK,
    InvalidMatching,
    InvalidProvider,
    KDepError,
    NotBipartite,
    NotKE,
    NotMaximumMatching,
    NotOptimal,
    ParseError,
    TightnessViolation,
    TooLarge,
)
from .graph import Graph, induced_degrees, is_k_dependent, parse_edge_list, remove_edges
from .matching import (
    Matching,
    konig_cover,
    max_independent_set,
    max_matching,
    verify_cover,
    verify_matching,
)
from .oracle import (
    exact_max_k_dependent,
    exact_max_matching,
    exact_min_vertex_cover,
    is_konig_egervary,
    ke_experiment,
)
from .worstcase import demonstrate_tightness, generate

__version__ = "0.1.0"
