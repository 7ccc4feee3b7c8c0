"""Classification toolkit for semigroup C*-algebras of right-angled
Artin monoids.

The pipeline: split an undirected graph into co-irreducible components
(module graphs + artin), score each finite component by its flag-complex
Euler characteristic (module euler), collect the invariant profile and
decide isomorphism, stable isomorphism, graph-algebra membership, and
semiprojectivity (module artin), and realize or verify single-factor
algebras as directed-graph algebras through integer Smith-normal-form
K-theory (module kgraph).  Module cli exposes everything as a command
line with byte-stable JSON output.
"""

from .artin import (
    OMEGA,
    AbGroup,
    AlgebraNormalForm,
    ComparisonVerdict,
    ExtNat,
    FiniteExt,
    InfiniteComp,
    InvariantProfile,
    Toeplitz,
    algebra_name,
    classify_component,
    compare,
    component_ktheory,
    component_name,
    decompose,
    decompose_oracle,
    invariant_profile,
    is_graph_algebra,
    normal_form,
    parse_profile_spec,
    prim_space,
    profile_components,
    semiprojectivity,
    stable_normal_form,
)
from .euler import CliqueCountVector, clique_counts, euler_characteristic, euler_oracle
from .graphs import (
    DuplicateEdgeWarning,
    LimitExceeded,
    ParseError,
    UndirectedGraph,
    canonical_form,
    complement,
    complete_bipartite,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_graphs,
    graph_join,
    induced_subgraph,
    parse_edge_list,
    parse_graph6,
    path_graph,
    to_graph6,
)
from .kgraph import (
    DirectedGraph,
    KTheoryReport,
    NotRealizable,
    RealizationNotImplemented,
    SmithDecomposition,
    condition_k,
    format_dgraph,
    graph_ktheory,
    parse_dgraph,
    realize,
    sink_ideal_analysis,
    smith_normal_form,
    verify_realization,
)

__version__ = "0.1.0"

__all__ = [
    "AbGroup",
    "AlgebraNormalForm",
    "CliqueCountVector",
    "ComparisonVerdict",
    "DirectedGraph",
    "DuplicateEdgeWarning",
    "ExtNat",
    "FiniteExt",
    "InfiniteComp",
    "InvariantProfile",
    "KTheoryReport",
    "LimitExceeded",
    "NotRealizable",
    "OMEGA",
    "ParseError",
    "RealizationNotImplemented",
    "SmithDecomposition",
    "Toeplitz",
    "UndirectedGraph",
    "algebra_name",
    "canonical_form",
    "classify_component",
    "clique_counts",
    "compare",
    "complement",
    "complete_bipartite",
    "complete_graph",
    "component_ktheory",
    "component_name",
    "condition_k",
    "connected_components",
    "cycle_graph",
    "decompose",
    "decompose_oracle",
    "disjoint_union",
    "empty_graph",
    "enumerate_graphs",
    "euler_characteristic",
    "euler_oracle",
    "format_dgraph",
    "graph_join",
    "graph_ktheory",
    "induced_subgraph",
    "invariant_profile",
    "is_graph_algebra",
    "normal_form",
    "parse_dgraph",
    "parse_edge_list",
    "parse_graph6",
    "parse_profile_spec",
    "path_graph",
    "prim_space",
    "profile_components",
    "realize",
    "semiprojectivity",
    "sink_ideal_analysis",
    "smith_normal_form",
    "stable_normal_form",
    "to_graph6",
    "verify_realization",
]
