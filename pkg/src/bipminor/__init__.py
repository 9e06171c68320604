"""Bipartite minors: deletions and admissible contractions on 2-coloured
graphs, containment search with replayable certificates, forbidden-minor
checks for planarity, outerplanarity and forests, and (2,2)-Laman graphs.
"""

from .cycles import (
    CycleWitness,
    admissible_contract,
    admissible_witness,
    find_peripheral_through_path,
    is_induced_cycle,
    is_non_separating,
    is_peripheral,
)
from .graph import (
    BiGraph,
    canonical_key,
    components,
    cone,
    contract,
    delete_edge,
    delete_vertex,
    induced_subgraph,
    is_isomorphic,
    new_graph,
)
from .laman import (
    LamanReport,
    ReductionMove,
    critical_sets,
    degree_profile_checks,
    enumerate_laman,
    extend,
    is_laman,
    reduce_degree2,
    reduce_step,
)
from .minors import (
    MinorCertificate,
    MinorOp,
    SearchOutcome,
    contains_bipartite_minor,
    contains_subgraph,
    find_minor_certificate,
    verify_certificate,
)
from .planarity import (
    check_forest_equivalence,
    check_outerplanar_equivalence,
    check_wagner_equivalence,
    is_forest,
    is_outerplanar,
    is_planar,
)
from .subdivision import contains_subdivision, find_subdivision

__version__ = "0.1.0"

__all__ = [
    "BiGraph",
    "CycleWitness",
    "LamanReport",
    "MinorCertificate",
    "MinorOp",
    "ReductionMove",
    "SearchOutcome",
    "admissible_contract",
    "admissible_witness",
    "canonical_key",
    "check_forest_equivalence",
    "check_outerplanar_equivalence",
    "check_wagner_equivalence",
    "components",
    "cone",
    "contains_bipartite_minor",
    "contains_subdivision",
    "contains_subgraph",
    "contract",
    "critical_sets",
    "degree_profile_checks",
    "delete_edge",
    "delete_vertex",
    "enumerate_laman",
    "extend",
    "find_minor_certificate",
    "find_peripheral_through_path",
    "find_subdivision",
    "induced_subgraph",
    "is_forest",
    "is_induced_cycle",
    "is_isomorphic",
    "is_laman",
    "is_non_separating",
    "is_outerplanar",
    "is_peripheral",
    "is_planar",
    "new_graph",
    "reduce_degree2",
    "reduce_step",
    "verify_certificate",
]
