"""Dowker complexes of finite relations, digraph analysis of self-relations,
morphism checks, and power filtrations with Z/2 persistent homology."""

from .errors import (
    DowkerError,
    HypothesisError,
    LabelMismatchError,
    MorphismError,
    NotBijectiveError,
    NotConvergentError,
    NotSelfRelationError,
    NotStronglyConnectedError,
    ParseError,
    RelationError,
    UniverseMismatchError,
)
from .relation import (
    EventualPeriod,
    Relation,
    compose,
    domain,
    empty,
    eventual_period,
    from_matrix,
    from_pairs,
    full,
    identity,
    image,
    inverse,
    is_surjective,
    is_total,
    power,
    r_infinity,
)
from .digraph import (
    ComponentPartition,
    QStructure,
    connected_components,
    down_set,
    graph_period_q,
    has_positive_trace,
    is_acyclic,
    is_simple,
    is_strongly_connected,
    maxima,
    minima,
    q_classes,
    strongly_connected_components,
    up_set,
)
from .simplicial import (
    SimplicialComplex,
    all_faces,
    betti_numbers,
    contains,
    edge_connected_components,
    equals,
    euler_characteristic,
    from_maximal,
    is_subcomplex,
)
from .dowker import DualityReport, dowker_K, dowker_L, duality_check, witnesses
from .morphism import (
    ShiftWitness,
    assert_inclusion_from_left_morphism,
    assert_inclusion_from_right_morphism,
    is_conjugacy,
    is_graph_homomorphism,
    is_left_morphism,
    is_multi_left_morphism,
    is_multi_right_morphism,
    is_right_morphism,
    verify_shift_equivalence,
)
from .persistence import (
    Bar,
    Barcode,
    BifiltrationGrid,
    FilteredComplex,
    barcode,
    bifiltration_grid,
    intersect_complexes,
    power_filtration,
    walk_witness,
)

__version__ = "0.1.0"
