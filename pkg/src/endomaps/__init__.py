"""Structural algebra of finite self-maps of {1, ..., n}.

The core value is the Endofunction; around it sit the level/component
structure analyzers, the two canonical factorizations, the full
transformation monoid with its ideal and semidirect structure, the
category of objects-with-a-self-map together with its pretorsion
machinery, and the preorder embedding.  A FastAPI service and a thin CLI
expose the analyzers over HTTP.
"""

from .core import (
    BIJECTION,
    NON_INJECTIVE,
    Endofunction,
    OrbitInfo,
    classify,
    compose,
    identity,
    invert,
    is_bijection,
    iter_bijections,
    iter_endofunctions,
    orbit_info,
    power,
)
from .errors import BoundExceededError, ParseError
from .factorization import (
    GeneratorWord,
    Move,
    Transposition,
    all_moves,
    are_disjoint,
    are_graph_disjoint,
    evaluate_word,
    forest_on_cycle_factors,
    moves_transpositions,
    permutation_cycles,
    sign,
    transposition_word,
)
from .structure import (
    ComponentDecomposition,
    GraphEdges,
    LevelStructure,
    components,
    cyclic_core,
    graph_edges,
    is_forest,
    is_forest_on_cycle,
    is_idempotent,
    level_partition,
)
from .monoid import (
    MonoidEnumeration,
    NestedSemidirectElement,
    SemidirectElement,
    closure,
    conjugate_move,
    enumerate_monoid,
    nested_sign,
    psi,
    psi_fiber,
    semidirect_compose,
    swap_first_two,
)
from .category import (
    Congruence,
    MapObject,
    Morphism,
    PreexactSequence,
    adjunction_check,
    compose_morphisms,
    cycle_congruence,
    functor_C,
    functor_R,
    hom_set,
    identity_morphism,
    is_congruence,
    is_morphism,
    is_trivial_morphism,
    iter_objects,
    preexact_sequence,
    prekernel_check,
    precokernel_check,
    pretorsion_characterization,
    quotient,
    torsion_part,
    winding_morphism,
)
from .relations import (
    PreorderRelation,
    preorder_kind,
    reachability_closure,
    stable_equivalent,
    to_preord,
)
from .parsing import parse_endofunction, serialize_cycles, serialize_table
from .reporting import AnalysisReport, analyze, export_dot, report_json_dict, report_text

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BIJECTION",
    "BoundExceededError",
    "ComponentDecomposition",
    "Congruence",
    "Endofunction",
    "GeneratorWord",
    "GraphEdges",
    "LevelStructure",
    "MapObject",
    "MonoidEnumeration",
    "Morphism",
    "Move",
    "NON_INJECTIVE",
    "NestedSemidirectElement",
    "OrbitInfo",
    "ParseError",
    "PreexactSequence",
    "PreorderRelation",
    "SemidirectElement",
    "Transposition",
    "adjunction_check",
    "all_moves",
    "analyze",
    "are_disjoint",
    "are_graph_disjoint",
    "classify",
    "closure",
    "components",
    "compose",
    "compose_morphisms",
    "conjugate_move",
    "cycle_congruence",
    "cyclic_core",
    "enumerate_monoid",
    "evaluate_word",
    "export_dot",
    "forest_on_cycle_factors",
    "functor_C",
    "functor_R",
    "graph_edges",
    "hom_set",
    "identity",
    "identity_morphism",
    "invert",
    "is_bijection",
    "is_congruence",
    "is_forest",
    "is_forest_on_cycle",
    "is_idempotent",
    "is_morphism",
    "is_trivial_morphism",
    "iter_bijections",
    "iter_endofunctions",
    "iter_objects",
    "level_partition",
    "moves_transpositions",
    "nested_sign",
    "orbit_info",
    "parse_endofunction",
    "permutation_cycles",
    "power",
    "preexact_sequence",
    "prekernel_check",
    "precokernel_check",
    "preorder_kind",
    "pretorsion_characterization",
    "psi",
    "psi_fiber",
    "quotient",
    "reachability_closure",
    "report_json_dict",
    "report_text",
    "semidirect_compose",
    "serialize_cycles",
    "serialize_table",
    "sign",
    "stable_equivalent",
    "swap_first_two",
    "to_preord",
    "torsion_part",
    "transposition_word",
    "winding_morphism",
]
