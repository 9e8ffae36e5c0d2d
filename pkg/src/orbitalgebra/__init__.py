"""Exact engine for graded orbit bases of oligomorphic groups.

Given an amalgamation class (the age of a homogeneous multi-relational
structure) with a measure, the package enumerates the graded basis of
isomorphism classes, realizes the raising/lowering/diagonal operators on
it, verifies the defining Lie-algebra relations and the measure axioms in
exact arithmetic over Q(λ), and decomposes the graded space into
lowest-weight strings.
"""

from .ages import (
    AgeSpec,
    Amalgam,
    DisjointUnion,
    FiniteModel,
    HomogeneityReport,
    LevelClass,
    LinearOrders,
    MultisetOver,
    NotInAgeError,
    OnePointExtension,
    Sets,
    TimesQ,
    age_signature,
    chain,
    check_homogeneity_finite_model,
    colored,
    complete_graph,
    contains,
    du_member,
    enumerate_level,
    has_measure,
    is_infinite,
    multiset_member,
    one_point_amalgamations,
    one_point_extensions,
    path_graph,
    specialize_age,
    timesq_member,
)
from .measures import (
    CountingOnlyError,
    MeasureAxiomReport,
    RMeasure,
    measure_for,
    total_point_measure,
    verify_r_measure,
)
from .operators import (
    ActionTruncation,
    ColoredClass,
    LevelMatrix,
    RelationReport,
    build_sl2_action,
    e_injectivity_ranks,
    e_matrix,
    f_matrix,
    glr_basis,
    glr_matrix,
    h_eigenvalue,
    rank_generating_coeffs,
    verify_glr_relations,
    verify_sl2_relations,
)
from .scalars import LAMBDA, ONE, ZERO, Scalar, falling_factorial
from .structures import (
    ColoredStructure,
    FiniteStructure,
    Signature,
    canonical_form,
    canonicalize,
    count_automorphisms,
    count_embeddings,
    delete_vertex,
    empty_structure,
    induced_substructure,
    structure,
)
from .verma import (
    DecreasingSequenceError,
    FiniteCaseReport,
    KernelReport,
    SequenceDiagnostics,
    VermaDecomposition,
    character_identity_holds,
    finite_case_decomposition,
    kernel_cross_check,
    sequence_diagnostics,
    verma_multiplicities,
)

__all__ = [name for name in dir() if not name.startswith("_")]
