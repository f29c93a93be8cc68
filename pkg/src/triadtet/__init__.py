"""Exact rational toolkit for bidiagonal triads and tetrahedron-algebra modules."""

from triadtet.bdverify import (
    AmbiguousOrdering,
    DimensionMismatch,
    NoStandardOrdering,
    OrderingSearchTooLarge,
    PairCertificate,
    Refutation,
    StandardOrdering,
    TriadCertificate,
    TripleCertificate,
    affine_equivalent_triads,
    find_standard_ordering,
    shape_of,
    verify_bd_pair,
    verify_bd_triad,
    verify_bd_triple,
)
from triadtet.fixtures import fixture_counterexample, fixture_vd_triad
from triadtet.io import (
    DocumentFormatError,
    TetModuleDocument,
    TriadDocument,
    format_rational,
    load_tet_module,
    load_triad,
    parse_rational,
    save_tet_module,
    save_triad,
)
from triadtet.linalg import (
    EigenDecomposition,
    EigenPair,
    ImageNotContained,
    InconsistentSystem,
    IrrationalSpectrum,
    RMatrix,
    Rational,
    Subspace,
    char_poly,
    commutator,
    eigen_decompose,
    generated_algebra_dimension,
    kernel_basis,
    rational_roots,
    restricted_power_bijective,
    rref,
    solve_linear_matrix_system,
)
from triadtet.reduction import (
    NoWitness,
    affine_witness_sequences,
    check_recurrence,
    is_one_recurrent,
    reduce_triad,
)
from triadtet.sl2 import (
    EquitableTriple,
    Sl2Action,
    equitable_from_standard,
    make_vd,
    segregation,
    standard_from_equitable,
)
from triadtet.synthesis import (
    AmbiguousSolution,
    DegenerateDiameter,
    IdentityViolation,
    RaisingData,
    SynthesisError,
    SynthesisResult,
    construct_B,
    construct_B_prime_dprime,
    raising_maps,
    synthesize_tet,
)
from triadtet.tet import (
    CornerTriadRefuted,
    NonConformingSpectrum,
    RelationReport,
    TetModule,
    corner_triad,
    corner_triads_are_bd_triads,
    face_triple,
    irreducible_sufficient,
    spectrum_diameter,
    verify_tet_relations,
)

__all__ = [
    "AmbiguousOrdering",
    "AmbiguousSolution",
    "CornerTriadRefuted",
    "DegenerateDiameter",
    "DimensionMismatch",
    "DocumentFormatError",
    "EigenDecomposition",
    "EigenPair",
    "EquitableTriple",
    "IdentityViolation",
    "ImageNotContained",
    "InconsistentSystem",
    "IrrationalSpectrum",
    "NoStandardOrdering",
    "NonConformingSpectrum",
    "NoWitness",
    "OrderingSearchTooLarge",
    "PairCertificate",
    "RMatrix",
    "RaisingData",
    "Rational",
    "Refutation",
    "RelationReport",
    "Sl2Action",
    "StandardOrdering",
    "Subspace",
    "SynthesisError",
    "SynthesisResult",
    "TetModule",
    "TetModuleDocument",
    "TriadCertificate",
    "TriadDocument",
    "TripleCertificate",
    "affine_equivalent_triads",
    "affine_witness_sequences",
    "char_poly",
    "check_recurrence",
    "commutator",
    "construct_B",
    "construct_B_prime_dprime",
    "corner_triad",
    "corner_triads_are_bd_triads",
    "eigen_decompose",
    "equitable_from_standard",
    "face_triple",
    "find_standard_ordering",
    "fixture_counterexample",
    "fixture_vd_triad",
    "format_rational",
    "generated_algebra_dimension",
    "irreducible_sufficient",
    "is_one_recurrent",
    "kernel_basis",
    "load_tet_module",
    "load_triad",
    "make_vd",
    "parse_rational",
    "rational_roots",
    "raising_maps",
    "reduce_triad",
    "restricted_power_bijective",
    "rref",
    "save_tet_module",
    "save_triad",
    "segregation",
    "shape_of",
    "solve_linear_matrix_system",
    "spectrum_diameter",
    "standard_from_equitable",
    "synthesize_tet",
    "verify_bd_pair",
    "verify_bd_triad",
    "verify_bd_triple",
    "verify_tet_relations",
]
