"""Exact rational computations with O-operators, their controlling cohomology
and deformations, pre-Lie algebras and skew-symmetric r-matrices."""

from .cochains import Cochain, d_T, evaluate, graded_bracket, mc_equation_twisted, mc_residual
from .deformation import (
    TruncatedDeformation,
    extend,
    infinitesimal,
    iterate_extension,
    obstruction,
    obstruction_bracket,
    obstruction_direct,
    rigidity_witness_check,
    validate_order_n,
)
from .lie import (
    LieAlgebra,
    Representation,
    adjoint_rep,
    coadjoint_rep,
    deformed_bracket,
    is_nijenhuis_operator_lie,
    semidirect_product,
    trivial_rep,
    validate_lie,
    validate_rep,
)
from .linalg import Matrix, Unshuffle, kernel_basis, rank, solve, unshuffles
from .ooperator import (
    CohomologyReport,
    OOperator,
    check_homomorphism,
    coboundary,
    cohomology,
    induced_prelie,
    is_infinitesimal_deformation,
    is_nijenhuis_element,
    is_ooperator,
    is_rota_baxter,
    rho_bar,
    same_cohomology_class,
    sub_adjacent_lie,
    trivial_deformation_generator,
)
from .prelie import (
    PreLie,
    PreLieCochain,
    commutator_lie,
    is_nijenhuis_operator_prelie,
    phi_map,
    prelie_coboundary_regular,
    prelie_graded_bracket,
    validate_prelie,
)
from .rmatrix import (
    MultiVector,
    check_weak_homomorphism,
    cobracket,
    cybe_residual,
    dual_bracket,
    is_nijenhuis_element_r,
    is_rmatrix,
    psi,
    rmatrix_coboundary,
    rmatrix_cohomology,
    rmatrix_infinitesimal_deformation,
    schouten_bracket,
    sharp,
    validate_bialgebra,
)

__all__ = [
    "Cochain",
    "CohomologyReport",
    "LieAlgebra",
    "Matrix",
    "MultiVector",
    "OOperator",
    "PreLie",
    "PreLieCochain",
    "Representation",
    "TruncatedDeformation",
    "Unshuffle",
    "adjoint_rep",
    "check_homomorphism",
    "check_weak_homomorphism",
    "coadjoint_rep",
    "coboundary",
    "cobracket",
    "cohomology",
    "commutator_lie",
    "cybe_residual",
    "d_T",
    "deformed_bracket",
    "dual_bracket",
    "evaluate",
    "extend",
    "graded_bracket",
    "induced_prelie",
    "infinitesimal",
    "is_infinitesimal_deformation",
    "is_nijenhuis_element",
    "is_nijenhuis_element_r",
    "is_nijenhuis_operator_lie",
    "is_nijenhuis_operator_prelie",
    "is_ooperator",
    "is_rmatrix",
    "is_rota_baxter",
    "iterate_extension",
    "kernel_basis",
    "mc_equation_twisted",
    "mc_residual",
    "obstruction",
    "obstruction_bracket",
    "obstruction_direct",
    "phi_map",
    "prelie_coboundary_regular",
    "prelie_graded_bracket",
    "psi",
    "rank",
    "rho_bar",
    "rigidity_witness_check",
    "rmatrix_coboundary",
    "rmatrix_cohomology",
    "rmatrix_infinitesimal_deformation",
    "same_cohomology_class",
    "schouten_bracket",
    "semidirect_product",
    "sharp",
    "solve",
    "sub_adjacent_lie",
    "trivial_deformation_generator",
    "trivial_rep",
    "unshuffles",
    "validate_bialgebra",
    "validate_lie",
    "validate_order_n",
    "validate_prelie",
    "validate_rep",
]

__version__ = "0.1.0"
