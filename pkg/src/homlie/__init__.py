"""Exact-arithmetic toolkit for compatible Hom-Lie algebras.

Structure-constant algebras over the rationals, axiom verification with
witnesses, the Nijenhuis-Richardson bracket, twisted Chevalley-Eilenberg
and compatible cohomology, abelian extension classification, and linear /
finite-order deformation theory with obstruction classes.
"""

from .algebra import (
    CompatibleHomLieAlgebra,
    HomLieAlgebra,
    LinearOperator,
    NIJENHUIS,
    ROTA_BAXTER,
    Representation,
    ValidationReport,
    adjoint_representation,
    derived_structure,
    induced_bracket,
    rb_companion,
    rb_pair,
    semidirect_product,
    sum_bracket,
    sum_representation,
    twisted_semidirect,
    verify_operator,
    verify_structure,
)
from .cochains import (
    Cochain,
    ZeroCochain,
    exterior_power_matrix,
    hom_cochain_basis,
    is_equivariant,
    is_mc_pair,
    lift_to_product,
    nr_bracket,
    nr_diamond,
)
from .cohomology import (
    CohomologyReport,
    CompatibleCochain,
    ce_coboundary,
    class_coordinates,
    cohomology_dimensions,
    comparison_map,
    compatible_coboundary,
    derivation_space,
)
from .deformations import (
    LinearGenerator,
    OrderPDeformation,
    check_linear_equivalence,
    check_linear_generator,
    infinitesimal_class,
    is_extensible,
    obstruction,
    trivial_deformation_from_nijenhuis,
    verify_order_p,
)
from .errors import ContractError, PreconditionError, UsageError
from .extensions import (
    AbelianExtension,
    ExtensionCocycle,
    build_extension,
    check_equivalence,
    ext_class,
    extract_cocycle,
)
from .linalg import Matrix, frac, kernel_basis, quotient_dimension, rref, solve

__all__ = [
    "AbelianExtension",
    "Cochain",
    "CohomologyReport",
    "CompatibleCochain",
    "CompatibleHomLieAlgebra",
    "ContractError",
    "ExtensionCocycle",
    "HomLieAlgebra",
    "LinearGenerator",
    "LinearOperator",
    "Matrix",
    "NIJENHUIS",
    "OrderPDeformation",
    "PreconditionError",
    "ROTA_BAXTER",
    "Representation",
    "UsageError",
    "ValidationReport",
    "ZeroCochain",
    "adjoint_representation",
    "build_extension",
    "ce_coboundary",
    "check_equivalence",
    "check_linear_equivalence",
    "check_linear_generator",
    "class_coordinates",
    "cohomology_dimensions",
    "comparison_map",
    "compatible_coboundary",
    "derivation_space",
    "derived_structure",
    "ext_class",
    "exterior_power_matrix",
    "extract_cocycle",
    "frac",
    "hom_cochain_basis",
    "induced_bracket",
    "infinitesimal_class",
    "is_equivariant",
    "is_extensible",
    "is_mc_pair",
    "kernel_basis",
    "lift_to_product",
    "nr_bracket",
    "nr_diamond",
    "obstruction",
    "quotient_dimension",
    "rb_companion",
    "rb_pair",
    "rref",
    "semidirect_product",
    "solve",
    "sum_bracket",
    "sum_representation",
    "trivial_deformation_from_nijenhuis",
    "twisted_semidirect",
    "verify_operator",
    "verify_order_p",
    "verify_structure",
]
