"""Exact computer algebra for Gamma-algebras, alternative M2-algebras and Pluecker coordinates."""

from .algebra import (
    IDENTITY_KINDS,
    AlgebraElement,
    IdentityReport,
    StructureAlgebra,
    associator,
    check_identity,
    decompose_m2_bimodule,
    multiply,
    symplectic_involution,
)
from .catalog import builtin
from .coordinatization import (
    AlgebraMap,
    BracketModule,
    EnvelopeMorphismError,
    M2DElement,
    envelope_b42,
    gamma_to_m2,
    m2d_multiply,
    octonion_isomorphism,
    phi_iso,
    recover_morphism,
    transport_morphism,
)
from .fields import GF, FieldSpec
from .free_gamma import (
    FreeGammaElement,
    free_matrix_envelope,
    embedding_oracle,
    fg_dimensions,
    fg_evaluate,
    fg_multiply,
    fg_normal_form,
)
from .gamma import (
    GammaAlgebra,
    check_jordan_super,
    gamma_of_commutative,
    grassmann_envelope,
    verify_gamma_conditions,
)
from .grassmann import (
    OddElement,
    SElement,
    enumerate_basis,
    enumerate_basis_filtered,
    enumerate_Im_basis,
    expand,
    substitution_rank,
    odd_dimension,
    reduce_odd,
    straighten,
)
from .poly import MonomialOrder, NcPolynomial, Polynomial, abelianize, leading_term, poly_mul, rank_of_span

__version__ = "0.1.0"

__all__ = [
    "IDENTITY_KINDS",
    "AlgebraElement",
    "AlgebraMap",
    "BracketModule",
    "EnvelopeMorphismError",
    "FieldSpec",
    "FreeGammaElement",
    "GF",
    "GammaAlgebra",
    "IdentityReport",
    "M2DElement",
    "MonomialOrder",
    "NcPolynomial",
    "OddElement",
    "Polynomial",
    "SElement",
    "StructureAlgebra",
    "abelianize",
    "associator",
    "builtin",
    "check_identity",
    "check_jordan_super",
    "free_matrix_envelope",
    "decompose_m2_bimodule",
    "embedding_oracle",
    "enumerate_Im_basis",
    "enumerate_basis",
    "enumerate_basis_filtered",
    "envelope_b42",
    "expand",
    "fg_dimensions",
    "fg_evaluate",
    "fg_multiply",
    "fg_normal_form",
    "gamma_of_commutative",
    "gamma_to_m2",
    "grassmann_envelope",
    "leading_term",
    "substitution_rank",
    "m2d_multiply",
    "multiply",
    "octonion_isomorphism",
    "odd_dimension",
    "phi_iso",
    "poly_mul",
    "rank_of_span",
    "recover_morphism",
    "reduce_odd",
    "straighten",
    "symplectic_involution",
    "transport_morphism",
    "verify_gamma_conditions",
]
