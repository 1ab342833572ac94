"""Rational nilpotent Lie algebras by structure constants."""

from .algebra import LieAlgebra, LieAlgebraError, ValidationReport, abelian, standard_names, validate
from .structure import (
    AbelianFactor,
    CharacteristicSubspaces,
    NotNilpotentError,
    center,
    change_basis,
    characteristic_subspaces,
    conforms_to_series_basis,
    derived_algebra,
    direct_sum,
    direct_sum_map,
    direct_sum_positions,
    is_homomorphism,
    is_isomorphism,
    is_isomorphism_via_j,
    j_matrix,
    jz_matrix,
    layer_of_basis,
    lower_central_series,
    max_abelian_factor,
    two_step_split,
    type_of,
)
from .subspace import Subspace

__all__ = [
    "AbelianFactor",
    "CharacteristicSubspaces",
    "LieAlgebra",
    "LieAlgebraError",
    "NotNilpotentError",
    "Subspace",
    "ValidationReport",
    "abelian",
    "center",
    "change_basis",
    "characteristic_subspaces",
    "conforms_to_series_basis",
    "derived_algebra",
    "direct_sum",
    "direct_sum_map",
    "direct_sum_positions",
    "is_homomorphism",
    "is_isomorphism",
    "is_isomorphism_via_j",
    "j_matrix",
    "jz_matrix",
    "layer_of_basis",
    "lower_central_series",
    "max_abelian_factor",
    "standard_names",
    "two_step_split",
    "type_of",
    "validate",
]
