"""Catalog algebras and explicit constructions of Anosov automorphisms."""

from .automorphisms import (
    Construction,
    ConstructionError,
    NotAnosov,
    abelian_automorphism,
    balanced_hk_n,
    exterior_square,
    f3_default,
    f3_induced_automorphism,
    g_automorphism,
    h1_base_automorphism,
    h1_expected_blocks,
    hk_automorphism,
    hk_printed_blocks,
    lk_automorphism,
    lk_transported,
    minimal_hk_n,
    nk_automorphism,
    with_abelian,
)
from .catalog import CATALOG, CatalogEntry, CatalogError, catalog, catalog_index
from .dual import DegenerateJSpanError, same_j_span, scheuneman_dual
from .graded import Gradation, GradedSum, GradedSumError, default_gradation, graded_sum
from .witness import FAMILIES, SqrtFormWitness, sqrt_form_witness

__all__ = [
    "CATALOG",
    "FAMILIES",
    "CatalogEntry",
    "CatalogError",
    "Construction",
    "ConstructionError",
    "DegenerateJSpanError",
    "Gradation",
    "GradedSum",
    "GradedSumError",
    "NotAnosov",
    "SqrtFormWitness",
    "abelian_automorphism",
    "balanced_hk_n",
    "catalog",
    "catalog_index",
    "default_gradation",
    "exterior_square",
    "f3_default",
    "f3_induced_automorphism",
    "g_automorphism",
    "graded_sum",
    "h1_base_automorphism",
    "h1_expected_blocks",
    "hk_automorphism",
    "hk_printed_blocks",
    "lk_automorphism",
    "lk_transported",
    "minimal_hk_n",
    "nk_automorphism",
    "same_j_span",
    "scheuneman_dual",
    "sqrt_form_witness",
    "with_abelian",
]
