"""Exact arithmetic kernel: rationals, Q(sqrt k), polynomials, matrices, root counting."""

from fractions import Fraction

from .factor import Factorization, UnsupportedDegreeError, factor_over_Z, is_irreducible
from .matrix import Matrix, RationalMatrix, charpoly
from .multipoly import MultiPoly, default_variables
from .numtheory import (
    is_square_free,
    pell_fundamental,
    rational_square_class,
    square_free_part,
)
from .quadfield import QuadFieldElement, quad_norm_and_conjugate, sqrt_of_integer
from .roots import (
    RootOnCircleError,
    count_roots_inside_unit_disk,
    schur_cohn_inside_unit_disk,
    sturm_closed_count,
    sturm_real_root_count,
)
from .unipoly import UniPoly, chebyshev_reduce, companion, poly_gcd, square_free_decomposition

Rational = Fraction

__all__ = [
    "Factorization",
    "Fraction",
    "Matrix",
    "MultiPoly",
    "QuadFieldElement",
    "Rational",
    "RationalMatrix",
    "RootOnCircleError",
    "UniPoly",
    "UnsupportedDegreeError",
    "charpoly",
    "chebyshev_reduce",
    "companion",
    "count_roots_inside_unit_disk",
    "default_variables",
    "factor_over_Z",
    "is_irreducible",
    "is_square_free",
    "pell_fundamental",
    "poly_gcd",
    "quad_norm_and_conjugate",
    "rational_square_class",
    "schur_cohn_inside_unit_disk",
    "sqrt_of_integer",
    "square_free_decomposition",
    "square_free_part",
    "sturm_closed_count",
    "sturm_real_root_count",
]
