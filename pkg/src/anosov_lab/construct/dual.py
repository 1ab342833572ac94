"""Scheuneman duality for 2-step nilpotent algebras.

The bracket of a 2-step algebra of type (n, k) is a k-dimensional subspace
of skew n x n matrices (the span of the J_Z).  The dual algebra uses the
orthogonal complement under (A, B) = -tr(AB), which on skew matrices is
twice the dot product of the strictly upper triangles.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from ..exact import Matrix
from ..lie import LieAlgebra, two_step_split


class DegenerateJSpanError(ValueError):
    """The map Z -> J_Z is not injective."""


def _pairs(n1: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n1) for j in range(i + 1, n1)]


def _primitive(row) -> list[Fraction]:
    den = lcm(*(c.denominator for c in row))
    ints = [int(c * den) for c in row]
    g = 0
    for c in ints:
        g = gcd(g, c)
    lead = next(c for c in ints if c)
    if lead < 0:
        g = -g
    return [Fraction(c, g) for c in ints]


def j_span_rows(L: LieAlgebra) -> Matrix:
    """Row l holds c_ij^l over the pairs i < j of the generating layer, in lex order."""
    n1, n2 = two_step_split(L)
    pairs = _pairs(n1)
    return Matrix([[L.c(i, j, n1 + l) for i, j in pairs] for l in range(n2)], ncols=len(pairs))


def scheuneman_dual(L: LieAlgebra) -> LieAlgebra:
    """Dual of a 2-step algebra of type (n, k); the result has type (n, n(n-1)/2 - k).

    The complement basis is the echelon form of the kernel, each row scaled
    to a primitive integer vector with positive pivot.
    """
    n1, n2 = two_step_split(L)
    rows = j_span_rows(L)
    if rows.rank() != n2:
        raise DegenerateJSpanError("the map Z -> J_Z is not injective")
    pairs = _pairs(n1)
    kernel = rows.kernel()
    if not kernel:
        return LieAlgebra(n1, {}, [f"X{i + 1}" for i in range(n1)])
    echelon, pivots = Matrix(kernel).rref()
    basis = [_primitive(echelon.row(r)) for r in range(len(pivots))]
    m = len(basis)
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    for p, (i, j) in enumerate(pairs):
        terms = {n1 + l: row[p] for l, row in enumerate(basis) if row[p]}
        if terms:
            brackets[(i, j)] = terms
    names = [f"X{i + 1}" for i in range(n1)] + [f"Z{l + 1}" for l in range(m)]
    return LieAlgebra(n1 + m, brackets, names)


def same_j_span(L1: LieAlgebra, L2: LieAlgebra) -> bool:
    """Whether two 2-step algebras on the same generating layer have equal J-spans."""
    r1, r2 = j_span_rows(L1), j_span_rows(L2)
    if r1.ncols != r2.ncols:
        return False
    return r1.rref()[0] == r2.rref()[0]
