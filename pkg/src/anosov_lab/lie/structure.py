"""Characteristic subspaces, decompositions and maps between Lie algebras."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..exact import Matrix
from .algebra import LieAlgebra, LieAlgebraError, abelian, standard_names
from .subspace import Subspace


class NotNilpotentError(LieAlgebraError):
    """The lower central series stabilizes at a nonzero subspace."""


def _unit(n, i):
    return tuple(Fraction(int(i == j)) for j in range(n))


def lower_central_series(L: LieAlgebra) -> list[Subspace]:
    """C^0 = L, C^i = [L, C^(i-1)], ending with the zero subspace."""
    n = L.dim
    series = [Subspace.whole(n)]
    while series[-1].dim:
        prev = series[-1]
        vecs = [L.bracket(_unit(n, i), w) for i in range(n) for w in prev.basis]
        nxt = Subspace(n, vecs)
        if nxt.dim == prev.dim:
            raise NotNilpotentError(f"lower central series stabilizes at dimension {prev.dim}")
        series.append(nxt)
    return series


def type_of(L: LieAlgebra) -> tuple[int, ...]:
    """Dimensions of the successive quotients C^(i-1)/C^i."""
    series = lower_central_series(L)
    return tuple(a.dim - b.dim for a, b in zip(series, series[1:]))


def center(L: LieAlgebra) -> Subspace:
    n = L.dim
    if n == 0:
        return Subspace(0)
    # v is central iff sum_i v_i c_ij^k = 0 for every j, k
    rows = [[L.c(i, j, k) for i in range(n)] for j in range(n) for k in range(n)]
    return Subspace(n, Matrix(rows).kernel())


def derived_algebra(L: LieAlgebra) -> Subspace:
    n = L.dim
    return Subspace(n, [L.basis_bracket(i, j) for i in range(n) for j in range(i + 1, n)])


@dataclass(frozen=True)
class CharacteristicSubspaces:
    center: Subspace
    derived: Subspace
    center_cap_derived: Subspace
    series: tuple[Subspace, ...]


def characteristic_subspaces(L: LieAlgebra) -> CharacteristicSubspaces:
    z = center(L)
    d = derived_algebra(L)
    return CharacteristicSubspaces(z, d, z.intersect(d), tuple(lower_central_series(L)))


def conforms_to_series_basis(L: LieAlgebra) -> bool:
    """True when every C^i is spanned by the last basis vectors."""
    try:
        series = lower_central_series(L)
    except NotNilpotentError:
        return False
    n = L.dim
    return all(s == Subspace.coordinate(n, range(n - s.dim, n)) for s in series)


def layer_of_basis(L: LieAlgebra) -> list[int]:
    """For a conforming algebra, the layer index (1-based) of each basis vector."""
    if not conforms_to_series_basis(L):
        raise LieAlgebraError("basis is not adapted to the lower central series")
    layers = []
    for t, size in enumerate(type_of(L), start=1):
        layers.extend([t] * size)
    return layers


# -- J maps ---------------------------------------------------------------------


def j_matrix(L: LieAlgebra, z: Sequence) -> Matrix:
    """Full n x n matrix of J_z, <J_z X, Y> = <[X, Y], z> for the standard inner product."""
    n = L.dim
    sc = L.structure_constants()
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = 0
            for k, c in sc.get((min(i, j), max(i, j)), {}).items():
                # entry (i, j) is <[e_j, e_i], z>
                sign = 1 if j < i else -1
                acc = acc + sign * c * z[k]
            row.append(acc)
        rows.append(row)
    return Matrix(rows, ncols=n)


def two_step_split(L: LieAlgebra) -> tuple[int, int]:
    """(n1, n2) for a 2-step algebra whose derived algebra is the last n2 coordinates."""
    t = type_of(L)
    if len(t) != 2 or not conforms_to_series_basis(L):
        raise LieAlgebraError(f"algebra of type {t} is not 2-step under the fixed basis split")
    return t


def jz_matrix(L: LieAlgebra, z: Sequence) -> Matrix:
    """J_z restricted to V = span of the first n1 basis vectors.

    ``z`` holds coordinates in the derived algebra (length n2); entries may
    be numbers or polynomials.
    """
    n1, n2 = two_step_split(L)
    if len(z) != n2:
        raise ValueError(f"expected {n2} coordinates for the derived algebra, got {len(z)}")
    full = [Fraction(0)] * n1 + list(z)
    return j_matrix(L, full).submatrix(range(n1), range(n1))


# -- direct sums and base change ---------------------------------------------------


def direct_sum_positions(L1: LieAlgebra, L2: LieAlgebra) -> tuple[list[int], list[int]]:
    """Where each basis vector of L1 and L2 lands in direct_sum(L1, L2).

    When both summands have series-adapted bases the sum interleaves by
    layer so its basis is series-adapted too; otherwise L2 follows L1.
    """
    if conforms_to_series_basis(L1) and conforms_to_series_basis(L2):
        lay1, lay2 = layer_of_basis(L1), layer_of_basis(L2)
        tagged = [(t, 0, i) for i, t in enumerate(lay1)] + [(t, 1, i) for i, t in enumerate(lay2)]
        tagged.sort()
        pos1, pos2 = [0] * L1.dim, [0] * L2.dim
        for p, (_, which, i) in enumerate(tagged):
            (pos1 if which == 0 else pos2)[i] = p
        return pos1, pos2
    return list(range(L1.dim)), [L1.dim + i for i in range(L2.dim)]


def direct_sum(L1: LieAlgebra, L2: LieAlgebra) -> LieAlgebra:
    pos1, pos2 = direct_sum_positions(L1, L2)
    brackets = {}
    for L, pos in ((L1, pos1), (L2, pos2)):
        for (i, j), terms in L.structure_constants().items():
            brackets[(pos[i], pos[j])] = {pos[k]: c for k, c in terms.items()}
    n = L1.dim + L2.dim
    out = LieAlgebra(n, brackets, check=False)
    try:
        names = standard_names(type_of(out)) if conforms_to_series_basis(out) else None
    except NotNilpotentError:
        names = None
    if names is None:
        names = [f"e{i + 1}" for i in range(n)]
    return out.renamed(names)


def direct_sum_map(L1: LieAlgebra, L2: LieAlgebra, A1: Matrix, A2: Matrix) -> Matrix:
    """The block map A1 + A2 written in the basis of direct_sum(L1, L2)."""
    pos1, pos2 = direct_sum_positions(L1, L2)
    n = L1.dim + L2.dim
    out = [[Fraction(0)] * n for _ in range(n)]
    for A, pos in ((A1, pos1), (A2, pos2)):
        for i in range(A.nrows):
            for j in range(A.ncols):
                out[pos[i]][pos[j]] = A[i, j]
    return Matrix(out, ncols=n)


def change_basis(L: LieAlgebra, P: Matrix, names: Sequence[str] | None = None) -> LieAlgebra:
    """Structure constants in the basis formed by the columns of P."""
    if P.shape != (L.dim, L.dim):
        raise ValueError(f"base change must be {L.dim}x{L.dim}")
    inv = P.inverse()
    cols = P.columns()
    brackets = {}
    for i in range(L.dim):
        for j in range(i + 1, L.dim):
            coords = inv @ L.bracket(cols[i], cols[j])
            terms = {k: c for k, c in enumerate(coords) if c != 0}
            if terms:
                brackets[(i, j)] = _rational_terms(terms)
    return LieAlgebra(L.dim, brackets, names if names is not None else L.names, check=False)


def _rational_terms(terms):
    out = {}
    for k, c in terms.items():
        if not isinstance(c, Fraction):
            if hasattr(c, "is_rational") and c.is_rational():
                c = c.to_fraction()
            else:
                raise LieAlgebraError(f"structure constant {c} is not rational")
        out[k] = c
    return out


def is_homomorphism(L1: LieAlgebra, L2: LieAlgebra, A: Matrix) -> bool:
    """A[e_i, e_j] = [A e_i, A e_j] for all basis pairs; A maps L1 coordinates to L2."""
    if A.shape != (L2.dim, L1.dim):
        raise ValueError(f"map of shape {A.shape} does not go from dim {L1.dim} to dim {L2.dim}")
    cols = A.columns()
    for i in range(L1.dim):
        for j in range(i + 1, L1.dim):
            if A @ L1.basis_bracket(i, j) != L2.bracket(cols[i], cols[j]):
                return False
    return True


def _invertible(A: Matrix) -> bool:
    return A.is_square() and A.det() != 0


def is_isomorphism(L1: LieAlgebra, L2: LieAlgebra, A: Matrix) -> bool:
    return L1.dim == L2.dim and _invertible(A) and is_homomorphism(L1, L2, A)


def is_isomorphism_via_j(L1: LieAlgebra, L2: LieAlgebra, A: Matrix) -> bool:
    """Same question answered through A^t J'_Z A = J_(A^t Z) for Z in a basis of L2."""
    if L1.dim != L2.dim or A.shape != (L2.dim, L1.dim):
        raise ValueError("dimension mismatch")
    if not _invertible(A):
        return False
    At = A.transpose()
    for l in range(L2.dim):
        z = _unit(L2.dim, l)
        if At @ j_matrix(L2, z) @ A != j_matrix(L1, At @ z):
            return False
    return True


# -- abelian factors -------------------------------------------------------------


@dataclass(frozen=True)
class AbelianFactor:
    """L = reduced (+) Q^m, with base_change turning L into direct_sum(reduced, abelian(m))."""

    reduced: LieAlgebra
    m: int
    complement: Subspace
    base_change: Matrix


def max_abelian_factor(L: LieAlgebra) -> AbelianFactor:
    cs = characteristic_subspaces(L)
    n = L.dim
    z1 = cs.center_cap_derived
    span = z1
    a_vecs = []
    for v in cs.center.basis:
        if not span.contains(v):
            a_vecs.append(v)
            span = span + Subspace(n, [v])
    complement = Subspace(n, a_vecs)
    m = len(a_vecs)
    # an ideal complementary to a: [L, L] plus greedy standard basis vectors
    derived_basis = list(cs.derived.basis)
    span = Subspace(n, derived_basis + a_vecs)
    extras = []
    for i in range(n):
        e = _unit(n, i)
        if not span.contains(e):
            extras.append(e)
            span = span + Subspace(n, [e])
    reduced_basis = extras + derived_basis
    P0 = Matrix.from_columns(reduced_basis + a_vecs) if n else Matrix([])
    stacked = change_basis(L, P0) if n else L
    d = len(reduced_basis)
    reduced = stacked.restrict(range(d))
    # keep original names when the reduced basis is a set of standard vectors
    if all(sum(1 for x in v if x) == 1 and max(v) == 1 for v in reduced_basis):
        reduced = reduced.renamed([L.names[v.index(Fraction(1))] for v in reduced_basis])
    ab = abelian(m)
    pos1, pos2 = direct_sum_positions(reduced, ab)
    cols = [None] * n
    for i, v in enumerate(reduced_basis):
        cols[pos1[i]] = v
    for i, v in enumerate(a_vecs):
        cols[pos2[i]] = v
    P = Matrix.from_columns(cols) if n else Matrix([])
    return AbelianFactor(reduced, m, complement, P)
