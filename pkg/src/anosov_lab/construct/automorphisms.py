"""Explicit Anosov automorphisms for the catalog algebras.

Most maps are built on a split real algebra, where a diagonal or block
action is easy to write down, and then transported to the rational form
through the sqrt k witness basis.  The transport lands in GL_n(Q) because
the ambient map commutes with the Galois twist that swaps the two halves.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..certify import ObstructionReport, Verdict, enumerate_norm_one
from ..exact import Matrix, QuadFieldElement, UniPoly, companion, is_square_free, pell_fundamental, sqrt_of_integer
from ..lie import LieAlgebra, change_basis, direct_sum, direct_sum_map
from .catalog import free_3, g_algebra, h_k, l_k, n_k
from .witness import transport


class ConstructionError(ValueError):
    """Preconditions of an explicit construction fail."""


@dataclass(frozen=True)
class Construction:
    algebra: LieAlgebra
    automorphism: Matrix
    parameters: dict
    note: str = ""


@dataclass(frozen=True)
class NotAnosov:
    """Explicit negative outcome carrying the obstruction that proves it."""

    algebra: LieAlgebra
    reason: str
    obstruction: ObstructionReport
    verdict: Verdict = Verdict.OBSTRUCTED


def _pell(k: int) -> tuple[int, int]:
    if k < 2 or not is_square_free(k):
        raise ConstructionError(f"need a square-free k >= 2, got {k}")
    return pell_fundamental(k)


# -- n_k ------------------------------------------------------------------------------


def nk_automorphism(k: int) -> Construction:
    """Scale one h3 copy by the Pell unit lambda (weights 1, 1, 2) and the other by its conjugate."""
    a, b = _pell(k)
    lam = QuadFieldElement(a, b, k)
    bar = lam.conjugate()
    ambient_map = Matrix.diagonal([lam, lam, bar, bar, lam * lam, bar * bar])
    A = transport("h3h3", QuadFieldElement.sqrt(k), ambient_map)
    return Construction(n_k(k), A, {"k": k, "pell": [a, b]})


# -- h_k ------------------------------------------------------------------------------


def _hk_ambient_map(B: Matrix, C: Matrix) -> Matrix:
    return Matrix.block_diag(Matrix.block_diag(B, C), B.kron(C))


def hk_automorphism(k: int, a: int, b: int, n: int) -> Construction:
    """Automorphism of h_k from a Pell solution (a, b) and an integer n with n^2 > a + b sqrt k.

    On the split algebra h the map is diag(B, conj B) on generators and
    B (x) conj B on the center, with B = [[0, -a + b sqrt k], [1, 2n]].
    """
    if not isinstance(k, int) or k < 1 or not is_square_free(k):
        raise ConstructionError(f"k must be a positive square-free integer, got {k!r}")
    if a * a - k * b * b != 1:
        raise ConstructionError(f"({a}, {b}) does not solve x^2 - {k} y^2 = 1")
    if k == 1:
        root = Fraction(1)
        det_b = Fraction(a - b)
        bound = Fraction(a + b)
    else:
        root = QuadFieldElement.sqrt(k)
        det_b = QuadFieldElement(a, -b, k)
        bound = QuadFieldElement(a, b, k)
    gap = n * n - bound
    if (gap.sign() if isinstance(gap, QuadFieldElement) else (gap > 0) - (gap < 0)) <= 0:
        raise ConstructionError(f"need n^2 > a + b*sqrt({k}); n = {n} is too small")
    conj = det_b.conjugate() if isinstance(det_b, QuadFieldElement) else det_b
    B = Matrix([[0, -det_b], [1, 2 * n]])
    C = Matrix([[0, -conj], [1, 2 * n]])
    A = transport("h", root, _hk_ambient_map(B, C))
    return Construction(h_k(k), A, {"k": k, "a": a, "b": b, "n": n})


def hk_printed_blocks(k: int, a: int, b: int, n: int) -> tuple[Matrix, Matrix]:
    """The closed-form generator and center blocks of the h_k automorphism.

    The bottom-right center entry is 4n^2: that is what the transport
    produces and what the automorphism condition forces.
    """
    A1 = Matrix([[0, 0, b, -a], [0, 0, -a, k * b], [0, 1, 2 * n, 0], [1, 0, 0, 2 * n]])
    A2 = Matrix([
        [0, 0, 0, -1],
        [0, -a, b, 4 * n * a],
        [0, -b * k, a, 4 * n * b * k],
        [-1, -2 * n, 0, 4 * n * n],
    ])
    return A1, A2


def minimal_hk_n(k: int, a: int, b: int) -> int:
    """Smallest positive n with n^2 > a + b sqrt k."""
    n = 1
    while True:
        gap = n * n - a - (QuadFieldElement(0, b, k) if k > 1 else Fraction(b))
        if (gap.sign() if isinstance(gap, QuadFieldElement) else (gap > 0) - (gap < 0)) > 0:
            return n
        n += 1


def balanced_hk_n(k: int, a: int, b: int) -> int:
    """Smallest n with 2n - 1 > a + b sqrt k; from there on the signature is {4, 4}.

    Below that threshold both roots of the conjugate block exceed 1 and the
    map has three expanding and five contracting directions.
    """
    n = minimal_hk_n(k, a, b)
    while True:
        gap = 2 * n - 1 - a - (QuadFieldElement(0, b, k) if k > 1 else Fraction(b))
        if (gap.sign() if isinstance(gap, QuadFieldElement) else (gap > 0) - (gap < 0)) > 0:
            return n
        n += 1


# -- h with the base built from a >= 2 ------------------------------------------------------


def eq_h_split() -> LieAlgebra:
    """h written as [X1,X3] = Z1, [X2,X4] = Z2, [X2,X3] = Z3, [X1,X4] = Z4."""
    names = ["X1", "X2", "X3", "X4", "Z1", "Z2", "Z3", "Z4"]
    return LieAlgebra(8, {(0, 2): {4: 1}, (1, 3): {5: 1}, (1, 2): {6: 1}, (0, 3): {7: 1}}, names)


def _pair_basis(r) -> Matrix:
    cols = []
    for p, q in ((0, 1), (2, 3), (4, 5), (6, 7)):
        for coef in (None, r):
            v = [Fraction(0)] * 8
            if coef is None:
                v[p], v[q] = Fraction(1), Fraction(1)
            else:
                v[p], v[q] = coef, -coef
            cols.append(v)
    return Matrix.from_columns(cols)


def h1_base_automorphism(a: int) -> Construction:
    """Rational form of h with automorphism diag(B, B^2, B^3, B), B = [[a, a^2-1], [1, a]].

    The eigenvalue lambda = a + sqrt(a^2 - 1) acts on the split basis as
    (l, 1/l, l^2, 1/l^2) on generators and (l^3, 1/l^3, l, 1/l) on the center.
    """
    if not isinstance(a, int) or a < 2:
        raise ConstructionError(f"need an integer a >= 2, got {a!r}")
    m = a * a - 1
    r = sqrt_of_integer(m)
    lam = a + r
    inv = a - r
    split = eq_h_split()
    P = _pair_basis(r)
    diag = Matrix.diagonal([lam, inv, lam**2, inv**2, lam**3, inv**3, lam, inv])
    A = (P.inverse() @ diag @ P).to_rational()
    L = change_basis(split, P, names=split.names)
    return Construction(L, A, {"a": a, "m": m})


def h1_expected_blocks(a: int) -> Matrix:
    B = Matrix([[a, a * a - 1], [1, a]])
    return Matrix.block_diag(B, B**2, B**3, B)


# -- l_k ------------------------------------------------------------------------------


def lk_automorphism(k: int) -> Construction | NotAnosov:
    """Anosov automorphism of l_k for square-free k >= 2; l_1 gets an explicit negative.

    With (a, q) from the Pell equation a^2 - k q^2 = 1 and b = a^2 - 1,
    the map diag(B, B, B^2, B^3) is an automorphism of l_b (weights 1, 1,
    2, 3 on the pairs).  The rescaling by diag(1, q, 1, q, ...) carries l_b
    to l_k.
    """
    if k == 1:
        rep = ObstructionReport(
            "invariant-finite-set", {"k": 1},
            Verdict.OBSTRUCTED,
            {"equation": "z^2 - w^2 = 1", "solutions": [list(s) for s in enumerate_norm_one(1, 10**4)]},
            note="automorphisms scale z^2 - w^2, so they permute a finite set of integer points",
        )
        return NotAnosov(l_k(1), "NOT-ANOSOV: l_1 admits no hyperbolic automorphism", rep)
    a, q = _pell(k)
    b = a * a - 1
    B = Matrix([[a, b], [1, a]])
    A_b = Matrix.block_diag(B, B, B**2, B**3)
    D = Matrix.diagonal([1, q] * 4)
    A = D @ A_b @ D.inverse()
    return Construction(l_k(k), A, {"k": k, "a": a, "q": q, "b": b})


def lk_transported(k: int) -> Matrix:
    """Second route: act on the split l4 + l4 directly and transport through the sqrt k basis."""
    a, q = _pell(k)
    lam = QuadFieldElement(a, q, k)
    bar = lam.conjugate()
    diag = Matrix.diagonal([lam, bar, lam, bar, lam**2, bar**2, lam**3, bar**3])
    return transport("l4l4", QuadFieldElement.sqrt(k), diag)


# -- f3, g, abelian ---------------------------------------------------------------------


def exterior_square(A: Matrix) -> Matrix:
    """Action on X1^X2, X1^X3, X2^X3 induced by a 3x3 matrix."""
    pairs = [(0, 1), (0, 2), (1, 2)]
    return Matrix([[A[i, k] * A[j, l] - A[i, l] * A[j, k] for k, l in pairs] for i, j in pairs])


def f3_induced_automorphism(A1: Matrix) -> Construction:
    if A1.shape != (3, 3):
        raise ConstructionError("need a 3x3 matrix")
    if not A1.is_integral():
        raise ConstructionError("matrix must have integer entries")
    if A1.det() not in (1, -1):
        raise ConstructionError("matrix must have determinant +-1")
    return Construction(free_3(), Matrix.block_diag(A1, exterior_square(A1)), {})


def f3_default() -> Construction:
    x = UniPoly.x()
    return f3_induced_automorphism(Matrix(companion(x**3 - x - 1)))


def g_automorphism() -> Construction:
    """g is the contraction U x (U* (x) W) -> W; act by G on U, G^-T on U*, H on W."""
    G = Matrix([[2, 1], [1, 1]])
    H = Matrix([[3, 1], [2, 1]])
    Gd = G.inverse().T
    rows = [[Fraction(0)] * 8 for _ in range(8)]
    U = [0, 3]
    dual = [1, 2, 4, 5]
    K = Gd.kron(H)
    for i, p in enumerate(U):
        for j, q in enumerate(U):
            rows[p][q] = G[i, j]
    for i, p in enumerate(dual):
        for j, q in enumerate(dual):
            rows[p][q] = K[i, j]
    for i in range(2):
        for j in range(2):
            rows[6 + i][6 + j] = H[i, j]
    return Construction(g_algebra(), Matrix(rows), {})


def abelian_automorphism(n: int) -> Construction:
    """Blocks [[2,1],[1,1]], plus the companion of x^3 - x - 1 when n is odd."""
    from ..lie import abelian

    if n < 2:
        raise ConstructionError("Q^1 has no hyperbolic automorphism")
    cat = Matrix([[2, 1], [1, 1]])
    x = UniPoly.x()
    blocks = [cat] * (n // 2 - (n % 2))
    if n % 2:
        blocks.append(Matrix(companion(x**3 - x - 1)))
    return Construction(abelian(n), Matrix.block_diag(*blocks), {"n": n})


def with_abelian(c: Construction, m: int) -> Construction:
    """Extend a construction to the direct sum with Q^m."""
    ab = abelian_automorphism(m)
    L = direct_sum(c.algebra, ab.algebra)
    A = direct_sum_map(c.algebra, ab.algebra, c.automorphism, ab.automorphism)
    return Construction(L, A, {**c.parameters, "abelian": m}, c.note)


__all__ = [
    "Construction",
    "ConstructionError",
    "NotAnosov",
    "abelian_automorphism",
    "balanced_hk_n",
    "eq_h_split",
    "exterior_square",
    "f3_default",
    "f3_induced_automorphism",
    "g_automorphism",
    "h1_base_automorphism",
    "h1_expected_blocks",
    "hk_automorphism",
    "hk_printed_blocks",
    "lk_automorphism",
    "lk_transported",
    "minimal_hk_n",
    "nk_automorphism",
    "with_abelian",
]
