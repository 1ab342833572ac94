"""Anosov automorphisms on s copies of a graded algebra.

Take a graded rational algebra and an integer matrix B in GL_s(Z) with
real eigenvalues off the unit circle.  On the real tensor product with R^s,
the eigenbasis of B splits the sum into s copies; the copy for eigenvalue
lambda is scaled by lambda^d on the weight-d part.  Writing each copy in
the basis 1, lambda, ..., lambda^(s-1) turns both the bracket and the
automorphism rational: products lambda^(t+u) reduce modulo the
characteristic polynomial of B, and the automorphism acts on weight d by
the d-th power of the companion matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..certify import is_hyperbolic
from ..exact import Matrix, UniPoly, companion, sturm_real_root_count
from ..lie import LieAlgebra, layer_of_basis


class GradedSumError(ValueError):
    """Preconditions of the graded-sum construction fail."""


@dataclass(frozen=True)
class Gradation:
    weights: tuple[int, ...]

    def validate(self, L: LieAlgebra) -> None:
        if len(self.weights) != L.dim:
            raise GradedSumError(f"gradation has {len(self.weights)} weights for dimension {L.dim}")
        if any(not isinstance(d, int) or d <= 0 for d in self.weights):
            raise GradedSumError("weights must be positive integers")
        for (i, j), terms in L.structure_constants().items():
            for k in terms:
                if self.weights[i] + self.weights[j] != self.weights[k]:
                    raise GradedSumError(
                        f"[{L.names[i]}, {L.names[j]}] has a {L.names[k]} component but "
                        f"{self.weights[i]} + {self.weights[j]} != {self.weights[k]}"
                    )


def default_gradation(L: LieAlgebra) -> Gradation:
    """Weight of each basis vector = its layer in the lower central series."""
    grad = Gradation(tuple(layer_of_basis(L)))
    grad.validate(L)
    return grad


@dataclass(frozen=True)
class GradedSum:
    algebra: LieAlgebra
    automorphism: Matrix
    charpoly: UniPoly
    copies: int
    description: str


def graded_sum(L: LieAlgebra, grading: Gradation | Sequence[int] | None, B: Matrix) -> GradedSum:
    """Rational algebra and Anosov automorphism on s = size(B) copies of L.

    Basis vector (i, t) = X_i * lambda^t sits at position i*s + t.  With no
    grading the layers of the lower central series are used.
    """
    if grading is None:
        grad = default_gradation(L)
    else:
        grad = grading if isinstance(grading, Gradation) else Gradation(tuple(grading))
    grad.validate(L)
    if not L.is_integral():
        raise GradedSumError("structure constants must be integers")
    if not B.is_square():
        raise GradedSumError("B must be square")
    s = B.nrows
    if s < 2:
        raise GradedSumError("need at least two copies (B of size s >= 2)")
    if not B.is_integral() or B.det() not in (1, -1):
        raise GradedSumError("B must be an integer matrix with determinant +-1")
    p = B.charpoly()
    if not p.is_square_free():
        raise GradedSumError(f"charpoly {p} of B has repeated roots")
    if sturm_real_root_count(p) != s:
        raise GradedSumError(f"charpoly {p} of B has non-real roots")
    if not is_hyperbolic(B):
        raise GradedSumError("B has an eigenvalue +-1")

    x = UniPoly.x()
    powers = [(x**e % p).coeffs for e in range(2 * s - 1)]
    n = L.dim
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    sc = L.structure_constants()
    for i in range(n):
        for j in range(i, n):
            terms = sc.get((i, j))
            if not terms:
                continue
            for t in range(s):
                for u in range(s):
                    a, b = i * s + t, j * s + u
                    if a == b:
                        continue
                    red = powers[t + u]
                    out: dict[int, Fraction] = {}
                    for k, c in terms.items():
                        for v, coef in enumerate(red):
                            if coef:
                                out[k * s + v] = out.get(k * s + v, Fraction(0)) + c * coef
                    if a > b:
                        a, b = b, a
                        out = {key: -val for key, val in out.items()}
                    slot = brackets.setdefault((a, b), {})
                    for key, val in out.items():
                        slot[key] = slot.get(key, Fraction(0)) + val
    names = [f"{L.names[i]}.{t}" for i in range(n) for t in range(s)]
    algebra = LieAlgebra(n * s, brackets, names)
    comp = Matrix(companion(p))
    blocks = [comp ** grad.weights[i] for i in range(n)]
    A = Matrix.block_diag(*blocks)
    desc = (
        f"{s} copies of a {n}-dimensional algebra; basis X_i*lambda^t with lambda a root of {p}; "
        f"automorphism acts on weight d by the d-th power of the companion matrix"
    )
    return GradedSum(algebra, A, p, s, desc)
