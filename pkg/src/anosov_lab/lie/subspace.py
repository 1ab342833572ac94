"""Subspaces of Q^n in canonical reduced row-echelon form."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..exact import Matrix


class Subspace:
    """Subspace of Q^n stored by its RREF basis, so equal subspaces compare equal."""

    __slots__ = ("_n", "_basis", "_pivots")

    def __init__(self, ambient: int, vectors: Iterable[Sequence] = ()):
        vecs = [tuple(Fraction(x) for x in v) for v in vectors]
        if any(len(v) != ambient for v in vecs):
            raise ValueError("vector length does not match the ambient dimension")
        self._n = ambient
        if vecs:
            red, pivots = Matrix(vecs).rref()
            self._basis = tuple(red.row(i) for i in range(len(pivots)))
            self._pivots = tuple(pivots)
        else:
            self._basis = ()
            self._pivots = ()

    @classmethod
    def whole(cls, n: int) -> "Subspace":
        return cls(n, [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)])

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        return cls(n, [tuple(Fraction(int(i == j)) for j in range(n)) for i in indices])

    @property
    def ambient(self) -> int:
        return self._n

    @property
    def basis(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._basis

    @property
    def pivots(self) -> tuple[int, ...]:
        return self._pivots

    @property
    def dim(self) -> int:
        return len(self._basis)

    def contains(self, v: Sequence) -> bool:
        return Subspace(self._n, self._basis + (tuple(v),)).dim == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return (self + other).dim == self.dim

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self._n, self._basis + other._basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        if not self._basis or not other._basis:
            return Subspace(self._n)
        # solve sum a_i u_i - sum b_j w_j = 0
        cols = list(self._basis) + [tuple(-x for x in w) for w in other._basis]
        kernel = Matrix.from_columns(cols).kernel()
        d = self.dim
        vecs = []
        for sol in kernel:
            v = [Fraction(0)] * self._n
            for a, u in zip(sol[:d], self._basis):
                if a:
                    for t in range(self._n):
                        v[t] += a * u[t]
            vecs.append(v)
        return Subspace(self._n, vecs)

    def is_coordinate(self) -> bool:
        """True when spanned by standard basis vectors."""
        return all(sum(1 for x in v if x) == 1 for v in self._basis)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self._n == other._n and self._basis == other._basis

    def __hash__(self):
        return hash((self._n, self._basis))

    def __repr__(self):
        return f"Subspace(ambient={self._n}, dim={self.dim})"
