"""Named rational nilpotent Lie algebras and their direct sums.

Names: ``h3``, ``h5``, ... (Heisenberg), ``f3``, ``g``, ``h``, ``l4``,
``h3h5``, ``n_k``, ``h_k``, ``l_k`` and ``abelian(n)``.  Parametrized names
take k from the ``k`` argument or inline, as in ``n_k(3)``.  Direct sums are
written ``name+name+abelian(m)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from ..exact import is_square_free
from ..lie import LieAlgebra, abelian, direct_sum


class CatalogError(ValueError):
    """Unknown catalog name or invalid parameter."""


def _names(n1: int, n2: int) -> list[str]:
    return [f"X{i + 1}" for i in range(n1)] + [f"Z{i + 1}" for i in range(n2)]


def _build(n1: int, n2: int, rules: list[tuple[str, str, dict[str, int]]]) -> LieAlgebra:
    names = _names(n1, n2)
    idx = {nm: i for i, nm in enumerate(names)}
    brackets = {(idx[a], idx[b]): {idx[t]: c for t, c in rhs.items()} for a, b, rhs in rules}
    return LieAlgebra(n1 + n2, brackets, names)


def heisenberg(dim: int) -> LieAlgebra:
    if dim < 3 or dim % 2 == 0:
        raise CatalogError(f"Heisenberg algebras have odd dimension >= 3, got {dim}")
    m = (dim - 1) // 2
    return _build(2 * m, 1, [(f"X{2 * i + 1}", f"X{2 * i + 2}", {"Z1": 1}) for i in range(m)])


def free_3() -> LieAlgebra:
    return _build(3, 3, [("X1", "X2", {"Z1": 1}), ("X1", "X3", {"Z2": 1}), ("X2", "X3", {"Z3": 1})])


def g_algebra() -> LieAlgebra:
    return _build(6, 2, [
        ("X1", "X2", {"Z1": 1}), ("X1", "X3", {"Z2": 1}),
        ("X4", "X5", {"Z1": 1}), ("X4", "X6", {"Z2": 1}),
    ])


def h_algebra() -> LieAlgebra:
    return _build(4, 4, [
        ("X1", "X3", {"Z1": 1}), ("X1", "X4", {"Z2": 1}),
        ("X2", "X3", {"Z3": 1}), ("X2", "X4", {"Z4": 1}),
    ])


def l4() -> LieAlgebra:
    return LieAlgebra(4, {(0, 1): {2: 1}, (0, 2): {3: 1}}, ["X1", "X2", "X3", "X4"])


def h3h5() -> LieAlgebra:
    return _build(6, 2, [("X1", "X2", {"Z1": 1}), ("X3", "X4", {"Z2": 1}), ("X5", "X6", {"Z2": 1})])


def n_k(k: int) -> LieAlgebra:
    return _build(4, 2, [
        ("X1", "X3", {"Z1": 1}), ("X1", "X4", {"Z2": 1}),
        ("X2", "X3", {"Z2": k}), ("X2", "X4", {"Z1": 1}),
    ])


def h_k(k: int) -> LieAlgebra:
    return _build(4, 4, [
        ("X1", "X2", {"Z1": 1}), ("X1", "X3", {"Z2": 1}), ("X1", "X4", {"Z3": k}),
        ("X2", "X3", {"Z3": -1}), ("X2", "X4", {"Z2": -1}), ("X3", "X4", {"Z4": 1}),
    ])


def l_k(k: int) -> LieAlgebra:
    """Defined for every integer k; only square-free k are catalog representatives."""
    return _build(4, 4, [
        ("X1", "X3", {"Z1": 1}), ("X1", "X4", {"Z2": 1}),
        ("X2", "X3", {"Z2": 1}), ("X2", "X4", {"Z1": k}),
        ("X1", "Z1", {"Z3": 1}), ("X1", "Z2", {"Z4": 1}),
        ("X2", "Z1", {"Z4": 1}), ("X2", "Z2", {"Z3": k}),
    ])


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    parameter_domain: str
    type: str
    expected_status: str
    builder: Callable[..., LieAlgebra]

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "parameter_domain": self.parameter_domain,
            "type": self.type,
            "expected_status": self.expected_status,
        }


CATALOG: tuple[CatalogEntry, ...] = (
    CatalogEntry("h(2m+1)", "m >= 1, spelled h3, h5, ...", "(2m,1)", "not Anosov", heisenberg),
    CatalogEntry("f3", "none", "(3,3)", "Anosov", free_3),
    CatalogEntry("g", "none", "(6,2)", "Anosov", g_algebra),
    CatalogEntry("h", "none", "(4,4)", "Anosov", h_algebra),
    CatalogEntry("l4", "none", "(2,1,1)", "not Anosov", l4),
    CatalogEntry("h3h5", "none", "(6,2)", "not Anosov", h3h5),
    CatalogEntry("n_k", "square-free integer k", "(4,2)", "Anosov iff k >= 2", n_k),
    CatalogEntry("h_k", "square-free integer k != 0", "(4,4)", "Anosov iff k >= 1", h_k),
    CatalogEntry("l_k", "square-free integer k != 0", "(4,2,2)", "Anosov iff k >= 2", l_k),
    CatalogEntry("abelian(n)", "n >= 1", "(n)", "Anosov iff n >= 2", abelian),
)


def catalog_index() -> list[dict]:
    return [e.to_json() for e in CATALOG]


_FIXED = {"f3": free_3, "g": g_algebra, "h": h_algebra, "l4": l4, "h3h5": h3h5}
_FAMILIES = {"n_k": n_k, "h_k": h_k, "l_k": l_k}


def _check_k(family: str, k) -> int:
    if k is None:
        raise CatalogError(f"{family} needs a parameter k")
    if not isinstance(k, int) or isinstance(k, bool):
        raise CatalogError(f"k must be an integer, got {k!r}")
    if not is_square_free(k):
        raise CatalogError(f"k must be square-free, got {k}")
    if family in ("h_k", "l_k") and k == 0:
        raise CatalogError(f"{family} needs k != 0")
    return k


def _single(token: str, k: int | None) -> LieAlgebra:
    token = token.strip()
    if token in _FIXED:
        return _FIXED[token]()
    m = re.fullmatch(r"h(\d+)", token)
    if m:
        return heisenberg(int(m.group(1)))
    m = re.fullmatch(r"abelian\((\d+)\)", token)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise CatalogError("abelian(n) needs n >= 1")
        return abelian(n)
    m = re.fullmatch(r"([nhl]_k)(?:\((-?\d+)\))?", token)
    if m:
        family = m.group(1)
        kk = int(m.group(2)) if m.group(2) is not None else k
        return _FAMILIES[family](_check_k(family, kk))
    raise CatalogError(f"unknown catalog name {token!r}")


def catalog(name: str, k: int | None = None) -> LieAlgebra:
    """Build a catalog algebra or a '+'-separated direct sum of them."""
    parts = [p for p in name.split("+")]
    if not parts or any(not p.strip() for p in parts):
        raise CatalogError(f"malformed catalog name {name!r}")
    out = _single(parts[0], k)
    for p in parts[1:]:
        out = direct_sum(out, _single(p, k))
    return out

