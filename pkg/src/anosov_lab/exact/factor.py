"""Factorization of integer polynomials.

Square-free decomposition over Q, then big-prime Zassenhaus: factor modulo
a prime larger than twice the Mignotte bound with Cantor-Zassenhaus, and
recombine modular factors by exact trial division over Z.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from itertools import combinations
from math import isqrt

from .numtheory import next_prime
from .unipoly import UniPoly, square_free_decomposition

DEFAULT_MAX_DEGREE = 12


class UnsupportedDegreeError(ValueError):
    """Polynomial degree above the configured factorization bound."""


def max_factor_degree() -> int:
    raw = os.environ.get("ANOSOV_MAX_FACTOR_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"ANOSOV_MAX_FACTOR_DEGREE must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("ANOSOV_MAX_FACTOR_DEGREE must be positive")
    return value


@dataclass(frozen=True)
class Factorization:
    """content * prod(f**e for f, e in factors), factors primitive with positive leading coefficient."""

    content: int
    factors: tuple[tuple[UniPoly, int], ...]

    def expand(self) -> UniPoly:
        out = UniPoly((self.content,))
        for f, e in self.factors:
            out = out * f**e
        return out


# -- arithmetic in F_p[x], lists of ints low to high -------------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _mod_p(a, p):
    return _trim([x % p for x in a])


def _sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _mod_p(out, p)


def _divmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    q = [0] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv % p
        if c:
            q[i - db] = c
            for j, y in enumerate(b):
                a[i - db + j] = (a[i - db + j] - c * y) % p
    return _trim(q), _trim(a[:db])


def _monic(a, p):
    inv = pow(a[-1], -1, p)
    return [x * inv % p for x in a]


def _gcd(a, b, p):
    while b:
        a, b = b, _divmod(a, b, p)[1]
    return _monic(a, p) if a else a


def _powmod(base, e, mod, p):
    result = [1]
    base = _divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _divmod(_mul(result, base, p), mod, p)[1]
        base = _divmod(_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _derivative(a, p):
    return _trim([i * x % p for i, x in enumerate(a)][1:])


def _distinct_degree(f, p):
    """Pairs (g, d): g is the product of the degree-d irreducible factors of monic square-free f."""
    out = []
    h = [0, 1]
    d = 0
    rest = f
    while len(rest) - 1 >= 2 * (d + 1):
        d += 1
        h = _powmod(h, p, rest, p)
        g = _gcd(rest, _sub(h, [0, 1], p), p)
        if len(g) > 1:
            out.append((g, d))
            rest = _divmod(rest, g, p)[0]
            h = _divmod(h, rest, p)[1]
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def _equal_degree(f, d, p, rng):
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        b = _sub(_powmod(a, (p**d - 1) // 2, f, p), [1], p)
        g = _gcd(f, b, p)
        if 1 < len(g) < len(f):
            other = _divmod(f, g, p)[0]
            return _equal_degree(g, d, p, rng) + _equal_degree(_monic(other, p), d, p, rng)


def _factor_mod_p(f, p, seed=0):
    rng = random.Random(seed)
    out = []
    for g, d in _distinct_degree(_monic(f, p), p):
        out.extend(_equal_degree(g, d, p, rng))
    return out


# -- lifting back to Z ---------------------------------------------------------


def _symmetric(a, p):
    half = p // 2
    return [x - p if x > half else x for x in a]


def _choose_prime(f: list[int]) -> int:
    n = len(f) - 1
    norm2 = isqrt(sum(c * c for c in f)) + 1
    bound = 2 * abs(f[-1]) * (2**n) * norm2
    p = next_prime(bound)
    while True:
        fp = _mod_p(f, p)
        if len(fp) == len(f) and len(_gcd(fp, _derivative(fp, p), p)) == 1:
            return p
        p = next_prime(p)


def _factor_square_free_primitive(f: UniPoly) -> list[UniPoly]:
    if f.degree <= 1:
        return [f]
    coeffs = f.int_coeffs()
    p = _choose_prime(coeffs)
    modular = _factor_mod_p(_mod_p(coeffs, p), p)
    if len(modular) == 1:
        return [f]
    found: list[UniPoly] = []
    rest = f
    size = 1
    while 2 * size <= len(modular):
        hit = None
        lc = rest.int_coeffs()[-1]
        for subset in combinations(range(len(modular)), size):
            cand = [lc % p]
            for i in subset:
                cand = _mul(cand, modular[i], p)
            g = UniPoly(_symmetric(cand, p)).primitive()
            q, r = divmod(rest, g)
            if r.is_zero() and q.is_integral():
                hit = subset
                found.append(g)
                rest = q.primitive()
                break
        if hit is None:
            size += 1
        else:
            modular = [m for i, m in enumerate(modular) if i not in hit]
    found.append(rest.primitive())
    return found


def factor_over_Z(p: UniPoly) -> Factorization:
    """Irreducible factorization of an integer polynomial.

    Degrees above ``max_factor_degree()`` (12 unless the
    ``ANOSOV_MAX_FACTOR_DEGREE`` variable says otherwise) are refused.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if not p.is_integral():
        raise ValueError(f"{p} does not have integer coefficients")
    bound = max_factor_degree()
    if p.degree > bound:
        raise UnsupportedDegreeError(f"degree {p.degree} exceeds the factorization bound {bound}")
    prim = p.primitive()
    content = int(p.lc / prim.lc)
    factors: list[tuple[UniPoly, int]] = []
    for part, mult in square_free_decomposition(prim):
        for g in _factor_square_free_primitive(part.primitive()):
            factors.append((g, mult))
    factors.sort(key=lambda fe: (fe[0].degree, [int(c) for c in fe[0].coeffs], fe[1]))
    out = Factorization(content, tuple(factors))
    assert out.expand() == p
    return out


def is_irreducible(p: UniPoly) -> bool:
    fac = factor_over_Z(p.primitive())
    return len(fac.factors) == 1 and fac.factors[0][1] == 1
