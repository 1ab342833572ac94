"""Exact real-root counting: Sturm sequences, Cauchy indices, unit-disk counts.

Interval endpoints are Fractions or the float sentinels ``-math.inf`` and
``math.inf``; the sentinels are only compared, never used in arithmetic.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .unipoly import UniPoly, poly_gcd

NEG_INF = -math.inf
POS_INF = math.inf


class RootOnCircleError(ArithmeticError):
    """A polynomial handed to the unit-disk count has a root of modulus one."""


def _sign_at(p: UniPoly, x) -> int:
    if x == POS_INF:
        s = p.lc
    elif x == NEG_INF:
        s = p.lc if p.degree % 2 == 0 else -p.lc
    else:
        s = p(Fraction(x))
    return (s > 0) - (s < 0)


def sign_variations(seq: list[UniPoly], x) -> int:
    signs = [s for s in (_sign_at(p, x) for p in seq) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def signed_remainder_sequence(f0: UniPoly, f1: UniPoly) -> list[UniPoly]:
    """f0, f1, -rem(f0, f1), ... down to the last nonzero term."""
    seq = [f0, f1]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def sturm_sequence(p: UniPoly) -> list[UniPoly]:
    return signed_remainder_sequence(p, p.derivative())


def sturm_real_root_count(p: UniPoly, lo=NEG_INF, hi=POS_INF) -> int:
    """Number of distinct real roots of p in the open interval (lo, hi)."""
    if p.is_zero():
        raise ValueError("the zero polynomial has infinitely many roots")
    if lo != NEG_INF and hi != POS_INF and Fraction(lo) >= Fraction(hi):
        return 0
    q = p.square_free()
    if q.degree <= 0:
        return 0
    # strip rational roots sitting on the endpoints so the count is for the open interval
    for end in (lo, hi):
        if end not in (NEG_INF, POS_INF) and q(Fraction(end)) == 0:
            q = q.exact_div(UniPoly((-Fraction(end), 1)))
    if q.degree <= 0:
        return 0
    seq = sturm_sequence(q)
    return sign_variations(seq, lo) - sign_variations(seq, hi)


def sturm_closed_count(p: UniPoly, lo, hi) -> int:
    """Distinct real roots of p in the closed interval [lo, hi] (finite endpoints)."""
    q = p.square_free()
    lo, hi = Fraction(lo), Fraction(hi)
    inside = sturm_real_root_count(q, lo, hi)
    ends = sum(1 for e in {lo, hi} if q(e) == 0)
    return inside + ends


def cauchy_index(num: UniPoly, den: UniPoly) -> int:
    """Cauchy index of num/den over the whole real line."""
    if den.is_zero():
        raise ValueError("zero denominator")
    if num.is_zero():
        return 0
    seq = signed_remainder_sequence(den, num)
    return sign_variations(seq, NEG_INF) - sign_variations(seq, POS_INF)


def _cayley(p: UniPoly) -> UniPoly:
    """(1-w)^n p((1+w)/(1-w)): maps the unit disk to the left half-plane."""
    n = p.degree
    plus, minus = UniPoly((1, 1)), UniPoly((1, -1))
    out = UniPoly()
    for k, a in enumerate(p.coeffs):
        if a:
            out = out + a * plus**k * minus ** (n - k)
    return out


def _split_on_imaginary_axis(q: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Real polynomials R, I with q(iy) = R(y) + i I(y)."""
    real, imag = [Fraction(0)] * len(q.coeffs), [Fraction(0)] * len(q.coeffs)
    for k, a in enumerate(q.coeffs):
        # i^k cycles through 1, i, -1, -i
        r = k % 4
        if r == 0:
            real[k] = a
        elif r == 1:
            imag[k] = a
        elif r == 2:
            real[k] = -a
        else:
            imag[k] = -a
    return UniPoly(real), UniPoly(imag)


def count_roots_inside_unit_disk(p: UniPoly) -> int:
    """Roots of p (with multiplicity) of modulus strictly below one.

    The Cayley transform sends the open unit disk to the open left
    half-plane; the Routh-Hurwitz count there comes from one Cauchy index
    along the imaginary axis.  Roots on the unit circle are detected and
    reported as ``RootOnCircleError`` instead of a count.
    """
    if p.is_zero():
        raise ValueError("the zero polynomial has no finite root count")
    n = p.degree
    if n == 0:
        return 0
    if p(Fraction(-1)) == 0:
        raise RootOnCircleError(f"{p} vanishes at -1")
    q = _cayley(p)
    assert q.degree == n
    real, imag = _split_on_imaginary_axis(q)
    common = poly_gcd(real, imag) if not imag.is_zero() else real.monic()
    if common.degree > 0 and sturm_real_root_count(common) > 0:
        raise RootOnCircleError(f"{p} has a root on the unit circle")
    if n % 2 == 0:
        diff = -cauchy_index(imag, real)
    else:
        diff = cauchy_index(real, imag)
    left = (n + diff) // 2
    assert (n + diff) % 2 == 0
    return left


schur_cohn_inside_unit_disk = count_roots_inside_unit_disk
