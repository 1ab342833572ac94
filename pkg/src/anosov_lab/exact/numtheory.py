"""Integer number theory: square-free parts, Pell equations, primality."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

TRIAL_DIVISION_LIMIT = 10**6


def square_free_part(n: int) -> tuple[int, int]:
    """Split n as q^2 * k with k square-free and q > 0.

    ``square_free_part(0)`` is ``(0, 1)``.  The sign of n stays on k.
    Trial division runs up to 10**6; a leftover cofactor that could still
    hide a square factor raises ``ArithmeticError``.
    """
    if n == 0:
        return 0, 1
    sign = -1 if n < 0 else 1
    m = abs(n)
    k, q = 1, 1
    d = 2
    while d * d <= m and d <= TRIAL_DIVISION_LIMIT:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            q *= d ** (e // 2)
            if e % 2:
                k *= d
        d += 1 if d == 2 else 2
    if m > 1:
        # m has no prime factor <= d, so below d**3 it is p, p*q or p**2
        r = isqrt(m)
        if r * r == m:
            q *= r
        elif m < d**3:
            k *= m
        else:
            raise ArithmeticError(
                f"cannot certify the square-free part of {n}: cofactor {m} "
                "exceeds the trial-division range"
            )
    return sign * k, q


def is_square_free(n: int) -> bool:
    return square_free_part(n)[1] == 1


def rational_square_class(r: Fraction) -> int:
    """Square-free integer representing r modulo nonzero rational squares."""
    r = Fraction(r)
    return square_free_part(r.numerator * r.denominator)[0]


def pell_fundamental(k: int) -> tuple[int, int]:
    """Smallest positive solution (a, b) of a^2 - k b^2 = 1.

    Walks the periodic continued fraction of sqrt(k) and stops at the first
    convergent solving the equation.
    """
    if not isinstance(k, int) or k <= 1:
        raise ValueError(f"Pell equation needs an integer k > 1, got {k!r}")
    if not is_square_free(k):
        raise ValueError(f"k must be square-free, got {k}")
    a0 = isqrt(k)
    m, d, a = 0, 1, a0
    h_prev, h = 1, a0
    g_prev, g = 0, 1
    while h * h - k * g * g != 1:
        m = d * a - m
        d = (k - m * m) // d
        a = (a0 + m) // d
        h_prev, h = h, a * h + h_prev
        g_prev, g = g, a * g + g_prev
    return h, g


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin with the first 13 prime bases.

    Deterministic below 3.3e24; beyond that the error probability is
    negligible for the moduli chosen here.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def next_prime(n: int) -> int:
    """Smallest probable prime strictly greater than n."""
    c = max(n + 1, 2)
    if c > 2 and c % 2 == 0:
        c += 1
    while not is_probable_prime(c):
        c += 1 if c == 2 else 2
    return c
