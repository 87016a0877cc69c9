"""Rational reconstruction and denominator extraction.

Rationals are ``fractions.Fraction``, which is always kept in lowest terms
with a positive denominator.
"""

import math
from fractions import Fraction


def rational_reconstruct(r, M, numerator_bound, denominator_bound):
    """Recover n/d from r = n·d⁻¹ mod M with |n| <= N, 0 < d <= D.

    Runs the extended Euclidean algorithm on (M, r), tracking only the
    cofactor of r, and stops at the first remainder <= N. Returns None when
    that row does not give a valid preimage.
    """
    N, D = numerator_bound, denominator_bound
    if N < 1 or D < 1:
        raise ValueError("bounds must be positive")
    if 2 * N * D >= M:
        raise ValueError(f"2*N*D must be < M (N={N}, D={D}, M={M})")
    r0, r1 = M, r % M
    t0, t1 = 0, 1
    while r1 > N:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    num, den = r1, t1
    if den < 0:
        num, den = -num, -den
    if den == 0 or den > D or math.gcd(num, den) != 1 or math.gcd(den, M) != 1:
        return None
    return Fraction(num, den)


def denominator_lcm(x):
    return math.lcm(1, *(Fraction(e).denominator for e in x))
