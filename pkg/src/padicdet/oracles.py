"""Slow exact determinants used to cross-check the modular algorithms."""

from functools import lru_cache

from .matrix import DimensionError

COFACTOR_MAX_N = 10


def det_cofactor(A):
    """Laplace expansion along successive rows.

    Minors are keyed by the set of surviving columns, so each of the 2**n
    minors is expanded once.
    """
    n = A.n
    if n > COFACTOR_MAX_N:
        raise DimensionError(
            f"cofactor expansion is limited to n <= {COFACTOR_MAX_N}, got n = {n}"
        )
    rows = A.rows

    @lru_cache(maxsize=None)
    def minor(row, cols):
        # cols: bitmask of columns still available to rows row..n-1
        if row == n:
            return 1
        total = 0
        sign = 1
        for j in range(n):
            if not cols >> j & 1:
                continue
            a = rows[row][j]
            if a:
                total += sign * a * minor(row + 1, cols & ~(1 << j))
            sign = -sign
        return total

    return minor(0, (1 << n) - 1)


def det_bareiss(A):
    """Fraction-free elimination; every division is exact."""
    n = A.n
    M = A.to_lists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        rk = M[k]
        for i in range(k + 1, n):
            ri = M[i]
            a = ri[k]
            for j in range(k + 1, n):
                q, r = divmod(pivot * ri[j] - a * rk[j], prev)
                assert r == 0, "Bareiss division not exact"
                ri[j] = q
            ri[k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]
