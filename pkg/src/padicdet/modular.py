"""Arithmetic over word-sized prime fields.

Only ``matrix`` (for the container type) and ``rng`` are imported here.
Nothing in this module may reach an integer-determinant routine: a modular
determinant that delegates back to the integer path can recurse forever.
"""

from dataclasses import dataclass

from .matrix import DimensionError

MAX_PRIME_BITS = 62

# deterministic for all n < 2**64
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_LIMIT = 1 << 64


def is_prime(n):
    if n >= _MR_LIMIT:
        raise ValueError("is_prime is only deterministic below 2**64")
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def random_prime(bit_length, rng):
    """Prime with exactly ``bit_length`` bits drawn from odd candidates of ``rng``."""
    if not 3 <= bit_length <= MAX_PRIME_BITS:
        raise ValueError(f"bit_length must be in [3, {MAX_PRIME_BITS}], got {bit_length}")
    top = 1 << (bit_length - 1)
    while True:
        c = (rng.next_u64() >> (64 - bit_length)) | top | 1
        if is_prime(c):
            return c


@dataclass(frozen=True)
class ResidueMatrix:
    p: int
    rows: tuple

    @property
    def n(self):
        return len(self.rows)

    def to_lists(self):
        return [list(r) for r in self.rows]


def reduce_matrix(A, p):
    return ResidueMatrix(p, tuple(tuple(e % p for e in row) for row in A.rows))


def det_mod_p(M):
    """Determinant in Z/p by Gaussian elimination with row swaps."""
    p = M.p
    n = M.n
    a = M.to_lists()
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = p - det
        rk = a[k]
        det = det * rk[k] % p
        inv = pow(rk[k], -1, p)
        tail = rk[k + 1:]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k] * inv % p
            if f:
                a[i] = ri[: k + 1] + [(x - f * y) % p for x, y in zip(ri[k + 1:], tail)]
    return det % p


def invert_mod_p(M):
    """Gauss-Jordan inverse over Z/p, or None when M is singular mod p."""
    p = M.p
    n = M.n
    a = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(M.rows)]
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return None
        a[k], a[piv] = a[piv], a[k]
        inv = pow(a[k][k], -1, p)
        rk = [x * inv % p for x in a[k]]
        a[k] = rk
        for i in range(n):
            if i == k:
                continue
            ri = a[i]
            f = ri[k]
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(ri, rk)]
    return ResidueMatrix(p, tuple(tuple(row[n:]) for row in a))


def matmul_mod_p(M, N):
    if M.p != N.p or M.n != N.n:
        raise DimensionError("incompatible residue matrices")
    p = M.p
    cols = list(zip(*N.rows))
    return ResidueMatrix(
        p, tuple(tuple(sum(x * y for x, y in zip(r, c)) % p for c in cols) for r in M.rows)
    )


@dataclass(frozen=True)
class ResiduePair:
    residue: int
    modulus: int

    def __post_init__(self):
        if not 0 <= self.residue < self.modulus:
            raise ValueError(f"residue {self.residue} not in [0, {self.modulus})")


def crt_combine(pairs):
    """Symmetric-range CRT: the unique x with |x| <= (M-1)/2 matching every pair."""
    pairs = sorted(pairs, key=lambda pr: pr.modulus)
    if not pairs:
        raise ValueError("crt_combine needs at least one residue")
    for a, b in zip(pairs, pairs[1:]):
        if a.modulus == b.modulus:
            raise ValueError(f"duplicate modulus {a.modulus}")
    x = 0
    M = 1
    for pr in pairs:
        m = pr.modulus
        t = (pr.residue - x) * pow(M % m, -1, m) % m
        x += M * t
        M *= m
    if x > M // 2:
        x -= M
    return x
