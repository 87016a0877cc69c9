"""Determinant algorithms, dispatch policy and instrumented reports."""

import time
from dataclasses import dataclass, field

from .dixon import dixon_solve, lifting_precision
from .matrix import DimensionError, hadamard_bound, random_vector
from .modular import (
    ResiduePair,
    crt_combine,
    det_mod_p,
    invert_mod_p,
    random_prime,
    reduce_matrix,
)
from .oracles import COFACTOR_MAX_N, det_bareiss, det_cofactor
from .rational import denominator_lcm
from .rng import SplitMix64

ALGORITHMS = ("padic", "multimodular", "bareiss", "cofactor")
CHOICES = ("auto",) + ALGORITHMS

DIXON_PRIME_BITS = 59
CRT_PRIME_BITS = 62
RHS_BOUND = 2**60
SINGULAR_RETRIES = 3


@dataclass
class DetReport:
    value: int
    algorithm: str
    divisor_d: int | None = None
    crt_primes_used: int = 0
    lifting_steps: int | None = None
    prime_retries: int = 0
    fell_back: bool = False
    wall_time: float = 0.0
    primes: tuple = field(default=(), repr=False)

    def fields(self):
        """Report as ordered (key, value) pairs, excluding the prime list."""
        return [
            ("value", self.value),
            ("algorithm", self.algorithm),
            ("divisor_d", self.divisor_d),
            ("crt_primes_used", self.crt_primes_used),
            ("lifting_steps", self.lifting_steps),
            ("prime_retries", self.prime_retries),
            ("fell_back", self.fell_back),
            ("wall_time", f"{self.wall_time:.6f}"),
        ]


@dataclass(frozen=True)
class EnginePolicy:
    """How ``det`` picks an algorithm.

    Under ``auto``: n below ``multimodular_threshold`` uses Bareiss; larger
    matrices use p-adic lifting when max|entry| < small_entry_ratio * n and
    the multimodular method otherwise.
    """

    algorithm: str = "auto"
    seed: int = 0
    multimodular_threshold: int = 24
    small_entry_ratio: float = 1.0

    def __post_init__(self):
        if self.algorithm not in CHOICES:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if self.multimodular_threshold < 1 or self.small_entry_ratio <= 0:
            raise ValueError("policy thresholds must be positive")

    def choose(self, A):
        if self.algorithm != "auto":
            return self.algorithm
        n = A.n
        if n < self.multimodular_threshold:
            return "bareiss"
        if A.max_abs_entry() < self.small_entry_ratio * n:
            return "padic"
        return "multimodular"


def _fresh_prime(rng, bits, exclude):
    while True:
        q = random_prime(bits, rng)
        if q not in exclude:
            return q


def det_multimodular(A, seed=0):
    """det A from residues modulo seeded 62-bit primes whose product exceeds 2H."""
    t0 = time.perf_counter()
    H = hadamard_bound(A)
    if H == 0:
        return DetReport(0, "multimodular", wall_time=time.perf_counter() - t0)
    rng = SplitMix64(seed)
    target = 2 * H
    primes = []
    pairs = []
    M = 1
    while M <= target:
        q = _fresh_prime(rng, CRT_PRIME_BITS, primes)
        primes.append(q)
        pairs.append(ResiduePair(det_mod_p(reduce_matrix(A, q)), q))
        M *= q
    value = crt_combine(pairs)
    return DetReport(
        value,
        "multimodular",
        crt_primes_used=len(primes),
        primes=tuple(primes),
        wall_time=time.perf_counter() - t0,
    )


def det_padic(A, seed=0):
    """det A = d·s, with d from a Dixon solve and s recovered by CRT.

    d is the lcm of the denominators of A⁻¹v for a random v, and always
    divides det A; the cofactor s is usually tiny, so CRT only has to cover
    2H/d. After three primes for which A is singular, the multimodular
    method is used instead.
    """
    t0 = time.perf_counter()
    rng = SplitMix64(seed)
    n = A.n
    tried = []
    inverse = None
    while len(tried) < SINGULAR_RETRIES:
        p = _fresh_prime(rng, DIXON_PRIME_BITS, tried)
        tried.append(p)
        inverse = invert_mod_p(reduce_matrix(A, p))
        if inverse is not None:
            break
    if inverse is None:
        rep = det_multimodular(A, seed)
        rep.algorithm = "padic"
        rep.fell_back = True
        rep.prime_retries = len(tried)
        rep.wall_time = time.perf_counter() - t0
        return rep

    v = random_vector(n, RHS_BOUND, rng)
    x = dixon_solve(A, v, p, inverse=inverse)
    if x is None:
        raise AssertionError("dixon_solve reported singular after a successful inverse")
    d = denominator_lcm(x)
    steps = lifting_precision(A, v, p)

    H = hadamard_bound(A)
    primes = []
    pairs = []
    M = 1
    q = p
    while M * d <= 2 * H:
        if q is None:
            q = _fresh_prime(rng, CRT_PRIME_BITS, tried + primes)
        if d % q:
            s_mod = det_mod_p(reduce_matrix(A, q)) * pow(d % q, -1, q) % q
            primes.append(q)
            pairs.append(ResiduePair(s_mod, q))
            M *= q
        q = None
    value = d * crt_combine(pairs)
    if abs(value) > H:
        raise AssertionError("p-adic determinant exceeds the Hadamard bound")
    return DetReport(
        value,
        "padic",
        divisor_d=d,
        crt_primes_used=len(primes),
        lifting_steps=steps,
        prime_retries=len(tried) - 1,
        primes=tuple(primes),
        wall_time=time.perf_counter() - t0,
    )


def det(A, policy=None):
    policy = policy or EnginePolicy()
    algorithm = policy.choose(A)
    if algorithm == "padic":
        return det_padic(A, policy.seed)
    if algorithm == "multimodular":
        return det_multimodular(A, policy.seed)
    t0 = time.perf_counter()
    if algorithm == "cofactor":
        if A.n > COFACTOR_MAX_N:
            raise DimensionError(
                f"cofactor expansion is limited to n <= {COFACTOR_MAX_N}, got n = {A.n}"
            )
        value = det_cofactor(A)
    else:
        value = det_bareiss(A)
    return DetReport(value, algorithm, wall_time=time.perf_counter() - t0)
