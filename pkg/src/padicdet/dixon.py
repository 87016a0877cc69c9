"""Dixon's p-adic lifting for nonsingular integer systems A·x = v."""

from dataclasses import dataclass

from .matrix import DimensionError, solution_bounds
from .modular import invert_mod_p, reduce_matrix
from .rational import denominator_lcm, rational_reconstruct


class LiftingError(RuntimeError):
    """Internal inconsistency during lifting; indicates a bug, not bad input."""


@dataclass(frozen=True)
class LiftingState:
    p: int
    m: int
    step: int
    accumulated: tuple  # x̄ mod p**step, entries in [0, p**step)
    residual: tuple  # (v - A·x̄) / p**step, exact


def lifting_precision(A, v, p):
    """Least m with p**m > 2·N·D for the Cramer bounds (N, D) of A·x = v."""
    b = solution_bounds(A, v)
    target = 2 * b.numerator_bound * b.denominator_bound
    m, pm = 1, p
    while pm <= target:
        m += 1
        pm *= p
    return m


def lift(A, v, p, m, inverse):
    """Yield the lifting state after each of the m steps.

    ``inverse`` is A⁻¹ mod p as a ResidueMatrix; it is reused at every step.
    """
    C = inverse.rows
    rows = A.rows
    b = list(v)
    xbar = [0] * A.n
    pk = 1
    for step in range(1, m + 1):
        xi = [sum(c * e for c, e in zip(crow, b)) % p for crow in C]
        nb = []
        for row, bj in zip(rows, b):
            q, r = divmod(bj - sum(a * x for a, x in zip(row, xi)), p)
            if r:
                raise LiftingError(f"residual not divisible by p at step {step}")
            nb.append(q)
        b = nb
        xbar = [acc + x * pk for acc, x in zip(xbar, xi)]
        pk *= p
        yield LiftingState(p, m, step, tuple(xbar), tuple(b))


def dixon_solve(A, v, p, inverse=None):
    """Exact rational solution of A·x = v, or None if A is singular mod p.

    Pass ``inverse`` (A⁻¹ mod p) to skip recomputing it. The result is
    always checked by one exact multiplication before being returned.
    """
    if len(v) != A.n:
        raise DimensionError(f"vector length {len(v)} != {A.n}")
    if inverse is None:
        inverse = invert_mod_p(reduce_matrix(A, p))
        if inverse is None:
            return None
    bounds = solution_bounds(A, v)
    m = lifting_precision(A, v, p)
    state = None
    for state in lift(A, v, p, m, inverse):
        pass
    M = p**m
    x = []
    for xi in state.accumulated:
        q = rational_reconstruct(xi, M, bounds.numerator_bound, bounds.denominator_bound)
        if q is None:
            raise LiftingError("rational reconstruction failed at full precision")
        x.append(q)
    d = denominator_lcm(x)
    scaled = [int(e * d) for e in x]
    if A.apply(scaled) != [d * e for e in v]:
        raise LiftingError("reconstructed solution does not satisfy A·x = v")
    return x

