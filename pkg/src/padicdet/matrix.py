"""Integer matrices: the container type, text/JSON I/O, seeded generation
and the Hadamard-type bounds used to size moduli."""

import json
import math
import re
from dataclasses import dataclass

from .rng import SplitMix64

_INT_RE = re.compile(r"-?[0-9]+\Z")
_JSON_SAFE = 2**53


class MatrixFormatError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DimensionError(ValueError):
    pass


class IntegerMatrix:
    """Square matrix of Python ints, stored as a tuple of row tuples."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(int(e) for e in row) for row in rows)
        n = len(rows)
        if n < 1:
            raise DimensionError("matrix must have n >= 1")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DimensionError(f"row {i + 1} has {len(row)} entries, expected {n}")
        self.rows = rows

    @property
    def n(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, IntegerMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntegerMatrix({[list(r) for r in self.rows]!r})"

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def to_lists(self):
        return [list(r) for r in self.rows]

    def columns(self):
        return list(zip(*self.rows))

    def transpose(self):
        return IntegerMatrix(self.columns())

    def __matmul__(self, other):
        if isinstance(other, IntegerMatrix):
            if other.n != self.n:
                raise DimensionError("dimension mismatch")
            cols = other.columns()
            return IntegerMatrix(
                [[sum(a * b for a, b in zip(row, c)) for c in cols] for row in self.rows]
            )
        return self.apply(other)

    def apply(self, v):
        """Exact product A·v for an integer vector v."""
        if len(v) != self.n:
            raise DimensionError(f"vector length {len(v)} != {self.n}")
        return [sum(a * b for a, b in zip(row, v)) for row in self.rows]

    def max_abs_entry(self):
        return max(abs(e) for row in self.rows for e in row)


def parse_matrix(text):
    """Read the line-oriented text format: ``n`` then ``n`` rows of ``n`` integers."""
    lines = text.splitlines()
    # trailing blank lines are tolerated, nothing else
    while lines and not lines[-1].strip():
        lines.pop()
    if not lines:
        raise MatrixFormatError("empty input", 1)
    header = lines[0].strip()
    if not _INT_RE.match(header):
        raise MatrixFormatError(f"malformed header {header!r}", 1)
    n = int(header)
    if n < 1:
        raise MatrixFormatError(f"dimension must be >= 1, got {n}", 1)
    rows = []
    for k in range(1, n + 1):
        if k >= len(lines):
            raise MatrixFormatError(f"expected {n} rows, found {len(rows)}", k + 1)
        tokens = lines[k].split()
        for tok in tokens:
            if not _INT_RE.match(tok):
                raise MatrixFormatError(f"non-integer token {tok!r}", k + 1)
        if len(tokens) != n:
            noun = "entry" if len(tokens) == 1 else "entries"
            raise MatrixFormatError(
                f"row {k} has {len(tokens)} {noun}, expected {n}", k + 1
            )
        rows.append([int(t) for t in tokens])
    if len(lines) > n + 1:
        raise MatrixFormatError("unexpected content after last row", n + 2)
    return IntegerMatrix(rows)


def serialize_matrix(A):
    out = [str(A.n)]
    out.extend(" ".join(str(e) for e in row) for row in A.rows)
    return "\n".join(out) + "\n"


def _json_int(value, where):
    if isinstance(value, bool):
        raise MatrixFormatError(f"{where}: boolean is not an integer")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and _INT_RE.match(value.strip()):
        return int(value.strip())
    raise MatrixFormatError(f"{where}: not an integer: {value!r}")


def parse_matrix_json(text):
    """Read ``{"n": ..., "entries": [[...], ...]}``; entries may be decimal strings."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict) or "n" not in obj or "entries" not in obj:
        raise MatrixFormatError('JSON matrix needs fields "n" and "entries"')
    n = _json_int(obj["n"], "n")
    if n < 1:
        raise MatrixFormatError(f"dimension must be >= 1, got {n}")
    entries = obj["entries"]
    if not isinstance(entries, list) or len(entries) != n:
        raise MatrixFormatError(f"entries must be a list of {n} rows")
    rows = []
    for i, row in enumerate(entries, 1):
        if not isinstance(row, list) or len(row) != n:
            got = len(row) if isinstance(row, list) else "no"
            raise MatrixFormatError(f"row {i} has {got} entries, expected {n}")
        rows.append([_json_int(e, f"row {i}") for e in row])
    return IntegerMatrix(rows)


def serialize_matrix_json(A):
    def enc(e):
        return e if abs(e) <= _JSON_SAFE else str(e)

    return json.dumps({"n": A.n, "entries": [[enc(e) for e in row] for row in A.rows]})


def random_matrix(n, entry_bound, seed):
    """Entries uniform in [-entry_bound, entry_bound], filled row-major from
    a SplitMix64 stream seeded with ``seed``."""
    if n < 1 or entry_bound < 1:
        raise ValueError("need n >= 1 and entry_bound >= 1")
    rng = SplitMix64(seed)
    return IntegerMatrix(
        [[rng.integer(-entry_bound, entry_bound) for _ in range(n)] for _ in range(n)]
    )


def random_vector(n, entry_bound, rng):
    return [rng.integer(-entry_bound, entry_bound) for _ in range(n)]


def ceil_sqrt(x):
    r = math.isqrt(x)
    return r if r * r == x else r + 1


def column_norms_sq(A):
    return [sum(e * e for e in col) for col in A.columns()]


def hadamard_bound(A):
    """ceil(prod of column Euclidean norms), computed exactly; |det A| <= result."""
    return ceil_sqrt(math.prod(column_norms_sq(A)))


@dataclass(frozen=True)
class BoundPair:
    numerator_bound: int
    denominator_bound: int


def solution_bounds(A, v):
    """Cramer-rule bounds on the reduced numerators and denominators of A⁻¹v.

    Every numerator is the determinant of A with one column replaced by v, so
    it is at most ||v|| times the product of the other column norms; dropping
    the smallest column covers all n choices at once.
    """
    norms = column_norms_sq(A)
    jmin = min(range(len(norms)), key=norms.__getitem__)
    rest = math.prod(norms[:jmin] + norms[jmin + 1:])
    vnorm = sum(e * e for e in v)
    num = ceil_sqrt(vnorm * rest)
    den = hadamard_bound(A)
    return BoundPair(max(num, 1), max(den, 1))
