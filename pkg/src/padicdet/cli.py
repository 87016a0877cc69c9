"""Command-line interface.

Exit codes: 0 ok, 1 I/O or parse failure, 2 usage error, 3 algorithms
disagree.
"""

import argparse
import csv
import sys

from .engine import EnginePolicy, det
from .matrix import (
    DimensionError,
    MatrixFormatError,
    parse_matrix,
    parse_matrix_json,
    random_matrix,
    serialize_matrix,
)
from .rng import MASK64, SplitMix64

EXIT_OK, EXIT_IO, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2, 3

BENCH_HEADER = ["n", "entry_bound", "algorithm", "seed", "wall_time_s", "crt_primes", "value_digits"]
BENCH_ALGORITHMS = ("padic", "multimodular", "bareiss", "auto")


def _seed(text):
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid seed {text!r}") from None
    if not -(1 << 63) <= value <= MASK64:
        raise argparse.ArgumentTypeError(f"seed {text} does not fit in 64 bits")
    return value & MASK64


def _positive(text):
    try:
        value = int(text, 10)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid integer {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _sizes(text):
    return [_positive(s.strip()) for s in text.split(",") if s.strip()]


def build_parser():
    parser = argparse.ArgumentParser(
        prog="padicdet", description="Exact determinants of integer matrices."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("det", help="compute a determinant")
    p.add_argument("--input", "-i", required=True, help="matrix file ('-' for stdin)")
    p.add_argument("--format", choices=("auto", "text", "json"), default="auto")
    p.add_argument(
        "--algorithm", choices=("auto", "padic", "multimodular", "bareiss", "cofactor"),
        default="auto",
    )
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--verbose", "-v", action="store_true",
                   help="print report fields as key=value lines on stderr")

    p = sub.add_parser("gen", help="write a seeded random matrix")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--bound", type=_positive, default=100)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--output", "-o", default="-")

    p = sub.add_parser("bench", help="time algorithms on seeded matrices, CSV output")
    p.add_argument("--sizes", type=_sizes, default=[10, 20, 30],
                   help="comma-separated dimensions (default: 10,20,30)")
    p.add_argument("--bound", type=_positive, default=100)
    p.add_argument("--algorithms", default="padic,multimodular,bareiss")
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--trials", type=_positive, default=1)
    p.add_argument("--output", "-o", default="-")
    return parser


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as f:
        return f.read()


def _open_out(path):
    if path == "-":
        return sys.stdout
    return open(path, "w", encoding="utf-8", newline="")


def cmd_det(args):
    try:
        text = _read(args.input)
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    fmt = args.format
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "text"
    try:
        A = parse_matrix_json(text) if fmt == "json" else parse_matrix(text)
    except MatrixFormatError as exc:
        print(f"error: {args.input}: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        report = det(A, EnginePolicy(algorithm=args.algorithm, seed=args.seed))
    except DimensionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(report.value)
    if args.verbose:
        for key, value in report.fields():
            print(f"{key}={'' if value is None else value}", file=sys.stderr)
    return EXIT_OK


def cmd_gen(args):
    A = random_matrix(args.n, args.bound, args.seed)
    try:
        out = _open_out(args.output)
        try:
            out.write(serialize_matrix(A))
        finally:
            if out is not sys.stdout:
                out.close()
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def run_bench(sizes, bound, algorithms, seed, trials, out):
    """Write CSV rows to ``out``; return the list of disagreement messages."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(BENCH_HEADER)
    seeds = SplitMix64(seed)
    problems = []
    for n in sizes:
        for _ in range(trials):
            mseed = seeds.next_u64()
            A = random_matrix(n, bound, mseed)
            values = {}
            for alg in algorithms:
                rep = det(A, EnginePolicy(algorithm=alg, seed=mseed))
                values[alg] = rep.value
                digits = len(str(abs(rep.value)))
                writer.writerow(
                    [n, bound, alg, mseed, f"{rep.wall_time:.6f}", rep.crt_primes_used, digits]
                )
            if len(set(values.values())) > 1:
                problems.append(f"n={n} seed={mseed}: {values}")
    return problems


def cmd_bench(args):
    algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
    bad = [a for a in algorithms if a not in BENCH_ALGORITHMS]
    if not algorithms or bad:
        print(
            f"error: --algorithms must be a non-empty subset of {','.join(BENCH_ALGORITHMS)}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    if not args.sizes:
        print("error: --sizes must list at least one dimension", file=sys.stderr)
        return EXIT_USAGE
    try:
        out = _open_out(args.output)
    except OSError as exc:
        print(f"error: cannot write {args.output}: {exc.strerror}", file=sys.stderr)
        return EXIT_IO
    try:
        problems = run_bench(args.sizes, args.bound, algorithms, args.seed, args.trials, out)
    finally:
        if out is not sys.stdout:
            out.close()
    for msg in problems:
        print(f"disagreement: {msg}", file=sys.stderr)
    return EXIT_DISAGREE if problems else EXIT_OK


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    handler = {"det": cmd_det, "gen": cmd_gen, "bench": cmd_bench}[args.command]
    return handler(args)


if __name__ == "__main__":
    sys.exit(main())
