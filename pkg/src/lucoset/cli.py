"""Command-line front end.

Exit codes: 0 equivalent/success, 1 inequivalent, 2 parse error, 3 invalid
density, 4 inconclusive, 5 dims mismatch, 6 non-unitary input, 7 I/O
failure, 8 bad argument.  Reports are JSON on stdout and always include the
tolerances and seeds in effect; errors go to stderr and suppress any
report.  Randomized commands require an explicit ``--seed``.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import io as mio
from .equivalence import (
    EquivalenceVerdict,
    OptimizerConfig,
    TAG_EQUIVALENT,
    TAG_INEQUIVALENT,
    certify_lu_equivalence,
    probe_state,
    same_double_coset,
)
from .errors import (
    DimensionMismatchError,
    InvalidDensityError,
    LucosetError,
    MatrixFileError,
    NotAPartitionError,
    NotUnitaryError,
    OutOfRangeError,
    OutOfTriangleError,
)
from .linalg import haar_unitary, is_unitary, validate_density
from .partitions import enumerate_partitions, format_partition, parse_partition, partition_count
from .spectral import DEFAULT_CLUSTER_TOL, spectral_type
from .werner import DEFAULT_STRATUM_TOL, werner_scan
from .young import validate_partition

EXIT_EQUIVALENT = 0
EXIT_INEQUIVALENT = 1
EXIT_PARSE = 2
EXIT_INVALID_DENSITY = 3
EXIT_INCONCLUSIVE = 4
EXIT_DIMS_MISMATCH = 5
EXIT_NOT_UNITARY = 6
EXIT_IO = 7
EXIT_BAD_ARGUMENT = 8


def _parse_dims(text: str) -> tuple[int, ...]:
    try:
        dims = tuple(int(piece) for piece in text.split(","))
    except ValueError as exc:
        raise OutOfRangeError(f"cannot parse dims {text!r}") from exc
    if not dims or any(d < 1 for d in dims):
        raise OutOfRangeError(f"cannot parse dims {text!r}")
    return dims


def _optimizer_config(args) -> OptimizerConfig:
    return OptimizerConfig(
        restarts=args.restarts,
        max_iters=args.max_iters,
        tol_success=args.tol,
        step_init=args.step_init,
        seed=args.seed,
        screen_tol=args.screen_tol,
    )


def _verdict_report(command, verdict: EquivalenceVerdict, dims, cfg: OptimizerConfig):
    witness = None
    if verdict.witness is not None:
        witness = {
            "component": verdict.witness.component,
            "left": list(verdict.witness.left),
            "right": list(verdict.witness.right),
            "difference": verdict.witness.difference,
        }
    certificate = None
    if verdict.certificate is not None:
        certificate = [mio.matrix_to_json(f) for f in verdict.certificate]
    return {
        "command": command,
        "verdict": verdict.tag,
        "residual": verdict.residual,
        "certificate": certificate,
        "witness": witness,
        "dims": [int(d) for d in dims],
        "tolerances": {
            "tol_success": cfg.tol_success,
            "screen_tol": cfg.screen_tol,
            "cluster_tol": DEFAULT_CLUSTER_TOL,
        },
        "optimizer": {
            "restarts": cfg.restarts,
            "max_iters": cfg.max_iters,
            "step_init": cfg.step_init,
            "seed": cfg.seed,
        },
    }


def _emit(report: dict, out_path=None) -> None:
    text = mio.render_report(report)
    sys.stdout.write(text)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _verdict_exit(verdict: EquivalenceVerdict) -> int:
    if verdict.tag == TAG_EQUIVALENT:
        return EXIT_EQUIVALENT
    if verdict.tag == TAG_INEQUIVALENT:
        return EXIT_INEQUIVALENT
    return EXIT_INCONCLUSIVE


def cmd_classify(args) -> int:
    matrix, _dims = mio.read_matrix_file(args.input)
    stype = spectral_type(matrix, cluster_tol=args.cluster_tol)
    report = {
        "command": "classify",
        "distinct_values": list(stype.distinct_values),
        "multiplicities": list(stype.multiplicities),
        "partition": format_partition(stype.partition),
        "tolerances": {"cluster_tol": args.cluster_tol},
    }
    _emit(report, args.out)
    return EXIT_EQUIVALENT


def cmd_equiv(args) -> int:
    m1, dims1 = mio.read_matrix_file(args.a)
    m2, dims2 = mio.read_matrix_file(args.b)
    if dims1 != dims2:
        raise DimensionMismatchError(f"dims differ between files: {dims1} vs {dims2}")
    cfg = _optimizer_config(args)
    verdict = certify_lu_equivalence(m1, m2, dims1, cfg)
    _emit(_verdict_report("equiv", verdict, dims1, cfg), args.out)
    return _verdict_exit(verdict)


def cmd_coset(args) -> int:
    g1, dims1 = mio.read_matrix_file(args.g1)
    g2, dims2 = mio.read_matrix_file(args.g2)
    if not is_unitary(g1, 1e-8) or not is_unitary(g2, 1e-8):
        raise NotUnitaryError("coset inputs must be unitary within 1e-8")
    dims = _parse_dims(args.dims) if args.dims else dims1
    if dims1 != dims2:
        raise DimensionMismatchError(f"dims differ between files: {dims1} vs {dims2}")
    block_sizes = parse_partition(args.block_sizes)
    if sum(block_sizes) != g1.shape[0]:
        raise OutOfRangeError(
            f"--lambda {args.block_sizes} sums to {sum(block_sizes)}, "
            f"expected {g1.shape[0]}"
        )
    cfg = _optimizer_config(args)
    verdict = same_double_coset(g1, g2, block_sizes, dims, cfg)
    report = _verdict_report("coset", verdict, dims, cfg)
    report["block_sizes"] = format_partition(block_sizes)
    _emit(report, args.out)
    return _verdict_exit(verdict)


def cmd_werner_scan(args) -> int:
    if args.grid_e < 2 or args.grid_f < 2:
        raise OutOfRangeError("grid counts must be >= 2")
    records = werner_scan(args.grid_e, args.grid_f, args.tol)
    lines = ["e,f,partition,partition_numeric,agree"]
    for rec in records:
        lines.append(
            f"{rec.e:.6f},{rec.f:.6f},{format_partition(rec.partition)},"
            f"{format_partition(rec.partition_numeric)},"
            f"{'true' if rec.agree else 'false'}"
        )
    text = "\n".join(lines) + "\n"
    with open(args.out, "w", encoding="utf-8") as handle:
        handle.write(text)
    sys.stdout.write(
        f"wrote {len(records)} records to {args.out} (tol={args.tol!r})\n"
    )
    return EXIT_EQUIVALENT


def cmd_partitions(args) -> int:
    if args.count_only:
        sys.stdout.write(f"{partition_count(args.n)}\n")
        return EXIT_EQUIVALENT
    for parts in enumerate_partitions(args.n):
        sys.stdout.write(format_partition(parts) + "\n")
    return EXIT_EQUIVALENT


def cmd_random_state(args) -> int:
    parts = validate_partition(parse_partition(args.block_sizes), args.n)
    dims = _parse_dims(args.dims) if args.dims else (args.n,)
    if int(np.prod(dims)) != args.n:
        raise DimensionMismatchError(f"--dims {args.dims} inconsistent with n={args.n}")
    basis = haar_unitary(args.n, args.seed)
    state = validate_density(probe_state(basis, parts))
    mio.write_matrix_file(args.out, state, dims)
    sys.stdout.write(
        f"wrote {args.n}x{args.n} state of type {format_partition(parts)} "
        f"to {args.out} (seed={args.seed})\n"
    )
    return EXIT_EQUIVALENT


def _add_optimizer_flags(sub) -> None:
    sub.add_argument("--seed", type=int, required=True, help="RNG seed (required)")
    sub.add_argument("--restarts", type=int, default=20)
    sub.add_argument("--max-iters", type=int, default=500)
    sub.add_argument("--tol", type=float, default=1e-9, help="success tolerance on the squared objective")
    sub.add_argument("--step-init", type=float, default=0.1)
    sub.add_argument("--screen-tol", type=float, default=1e-7)
    sub.add_argument("--out", default=None, help="also write the report to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lucoset",
        description="Local unitary equivalence of density matrices via double cosets.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("classify", help="spectral type of a density matrix file")
    p.add_argument("input")
    p.add_argument("--cluster-tol", type=float, default=DEFAULT_CLUSTER_TOL)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_classify)

    p = subs.add_parser("equiv", help="decide local unitary equivalence of two states")
    p.add_argument("a")
    p.add_argument("b")
    _add_optimizer_flags(p)
    p.set_defaults(func=cmd_equiv)

    p = subs.add_parser("coset", help="decide equality of two double cosets")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--lambda", dest="block_sizes", required=True, help="block sizes, e.g. 2-1-1")
    p.add_argument("--dims", default=None, help="factor dimensions, e.g. 2,2")
    _add_optimizer_flags(p)
    p.set_defaults(func=cmd_coset)

    p = subs.add_parser("werner-scan", help="stratum grid over the Werner triangle as CSV")
    p.add_argument("--grid-e", type=int, required=True)
    p.add_argument("--grid-f", type=int, required=True)
    p.add_argument("--tol", type=float, default=DEFAULT_STRATUM_TOL)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_werner_scan)

    p = subs.add_parser("partitions", help="enumerate or count partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_partitions)

    p = subs.add_parser("random-state", help="write a random state of prescribed type")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="block_sizes", required=True, help="partition of n, e.g. 2-2")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--dims", default=None, help="factor dimensions recorded in the file")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_random_state)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MatrixFileError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidDensityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID_DENSITY
    except NotUnitaryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_UNITARY
    except DimensionMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMS_MISMATCH
    except (OutOfRangeError, NotAPartitionError, OutOfTriangleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGUMENT
    except LucosetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGUMENT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
