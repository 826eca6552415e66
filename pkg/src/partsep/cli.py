"""Command line interface: ``partsep {gen,reduce,check,analyze,construct}``.

Exit codes: 0 success (whatever the verdict), 2 usage, 3 validation,
4 parse, 5 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import qdm
from .criteria import DEFAULT_PPT_TOL, SeparabilityReport, analyze_all, check_partial_separability
from .errors import ParseError, PartitionError, PartsepError, ValidationError
from .partition import parse_partition
from .reduction import reduce
from .states import (
    DEFAULT_TOL,
    construct_inseparable,
    ghz,
    maximally_mixed,
    paper_example,
    pure_to_density,
    random_density,
    validate_density,
    werner,
)

EXIT_OK, EXIT_USAGE, EXIT_VALIDATION, EXIT_PARSE, EXIT_INTERNAL = 0, 2, 3, 4, 5


class UsageError(Exception):
    pass


def _positive_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not value > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _weights(text: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad weight list {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="partsep",
        description="Reduce multi-qubit density matrices along bipartitions and apply the PPT test.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a named state as QDM")
    gen.add_argument("kind", choices=["werner", "prime", "doubleprime", "ghz", "random", "mixed"])
    gen.add_argument("--x", type=float, help="mixing parameter in [0, 1] (werner, prime, doubleprime)")
    gen.add_argument("--n", type=int, help="qubit count (ghz, random, mixed)")
    gen.add_argument("--seed", type=int, default=0, help="PRNG seed for random (default 0)")
    gen.add_argument("--out", help="output path (default stdout)")

    red = sub.add_parser("reduce", help="write the two-qubit reduction along a partition")
    red.add_argument("input")
    red.add_argument("--partition", required=True)
    red.add_argument("--out")

    for name, helptext in [("check", "PPT verdict for one partition"),
                           ("analyze", "PPT verdicts for every partition")]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("input")
        if name == "check":
            p.add_argument("--partition", required=True)
        p.add_argument("--tol", type=_positive_float, default=DEFAULT_PPT_TOL)
        p.add_argument("--format", choices=["text", "json"], default="text")

    con = sub.add_parser("construct", help="build a three-qubit state inseparable across B|AC")
    con.add_argument("--sigma", action="append", required=True, help="two-qubit QDM file (repeat)")
    con.add_argument("--weights", type=_weights, required=True, help="comma-separated weights")
    con.add_argument("--layout", default="B|AC")
    con.add_argument("--out")
    return parser


def _need(value, flag: str, kind: str):
    if value is None:
        raise UsageError(f"gen {kind} requires {flag}")
    return value


def _gen(args) -> str:
    kind = args.kind
    if kind == "werner":
        rho = werner(_need(args.x, "--x", kind))
    elif kind in ("prime", "doubleprime"):
        rho = paper_example(kind, _need(args.x, "--x", kind))
    elif kind == "ghz":
        rho = pure_to_density(ghz(_need(args.n, "--n", kind)))
    elif kind == "random":
        rho = random_density(_need(args.n, "--n", kind), args.seed)
    else:
        rho = maximally_mixed(_need(args.n, "--n", kind))
    return qdm.dumps_matrix(validate_density(rho.mat).mat)


def _load(path: str):
    try:
        return qdm.load_matrix(path, DEFAULT_TOL)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _partition(text: str, n: int):
    try:
        return parse_partition(text, n)
    except PartitionError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        qdm.write_atomic(Path(out), text)
    else:
        sys.stdout.write(text)


def _verdict_json(v) -> str:
    return json.dumps(qdm.verdict_dict(v), indent=2) + "\n"


def run(args) -> None:
    if args.command == "gen":
        _emit(_gen(args), args.out)
    elif args.command == "reduce":
        rho = _load(args.input)
        p = _partition(args.partition, rho.num_qubits)
        _emit(qdm.dumps_matrix(reduce(rho, p).mat), args.out)
    elif args.command == "check":
        rho = _load(args.input)
        v = check_partial_separability(rho, _partition(args.partition, rho.num_qubits), args.tol)
        sys.stdout.write(_verdict_json(v) if args.format == "json" else qdm.verdict_line(v) + "\n")
    elif args.command == "analyze":
        rho = _load(args.input)
        if rho.num_qubits < 2:
            raise UsageError("analyze needs at least two qubits")
        report: SeparabilityReport = analyze_all(rho, args.tol)
        sys.stdout.write(qdm.write_report(report, args.format))
    elif args.command == "construct":
        sigmas = [_load(path) for path in args.sigma]
        layout = _partition(args.layout, 3)
        rho = construct_inseparable(sigmas, args.weights, layout)
        _emit(qdm.dumps_matrix(rho.mat), args.out)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        run(args)
    except UsageError as exc:
        print(f"partsep: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"partsep: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"partsep: invalid state: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except PartsepError as exc:
        # bad parameter values (x out of range, weights, layout, ...)
        print(f"partsep: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - last resort
        print(f"partsep: internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
