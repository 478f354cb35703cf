"""Command line front end for pairing, tuple bijections, and axiom reports.

Exit codes: 0 success (all checks passed), 1 parse or domain errors,
2 axiom or linearity failures.  Negative rationals on the command line
need a leading "--" separator, e.g. ``redim pair -- -1/2 1/3``.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .atlas import semicircle_csv_rows
from .pairing import build_phi, pair_reals, pair_unit, unpair_reals, unpair_unit
from .rational import format_rational, parse_rational, to_expansion
from .transport import TransportedSpace, VerificationReport, check_axioms, check_isomorphism

__all__ = ["main", "build_parser"]


def _format_tuple(values) -> str:
    return "(" + ", ".join(format_rational(v) for v in values) + ")"


def _format_value(value: Fraction) -> str:
    if 0 < value <= 1:
        return f"{format_rational(value)} = {to_expansion(value)}"
    return format_rational(value)


def _cmd_pair(args) -> int:
    a, b = parse_rational(args.a), parse_rational(args.b)
    result = pair_unit(a, b) if args.unit else pair_reals(a, b)
    print(_format_value(result))
    return 0


def _cmd_unpair(args) -> int:
    y = parse_rational(args.y)
    first, second = unpair_unit(y) if args.unit else unpair_reals(y)
    print(_format_tuple((first, second)))
    return 0


def _cmd_phi(args) -> int:
    coords = tuple(parse_rational(t) for t in args.coords)
    if args.inverse:
        result = build_phi(args.k, args.n).backward(coords)
    else:
        result = build_phi(args.n, args.k).forward(coords)
    print(_format_tuple(result))
    return 0


def _cmd_add(args) -> int:
    coords = [parse_rational(t) for t in args.coords]
    if len(coords) != 2 * args.n:
        raise ValueError(f"expected {2 * args.n} coordinates, got {len(coords)}")
    space = TransportedSpace(args.n, args.k, build_phi(args.n, args.k))
    result = space.vadd(tuple(coords[: args.n]), tuple(coords[args.n :]))
    print(_format_tuple(result))
    return 0


def _cmd_smul(args) -> int:
    scalar = parse_rational(args.scalar)
    coords = tuple(parse_rational(t) for t in args.coords)
    space = TransportedSpace(args.n, args.k, build_phi(args.n, args.k))
    print(_format_tuple(space.smul(scalar, coords)))
    return 0


def _render_report(report: VerificationReport) -> None:
    width = max(len(check.name) for check in report.checks)
    print(
        f"{report.kind} for R^{report.n} with dimension {report.k} "
        f"(trials={report.trials}, seed={report.seed})"
    )
    for check in report.checks:
        status = "ok" if check.passed else "FAIL"
        print(f"  {check.name:<{width}}  {check.passes}/{check.trials}  {status}")


def _cmd_axioms(args) -> int:
    if args.trials < 1:
        raise ValueError("trials must be positive")
    space = TransportedSpace(args.n, args.k, build_phi(args.n, args.k))
    axioms = check_axioms(space, trials=args.trials, seed=args.seed)
    iso = check_isomorphism(space, trials=args.trials, seed=args.seed)
    if args.json:
        print(json.dumps({"axioms": axioms.to_dict(), "isomorphism": iso.to_dict()}, indent=2))
    else:
        _render_report(axioms)
        _render_report(iso)
        verdict = "all checks passed" if axioms.all_passed and iso.all_passed else "FAILURES found"
        print(verdict)
    return 0 if axioms.all_passed and iso.all_passed else 2


def _cmd_figure(args) -> int:
    if args.samples < 2:
        raise ValueError("need at least 2 samples")
    rows = semicircle_csv_rows(args.samples)
    text = "\n".join(rows) + "\n"
    if args.out:
        with open(args.out, "w", encoding="ascii") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="redim",
        description="Exact digit-interleaving bijections and transported vector spaces.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    pair = commands.add_parser("pair", help="encode two rationals as one")
    pair.add_argument("--unit", action="store_true", help="restrict to (0,1]")
    pair.add_argument("a")
    pair.add_argument("b")
    pair.set_defaults(run=_cmd_pair)

    unpair = commands.add_parser("unpair", help="decode one rational into two")
    unpair.add_argument("--unit", action="store_true", help="restrict to (0,1]")
    unpair.add_argument("y")
    unpair.set_defaults(run=_cmd_unpair)

    phi = commands.add_parser("phi", help="apply the tuple bijection R^n -> R^k")
    phi.add_argument("n", type=int)
    phi.add_argument("k", type=int)
    phi.add_argument("coords", nargs="+", metavar="coord")
    phi.add_argument("--inverse", action="store_true", help="apply the inverse map instead")
    phi.set_defaults(run=_cmd_phi)

    add = commands.add_parser("add", help="transported vector addition in R^n with dimension k")
    add.add_argument("n", type=int)
    add.add_argument("k", type=int)
    add.add_argument("coords", nargs="+", metavar="coord", help="x coordinates then y coordinates")
    add.set_defaults(run=_cmd_add)

    smul = commands.add_parser("smul", help="transported scalar multiplication")
    smul.add_argument("n", type=int)
    smul.add_argument("k", type=int)
    smul.add_argument("scalar")
    smul.add_argument("coords", nargs="+", metavar="coord")
    smul.set_defaults(run=_cmd_smul)

    axioms = commands.add_parser("axioms", help="verify the eight axioms and linearity")
    axioms.add_argument("n", type=int)
    axioms.add_argument("k", type=int)
    axioms.add_argument("--trials", type=int, default=100)
    axioms.add_argument("--seed", type=int, default=0)
    axioms.add_argument("--json", action="store_true", help="emit machine-readable reports")
    axioms.set_defaults(run=_cmd_axioms)

    figure = commands.add_parser("figure", help="emit CSV samples of the tangent-circle map")
    figure.add_argument("--samples", type=int, default=101)
    figure.add_argument("--out", default=None, help="output path (default: stdout)")
    figure.set_defaults(run=_cmd_figure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        # argparse exits 2 on usage errors; fold that into the parse-error code
        return 0 if exit_request.code == 0 else 1
    try:
        return args.run(args)
    except (ValueError, ZeroDivisionError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
