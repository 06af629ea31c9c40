"""Command line interface: ``cubicchar <subcommand> ...``.

Exit codes: 0 success, 1 usage error, 2 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import centers
from .centers import DataInconsistencyError, GluingError, UnsupportedCaseError
from .exactpoly import format_rational
from .pipeline import (CountQuery, Refusal, characteristic_number, hyperplane_characteristic_number)
from .tangency import (CubicSurface, InvalidCubicError, InvalidLineError, ProjLine, discriminant, is_tangent,
                       restrict_to_line)

EXIT_OK, EXIT_USAGE, EXIT_CONSISTENCY = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def cmd_compute(args) -> int:
    result = characteristic_number(CountQuery(args.n, args.points))
    if args.json:
        print(result.to_json())
        return EXIT_OK
    if args.breakdown:
        print(f"bezout {result.bezout}")
        for i, v in result.corrections:
            print(f"B{i} {v}")
        for i in result.missing:
            print(f"B{i} unavailable")
    if result.characteristic_number is None:
        print(result.note)
    else:
        print(result.characteristic_number)
    return EXIT_OK


def cmd_tables(args) -> int:
    c = centers.build_center(args.center, args.n)
    if args.json:
        _emit(c.to_dict())
        return EXIT_OK
    for mono, value in c.table.to_dict().items():
        if value or args.all:
            print(f"{mono}\t{value}")
    return EXIT_OK


def cmd_recursions(args) -> int:
    n = args.n
    if args.seq == "a":
        rows = [(f"a_{s}", v) for s, v in enumerate(centers.a_sequence(n))]
    elif args.seq == "d":
        rows = [(f"d_{s}", v) for s, v in enumerate(centers.d_sequence(n))]
    else:
        rows = [(f"c_{j},{k}", v) for (j, k), v in sorted(centers.c_table(n).items())]
    for name, v in rows:
        print(f"{name}\t{v}")
    return EXIT_OK


def cmd_chern(args) -> int:
    obj = args.object
    if obj == "E":
        text = str(centers.chern_E(args.n).total_chern)
    elif obj == "N4":
        if args.n != 3:
            raise UnsupportedCaseError("N4 is only available for n = 3")
        derived = centers.derive_c_N_B4(3)
        text = str(centers.fiberwise_canonical(centers._as_fiber_poly(derived)))
    else:
        c = centers.build_center(int(obj[1:]), args.n)
        text = str(c.c_normal.total_chern)
    print(text)
    return EXIT_OK


def cmd_tangency(args) -> int:
    f = CubicSurface.load(args.cubic)
    line = ProjLine.parse(args.line)
    b = restrict_to_line(f, line)
    _emit({
        "restriction": [format_rational(x) for x in b.coeffs],
        "discriminant": format_rational(discriminant(b)),
        "line_in_surface": b.is_zero(),
        "tangent": is_tangent(f, line),
    })
    return EXIT_OK


def cmd_hyperplane(args) -> int:
    out = hyperplane_characteristic_number(args.d, args.n, args.tangencies)
    if isinstance(out, Refusal):
        _emit(out.to_dict())
    else:
        _emit({"d": args.d, "n": args.n, "tangencies": args.tangencies, "count": str(out)})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cubicchar", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("compute", help="characteristic number for n_p points")
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--points", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.add_argument("--breakdown", action="store_true")
    s.set_defaults(func=cmd_compute)

    s = sub.add_parser("tables", help="integration table of a center")
    s.add_argument("--center", type=int, required=True, choices=range(5))
    s.add_argument("--n", type=int, default=3)
    s.add_argument("--all", action="store_true", help="include zero entries")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_tables)

    s = sub.add_parser("recursions", help="the a, c and d sequences")
    s.add_argument("--seq", choices=["a", "c", "d"], required=True)
    s.add_argument("--n", type=int, default=3)
    s.set_defaults(func=cmd_recursions)

    s = sub.add_parser("chern", help="total Chern classes")
    s.add_argument("--object", choices=["E", "N0", "N1", "N2", "N3", "N4"], required=True)
    s.add_argument("--n", type=int, default=3)
    s.set_defaults(func=cmd_chern)

    s = sub.add_parser("tangency", help="test a line against a cubic")
    s.add_argument("--cubic", required=True, help='JSON file {"i,j,k": "p/q", ...}')
    s.add_argument("--line", required=True, help='two points "v0,...,vn|w0,...,wn"')
    s.set_defaults(func=cmd_tangency)

    s = sub.add_parser("hyperplane", help="count tangent to general hyperplanes")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--tangencies", type=int, required=True)
    s.set_defaults(func=cmd_hyperplane)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DataInconsistencyError, GluingError) as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        for mono, (expected, got) in sorted(getattr(exc, "diff", {}).items()):
            print(f"  {mono}: expected {expected}, got {got}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except (UnsupportedCaseError, InvalidLineError, InvalidCubicError, ValueError, IndexError,
            OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
