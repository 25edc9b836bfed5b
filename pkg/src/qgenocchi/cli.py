"""Command-line front-end: compute tables, run the verification suites.

Output is byte-deterministic for a given invocation: stable key order,
exact "p/q" rational rendering, no timestamps.  Exit status is 0 only when
every requested non-erratum verifier passes, so CI can consume `qgen
verify` directly.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .families import FamilyId, FamilyKind, build_table
from .identities import DEFAULT_Q_SET, Grid, SUITE_NAMES, all_pass, run_suites
from .qarith import QContext, parse_rational

_FALLBACK_Q = "1/2"


def _positive_rational(text: str) -> Fraction:
    try:
        value = parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc
    if value <= 0:
        raise argparse.ArgumentTypeError(f"q must be positive, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _positive_int(text: str) -> int:
    value = _nonnegative_int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _at_point(text: str) -> dict[str, Fraction]:
    """Parse an evaluation point like ``x=1/2,y=-1``."""
    point = {}
    for chunk in text.split(","):
        name, _, literal = chunk.partition("=")
        name = name.strip()
        if name not in ("x", "y") or not literal:
            raise argparse.ArgumentTypeError(f"expected x=<rational>,y=<rational>, got {text!r}")
        try:
            point[name] = parse_rational(literal)
        except ValueError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from exc
    if set(point) != {"x", "y"}:
        raise argparse.ArgumentTypeError(f"expected both x= and y= in {text!r}")
    return point


def _default_q() -> str:
    return os.environ.get("QGEN_DEFAULT_Q", _FALLBACK_Q)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qgen",
        description="Exact q-Bernoulli/q-Genocchi tables and identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_family_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument(
            "--family",
            required=True,
            choices=[kind.value for kind in FamilyKind],
            help="polynomial family",
        )
        p.add_argument("--order", type=_nonnegative_int, default=1, help="family order (default 1)")
        p.add_argument(
            "--q",
            type=_positive_rational,
            default=None,
            help=f"deformation parameter as a rational literal (default {_default_q()!r}, "
            "override with QGEN_DEFAULT_Q)",
        )
        p.add_argument("--max-n", type=_nonnegative_int, required=True, help="highest degree n")
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output", default=None, help="output path (default: stdout)")

    numbers = sub.add_parser("numbers", help="emit a number table")
    add_family_flags(numbers)

    poly = sub.add_parser("poly", help="emit a bivariate polynomial table")
    add_family_flags(poly)
    poly.add_argument(
        "--at",
        type=_at_point,
        default=None,
        metavar="x=A,y=B",
        help="evaluate each polynomial at the given point instead of emitting terms",
    )

    verify = sub.add_parser("verify", help="run identity verification suites")
    verify.add_argument(
        "--suite",
        nargs="+",
        default=["all"],
        choices=("all",) + SUITE_NAMES,
        help="suites to run (default: all)",
    )
    verify.add_argument("--n-max", type=_nonnegative_int, default=10)
    verify.add_argument("--alpha", nargs="+", type=_nonnegative_int, default=[0, 1, 2, 3])
    verify.add_argument("--m", nargs="+", type=_positive_int, default=[1, 2, 3])
    verify.add_argument(
        "--q",
        nargs="+",
        type=_positive_rational,
        default=list(DEFAULT_Q_SET),
        help="grid of q values",
    )
    verify.add_argument("--workers", type=_positive_int, default=1)
    verify.add_argument("--format", choices=("json", "csv"), default="json")
    verify.add_argument("--output", default=None)
    return parser


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)


def _json_payload(command: str, params: dict, data: dict) -> str:
    return json.dumps({"meta": {"command": command, "params": params}, "data": data}, indent=2) + "\n"


def _csv_lines(rows: list[list[str]]) -> str:
    return "\n".join(",".join(cell for cell in row) for row in rows) + "\n"


def _table_command(args: argparse.Namespace) -> int:
    if args.q is not None:
        q = args.q
    else:
        try:
            q = _positive_rational(_default_q())
        except argparse.ArgumentTypeError as exc:
            sys.stderr.write(f"qgen: QGEN_DEFAULT_Q: {exc}\n")
            return 2
    family = FamilyId(FamilyKind(args.family), args.order)
    ctx = QContext(q)
    with_polys = args.command == "poly"
    table = build_table(family, ctx, args.max_n, with_polys=with_polys)
    params = {
        "family": family.kind.value,
        "order": family.order,
        "q": str(q),
        "max_n": args.max_n,
    }

    if args.command == "numbers":
        data = table.to_json_dict()
        if args.format == "csv":
            rows = [["n", "value"]] + [[str(n), str(v)] for n, v in enumerate(table.numbers)]
            _emit(_csv_lines(rows), args.output)
        else:
            _emit(_json_payload("numbers", params, data), args.output)
        return 0

    at = getattr(args, "at", None)
    if at is not None:
        params["at"] = {"x": str(at["x"]), "y": str(at["y"])}
        values = [p.evaluate(at["x"], at["y"]) for p in table.polys]
        if args.format == "csv":
            rows = [["n", "value"]] + [[str(n), str(v)] for n, v in enumerate(values)]
            _emit(_csv_lines(rows), args.output)
        else:
            data = table.to_json_dict()
            del data["polys"]
            data["evaluations"] = [str(v) for v in values]
            _emit(_json_payload("poly", params, data), args.output)
        return 0

    if args.format == "csv":
        rows = [["n", "polynomial"]] + [[str(n), f'"{p}"'] for n, p in enumerate(table.polys)]
        _emit(_csv_lines(rows), args.output)
    else:
        _emit(_json_payload("poly", params, table.to_json_dict()), args.output)
    return 0


def _verify_command(args: argparse.Namespace) -> int:
    suites = list(SUITE_NAMES) if "all" in args.suite else list(dict.fromkeys(args.suite))
    grid = Grid(
        n_max=args.n_max,
        alpha_set=tuple(args.alpha),
        m_set=tuple(args.m),
        q_set=tuple(args.q),
    )
    reports = run_suites(grid, suites, workers=args.workers)
    params = {
        "suites": suites,
        "n_max": grid.n_max,
        "alpha": list(grid.alpha_set),
        "m": list(grid.m_set),
        "q": [str(q) for q in grid.q_set],
    }
    passed = all_pass(reports)
    if args.format == "csv":
        rows = [["identity", "status", "checked_count", "erratum_candidate"]]
        rows += [
            [r.identity_id, r.status, str(r.checked_count), str(r.erratum_candidate).lower()]
            for r in reports
        ]
        _emit(_csv_lines(rows), args.output)
    else:
        data = {"all_pass": passed, "reports": [r.to_json_dict() for r in reports]}
        _emit(_json_payload("verify", params, data), args.output)
    return 0 if passed else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("numbers", "poly"):
        return _table_command(args)
    return _verify_command(args)


if __name__ == "__main__":
    sys.exit(main())
