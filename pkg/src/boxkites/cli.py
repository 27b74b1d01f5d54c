"""Command line: emit any structure as a table, or run the verification suite.

Exit status contract: 0 all checks pass (or emission succeeded), 1 some
check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys

from .render import FORMATS, TARGETS, RenderSpec, cmd_emit, json_text
from .verify import SECTIONS, run_verification

NEEDS_STRUT = {"box-kite", "yard", "mock", "quizzical", "pathion"}


def _dim_exponent(parser: argparse.ArgumentParser, dim: int) -> int:
    n = dim.bit_length() - 1
    if dim <= 0 or 1 << n != dim or n < 4:
        parser.error(f"--dim must be a power of two, at least 16; got {dim}")
    return n


def _parse_s_range(parser: argparse.ArgumentParser, text: str) -> tuple[int, ...]:
    values: set[int] = set()
    try:
        for piece in text.split(","):
            if "-" in piece:
                lo, hi = piece.split("-")
                values.update(range(int(lo), int(hi) + 1))
            else:
                values.add(int(piece))
    except ValueError:
        parser.error(f"bad --s-range {text!r}; use forms like 1-8,17")
    return tuple(sorted(values))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="boxkites",
        description="Exact zero-divisor structure of Cayley-Dickson algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    emit = sub.add_parser("emit", help="render a structure")
    emit.add_argument("target", choices=TARGETS)
    emit.add_argument("--dim", type=int, default=None,
                      help="algebra dimension (a power of two, default 16; 32 for pathion)")
    emit.add_argument("--strut", type=int, default=1, help="strut constant s")
    emit.add_argument("--strut-pair", choices=("AF", "BE", "CD"), default="AF",
                      help="strut pair for mock tables")
    emit.add_argument("--s-range", default=None,
                      help="strut constants for tripsync, e.g. 1-8,17")
    emit.add_argument("--format", choices=FORMATS, default="markdown")
    emit.add_argument("--out", default=None, help="output path (default stdout)")

    verify = sub.add_parser("verify", help="run the golden-fixture suite")
    verify.add_argument("--sections", default=None,
                        help=f"comma list from: {','.join(SECTIONS)}")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--out", default=None, help="output path (default stdout)")

    return parser


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "emit":
        default_dim = 32 if args.target == "pathion" else 16
        n = _dim_exponent(parser, args.dim if args.dim is not None else default_dim)
        half = 1 << (n - 1)
        if args.target in NEEDS_STRUT and not (0 < args.strut < half):
            parser.error(f"--strut must lie strictly between 0 and {half}")
        if args.target in ("yard", "mock", "quizzical", "strut-table", "sync-table") and n != 4:
            parser.error(f"target {args.target!r} is defined at dimension 16")
        s_values = _parse_s_range(parser, args.s_range) if args.s_range else ()
        spec = RenderSpec(
            target=args.target,
            format=args.format,
            n=n,
            s=args.strut,
            strut=args.strut_pair,
            s_values=s_values,
        )
        try:
            text = cmd_emit(spec)
        except ValueError as exc:
            parser.error(str(exc))
        _write(text, args.out)
        return 0

    sections = args.sections.split(",") if args.sections else None
    try:
        report = run_verification(sections)
    except ValueError as exc:
        parser.error(str(exc))
    if args.format == "json":
        _write(json_text(report.to_payload()), args.out)
    else:
        _write("\n".join(report.lines()) + "\n", args.out)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
