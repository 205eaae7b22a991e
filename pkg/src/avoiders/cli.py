"""Command-line interface.

Subcommands: ``count``, ``enumerate``, ``phi``, ``series``, ``verify``.
Every command accepts ``--json`` for machine-readable output, with counts and
series coefficients rendered as decimal strings since they outgrow 64-bit
integers quickly.  Exit codes: 0 on success, 1 when a verify check fails,
2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .bijection import format_perm_list, parse_perm_list, phi, phi_inverse
from .enumeration import ClassDescriptor, count_class, enumerate_class
from .perms import format_perm, is_permutation, parse_perm
from .series import (
    PowerSeries,
    catalan_series,
    gf_full,
    gf_start_small,
    kotesovec_series,
)
from .verify import render_report, run_checks

SERIES_BUILDERS = {
    "catalan": catalan_series,
    "G": gf_start_small,
    "F": gf_full,
    "kotesovec": kotesovec_series,
}


def _parse_patterns(text: str) -> tuple[tuple[int, ...], ...]:
    # Comma-separated digit strings, e.g. "1243,2134"; fine for the pattern
    # lengths (<= 9) this tool deals in.
    patterns = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            pattern = tuple(int(ch) for ch in token)
        except ValueError:
            raise ValueError(f"pattern {token!r} is not a digit string") from None
        if not is_permutation(pattern):
            raise ValueError(f"pattern {token!r} is not a permutation of 1..{len(token)}")
        patterns.append(pattern)
    return tuple(patterns)


def _descriptor(args: argparse.Namespace) -> ClassDescriptor:
    return ClassDescriptor(
        n=args.n,
        patterns=_parse_patterns(args.patterns),
        start_small_only=args.start_small,
        k=args.k,
        j=args.j,
    )


def _add_class_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n", type=int, required=True, help="permutation length")
    parser.add_argument(
        "--patterns",
        default="",
        help="comma-separated patterns as digit strings, e.g. 1243,2134",
    )
    parser.add_argument(
        "--start-small",
        action="store_true",
        help="keep only permutations not starting with their largest entry",
    )
    parser.add_argument("--k", type=int, default=None, help="exact key mid-123 count")
    parser.add_argument(
        "--j", type=int, default=None, help="exact position of the last mid-123 entry"
    )


def cmd_count(args: argparse.Namespace) -> int:
    count = count_class(_descriptor(args))
    if args.json:
        print(json.dumps({"count": str(count)}))
    else:
        print(count)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    for perm in enumerate_class(_descriptor(args)):
        if args.json:
            print(json.dumps(list(perm)))
        else:
            print(format_perm(perm))
    return 0


def cmd_phi(args: argparse.Namespace) -> int:
    if args.forward is not None:
        elements = phi(parse_perm(args.forward))
        if args.json:
            print(json.dumps({"elements": [list(p) for p in elements]}))
        else:
            print(format_perm_list(elements))
    else:
        perm = phi_inverse(parse_perm_list(args.inverse))
        if args.json:
            print(json.dumps({"permutation": list(perm)}))
        else:
            print(format_perm(perm))
    return 0


def cmd_series(args: argparse.Namespace) -> int:
    if args.order < 0:
        raise ValueError("order must be >= 0")
    series: PowerSeries = SERIES_BUILDERS[args.which](args.order)
    if args.json:
        print(json.dumps({"coefficients": [str(c) for c in series.coeffs]}))
    else:
        for n, c in enumerate(series.coeffs):
            print(f"{n}: {c}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_checks(max_n=args.max_n, order=args.order, deep=args.deep)
    if args.json:
        payload = {
            "checks": [
                {
                    "name": r.name,
                    "scope": r.scope,
                    "passed": r.passed,
                    "detail": r.detail,
                }
                for r in results
            ],
            "passed": all(r.passed for r in results),
        }
        print(json.dumps(payload, indent=2))
    else:
        print(render_report(results))
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="avoiders",
        description="Count, enumerate, and verify {1243, 2134}-avoiding permutations.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_count = subparsers.add_parser("count", help="size of an avoidance class")
    _add_class_arguments(p_count)
    p_count.set_defaults(handler=cmd_count)

    p_enum = subparsers.add_parser(
        "enumerate", help="stream an avoidance class, one permutation per line"
    )
    _add_class_arguments(p_enum)
    p_enum.set_defaults(handler=cmd_enumerate)

    p_phi = subparsers.add_parser(
        "phi", help="apply the bijection onto lists of start-small 123-avoiders"
    )
    direction = p_phi.add_mutually_exclusive_group(required=True)
    direction.add_argument(
        "--forward", metavar="PERM", help="permutation in one-line notation"
    )
    direction.add_argument(
        "--inverse", metavar="LIST", help="list of permutations joined by ' | '"
    )
    p_phi.set_defaults(handler=cmd_phi)

    p_series = subparsers.add_parser(
        "series", help="print exact series coefficients, one per line"
    )
    p_series.add_argument(
        "--which", choices=sorted(SERIES_BUILDERS), required=True
    )
    p_series.add_argument("--order", type=int, required=True)
    p_series.set_defaults(handler=cmd_series)

    p_verify = subparsers.add_parser(
        "verify", help="run the whole cross-verification battery"
    )
    p_verify.add_argument("--max-n", dest="max_n", type=int, default=8)
    p_verify.add_argument("--order", type=int, default=100)
    p_verify.add_argument(
        "--deep",
        action="store_true",
        help="sweep to n = 10 and compare enumeration with the series to n = 11",
    )
    p_verify.set_defaults(handler=cmd_verify)

    for sub in (p_count, p_enum, p_phi, p_series, p_verify):
        sub.add_argument("--json", action="store_true", help="machine-readable output")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
