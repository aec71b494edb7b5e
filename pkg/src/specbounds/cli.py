"""Command-line front end.

Exit codes: 0 success, 1 a claim or row failed, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys

from . import harness
from .bounds import BoundError, bound_report
from .families import FamilySpec, generate
from .graph import GraphError
from .graph6 import Graph6Error, parse_graph6, read_graph6_file, to_graph6
from .invariants import SizeLimitError, invariant_report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _graph_inputs(args) -> list[tuple[int, str]]:
    if args.file:
        return list(read_graph6_file(args.file))
    if args.graph6:
        return [(0, args.graph6)]
    raise GraphError("give a graph6 string or --file")


def _parsed(args):
    for lineno, line in _graph_inputs(args):
        try:
            g = parse_graph6(line)
        except Graph6Error as exc:
            if not lineno:
                raise
            raise harness.BatchParseError(lineno, str(exc)) from None
        yield line, g


def cmd_family(args) -> int:
    print(to_graph6(generate(FamilySpec.parse(args.spec))))
    return EXIT_OK


def cmd_invariants(args) -> int:
    for line, g in _parsed(args):
        print(json.dumps({"graph6": line} | invariant_report(g).to_json()))
    return EXIT_OK


def cmd_bounds(args) -> int:
    status = EXIT_OK
    for line, g in _parsed(args):
        rep = bound_report(g, nikiforov_r=args.nikiforov_r, planar=True if args.planar else None)
        print(json.dumps({"graph6": line} | rep.to_json()))
        if not rep.chain_ok:
            status = EXIT_FAIL
    return status


def cmd_batch(args) -> int:
    result = harness.run_batch(read_graph6_file(args.input), strict=args.strict, jobs=args.jobs)
    text = harness.batch_csv(result) if args.format == "csv" else harness.batch_json(result)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.format == "csv":
        print(json.dumps(result.summary), file=sys.stderr)
    return EXIT_FAIL if result.failed else EXIT_OK


def cmd_verify(args) -> int:
    claims = [c.strip() for c in args.claims.split(",")] if args.claims else None
    results = harness.verify_claims(claims, max_s=args.max_s)
    if args.json:
        print(json.dumps([r.to_json() for r in results], indent=1, default=str))
    else:
        for r in results:
            print(r.line())
    failed = sum(1 for r in results if not r.passed)
    print(f"{len(results) - failed}/{len(results)} claims passed", file=sys.stderr)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specbounds", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", help="print a family member as graph6")
    p.add_argument("spec", help="e.g. multipartite:3,2  regbip:3,4  joinH:2  grid:3,3  cycle:5")
    p.set_defaults(func=cmd_family)

    for name, func, helptext in (
        ("invariants", cmd_invariants, "exact invariants as JSON lines"),
        ("bounds", cmd_bounds, "eigenvalue bounds as JSON lines"),
    ):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("graph6", nargs="?")
        p.add_argument("--file", help="graph6 file, one graph per line")
        if name == "bounds":
            p.add_argument("--nikiforov-r", type=int, default=None)
            p.add_argument("--planar", action="store_true", help="treat the input as planar (skips the minor search)")
        p.set_defaults(func=func)

    p = sub.add_parser("batch", help="bound table for a graph6 corpus")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output")
    p.add_argument("--strict", action="store_true", help="fail instead of skipping oversize graphs")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("verify-paper", help="re-derive every sharpness and comparison claim")
    p.add_argument("--claims", help=f"comma list from: {', '.join(harness.CLAIMS)}")
    p.add_argument("--max-s", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except harness.BatchParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (GraphError, BoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
