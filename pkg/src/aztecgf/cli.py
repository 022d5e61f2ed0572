"""Command-line interface.

Subcommands: genfun, count, verify, render, bench.  All computational
output is deterministic (identical invocations give byte-identical stdout
and files); bench prints wall-clock timings and is the one exception.
Exit codes: 0 success, 1 verification failure, 2 bad flags.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import formulas, stats, verify
from .engine import count_tilings, enumerate_tilings, matching_genfun, tiling_genfun_dp
from .errors import AztecError
from .regions import (
    aztec_diamond,
    aztec_rectangle_with_holes,
    dual_graph,
    region_from_json,
    semihexagon_with_dents,
)
from .render import render_ascii, render_svg


def _positions(text):
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    return values


def build_parser():
    parser = argparse.ArgumentParser(
        prog="aztecgf",
        description="Exact tiling generating functions for Aztec rectangles and semihexagons.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("genfun", help="print the tiling generating function F(q, t)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--holes", type=_positions, required=True,
                   help="kept southeast positions s1,s2,... (1-based)")
    p.add_argument("--method", choices=("brute", "dp", "closed"), default="closed")
    p.add_argument("--json", action="store_true", help="emit JSON instead of the term list")

    p = sub.add_parser("count", help="print an exact tiling count")
    p.add_argument("--region", choices=("aztec", "rect", "semihex"), required=True)
    p.add_argument("--order", type=int, help="order of the Aztec diamond")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--holes", type=_positions)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--dents", type=_positions)
    p.add_argument("--method", choices=("enumerate", "dp"), default="enumerate")
    p.add_argument("--threads", type=int, default=1,
                   help="split the matching sum across worker threads (same result)")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=verify.SUITES + ("all",), required=True)

    p = sub.add_parser("render", help="draw a region or one of its tilings")
    p.add_argument("--region", choices=("aztec", "rect", "semihex"))
    p.add_argument("--in", dest="infile", help="read a serialized region (JSON) instead")
    p.add_argument("--order", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--holes", type=_positions)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--dents", type=_positions)
    p.add_argument("--tiling", help='"minimal" or the 0-based index into the enumeration')
    p.add_argument("--paths", action="store_true", help="overlay the Schröder paths")
    p.add_argument("--format", choices=("svg", "ascii"), default="svg")
    p.add_argument("--out", help="output file (stdout when omitted)")

    p = sub.add_parser("bench", help="time the DP against brute-force enumeration")
    p.add_argument("--order", type=int, required=True)
    return parser


def _build_region(args, parser):
    if getattr(args, "infile", None):
        with open(args.infile, "r", encoding="utf-8") as fh:
            return region_from_json(json.load(fh))
    kind = args.region
    if kind is None:
        parser.error("either --region or --in is required")
    if kind == "aztec":
        if args.order is None:
            parser.error("--region aztec requires --order")
        return aztec_diamond(args.order)
    if kind == "rect":
        if args.m is None or args.n is None or args.holes is None:
            parser.error("--region rect requires --m, --n and --holes")
        return aztec_rectangle_with_holes(args.m, args.n, args.holes)
    if args.a is None or args.b is None or args.dents is None:
        parser.error("--region semihex requires --a, --b and --dents")
    return semihexagon_with_dents(args.a, args.b, args.dents)


def cmd_genfun(args):
    fn = {
        "brute": stats.genfun_bruteforce,
        "dp": stats.genfun_via_weights,
        "closed": formulas.rectangle_genfun,
    }[args.method]
    poly = fn(args.m, args.n, args.holes)
    if args.json:
        print(json.dumps(poly.to_json_obj(), separators=(",", ":")))
    else:
        print(poly.to_text())
    return 0


def cmd_count(args, parser):
    region = _build_region(args, parser)
    if args.threads > 1:
        count = matching_genfun(dual_graph(region), threads=args.threads).evaluate(1, 1)
    elif args.method == "dp":
        if region.lattice != "square":
            parser.error("--method dp applies to square-lattice regions")
        count = tiling_genfun_dp(region)
    else:
        count = count_tilings(region)
    print(int(count))
    return 0


def cmd_verify(args):
    failures = verify.run_suite(args.suite, sys.stdout)
    total = "all suites" if args.suite == "all" else f"suite {args.suite}"
    if failures:
        print(f"{total}: {failures} FAILED")
        return 1
    print(f"{total}: ok")
    return 0


def cmd_render(args, parser):
    region = _build_region(args, parser)
    tiling = None
    if args.tiling is not None:
        if args.tiling == "minimal":
            if region.key[0] != "aztec_rectangle":
                parser.error("--tiling minimal needs a rect region")
            m, n, s = region.rect_params
            tiling = stats.minimal_tiling(m, n, s)
        else:
            try:
                index = int(args.tiling)
            except ValueError:
                parser.error("--tiling takes 'minimal' or an integer index")
            for k, t in enumerate(enumerate_tilings(region)):
                if k == index:
                    tiling = t
                    break
            if tiling is None:
                parser.error(f"tiling index {index} out of range")
    if args.paths and (tiling is None or region.key[0] != "aztec_rectangle"):
        parser.error("--paths needs a rect region with a tiling")
    if args.format == "svg":
        data = render_svg(region, tiling, paths=args.paths)
    else:
        data = render_ascii(region, tiling).encode("utf-8")
    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode("utf-8"))
    return 0


def cmd_bench(args):
    print(f"{'order':>5}  {'dp count':>28}  {'dp ms':>10}  {'brute ms':>10}")
    for n in range(1, args.order + 1):
        region = aztec_diamond(n)
        t0 = time.perf_counter()
        count = tiling_genfun_dp(region)
        dp_ms = (time.perf_counter() - t0) * 1000
        if n <= 4:
            t0 = time.perf_counter()
            brute = sum(1 for _ in enumerate_tilings(region))
            brute_ms = f"{(time.perf_counter() - t0) * 1000:10.2f}"
            assert brute == count
        else:
            brute_ms = f"{'-':>10}"
        print(f"{n:>5}  {count:>28}  {dp_ms:10.2f}  {brute_ms}")
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "genfun":
            return cmd_genfun(args)
        if args.command == "count":
            return cmd_count(args, parser)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "render":
            return cmd_render(args, parser)
        return cmd_bench(args)
    except AztecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
