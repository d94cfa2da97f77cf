"""Command line front end.

Usage:
    hecke-blocks enumerate --n 3 --r 2
    hecke-blocks blocks-r1 --n 2 --r 1 --h 1/2
    hecke-blocks blocks-rpn --n 2 --r 2 --p 2 --h 1/2
    hecke-blocks verify lm --max-n 4 --max-r 2 --max-den 4
    hecke-blocks verify shift --n 3 --r 4 --p 2 --h 1/3
    hecke-blocks verify claim --max-n 4 --max-r 4 --max-den 6

Exit codes:
    0: success, or every verified instance passed
    1: usage error (bad flags, malformed rationals, p not dividing r)
    2: a verification found a counterexample
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .blocks_r1 import residue_classes
from .clifford import GrpnParams, grpn_blocks
from .multipartition import enumerate_multipartitions, to_nested
from .residue import HeckeParamsG1, parse_rational
from .sweeps import (
    SweepResult,
    claim_sweep,
    grpn_instances,
    lm_instances,
    lm_sweep,
    shift_sweep,
)

EXIT_OK, EXIT_USAGE, EXIT_COUNTEREXAMPLE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational_list(text: str):
    if not text.strip():
        return ()
    return tuple(_rational(x) for x in text.split(","))


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=["json", "csv", "table"], default="json")
    p.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hecke-blocks", description="Blocks of cyclotomic Hecke algebras of type G(r,1,n) and G(r,p,n).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    enum = sub.add_parser("enumerate", help="list the r-partitions of n")
    enum.add_argument("--n", type=int, required=True)
    enum.add_argument("--r", type=int, required=True)
    _common(enum)

    r1 = sub.add_parser("blocks-r1", help="blocks of type G(r,1,n)")
    r1.add_argument("--n", type=int, required=True)
    r1.add_argument("--r", type=int, required=True)
    r1.add_argument("--h", type=_rational, required=True)
    r1.add_argument("--k", type=_rational_list, default=None, help="k_1..k_{r-1}, comma separated (default all 0)")
    _common(r1)

    rpn = sub.add_parser("blocks-rpn", help="blocks of type G(r,p,n)")
    rpn.add_argument("--n", type=int, required=True)
    rpn.add_argument("--r", type=int, required=True)
    rpn.add_argument("--p", type=int, required=True)
    rpn.add_argument("--h", type=_rational, required=True)
    rpn.add_argument("--k", type=_rational_list, default=None, help="k_1..k_{d-1}, comma separated (default all 0)")
    _common(rpn)

    ver = sub.add_parser("verify", help="run a verification on one instance or over a sweep")
    ver.add_argument("check", choices=["lm", "shift", "claim"])
    ver.add_argument("--n", type=int, help="single instance size (needs --h)")
    ver.add_argument("--r", type=int)
    ver.add_argument("--p", type=int)
    ver.add_argument("--h", type=_rational)
    ver.add_argument("--k", type=_rational_list, default=None)
    ver.add_argument("--max-n", type=int, default=4)
    ver.add_argument("--max-r", type=int, default=2)
    ver.add_argument("--max-den", type=int, default=6)
    _common(ver)
    return parser


def _nonneg(name, value, minimum=0):
    if value is None or value < minimum:
        raise UsageError(f"--{name} must be an integer >= {minimum}")


def _g1(args) -> HeckeParamsG1:
    _nonneg("n", args.n)
    _nonneg("r", args.r, 1)
    k = args.k if args.k is not None else (0,) * (args.r - 1)
    try:
        return HeckeParamsG1(args.r, args.h, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _grpn(args) -> GrpnParams:
    _nonneg("n", args.n)
    _nonneg("r", args.r, 1)
    _nonneg("p", args.p, 1)
    if args.r % args.p:
        raise UsageError(f"p={args.p} does not divide r={args.r}")
    d = args.r // args.p
    k = args.k if args.k is not None else (0,) * (d - 1)
    try:
        return GrpnParams(args.n, args.r, args.p, args.h, k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _enumerate_output(n: int, r: int, fmt: str) -> str:
    mps = enumerate_multipartitions(n, r)
    if fmt == "json":
        return json.dumps({"kind": "enumerate", "n": n, "r": r, "count": len(mps), "multipartitions": [to_nested(m) for m in mps]}) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "multipartition"])
        for i, mp in enumerate(mps):
            writer.writerow([i, json.dumps(to_nested(mp))])
        return buf.getvalue()
    return f"{len(mps)} {r}-partition(s) of {n}\n" + "".join(f"  {to_nested(mp)}\n" for mp in mps)


def _report_output(report, fmt: str) -> str:
    return {"json": report.to_json, "csv": report.to_csv, "table": report.to_table}[fmt]()


def _verify(args) -> SweepResult:
    single = args.h is not None
    if args.check == "lm":
        if single:
            params = _g1(args)
            return lm_sweep([(args.n, args.r, params)])
        return lm_sweep(lm_instances(args.max_n, args.max_r, args.max_den))
    if single:
        instances = [_grpn(args)]
    else:
        ps = None if args.p is None else [args.p]
        rs = [args.r] if args.r is not None else range(1, args.max_r + 1)
        instances = grpn_instances(args.max_n, rs, args.max_den, ps)
    return shift_sweep(instances) if args.check == "shift" else claim_sweep(instances)


def _verify_output(result: SweepResult, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result.to_dict()) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["check", "passed", "instances", "failures"])
        writer.writerow([result.check, int(result.passed), result.instances, len(result.failures)])
        return buf.getvalue()
    status = "PASS" if result.passed else "FAIL"
    lines = [f"verify {result.check}: {status} ({result.instances} instance(s), {len(result.failures)} failure(s))"]
    lines.extend(f"  {json.dumps(f)}" for f in result.failures)
    return "\n".join(lines) + "\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    status = EXIT_OK
    try:
        if args.command == "enumerate":
            _nonneg("n", args.n)
            _nonneg("r", args.r, 1)
            text = _enumerate_output(args.n, args.r, args.format)
        elif args.command == "blocks-r1":
            params = _g1(args)
            text = _report_output(residue_classes(args.n, args.r, params), args.format)
        elif args.command == "blocks-rpn":
            text = _report_output(grpn_blocks(_grpn(args)), args.format)
        else:
            result = _verify(args)
            text = _verify_output(result, args.format)
            if not result.passed:
                status = EXIT_COUNTEREXAMPLE
    except UsageError as exc:
        print(f"hecke-blocks: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
