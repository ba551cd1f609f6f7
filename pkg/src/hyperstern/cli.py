"""Command-line entry point: ``hyperstern <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors.  Diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction
from typing import List, Optional

from . import verify
from .core import DigitString, stern_poly, to_digits
from .extremal import PHI, cf_even_node, cf_odd_node, scan_bound
from .matrixrep import stern_count_big
from .oracle import enumerate_expansions
from .polyring import canonical_text, to_json


class UsageError(Exception):
    pass


def _base(text: str) -> int:
    b = int(text)
    if b < 2:
        raise argparse.ArgumentTypeError("base must be at least 2")
    return b


def _nonneg(text: str) -> int:
    n = int(text)
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return n


def _read_decimal(spec: str) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    text = spec
    if spec.startswith("@"):
        with open(spec[1:]) as fh:
            text = fh.read()
    text = text.strip()
    if not text.isdigit():
        raise UsageError(f"not a nonnegative decimal integer: {text[:40]!r}")
    return int(text)


def _read_digit_file(path: str, b: int) -> DigitString:
    with open(path) as fh:
        text = fh.read().strip()
    if re.search(r"[\s,]", text):
        digits = [int(tok) for tok in re.split(r"[\s,]+", text) if tok]
    elif b <= 10:
        digits = [int(ch) for ch in text]
    else:
        raise UsageError("digits of a base above 10 must be separated by spaces or commas")
    while digits and digits[0] == 0:
        digits.pop(0)
    try:
        return DigitString(b, tuple(digits))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_eval(args) -> int:
    p = stern_poly(args.n, args.base)
    if args.format == "json":
        print(json.dumps(to_json(p)))
    else:
        print(canonical_text(p))
    return 0


def cmd_table(args) -> int:
    if args.start > args.stop:
        raise UsageError("--from must not exceed --to")
    rows = [(n, stern_poly(n, args.base)) for n in range(args.start, args.stop + 1)]
    if args.format == "json":
        print(json.dumps([{"n": n, "poly": to_json(p)} for n, p in rows]))
    else:
        for n, p in rows:
            print(f"{n}\t{canonical_text(p)}")
    return 0


def cmd_enumerate(args) -> int:
    hs = enumerate_expansions(args.n, args.base)
    if args.format == "json":
        print(json.dumps({"base": args.base, "n": args.n, "expansions": [list(h.mults) for h in hs]}))
    else:
        for h in hs:
            print(h.text())
    return 0


def cmd_count(args) -> int:
    if (args.n is None) == (args.digits is None):
        raise UsageError("give exactly one of --n or --digits")
    if args.digits is not None:
        ds = _read_digit_file(args.digits.lstrip("@"), args.base)
    else:
        ds = to_digits(_read_decimal(args.n), args.base)
    start = time.perf_counter()
    count = stern_count_big(ds) if ds.digits else 0
    elapsed = time.perf_counter() - start
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    if args.format == "json":
        print(json.dumps({"base": args.base, "digits": len(ds), "count": str(count)}))
    else:
        print(count)
    if args.bench:
        rate = len(ds) / elapsed if elapsed > 0 else float("inf")
        print(f"bench: {len(ds)} digits in {elapsed:.3f} s ({rate:.0f} digits/s)", file=sys.stderr)
    return 0


def cmd_convergent(args) -> int:
    b = args.base
    node = cf_odd_node(args.l, 0, b) if args.which == "odd" else cf_even_node(args.l, 0, b)
    if args.at_ones:
        value: Fraction = node.value([1] * b, [1] * b)
        if args.format == "json":
            print(json.dumps({"num": value.numerator, "den": value.denominator, "float": float(value)}))
        else:
            print(f"{value.numerator}/{value.denominator} ~ {float(value):.15f} (phi {PHI:.15f})")
        return 0
    pair = node.fold()
    if args.format == "json":
        print(json.dumps({"num": to_json(pair.num), "den": to_json(pair.den)}))
    else:
        print(f"({canonical_text(pair.num)}) / ({canonical_text(pair.den)})")
    return 0


def cmd_verify(args) -> int:
    cfg = verify.Config(
        base_max=args.base_max,
        n_max=args.n_max,
        l_max=args.l_max,
        k_max=args.k_max,
        scan_bound=args.scan_bound if args.scan_bound is not None else min(scan_bound(), 10**5),
    )
    summaries = verify.summarize(verify.run(args.suite, cfg))
    failed = [c for s in summaries if not s.informational for c in s.failures]
    if args.format == "json":
        print(json.dumps([
            {"suite": s.suite, "identity": s.identity, "cases": s.cases,
             "failures": len(s.failures), "informational": s.informational}
            for s in summaries
        ]))
    else:
        for s in summaries:
            if s.informational:
                status = "INFO"
                tail = f"holds in {s.cases - len(s.failures)}/{s.cases} cases"
            else:
                status = "PASS" if not s.failures else "FAIL"
                tail = f"{s.cases} cases" + (f", {len(s.failures)} failed" if s.failures else "")
            print(f"{status} {s.suite}: {s.identity} ({tail})")
    if failed:
        for c in failed:
            print(json.dumps(c.report()), file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperstern", description="Base-b Stern polynomials and hyper b-ary expansions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--base", "-b", type=_base, required=True)
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("eval", help="print w_T(n) for one n")
    common(p)
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("table", help="print w_T(n) for a range of n")
    common(p)
    p.add_argument("--from", dest="start", type=_nonneg, default=1)
    p.add_argument("--to", dest="stop", type=_nonneg, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("enumerate", help="list the hyper b-ary expansions of n")
    common(p)
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="w_T(n | 1..1) by the big-integer matrix path")
    common(p)
    p.add_argument("--n", help="decimal integer, or @file holding one")
    p.add_argument("--digits", help="@file of base-b digits, most significant first")
    p.add_argument("--bench", action="store_true", help="report digits/second on stderr")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("convergent", help="continued-fraction convergent at the maximal indices")
    common(p)
    p.add_argument("--l", type=_positive, required=True)
    p.add_argument("--which", choices=("odd", "even"), required=True)
    p.add_argument("--at-ones", action="store_true", help="fold numerically at z = t = 1")
    p.set_defaults(func=cmd_convergent)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    p.add_argument("--base-max", type=_base, default=4)
    p.add_argument("--n-max", type=_nonneg, default=256)
    p.add_argument("--l-max", type=_positive, default=4)
    p.add_argument("--k-max", type=_positive, default=200)
    p.add_argument("--scan-bound", type=_positive, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"hyperstern: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
