"""Command-line front end: ``python -m concave_rank <subcommand> ...``.

Exit codes: 0 success, 1 verification or I/O failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence

from . import asymptotics as asy
from . import concave as cc
from .number_theory import partition_count
from .verify import SUITES, run_suite

VD_METHODS = ("andrews", "product", "fast")
RANK_METHODS = ("genfunc", "prop1", "oracle")


class UsageError(Exception):
    pass


def _records_csv(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _vd_values(nmax: int, method: str) -> list[int]:
    if method == "andrews":
        return cc.vd_andrews(nmax).coeffs
    if method == "product":
        return cc.vd_product(nmax).coeffs
    partition_count(nmax)
    return [cc.vd_fast(n) for n in range(nmax + 1)]


def _rank_table(nmax: int, method: str) -> cc.RankTable:
    if method == "genfunc":
        return cc.vdm_genfunc(nmax)
    if method == "oracle":
        if nmax > cc.ENUMERATION_BOUND:
            raise UsageError(f"--method oracle supports --max <= {cc.ENUMERATION_BOUND}")
        return cc.rank_table_oracle(nmax)
    return cc.rank_table_prop1(nmax)


def cmd_pn(args) -> int:
    if args.n > 2_000_000:
        raise UsageError("--n too large")
    _emit(str(partition_count(args.n)), args.out)
    return 0


def cmd_vd(args) -> int:
    values = _vd_values(args.max, args.method)
    if args.format == "json":
        text = json.dumps([{"n": n, "vd": v} for n, v in enumerate(values)])
    else:
        text = _records_csv(["n", "vd"], list(enumerate(values)))
    _emit(text, args.out)
    return 0


def cmd_rank_table(args) -> int:
    table = _rank_table(args.max, args.method)
    _emit(table.to_json() if args.format == "json" else table.to_csv(), args.out)
    return 0


def cmd_asym(args) -> int:
    if args.n > asy.EXACT_BUDGET:
        raise UsageError(f"--n must be <= {asy.EXACT_BUDGET}")
    point = asy.theorem1_error(args.ell, args.n)
    if args.format == "csv":
        text = asy.errors_to_csv([point])
    elif args.format == "json":
        text = json.dumps([point.__dict__])
    else:
        exact = cc.vdm_prop1(args.ell, args.n)
        estimate = asy.LogScaled(point.estimate_log)
        text = (
            f"N={args.n} ell={args.ell} weight={args.n + cc.triangular(args.ell)} "
            f"exact={exact} estimate={estimate.format()} rel_err={point.rel_err:.12g}"
        )
    _emit(text, args.out)
    return 0


def cmd_dist(args) -> int:
    if args.n > asy.EXACT_BUDGET:
        raise UsageError(f"--n must be <= {asy.EXACT_BUDGET}")
    if args.grid_step <= 0:
        raise UsageError("--grid-step must be positive")
    curve = asy.empirical_rank_cdf(args.n, asy.grid(step=args.grid_step))
    _emit(curve.to_json() if args.format == "json" else curve.to_csv(), args.out)
    return 0


def cmd_verify(args) -> int:
    checks = run_suite(args.suite, args.max)
    lines = [c.line() for c in checks]
    failed = sum(not c.ok for c in checks)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    _emit("\n".join(lines), args.out)
    return 1 if failed else 0


def _nonneg(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="concave-rank",
        description="Exact counts and asymptotics for ranks of strongly concave compositions.",
        allow_abbrev=False,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, formats=("csv", "json")):
        p = sub.add_parser(name, help=help_, allow_abbrev=False)
        p.add_argument("--out", metavar="PATH")
        p.add_argument("--format", choices=formats, default=formats[0])
        p.set_defaults(func=func)
        return p

    p = add("pn", cmd_pn, "print p(N)", formats=("text",))
    p.add_argument("--n", type=int, required=True)

    p = add("vd", cmd_vd, "V_d(n) for n <= MAX as CSV n,vd")
    p.add_argument("--max", type=_nonneg, required=True)
    p.add_argument("--method", choices=VD_METHODS, default="fast")

    p = add("rank-table", cmd_rank_table, "V_d(m,n) for n <= MAX as CSV n,m,count")
    p.add_argument("--max", type=_nonneg, required=True)
    p.add_argument("--method", choices=RANK_METHODS, default="prop1")

    p = add("asym", cmd_asym, "compare V_d(ell, N + |ell|(|ell|+1)/2) with p(N) F", formats=("text", "csv", "json"))
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--ell", type=int, required=True)

    p = add("dist", cmd_dist, "empirical rank CDF against the normal CDF")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--grid-step", type=float, default=0.1)

    p = add("verify", cmd_verify, "run a verification suite", formats=("text",))
    p.add_argument("--suite", choices=(*SUITES, "all"), required=True)
    p.add_argument("--max", type=_positive, default=None)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"{parser.prog}: I/O error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
