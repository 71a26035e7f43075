"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 out of stable range,
4 internal consistency failure, 5 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import serialize
from .cache import CoefficientCache, replay
from .engine import decompose, stability_report, stable_tensor
from .errors import ConsistencyError, InputError, StableTensorError
from .partitions import format_partition, parse_partition
from .rootsystem import CLASSICAL, GroupFamily, Kind
from .tables import EXPECTED_ROWS, reproduce_tables


def _partition(text):
    return parse_partition(text)


def _groups(text):
    return [Kind.parse(tok) for tok in text.split(",") if tok.strip()]


def _emit(dec, fmt, out):
    if fmt == "json":
        out.write(serialize.dumps(serialize.decomposition_doc(dec)))
    elif fmt == "tsv":
        out.write(serialize.to_tsv(dec))
    else:
        out.write(serialize.to_pretty(dec))


def cmd_decompose(args, out) -> int:
    family = GroupFamily(Kind.parse(args.group), args.rank)
    lam, mu = args.lhs, args.rhs
    for p in (lam, mu):
        if p.length > family.rank:
            raise InputError(f"({format_partition(p)}) has length {p.length} > rank {family.rank}")
    cache = CoefficientCache.resolve(args.cache)
    lhs, rhs = lam.padded(family.rank), mu.padded(family.rank)
    dec = None
    if cache is not None and not args.force_oracle:
        rec = cache.get(family.kind, family.rank, lhs, rhs)
        if rec is not None:
            dec = rec.to_decomposition()
    if dec is None:
        dec = decompose(
            family, lam, mu, force_oracle=args.force_oracle, require_stable=args.require_stable
        )
        if cache is not None:
            cache.put(dec)
    _emit(dec, args.format, out)
    return 0


def cmd_stable(args, out) -> int:
    _emit(stable_tensor(args.lhs, args.rhs), args.format, out)
    return 0


def cmd_stability(args, out) -> int:
    report = stability_report(args.lhs, args.rhs, args.groups, args.nmax)
    if args.format == "json":
        out.write(serialize.dumps(serialize.report_doc(report)))
    elif args.format == "tsv":
        out.write(serialize.report_tsv(report))
    else:
        out.write(serialize.report_pretty(report))
    return 0 if report.verified else 4


def cmd_compare_groups(args, out) -> int:
    lam, mu = args.lhs, args.rhs
    n0 = lam.length + mu.length
    rank = args.rank if args.rank is not None else n0 + 1
    decs = [decompose(GroupFamily(kind, rank), lam, mu) for kind in CLASSICAL]
    same = all(d.stripped() == decs[0].stripped() for d in decs[1:])
    if args.format == "json":
        doc = {
            "rank": rank,
            "identical": same,
            "results": [serialize.decomposition_doc(d) for d in decs],
        }
        out.write(serialize.dumps(doc))
    else:
        for d in decs:
            out.write(serialize.to_tsv(d) if args.format == "tsv" else serialize.to_pretty(d))
        out.write(f"identical: {'yes' if same else 'no'}\n")
    if rank >= n0 + 1 and not same:
        raise ConsistencyError(f"tables differ across groups at rank {rank} >= n0 + 1")
    return 0


def cmd_reproduce_tables(args, out) -> int:
    expected = None
    if args.expected:
        expected = dict(EXPECTED_ROWS)
        try:
            with open(args.expected, encoding="utf-8") as fh:
                raw = json.load(fh)
            for key, row in raw.items():
                kind, rank = key.rsplit(":", 1)
                expected[(Kind.parse(kind), int(rank))] = row
        except (ValueError, AttributeError) as exc:
            raise InputError(f"bad --expected file: {exc}") from exc
    cache = CoefficientCache.resolve(args.cache)
    ok, lines = reproduce_tables(args.out_dir, expected=expected, cache=cache)
    for line in lines:
        out.write(line + "\n")
    out.write("all tables reproduced\n" if ok else "table mismatch\n")
    return 0 if ok else 4


def cmd_verify_cache(args, out) -> int:
    cache = CoefficientCache.resolve(args.cache)
    if cache is None:
        raise InputError("verify-cache needs --cache or STABLETENSOR_CACHE")
    bad = 0
    records = cache.records()
    for rec in records:
        fresh = replay(rec)
        if fresh != rec.to_decomposition():
            bad += 1
            out.write(
                f"MISMATCH {rec.family} rank {rec.rank} "
                f"({format_partition(rec.lhs)}) x ({format_partition(rec.rhs)})\n"
            )
    out.write(f"{len(records) - bad}/{len(records)} cached records verified\n")
    return 0 if bad == 0 else 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stabletensor",
        description="Tensor product decompositions for GL, Sp, SO(2n+1) and SO(2n).",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, fmt=True, cache=True):
        p.add_argument("--lhs", type=_partition, required=True, help='partition, e.g. "2,1,1"')
        p.add_argument("--rhs", type=_partition, required=True)
        if fmt:
            p.add_argument("--format", choices=["json", "tsv", "pretty"], default="pretty")
        if cache:
            p.add_argument("--cache", metavar="PATH", help="JSON-lines cache file")

    p = sub.add_parser("decompose", help="decompose one tensor product")
    p.add_argument("--group", required=True, choices=[k.value for k in Kind])
    p.add_argument("--rank", type=int, required=True, help="n in GL(n), Sp(2n), SO(2n+1), SO(2n)")
    common(p)
    p.add_argument("--force-oracle", action="store_true", help="always use the Weyl-character oracle")
    p.add_argument(
        "--require-stable",
        action="store_true",
        help="fail with exit 3 instead of falling back to the oracle below the stable range",
    )
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("stable", help="stable tensor product (rank- and group-independent)")
    common(p, cache=False)
    p.set_defaults(func=cmd_stable)

    p = sub.add_parser("stability", help="tabulate over ranks and check the stability claims")
    common(p, cache=False)
    p.add_argument("--groups", type=_groups, default=list(CLASSICAL))
    p.add_argument("--nmax", type=int, default=None)
    p.set_defaults(func=cmd_stability)

    p = sub.add_parser("compare-groups", help="same product in Sp, SO(2n+1), SO(2n)")
    common(p, cache=False)
    p.add_argument("--rank", type=int, default=None, help="defaults to l(lhs) + l(rhs) + 1")
    p.set_defaults(func=cmd_compare_groups)

    p = sub.add_parser("reproduce-tables", help="regenerate the reference tables")
    p.add_argument("--out-dir", default="tables")
    p.add_argument("--expected", metavar="JSON", help='JSON object overriding expected rows, keyed like "sp:3"')
    p.add_argument("--cache", metavar="PATH")
    p.set_defaults(func=cmd_reproduce_tables)

    p = sub.add_parser("verify-cache", help="replay every cached record through the live code")
    p.add_argument("--cache", metavar="PATH")
    p.set_defaults(func=cmd_verify_cache)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args, out)
    except StableTensorError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
