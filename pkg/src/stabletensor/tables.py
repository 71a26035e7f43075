"""Reference tables for (2,1,1) x (1,1) and the harness that regenerates them.

Rows are kept in the same textual form as the published tables so that a
visual diff against the source is easy.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from .engine import Memo, decompose, stable_threshold
from .errors import InputError
from .oracle import Decomposition
from .partitions import Partition, format_partition
from .rootsystem import GroupFamily, Kind

LAM = Partition([2, 1, 1])
MU = Partition([1, 1])


@dataclass(frozen=True)
class TableSpec:
    number: int
    kind: Kind
    ranks: tuple[int, ...]
    filename: str
    caption: str


TABLES = (
    TableSpec(1, Kind.GL, (3, 4, 5, 6), "table1_gl.tsv", "Decomposition for GL(n)"),
    TableSpec(2, Kind.SO_EVEN, (3, 4, 5, 6, 7), "table2_so_even.tsv", "Decomposition for SO(2n)"),
    TableSpec(3, Kind.SO_ODD, (3, 4, 5, 6), "table3_so_odd.tsv", "Decomposition for SO(2n+1)"),
    TableSpec(4, Kind.SP, (3, 4, 5, 6), "table4_sp.tsv", "Decomposition for Sp(2n)"),
)

# (kind, rank) -> row as printed in the published tables
EXPECTED_ROWS = {
    (Kind.GL, 3): "(2,2,2) + (3,2,1)",
    (Kind.GL, 4): "(2,2,2,0) + (2,2,1,1) + (3,2,1,0) + (3,1,1,1)",
    (Kind.GL, 5): "(2,2,2,0,0) + (2,2,1,1,0) + (2,1,1,1,1) + (3,2,1,0,0) + (3,1,1,1,0)",
    (Kind.GL, 6): "(2,2,2,0,0,0) + (2,2,1,1,0,0) + (2,1,1,1,1,0) + (3,2,1,0,0,0) + (3,1,1,1,0,0)",
    (Kind.SO_EVEN, 3): "(2,2,2) + (1,1,0) + (2,2,0) + (3,2,1) + (2,0,0) + (3,1,0) + 2×(2,1,1)",
    (Kind.SO_EVEN, 4): (
        "(1,1,1,1) + (1,1,1,-1) + (2,2,2,0) + (1,1,0,0) + (2,2,1,1) + (2,2,1,-1) + (2,2,0,0)"
        " + (3,2,1,0) + (2,0,0,0) + (3,1,1,-1) + (3,1,1,1) + (3,1,0,0) + 3×(2,1,1,0)"
    ),
    (Kind.SO_EVEN, 5): (
        "(1,1,1,1,0) + (2,2,2,0,0) + (1,1,0,0,0) + (2,2,1,1,0) + (2,2,0,0,0) + (2,1,1,1,1)"
        " + (3,2,1,0,0) + (2,0,0,0,0) + (3,1,1,1,0) + (3,1,0,0,0) + (2,1,1,1,-1) + 2×(2,1,1,0,0)"
    ),
    (Kind.SO_EVEN, 6): (
        "(1,1,1,1,0,0) + (2,2,2,0,0,0) + (1,1,0,0,0,0) + (2,2,1,1,0,0) + (2,2,0,0,0,0)"
        " + (2,1,1,1,1,0) + (3,2,1,0,0,0) + (2,0,0,0,0,0) + (3,1,1,1,0,0) + (3,1,0,0,0,0)"
        " + 2×(2,1,1,0,0,0)"
    ),
    (Kind.SO_EVEN, 7): (
        "(1,1,1,1,0,0,0) + (2,2,2,0,0,0,0) + (1,1,0,0,0,0,0) + (2,2,1,1,0,0,0) + (2,2,0,0,0,0,0)"
        " + (2,1,1,1,1,0,0) + (3,2,1,0,0,0,0) + (2,0,0,0,0,0,0) + (3,1,1,1,0,0,0)"
        " + (3,1,0,0,0,0,0) + 2×(2,1,1,0,0,0,0)"
    ),
    (Kind.SO_ODD, 3): (
        "(1,1,1) + (2,2,2) + (1,1,0) + (2,2,1) + (2,2,0) + (2,1,0) + (3,2,1) + (2,0,0)"
        " + (3,1,1) + (3,1,0) + 2×(2,1,1)"
    ),
    (Kind.SO_ODD, 4): (
        "(1,1,1,1) + (2,2,2,0) + (1,1,0,0) + (2,2,1,1) + (2,2,0,0) + (2,1,1,1) + (3,2,1,0)"
        " + (2,0,0,0) + (3,1,1,1) + (3,1,0,0) + 2×(2,1,1,0)"
    ),
    (Kind.SO_ODD, 5): (
        "(1,1,1,1,0) + (2,2,2,0,0) + (1,1,0,0,0) + (2,2,1,1,0) + (2,2,0,0,0) + (2,1,1,1,1)"
        " + (3,2,1,0,0) + (2,0,0,0,0) + (3,1,1,1,0) + (3,1,0,0,0) + 2×(2,1,1,0,0)"
    ),
    (Kind.SO_ODD, 6): (
        "(1,1,1,1,0,0) + (2,2,2,0,0,0) + (1,1,0,0,0,0) + (2,2,1,1,0,0) + (2,2,0,0,0,0)"
        " + (2,1,1,1,1,0) + (3,2,1,0,0,0) + (2,0,0,0,0,0) + (3,1,1,1,0,0) + (3,1,0,0,0,0)"
        " + 2×(2,1,1,0,0,0)"
    ),
    (Kind.SP, 3): "(2,2,2) + (1,1,0) + (2,2,0) + (2,1,1) + (3,2,1) + (2,0,0) + (3,1,0)",
    (Kind.SP, 4): (
        "(1,1,1,1) + (2,2,2,0) + (1,1,0,0) + (2,2,1,1) + (2,2,0,0) + (3,2,1,0) + (2,0,0,0)"
        " + (3,1,1,1) + (3,1,0,0) + 2×(2,1,1,0)"
    ),
    (Kind.SP, 5): (
        "(1,1,1,1,0) + (2,2,2,0,0) + (1,1,0,0,0) + (2,2,1,1,0) + (2,2,0,0,0) + (2,1,1,1,1)"
        " + (3,2,1,0,0) + (2,0,0,0,0) + (3,1,1,1,0) + (3,1,0,0,0) + 2×(2,1,1,0,0)"
    ),
    (Kind.SP, 6): (
        "(1,1,1,1,0,0) + (2,2,2,0,0,0) + (1,1,0,0,0,0) + (2,2,1,1,0,0) + (2,2,0,0,0,0)"
        " + (2,1,1,1,1,0) + (3,2,1,0,0,0) + (2,0,0,0,0,0) + (3,1,1,1,0,0) + (3,1,0,0,0,0)"
        " + 2×(2,1,1,0,0,0)"
    ),
}

_TERM = re.compile(r"^\s*(?:(\d+)\s*[×x*]\s*)?\(([-\d,\s]*)\)\s*$")


def parse_row(text: str) -> dict[tuple, int]:
    """Parse ``"(2,2,1,1) + 3×(2,1,1,0)"`` into a coefficient table."""
    terms: dict[tuple, int] = {}
    for chunk in text.split("+"):
        m = _TERM.match(chunk)
        if not m:
            raise InputError(f"cannot parse table term {chunk!r}")
        mult = int(m.group(1) or 1)
        weight = tuple(int(x) for x in m.group(2).split(",") if x.strip())
        terms[weight] = terms.get(weight, 0) + mult
    return terms


def expected_tables(rows=None) -> dict:
    rows = EXPECTED_ROWS if rows is None else rows
    return {key: parse_row(text) if isinstance(text, str) else dict(text) for key, text in rows.items()}


def compute_row(kind: Kind, rank: int, cache=None, memo: Memo | None = None) -> Decomposition:
    family = GroupFamily(kind, rank)
    lhs, rhs = LAM.padded(rank), MU.padded(rank)
    if cache is not None:
        rec = cache.get(kind, rank, lhs, rhs)
        if rec is not None:
            return rec.to_decomposition()
    dec = decompose(family, LAM, MU, memo=memo)
    if cache is not None:
        cache.put(dec)
    return dec


def engine_for(kind: Kind, rank: int) -> str:
    if kind is Kind.GL or rank < stable_threshold(kind, LAM, MU):
        return "oracle"
    return "engine"


def table_tsv(table: TableSpec, rows: dict) -> str:
    out = ["group\trank\tweight\tmult\n"]
    for rank in table.ranks:
        dec = rows[(table.kind, rank)]
        for w, m in dec.items():
            out.append(f"{GroupFamily(table.kind, rank)}\t{rank}\t{format_partition(w)}\t{m}\n")
    return "".join(out)


def diff_row(actual: dict, expected: dict) -> list[str]:
    lines = []
    for w in sorted(set(actual) | set(expected), reverse=True):
        a, e = actual.get(w, 0), expected.get(w, 0)
        if a != e:
            lines.append(f"({format_partition(w)}): computed {a}, expected {e}")
    return lines


def reproduce_tables(out_dir=None, expected=None, cache=None, memo: Memo | None = None):
    """Regenerate all four tables, write TSVs and diff against ``expected``.

    Returns ``(ok, report_lines)``.
    """
    memo = memo if memo is not None else Memo()
    expected = expected_tables(expected)
    rows = {}
    lines = []
    ok = True
    for table in TABLES:
        for rank in table.ranks:
            dec = compute_row(table.kind, rank, cache=cache, memo=memo)
            rows[(table.kind, rank)] = dec
            want = expected.get((table.kind, rank))
            if want is None:
                ok = False
                lines.append(f"FAIL table {table.number} {dec.family}: no expected row")
                continue
            problems = diff_row(dict(dec.items()), want)
            status = "PASS" if not problems else "FAIL"
            ok = ok and not problems
            lines.append(
                f"{status} table {table.number} {dec.family} [{engine_for(table.kind, rank)}]:"
                f" {len(dec)} terms, total multiplicity {dec.total}"
            )
            lines.extend("    " + p for p in problems)
    if out_dir is not None:
        out = Path(out_dir)
        out.mkdir(parents=True, exist_ok=True)
        for table in TABLES:
            (out / table.filename).write_text(table_tsv(table, rows), encoding="utf-8")
    return ok, lines
