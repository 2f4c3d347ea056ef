import csv
import io
from fractions import Fraction
from typing import Iterable, List, Sequence

import sympy

from ..invariants.records import format_rational
from .fixtures import FixtureTable
from .records import CatalogRecord

INVARIANT_HEADERS = ("grid", "r", "q", "H", "h2")
GROUP_HEADERS = ("n", "m", "r", "q", "members", "h2", "separated")
NKI_HEADERS = ("k", "i", "n", "l", "admissible", "h2_adjacent", "h2_gap", "family")


def surd(h2: Fraction) -> str:
    """sqrt(h2) in simplified radical form, e.g. 244/121 -> 2*sqrt(61)/11"""
    return str(sympy.sqrt(sympy.Rational(h2.numerator, h2.denominator)))


def show_rational(value: Fraction) -> str:
    """Integers without a denominator, everything else as p/q"""
    return str(value.numerator) if value.denominator == 1 else format_rational(value)


def _grid_text(grid: Sequence[int]) -> str:
    return "(" + ",".join(str(i) for i in grid) + ")"


def invariant_row(record: CatalogRecord) -> List[str]:
    p = record.payload
    return [_grid_text(record.grids[0]), show_rational(p.r), str(p.q), surd(p.h2),
            show_rational(p.h2)]


def fixture_rows(table: FixtureTable) -> List[List[str]]:
    return [[str(row.grid), show_rational(row.r), str(row.q), surd(row.h2), show_rational(row.h2)]
            for row in table.rows]


def group_row(record: CatalogRecord) -> List[str]:
    p = record.payload
    return [str(record.n), str(record.m), show_rational(p.r),
            "-" if p.q is None else str(p.q),
            " ".join(_grid_text(g) for g in record.grids),
            " ".join(show_rational(h) for h in p.h2_values),
            "yes" if p.fully_separated else "no"]


def nki_row(record: CatalogRecord) -> List[str]:
    p = record.payload
    pair = p.h2_pair or ("-", "-")
    return [str(p.k), str(p.i), str(record.n), str(p.l), "yes" if p.admissible else "no",
            *(v if isinstance(v, str) else show_rational(v) for v in pair),
            p.family or "-"]


def format_table(headers: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    """Left-aligned columns separated by two spaces"""
    rows = [list(map(str, r)) for r in rows]
    widths = [len(h) for h in headers]
    for row in rows:
        widths = [max(w, len(c)) for w, c in zip(widths, row)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip()
             for line in [list(headers)] + rows]
    return "\n".join(lines) + "\n"


def format_csv(headers: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    writer.writerows(rows)
    return buffer.getvalue()
