"""Embedded G(2,4), G(2,5) and G(2,6) reference tables (H given as H^2)"""
from fractions import Fraction
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict

from ..invariants.exact import beta_invariants
from ..invariants.records import Rational
from ..invariants.selection import GridLabel
from ..search.enumeration import symmetry_classes


class FixtureRow(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    grid: GridLabel
    r: Rational
    q: int
    h2: Rational


class FixtureTable(BaseModel):
    model_config = ConfigDict(frozen=True)

    model: str
    rows: Tuple[FixtureRow, ...]

    def grids(self) -> List[str]:
        return [str(row.grid) for row in self.rows]


def _table(n: int, rows) -> FixtureTable:
    return FixtureTable(model=f"G(2,{n})", rows=tuple(
        FixtureRow(grid=GridLabel(indices=grid), r=r, q=q, h2=Fraction(h2))
        for grid, r, q, h2 in rows
    ))


REFERENCE_TABLES: Dict[int, FixtureTable] = {
    4: _table(4, [
        ((0, 1), 4, 4, "4"),
        ((1, 2), 6, 0, "2"),
        ((0, 2), 10, 2, "2/5"),
    ]),
    5: _table(5, [
        ((0, 1), 6, 6, "4"),
        ((1, 2), 10, 2, "52/25"),
        ((0, 2), 16, 4, "7/16"),
        ((0, 3), 14, 2, "44/49"),
        ((0, 4), 8, 0, "2"),
        ((1, 3), 20, 0, "1/5"),
    ]),
    6: _table(6, [
        ((0, 1), 8, 8, "4"),
        ((1, 2), 14, 4, "106/49"),
        ((2, 3), 16, 0, "2"),
        ((0, 2), 22, 6, "58/121"),
        ((0, 3), 22, 4, "98/121"),
        ((0, 4), 18, 2, "74/81"),
        ((0, 5), 10, 0, "2"),
        ((1, 3), 30, 2, "2/9"),
        ((1, 4), 26, 0, "98/169"),
    ]),
}


def fixture_table(n: int) -> FixtureTable:
    try:
        return REFERENCE_TABLES[n]
    except KeyError:
        raise ValueError(f"No embedded table for G(2,{n}); available: {sorted(REFERENCE_TABLES)}") from None


def regenerate_table(n: int) -> FixtureTable:
    """One row per reversal/complement class, adjacent grids first"""
    rows = []
    for cls in symmetry_classes(n, 2):
        grid = cls.representative
        record = beta_invariants(grid.to_beta(n))
        rows.append(FixtureRow(grid=grid, r=record.r, q=record.q, h2=record.h2))
    return FixtureTable(model=f"G(2,{n})", rows=tuple(rows))


def compare_tables(generated: FixtureTable, expected: FixtureTable) -> List[str]:
    """Human-readable mismatches, empty when the tables agree row for row"""
    problems = []
    if generated.model != expected.model:
        problems.append(f"model {generated.model} != {expected.model}")
    if len(generated.rows) != len(expected.rows):
        problems.append(f"{generated.model}: {len(generated.rows)} rows, expected {len(expected.rows)}")
    for ours, theirs in zip(generated.rows, expected.rows):
        if ours != theirs:
            problems.append(
                f"{generated.model} {ours.grid}: (r={ours.r}, q={ours.q}, h2={ours.h2}) "
                f"!= {theirs.grid}: (r={theirs.r}, q={theirs.q}, h2={theirs.h2})"
            )
    return problems
