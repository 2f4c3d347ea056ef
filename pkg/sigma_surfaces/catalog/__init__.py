from .records import (
    CatalogRecord, GroupPayload, InvariantPayload, NkiPayload, VerifyPayload, emit, emit_many,
    parse, parse_many,
)
from .fixtures import REFERENCE_TABLES, FixtureRow, FixtureTable, compare_tables, fixture_table, regenerate_table
from .formatting import format_csv, format_table, show_rational, surd

__all__ = [
    "CatalogRecord", "GroupPayload", "InvariantPayload", "NkiPayload", "VerifyPayload",
    "emit", "emit_many", "parse", "parse_many", "REFERENCE_TABLES", "FixtureRow", "FixtureTable",
    "compare_tables", "fixture_table", "regenerate_table", "format_csv", "format_table",
    "show_rational", "surd",
]
