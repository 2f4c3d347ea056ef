"""sigsurf: exact invariants, coincidence search and numeric verification"""
import logging
import re
from pathlib import Path
from typing import List, Optional, Tuple

import click

from ..catalog.fixtures import REFERENCE_TABLES, compare_tables, fixture_table, regenerate_table
from ..catalog.formatting import (
    GROUP_HEADERS, INVARIANT_HEADERS, NKI_HEADERS, fixture_rows, format_csv, format_table,
    group_row, invariant_row, nki_row,
)
from ..catalog.records import CatalogRecord, emit_many
from ..config.config import FRAME_CONFIG, SEARCH_CONFIG
from ..config.loader import get_database_url
from ..frames.verification import verify_frame, verify_g25
from ..invariants.exact import beta_invariants
from ..invariants.selection import BetaVector, GridLabel
from ..managers.search_manager import SearchManager
from ..oracle.verification import VerificationReport, verify_veronese
from ..search.enumeration import enumerate_betas
from ..search.nki import nki_scan
from ..search.ratios import ratio_identities

logger = logging.getLogger(__name__)

FAMILY_REPRESENTATIVE_I = SEARCH_CONFIG["family_representative_i"]


def _write(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text, nl=False)


def _store(records: List[CatalogRecord], db_url: Optional[str]) -> None:
    if db_url is None:
        return
    from ..database.db_manager import CatalogManager
    manager = CatalogManager(db_url or get_database_url())
    try:
        manager.store_records(records)
    finally:
        manager.close()


def _parse_grid(value: str, n: int) -> BetaVector:
    try:
        return GridLabel.parse(value).to_beta(n)
    except ValueError as e:
        raise click.BadParameter(str(e), param_hint="--grid")


def _parse_range(value: str) -> Tuple[int, int]:
    match = re.fullmatch(r"\s*(\d+)\s*(?:(?:\.\.|-)\s*(\d+))?\s*", value)
    if not match:
        raise click.BadParameter(f"expected N or A..B, got '{value}'", param_hint="--n")
    low = int(match.group(1))
    high = int(match.group(2)) if match.group(2) else low
    if high < low:
        raise click.BadParameter(f"empty range '{value}'", param_hint="--n")
    return low, high


def _positive(ctx, param, value):
    if value is not None and value <= 0:
        raise click.BadParameter("must be positive")
    return value


def _emit_records(records: List[CatalogRecord], as_csv: bool, headers, row, out, db_url) -> None:
    if as_csv:
        _write(format_csv(headers, [row(r) for r in records]), out)
    else:
        _write(emit_many(records), out)
    _store(records, db_url)


db_option = click.option(
    "--db", "db_url", is_flag=False, flag_value="", default=None,
    help="Store emitted records in the catalog database (optional URL).",
)
out_option = click.option("--out", type=click.Path(dir_okay=False, writable=True),
                          help="Write output to this file instead of stdout.")


@click.group()
@click.option("--verbose", "-v", is_flag=True, help="Log progress to stderr.")
def main(verbose: bool):
    """Invariants of surfaces induced by G(m,n) sigma model solutions."""
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")


@main.command()
@click.option("--n", "n", type=int, required=True, callback=_positive, help="Dimension n.")
@click.option("--m", "m", type=int, help="Rank m (with --all).")
@click.option("--grid", help="Indices i1,...,im of one solution.")
@click.option("--all", "all_", is_flag=True, help="Every grid of G(m,n), or of every m.")
@click.option("--json", "as_json", is_flag=True, help="One JSON record per line.")
@click.option("--csv", "as_csv", is_flag=True, help="CSV instead of an aligned table.")
@out_option
@db_option
def invariants(n, m, grid, all_, as_json, as_csv, out, db_url):
    """Exact (r, q, H^2, K) of P_beta built on the Veronese curve."""
    if bool(grid) == all_:
        raise click.UsageError("give exactly one of --grid or --all")
    if as_json and as_csv:
        raise click.UsageError("--json and --csv are exclusive")
    if grid:
        betas = [_parse_grid(grid, n)]
        if m is not None and betas[0].m != m:
            raise click.BadParameter(f"grid has weight {betas[0].m}, not {m}", param_hint="--m")
    else:
        if m is not None and not 1 <= m < n:
            raise click.BadParameter("need 1 <= m < n", param_hint="--m")
        weights = [m] if m is not None else range(1, n)
        betas = [b for w in weights for b in enumerate_betas(n, w)]

    records = [CatalogRecord.from_invariants(beta_invariants(b), b.grid) for b in betas]
    if as_json:
        _write(emit_many(records), out)
    else:
        rows = [invariant_row(r) for r in records]
        _write(format_csv(INVARIANT_HEADERS, rows) if as_csv
               else format_table(INVARIANT_HEADERS, rows), out)
    _store(records, db_url)


@main.command()
@click.option("--n", "n_range", default="4..6", show_default=True, help="N or A..B.")
@click.option("--csv", "as_csv", is_flag=True, help="CSV output.")
@click.option("--check", is_flag=True, help="Compare with the embedded tables, exit 1 on mismatch.")
@out_option
def table(n_range, as_csv, check, out):
    """G(2,n) rows, one per reversal/complement class."""
    low, high = _parse_range(n_range)
    if low < 3:
        raise click.BadParameter("G(2,n) needs n >= 3", param_hint="--n")
    if check and any(n not in REFERENCE_TABLES for n in range(low, high + 1)):
        raise click.BadParameter(f"embedded tables exist for n in {sorted(REFERENCE_TABLES)}",
                                 param_hint="--n")

    dimensions = range(low, high + 1)
    tables = [regenerate_table(n) for n in dimensions]
    if as_csv:
        rows = [[t.model, *row] for t in tables for row in fixture_rows(t)]
        text = format_csv(("model",) + INVARIANT_HEADERS, rows)
    else:
        text = "\n".join(f"{t.model}\n" + format_table(INVARIANT_HEADERS, fixture_rows(t))
                         for t in tables)
    _write(text, out)

    if check:
        problems = [p for n, t in zip(dimensions, tables)
                    for p in compare_tables(t, fixture_table(n))]
        for problem in problems:
            click.echo(f"MISMATCH {problem}", err=True)
        if problems:
            raise SystemExit(1)


@main.command()
@click.option("--n-max", type=int, default=SEARCH_CONFIG["n_max"], show_default=True,
              callback=_positive)
@click.option("--n-min", type=int, default=None)
@click.option("--m", "m", type=int, default=2, show_default=True, callback=_positive)
@click.option("--by", type=click.Choice(["rq", "r"]), default="rq", show_default=True,
              help="Group by (r, q) or by r alone.")
@click.option("--workers", type=int, default=None, callback=_positive,
              help="Worker processes (default SIGSURF_THREADS).")
@click.option("--json", "as_json", is_flag=True, help="JSON records (default).")
@click.option("--csv", "as_csv", is_flag=True, help="CSV rows.")
@out_option
@db_option
def search(n_max, n_min, m, by, workers, as_json, as_csv, out, db_url):
    """Non-equivalent solutions sharing curvature and charge."""
    if as_json and as_csv:
        raise click.UsageError("--json and --csv are exclusive")
    groups = SearchManager(workers).search(n_max, m, by=by, n_min=n_min)
    records = [CatalogRecord.from_group(g) for g in groups]
    _emit_records(records, as_csv, GROUP_HEADERS, group_row, out, db_url)


def select_nki(records, full_family: bool, include_inadmissible: bool):
    """Admissible records, the k = 0 family folded into its i = 2 member"""
    chosen = []
    for record in records:
        if not (record.admissible or include_inadmissible):
            continue
        if record.k == 0 and not full_family and record.i != FAMILY_REPRESENTATIVE_I:
            continue
        chosen.append(record)
    return chosen


@main.command("scan-nki")
@click.option("--k-max", type=int, default=SEARCH_CONFIG["k_max"], show_default=True)
@click.option("--i-max", type=int, default=None, help="Default 2 k_max (1 + k_max).")
@click.option("--full-family", is_flag=True, help="Emit every k = 0 record.")
@click.option("--include-inadmissible", is_flag=True, help="Also emit pairs that do not fit.")
@click.option("--json", "as_json", is_flag=True, help="JSON records (default).")
@click.option("--csv", "as_csv", is_flag=True, help="CSV rows.")
@out_option
@db_option
def scan_nki(k_max, i_max, full_family, include_inadmissible, as_json, as_csv, out, db_url):
    """Integral n_(k,i) with the H^2 of each coinciding pair."""
    if k_max < 0 or (i_max is not None and i_max < 1):
        raise click.BadParameter("need --k-max >= 0 and --i-max >= 1")
    if as_json and as_csv:
        raise click.UsageError("--json and --csv are exclusive")
    scanned = select_nki(nki_scan(k_max, i_max), full_family, include_inadmissible)
    records = [CatalogRecord.from_nki(r) for r in scanned]
    _emit_records(records, as_csv, NKI_HEADERS, nki_row, out, db_url)


def _report_line(report: VerificationReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    label = report.target if report.grid is None else f"{report.target} n={report.n} grid={GridLabel(indices=report.grid)}"
    return (f"{status} {label}: {len(report.checks)} checks, worst {report.worst_check} "
            f"residual {report.worst_residual:.3e}\n")


def _finish_reports(reports: List[VerificationReport], as_json: bool, out, db_url) -> None:
    records = [CatalogRecord.from_report(r) for r in reports]
    _write(emit_many(records) if as_json else "".join(_report_line(r) for r in reports), out)
    _store(records, db_url)
    if not all(r.passed for r in reports):
        raise SystemExit(1)


@main.command()
@click.option("--veronese", is_flag=True, help="Verify a Veronese solution (default).")
@click.option("--frame", type=click.Choice(["z1", "z2"]), help="Verify a G(2,5) frame instead.")
@click.option("--n", "n", type=int, callback=_positive)
@click.option("--m", "m", type=int, callback=_positive, help="Rank m (with --all).")
@click.option("--grid")
@click.option("--all", "all_", is_flag=True, help="Every grid of G(m,n).")
@click.option("--tol", type=float, default=None, callback=_positive)
@click.option("--h", "h", type=float, default=None, callback=_positive)
@click.option("--seed", type=int, default=None)
@click.option("--samples", type=int, default=None, callback=_positive)
@click.option("--json", "as_json", is_flag=True)
@out_option
@db_option
def verify(veronese, frame, n, m, grid, all_, tol, h, seed, samples, as_json, out, db_url):
    """Numeric oracle against the exact invariants; exit 1 on any failed check."""
    if veronese and frame:
        raise click.UsageError("--veronese and --frame are exclusive")
    if frame:
        reports = [verify_frame(frame, samples=samples, h=h, curvature_tol=tol, seed=seed)]
    else:
        if n is None or bool(grid) == all_:
            raise click.UsageError("--veronese needs --n and exactly one of --grid or --all")
        if grid:
            betas = [_parse_grid(grid, n)]
        else:
            if m is None or not 1 <= m < n:
                raise click.BadParameter("--all needs 1 <= m < n", param_hint="--m")
            betas = list(enumerate_betas(n, m))
        reports = [verify_veronese(b, tol=tol, h=h, seed=seed, samples=samples) for b in betas]
    _finish_reports(reports, as_json, out, db_url)


@main.command()
@click.option("--samples", type=int, default=FRAME_CONFIG["samples"], show_default=True,
              callback=_positive)
@click.option("--tol", type=float, default=None, callback=_positive, help="H ratio tolerance.")
@click.option("--curvature-tol", type=float, default=None, callback=_positive)
@click.option("--h", "h", type=float, default=None, callback=_positive)
@click.option("--seed", type=int, default=None)
@click.option("--json", "as_json", is_flag=True)
@out_option
@db_option
def nonveronese(samples, tol, curvature_tol, h, seed, as_json, out, db_url):
    """K = 4/5 and the P1/P2 mean-curvature ratio for the two G(2,5) frames."""
    if samples < 2:
        raise click.BadParameter("need at least two samples", param_hint="--samples")
    report = verify_g25(samples=samples, h=h, tol=tol, curvature_tol=curvature_tol, seed=seed)
    if not as_json:
        click.echo(f"max H ratio residual {report.max_residual('h_ratio'):.3e}")
    _finish_reports([report], as_json, out, db_url)


@main.command()
@click.option("--max-param", type=int, default=SEARCH_CONFIG["ratio_max_param"],
              show_default=True, callback=_positive)
@click.option("--json", "as_json", is_flag=True)
@out_option
def ratios(max_param, as_json, out):
    """Closed-form H^2 ratios of the two coinciding families."""
    report = ratio_identities(max_param)
    if as_json:
        _write(report.model_dump_json() + "\n", out)
    else:
        lines = []
        for summary in report.summaries:
            roots = ", ".join(str(r) for r in summary.equality_roots)
            lines.append(f"{summary.identity}: ratio 1 at {list(summary.unit_params)}, "
                         f"roots of equality {{{roots}}}")
        for mismatch in report.mismatches():
            lines.append(f"MISMATCH {mismatch.identity} at {mismatch.param}: "
                         f"{mismatch.exact} != {mismatch.closed_form}")
        lines.append("PASS" if report.passed else "FAIL")
        _write("\n".join(lines) + "\n", out)
    if not report.passed:
        raise SystemExit(1)


@main.command()
@click.option("--kind", type=click.Choice(["invariant", "group", "nki", "verify"]))
@click.option("--n", "n", type=int)
@click.option("--m", "m", type=int)
@click.option("--db", "db_url", default=None, help="Catalog database URL.")
@out_option
def catalog(kind, n, m, db_url, out):
    """List stored records as JSON lines."""
    from ..database.db_manager import CatalogManager
    manager = CatalogManager(db_url or get_database_url())
    try:
        records = manager.list_records(kind=kind, n=n, m=m)
    finally:
        manager.close()
    _write(emit_many(records), out)


if __name__ == "__main__":
    main()
