from collections import defaultdict
from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from pydantic import ValidationError

from sigma_surfaces.exceptions import IndexRangeError
from sigma_surfaces.invariants import BetaVector, beta_invariants
from sigma_surfaces.managers.search_manager import SearchManager
from sigma_surfaces.search import (
    IDENTITIES, NkiRecord, coincidences, default_i_max, divisor_census, enumerate_betas,
    family_rows, get_identity, group_partition, is_complement_canonical, l_ki, merge_partials,
    n_ki, nki_record, nki_scan, prefixes, ratio_identities, symmetry_classes,
)
from sigma_surfaces.catalog import REFERENCE_TABLES


def grids_of(group):
    return {g.indices for g in group.members}


def is_adjacent(grid):
    return grid[1] == grid[0] + 1


class TestEnumeration:
    @pytest.mark.parametrize("n, m", [(4, 2), (7, 2), (6, 3), (9, 4)])
    def test_counts(self, n, m):
        assert len(list(enumerate_betas(n, m))) == comb(n, m)

    def test_cp_grids(self):
        assert [b.grid.indices for b in enumerate_betas(5, 1)] == [(0,), (1,), (2,), (3,), (4,)]

    def test_lexicographic(self):
        grids = [b.grid.indices for b in enumerate_betas(6, 3)]
        assert grids == sorted(grids)

    def test_canonical_halves_balanced_weight(self):
        grids = [b.grid.indices for b in enumerate_betas(4, 2, canonical=True)]
        assert grids == [(0, 1), (0, 2), (0, 3)]
        assert len(list(enumerate_betas(6, 3, canonical=True))) == comb(6, 3) // 2

    def test_canonical_keeps_unbalanced(self):
        assert len(list(enumerate_betas(7, 2, canonical=True))) == comb(7, 2)

    def test_complement_canonical(self):
        assert is_complement_canonical((0, 3), 4)
        assert not is_complement_canonical((1, 2), 4)
        assert is_complement_canonical((1, 2), 5)

    def test_prefixes_cover_everything(self):
        n, m = 8, 3
        assert prefixes(n, m) == [0, 1, 2, 3, 4, 5]
        partitioned = [g for first in prefixes(n, m)
                       for g in combinations(range(first + 1, n), m - 1)]
        assert len(partitioned) == comb(n, m)

    @pytest.mark.parametrize("n, m", [(3, 0), (3, 3), (2, 5)])
    def test_rejects_weight(self, n, m):
        with pytest.raises(IndexRangeError):
            list(enumerate_betas(n, m))


class TestSymmetryClasses:
    @pytest.mark.parametrize("n", sorted(REFERENCE_TABLES))
    def test_table_order(self, n):
        representatives = [str(c.representative) for c in symmetry_classes(n, 2)]
        assert representatives == REFERENCE_TABLES[n].grids()

    def test_orbits_partition_grids(self):
        for n in range(3, 10):
            members = [g.indices for c in symmetry_classes(n, 2) for g in c.members]
            assert sorted(members) == list(combinations(range(n), 2))

    def test_complement_only_for_balanced_weight(self):
        classes = {c.representative.indices: c for c in symmetry_classes(4, 2)}
        assert {g.indices for g in classes[(1, 2)].members} == {(1, 2), (0, 3)}
        classes = {c.representative.indices: c for c in symmetry_classes(5, 2)}
        assert {g.indices for g in classes[(0, 4)].members} == {(0, 4)}

    def test_members_share_invariants_up_to_sign(self):
        for n in range(3, 9):
            for cls in symmetry_classes(n, 2):
                records = [beta_invariants(g.to_beta(n)) for g in cls.members]
                assert len({(r.r, abs(r.q), r.h2) for r in records}) == 1


class TestCoincidences:
    def test_g27_pair(self):
        groups = [g for g in coincidences(7, 2) if g.r == 22 and g.q == 2]
        assert len(groups) == 1
        group = groups[0]
        assert grids_of(group) == {(2, 3), (0, 5)}
        assert set(group.h2_values) == {Fraction(244, 121), Fraction(112, 121)}
        assert group.fully_separated

    def test_g24_has_no_coincidence(self):
        assert coincidences(4, 2) == []

    @pytest.mark.parametrize("n", range(3, 10))
    def test_cp_pairs_by_r(self, n):
        groups = coincidences(n, 1, by="r")
        assert len(groups) == n // 2
        for group in groups:
            (i,), (j,) = sorted(g.indices for g in group.members)
            assert i + j == n - 1
            assert group.q is None
            assert group.q_separated

    def test_members_share_key(self):
        for group in coincidences(9, 3):
            for grid in grids_of(group):
                record = beta_invariants(BetaVector.from_grid(9, grid))
                assert (record.r, record.q) == (group.r, group.q)

    def test_adjacent_and_gap(self):
        for n in range(3, 31):
            for group in coincidences(n, 2):
                assert len(group.members) == 2
                kinds = sorted(is_adjacent(g) for g in grids_of(group))
                assert kinds == [False, True]

    def test_gap_pairs_never_coincide(self):
        for n in range(4, 31):
            seen = defaultdict(list)
            for k, l in combinations(range(n), 2):
                if l > k + 1:
                    record = beta_invariants(BetaVector.from_grid(n, (k, l)))
                    seen[(record.r, record.q)].append((k, l))
            assert all(len(grids) == 1 for grids in seen.values())

    def test_merge_is_order_independent(self):
        n, m = 10, 3
        partials = [group_partition(n, m, first) for first in prefixes(n, m)]
        assert merge_partials(n, m, partials) == merge_partials(n, m, reversed(partials))
        assert merge_partials(n, m, partials) == coincidences(n, m)

    def test_unknown_grouping(self):
        with pytest.raises(ValueError):
            coincidences(5, 2, by="h2")

    def test_group_validation(self):
        group = coincidences(7, 2)[0]
        with pytest.raises(ValidationError):
            type(group)(n=7, m=2, r=group.r, q=group.q, members=group.members,
                        q_values=group.q_values[:1], h2_values=group.h2_values)


class TestSearchManager:
    def test_parallel_matches_in_process(self):
        assert SearchManager(workers=3).coincidences(9, 2) == coincidences(9, 2)

    def test_single_worker(self):
        assert SearchManager(workers=1).coincidences(8, 3, by="r") == coincidences(8, 3, by="r")

    def test_search_range(self):
        groups = SearchManager(workers=1).search(n_max=8, m=2)
        assert {g.n for g in groups} <= set(range(3, 9))
        assert any(g.n == 7 and g.r == 22 and g.q == 2 for g in groups)

    def test_threads_from_environment(self, monkeypatch):
        monkeypatch.setenv("SIGSURF_THREADS", "3")
        assert SearchManager().max_workers == 3

    def test_environment_caps_explicit_workers(self, monkeypatch):
        monkeypatch.setenv("SIGSURF_THREADS", "2")
        assert SearchManager(workers=8).max_workers == 2
        assert SearchManager(workers=1).max_workers == 1

    def test_rejects_zero_workers(self):
        with pytest.raises(ValueError):
            SearchManager(workers=0)


class TestNki:
    def test_formula(self):
        assert n_ki(1, 3) == 7
        assert n_ki(2, 5) == 10
        assert n_ki(2, 11) == 27
        assert n_ki(1, 2) == Fraction(13, 3)
        assert l_ki(5, 14) == 24

    @pytest.mark.parametrize("k, i", [(-1, 2), (3, 3), (4, 1)])
    def test_rejects_range(self, k, i):
        with pytest.raises(IndexRangeError):
            n_ki(k, i)

    def test_non_integral(self):
        assert nki_record(1, 2) is None

    def test_k_one(self):
        records = [r for r in nki_scan(k_max=1) if r.k == 1]
        assert [(r.i, r.n, r.l, r.admissible) for r in records] == [(3, 7, 6, True)]

    def test_k_two(self):
        records = [r for r in nki_scan(k_max=2) if r.k == 2 and r.admissible]
        assert [(r.i, r.n, r.l) for r in records] == [(5, 10, 9), (11, 27, 21)]

    def test_k_five(self):
        found = {(r.i, r.n, r.l) for r in nki_scan(k_max=5) if r.k == 5 and r.admissible}
        assert {(19, 41, 34), (14, 27, 24)} <= found

    def test_k_zero_family(self):
        for record in (r for r in nki_scan(k_max=1, i_max=10) if r.k == 0):
            assert record.n == 3 * record.i + 1
            assert record.gap_grid == (0, 2 * record.i + 1)
            assert record.admissible

    def test_shared_key_and_pair(self):
        record = nki_record(1, 3)
        assert record.adjacent_grid == (3, 4)
        assert record.gap_grid == (1, 6)
        assert record.h2_pair == (beta_invariants(BetaVector.from_grid(7, (3, 4))).h2,
                                  beta_invariants(BetaVector.from_grid(7, (1, 6))).h2)

    def test_h2_separates(self):
        for record in nki_scan(k_max=8):
            if record.admissible and (record.k >= 1 or record.i >= 2):
                assert record.separated, record

    def test_degenerate_complement_pair(self):
        record = nki_record(0, 1)
        assert record.n == 4
        assert not record.separated

    def test_default_bounds(self):
        assert default_i_max(12) == 312
        assert max(r.i for r in nki_scan(k_max=2)) <= default_i_max(2)

    def test_rejects_bounds(self):
        with pytest.raises(IndexRangeError):
            nki_scan(k_max=2, i_max=0)

    def test_record_validation(self):
        with pytest.raises(ValidationError):
            NkiRecord(k=1, i=3, n=8, l=6, admissible=False)
        with pytest.raises(ValidationError):
            NkiRecord(k=1, i=3, n=7, l=6, admissible=True)


class TestFamilyRows:
    def test_linear_row(self):
        (record,) = family_rows(1, "by_k", rows=[3])
        assert (record.i, record.n, record.l) == (3, 7, 6)
        assert record.family == "i=2k+1"

    def test_divisible_first_row(self):
        (record,) = family_rows(2, "by_m", rows=[1])
        assert (record.k, record.i, record.n, record.l) == (5, 14, 27, 24)

    @pytest.mark.parametrize("k", range(2, 9))
    def test_last_row_is_inadmissible(self, k):
        (record,) = family_rows(k, "by_k", rows=[4])
        assert not record.admissible
        assert record.l == record.n

    @pytest.mark.parametrize("k", range(1, 9))
    def test_by_k_closed_forms(self, k):
        rows = {r.family: r for r in family_rows(k, "by_k")}
        assert (rows["i=2k(1+k)-1"].n, rows["i=2k(1+k)-1"].l) == (6 * k * k + 2 * k - 1, 4 * k * k + 3 * k - 1)
        assert (rows["i=2k+1"].n, rows["i=2k+1"].l) == (3 * k + 4, 3 * (k + 1))
        if k >= 2:
            assert (rows["i=k(1+k)-1"].n, rows["i=k(1+k)-1"].l) == (k * (3 * k - 1), 2 * k * k + k - 1)

    @pytest.mark.parametrize("m", range(2, 6))
    def test_by_m_closed_forms(self, m):
        first, second = family_rows(m, "by_m")
        assert (first.n, first.l) == (6 * m * m + m + 1, 4 * m * (m + 1))
        assert (second.n, second.l) == (6 * m * m - 5 * m + 2, 4 * m * m - 1)

    def test_rows_appear_in_scan(self):
        scanned = {(r.k, r.i) for r in nki_scan(k_max=11)}
        for k in range(1, 12):
            for record in family_rows(k, "by_k"):
                assert (record.k, record.i) in scanned
        for m in range(2, 6):
            for record in family_rows(m, "by_m"):
                assert (record.k, record.i) in scanned

    def test_out_of_range(self):
        with pytest.raises(IndexRangeError):
            family_rows(0, "by_k", rows=[1])
        with pytest.raises(IndexRangeError):
            family_rows(3, "by_k", rows=[5])
        with pytest.raises(IndexRangeError):
            family_rows(3, "by_n")

    def test_default_rows_skip_out_of_range(self):
        assert [r.family for r in family_rows(1, "by_k")] == ["i=2k(1+k)-1", "i=2k+1"]


class TestDivisorCensus:
    def test_first_rows(self):
        first, second = divisor_census(2)
        assert (first.product, first.factorization, first.admissible_i) == (4, {2: 2}, (3,))
        assert (second.product, second.factorization) == (12, {2: 2, 3: 1})
        assert (second.integral, second.admissible, second.admissible_i) == (3, 2, (5, 11))

    def test_counts_agree_with_scan(self):
        census = {row.k: row for row in divisor_census(6)}
        scan = nki_scan(k_max=6)
        for k, row in census.items():
            assert row.integral == sum(1 for r in scan if r.k == k)
            assert row.admissible == sum(1 for r in scan if r.k == k and r.admissible)


class TestRatioIdentities:
    def test_report(self):
        report = ratio_identities(50)
        assert report.passed
        assert report.mismatches() == []
        assert report.ratio("n=3i+1", 2) == Fraction(28, 61)

    def test_unit_only_at_degenerate(self):
        summaries = {s.identity: s for s in ratio_identities(20).summaries}
        assert summaries["n=3i+1"].unit_params == (1,)
        assert summaries["n=4+3k"].unit_params == (0,)

    def test_equality_roots(self):
        assert get_identity("n=3i+1").equality_roots() == [Fraction(-7, 2), -1, 0, 1]
        assert get_identity("n=4+3k").equality_roots() == [Fraction(-9, 2), -2, -1, 0]

    def test_closed_form_at_two(self):
        assert get_identity("n=3i+1").closed_form(2) == Fraction(56, 122)

    def test_closed_forms_match_exact(self):
        for identity in IDENTITIES:
            for param in range(identity.first, 15):
                assert identity.closed_form(param) == identity.exact(param)

    def test_unknown_identity(self):
        with pytest.raises(ValueError):
            get_identity("n=2i")

    def test_rejects_bound(self):
        with pytest.raises(IndexRangeError):
            ratio_identities(0)

    def test_missing_ratio(self):
        with pytest.raises(KeyError):
            ratio_identities(3).ratio("n=3i+1", 4)
