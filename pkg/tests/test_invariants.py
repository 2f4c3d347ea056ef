from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from pydantic import ValidationError

from sigma_surfaces.exceptions import IndexRangeError
from sigma_surfaces.invariants import (
    BetaVector, GridLabel, InvariantRecord, alpha, alpha_via_recurrence, beta_invariants,
    charge_split, complement, cp_invariants, g2_closed_forms, holomorphic_beta, reversal,
    rq_interaction_split,
)
from tests.strategies import betas, g2_grids


def beta(n, *grid):
    return BetaVector.from_grid(n, grid)


def all_betas(max_n):
    for n in range(2, max_n + 1):
        for m in range(1, n):
            for grid in combinations(range(n), m):
                yield BetaVector.from_grid(n, grid)


def triple(record):
    return record.r, record.q, record.h2


class TestAlpha:
    @pytest.mark.parametrize("i, n, expected", [(0, 5, 0), (2, 7, 10), (3, 6, 9), (5, 5, 0)])
    def test_values(self, i, n, expected):
        assert alpha(i, n) == expected

    def test_symmetric(self):
        for n in range(1, 13):
            for i in range(n + 1):
                assert alpha(i, n) == alpha(n - i, n)

    @pytest.mark.parametrize("i, n", [(-1, 5), (6, 5), (0, 0)])
    def test_out_of_range(self, i, n):
        with pytest.raises(IndexRangeError):
            alpha(i, n)


class TestCpInvariants:
    def test_cp1_sphere(self):
        record = cp_invariants(0, 2)
        assert triple(record) == (1, 1, 4)
        assert record.kappa == 4

    @pytest.mark.parametrize("n", range(2, 13))
    def test_holomorphic_member(self, n):
        record = cp_invariants(0, n)
        assert record.r == record.q == n - 1
        assert record.h2 == 4

    def test_interior_member(self):
        assert triple(cp_invariants(1, 5)) == (10, 2, Fraction(28, 25))

    @pytest.mark.parametrize("n", range(2, 13))
    def test_duality(self, n):
        for i in range(n):
            ours, theirs = cp_invariants(i, n), cp_invariants(n - 1 - i, n)
            assert ours.r == theirs.r
            assert ours.q == -theirs.q

    def test_rejects_index(self):
        with pytest.raises(IndexRangeError):
            cp_invariants(5, 5)
        with pytest.raises(IndexRangeError):
            cp_invariants(0, 1)


class TestRecurrence:
    @pytest.mark.parametrize("m, j, n, expected", [(2, 0, 7, 10), (0, 1, 4, 3), (1, 3, 8, 16)])
    def test_examples(self, m, j, n, expected):
        assert alpha_via_recurrence(m, j, n) == expected

    def test_matches_alpha_everywhere(self):
        for n in range(2, 13):
            for m in range(n):
                for j in range(n - m + 1):
                    assert alpha_via_recurrence(m, j, n) == alpha(m + j, n)

    def test_rejects_exit(self):
        with pytest.raises(IndexRangeError):
            alpha_via_recurrence(3, 3, 5)
        with pytest.raises(IndexRangeError):
            alpha_via_recurrence(1, -1, 5)


class TestBetaInvariants:
    @pytest.mark.parametrize("n, grid, expected", [
        (4, (0, 1), (4, 4, Fraction(4))),
        (2, (0,), (1, 1, Fraction(4))),
        (7, (2, 3), (22, 2, Fraction(244, 121))),
        (7, (0, 5), (22, 2, Fraction(112, 121))),
        (5, (0, 2), (16, 4, Fraction(7, 16))),
        (5, (1, 3), (20, 0, Fraction(1, 5))),
        (6, (0, 4), (18, 2, Fraction(74, 81))),
    ])
    def test_examples(self, n, grid, expected):
        assert triple(beta_invariants(beta(n, *grid))) == expected

    def test_kappa(self):
        record = beta_invariants(beta(5, 1, 3))
        assert record.kappa == Fraction(1, 5)

    def test_cp_specialization(self):
        for n in range(2, 13):
            for i in range(n):
                assert triple(beta_invariants(beta(n, i))) == triple(cp_invariants(i, n))

    @given(betas())
    def test_record_invariants(self, b):
        record = beta_invariants(b)
        assert record.kappa * record.r == 4
        assert abs(record.q) <= record.r
        assert record.h2 > 0

    @given(betas())
    def test_charge_is_additive(self, b):
        charges = charge_split(b.n)
        assert sum(bit * c for bit, c in zip(b.bits, charges)) == beta_invariants(b).q


class TestInteractionSplit:
    @pytest.mark.parametrize("n, grid, expected", [
        (4, (0, 1), (0, 8)),
        (5, (1, 3), (20, 20)),
        (6, (0, 4), (16, 20)),
    ])
    def test_examples(self, n, grid, expected):
        assert rq_interaction_split(beta(n, *grid)) == expected

    def test_agrees_with_r_and_q(self):
        for b in all_betas(12):
            record = beta_invariants(b)
            assert rq_interaction_split(b) == (record.r - record.q, record.r + record.q)


class TestG2ClosedForms:
    @pytest.mark.parametrize("i, j, n, expected", [
        (0, 2, 4, (10, 2, Fraction(2, 5))),
        (1, 4, 6, (26, 0, Fraction(98, 169))),
        (1, 2, 5, (10, 2, Fraction(52, 25))),
    ])
    def test_examples(self, i, j, n, expected):
        assert triple(g2_closed_forms(i, j, n)) == expected

    @given(g2_grids())
    @settings(max_examples=300)
    def test_matches_general_formula(self, grid):
        i, j, n = grid
        assert g2_closed_forms(i, j, n) == beta_invariants(beta(n, i, j))

    def test_rejects_order(self):
        with pytest.raises(IndexRangeError):
            g2_closed_forms(2, 2, 5)
        with pytest.raises(IndexRangeError):
            g2_closed_forms(3, 1, 5)
        with pytest.raises(IndexRangeError):
            g2_closed_forms(0, 5, 5)

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_rejects_small_n(self, n):
        with pytest.raises(IndexRangeError):
            g2_closed_forms(0, 1, n)


class TestHolomorphic:
    @pytest.mark.parametrize("m, n, rq", [(2, 5, 6), (1, 2, 1), (3, 6, 9)])
    def test_examples(self, m, n, rq):
        b, record = holomorphic_beta(m, n)
        assert b.grid.indices == tuple(range(m))
        assert record.r == record.q == rq
        assert record.h2 == 4

    def test_always_h_two(self):
        for n in range(2, 13):
            for m in range(1, n):
                assert holomorphic_beta(m, n)[1].h2 == 4

    def test_rejects_full_rank(self):
        with pytest.raises(IndexRangeError):
            holomorphic_beta(3, 3)


class TestSymmetries:
    def test_complement_example(self):
        assert complement(beta(4, 1, 2)).grid.indices == (0, 3)

    def test_reversal_example(self):
        assert reversal(beta(7, 3, 4)).grid.indices == (2, 3)

    @given(betas())
    def test_involutions(self, b):
        assert complement(complement(b)) == b
        assert reversal(reversal(b)) == b
        assert complement(b).m == b.n - b.m

    def test_complement_negates_charge(self):
        for b in all_betas(12):
            ours, theirs = beta_invariants(b), beta_invariants(complement(b))
            assert (theirs.r, theirs.q, theirs.h2) == (ours.r, -ours.q, ours.h2)

    def test_reversal_negates_charge(self):
        for b in all_betas(12):
            ours, theirs = beta_invariants(b), beta_invariants(reversal(b))
            assert (theirs.r, theirs.q, theirs.h2) == (ours.r, -ours.q, ours.h2)

    @given(betas())
    def test_complement_of_reversal_preserves_everything(self, b):
        assert triple(beta_invariants(complement(reversal(b)))) == triple(beta_invariants(b))


class TestDomainTypes:
    def test_grid_round_trip(self):
        b = beta(7, 0, 5)
        assert b.grid == GridLabel(indices=(0, 5))
        assert b.grid.to_beta(7) == b
        assert str(b.grid) == "(0,5)"

    @pytest.mark.parametrize("text", ["0,5", "(0,5)", "0 5", " ( 0 , 5 ) "])
    def test_grid_parse(self, text):
        assert GridLabel.parse(text).indices == (0, 5)

    @pytest.mark.parametrize("text", ["5,0", "1,1", "a,b", "-1,2", ""])
    def test_grid_parse_rejects(self, text):
        with pytest.raises(ValueError):
            GridLabel.parse(text)

    def test_boundary_bits(self):
        b = beta(4, 0, 3)
        assert b.bit(-1) == 0 and b.bit(4) == 0

    @pytest.mark.parametrize("n, bits", [(2, (1, 1)), (3, (0, 0, 0)), (3, (1, 2, 0)), (3, (1, 0))])
    def test_invalid_beta(self, n, bits):
        with pytest.raises(ValidationError):
            BetaVector(n=n, bits=bits)

    def test_grid_outside_dimension(self):
        with pytest.raises(ValueError):
            BetaVector.from_grid(3, (0, 3))

    def test_grid_repeats_index(self):
        with pytest.raises(ValueError):
            BetaVector.from_grid(4, [1, 1])
        assert BetaVector.from_grid(4, [2, 0]).grid.indices == (0, 2)

    def test_record_rejects_bad_kappa(self):
        with pytest.raises(ValidationError):
            InvariantRecord(n=4, m=2, r=4, q=4, h2=4, kappa=Fraction(1, 2))

    def test_record_rejects_charge_beyond_r(self):
        with pytest.raises(ValidationError):
            InvariantRecord.build(n=4, m=2, r=4, q=6, h2=4)

    def test_record_accepts_rational_strings(self):
        record = InvariantRecord(n=7, m=2, r="22", q=2, h2="244/121", kappa="2/11")
        assert record.h2 == Fraction(244, 121)
        assert record.model_dump(mode="json")["h2"] == "244/121"
        assert record.model_dump(mode="json")["r"] == "22/1"
