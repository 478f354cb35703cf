"""Digit-group segmentation and exact interleaving."""

import random
import re
from fractions import Fraction

import pytest

from redim import (
    DigitGroup,
    GroupSequence,
    NonCanonicalError,
    PeriodicExpansion,
    deinterleave,
    expansion_of_groups,
    from_expansion,
    interleave,
    segment,
    to_expansion,
)
from redim.sampling import short_period_unit
from oracles import brute_groups, brute_interleave_prefix, nines_digits

_GROUP_SHAPE = re.compile(r"\A0*[1-9]\Z")


def _group_strings(seq: GroupSequence) -> tuple[list[str], list[str]]:
    return [g.digits for g in seq.preperiod], [g.digits for g in seq.period]


class TestDigitGroup:
    def test_rendering(self):
        assert DigitGroup(2, "4").digits == "004"
        assert len(DigitGroup(2, "4")) == 3

    def test_invalid(self):
        with pytest.raises(NonCanonicalError):
            DigitGroup(0, "0")
        with pytest.raises(NonCanonicalError):
            DigitGroup(-1, "3")


class TestSegment:
    def test_1_over_400(self):
        pre, per = _group_strings(segment(PeriodicExpansion("0024", "9")))
        assert pre == ["002", "4"]
        assert per == ["9"]

    def test_worked_prefix_with_straddling_group(self):
        # stream 0038001007 373737... groups as 003 8 001 007 3 7 3 7 ...
        seq = segment(PeriodicExpansion("0038001007", "37"))
        pre, per = _group_strings(seq)
        assert pre == ["003", "8", "001", "007"]
        assert per == ["3", "7"]
        rendered = [seq.group_at(i).digits for i in range(7)]
        assert rendered == ["003", "8", "001", "007", "3", "7", "3"]

    def test_sevenths_all_singletons(self):
        pre, per = _group_strings(segment(to_expansion(Fraction(1, 7))))
        assert pre == []
        assert per == ["1", "4", "2", "8", "5", "7"]
        oracle = brute_groups(nines_digits(Fraction(1, 7), 18))
        assert oracle == per * 3

    def test_group_cycle_can_straddle_period_boundary(self):
        pre, per = _group_strings(segment(PeriodicExpansion("", "10")))
        assert pre == ["1"]
        assert per == ["01"]

    def test_debug_rendering(self):
        assert segment(PeriodicExpansion("0024", "9")).render() == "002 4 | (9)"

    def test_segmentation_soundness_random(self):
        rng = random.Random(201)
        for _ in range(150):
            x = Fraction(rng.randint(1, 900), rng.randint(1, 900))
            if x > 1:
                x = 1 / x
            e = to_expansion(x)
            seq = segment(e)
            count = len(e.preperiod) + 3 * len(e.period)
            rendered = ""
            index = 0
            while len(rendered) < count:
                rendered += seq.group_at(index).digits
                index += 1
            assert rendered[:count] == e.prefix(count)
            for i in range(index):
                assert _GROUP_SHAPE.match(seq.group_at(i).digits)

    def test_zero_run_bound(self):
        rng = random.Random(202)
        for _ in range(100):
            x = Fraction(rng.randint(1, 500), rng.randint(1, 500))
            if x > 1:
                x = 1 / x
            e = to_expansion(x)
            bound = len(e.preperiod) + 2 * len(e.period)
            seq = segment(e)
            for i in range(len(seq.preperiod) + len(seq.period)):
                assert seq.group_at(i).zeros <= bound


class TestInterleave:
    def test_half_with_itself(self):
        half = segment(to_expansion(Fraction(1, 2)))
        merged = interleave(half, half)
        assert merged == PeriodicExpansion("44", "9")
        assert from_expansion(merged) == Fraction(9, 20)

    def test_all_nines_fixed_point(self):
        nines = segment(to_expansion(Fraction(1)))
        assert interleave(nines, nines) == PeriodicExpansion("", "9")

    def test_sevenths_with_itself(self):
        sevenths = segment(to_expansion(Fraction(1, 7)))
        merged = interleave(sevenths, sevenths)
        assert merged == PeriodicExpansion("", "114422885577")
        assert from_expansion(merged) == Fraction(114422885577, 999999999999)

    def test_prefix_matches_brute_oracle(self):
        rng = random.Random(203)
        for _ in range(60):
            a = short_period_unit(rng, 10**4)
            b = short_period_unit(rng, 10**4)
            merged = interleave(segment(to_expansion(a)), segment(to_expansion(b)))
            oracle = brute_interleave_prefix(nines_digits(a, 400), nines_digits(b, 400), 60)
            assert merged.prefix(60) == oracle


class TestDeinterleave:
    def test_inverse_of_half_pair(self):
        first, second = deinterleave(PeriodicExpansion("44", "9"))
        half = segment(to_expansion(Fraction(1, 2)))
        assert first == half and second == half

    def test_all_nines(self):
        first, second = deinterleave(PeriodicExpansion("", "9"))
        nines = GroupSequence((), (DigitGroup(0, "9"),))
        assert first == nines and second == nines

    def test_sevenths_merge(self):
        first, second = deinterleave(PeriodicExpansion("", "114422885577"))
        sevenths = segment(to_expansion(Fraction(1, 7)))
        assert first == sevenths and second == sevenths

    def test_odd_positions_go_first(self):
        first, second = deinterleave(to_expansion(Fraction(1, 2)))
        assert from_expansion(expansion_of_groups(first)) == Fraction(1, 2)
        assert from_expansion(expansion_of_groups(second)) == Fraction(1)


class TestRoundTrips:
    def test_deinterleave_then_interleave(self):
        rng = random.Random(204)
        for _ in range(500):
            y = short_period_unit(rng, 10**5)
            first, second = deinterleave(to_expansion(y))
            assert from_expansion(interleave(first, second)) == y

    def test_interleave_then_deinterleave(self):
        rng = random.Random(205)
        for _ in range(500):
            a = short_period_unit(rng, 10**5)
            b = short_period_unit(rng, 10**5)
            seq_a = segment(to_expansion(a))
            seq_b = segment(to_expansion(b))
            first, second = deinterleave(interleave(seq_a, seq_b))
            assert first == seq_a and second == seq_b

    def test_rationality_closure(self):
        # interleaved rationals stay rational: reconstruction and re-expansion agree
        rng = random.Random(206)
        for _ in range(60):
            a = short_period_unit(rng, 10**4)
            b = short_period_unit(rng, 10**4)
            merged = interleave(segment(to_expansion(a)), segment(to_expansion(b)))
            assert to_expansion(from_expansion(merged)) == merged


class TestGroupSequenceCanonicality:
    def test_group_level_folding(self):
        two = DigitGroup(0, "2")
        one = DigitGroup(0, "1")
        seq = GroupSequence((two, one), (two, one))
        assert seq.preperiod == ()
        assert [g.digits for g in seq.period] == ["2", "1"]

    def test_empty_period_rejected(self):
        with pytest.raises(NonCanonicalError):
            GroupSequence((DigitGroup(0, "1"),), ())

    def test_expansion_of_groups_recanonicalizes(self):
        # group-minimal data may still fold at digit level: 05 | (1 5) -> 0.0(51)
        seq = GroupSequence(
            (DigitGroup(1, "5"),), (DigitGroup(0, "1"), DigitGroup(0, "5"))
        )
        e = expansion_of_groups(seq)
        assert (e.preperiod, e.period) == ("0", "51")
        assert segment(e) == seq
