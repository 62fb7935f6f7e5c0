import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from driftppm.core import (
    INFINITY,
    ChannelSpec,
    Codebook,
    EmptyDomainError,
    as_ratio,
    enumerate_inputs,
    format_ratio,
    gcd_of,
    parse_drift_ratio,
    parse_ratio,
    rate_bits,
    ratio_vector,
)


def brute_force_inputs(k, m):
    """Independent enumeration oracle: nested loops over run values."""
    if k == 0:
        return [()]
    out = []
    for first in range(1, m + 1):
        for rest in brute_force_inputs(k - 1, m - first):
            out.append((first,) + rest)
    return out


class TestEnumerateInputs:
    def test_triples_in_four_bins(self):
        expected = sorted(brute_force_inputs(3, 4))
        assert expected == [(1, 1, 1), (1, 1, 2), (1, 2, 1), (2, 1, 1)]
        assert enumerate_inputs(3, 4) == expected

    def test_single_run(self):
        assert enumerate_inputs(1, 5) == [(1,), (2,), (3,), (4,), (5,)]

    def test_count_is_binomial_65_2(self):
        assert len(enumerate_inputs(2, 65)) == 2080 == math.comb(65, 2)

    @pytest.mark.parametrize("m", range(1, 21))
    def test_counts_match_binomial(self, m):
        for k in range(1, m + 1):
            assert len(enumerate_inputs(k, m)) == math.comb(m, k)

    def test_matches_brute_force(self):
        for k in range(1, 5):
            for m in range(k, 9):
                assert enumerate_inputs(k, m) == sorted(brute_force_inputs(k, m))

    def test_lexicographic_order(self):
        inputs = enumerate_inputs(3, 9)
        assert inputs == sorted(inputs)

    def test_empty_domain(self):
        with pytest.raises(EmptyDomainError):
            enumerate_inputs(3, 2)

    def test_bad_k(self):
        with pytest.raises(ValueError):
            enumerate_inputs(0, 5)


class TestGcd:
    @pytest.mark.parametrize(
        "runs,expected", [((2, 4), 2), ((3, 5), 1), ((6, 9, 12), 3)]
    )
    def test_examples(self, runs, expected):
        assert gcd_of(runs) == expected

    @given(
        st.lists(st.integers(1, 50), min_size=1, max_size=5),
        st.integers(1, 20),
    )
    def test_scaling(self, runs, d):
        scaled = tuple(d * r for r in runs)
        assert gcd_of(scaled) == d * gcd_of(runs)


class TestRatioVector:
    @pytest.mark.parametrize(
        "runs,expected",
        [
            ((2, 4), (F(2),)),
            ((3, 6, 9), (F(2), F(3))),
            ((4, 6), (F(3, 2),)),
        ],
    )
    def test_examples(self, runs, expected):
        assert ratio_vector(runs) == expected

    def test_single_run_undefined(self):
        with pytest.raises(ValueError):
            ratio_vector((3,))

    @given(
        st.lists(st.integers(1, 40), min_size=2, max_size=4),
        st.integers(1, 25),
    )
    def test_scaling_invariance(self, runs, d):
        assert ratio_vector(tuple(d * r for r in runs)) == ratio_vector(runs)


class TestRates:
    def test_perfect_sync_rate(self):
        cb = Codebook(1, 2080, ChannelSpec(1, 1), "custom", tuple((i,) for i in range(1, 2081)))
        assert rate_bits(cb) == pytest.approx(11.0224, abs=1e-4)

    def test_singleton_rate_zero(self):
        cb = Codebook(2, 4, ChannelSpec(1, 1), "custom", ((1, 1),))
        assert rate_bits(cb) == 0

    def test_64_words_is_6_bits(self):
        cb = Codebook(1, 64, ChannelSpec(1, 1), "custom", tuple((i,) for i in range(1, 65)))
        assert rate_bits(cb) == 6


class TestRatios:
    @pytest.mark.parametrize(
        "text,expected",
        [("7/4", F(7, 4)), ("1.03", F(103, 100)), ("3", F(3)), ("1.75", F(7, 4))],
    )
    def test_parse(self, text, expected):
        assert parse_ratio(text) == expected

    def test_parse_inf(self):
        assert parse_drift_ratio("inf") == INFINITY
        with pytest.raises(ValueError):
            parse_ratio("inf")

    def test_parse_garbage(self):
        for bad in ("", "x", "1/0", "nan"):
            with pytest.raises(ValueError):
                parse_ratio(bad)

    def test_format(self):
        assert format_ratio(F(7, 4)) == "7/4"
        assert format_ratio(F(3)) == "3"
        assert format_ratio(INFINITY) == "inf"

    @given(st.fractions(min_value=0, max_value=1000, max_denominator=10**6))
    def test_round_trip(self, value):
        assert parse_ratio(format_ratio(value)) == value
        assert parse_drift_ratio(format_ratio(value)) == value

    def test_round_trip_inf(self):
        assert parse_drift_ratio(format_ratio(INFINITY)) == INFINITY

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            as_ratio(1.03)

    @given(
        st.fractions(min_value=0, max_value=100, max_denominator=1000),
        st.fractions(min_value=0, max_value=100, max_denominator=1000),
        st.fractions(min_value=0, max_value=100, max_denominator=1000),
    )
    def test_ordering_total_and_transitive(self, x, y, z):
        assert x < INFINITY and INFINITY > x
        # totality: exactly one of <, ==, > holds
        assert (x < y) + (x == y) + (x > y) == 1
        ordered = sorted([x, y, z])
        assert ordered[0] <= ordered[1] <= ordered[2]
        if x <= y <= z:
            assert x <= z


class TestChannelSpec:
    def test_validation(self):
        ChannelSpec(1, 1)
        ChannelSpec("21/20", INFINITY)
        with pytest.raises(ValueError):
            ChannelSpec(F(1, 2), 1)
        with pytest.raises(ValueError):
            ChannelSpec(1, F(9, 10))

    def test_stricter(self):
        assert ChannelSpec(1, 2).is_stricter_or_equal(ChannelSpec(2, INFINITY))
        assert not ChannelSpec(2, 1).is_stricter_or_equal(ChannelSpec(1, 1))


class TestCodebook:
    def test_rejects_unsorted(self):
        with pytest.raises(ValueError):
            Codebook(2, 5, ChannelSpec(1, 1), "custom", ((1, 2), (1, 1)))

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            Codebook(2, 5, ChannelSpec(1, 1), "custom", ((1, 1), (1, 1)))

    def test_rejects_mixed_k(self):
        with pytest.raises(ValueError):
            Codebook(2, 5, ChannelSpec(1, 1), "custom", ((1, 1), (1, 1, 1)))

    def test_rejects_overflowing_frame(self):
        with pytest.raises(ValueError):
            Codebook(2, 3, ChannelSpec(1, 1), "custom", ((2, 2),))

    def test_rejects_unknown_regime(self):
        with pytest.raises(ValueError):
            Codebook(2, 5, ChannelSpec(1, 1), "optimal", ((1, 1),))

    def test_build_sorts_and_dedupes(self):
        cb = Codebook.build(2, 5, ChannelSpec(1, 1), "custom", [(2, 1), (1, 1), (2, 1)])
        assert cb.codewords == ((1, 1), (2, 1))
        assert (2, 1) in cb and (1, 2) not in cb
