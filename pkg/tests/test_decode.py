from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from driftppm.core import INFINITY, ChannelSpec, Codebook
from driftppm.channel import ChannelRealization, ObservedSignal, endpoint_realizations, transmit
from driftppm.constructions import (
    code_bounded_drift,
    code_gcd,
    code_jitter,
    code_jitter_bounded_drift,
    code_jitter_unbounded_drift,
)
from driftppm.decode import (
    AmbiguityError,
    NoCodewordError,
    consistent_codewords,
    decode,
    decode_fast,
)


def exact(*values):
    return ObservedSignal.from_exact(values)


GCD65 = code_gcd(2, 65)
BD65 = code_bounded_drift(2, 65, F(7, 4))


class TestConsistentCodewords:
    def test_unique_ratio(self):
        assert consistent_codewords(exact(3, 6), GCD65) == [(1, 2)]

    def test_drift_window_selects_multiplier(self):
        # T = 5/4 explains (2,2); d=1 would need T = 5/2 > 7/4, d=4 needs T = 5/8 < 1
        assert consistent_codewords(exact(F(5, 2), F(5, 2)), BD65) == [(2, 2)]

    def test_smallest_input(self):
        assert consistent_codewords(exact(1, 1), GCD65) == [(1, 1)]

    def test_transmitted_word_is_always_consistent(self):
        spec = ChannelSpec(F(3, 2), F(7, 4))
        cb = code_jitter_bounded_drift(20, F(3, 2), F(7, 4))
        for word in cb.codewords:
            for r in endpoint_realizations(spec, 2):
                assert word in consistent_codewords(transmit(word, r), cb, spec)

    def test_mismatched_length(self):
        with pytest.raises(ValueError):
            consistent_codewords(exact(1, 2, 3), GCD65)


class TestDecode:
    def test_ratio_decoding(self):
        cb = code_jitter_unbounded_drift(5, F(3, 2))
        got = decode(transmit((3, 2), ChannelRealization(1, (1, 1))), cb)
        assert got == (3, 2)

    def test_scale_absorbed_by_drift(self):
        assert decode(exact(100, 100), GCD65) == (1, 1)

    def test_out_of_range_ratio(self):
        with pytest.raises(NoCodewordError):
            decode(exact(1, 10**6), GCD65)

    def test_below_drift_floor(self):
        # drift factors are normalized to T >= 1, so an observation smaller
        # than every codeword is out of model
        with pytest.raises(NoCodewordError):
            decode(exact(F(1, 2), F(1, 2)), GCD65)

    def test_ambiguity_raises(self):
        bad = Codebook(2, 65, ChannelSpec(1, INFINITY), "custom", ((1, 1), (2, 2)))
        with pytest.raises(AmbiguityError) as err:
            decode(exact(4, 4), bad)
        assert set(err.value.candidates) == {(1, 1), (2, 2)}

    @given(st.fractions(min_value=1, max_value=100, max_denominator=50))
    @settings(max_examples=40, deadline=None)
    def test_scale_invariance_upward(self, lam):
        y = exact(F(21, 5), 7)  # (3,5) seen through T = 7/5
        scaled = ObservedSignal.from_exact([lam * v for v in y.values])
        assert decode(y, GCD65) == decode(scaled, GCD65) == (3, 5)


class TestDecodeFast:
    def test_multiplier_lookup(self):
        got = decode_fast(transmit((2, 2), ChannelRealization(F(5, 4), (1, 1))), BD65)
        assert got == (2, 2)

    def test_per_run_windows(self):
        cb = code_jitter(2, 65, 2)
        y = transmit((3, 3), ChannelRealization(1, (1, 2)))
        assert y.values == (3, 6)
        assert decode_fast(y, cb) == (3, 3) == decode(y, cb)

    def test_ratio_interval_lookup(self):
        cb = code_jitter_unbounded_drift(65, F(3, 2))
        for word in cb.codewords:
            y = transmit(word, ChannelRealization(7, (F(3, 2), 1)))
            assert decode_fast(y, cb) == word == decode(y, cb)

    def test_agrees_with_general_on_corners(self):
        cases = [
            (GCD65, None),
            (BD65, None),
            (code_jitter(2, 30, F(3, 2)), None),
            (code_jitter_bounded_drift(30, F(3, 2), F(7, 4)), None),
        ]
        for cb, spec in cases:
            spec = spec or cb.spec
            for word in cb.codewords[:40]:
                for r in endpoint_realizations(spec, cb.k, t_cap=F(13, 2)):
                    y = transmit(word, r)
                    assert decode_fast(y, cb, spec) == decode(y, cb, spec) == word

    def test_custom_regime_rejected(self):
        cb = Codebook(2, 10, ChannelSpec(1, INFINITY), "custom", ((1, 2),))
        with pytest.raises(ValueError):
            decode_fast(exact(1, 2), cb)

    def test_looser_spec_rejected(self):
        with pytest.raises(ValueError):
            decode_fast(exact(3, 6), BD65, ChannelSpec(1, 2))

    def test_stricter_spec_allowed(self):
        assert decode_fast(exact(3, 6), GCD65, ChannelSpec(1, 50)) == (1, 2)

    def test_gcd_regime_rejects_scaled_down_signal(self):
        with pytest.raises(NoCodewordError):
            decode_fast(exact(F(1, 2), F(1, 2)), GCD65)

    def test_corrupted_chain_codebook_is_ambiguous(self):
        bad = Codebook(2, 65, ChannelSpec(1, INFINITY), "gcd", ((1, 1), (2, 2)))
        with pytest.raises(AmbiguityError):
            decode_fast(exact(4, 4), bad)


class TestFloatMode:
    def test_round_trip_through_floats(self):
        for word in ((1, 2), (15, 30), (7, 11)):
            assert word in BD65
            y = transmit(word, ChannelRealization(F(5, 4), (1, 1))).as_floats()
            assert decode(y, BD65) == word
            assert decode_fast(y, BD65) == word

    def test_tolerates_relative_noise(self):
        y = transmit((3, 5), ChannelRealization(F(3, 2), (1, 1)))
        noisy = ObservedSignal.from_floats(
            [float(v) * (1 + eps) for v, eps in zip(y.values, (1e-12, -1e-12))]
        )
        assert decode(noisy, BD65) == (3, 5)
        assert decode_fast(noisy, BD65) == (3, 5)

    def test_exact_mode_rejects_what_float_mode_accepts(self):
        y = ObservedSignal.from_exact([F(3) * (1 + F(1, 10**12)), F(6)])
        with pytest.raises(NoCodewordError):
            decode(y, GCD65)
        assert decode(y.as_floats(), GCD65) == (1, 2)

    def test_custom_tolerance(self):
        y = ObservedSignal.from_floats([3 * (1 + 2e-7), 6.0])
        with pytest.raises(NoCodewordError):
            decode(y, GCD65, tol=F(1, 10**9))
        assert decode(y, GCD65, tol=F(1, 10**6)) == (1, 2)
