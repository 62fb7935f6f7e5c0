"""Walk a codeword through the channel and back, step by step.

The receiver never learns the transmitter's clock: the drift factor T
multiplies every run and is simply divided out by working with run ratios.
Jitter perturbs each run independently, which is why codeword ratios need
guard gaps.
"""

from fractions import Fraction

from driftppm import (
    ChannelRealization,
    ChannelSpec,
    Codebook,
    ObservedSignal,
    code_jitter_bounded_drift,
    consistent_codewords,
    decode,
    decode_fast,
    endpoint_realizations,
    run_endpoint_roundtrips,
    sample_realization,
    transmit,
    verify_zero_error,
)

XI, GAMMA = Fraction(3, 2), Fraction(7, 4)
spec = ChannelSpec(XI, GAMMA)
cb = code_jitter_bounded_drift(20, XI, GAMMA)
print(f"codebook: jitter <= {XI}, drift <= {GAMMA}, frame 20 -> {len(cb)} codewords")
print("  ", " | ".join(" ".join(map(str, w)) for w in cb.codewords))

def show(values):
    return "(" + ", ".join(str(v) for v in values) + ")"


word = cb.codewords[2]
r = ChannelRealization(Fraction(8, 5), (Fraction(13, 10), 1))
y = transmit(word, r)
print(f"\nsent {word}, drift T={r.t}, jitter Z={show(r.z)}")
print(f"received runs: {show(y.values)}")
print(f"candidates consistent with the observation: {consistent_codewords(y, cb)}")
print(f"decode -> {decode(y, cb)}, structured decode -> {decode_fast(y, cb)}")

# a float receiver sees binary approximations; a relative tolerance absorbs them
noisy = ObservedSignal.from_floats([float(v) * (1 + 3e-13) for v in y.values])
print(f"float-mode decode of noisy measurement -> {decode(noisy, cb)}")

# the zero-error claim is adversarial: every corner of the (T, Z) box
print("\ncorner realizations (T and each Z at a bound):")
for r in list(endpoint_realizations(spec, cb.k))[:4]:
    print(f"   T={r.t} Z={show(r.z)} -> decode {decode(transmit(word, r), cb)}")
report = run_endpoint_roundtrips(cb)
print(f"all corners x all codewords: {report.trials} trials, {report.failures} failures")

# and seeded interior sampling backs the corners up
r = sample_realization(spec, cb.k, seed=2024)
print(f"sampled realization T={r.t.limit_denominator(999)} (approx), decode ok:",
      decode(transmit(word, r), cb) == word)

# what goes wrong without the guard gaps: (1,1) and (2,2) under drift 2
bad = Codebook(2, 20, ChannelSpec(1, 2), "custom", ((1, 1), (2, 2)))
print(f"\nnear-miss codebook {bad.codewords} under drift <= 2:")
print(f"  pairwise check: {verify_zero_error(bad)}")
y = ObservedSignal.from_exact([2, 2])  # (1,1) at T=2, or (2,2) at T=1
print(f"  observation (2, 2) is consistent with {consistent_codewords(y, bad)}")
