"""Channel simulation: drift and jitter factors applied to a codeword.

A realization is a drift factor T (shared by all runs of a frame) and one
jitter factor Z_i per run; the receiver observes Y_i = T * Z_i * x_i.  The
channel is adversarial -- codes must survive *every* admissible realization --
so the primary coverage tool is the set of 2^(k+1) corner realizations
(each factor at its lower or upper bound); seeded uniform sampling fills in
interior points.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .core import ChannelSpec, as_ratio

__all__ = [
    "ChannelRealization",
    "ObservedSignal",
    "transmit",
    "sample_realization",
    "endpoint_realizations",
    "derive_trial_seed",
]

# 53-bit grid for uniform draws: exact rationals, float-dense coverage.
_GRID_BITS = 53
_GRID = 1 << _GRID_BITS


@dataclass(frozen=True)
class ChannelRealization:
    """One admissible (T, Z_1..Z_k) assignment, all exact rationals."""

    t: Fraction
    z: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "t", as_ratio(self.t))
        object.__setattr__(self, "z", tuple(as_ratio(v) for v in self.z))
        if self.t < 1 or any(v < 1 for v in self.z):
            raise ValueError("drift and jitter factors are normalized to >= 1")


@dataclass(frozen=True)
class ObservedSignal:
    """Received run lengths; exact rationals, or floats for receiver realism."""

    values: tuple
    exact: bool

    def __post_init__(self):
        if not self.values:
            raise ValueError("empty signal")
        if any(v <= 0 for v in self.values):
            raise ValueError("observations must be strictly positive")

    @classmethod
    def from_exact(cls, values: Sequence) -> "ObservedSignal":
        return cls(tuple(as_ratio(v) for v in values), True)

    @classmethod
    def from_floats(cls, values: Sequence[float]) -> "ObservedSignal":
        return cls(tuple(float(v) for v in values), False)

    def as_floats(self) -> "ObservedSignal":
        return ObservedSignal.from_floats([float(v) for v in self.values])

    @property
    def k(self) -> int:
        return len(self.values)


def transmit(runs: Sequence[int], realization: ChannelRealization) -> ObservedSignal:
    """Apply a realization to a codeword: Y_i = T * Z_i * x_i, exactly."""
    if len(runs) != len(realization.z):
        raise ValueError(
            f"realization has {len(realization.z)} jitter factors "
            f"for {len(runs)} runs"
        )
    t = realization.t
    return ObservedSignal(
        tuple(t * z * x for z, x in zip(realization.z, runs)), True
    )


def _upper_drift(spec: ChannelSpec, t_cap) -> Fraction:
    if not spec.unbounded_drift:
        return spec.gamma
    if t_cap is None:
        raise ValueError(
            "gamma is infinite: uniform sampling over T is undefined; "
            "use endpoints mode with a t_cap, or pass t_cap explicitly"
        )
    t_cap = as_ratio(t_cap)
    if t_cap < 1:
        raise ValueError(f"t_cap must be >= 1, got {t_cap}")
    return t_cap


def derive_trial_seed(seed: int, trial: int) -> int:
    """Stable per-trial seed so trials are reproducible under any parallelism."""
    digest = hashlib.blake2s(f"{seed}:{trial}".encode()).digest()
    return int.from_bytes(digest[:8], "little")


def sample_realization(
    spec: ChannelSpec,
    k: int,
    seed: int,
    mode: str = "uniform",
    t_cap=None,
) -> ChannelRealization:
    """Draw one realization.

    uniform: T and each Z_i independently uniform on their intervals, on an
    exact 2^-53 rational grid, reproducible from the seed.  endpoints: the
    seed is a corner index; bit 0 selects T low/high and bit i selects Z_i,
    covering all 2^(k+1) corners as the index runs over them.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if mode == "endpoints":
        return _endpoint_realization(spec, k, seed, t_cap)
    if mode != "uniform":
        raise ValueError(f"unknown mode {mode!r}")
    hi_t = _upper_drift(spec, t_cap)
    rng = random.Random(seed)

    def draw(hi: Fraction) -> Fraction:
        u = Fraction(rng.getrandbits(_GRID_BITS), _GRID)
        return 1 + (hi - 1) * u

    t = draw(hi_t)
    z = tuple(draw(spec.xi) for _ in range(k))
    return ChannelRealization(t, z)


def _endpoint_realization(spec, k, index, t_cap) -> ChannelRealization:
    hi_t = spec.gamma if not spec.unbounded_drift else _upper_drift(spec, t_cap)
    index %= 1 << (k + 1)
    t = hi_t if index & 1 else Fraction(1)
    z = tuple(spec.xi if index >> i & 1 else Fraction(1) for i in range(1, k + 1))
    return ChannelRealization(t, z)


def endpoint_realizations(
    spec: ChannelSpec, k: int, t_cap=None
) -> Iterator[ChannelRealization]:
    """All 2^(k+1) corner realizations, in index order."""
    for index in range(1 << (k + 1)):
        yield _endpoint_realization(spec, k, index, t_cap)
