"""Indistinguishability of inputs and the confusion graph it induces.

Two run vectors x and y are indistinguishable when some admissible drift and
jitter realizations map both onto the same received signal.  Eliminating the
common drift factor reduces this to a one-dimensional feasibility question:
writing rho for the ratio of the two drift factors, each coordinate constrains
rho to [x_i/(xi*y_i), xi*x_i/y_i], and rho itself must lie in
[1/gamma, gamma] (any positive value when gamma is infinite).  The pair is
indistinguishable iff those intervals have a common point.

A single predicate backs every regime; the per-regime closed forms live only
in the test suite as independent oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .core import ChannelSpec, Runs

__all__ = ["indistinguishable", "confusion_graph", "ConfusionGraph"]


def indistinguishable(x: Sequence[int], y: Sequence[int], spec: ChannelSpec) -> bool:
    """True iff x and y can produce the same output under spec."""
    if len(x) != len(y):
        raise ValueError(f"run counts differ: {len(x)} vs {len(y)}")
    xi = spec.xi
    ratios = [Fraction(a, b) for a, b in zip(x, y)]
    lo = max(ratios) / xi
    hi = min(ratios) * xi
    if lo > hi:
        return False
    if spec.unbounded_drift:
        return True
    gamma = spec.gamma
    return lo <= gamma and hi >= Fraction(1) / gamma


@dataclass(frozen=True)
class ConfusionGraph:
    """Inputs as vertices, indistinguishable pairs as edges.

    Zero-error codes are exactly the independent sets.  Adjacency is stored
    as one bitmask int per vertex for fast neighborhood intersection in the
    branch-and-bound oracle.
    """

    vertices: tuple[Runs, ...]
    spec: ChannelSpec
    neighbors: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def has_edge(self, i: int, j: int) -> bool:
        return i != j and bool(self.neighbors[i] >> j & 1)

    def degree(self, i: int) -> int:
        return self.neighbors[i].bit_count()

    @property
    def edge_count(self) -> int:
        return sum(self.degree(i) for i in range(self.n)) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for i in range(self.n):
            mask = self.neighbors[i] >> (i + 1) << (i + 1)
            while mask:
                j = (mask & -mask).bit_length() - 1
                out.append((i, j))
                mask &= mask - 1
        return out


def confusion_graph(inputs: Sequence[Sequence[int]], spec: ChannelSpec) -> ConfusionGraph:
    """Graph over the given inputs with edges between indistinguishable pairs.

    Vertex order is the input order; inputs must share k and be duplicate-free.
    """
    vertices = tuple(tuple(v) for v in inputs)
    if vertices:
        k = len(vertices[0])
        for v in vertices:
            if len(v) != k:
                raise ValueError("all inputs must have the same number of runs")
    if len(set(vertices)) != len(vertices):
        raise ValueError("duplicate inputs")
    masks = [0] * len(vertices)
    for i, row in _pairwise_rows(vertices, spec):
        row[i] = False
        bits = int.from_bytes(
            np.packbits(row, bitorder="little").tobytes(), "little"
        )
        masks[i] = bits
    return ConfusionGraph(vertices, spec, tuple(masks))


def indistinguishable_pairs(vertices: Sequence[Runs], spec: ChannelSpec):
    """Yield (i, j) with i < j for every indistinguishable pair."""
    vertices = [tuple(v) for v in vertices]
    for i, row in _pairwise_rows(vertices, spec):
        for j in np.nonzero(row[i + 1 :])[0]:
            yield i, i + 1 + int(j)


# int64 products in the vectorized kernel stay below this; larger parameter
# combinations fall back to the exact scalar predicate.
_INT64_GUARD = 1 << 62


def _pairwise_rows(vertices, spec):
    """Yield (i, boolean row of indistinguishability vs all vertices).

    Vectorization of the same interval test as `indistinguishable`: with
    m_hi = max_i x_i/y_i and m_lo = min_i x_i/y_i, the pair is
    indistinguishable iff m_hi <= xi^2 * m_lo, m_hi <= gamma*xi, and
    m_lo >= 1/(gamma*xi).
    """
    n = len(vertices)
    if n == 0:
        return
    p, q = spec.xi.numerator, spec.xi.denominator
    finite = not spec.unbounded_drift
    g, h = (spec.gamma.numerator, spec.gamma.denominator) if finite else (1, 1)
    mx = max(max(v) for v in vertices)
    bound = max(p * p, q * q, g * p, h * q) * mx * mx
    if bound >= _INT64_GUARD:
        for i in range(n):
            row = np.fromiter(
                (indistinguishable(vertices[i], y, spec) for y in vertices),
                dtype=bool,
                count=n,
            )
            yield i, row
        return

    arr = np.asarray(vertices, dtype=np.int64)
    k = arr.shape[1]
    for i in range(n):
        x = arr[i]
        # running max/min of the coordinate ratios x_c / y_c as num/den pairs
        hi_num = np.full(n, x[0], dtype=np.int64)
        hi_den = arr[:, 0].copy()
        lo_num = hi_num.copy()
        lo_den = hi_den.copy()
        for c in range(1, k):
            yc = arr[:, c]
            bigger = x[c] * hi_den > hi_num * yc
            hi_num = np.where(bigger, x[c], hi_num)
            hi_den = np.where(bigger, yc, hi_den)
            smaller = x[c] * lo_den < lo_num * yc
            lo_num = np.where(smaller, x[c], lo_num)
            lo_den = np.where(smaller, yc, lo_den)
        row = hi_num * lo_den * (q * q) <= lo_num * hi_den * (p * p)
        if finite:
            row &= hi_num * (h * q) <= hi_den * (g * p)
            row &= lo_num * (g * p) >= lo_den * (h * q)
        yield i, row
