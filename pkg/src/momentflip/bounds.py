"""Exact cardinality lower bounds and the bound-comparison sweep.

Every winner decision is made on exact big-integer rationals; the floating
log2 values exist for display only and never decide a comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable

SWEEP_HEADER = "d,log2_ofmb,log2_mbt,winner"


def volume(n: int, r: int) -> int:
    """Hamming ball volume: the exact sum of C(n, i) for i = 0..r."""
    if not 0 <= r <= n:
        raise ValueError(f"need 0 <= r <= n, got r={r}, n={n}")
    return sum(math.comb(n, i) for i in range(r + 1))


@total_ordering
@dataclass(frozen=True)
class BoundValue:
    """Exact rational bound; comparisons use the exact value."""

    value: Fraction

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    @property
    def log2_value(self) -> float:
        return math.log2(self.value.numerator) - math.log2(self.value.denominator)

    def __lt__(self, other: BoundValue) -> bool:
        return self.value < other.value


def floor_log2(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return n.bit_length() - 1


def inner_length(n: int) -> int:
    """Code length left after reserving the balancing positions: n - floor(log2 n) - 1."""
    return n - floor_log2(n) - 1


def gv_bound(n: int, d: int) -> BoundValue:
    """Guaranteed size of a length-n minimum-distance-d code: 2^n / volume(n, d-1)."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    return BoundValue(Fraction(2**n, volume(n, d - 1)))


def ofmb_bound(n: int, d: int) -> BoundValue:
    """Guaranteed size of a one-flip-balanced code of distance d:
    2^(n-1) / volume(n, d+1).

    Obtained by halving a sphere-packing code of distance d+2 (one flip per
    word costs at most 2 of distance and at most half the words).
    """
    if d + 1 > n or d < 1:
        raise ValueError(f"need 1 <= d and d+1 <= n, got d={d}, n={n}")
    return BoundValue(Fraction(2 ** (n - 1), volume(n, d + 1)))


def mbt_bound(n: int, d: int) -> BoundValue:
    """Guaranteed size of a template-balanced code of length n and distance d:
    2^k / volume(k, d-1) with inner length k = n - floor(log2 n) - 1."""
    k = inner_length(n)
    if not 0 <= d - 1 <= k:
        raise ValueError(f"need 1 <= d <= inner_length+1 = {k + 1}, got d={d}")
    return BoundValue(Fraction(2**k, volume(k, d - 1)))


def combined_bound(n: int, d: int) -> BoundValue:
    """The larger of the one-flip and template bounds, compared exactly."""
    return max(ofmb_bound(n, d), mbt_bound(n, d))


def binary_entropy(p: float) -> float:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"entropy argument must lie in [0, 1], got {p}")
    if p in (0.0, 1.0):
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


@dataclass(frozen=True)
class AsymptoticReport:
    """Comparison of the two bounds in exponent (entropy-estimate) form.

    ``condition_holds`` is the exact integer test
    (d+1) * (floor(log2 n) + 1) > 2n under which the one-flip bound
    dominates for large n. ``delta_terms`` are the three addends of the
    exponent difference and ``delta`` their sum; they are float estimates,
    reported but never used to decide winners.
    """

    condition_holds: bool
    delta1: float
    delta2: float
    delta_terms: tuple[float, float, float]
    delta: float


def asymptotic_report(n: int, d: int) -> AsymptoticReport:
    L = floor_log2(n)
    k = inner_length(n)
    d1 = Fraction(d + 1, n)
    d2 = Fraction(d - 1, k)
    half = Fraction(1, 2)
    if not 0 < d1 <= half:
        raise ValueError(f"(d+1)/n = {d1} outside (0, 1/2]")
    if not 0 < d2 <= half:
        raise ValueError(f"(d-1)/inner_length = {d2} outside (0, 1/2]")
    condition = (d + 1) * (L + 1) > 2 * n
    h1 = binary_entropy(float(d1))
    h2 = binary_entropy(float(d2))
    terms = (n * (h2 - h1), L * (1.0 - h2), -h2)
    return AsymptoticReport(condition, float(d1), float(d2), terms, sum(terms))


@dataclass(frozen=True)
class SweepRow:
    d: int
    log2_ofmb: float
    log2_mbt: float
    winner: str  # "ofmb" | "mbt" | "tie"

    def csv(self) -> str:
        return f"{self.d},{self.log2_ofmb:.6f},{self.log2_mbt:.6f},{self.winner}"


def bound_sweep(n: int, d_range: Iterable[int]) -> list[SweepRow]:
    """Row-per-distance comparison of the one-flip and template bounds.

    Winners come from exact cross-multiplication; exact ties are reported
    as "tie", never assigned arbitrarily.
    """
    rows = []
    for d in d_range:
        o = ofmb_bound(n, d)
        m = mbt_bound(n, d)
        if o.value > m.value:
            winner = "ofmb"
        elif m.value > o.value:
            winner = "mbt"
        else:
            winner = "tie"
        rows.append(SweepRow(d, o.log2_value, m.log2_value, winner))
    return rows
