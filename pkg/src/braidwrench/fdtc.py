"""
Exact fractional Dehn twist coefficient.

ω(β) is the limit of ⌊β^k⌋ / k. Each floor brackets ω inside
[⌊β^k⌋/k, (⌊β^k⌋+1)/k], and ω is a fraction with denominator at most n, so
intersecting a few brackets pins it down exactly. Two distinct fractions
with denominators <= n are at least 1/(n(n-1)) apart, hence a bracket of
width 1/k with k > n(n-1) always isolates ω.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .braid import BraidWord, conjugate, full_twist, power
from .dehornoy import floor_search, twist_bounds
from .errors import StrandMismatch


@dataclass(frozen=True)
class Fdtc:
    value: Fraction
    strands: int

    def __post_init__(self):
        if self.value.denominator > max(self.strands, 1):
            raise ValueError(f"{self.value} has denominator larger than {self.strands}")

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True)
class OmegaBounds:
    lo: Fraction
    hi: Fraction

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi


def occurrence_bounds(w: BraidWord) -> OmegaBounds:
    return OmegaBounds(*twist_bounds(w))


def candidates(lo: Fraction, hi: Fraction, n: int) -> list[Fraction]:
    """All p/q in [lo, hi] with 1 <= q <= n, ascending and without repeats."""
    found = set()
    for q in range(1, max(n, 1) + 1):
        for p in range(math.ceil(lo * q), math.floor(hi * q) + 1):
            found.add(Fraction(p, q))
    return sorted(found)


def peel_full_twists(b: BraidWord) -> tuple[int, BraidWord]:
    """Strip literal Δ^{±2} words from both ends; returns (d, rest) with b = Δ^{2d} rest."""
    n = b.strands
    if n < 2:
        return 0, b
    pos = full_twist(n).letters
    neg = tuple(-g for g in reversed(pos))
    size = len(pos)
    letters = b.letters
    d = 0
    changed = True
    while changed and len(letters) >= size:
        changed = False
        for block, sgn in ((pos, 1), (neg, -1)):
            if letters[:size] == block:
                letters, d, changed = letters[size:], d + sgn, True
            elif len(letters) >= size and letters[-size:] == block:
                letters, d, changed = letters[:-size], d + sgn, True
    return d, BraidWord(n, letters)


def _max_power(n: int) -> int:
    return n * (n - 1) + 1


@dataclass
class FdtcTrace:
    """Per-power floors gathered while homogenizing; handy for reports."""

    floors: dict[int, int] = field(default_factory=dict)
    interval: tuple[Fraction, Fraction] | None = None
    peeled: int = 0


def fdtc(b: BraidWord, budget: int | None = None, use_occurrence_bounds: bool = True,
         trace: FdtcTrace | None = None) -> Fdtc:
    n = b.strands
    if n < 2:
        return Fdtc(Fraction(0), n)
    d, core = peel_full_twists(b)
    if trace is not None:
        trace.peeled = d
    if not core.letters:
        return Fdtc(Fraction(d), n)

    occ = occurrence_bounds(core)
    if use_occurrence_bounds:
        lo, hi = occ.lo, occ.hi
    else:
        lo, hi = occ.lo - 1, occ.hi + 1
    k_max = _max_power(n)
    k = 1
    while True:
        cands = candidates(lo, hi, n)
        if len(cands) == 1:
            if trace is not None:
                trace.interval = (lo, hi)
            return Fdtc(d + cands[0], n)
        if not cands:
            raise ArithmeticError(f"empty bracket [{lo}, {hi}] for {core}")
        # k ω ∈ [⌊β^k⌋, ⌊β^k⌋ + 1], so the floor lies in [k lo - 1, k hi]
        guess_lo, guess_hi = math.floor(k * lo) - 1, math.ceil(k * hi)
        m = floor_search(power(core, k), guess_lo, guess_hi, budget, chunks=k)
        if trace is not None:
            trace.floors[k] = m
        lo = max(lo, Fraction(m, k))
        hi = min(hi, Fraction(m + 1, k))
        if k >= k_max:
            cands = candidates(lo, hi, n)
            if len(cands) != 1:
                raise ArithmeticError(f"bracket [{lo}, {hi}] did not isolate a value at k={k}")
            continue
        k = min(2 * k, k_max)


def omega(b: BraidWord, budget: int | None = None) -> Fraction:
    return fdtc(b, budget).value


@dataclass
class PropertyReport:
    passed: bool
    values: dict[str, Fraction]
    failures: list[str]


def fdtc_properties_check(a: BraidWord, b: BraidWord, power_k: int = 2,
                          budget: int | None = None) -> PropertyReport:
    """
    Evaluate the quasimorphism defect, homogeneity on ``a^power_k``, the shift
    under a full twist, conjugation invariance and the denominator bound.
    """
    if a.strands != b.strands:
        raise StrandMismatch(a.strands, b.strands)
    n = a.strands
    w_a = omega(a, budget)
    w_b = omega(b, budget)
    vals = {
        "a": w_a,
        "b": w_b,
        "ab": omega(a * b, budget),
        "a^k": omega(power(a, power_k), budget),
        "twist*a": omega(full_twist(n) * a, budget),
        "bab^-1": omega(conjugate(a, b), budget),
    }
    failures = []
    if abs(vals["ab"] - w_a - w_b) > 1:
        failures.append(f"quasimorphism defect {abs(vals['ab'] - w_a - w_b)} > 1")
    if vals["a^k"] != power_k * w_a:
        failures.append(f"omega(a^{power_k}) = {vals['a^k']} != {power_k * w_a}")
    if vals["twist*a"] != w_a + 1:
        failures.append(f"omega(twist a) = {vals['twist*a']} != {w_a + 1}")
    if vals["bab^-1"] != w_a:
        failures.append(f"omega(b a b^-1) = {vals['bab^-1']} != {w_a}")
    for key, v in vals.items():
        if v.denominator > max(n, 1):
            failures.append(f"denominator of omega({key}) = {v} exceeds {n}")
    return PropertyReport(not failures, vals, failures)
