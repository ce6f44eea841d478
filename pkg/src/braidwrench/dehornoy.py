"""
Dehornoy order via handle reduction.

A σ_i-handle is a subword a_i^e u a_i^{-e} whose interior u only uses
generators of index > i. Reducing it deletes the bracketing pair and replaces
each interior a_{i+1}^d by a_{i+1}^{-e} a_i^d a_{i+1}^e. We always reduce the
handle that ends first; its interior is handle-free, so all its a_{i+1}
letters share one sign and the rewrite is the permitted one. Repeating until
no handle is left terminates, and the lowest generator of the handle-free
result carries the sign of the braid.

Scanning keeps, for every processed position p, a pointer ``below[p]`` to the
nearest earlier position whose index is strictly smaller than ``|w[p]|`` and
not shadowed by a later letter. The chain from p is the "visible" stack
after reading p, so a rewrite starting at position t resumes scanning at t
with the stack already correct for the untouched prefix.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from fractions import Fraction

from .braid import BraidWord, full_twist, inverse, power
from .errors import BudgetExceeded, StrandMismatch

DEFAULT_BUDGET = 10**7


def default_budget() -> int:
    env = os.environ.get("BRAIDWRENCH_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class DehornoySign(enum.Enum):
    POSITIVE = 1
    ZERO = 0
    NEGATIVE = -1

    def __str__(self) -> str:
        return self.name.lower()


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self) -> str:
        return self.name.lower()


@dataclass(frozen=True)
class ReductionReport:
    reduced: BraidWord
    steps: int
    sign: DehornoySign


def _reduce_letters(w: list[int], budget: int) -> int:
    """Handle-reduce ``w`` in place; return the number of rewrites."""
    below: list[int] = []
    steps = 0
    j = 0
    while j < len(w):
        x = w[j]
        i = x if x > 0 else -x
        t = j - 1
        while t >= 0:
            y = w[t]
            if (y if y > 0 else -y) <= i:
                break
            t = below[t]
        if t >= 0 and w[t] == -x:
            steps += 1
            if steps > budget:
                raise BudgetExceeded(budget)
            # w[t] = a_i^e, w[j] = a_i^{-e}
            e = 1 if w[t] > 0 else -1
            up = i + 1
            new: list[int] = []
            for y in w[t + 1 : j]:
                if y == up or y == -up:
                    new += (-e * up, i if y > 0 else -i, e * up)
                else:
                    new.append(y)
            w[t : j + 1] = new
            del below[t:]
            j = t
            continue
        if t >= 0 and w[t] == x:
            t = below[t]
        below.append(t)
        j += 1
    return steps


def _sign_of_handle_free(w: list[int]) -> DehornoySign:
    if not w:
        return DehornoySign.ZERO
    low = min(w, key=abs)
    return DehornoySign.POSITIVE if low > 0 else DehornoySign.NEGATIVE


def handle_reduce(w: BraidWord, budget: int | None = None) -> ReductionReport:
    letters = list(w.letters)
    steps = _reduce_letters(letters, default_budget() if budget is None else budget)
    return ReductionReport(BraidWord(w.strands, tuple(letters)), steps, _sign_of_handle_free(letters))


def dehornoy_sign(w: BraidWord, budget: int | None = None) -> DehornoySign:
    return handle_reduce(w, budget).sign


def is_identity(w: BraidWord, budget: int | None = None) -> bool:
    return dehornoy_sign(w, budget) is DehornoySign.ZERO


def compare(a: BraidWord, b: BraidWord, budget: int | None = None) -> Ordering:
    """a ≺ b iff a^{-1} b ≻ 1."""
    if a.strands != b.strands:
        raise StrandMismatch(a.strands, b.strands)
    s = dehornoy_sign(inverse(a) * b, budget)
    return {
        DehornoySign.POSITIVE: Ordering.LESS,
        DehornoySign.ZERO: Ordering.EQUAL,
        DehornoySign.NEGATIVE: Ordering.GREATER,
    }[s]


def occurrence_counts(w: BraidWord) -> dict[int, tuple[int, int]]:
    """Map i -> (#a_i, #a_i^{-1}) for i = 1..n-1."""
    counts = {i: [0, 0] for i in range(1, w.strands)}
    for g in w.letters:
        counts[abs(g)][0 if g > 0 else 1] += 1
    return {i: (r, s) for i, (r, s) in counts.items()}


def twist_bounds(w: BraidWord) -> tuple[Fraction, Fraction]:
    """
    Bounds on the twist coefficient read off letter counts: with r_i, s_i the
    numbers of a_i and a_i^{-1}, the coefficient lies in [-s_i, r_i] for every i.
    """
    if w.strands < 2:
        return Fraction(0), Fraction(0)
    counts = occurrence_counts(w)
    lo = max(-s for _, s in counts.values())
    hi = min(r for r, _ in counts.values())
    return Fraction(lo), Fraction(hi)


def at_least_twists(b: BraidWord, m: int, budget: int | None = None, chunks: int = 1) -> bool:
    """
    Δ^{2m} ⪯ b, i.e. Δ^{-2m} b ⪰ 1. Since Δ² is central, the twists may be
    spread over ``chunks`` equal pieces of ``b`` (``b`` must then be a power
    with ``chunks`` dividing its length); this keeps cancellations local.
    """
    n = b.strands
    if n < 2:
        return m <= 0
    if chunks > 1 and len(b) % chunks == 0:
        per, rest = divmod(m, chunks)
        size = len(b) // chunks
        piece = BraidWord(n, b.letters[:size])
        word = power(piece * power(full_twist(n), -per), chunks) * power(full_twist(n), -rest)
    else:
        word = power(full_twist(n), -m) * b
    return dehornoy_sign(word, budget) is not DehornoySign.NEGATIVE


def floor_search(b: BraidWord, lo: int, hi: int, budget: int | None = None, chunks: int = 1) -> int:
    """
    Largest m with Δ^{2m} ⪯ b, searched from the guess window [lo, hi]. The
    window is widened if a probe shows it does not bracket the answer.
    """
    if b.strands < 2:
        return 0
    step = 1
    while not at_least_twists(b, lo, budget, chunks):
        lo -= step
        step *= 2
    step = 1
    while at_least_twists(b, hi + 1, budget, chunks):
        hi += step
        step *= 2
    # invariant: lo satisfies, hi + 1 fails
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if at_least_twists(b, mid, budget, chunks):
            lo = mid
        else:
            hi = mid - 1
    return lo


def dehornoy_floor(b: BraidWord, budget: int | None = None) -> int:
    """The unique m with Δ^{2m} ⪯ b ≺ Δ^{2(m+1)}."""
    lo, hi = twist_bounds(b)
    return floor_search(b, int(lo) - 1, int(hi), budget)
