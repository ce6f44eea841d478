"""
Reference computations that do not go through the code paths they check.

* ``artin_sign`` decides the Dehornoy sign from the free-group action: a
  σ_i-positive braid fixes x_1..x_{i-1} and sends x_i to a reduced word
  ending in x_i^{-1}. No handle reduction is involved.
* ``reference_fdtc`` homogenizes plain floors at every k = 1..n(n-1)+1,
  without full-twist peeling, letter-count shortcuts or twist interleaving.
* In B_2 ≅ Z everything is explicit: a_1^w has floor ⌊w/2⌋ and ω = w/2.
"""

from __future__ import annotations

import math
from fractions import Fraction

from braidwrench.artin import artin_action
from braidwrench.braid import BraidWord, full_twist, power, writhe
from braidwrench.dehornoy import DehornoySign, dehornoy_sign


def artin_sign(b: BraidWord) -> int:
    f = artin_action(b)
    for i in range(1, b.strands + 1):
        img = f[i - 1]
        if img != (i,):
            return 1 if img[-1] == -i else -1
    return 0


def plain_floor(b: BraidWord) -> int:
    """Linear scan for the largest m with Δ^{-2m} b ⪰ 1."""
    n = b.strands
    if n < 2:
        return 0
    geq = lambda m: dehornoy_sign(power(full_twist(n), -m) * b) is not DehornoySign.NEGATIVE
    m = 0
    if geq(0):
        while geq(m + 1):
            m += 1
        return m
    while not geq(m):
        m -= 1
    return m


def reference_fdtc(b: BraidWord) -> Fraction:
    n = b.strands
    if n < 2:
        return Fraction(0)
    lo, hi = Fraction(-10**9), Fraction(10**9)
    for k in range(1, n * (n - 1) + 2):
        m = plain_floor(power(b, k))
        lo, hi = max(lo, Fraction(m, k)), min(hi, Fraction(m + 1, k))
    found = {Fraction(p, q) for q in range(1, n + 1)
             for p in range(math.ceil(lo * q), math.floor(hi * q) + 1)}
    assert len(found) == 1, (b, lo, hi, found)
    return found.pop()


def b2_floor(b: BraidWord) -> int:
    assert b.strands == 2
    return writhe(b) // 2


def b2_omega(b: BraidWord) -> Fraction:
    assert b.strands == 2
    return Fraction(writhe(b), 2)
