"""
Randomized property suites behind ``braidwrench fuzz``.

Each suite draws its cases from a seeded :class:`random.Random`, so a
(suite, seed, count) triple always replays the same cases.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import artin
from .braid import (
    BraidWord, disjoint_union, full_twist, inverse, markov_perturb, perm_of, power, writhe,
)
from .braid_index import Rule, index_certificate
from .dehornoy import DehornoySign, Ordering, compare, dehornoy_floor, dehornoy_sign, handle_reduce
from .fdtc import fdtc
from .upsilon import homogenized_upsilon, pl_eval


@dataclass
class SuiteReport:
    suite: str
    cases: int = 0
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def random_word(rng: random.Random, n: int, max_len: int, min_len: int = 0) -> BraidWord:
    if n < 2:
        return BraidWord(n, ())
    length = rng.randint(min_len, max_len)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def sample_ts(rng: random.Random, end: Fraction, count: int, start: Fraction = Fraction(0)) -> list[Fraction]:
    """``count`` rationals in [start, end], always including both ends."""
    ts = {start, end}
    while len(ts) < count:
        ts.add(start + (end - start) * Fraction(rng.randint(0, 360), 360))
    return sorted(ts)


def order_suite(rng: random.Random, count: int) -> SuiteReport:
    """Handle reduction against the Artin oracle on random word pairs."""
    rep = SuiteReport("order")
    for _ in range(count):
        n = rng.randint(2, 5)
        a = random_word(rng, n, 15)
        # a third of the pairs are equal braids written differently
        mode = rng.randrange(3)
        if mode == 0:
            b = random_word(rng, n, 15)
        else:
            c = random_word(rng, n, 5)
            b = handle_reduce(c * a).reduced if mode == 1 else c * a
            b = inverse(c) * b
        rep.cases += 1
        same_order = dehornoy_sign(inverse(a) * b) is DehornoySign.ZERO
        same_artin = artin.artin_equal(a, b)
        if same_order != same_artin:
            rep.violations.append(f"equality disagrees on {a} vs {b}")
        w = a * inverse(b)
        red = handle_reduce(w).reduced
        if writhe(red) != writhe(w) or perm_of(red) != perm_of(w) or not artin.artin_equal(red, w):
            rep.violations.append(f"reduction changed the braid {w}")
    return rep


def axioms_suite(rng: random.Random, count: int) -> SuiteReport:
    rep = SuiteReport("axioms")
    for _ in range(count):
        n = rng.randint(2, 4)
        a, b, c = (random_word(rng, n, 10) for _ in range(3))
        rep.cases += 1
        ab, ba = compare(a, b), compare(b, a)
        if Ordering(-ab.value) is not ba:
            rep.violations.append(f"antisymmetry fails for {a}, {b}")
        if (ab is Ordering.EQUAL) != artin.artin_equal(a, b):
            rep.violations.append(f"equality inconsistent for {a}, {b}")
        if compare(c * a, c * b) is not ab:
            rep.violations.append(f"left-invariance fails for c={c}, {a}, {b}")
        if dehornoy_sign(a) is DehornoySign.POSITIVE and dehornoy_sign(b) is DehornoySign.POSITIVE:
            if dehornoy_sign(a * b) is not DehornoySign.POSITIVE:
                rep.violations.append(f"positive cone not closed: {a}, {b}")
    return rep


def fdtc_suite(rng: random.Random, count: int) -> SuiteReport:
    rep = SuiteReport("fdtc")
    for _ in range(count):
        n = rng.randint(3, 4)
        a, b = random_word(rng, n, 7, 1), random_word(rng, n, 7, 1)
        rep.cases += 1
        wa, wb = fdtc(a).value, fdtc(b).value
        if abs(fdtc(a * b).value - wa - wb) > 1:
            rep.violations.append(f"quasimorphism defect > 1 for {a}, {b}")
        for k in range(-3, 4):
            if fdtc(power(a, k)).value != k * wa:
                rep.violations.append(f"homogeneity fails for {a}, k={k}")
        if fdtc(full_twist(n) * a).value != wa + 1:
            rep.violations.append(f"full twist shift fails for {a}")
        if fdtc(b * a * inverse(b)).value != wa:
            rep.violations.append(f"conjugation invariance fails for {a} by {b}")
        if wa.denominator > n or wb.denominator > n:
            rep.violations.append(f"denominator too large for {a} or {b}")
        m = dehornoy_floor(a)
        if not m <= wa <= m + 1:
            rep.violations.append(f"floor sandwich fails for {a}: floor {m}, omega {wa}")
    return rep


def markov_suite(rng: random.Random, count: int) -> SuiteReport:
    rep = SuiteReport("markov")
    for _ in range(count):
        n = rng.randint(2, 3)
        base = random_word(rng, n, 6, 1)
        target = n + rng.randint(1, 2)
        tr = markov_perturb(base, target, rng.randrange(2**32))
        res = tr.result
        rep.cases += 1
        cert = index_certificate(res)
        if abs(cert.omega.value) > res.strands - 1 or cert.rule is Rule.GENERAL_THRESHOLD:
            rep.violations.append(f"stabilized braid {res} has omega {cert.omega.value}")
        hu_base, hu_res = homogenized_upsilon(base).fn, homogenized_upsilon(res).fn
        end = min(hu_base.end, hu_res.end)
        for t in sample_ts(rng, end, 5):
            if abs(pl_eval(hu_base, t) - pl_eval(hu_res, t)) > t * (n + res.strands - 2) / 2:
                rep.violations.append(f"HU difference bound fails at t={t} for {base} -> {res}")
    return rep


def upsilon_suite(rng: random.Random, count: int) -> SuiteReport:
    rep = SuiteReport("upsilon")
    for _ in range(count):
        n = rng.randint(3, 4)
        b = random_word(rng, n, 7, 1)
        a = random_word(rng, n, 7, 1)
        i = rng.choice((1, -1)) * rng.randint(1, n - 1)
        rep.cases += 1
        hb = homogenized_upsilon(b)
        hbi = homogenized_upsilon(b * BraidWord(n, (i,))).fn
        hab = homogenized_upsilon(a * b).fn
        ha = homogenized_upsilon(a).fn
        for t in sample_ts(rng, hb.fn.end, 5):
            if abs(pl_eval(hbi, t) - pl_eval(hb.fn, t)) > t / 2:
                rep.violations.append(f"generator perturbation bound fails for {b}, {i}")
            if abs(pl_eval(hab, t) - pl_eval(ha, t) - pl_eval(hb.fn, t)) > t * (n - 1):
                rep.violations.append(f"defect bound fails for {a}, {b}")
        if hb.slope_change_at_2_over_n != n * hb.omega.value:
            rep.violations.append(f"slope change mismatch for {b}")
        parts = [random_word(rng, k, 5) for k in (rng.randint(1, 3), rng.randint(1, 3))]
        u = disjoint_union(parts)
        total = homogenized_upsilon(parts[0]).fn + homogenized_upsilon(parts[1]).fn
        hu_u = homogenized_upsilon(u).fn
        end = min(total.end, hu_u.end)
        if hu_u.restrict(end) != total.restrict(end) or fdtc(u).value != 0:
            rep.violations.append(f"disjoint union additivity fails for {parts}")
    return rep


SUITES: dict[str, Callable[[random.Random, int], SuiteReport]] = {
    "order": order_suite,
    "axioms": axioms_suite,
    "fdtc": fdtc_suite,
    "markov": markov_suite,
    "upsilon": upsilon_suite,
}


def run_suite(name: str, seed: int, count: int) -> SuiteReport:
    return SUITES[name](random.Random(seed), count)
