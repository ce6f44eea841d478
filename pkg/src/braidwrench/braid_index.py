"""Braid-index certificates from twist-coefficient thresholds."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .braid import BraidWord, full_twist, power
from .dehornoy import Ordering, compare
from .fdtc import Fdtc, fdtc


class Verdict(enum.Enum):
    EXACTLY_N = "exactly_n"
    NO_CONCLUSION = "no_conclusion"


class Rule(enum.Enum):
    GENERAL_THRESHOLD = "general_threshold"
    THREE_BRAID_REFINEMENT = "three_braid_refinement"
    FULL_TWIST_DOMINATION = "full_twist_domination"


@dataclass(frozen=True)
class IndexCertificate:
    """
    ``verdict`` is EXACTLY_N only when ``rule``'s hypothesis was verified.
    NO_CONCLUSION says nothing about minimality either way.

    ``experimental`` reports what the conjectural threshold |ω| > n-2 would
    say; it is never folded into ``verdict``.
    """

    strands: int
    omega: Fdtc
    verdict: Verdict
    rule: Rule | None
    experimental: Verdict


def index_certificate(b: BraidWord, budget: int | None = None, omega: Fdtc | None = None) -> IndexCertificate:
    n = b.strands
    w = omega if omega is not None else fdtc(b, budget)
    size = abs(w.value)
    if n >= 2 and size > n - 1:
        verdict, rule = Verdict.EXACTLY_N, Rule.GENERAL_THRESHOLD
    elif n == 3 and size > 1:
        verdict, rule = Verdict.EXACTLY_N, Rule.THREE_BRAID_REFINEMENT
    else:
        verdict, rule = Verdict.NO_CONCLUSION, None
    experimental = Verdict.EXACTLY_N if n >= 2 and size > n - 2 else Verdict.NO_CONCLUSION
    return IndexCertificate(n, w, verdict, rule, experimental)


def full_twist_domination(b: BraidWord, budget: int | None = None) -> bool:
    """Δ^{2n} ⪯ b or b ⪯ Δ^{-2n}."""
    n = b.strands
    if n < 2:
        return False
    top = power(full_twist(n), n)
    if compare(top, b, budget) is not Ordering.GREATER:
        return True
    return compare(b, power(full_twist(n), -n), budget) is not Ordering.GREATER


def domination_certificate(b: BraidWord, budget: int | None = None) -> IndexCertificate:
    """Certificate through full-twist domination alone; ω is still reported."""
    w = fdtc(b, budget)
    n = b.strands
    dominated = full_twist_domination(b, budget)
    experimental = Verdict.EXACTLY_N if n >= 2 and abs(w.value) > n - 2 else Verdict.NO_CONCLUSION
    if dominated:
        return IndexCertificate(n, w, Verdict.EXACTLY_N, Rule.FULL_TWIST_DOMINATION, experimental)
    return IndexCertificate(n, w, Verdict.NO_CONCLUSION, None, experimental)
