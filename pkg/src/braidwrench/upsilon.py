"""
Exact piecewise-linear functions, torus-knot Upsilon and the homogenized
Upsilon of a braid on [0, min(2/(n-1), 1)].

Everything is kept as :class:`fractions.Fraction`; nothing here touches
floating point. Beyond min(2/(n-1), 1) the homogenized Upsilon is not known
to be piecewise linear, so evaluation there raises :class:`DomainError`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .braid import BraidWord, writhe
from .errors import BadParams, DomainError
from .fdtc import Fdtc, fdtc


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True, eq=False)
class PLFunction:
    """Continuous function, linear between consecutive breakpoints."""

    breakpoints: tuple[Fraction, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self):
        bps = tuple(_frac(t) for t in self.breakpoints)
        vals = tuple(_frac(v) for v in self.values)
        if len(bps) != len(vals) or len(bps) < 2:
            raise DomainError("need at least two breakpoints and one value per breakpoint")
        if bps[0] != 0:
            raise DomainError(f"domain must start at 0, got {bps[0]}")
        if any(b <= a for a, b in zip(bps, bps[1:])):
            raise DomainError(f"breakpoints not strictly ascending: {bps}")
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "values", vals)

    @property
    def end(self) -> Fraction:
        return self.breakpoints[-1]

    @property
    def slopes(self) -> tuple[Fraction, ...]:
        b, v = self.breakpoints, self.values
        return tuple((v[j + 1] - v[j]) / (b[j + 1] - b[j]) for j in range(len(b) - 1))

    def __call__(self, t) -> Fraction:
        return pl_eval(self, t)

    def canonical(self) -> PLFunction:
        """Same function with collinear interior breakpoints removed."""
        b, v = list(self.breakpoints), list(self.values)
        keep_b, keep_v = [b[0]], [v[0]]
        slopes = self.slopes
        for j in range(1, len(b) - 1):
            if slopes[j - 1] != slopes[j]:
                keep_b.append(b[j])
                keep_v.append(v[j])
        keep_b.append(b[-1])
        keep_v.append(v[-1])
        return PLFunction(tuple(keep_b), tuple(keep_v))

    def restrict(self, end) -> PLFunction:
        end = _frac(end)
        if not 0 < end <= self.end:
            raise DomainError(f"cannot restrict [0, {self.end}] to [0, {end}]")
        bps = [t for t in self.breakpoints if t < end] + [end]
        return PLFunction(tuple(bps), tuple(pl_eval(self, t) for t in bps))

    def __eq__(self, other) -> bool:
        if not isinstance(other, PLFunction):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return a.breakpoints == b.breakpoints and a.values == b.values

    def __hash__(self) -> int:
        c = self.canonical()
        return hash((c.breakpoints, c.values))

    def __add__(self, other: PLFunction) -> PLFunction:
        return pl_combine([self, other], [1, 1])

    def __sub__(self, other: PLFunction) -> PLFunction:
        return pl_combine([self, other], [1, -1])

    def __mul__(self, c) -> PLFunction:
        return pl_combine([self], [c])

    __rmul__ = __mul__

    def __neg__(self) -> PLFunction:
        return pl_combine([self], [-1])


def linear(slope, end) -> PLFunction:
    return PLFunction((Fraction(0), _frac(end)), (Fraction(0), _frac(slope) * _frac(end)))


def pl_eval(f: PLFunction, t) -> Fraction:
    t = _frac(t)
    b, v = f.breakpoints, f.values
    if t < 0 or t > b[-1]:
        raise DomainError(f"t = {t} outside [0, {b[-1]}]")
    for j in range(len(b) - 1):
        if t <= b[j + 1]:
            return v[j] + (v[j + 1] - v[j]) * (t - b[j]) / (b[j + 1] - b[j])
    return v[-1]  # unreachable: t == b[-1] is caught above


def pl_combine(fs: Sequence[PLFunction], coeffs: Sequence) -> PLFunction:
    """Σ c_j f_j on the common domain [0, min end], breakpoints merged."""
    if not fs or len(fs) != len(coeffs):
        raise DomainError("pl_combine needs matching, nonempty functions and coefficients")
    end = min(f.end for f in fs)
    if end <= 0:
        raise DomainError("empty common domain")
    bps = sorted({t for f in fs for t in f.breakpoints if t <= end} | {end})
    vals = tuple(sum((_frac(c) * pl_eval(f, t) for f, c in zip(fs, coeffs)), Fraction(0)) for t in bps)
    return PLFunction(tuple(bps), vals)


def domain_end(n: int) -> Fraction:
    """min(2/(n-1), 1); a single strand uses [0, 1]."""
    if n <= 2:
        return Fraction(1)
    return Fraction(2, n - 1)


def torus_upsilon(n: int, k: int) -> PLFunction:
    """
    Upsilon of the torus knot T(n, nk+1): slope -n(n-1)k/2 up to t = 2/n,
    then the slope rises by nk, up to min(2/(n-1), 1).
    """
    if n < 2 or k < 1:
        raise BadParams(f"torus_upsilon needs n >= 2 and k >= 1, got n={n}, k={k}")
    first = Fraction(-n * (n - 1) * k, 2)
    return _two_piece(n, first, Fraction(n * k))


def _two_piece(n: int, first_slope: Fraction, slope_change: Fraction) -> PLFunction:
    end = domain_end(n)
    if n == 2:
        return linear(first_slope, end)
    kink = Fraction(2, n)
    v_kink = first_slope * kink
    v_end = v_kink + (first_slope + slope_change) * (end - kink)
    return PLFunction((Fraction(0), kink, end), (Fraction(0), v_kink, v_end))


@dataclass(frozen=True)
class HUResult:
    fn: PLFunction
    writhe: int
    omega: Fdtc
    slope_change_at_2_over_n: Fraction

    @property
    def strands(self) -> int:
        return self.omega.strands


def homogenized_upsilon(b: BraidWord, budget: int | None = None, omega: Fdtc | None = None) -> HUResult:
    """
    Slope -wr/2 on [0, 2/n], then -wr/2 + n·ω on [2/n, min(2/(n-1), 1)].
    A precomputed ``omega`` may be passed to skip the twist computation.
    """
    n = b.strands
    wr = writhe(b)
    w = omega if omega is not None else fdtc(b, budget)
    if n < 2:
        return HUResult(linear(0, 1), wr, w, Fraction(0))
    change = n * w.value
    return HUResult(_two_piece(n, Fraction(-wr, 2), change), wr, w, change)
