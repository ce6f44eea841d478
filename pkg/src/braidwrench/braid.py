"""
Braid words on n strands, group operations, strand permutations, closure
combinatorics, named families and random Markov moves.

A letter is a nonzero integer: ``+i`` is the Artin generator a_i and ``-i``
its inverse. Words are never rewritten here; free cancellation and braid
relations live in :mod:`braidwrench.dehornoy` and :mod:`braidwrench.artin`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import BadParams, StrandMismatch


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise BadParams(f"strand count must be positive, got {self.strands}")
        letters = tuple(int(g) for g in self.letters)
        for g in letters:
            if g == 0 or abs(g) > self.strands - 1:
                raise BadParams(f"letter {g} is not a generator of B_{self.strands}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __pow__(self, k: int) -> BraidWord:
        return power(self, k)

    def __invert__(self) -> BraidWord:
        return inverse(self)

    def __str__(self) -> str:
        return " ".join(f"s{g}" if g > 0 else f"S{-g}" for g in self.letters)

    @property
    def is_identity_word(self) -> bool:
        return not self.letters


def identity(n: int) -> BraidWord:
    return BraidWord(n, ())


def concat(a: BraidWord, b: BraidWord) -> BraidWord:
    if a.strands != b.strands:
        raise StrandMismatch(a.strands, b.strands)
    return BraidWord(a.strands, a.letters + b.letters)


def concat_all(words: Iterable[BraidWord], strands: int) -> BraidWord:
    letters: list[int] = []
    for w in words:
        if w.strands != strands:
            raise StrandMismatch(strands, w.strands)
        letters.extend(w.letters)
    return BraidWord(strands, tuple(letters))


def inverse(a: BraidWord) -> BraidWord:
    return BraidWord(a.strands, tuple(-g for g in reversed(a.letters)))


def power(a: BraidWord, k: int) -> BraidWord:
    if k >= 0:
        return BraidWord(a.strands, a.letters * k)
    return BraidWord(a.strands, inverse(a).letters * (-k))


def writhe(a: BraidWord) -> int:
    return sum(1 if g > 0 else -1 for g in a.letters)


def conjugate(a: BraidWord, by: BraidWord) -> BraidWord:
    """The word ``by · a · by^{-1}``."""
    return concat_all([by, a, inverse(by)], a.strands)


# ---------------------------------------------------------------------------
# permutations and closures


@dataclass(frozen=True)
class Perm:
    images: tuple[int, ...]  # images[j-1] is the image of strand j

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise BadParams(f"{self.images} is not a permutation")

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def compose(self, other: Perm) -> Perm:
        """``self ∘ other`` (apply ``other`` first)."""
        return Perm(tuple(self(other(j)) for j in range(1, len(self.images) + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self.images) + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self(start)
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self(j)
            out.append(tuple(cyc))
        return out

    @property
    def is_identity(self) -> bool:
        return all(v == j for j, v in enumerate(self.images, 1))


def perm_of(a: BraidWord) -> Perm:
    """Strand permutation; a word w_1 ⋯ w_l maps to s_{|w_1|} ∘ ⋯ ∘ s_{|w_l|}."""
    images = list(range(1, a.strands + 1))
    for g in a.letters:
        i = abs(g)
        images[i - 1], images[i] = images[i], images[i - 1]
    return Perm(tuple(images))


def closure_components(a: BraidWord) -> int:
    return len(perm_of(a).cycles())


def knotting_suffix(a: BraidWord) -> BraidWord:
    """
    A positive word ε with one letter per cycle merge, so that the closure of
    ``a · ε`` is a knot. Greedy: scan i = 1..n-1 and append a_i whenever i and
    i+1 still lie in different cycles of the running permutation.
    """
    # union-find over strands: cycles of perm_of(a · ε) are unions of cycles of perm_of(a)
    parent = list(range(a.strands + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for cyc in perm_of(a).cycles():
        for j in cyc[1:]:
            parent[find(j)] = find(cyc[0])
    suffix = []
    for i in range(1, a.strands):
        ri, rj = find(i), find(i + 1)
        if ri != rj:
            suffix.append(i)
            parent[ri] = rj
    return BraidWord(a.strands, tuple(suffix))


def disjoint_union(parts: Sequence[BraidWord]) -> BraidWord:
    if not parts:
        raise BadParams("disjoint_union needs at least one part")
    shift = 0
    letters: list[int] = []
    for p in parts:
        letters.extend(g + shift if g > 0 else g - shift for g in p.letters)
        shift += p.strands
    return BraidWord(shift, tuple(letters))


def shift_word(a: BraidWord, shift: int, strands: int) -> BraidWord:
    """Re-embed ``a`` into B_strands, moving every generator up by ``shift``."""
    return BraidWord(strands, tuple(g + shift if g > 0 else g - shift for g in a.letters))


# ---------------------------------------------------------------------------
# named families


def _need_strands(n: int) -> None:
    if n < 1:
        raise BadParams(f"need at least one strand, got n={n}")


def delta(n: int) -> BraidWord:
    """δ = a_1 a_2 ⋯ a_{n-1}."""
    _need_strands(n)
    return BraidWord(n, tuple(range(1, n)))


def delta_rev(n: int) -> BraidWord:
    """δ^Δ = a_{n-1} ⋯ a_1."""
    _need_strands(n)
    return BraidWord(n, tuple(range(n - 1, 0, -1)))


def full_twist(n: int) -> BraidWord:
    return power(delta(n), n)


def torus_braid(p: int, q: int) -> BraidWord:
    return power(delta(p), q)


def beta_nm(n: int, m: int) -> BraidWord:
    """(δ δ^Δ)^{m-1} δ; the first strand wraps m-1 times around the others."""
    if m < 1:
        raise BadParams(f"beta_nm needs m >= 1, got {m}")
    return power(delta(n) * delta_rev(n), m - 1) * delta(n)


def _elrifai(twists: int, tail: int) -> BraidWord:
    # (a_1 a_2 a_2 a_1)^twists a_1 a_2^{-tail}
    return power(BraidWord(3, (1, 2, 2, 1)), twists) * BraidWord(3, (1,) + (-2,) * tail)


def elrifai_K(k: int) -> BraidWord:
    """(a_1 a_2 a_2 a_1)^{2k} a_1 a_2^{-2k-1}."""
    if k < 1:
        raise BadParams(f"elrifai_K needs k >= 1, got {k}")
    return _elrifai(2 * k, 2 * k + 1)


def elrifai_L(k: int) -> BraidWord:
    """(a_1 a_2 a_2 a_1)^{2k+1} a_1 a_2^{-2k+1}."""
    if k < 1:
        raise BadParams(f"elrifai_L needs k >= 1, got {k}")
    return _elrifai(2 * k + 1, 2 * k - 1)


FAMILIES = {
    "delta": (delta, 1),
    "delta_rev": (delta_rev, 1),
    "full_twist": (full_twist, 1),
    "torus_braid": (torus_braid, 2),
    "beta_nm": (beta_nm, 2),
    "elrifai_K": (elrifai_K, 1),
    "elrifai_L": (elrifai_L, 1),
}


def family(name: str, *params: int) -> BraidWord:
    try:
        ctor, arity = FAMILIES[name]
    except KeyError:
        raise BadParams(f"unknown family {name!r}; known: {', '.join(FAMILIES)}") from None
    if len(params) != arity:
        raise BadParams(f"family {name} takes {arity} parameter(s), got {len(params)}")
    return ctor(*params)


# ---------------------------------------------------------------------------
# Markov moves


@dataclass(frozen=True)
class Conjugate:
    by: BraidWord


@dataclass(frozen=True)
class StabilizePositive:
    pass


@dataclass(frozen=True)
class StabilizeNegative:
    pass


Move = Conjugate | StabilizePositive | StabilizeNegative


@dataclass(frozen=True)
class MarkovTrace:
    base: BraidWord
    moves: tuple[Move, ...] = field(default=())
    result: BraidWord | None = None

    @property
    def stabilizations(self) -> int:
        return sum(not isinstance(m, Conjugate) for m in self.moves)


def apply_move(b: BraidWord, move: Move) -> BraidWord:
    if isinstance(move, Conjugate):
        return conjugate(b, move.by)
    n = b.strands
    sign = 1 if isinstance(move, StabilizePositive) else -1
    return BraidWord(n + 1, b.letters + (sign * n,))


def replay(base: BraidWord, moves: Iterable[Move]) -> BraidWord:
    for m in moves:
        base = apply_move(base, m)
    return base


def _random_word(rng: random.Random, n: int, max_len: int) -> BraidWord:
    if n < 2:
        return identity(n)
    length = rng.randint(1, max_len)
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def markov_perturb(a: BraidWord, target_strands: int, seed: int | None = None) -> MarkovTrace:
    """
    Random Markov-equivalent braid on ``target_strands`` strands: alternate a
    conjugation by a short random word (length <= 4) with a stabilization of
    random sign, then finish with one more conjugation.
    """
    if target_strands < a.strands:
        raise BadParams(f"target_strands {target_strands} < {a.strands}")
    rng = random.Random(seed)
    moves: list[Move] = []
    cur = a
    while cur.strands < target_strands:
        for mv in (
            Conjugate(_random_word(rng, cur.strands, 4)),
            StabilizePositive() if rng.random() < 0.5 else StabilizeNegative(),
        ):
            moves.append(mv)
            cur = apply_move(cur, mv)
    final = Conjugate(_random_word(rng, cur.strands, 4))
    moves.append(final)
    cur = apply_move(cur, final)
    return MarkovTrace(a, tuple(moves), cur)
