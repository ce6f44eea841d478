"""
Word-problem oracle through the Artin action of B_n on the free group F_n.

The action is faithful, so two braid words are equal in B_n exactly when
their automorphisms agree on every generator x_1..x_n. Images can grow
exponentially with word length; a total-length cap turns runaway cases into
:class:`OracleBudgetExceeded` instead of exhausting memory.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .braid import BraidWord
from .errors import OracleBudgetExceeded, StrandMismatch

DEFAULT_IMAGE_CAP = 10**6

FreeWord = tuple[int, ...]
FreeEndo = tuple[FreeWord, ...]  # FreeEndo[j-1] is the image of x_j


def free_reduce(w: Iterable[int]) -> FreeWord:
    out: list[int] = []
    for g in w:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def free_inverse(w: Sequence[int]) -> FreeWord:
    return tuple(-g for g in reversed(w))


def identity_endo(n: int) -> FreeEndo:
    return tuple((j,) for j in range(1, n + 1))


def apply_endo(f: FreeEndo, w: Iterable[int]) -> FreeWord:
    out: list[int] = []
    for g in w:
        out.extend(f[g - 1] if g > 0 else free_inverse(f[-g - 1]))
    return free_reduce(out)


def compose(f: FreeEndo, g: FreeEndo) -> FreeEndo:
    """``f ∘ g``: x_j ↦ f(g(x_j))."""
    return tuple(apply_endo(f, img) for img in g)


def artin_action(b: BraidWord, cap: int = DEFAULT_IMAGE_CAP) -> FreeEndo:
    """
    Automorphism φ_b with φ_{uv} = φ_u ∘ φ_v. The letter a_i sends
    x_i ↦ x_i x_{i+1} x_i^{-1}, x_{i+1} ↦ x_i and fixes the rest, so reading
    the word left to right only ever splices existing images together.
    """
    images = [list(img) for img in identity_endo(b.strands)]
    total = b.strands
    for g in b.letters:
        i = abs(g) - 1
        u, v = images[i], images[i + 1]
        if g > 0:
            # φ_{w a_i}(x_i) = φ_w(x_i) φ_w(x_{i+1}) φ_w(x_i)^{-1}; φ_{w a_i}(x_{i+1}) = φ_w(x_i)
            new_i = free_reduce(u + v + list(free_inverse(u)))
            new_next = u
        else:
            # inverse letter: x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}^{-1} x_i x_{i+1}
            new_i = v
            new_next = free_reduce(list(free_inverse(v)) + u + v)
        total += len(new_i) + len(new_next) - len(u) - len(v)
        images[i], images[i + 1] = list(new_i), list(new_next)
        if total > cap:
            raise OracleBudgetExceeded(cap)
    return tuple(tuple(img) for img in images)


def artin_equal(a: BraidWord, b: BraidWord, cap: int = DEFAULT_IMAGE_CAP) -> bool:
    if a.strands != b.strands:
        raise StrandMismatch(a.strands, b.strands)
    return artin_action(a, cap) == artin_action(b, cap)


def is_trivial(b: BraidWord, cap: int = DEFAULT_IMAGE_CAP) -> bool:
    return artin_action(b, cap) == identity_endo(b.strands)
