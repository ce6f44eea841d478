import pytest
from hypothesis import given, strategies as st

from braidwrench.braid import (
    BraidWord, Conjugate, Perm, StabilizeNegative, StabilizePositive, beta_nm, closure_components,
    concat, delta, delta_rev, disjoint_union, elrifai_K, elrifai_L, family, full_twist, inverse,
    knotting_suffix, markov_perturb, perm_of, power, replay, torus_braid, writhe,
)
from braidwrench.errors import BadParams, StrandMismatch
from conftest import braid_words, word_pairs

W = BraidWord


def test_concat():
    assert concat(W(3, (1,)), W(3, (-1,))) == W(3, (1, -1))
    assert concat(W(2), W(2, (1,))) == W(2, (1,))
    assert concat(W(3, (1, 2)), W(3, (2, 1))) == W(3, (1, 2, 2, 1))


def test_concat_strand_mismatch():
    with pytest.raises(StrandMismatch):
        concat(W(2, (1,)), W(3, (1,)))


def test_inverse_and_power():
    assert inverse(W(3, (1, -2))) == W(3, (2, -1))
    assert inverse(W(4)) == W(4)
    assert inverse(W(2, (1, 1))) == W(2, (-1, -1))
    assert power(W(2, (1,)), 3) == W(2, (1, 1, 1))
    assert power(W(3, (1, 2)), 0) == W(3)
    assert power(W(3, (1,)), -2) == W(3, (-1, -1))


def test_rejects_bad_letters():
    with pytest.raises(BadParams):
        W(3, (3,))
    with pytest.raises(BadParams):
        W(3, (0,))
    with pytest.raises(BadParams):
        W(0)
    assert W(1).letters == ()


def test_writhe_examples():
    assert writhe(W(3, (1, -2, 1))) == 1
    assert writhe(W(4)) == 0
    assert writhe(full_twist(3)) == 6


def test_perm_examples():
    assert perm_of(W(3, (1, 2))) == Perm((2, 3, 1))
    assert perm_of(W(2, (1, 1))).is_identity
    assert perm_of(W(3, (1, -1))).is_identity


def test_closure_components():
    assert closure_components(W(3, (1, 2))) == 1
    assert closure_components(W(3)) == 3
    assert closure_components(W(2, (1, 1))) == 2


def test_knotting_suffix_examples():
    eps = knotting_suffix(W(3))
    assert len(eps) == 2 and closure_components(eps) == 1
    assert knotting_suffix(W(3, (1, 2))) == W(3)
    assert knotting_suffix(W(2, (1, 1))) == W(2, (1,))


def test_disjoint_union_examples():
    assert disjoint_union([W(2, (1,)), W(3, (1, 2))]) == W(5, (1, 3, 4))
    assert disjoint_union([W(2)]) == W(2)
    assert disjoint_union([W(2, (1,)), W(2, (-1,))]) == W(4, (1, -3))
    with pytest.raises(BadParams):
        disjoint_union([])


def test_families():
    assert full_twist(2) == W(2, (1, 1))
    assert beta_nm(3, 2) == W(3, (1, 2, 2, 1, 1, 2))
    assert elrifai_K(1) == W(3, (1, 2, 2, 1, 1, 2, 2, 1, 1, -2, -2, -2))
    assert elrifai_L(1) == W(3, (1, 2, 2, 1) * 3 + (1, -2))
    assert delta(4) == W(4, (1, 2, 3)) and delta_rev(4) == W(4, (3, 2, 1))
    assert torus_braid(3, 4) == power(delta(3), 4)
    assert family("beta_nm", 4, 3) == beta_nm(4, 3)
    assert len(beta_nm(4, 3)) == 15
    with pytest.raises(BadParams):
        delta(0)
    with pytest.raises(BadParams):
        family("nope", 1)


def test_markov_examples():
    tr = markov_perturb(W(2, (1, 1, 1)), 2, seed=3)
    assert all(isinstance(m, Conjugate) for m in tr.moves)
    assert tr.result.strands == 2 and writhe(tr.result) == 3

    tr = markov_perturb(W(2, (1,)), 3, seed=5)
    assert tr.result.strands == 3
    stab = [j for j, m in enumerate(tr.moves) if not isinstance(m, Conjugate)]
    assert len(stab) == 1
    before = replay(tr.base, tr.moves[: stab[0] + 1])
    assert abs(before.letters[-1]) == 2

    with pytest.raises(BadParams):
        markov_perturb(W(3, (1,)), 2)


def test_markov_deterministic():
    a = W(3, (1, -2, 1))
    assert markov_perturb(a, 5, seed=11) == markov_perturb(a, 5, seed=11)


@given(word_pairs())
def test_writhe_is_additive(pair):
    a, b = pair
    assert writhe(a * b) == writhe(a) + writhe(b)
    assert writhe(inverse(a)) == -writhe(a)


@given(braid_words(), st.integers(-4, 4))
def test_writhe_of_power(a, k):
    assert writhe(power(a, k)) == k * writhe(a)


@given(word_pairs())
def test_perm_is_homomorphism(pair):
    a, b = pair
    assert perm_of(a * b) == perm_of(a).compose(perm_of(b))
    assert perm_of(a * inverse(a)).is_identity


@given(braid_words(min_strands=1, max_strands=7))
def test_knotting_suffix_makes_a_knot(a):
    eps = knotting_suffix(a)
    assert all(g > 0 for g in eps.letters)
    assert len(eps) == closure_components(a) - 1 <= a.strands - 1
    assert closure_components(a * eps) == 1


@given(st.lists(braid_words(min_strands=1, max_strands=4), min_size=1, max_size=4))
def test_disjoint_union_writhe(parts):
    u = disjoint_union(parts)
    assert u.strands == sum(p.strands for p in parts)
    assert writhe(u) == sum(writhe(p) for p in parts)
    assert closure_components(u) == sum(closure_components(p) for p in parts)


@given(braid_words(max_strands=4, max_len=6), st.integers(0, 3), st.integers(0, 2**16))
def test_markov_trace_consistency(a, extra, seed):
    tr = markov_perturb(a, a.strands + extra, seed)
    assert tr.result == replay(tr.base, tr.moves)
    assert tr.result.strands == a.strands + tr.stabilizations == a.strands + extra
    signed = sum(1 if isinstance(m, StabilizePositive) else -1
                 for m in tr.moves if isinstance(m, (StabilizePositive, StabilizeNegative)))
    assert writhe(tr.result) == writhe(a) + signed
    # Markov moves preserve the component count of the closure
    assert closure_components(tr.result) == closure_components(a)
