from math import comb

import pytest

from forkalg.weights import (
    Weight,
    all_permutations,
    b_sequence,
    block,
    bruhat_leq,
    bruhat_leq_perm,
    coset_permutation,
    defect,
    encodings,
    from_word,
    is_max_defect,
    length,
    length_of,
    reduced_words,
    tilde,
    weight_from_b_sequence,
    weight_from_vee_distances,
    weight_from_wedge_distances,
)

W = Weight.parse


def test_block_order_and_sizes():
    assert [str(w) for w in block(3, 2)] == ["v^^", "^v^", "^^v"]
    assert [str(w) for w in block(4, 0)] == ["vvvv"]
    assert len(block(8, 4)) == 70
    vees = [w.vees for w in block(5, 2)]
    assert vees == sorted(vees)


def test_worked_encoding():
    z = W("^^^^vvvv").act_word([4, 5, 6, 3])
    assert str(z) == "^^v^vv^v"
    e = encodings(z)
    assert e.b_seq == (4, 3, 3, 2, 2, 2, 1, 1)
    assert e.wedge_dist == (0, 0, 1, 3)
    assert e.vee_dist == (2, 1, 1, 0)


def test_identity_weight_encodings():
    for n in range(1, 7):
        for k in range(n + 1):
            e = Weight.identity(n, k)
            assert encodings(e).wedge_dist == (0,) * k
            assert b_sequence(e) == tuple(max(k - i, 0) + 1 for i in range(1, n + 1))
            assert reduced_words(e).vee_word == () and reduced_words(e).wedge_word == ()


def test_first_vee():
    assert W("v^^").vees[0] == 1


@pytest.mark.parametrize("n", range(1, 8))
def test_encodings_are_bijective(n):
    for k in range(n + 1):
        ws = block(n, k)
        assert len(ws) == comb(n, k)
        for w in ws:
            e = encodings(w)
            assert weight_from_wedge_distances(n, e.wedge_dist) == w
            assert weight_from_vee_distances(n, k, e.vee_dist) == w
            assert weight_from_b_sequence(e.b_seq, k) == w
            assert sum(e.wedge_dist) == sum(e.vee_dist) == length_of(w)


@pytest.mark.parametrize("n", range(1, 7))
def test_reduced_words(n):
    for k in range(n + 1):
        for w in block(n, k):
            words = reduced_words(w)
            ident = Weight.identity(n, k)
            for word in (words.wedge_word, words.vee_word):
                assert ident.act_word(word) == w
                assert len(word) == length_of(w) == length(from_word(word, n))
            assert length(coset_permutation(w)) == length_of(w)


def test_bruhat_generating_move():
    assert bruhat_leq(W("v^"), W("^v")) and not bruhat_leq(W("^v"), W("v^"))


def test_bruhat_is_a_partial_order():
    ws = block(5, 2)
    for a in ws:
        assert bruhat_leq(a, a)
        for b in ws:
            if bruhat_leq(a, b) and bruhat_leq(b, a):
                assert a == b
            for c in ws:
                if bruhat_leq(a, b) and bruhat_leq(b, c):
                    assert bruhat_leq(a, c)


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (5, 3)])
def test_bruhat_is_opposite_to_permutation_order(n, k):
    ws = block(n, k)
    for a in ws:
        for b in ws:
            assert bruhat_leq(a, b) == bruhat_leq_perm(coset_permutation(b), coset_permutation(a))


def test_different_blocks_rejected():
    with pytest.raises(ValueError):
        bruhat_leq(W("^v"), W("^^"))


def test_defect_and_tilde():
    assert defect(W("^^v")) == 0 and defect(W("v^^")) == 2
    for n in range(1, 7):
        for k in range(n):
            for w in block(n, k):
                assert is_max_defect(w) == (w.symbols[0] == "v")
                assert is_max_defect(tilde(w))
                assert tilde(tilde(w)) == tilde(w)


def test_b_sequence_needs_matching_k():
    with pytest.raises(ValueError):
        weight_from_b_sequence((3, 2, 1), 1)


def test_permutations():
    assert len(set(all_permutations(4))) == 24
