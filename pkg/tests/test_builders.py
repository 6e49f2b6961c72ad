from itertools import permutations

import pytest

from chainform import builders
from chainform.errors import InvalidPermutation, NotContained, OutOfBounds, TooLong
from chainform.generating import fp
from chainform.poset import maximal_chains
from chainform.rank_selection import is_r_labeled, is_relative_r_labeled
from chainform.symfunc import m_to_schur, is_symmetric, schur_expansion

from oracles import partitions_of, poset_words, reduced_words


def words(P):
    return sorted(c.word for c in maximal_chains(P))


def test_boolean_small_cases():
    assert builders.boolean_poset(0).n_elems == 1
    assert words(builders.boolean_poset(2)) == [(1, 2), (2, 1)]
    assert words(builders.boolean_poset(3)) == sorted(permutations((1, 2, 3)))


def test_boolean_bounds():
    with pytest.raises(OutOfBounds):
        builders.boolean_poset(11)
    with pytest.raises(OutOfBounds):
        builders.boolean_poset(-1)


def test_chain_poset():
    assert builders.chain_poset(()).n_elems == 1
    P = builders.chain_poset((1, 3, 2))
    assert P.rank == 3 and words(P) == [(1, 3, 2)]
    assert builders.chain_poset((5,)).covers == ((0, 1, 5),)


def test_young_examples():
    P = builders.young_interval((), (1,))
    assert P.covers == ((0, 1, 0),)
    assert words(builders.young_interval((), (2, 1))) == [(0, -1, 1), (0, 1, -1)]
    assert len(words(builders.young_interval((1,), (2, 1)))) == 2


def test_young_row_labeling():
    # label i - lam_i is the negated content; chain words are negated too
    P = builders.young_interval((), (2,), labeling="row")
    assert words(P) == [(0, -1)]
    assert words(builders.young_interval((), (2,))) == [(0, 1)]
    assert words(builders.young_interval((), (2, 1), labeling="row")) == [(0, -1, 1), (0, 1, -1)]


def test_row_labeling_gives_conjugate_schur():
    for n in range(1, 6):
        for nu in partitions_of(n):
            conj = tuple(sum(1 for r in nu if r > c) for c in range(nu[0]))
            P = builders.young_interval((), nu, labeling="row")
            assert schur_expansion(P) == {conj: 1}


def test_young_not_contained():
    with pytest.raises(NotContained):
        builders.young_interval((2,), (1, 1))


def _syt_count(shape):
    # hook length formula
    from math import factorial

    n = sum(shape)
    conj = [sum(1 for r in shape if r > c) for c in range(shape[0])] if shape else []
    hooks = 1
    for i, row in enumerate(shape):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return factorial(n) // hooks


def test_young_chains_are_standard_tableaux():
    for n in range(1, 7):
        for nu in partitions_of(n):
            assert len(poset_words(builders.young_interval((), nu))) == _syt_count(nu)


def test_weak_order_examples():
    assert builders.weak_order_interval((1, 2, 3)).n_elems == 1
    assert words(builders.weak_order_interval((3, 2, 1))) == [(1, 2, 1), (2, 1, 2)]
    assert words(builders.weak_order_interval((2, 1))) == [(1,)]


def test_weak_order_chains_are_reduced_words_s4():
    for w in permutations(range(1, 5)):
        assert words(builders.weak_order_interval(w)) == reduced_words(w)


def test_weak_order_errors():
    with pytest.raises(TooLong):
        builders.weak_order_interval((5, 4, 3, 2, 1))
    with pytest.raises(InvalidPermutation):
        builders.weak_order_interval((1, 1, 2))


def test_young_intervals_give_schur_functions():
    for n in range(1, 6):
        for nu in partitions_of(n):
            assert schur_expansion(builders.young_interval((), nu)) == {nu: 1}


def test_w0_s3_is_s21():
    F = fp(builders.weak_order_interval((3, 2, 1)))
    assert m_to_schur(is_symmetric(F)).terms == {(2, 1): 1}


def test_boolean_r_labeled_up_to_4():
    for n in range(5):
        assert is_r_labeled(builders.boolean_poset(n))


def test_named_families_relative_r_labeled():
    for n in range(1, 6):
        for nu in partitions_of(n):
            for k in range(n + 1):
                for mu in partitions_of(k):
                    if len(mu) <= len(nu) and all(a <= b for a, b in zip(mu, nu)):
                        assert is_relative_r_labeled(builders.young_interval(mu, nu))
    for n in range(1, 6):
        for w in permutations(range(1, n + 1)):
            P = builders.weak_order_interval(w) if sum(
                1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j]) <= 5 else None
            if P is not None:
                assert is_relative_r_labeled(P)
