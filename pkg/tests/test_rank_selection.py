import pytest
from hypothesis import given

from chainform import builders
from chainform.errors import NotRelativeRLabeled
from chainform.generating import fp
from chainform.poset import all_rank_sets, build_poset, flag_stats, interval
from chainform.qsym import QSymExpr
from chainform.rank_selection import (
    ehrenborg_ep,
    flag_fvector_classic,
    increasing_chain_counts,
    is_r_labeled,
    is_relative_r_labeled,
    rank_selected,
    relative_flag_count,
    weighted_flag_count,
)

from conftest import graded_posets
from oracles import brute_f, descents, poset_words

M = QSymExpr.monomial


def brute_phi(P, I):
    """Count chains bottom < t_1 < ... < top with ranks exactly I, from comparability."""
    levels = [0, *I, P.rank]
    count = 0

    def rec(k, x):
        nonlocal count
        if k == len(levels):
            count += x == P.top
            return
        for y in range(P.n_elems):
            if P.ranks[y] == levels[k] and P.leq(x, y):
                rec(k + 1, y)

    rec(1, P.bottom)
    return count


def brute_increasing(P, x, y):
    Q = interval(P, x, y)
    return sum(1 for w in poset_words(Q) if not descents(w))


def test_classic_flag_vector_examples():
    assert flag_fvector_classic(builders.chain_poset((3, 1)))[()] == 1
    assert flag_fvector_classic(builders.boolean_poset(2))[(1,)] == 2
    assert flag_fvector_classic(builders.boolean_poset(3))[(1, 2)] == 6


@given(graded_posets())
def test_classic_flag_vector_brute_force(P):
    phi = flag_fvector_classic(P)
    assert phi[()] == 1
    for I in all_rank_sets(P.rank):
        assert phi[I] == brute_phi(P, I)


def test_ehrenborg_examples():
    assert ehrenborg_ep(builders.chain_poset((9,))) == M((1,))
    B2 = builders.boolean_poset(2)
    assert ehrenborg_ep(B2) == M((2,)) + 2 * M((1, 1)) == fp(B2)


def test_rank_selected_structure():
    B3 = builders.boolean_poset(3)
    sel = rank_selected(B3, (2,))
    assert len(sel.elements) == 5
    assert len(sel.covers) == 6
    assert sel.count_chains() == 3


def test_weighted_examples():
    B3 = builders.boolean_poset(3)
    assert weighted_flag_count(B3, (1, 2)) == 6 == len(poset_words(B3))
    assert weighted_flag_count(B3, (1,)) == 3
    assert weighted_flag_count(builders.chain_poset((2, 1)), ()) == 0


@given(graded_posets(max_rank=5))
def test_weighted_count_is_f(P):
    f = brute_f(poset_words(P), P.rank)
    for I in all_rank_sets(P.rank):
        assert weighted_flag_count(P, I) == f[frozenset(I)]


@given(graded_posets())
def test_increasing_counts_brute_force(P):
    inc = increasing_chain_counts(P)
    for (x, y), c in inc.items():
        assert c == brute_increasing(P, x, y)
    assert len(inc) == sum(1 for x in range(P.n_elems) for y in range(P.n_elems) if P.leq(x, y))


@pytest.mark.parametrize("n", range(5))
def test_boolean_r_labeled(n):
    assert is_r_labeled(builders.boolean_poset(n))


def test_r_labeling_negative_examples():
    assert not is_r_labeled(builders.chain_poset((2, 1)))
    assert not is_r_labeled(builders.young_interval((), (2, 1)))


def test_weak_increase_counts_as_increasing():
    assert is_r_labeled(builders.chain_poset((1, 1, 2)))


def test_relative_r_labeled_examples():
    assert is_relative_r_labeled(builders.young_interval((), (2, 1)))
    assert is_relative_r_labeled(builders.weak_order_interval((3, 2, 1)))
    assert is_relative_r_labeled(builders.boolean_poset(3))


def test_relative_but_not_r_labeled():
    # word 1,3,2: the whole chain is not increasing, every proper piece that is
    # increasing has increasing pieces
    P = build_poset([(0, 1, 1), (1, 2, 3), (2, 3, 2)], 4)
    assert is_relative_r_labeled(P) and not is_r_labeled(P)


def test_two_increasing_chains_rejected():
    R = build_poset([(0, 1, 1), (0, 2, 1), (1, 3, 2), (2, 4, 3), (3, 5, 4), (4, 5, 4),
                     (1, 4, 5), (2, 3, 5)], 6)
    # 1,2,4 and 1,3,4 both increase
    assert increasing_chain_counts(R)[0, 5] == 2
    assert not is_relative_r_labeled(R)


def test_relative_r_hereditary_condition_detected():
    # [0,3] has the single increasing chain 1,2,3, yet its subinterval [0,5]
    # has none
    covers = [
        (0, 1, 1), (1, 2, 2), (2, 3, 3),   # increasing chain
        (0, 4, 5), (4, 5, 1), (5, 3, 9),   # word 5,1,9: descent at 1
        (1, 5, 0),                          # [0,5] via 1: 1,0 descent; via 4: 5,1 descent
    ]
    P = build_poset(covers, 6)
    inc = increasing_chain_counts(P)
    assert inc[0, 3] == 1
    assert inc[0, 5] == 0
    assert not is_relative_r_labeled(P)
    with pytest.raises(NotRelativeRLabeled):
        relative_flag_count(P, (1,))


def test_relative_flag_count_examples():
    Y = builders.young_interval((), (2, 1))
    assert relative_flag_count(Y, (1,)) == 1 == flag_stats(Y).f[(1,)]
    assert relative_flag_count(builders.boolean_poset(3), ()) == 1
    W = builders.weak_order_interval((3, 2, 1))
    assert relative_flag_count(W, (1, 2)) == 2


@given(graded_posets(max_rank=4))
def test_relative_flag_count_is_f(P):
    if not is_relative_r_labeled(P):
        return
    f = brute_f(poset_words(P), P.rank)
    for I in all_rank_sets(P.rank):
        assert relative_flag_count(P, I) == f[frozenset(I)]


def test_r_labeled_flag_vector_on_corpus(posets):
    hits = 0
    for P in posets:
        if is_r_labeled(P):
            hits += 1
            assert flag_fvector_classic(P) == flag_stats(P).f
            assert ehrenborg_ep(P) == fp(P)
    assert hits >= 5
