import math

import pytest
from hypothesis import given, strategies as st

from complete_quadrics.perm import (
    Permutation, all_permutations, bruhat_leq, compose, count_reduced_words,
    coset_decompose, excedance, from_word, identity, in_young_subgroup,
    inverse, involution_rank, is_involution, length, lex_min_reduced_word,
    longest, reduced_words, simple,
)
from complete_quadrics.muinv import compositions
from oracles import bruhat_leq_subword, min_left_coset_length, perm, two_cycles


def perms(max_n=7):
    return st.integers(1, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(lambda w: Permutation(tuple(w))))


def test_compose_by_hand():
    assert compose(perm("213"), perm("132")) == perm("231")


def test_compose_size_mismatch():
    with pytest.raises(ValueError):
        compose(perm("21"), perm("132"))


@given(perms())
def test_group_laws(p):
    n = len(p)
    assert compose(identity(n), p) == p
    assert compose(p, inverse(p)) == identity(n)
    assert inverse(inverse(p)) == p


def test_rejects_non_permutations():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation((0, 1))


@pytest.mark.parametrize("text,expected", [("1234", 0), ("3421", 5), ("54321", 10)])
def test_length(text, expected):
    assert length(perm(text)) == expected


@given(perms())
def test_length_of_inverse(p):
    assert length(p) == length(inverse(p))


def test_reverse_length():
    for n in range(1, 9):
        assert length(longest(n)) == n * (n - 1) // 2


@pytest.mark.parametrize("text,expected", [("123", 0), ("21", 1), ("54321", 2)])
def test_excedance(text, expected):
    assert excedance(perm(text)) == expected


def test_excedance_counts_two_cycles():
    for n in range(1, 7):
        for p in all_permutations(n):
            if is_involution(p):
                assert excedance(p) == two_cycles(p.word)


@pytest.mark.parametrize("text,expected", [("12345", 0), ("54321", 6), ("321", 2)])
def test_involution_rank(text, expected):
    assert involution_rank(perm(text)) == expected


def test_involution_rank_rejects_cycles():
    with pytest.raises(ValueError):
        involution_rank(perm("231"))


def test_top_involution_rank_closed_form():
    for n in range(1, 13):
        r = involution_rank(longest(n))
        assert r == (n * n // 4 if n % 2 == 0 else (n * n - 1) // 4)
        if n > 2:
            assert r - involution_rank(longest(n - 2)) == n - 1


def test_reduced_words_small():
    assert reduced_words(identity(4)) == {()}
    assert reduced_words(simple(1, 3)) == {(1,)}
    total = len(reduced_words(perm("3421"))) + len(reduced_words(perm("4231")))
    assert total == 11


def test_reduced_words_evaluate_back():
    for n in range(1, 6):
        for p in all_permutations(n):
            words = reduced_words(p)
            assert len(words) == count_reduced_words(p)
            for word in words:
                assert len(word) == length(p)
                assert from_word(word, n) == p


def test_reduced_word_counts_of_longest():
    # staircase standard Young tableaux: 1, 1, 2, 16, 768
    assert [count_reduced_words(longest(n)) for n in range(1, 6)] == [1, 1, 2, 16, 768]


@given(perms())
def test_lex_min_word(p):
    word = lex_min_reduced_word(p)
    assert from_word(word, len(p)) == p
    if len(p) <= 5:
        assert word == min(reduced_words(p))


def test_coset_decompose_examples():
    u, v = coset_decompose(identity(4), (2, 2))
    assert u == v == identity(4)
    u, v = coset_decompose(perm("4321"), (3, 1))
    assert length(v) == 3
    p = perm("2134")
    assert coset_decompose(p, (2, 2)) == (p, identity(4))


@pytest.mark.slow
def test_coset_representative_is_minimal():
    for n in range(1, 7):
        for mu in compositions(n):
            for p in all_permutations(n):
                u, v = coset_decompose(p, mu.parts)
                assert compose(u, v) == p
                assert in_young_subgroup(u, mu.parts)
                assert length(v) == min_left_coset_length(p.word, mu.parts)


def test_bruhat_examples():
    assert bruhat_leq(identity(4), perm("4312"))
    assert bruhat_leq(perm("2134"), perm("3214"))
    assert not bruhat_leq(perm("21"), perm("12"))


def test_bruhat_matches_subword_oracle_on_s4():
    group = list(all_permutations(4))
    for p in group:
        for q in group:
            assert bruhat_leq(p, q) == bruhat_leq_subword(p, q), (p, q)


def test_text_round_trip():
    assert str(perm("3421")) == "3421"
    big = Permutation((10, 3, 4, 2, 1, 5, 6, 7, 8, 9))
    assert str(big) == "10,3,4,2,1,5,6,7,8,9"
    assert Permutation.parse(str(big)) == big
    assert Permutation.parse("[3421]") == perm("3421")


def test_all_permutations_count():
    assert sum(1 for _ in all_permutations(5)) == math.factorial(5)
