"""Parking-function combinatorics: parkization, primes, orders, counts."""
from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, strategies as st

from parkhopf import words

random_word = st.lists(st.integers(min_value=1, max_value=9),
                       min_size=0, max_size=7).map(tuple)


def test_is_parking():
    assert words.is_parking(())
    assert words.is_parking((1, 1, 2))
    assert words.is_parking((3, 1, 3, 2))
    assert not words.is_parking((2, 2))
    assert not words.is_parking((1, 3, 3))


def test_parkize_example():
    assert words.parkize((3, 5, 1, 1, 11, 8, 8, 2)) == (3, 5, 1, 1, 8, 6, 6, 2)
    assert words.parkize(()) == ()
    assert words.parkize((7,)) == (1,)
    assert words.parkize((2, 2, 5)) == (1, 1, 3)


@given(random_word)
def test_parkize_idempotent(w):
    p = words.parkize(w)
    assert words.is_parking(p)
    assert words.parkize(p) == p
    if words.is_parking(w):
        assert p == w


@given(random_word)
def test_parkize_preserves_pattern(w):
    p = words.parkize(w)
    for i in range(len(w)):
        for j in range(len(w)):
            assert (w[i] < w[j]) == (p[i] < p[j])


def test_standardize():
    assert words.standardize((3, 1, 3, 2)) == (3, 1, 4, 2)
    assert words.standardize((1, 1)) == (1, 2)
    assert words.inverse_permutation((3, 1, 4, 2)) == (2, 4, 1, 3)


def test_shifted_shuffle_counts():
    u, v = (1, 2), (1, 1)
    result = words.shifted_shuffle(u, v)
    assert len(result) == comb(4, 2)
    assert len(set(result)) == len(result)
    assert all(words.is_parking(w) for w in result)


def test_breakpoints_and_primes():
    assert words.breakpoints((4, 1, 2, 5, 2)) == (1, 3, 4, 5)
    assert words.breakpoints((1, 1)) == (2,)
    assert words.is_prime((1, 1))
    assert not words.is_prime((1, 2))
    assert words.prime_type((4, 1, 2, 5, 2)) == (1, 2, 1, 1)
    with pytest.raises(ValueError):
        words.prime_type((2, 2))


def test_connected_factorization():
    assert words.connected_factorization((1, 1, 3)) == ((1, 1), (1,))
    assert words.connected_factorization((1, 2, 1)) == ((1, 2, 1),)
    assert words.is_connected((1, 2, 1))
    assert not words.is_connected((1, 2, 3))


def test_descent_composition():
    assert words.descent_composition((3, 1, 3, 2)) == (1, 2, 1)
    assert words.descent_composition((1, 1, 2)) == (3,)


def test_evaluation():
    assert words.evaluation((1, 1, 3), 3) == (2, 0, 1)
    assert words.word_of_evaluation((2, 0, 1)) == (1, 1, 3)
    assert words.evaluation_composition((1, 1, 3)) == (2, 1)


def test_successors_and_closure():
    assert words.successors((1, 1, 3, 3, 4, 6)) == (
        (1, 1, 1, 1, 4, 6), (1, 1, 3, 3, 3, 6), (1, 1, 3, 3, 4, 4))
    assert words.successor_closure((1, 1, 3)) == {(1, 1, 3), (1, 1, 1)}
    assert words.order_leq((1, 2, 3), (1, 1, 3))
    assert not words.order_leq((1, 1, 3), (1, 2, 3))
    with pytest.raises(ValueError):
        words.successors((2, 1))


def test_noncrossing_bijection():
    assert words.word_of_nc(((1, 3), (2,), (4, 5))) == (1, 1, 2, 4, 4)
    got = {tuple(sorted(b)) for b in words.nc_of_parking((4, 2, 1, 4, 1))}
    assert got == {(1, 3), (2,), (4, 5)}
    assert words.is_noncrossing(((1, 3), (2, 4))) is False


def test_distinct_permutations():
    perms = list(words.distinct_permutations((1, 1, 2)))
    assert sorted(perms) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]


def test_compositions_partitions():
    assert sum(1 for _ in words.compositions(5)) == 16
    assert list(words.partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1),
                                         (1, 1, 1, 1)]
    assert words.multinomial(4, (2, 2)) == 6
    assert words.partition_of((1, 3, 2)) == (3, 2, 1)


def test_counts_closed_forms():
    assert [words.pf_count(n) for n in range(8)] == [
        1, 1, 3, 16, 125, 1296, 16807, 262144]
    assert [words.ppf_count(n) for n in range(1, 8)] == [
        1, 1, 4, 27, 256, 3125, 46656]
    assert [words.catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]
    assert [words.schroder_count(n) for n in range(7)] == [
        1, 1, 3, 11, 45, 197, 903]
    assert words.connected_counts(6) == [1, 2, 11, 92, 1014, 13795]


def test_enumeration_kinds():
    assert sorted(words.enumerate_class("prime", 2)) == [(1, 1)]
    assert sorted(words.enumerate_class("connected", 2)) == [(1, 1), (2, 1)]
    assert words.class_count("nondecreasing", 4) == 14
    with pytest.raises(ValueError):
        words.class_count("bogus", 3)
    with pytest.raises(ValueError):
        words.space_dimension("bogus", 3)


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_matches_counts(n):
    for kind in words.ENUM_KINDS:
        assert sum(1 for _ in words.enumerate_class(kind, n)) == \
            words.class_count(kind, n)


def test_mirror():
    assert words.mirror((1, 2, 2)) == (2, 2, 1)
    assert words.mirror(()) == ()
    assert words.is_anti_connected((1, 2, 1))
