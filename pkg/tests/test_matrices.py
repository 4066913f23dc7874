"""Packed (0,1)-matrix realization."""
from __future__ import annotations

import pytest

from parkhopf import matrices, verify
from parkhopf.linear import Lin


def test_reading():
    m = ((0, 1, 1, 0), (1, 0, 0, 0), (0, 1, 0, 0))
    assert matrices.reading(m) == (2, 3, 1, 2)
    assert matrices.reading(()) == ()


def test_predicates():
    assert matrices.is_packed(((1, 0), (0, 1)))
    assert not matrices.is_packed(((0, 0), (1, 1)))
    assert matrices.is_word_matrix(((1, 0), (0, 1)))
    assert not matrices.is_word_matrix(((1, 1), (0, 1)))
    assert matrices.is_parking_matrix(((1, 1, 0), (0, 1, 0)))


def test_word_matrices_of_122():
    got = set(matrices.word_matrices((1, 2, 2)))
    assert got == {((1, 1, 0), (0, 1, 0)),
                   ((1, 0, 0), (0, 1, 0), (0, 1, 0))}


def test_word_matrices_width_bound():
    assert matrices.word_matrices((3, 1)) == []
    assert matrices.word_matrices((2, 2)) == [((0, 1), (0, 1))]
    assert matrices.word_matrices(()) == [()]


def test_word_matrices_roundtrip():
    assert verify.check_word_matrices(4)[0]


def test_augmented_shuffle_degree_one():
    p = ((1,),)
    got = matrices.augmented_shuffle(p, p)
    assert len(got) == 3
    readings = sorted(matrices.reading(m) for m in got)
    assert readings == [(1, 2), (1, 2), (2, 1)]


def test_matrix_parkize():
    assert matrices.matrix_parkize(((0, 1),)) == ((1,),)
    assert matrices.matrix_parkize(((0, 1), (0, 1))) == ((1,), (1,))
    stay = ((1, 1, 0), (0, 1, 0))
    assert matrices.matrix_parkize(stay) == stay
    assert verify.check_matrix_parkize(4)[0]


def test_product_matches_word_level():
    assert verify.check_matrix_product(3)[0]


def test_coproduct_matches_word_level():
    assert verify.check_matrix_coproduct(3)[0]


def test_coproduct_modes():
    m = ((1, 1, 0), (0, 1, 0))  # reads 122
    rows = matrices.mp_coproduct(m, mode="rows")
    cols = matrices.mp_coproduct(m, mode="columns")
    assert rows != cols
    assert ((), m) in [lab for lab, _ in rows.items()]
    with pytest.raises(ValueError):
        matrices.mp_coproduct(m, mode="diagonal")


def test_reading_classes():
    x = Lin.basis(((1, 1, 0), (0, 1, 0))) + Lin.basis(
        ((1, 0, 0), (0, 1, 0), (0, 1, 0)))
    assert matrices.reading_classes(x) == Lin.basis((1, 2, 2), 2)
