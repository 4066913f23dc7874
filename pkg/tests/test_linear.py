"""Free-module layer: exact arithmetic, tensors, triangular inversion."""
from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from parkhopf.linear import (Lin, dual_pairing, extend_bilinear,
                             extend_linear, graded_dimension,
                             invert_unitriangular, lin_sum, sorted_items,
                             tensor, tensor_map, tensor_mul)

labels = st.tuples(st.integers(min_value=1, max_value=3),
                   st.integers(min_value=1, max_value=3))
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
lins = st.dictionaries(labels, coeffs, max_size=4).map(Lin)
scalars = coeffs


def test_basic_arithmetic():
    x = Lin.basis((1, 2)) + Lin.basis((1, 1), 2)
    assert x.coeff((1, 1)) == 2
    assert x.coeff((9,)) == 0
    assert (x - x) == Lin()
    assert not (x - x)
    assert x.scale(Fraction(1, 2)).coeff((1, 1)) == 1
    assert set(x.labels()) == {(1, 2), (1, 1)}


def test_zero_terms_dropped():
    x = Lin.basis((1,)) - Lin.basis((1,))
    assert list(x.items()) == []
    assert Lin.basis((1,), 0) == Lin()


@given(lins, lins, lins)
def test_module_addition_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert x + Lin() == x
    assert x - x == Lin()


@given(lins, lins, scalars, scalars)
def test_module_scaling_axioms(x, y, a, b):
    assert (x + y).scale(a) == x.scale(a) + y.scale(a)
    assert x.scale(a + b) == x.scale(a) + x.scale(b)
    assert x.scale(a).scale(b) == x.scale(a * b)
    assert x.scale(1) == x


def test_sorted_items_graded_lex():
    x = Lin.basis((2,)) + Lin.basis((1, 1)) + Lin.basis((1,))
    assert [lab for lab, _ in sorted_items(x)] == [(1,), (2,), (1, 1)]


def test_tensor_and_maps():
    x, y = Lin.basis((1,)), Lin.basis((2,)) + Lin.basis((3,), 2)
    t = tensor(x, y)
    assert t.coeff(((1,), (3,))) == 2
    doubler = lambda a: Lin.basis(a, 2)
    assert tensor_map(doubler, doubler)(t).coeff(((1,), (2,))) == 4


def test_extend_linear_bilinear():
    dup = extend_linear(lambda a: Lin.basis(a + a))
    assert dup(Lin.basis((1,), 3)).coeff((1, 1)) == 3
    cat = extend_bilinear(lambda a, b: Lin.basis(a + b))
    got = cat(Lin.basis((1,)) + Lin.basis((2,)), Lin.basis((9,), 2))
    assert got == Lin.basis((1, 9), 2) + Lin.basis((2, 9), 2)


def test_tensor_mul():
    cat = tensor_mul(lambda a, b: Lin.basis(a + b))
    t1 = Lin.basis(((1,), (2,)))
    t2 = Lin.basis(((3,), (4,)), 2)
    assert cat(t1, t2) == Lin.basis(((1, 3), (2, 4)), 2)


def test_lin_sum():
    assert lin_sum(Lin.basis((k,)) for k in range(3)) == (
        Lin.basis((0,)) + Lin.basis((1,)) + Lin.basis((2,)))


def test_invert_unitriangular():
    expand = {
        (1,): Lin.basis((1,)),
        (2,): Lin.basis((2,)) + Lin.basis((1,)),
    }
    inv = invert_unitriangular(sorted(expand), lambda a: expand[a])
    assert inv[(2,)] == Lin.basis((2,)) - Lin.basis((1,))
    assert inv[(1,)] == Lin.basis((1,))


def test_invert_unitriangular_rejects_full_matrix():
    expand = {
        (1,): Lin.basis((1,)) + Lin.basis((2,)),
        (2,): Lin.basis((2,)) + Lin.basis((1,)),
    }
    with pytest.raises(ValueError):
        invert_unitriangular(sorted(expand), lambda a: expand[a])


def test_graded_dimension():
    vs = [Lin.basis((1,)) + Lin.basis((2,)),
          Lin.basis((2,)) + Lin.basis((3,)),
          Lin.basis((1,)) + Lin.basis((3,), 2),
          Lin.basis((1,)) - Lin.basis((3,))]
    assert graded_dimension(vs) == 3


def test_dual_pairing():
    x = Lin.basis((1,), 2) + Lin.basis((2,), 3)
    y = Lin.basis((1,), Fraction(1, 2)) - Lin.basis((3,))
    assert dual_pairing(x, y) == 1
