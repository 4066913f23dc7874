"""Truncated power-series helpers over exact rationals."""

from __future__ import annotations

from fractions import Fraction

import pytest

from parkhopf.series import rational_series

F = Fraction


def test_pad_add_mul():
    ops = rational_series(4)
    assert ops.pad([F(1)]) == [F(1), F(0), F(0), F(0), F(0)]
    assert ops.add([F(1), F(2)], [F(0), F(3), F(4)])[:3] == [F(1), F(5), F(4)]
    # (1 + t)^2 = 1 + 2t + t^2, truncated at order 4.
    sq = ops.mul([F(1), F(1)], [F(1), F(1)])
    assert sq == [F(1), F(2), F(1), F(0), F(0)]


def test_pow_and_compose():
    ops = rational_series(5)
    one_plus_t = ops.pad([F(1), F(1)])
    assert ops.pow(one_plus_t, 3)[:4] == [F(1), F(3), F(3), F(1)]
    # f(t) = 1/(1-t) composed with g(t) = t^2 keeps only even exponents.
    geom = [F(1)] * 6
    comp = ops.compose(geom, [F(0), F(0), F(1)])
    assert comp == [F(1), F(0), F(1), F(0), F(1), F(0)]
    with pytest.raises(ValueError):
        ops.compose(geom, [F(1), F(1)])


def test_reciprocal_geometric():
    ops = rational_series(6)
    rec = ops.reciprocal([F(1), F(-1)])
    assert rec == [F(1)] * 7
    # reciprocal is a two-sided inverse under truncated multiplication
    assert ops.mul(rec, ops.pad([F(1), F(-1)])) == ops.pad([F(1)])
    with pytest.raises(ValueError):
        ops.reciprocal([F(2), F(1)])


def test_reversion_catalan():
    ops = rational_series(7)
    # The inverse of f = t - t^2 has coefficients g_k = Catalan(k-1).
    g = ops.reversion([F(0), F(1), F(-1)])
    assert g == [F(0), F(1), F(1), F(2), F(5), F(14), F(42), F(132)]
    # Round trip: f(g(t)) = t.
    assert ops.compose(ops.pad([F(0), F(1), F(-1)]), g) == ops.pad([F(0), F(1)])
    with pytest.raises(ValueError):
        ops.reversion([F(0), F(2)])


def test_reversion_moebius():
    ops = rational_series(6)
    # t/(1-t) and t/(1+t) are mutually inverse.
    f = [F(0)] + [F(1)] * 6
    g = ops.reversion(f)
    assert g == [F(0), F(1), F(-1), F(1), F(-1), F(1), F(-1)]
