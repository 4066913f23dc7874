"""Dual basis: convolution product, breakpoint coproduct, dual bases."""
from __future__ import annotations

import pytest

from parkhopf import fbasis, gbasis, verify, words
from parkhopf.linear import Lin, lin_sum


def w(s):
    return tuple(int(ch) for ch in s)


def test_parkization_fiber():
    assert gbasis.parkization_fiber((1, 1, 2), 5) == [
        (1, 1, 2), (2, 2, 3), (3, 3, 4), (4, 4, 5)]
    assert gbasis.parkization_fiber((), 3) == [()]


@pytest.mark.parametrize("m", [2, 3, 4])
def test_fiber_matches_brute_force(m):
    for a in [(1,), (1, 1), (1, 2), (2, 1), (1, 1, 2)]:
        brute = []

        def rec(prefix):
            if len(prefix) == len(a):
                if words.parkize(prefix) == a:
                    brute.append(prefix)
                return
            for x in range(1, m + 1):
                rec(prefix + (x,))

        rec(())
        assert gbasis.parkization_fiber(a, m) == sorted(brute)


def test_product_example():
    got = gbasis.g_product(w("12"), w("11"))
    want = lin_sum(Lin.basis(w(s)) for s in
                   ("1211", "1222", "1233", "1311", "1322",
                    "1411", "1422", "2311", "2411", "3411"))
    assert got == want


def test_product_by_duality_agrees():
    assert verify.check_duality_adjoint(4)[0]


def test_coproduct_example():
    got = gbasis.g_coproduct(w("41252"))
    want = lin_sum(Lin.basis((w(a), w(b))) for a, b in
                   [("", "41252"), ("1", "3141"), ("122", "12"),
                    ("4122", "1"), ("41252", "")])
    assert got == want


def test_coproduct_counts_breakpoints():
    a = w("41252")
    assert words.breakpoints(a) == (1, 3, 4, 5)
    assert len(list(gbasis.g_coproduct(a).items())) == 5


def test_coproduct_by_unshuffle_agrees():
    assert verify.check_duality_unshuffle(4)[0]


def test_antipode_primitive():
    assert gbasis.g_antipode_lin(Lin.basis(w("11"))) == -Lin.basis(w("11"))


def test_antipode_axiom_small():
    for n in range(1, 4):
        for a in words.parking_list(n):
            out = Lin()
            for (u, v), c in gbasis.g_coproduct(a).items():
                out += gbasis.g_mul(gbasis.g_antipode_lin(Lin.basis(u)),
                                    Lin.basis(v)).scale(c)
            assert out == Lin(), a


def test_phi():
    assert gbasis.phi((1, 2)) == Lin.basis(w("11")) + Lin.basis(w("12"))
    assert gbasis.phi((2, 1)) == Lin.basis(w("21"))
    assert verify.check_phi_morphism(3)[0]


def test_classic_convolution():
    assert verify.check_classic_convolution(4)[0]


def test_mult_basis_mirrors():
    # reversal of 21 splits into two letters; reversal of 12 is connected
    assert gbasis.g_mult_basis((2, 1)) == gbasis.g_mul(
        Lin.basis((1,)), Lin.basis((1,)))
    assert gbasis.g_mult_basis((1, 2)) == Lin.basis((1, 2))


def test_st_dual_bases():
    assert verify.check_duality_st_bases(3)[0]
    assert verify.check_s_primitive(3)[0]


def test_lie_series():
    assert gbasis.lie_generator_series(6) == [1, 2, 9, 80, 901, 12564]


def test_eta_star():
    assert gbasis.eta_star(2) == Lin.basis(w("11")) + Lin.basis(w("12"))
    assert verify.check_eta_star(3)[0]


def test_ones_powers():
    assert verify.check_g_ones_power(4)[0]
