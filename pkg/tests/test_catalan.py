"""Nondecreasing subalgebra, its dual, ribbons, and the generator series."""
from __future__ import annotations

import pytest

from parkhopf import catalan, verify, words
from parkhopf.linear import Lin, lin_sum


def w(s):
    return tuple(int(ch) for ch in s)


def lw(*ss):
    return lin_sum(Lin.basis(w(s)) for s in ss)


def test_label_check():
    for bad in [(1, 3), (2, 1), (2,)]:
        with pytest.raises(ValueError):
            catalan.p_product(bad, (1,))


def test_p_expand():
    assert catalan.p_expand(w("112")) == lw("112", "121", "211")


def test_p_product_is_shifted_concat():
    assert catalan.p_product(w("11"), w("12")) == w("1134")


def test_p_coproduct_example():
    got = catalan.p_coproduct(w("1124"))
    want = Lin()
    for a, b, c in [("", "1124", 1), ("1", "112", 1), ("1", "113", 1),
                    ("1", "123", 1), ("11", "12", 1), ("12", "11", 1),
                    ("12", "12", 2), ("112", "1", 1), ("113", "1", 1),
                    ("123", "1", 1), ("1124", "", 1)]:
        want += Lin.basis((w(a), w(b)), c)
    assert got == want


def test_p_embedding():
    assert verify.check_p_expand_embedding(4)[0]


def test_m_product_example():
    got = catalan.m_product(w("12"), w("11"))
    assert got == lw("1112", "1113", "1114", "1123", "1124",
                     "1134", "1222", "1223", "1224", "1233")


def test_m_product_commutative_associative():
    assert verify.check_m_commutative_associative(4)[0]


def test_m_coproduct_deconcatenates():
    got = catalan.m_coproduct(w("113"))
    want = (Lin.basis(((), w("113"))) + Lin.basis((w("11"), w("1")))
            + Lin.basis((w("113"), ())))
    assert got == want


def test_m_polynomial():
    poly = catalan.m_polynomial(w("112"), 5)
    assert poly == {(2, 1, 0, 0, 0): 1, (0, 2, 1, 0, 0): 1,
                    (0, 0, 2, 1, 0): 1, (0, 0, 0, 2, 1): 1}
    with pytest.raises(ValueError):
        catalan.m_polynomial(w("123"), 2)
    assert verify.check_m_polynomial_realization(4)[0]


def test_gamma():
    assert catalan.gamma((2, 1)) == lw("112", "113")
    assert catalan.gamma((1, 2)) == lw("122")
    assert verify.check_gamma_morphism(3)[0]


def test_evaluation_vs_factor_composition():
    # the two candidate composition statistics genuinely differ
    assert catalan.ev_composition(w("113")) == (2, 1)
    assert catalan.c_of_pi(w("113")) == (2, 1)
    assert catalan.ev_composition(w("112")) == (2, 1)
    assert catalan.c_of_pi(w("112")) == (3,)


def test_ribbon_transition():
    assert catalan.p_to_r(w("113")) == lw("113", "111")
    r = catalan.r_to_p(w("113"))
    assert r == Lin.basis(w("113")) - Lin.basis(w("111"))
    assert verify.check_ribbon_triangularity(5)[0]


def test_ribbon_product_reference_route():
    got = catalan.ribbon_product_via_p(w("1"), w("12"))
    assert got == lw("123", "113")
    assert catalan.ribbon_mul(Lin.basis(w("1")), Lin.basis(w("12"))) == got


def test_ribbon_two_term_law_differs():
    law = catalan.ribbon_product(w("1"), w("12"))
    assert law == lw("123", "112")
    ok, detail = verify.check_ribbon_law(3)
    assert not ok and "(1,)" in detail


def test_ribbon_junction_law_agrees():
    assert verify.check_ribbon_glued_law(4)[0]
    got = catalan.ribbon_product_glued(w("11224"), w("113"))
    assert got == lw("11224668", "11224448")


def test_ribbon_printed_example():
    got = catalan.ribbon_product(w("11224"), w("113"))
    assert got == lw("11224668", "11224446")


def test_g_series_small_degrees():
    g = catalan.g_series(3)
    assert g[1] == Lin.basis((1,))
    assert g[2] == Lin.basis((2,)) + Lin.basis((1, 1))
    assert g[3] == (Lin.basis((3,)) + Lin.basis((1, 2))
                    + Lin.basis((2, 1), 2) + Lin.basis((1, 1, 1)))


def test_g_series_identities():
    assert verify.check_g_series(4)[0]
    for n in range(1, 6):
        assert catalan.g_weighted_coefficient_sum(n) == (n + 1) ** (n - 1)


def test_g_routes_report():
    ok, report = verify.report_g_routes(4)
    assert ok
    assert "n=3: factor-type route != g_n, evaluation route == g_n" in report
