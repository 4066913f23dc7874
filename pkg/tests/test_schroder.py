"""Hypoplactic classes: keys, class sums, the quotient product."""
from __future__ import annotations

import pytest

from parkhopf import schroder, verify, words
from parkhopf.linear import Lin


def w(s):
    return tuple(int(ch) for ch in s)


def test_hypo_key_values():
    assert schroder.hypo_key(()) == ((), ())
    assert schroder.hypo_key(w("11")) == ((2, 0), (2,))
    assert schroder.hypo_key(w("12")) == ((1, 1), (2,))
    assert schroder.hypo_key(w("21")) == ((1, 1), (1, 1))


def test_key_of_word_rejects_non_parking():
    with pytest.raises(ValueError):
        schroder.key_of_word((1, 3))


def test_class_counts():
    assert [schroder.schroder_dim(n) for n in range(7)] == [
        1, 1, 3, 11, 45, 197, 903]


def test_classes_partition_words():
    for n in range(1, 5):
        members = [a for key in schroder.classes(n)
                   for a in schroder.class_members(key)]
        assert sorted(members) == sorted(words.parking_list(n))


def test_representative_is_lex_min():
    key = schroder.hypo_key(w("21"))
    assert schroder.representative(key) == w("21")
    assert tuple(schroder.class_members(schroder.hypo_key(w("12")))) == (
        w("12"),)


def test_pq_expand():
    key = schroder.hypo_key(w("21"))
    assert schroder.pq_expand(key) == Lin.basis(w("21"))


def test_pq_product_degree_one():
    k1 = schroder.hypo_key(w("1"))
    got = schroder.pq_product(k1, k1)
    want = (Lin.basis(schroder.hypo_key(w("12")))
            + Lin.basis(schroder.hypo_key(w("21"))))
    assert got == want


def test_pq_closure_and_coproduct():
    assert verify.check_schroder_closure(4)[0]
    t = schroder.pq_coproduct(schroder.hypo_key(w("11")))
    empty = schroder.hypo_key(())
    one = schroder.hypo_key(w("1"))
    full = schroder.hypo_key(w("11"))
    assert t == (Lin.basis((empty, full)) + Lin.basis((one, one))
                 + Lin.basis((full, empty)))


def test_quotient_well_defined():
    assert verify.check_schroder_quotient(3)[0]


def test_qq_product_projects_convolution():
    got = schroder.qq_product(schroder.hypo_key(w("1")),
                              schroder.hypo_key(w("1")))
    keys = {schroder.hypo_key(a) for a in [w("11"), w("12"), w("21")]}
    assert set(got.labels()) == keys
    assert all(c == 1 for _, c in got.items())


def test_key_degree():
    assert schroder.key_degree(schroder.hypo_key(w("1124"))) == 4
