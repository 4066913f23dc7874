"""Schröder subquotient: parking functions grouped by evaluation and recoils.

Each class key is the pair (evaluation vector, recoil composition of the
standardized word).  Sums over classes span a subalgebra on the F side
and a quotient on the G side; products and coproducts are computed by
expanding, operating, and regrouping, with the regrouping checked to be
constant on classes.
"""
from __future__ import annotations

from functools import lru_cache

from .fbasis import f_comul, f_mul
from .gbasis import g_mul
from .linear import Lin
from .words import (
    Word,
    descent_composition,
    evaluation,
    inverse_permutation,
    is_parking,
    parking_list,
    standardize,
)

Key = tuple[tuple[int, ...], tuple[int, ...]]


def hypo_key(w: Word) -> Key:
    """Class invariant of a word: evaluation plus recoil composition."""
    w = tuple(w)
    if not w:
        return ((), ())
    recoils = descent_composition(inverse_permutation(standardize(w)))
    return evaluation(w, len(w)), recoils


def key_of_word(a: Word) -> Key:
    a = tuple(a)
    if not is_parking(a):
        raise ValueError(f"not a parking function: {a}")
    return hypo_key(a)


def key_degree(key: Key) -> int:
    return sum(key[0])


@lru_cache(maxsize=None)
def classes(n: int) -> dict[Key, tuple[Word, ...]]:
    """Degree-n parking functions grouped by class key."""
    by_key: dict[Key, list[Word]] = {}
    for a in sorted(parking_list(n)):
        by_key.setdefault(hypo_key(a), []).append(a)
    return {k: tuple(v) for k, v in by_key.items()}


def schroder_dim(n: int) -> int:
    return len(classes(n))


def class_members(key: Key) -> tuple[Word, ...]:
    members = classes(key_degree(key)).get(key)
    if members is None:
        raise ValueError(f"empty class: {key}")
    return members


def representative(key: Key) -> Word:
    return class_members(key)[0]


def pq_expand(key: Key) -> Lin:
    """Class sum in the F-basis."""
    out = Lin()
    for a in class_members(key):
        out += Lin.basis(a)
    return out


def _regroup(x: Lin) -> Lin:
    """Rewrite a word-indexed element as a key-indexed one.

    Requires the coefficients to be constant on every class met, with
    the whole class present.
    """
    buckets: dict[Key, dict[Word, object]] = {}
    for a, c in x.items():
        buckets.setdefault(hypo_key(a), {})[a] = c
    out = Lin()
    for key, found in buckets.items():
        members = class_members(key)
        coeffs = set(found.values())
        if len(found) != len(members) or len(coeffs) != 1:
            raise ValueError(f"not constant on class {key}")
        out += Lin.basis(key, coeffs.pop())
    return out


def pq_product(k1: Key, k2: Key) -> Lin:
    """Product of class sums, regrouped into class sums."""
    return _regroup(f_mul(pq_expand(k1), pq_expand(k2)))


def pq_coproduct(key: Key) -> Lin:
    """Coproduct of a class sum, regrouped into pairs of class sums."""
    buckets: dict[tuple[Key, Key], dict[tuple[Word, Word], object]] = {}
    for (u, v), c in f_comul(pq_expand(key)).items():
        buckets.setdefault((hypo_key(u), hypo_key(v)), {})[(u, v)] = c
    out = Lin()
    for (ku, kv), found in buckets.items():
        size = len(class_members(ku)) * len(class_members(kv))
        coeffs = set(found.values())
        if len(found) != size or len(coeffs) != 1:
            raise ValueError(f"not constant on class pair {(ku, kv)}")
        out += Lin.basis((ku, kv), coeffs.pop())
    return out


def qq_product(k1: Key, k2: Key, rep1: Word | None = None, rep2: Word | None = None) -> Lin:
    """Quotient-side product: multiply representatives, project to keys."""
    a = representative(k1) if rep1 is None else tuple(rep1)
    b = representative(k2) if rep2 is None else tuple(rep2)
    return g_mul(Lin.basis(a), Lin.basis(b)).map_labels(hypo_key)
