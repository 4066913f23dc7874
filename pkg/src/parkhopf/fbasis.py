"""The Hopf algebra of parking functions on its fundamental (F) basis.

Labels are parking functions; the product is the shifted shuffle, the
coproduct cuts the word at every position and parkizes both parts, and the
antipode has a closed block-factorization formula (with the convolution
recursion kept alongside as an independent oracle).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .linear import Lin, extend_bilinear, extend_linear, invert_unitriangular, tensor
from .words import (
    Composition,
    Word,
    compositions,
    connected_factorization,
    descent_composition,
    is_parking,
    parking_functions,
    parking_list,
    parkize,
    prime_parking_functions,
    prime_type,
    shifted_shuffle,
)


def _check_parking(a: Word) -> Word:
    a = tuple(a)
    if not is_parking(a):
        raise ValueError(f"not a parking function: {a}")
    return a


def f_product(a: Word, b: Word) -> Lin:
    """F_a F_b = sum of F over the shifted shuffle of a and b."""
    a, b = _check_parking(a), _check_parking(b)
    out = Lin()
    for c in shifted_shuffle(a, b):
        out += Lin.basis(c)
    return out


f_mul = extend_bilinear(f_product)


def f_coproduct(a: Word) -> Lin:
    """Cut at every position; both parts parkized; multiplicities collected."""
    a = _check_parking(a)
    out = Lin()
    for k in range(len(a) + 1):
        out += Lin.basis((parkize(a[:k]), parkize(a[k:])))
    return out


f_comul = extend_linear(f_coproduct)


def counit(x: Lin) -> Fraction:
    return x.coeff(())


def _block_factorizations(a: Word):
    """All ways to cut a into consecutive nonempty blocks."""
    n = len(a)
    for cuts in range(1 << max(n - 1, 0)):
        points = [0] + [i for i in range(1, n) if cuts >> (i - 1) & 1] + [n]
        yield [a[lo:hi] for lo, hi in zip(points, points[1:])]


def f_antipode(a: Word) -> Lin:
    """Closed formula: alternating sum of products over block factorizations."""
    a = _check_parking(a)
    if not a:
        return Lin.basis(())
    out = Lin()
    for blocks in _block_factorizations(a):
        term = Lin.basis(())
        for block in blocks:
            term = f_mul(term, Lin.basis(parkize(block)))
        out += term.scale(-1 if len(blocks) % 2 else 1)
    return out


@lru_cache(maxsize=None)
def f_antipode_by_recursion(a: Word) -> Lin:
    """Oracle: unwind the convolution identity m(S(x)id)delta = unit-counit."""
    a = _check_parking(a)
    if not a:
        return Lin.basis(())
    out = Lin()
    for k in range(len(a)):
        out -= f_mul(f_antipode_by_recursion(parkize(a[:k])),
                     Lin.basis(parkize(a[k:])))
    return out


f_antipode_lin = extend_linear(f_antipode)


# ---------------------------------------------------------------------------
# the multiplicative basis indexed by maximal connected factorizations

def f_mult_basis(a: Word) -> Lin:
    """Product of the F's of the maximal connected factors of a."""
    a = _check_parking(a)
    out = Lin.basis(())
    for factor in connected_factorization(a):
        out = f_mul(out, Lin.basis(factor))
    return out


@lru_cache(maxsize=None)
def _f_in_mult_basis(n: int) -> dict[Word, Lin]:
    labels = sorted(parking_list(n))
    return invert_unitriangular(labels, f_mult_basis)


def connected_decomposition(x: Lin) -> Lin:
    """Rewrite x as a polynomial in the connected generators.

    Output labels are tuples of connected parking functions, one per
    generator factor of the monomial.
    """
    out = Lin()
    for a, c in x.items():
        row = _f_in_mult_basis(len(a))[a]
        out += row.map_labels(connected_factorization).scale(c)
    return out


# ---------------------------------------------------------------------------
# sums over enumerated classes

def v_element(i: Composition) -> Lin:
    """Product of the prime-class sums, one factor per part."""
    out = Lin.basis(())
    for part in i:
        out = f_mul(out, v_atom(part))
    return out


@lru_cache(maxsize=None)
def v_atom(n: int) -> Lin:
    out = Lin()
    for a in prime_parking_functions(n):
        out += Lin.basis(a)
    return out


def v_element_by_type(i: Composition) -> Lin:
    """Oracle route: sum F_a over parking functions of type i."""
    i = tuple(i)
    out = Lin()
    for a in parking_functions(sum(i)):
        if prime_type(a) == i:
            out += Lin.basis(a)
    return out


def pf_sum(n: int) -> Lin:
    out = Lin()
    for a in parking_functions(n):
        out += Lin.basis(a)
    return out


def ppf_inclusion_exclusion(n: int) -> Lin:
    """Prime-class sum recovered from full-class sums by sign inversion."""
    out = Lin()
    for i in compositions(n):
        term = Lin.basis(())
        for part in i:
            term = f_mul(term, pf_sum(part))
        out += term.scale(-1 if len(i) % 2 == 0 else 1)
    return out


def eta(x: Lin) -> Lin:
    """Project to quasi-symmetric functions: F_a -> fundamental F of C(a)."""
    out = Lin()
    for a, c in x.items():
        label = descent_composition(a) if a else ()
        out += Lin.basis(label, c)
    return out


def j_embed(n: int) -> Lin:
    """Image of the degree-n complete generator: F over the all-ones word."""
    return Lin.basis((1,) * n)
