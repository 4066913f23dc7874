"""Dual Hopf algebra of parking functions in the G-basis.

G_a is dual to F_a.  Multiplication is convolution of parkization
fibers, comultiplication cuts at breakpoints, and both admit slow
oracles obtained by dualizing the F-basis structure maps.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb

from .fbasis import _f_in_mult_basis, f_coproduct
from .linear import Lin, extend_bilinear, extend_linear, invert_unitriangular
from .words import (
    Word,
    breakpoints,
    connected_counts,
    connected_factorization,
    inverse_permutation,
    is_parking,
    mirror,
    nondecreasing_parking_functions,
    parking_list,
    parkize,
    shifted_shuffle,
    standardize,
)


def parkization_fiber(a: Word, m: int) -> list[Word]:
    """All words over {1..m} whose parkization is a.

    Parkization preserves the relative order pattern, so every fiber
    element is the image of a under a strictly increasing relabelling
    of its value set.
    """
    a = tuple(a)
    if not a:
        return [()] if m >= 0 else []
    values = sorted(set(a))
    out = []
    for chosen in combinations(range(1, m + 1), len(values)):
        relabel = dict(zip(values, chosen))
        w = tuple(relabel[x] for x in a)
        if parkize(w) == a:
            out.append(w)
    return sorted(out)


def convolution(a1: Word, a2: Word) -> list[Word]:
    """Parking words u.v with parkize(u) = a1 and parkize(v) = a2."""
    n = len(a1) + len(a2)
    out = []
    for u in parkization_fiber(a1, n):
        for v in parkization_fiber(a2, n):
            c = u + v
            if is_parking(c):
                out.append(c)
    return sorted(out)


def g_product(a1: Word, a2: Word) -> Lin:
    return lin_from_words(convolution(a1, a2))


def lin_from_words(words) -> Lin:
    out = Lin()
    for w in words:
        out += Lin.basis(w)
    return out


g_mul = extend_bilinear(g_product)


def g_product_by_duality(a1: Word, a2: Word) -> Lin:
    """Slow route: read the structure constants off the F-coproduct."""
    n = len(a1) + len(a2)
    out = Lin()
    for c in parking_list(n):
        coeff = f_coproduct(c).coeff((a1, a2))
        if coeff:
            out += Lin.basis(c, coeff)
    return out


def g_coproduct(a: Word) -> Lin:
    """Cut at breakpoints: letters <= b to the left, the rest shifted down."""
    a = tuple(a)
    out = Lin.basis(((), a)) + Lin.basis((a, ()))
    if not a:
        return Lin.basis(((), ()))
    for b in breakpoints(a):
        if b == len(a):
            continue
        left = tuple(x for x in a if x <= b)
        right = tuple(x - b for x in a if x > b)
        out += Lin.basis((left, right))
    return out


g_comul = extend_linear(g_coproduct)


@lru_cache(maxsize=None)
def _unshuffle_table(n: int) -> dict[Word, Lin]:
    """Slow coproduct: dualize the shifted-shuffle product degreewise."""
    table: dict[Word, Lin] = {a: Lin() for a in parking_list(n)}
    for k in range(n + 1):
        for b in parking_list(k):
            for c in parking_list(n - k):
                for w in shifted_shuffle(b, c):
                    table[w] += Lin.basis((b, c))
    return table


def g_coproduct_by_unshuffle(a: Word) -> Lin:
    return _unshuffle_table(len(a))[tuple(a)]


def g_counit(x: Lin) -> Fraction:
    return x.coeff(())


def g_antipode_lin(x: Lin) -> Lin:
    """Antipode via the defining convolution recursion."""
    out = Lin()
    for a, c in x.items():
        out += _g_antipode(tuple(a)).scale(c)
    return out


@lru_cache(maxsize=None)
def _g_antipode(a: Word) -> Lin:
    if not a:
        return Lin.basis(())
    out = Lin()
    for (u, v), c in g_coproduct(a).items():
        if len(u) == len(a):
            continue
        out -= g_mul(_g_antipode(u), Lin.basis(v)).scale(c)
    return out


def phi(sigma: Word) -> Lin:
    """Embedding of a permutation: sum of G_a over std(a) = sigma^{-1}."""
    sigma = tuple(sigma)
    target = inverse_permutation(sigma)
    out = Lin()
    for a in parking_list(len(sigma)):
        if standardize(a) == target:
            out += Lin.basis(a)
    return out


def g_mult_basis(x: Word) -> Lin:
    """Expand the multiplicative basis element indexed by x into G.

    Mirror x, factor into connected pieces, then multiply the mirrored
    factors back in reverse order.
    """
    a = mirror(x)
    factors = connected_factorization(a)
    out = Lin.basis(())
    for f in reversed(factors):
        out = g_mul(out, Lin.basis(mirror(f)))
    return out


@lru_cache(maxsize=None)
def _g_in_mult_basis(n: int) -> dict[Word, Lin]:
    labels = sorted(parking_list(n))
    return invert_unitriangular(labels, g_mult_basis)


def st_dual_bases(n: int) -> tuple[dict[Word, Lin], dict[Word, Lin]]:
    """Bases dual to the two multiplicative bases in degree n.

    Returns (S, T): S[b] expands in G the functional dual to the
    F-multiplicative basis, T[b] does the same in F for the G side.
    """
    inv_f = _f_in_mult_basis(n)
    inv_g = _g_in_mult_basis(n)
    labels = sorted(parking_list(n))
    s = {b: lin_sum_over(labels, lambda c: inv_f[c].coeff(b)) for b in labels}
    t = {b: lin_sum_over(labels, lambda c: inv_g[c].coeff(b)) for b in labels}
    return s, t


def lin_sum_over(labels, coeff_of) -> Lin:
    out = Lin()
    for c in labels:
        v = coeff_of(c)
        if v:
            out += Lin.basis(c, v)
    return out


def lie_generator_series(order: int) -> list[int]:
    """Coefficients 1..order of 1 - prod_n (1 - t^n)^{c_n}.

    The exponents c_n count connected parking functions; the result
    counts a free generating set degree by degree.
    """
    c = connected_counts(order)
    prod = [1] + [0] * order
    for n in range(1, order + 1):
        cn = c[n - 1]
        factor = [0] * (order + 1)
        for k in range(order // n + 1):
            factor[n * k] = (-1) ** k * comb(cn, k)
        new = [0] * (order + 1)
        for i, pi in enumerate(prod):
            if pi == 0:
                continue
            for j in range(order + 1 - i):
                if factor[j]:
                    new[i + j] += pi * factor[j]
        prod = new
    return [-prod[k] for k in range(1, order + 1)]


def eta_star(n: int) -> Lin:
    """Image of the degree-n complete function: sum of nondecreasing G_a."""
    return lin_from_words(nondecreasing_parking_functions(n))
