"""Catalan subquotient: nondecreasing parking functions.

P-basis elements sit inside the parking-function algebra as sums over
rearrangement classes; the M-basis spans the dual.  Ribbon elements
refine the P-basis along the successor order, and the g-series packages
the dual multiplication into noncommutative symmetric functions.
"""
from __future__ import annotations

from collections import defaultdict
from functools import lru_cache

from .gbasis import convolution, parkization_fiber
from .linear import Lin, extend_bilinear, extend_linear, invert_unitriangular
from .symfun import ns_product
from .words import (
    Composition,
    Word,
    connected_factorization,
    distinct_permutations,
    evaluation,
    evaluation_composition,
    is_catalan_word,
    multinomial,
    nondecreasing_parking_functions,
    parkize,
    shifted_concat,
    successor_closure,
    word_of_evaluation,
)


def _check_label(pi: Word) -> Word:
    pi = tuple(pi)
    if not is_catalan_word(pi):
        raise ValueError(f"not a Catalan label: {pi}")
    return pi


def p_expand(pi: Word) -> Lin:
    """P element as a sum of F terms: all rearrangements of the label."""
    out = Lin()
    for w in distinct_permutations(_check_label(pi)):
        out += Lin.basis(w)
    return out


def p_product(p1: Word, p2: Word) -> Word:
    """Shifted concatenation of labels: the P-basis is multiplicative."""
    return shifted_concat(_check_label(p1), _check_label(p2))


def p_mul(x: Lin, y: Lin) -> Lin:
    return extend_bilinear(lambda a, b: Lin.basis(p_product(a, b)))(x, y)


def p_coproduct(pi: Word) -> Lin:
    """Split the multiset of letters in all ways, parkizing both parts."""
    pi = _check_label(pi)
    values = sorted(set(pi))
    mult = [pi.count(v) for v in values]
    out = Lin()
    for pick in _sub_multisets(mult):
        left = tuple(v for v, k in zip(values, pick) for _ in range(k))
        right = tuple(
            v for v, k, m in zip(values, pick, mult) for _ in range(m - k)
        )
        out += Lin.basis((parkize(left), parkize(right)))
    return out


def _sub_multisets(mult):
    if not mult:
        yield ()
        return
    for rest in _sub_multisets(mult[1:]):
        for k in range(mult[0] + 1):
            yield (k,) + rest


p_comul = extend_linear(p_coproduct)


def m_product(p1: Word, p2: Word) -> Lin:
    """Dual product: convolution of fibers, sorted back to class labels."""
    p1, p2 = _check_label(p1), _check_label(p2)
    out = Lin()
    for c in convolution(p1, p2):
        out += Lin.basis(tuple(sorted(c)))
    return out


m_mul = extend_bilinear(m_product)


def m_coproduct(pi: Word) -> Lin:
    """Deconcatenate at the points where the label splits."""
    pi = _check_label(pi)
    n = len(pi)
    out = Lin()
    for k in range(n + 1):
        if 0 < k < n and pi[k] != k + 1:
            continue
        out += Lin.basis((pi[:k], tuple(x - k for x in pi[k:])))
    return out


m_comul = extend_linear(m_coproduct)


def m_polynomial(pi: Word, k: int) -> dict[tuple[int, ...], int]:
    """Monomial expansion of the M element in k commuting variables.

    Keys are exponent vectors of length k; every nondecreasing word in
    the parkization fiber over {1..k} contributes one monomial.
    """
    pi = _check_label(pi)
    if k < len(set(pi)):
        raise ValueError("insufficient variables")
    out: dict[tuple[int, ...], int] = {}
    for w in parkization_fiber(pi, k):
        expo = [0] * k
        for x in w:
            expo[x - 1] += 1
        out[tuple(expo)] = out.get(tuple(expo), 0) + 1
    return out


def c_of_pi(pi: Word) -> Composition:
    """Lengths of the connected factors of the label."""
    return tuple(len(f) for f in connected_factorization(_check_label(pi)))


def ev_composition(pi: Word) -> Composition:
    return evaluation_composition(_check_label(pi))


def gamma(i: Composition) -> Lin:
    """Sum of the M elements whose evaluation composition is i."""
    n = sum(i)
    out = Lin()
    for pi in nondecreasing_parking_functions(n):
        if evaluation_composition(pi) == tuple(i):
            out += Lin.basis(pi)
    return out


# ---------------------------------------------------------------------------
# ribbon elements

def p_to_r(pi: Word) -> Lin:
    """P in the R-basis: sum over the successor closure of the label."""
    out = Lin()
    for rho in successor_closure(_check_label(pi)):
        out += Lin.basis(rho)
    return out


@lru_cache(maxsize=None)
def _r_in_p(n: int) -> dict[Word, Lin]:
    labels = sorted(nondecreasing_parking_functions(n))
    return invert_unitriangular(labels, p_to_r)


def r_to_p(pi: Word) -> Lin:
    """R in the P-basis, by inverting the closure sums degreewise."""
    pi = _check_label(pi)
    return _r_in_p(len(pi))[pi]


def ribbon_product(p1: Word, p2: Word) -> Lin:
    """Two-term ribbon multiplication: plain and raised concatenation.

    The raised term shifts the second label so its letters start at the
    maximum of the first.
    """
    p1, p2 = _check_label(p1), _check_label(p2)
    if not p1 or not p2:
        return Lin.basis(p1 + p2)
    plain = shifted_concat(p1, p2)
    raised = p1 + tuple(x + max(p1) - 1 for x in p2)
    return Lin.basis(plain) + Lin.basis(raised)


def ribbon_product_glued(p1: Word, p2: Word) -> Lin:
    """Two-term ribbon multiplication with the raised term built by
    merging the evaluation blocks that meet at the junction."""
    p1, p2 = _check_label(p1), _check_label(p2)
    if not p1 or not p2:
        return Lin.basis(p1 + p2)
    plain = shifted_concat(p1, p2)
    ev = list(evaluation(plain, len(plain)))
    junction = len(p1) + p2[0]
    ev[max(p1) - 1] += ev[junction - 1]
    ev[junction - 1] = 0
    return Lin.basis(plain) + Lin.basis(word_of_evaluation(ev))


def ribbon_product_via_p(p1: Word, p2: Word) -> Lin:
    """Reference ribbon multiplication: expand in P, multiply, reexpand."""
    prod = p_mul(r_to_p(p1), r_to_p(p2))
    out = Lin()
    for pi, c in prod.items():
        out += p_to_r(pi).scale(c)
    return out


ribbon_mul = extend_bilinear(ribbon_product_via_p)


# ---------------------------------------------------------------------------
# noncommutative characteristics

def ch_to_nsym(x: Lin) -> Lin:
    """Send each M label to the complete generator word of its factor type."""
    return x.map_labels(c_of_pi)


def ch_to_nsym_ev(x: Lin) -> Lin:
    """Variant statistic: evaluation composition instead of factor type."""
    return x.map_labels(evaluation_composition)


def g_series(order: int) -> list[Lin]:
    """Deg(0..order) coefficients of the fixed point g = sum_n S_n g^n.

    Each coefficient is an integer combination of complete-generator
    words S^I with sum(I) = degree.
    """
    g: list[Lin] = [Lin.basis(())]
    for m in range(1, order + 1):
        total = Lin()
        for n in range(1, m + 1):
            total += ns_product(Lin.basis((n,)), _graded_power(g, n, m - n))
        g.append(total)
    return g


def _graded_power(g: list[Lin], k: int, d: int) -> Lin:
    """Sum of all k-fold products of g-coefficients with total degree d."""
    cur: dict[int, Lin] = {0: Lin.basis(())}
    for _ in range(k):
        nxt: dict[int, Lin] = defaultdict(Lin)
        for d0, lin0 in cur.items():
            for j in range(d - d0 + 1):
                term = ns_product(lin0, g[j])
                if term:
                    nxt[d0 + j] += term
        cur = nxt
    return cur.get(d, Lin())


def g_weighted_coefficient_sum(n: int):
    """Sum of g_n coefficients weighted by multinomials of their labels."""
    total = 0
    for i, c in g_series(n)[n].items():
        total += multinomial(n, i) * c
    return total


def factor_type_sum(n: int) -> Lin:
    """Sum over degree-n labels of the factor-type generator word."""
    out = Lin()
    for pi in nondecreasing_parking_functions(n):
        out += Lin.basis(c_of_pi(pi))
    return out


def evaluation_type_sum(n: int) -> Lin:
    """Sum over degree-n labels of the evaluation-composition word."""
    out = Lin()
    for pi in nondecreasing_parking_functions(n):
        out += Lin.basis(evaluation_composition(pi))
    return out
