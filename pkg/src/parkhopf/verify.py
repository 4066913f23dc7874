"""Verification suites: worked-example replays, Hopf axioms, dualities,
count tables, and cross-route equivalence checks, plus the thirteen
acceptance gates built from them.

Every check returns (ok, detail) and never raises on mathematical
failure; the detail carries the first counterexample found.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, combinations, permutations

from . import catalan, fbasis, gbasis, matrices, schroder, symfun, words
from .linear import Lin, lin_sum, tensor, tensor_map, tensor_mul

OK = (True, "ok")


def _w(s: str) -> tuple[int, ...]:
    return tuple(int(ch) for ch in s)


def _flin(*ws: str) -> Lin:
    return lin_sum(Lin.basis(_w(s)) for s in ws)


def _tens(*pairs) -> Lin:
    out = Lin()
    for u, v, *c in pairs:
        out += Lin.basis((_w(u), _w(v)), c[0] if c else 1)
    return out


def _fail(msg: str) -> tuple[bool, str]:
    return False, msg


def _diff(tag: str, got, want) -> tuple[bool, str]:
    if got == want:
        return OK
    return _fail(f"{tag}: got {got!r}, want {want!r}")


def _pf_upto(d: int):
    for n in range(1, d + 1):
        for a in sorted(words.parking_list(n)):
            yield a


def _pf_pairs(total: int):
    for na in range(1, total):
        for nb in range(1, total - na + 1):
            for a in sorted(words.parking_list(na)):
                for b in sorted(words.parking_list(nb)):
                    yield a, b


def _catalan_labels(n: int):
    return sorted(words.nondecreasing_parking_functions(n))


# ---------------------------------------------------------------------------
# worked-example replays

def check_example_f_product(d: int = 0) -> tuple[bool, str]:
    got = fbasis.f_product((1, 2), (1, 1))
    want = _flin("1233", "1323", "1332", "3123", "3132", "3312")
    return _diff("F_12 F_11", got, want)


def check_example_f_coproduct(d: int = 0) -> tuple[bool, str]:
    got = fbasis.f_coproduct((3, 1, 3, 2))
    want = _tens(("", "3132"), ("1", "132"), ("21", "21"), ("212", "1"),
                 ("3132", ""))
    return _diff("coproduct of F_3132", got, want)


def check_example_f_antipode(d: int = 0) -> tuple[bool, str]:
    got = fbasis.f_antipode((1, 2, 2))
    want = (_flin("212", "221") - _flin("213", "231", "321"))
    return _diff("antipode of F_122", got, want)


def check_example_parkization(d: int = 0) -> tuple[bool, str]:
    got = words.parkize((3, 5, 1, 1, 11, 8, 8, 2))
    return _diff("parkization", got, (3, 5, 1, 1, 8, 6, 6, 2))


def check_example_g_product(d: int = 0) -> tuple[bool, str]:
    got = gbasis.g_product((1, 2), (1, 1))
    want = _flin("1211", "1222", "1233", "1311", "1322",
                 "1411", "1422", "2311", "2411", "3411")
    return _diff("G_12 G_11", got, want)


def check_example_g_coproduct(d: int = 0) -> tuple[bool, str]:
    a = (4, 1, 2, 5, 2)
    if words.breakpoints(a) != (1, 3, 4, 5):
        return _fail(f"breakpoints of {a} misreported")
    got = gbasis.g_coproduct(a)
    want = _tens(("", "41252"), ("1", "3141"), ("122", "12"),
                 ("4122", "1"), ("41252", ""))
    return _diff("coproduct of G_41252", got, want)


def check_example_nc_bijection(d: int = 0) -> tuple[bool, str]:
    blocks = ((1, 3), (2,), (4, 5))
    if words.word_of_nc(blocks) != (1, 1, 2, 4, 4):
        return _fail("blocks 13|2|45 do not map to 11244")
    got = tuple(sorted(tuple(sorted(b)) for b in words.nc_of_parking((4, 2, 1, 4, 1))))
    return _diff("non-crossing partition of 42141", got, blocks)


def check_example_p_coproduct(d: int = 0) -> tuple[bool, str]:
    got = catalan.p_coproduct((1, 1, 2, 4))
    want = _tens(("", "1124"), ("1", "112"), ("1", "113"), ("1", "123"),
                 ("11", "12"), ("12", "11"), ("12", "12", 2),
                 ("112", "1"), ("113", "1"), ("123", "1"), ("1124", ""))
    return _diff("coproduct of the class of 1124", got, want)


def check_example_m_product(d: int = 0) -> tuple[bool, str]:
    got = catalan.m_product((1, 2), (1, 1))
    want = _flin("1112", "1113", "1114", "1123", "1124",
                 "1134", "1222", "1223", "1224", "1233")
    return _diff("M_12 M_11", got, want)


def check_example_m_polynomials(d: int = 0) -> tuple[bool, str]:
    k = 5

    def mono(*pairs) -> dict[tuple[int, ...], int]:
        out = {}
        for expo in pairs:
            out[tuple(expo)] = out.get(tuple(expo), 0) + 1
        return out

    def e(**kw) -> tuple[int, ...]:
        v = [0] * k
        for var, p in kw.items():
            v[int(var[1:]) - 1] += p
        return tuple(v)

    cases = {
        (1, 1, 1): mono(*(e(**{f"x{i}": 3}) for i in range(1, k + 1))),
        (1, 1, 2): mono(*(
            tuple(2 - (j - i) if j in (i, i + 1) else 0 for j in range(1, k + 1))
            for i in range(1, k)
        )),
        (1, 1, 3): mono(*(
            tuple(2 if j == i else 1 if j == m else 0 for j in range(1, k + 1))
            for i in range(1, k + 1) for m in range(i + 2, k + 1)
        )),
        (1, 2, 2): mono(*(
            tuple(1 if j == i else 2 if j == m else 0 for j in range(1, k + 1))
            for i in range(1, k + 1) for m in range(i + 1, k + 1)
        )),
        (1, 2, 3): mono(*(
            tuple(1 if j in (i, m, p) else 0 for j in range(1, k + 1))
            for i in range(1, k + 1) for m in range(i + 1, k + 1)
            for p in range(m + 1, k + 1)
        )),
    }
    for pi, want in cases.items():
        got = catalan.m_polynomial(pi, k)
        if got != want:
            return _fail(f"monomial expansion of M_{pi} in {k} variables wrong")
    return OK


def check_example_successors(d: int = 0) -> tuple[bool, str]:
    got = words.successors((1, 1, 3, 3, 4, 6))
    want = ((1, 1, 1, 1, 4, 6), (1, 1, 3, 3, 3, 6), (1, 1, 3, 3, 4, 4))
    return _diff("successors of 113346", got, want)


def check_example_ribbon_product(d: int = 0) -> tuple[bool, str]:
    got = catalan.ribbon_product((1, 1, 2, 2, 4), (1, 1, 3))
    want = _flin("11224668", "11224446")
    return _diff("R_11224 R_113", got, want)


def check_example_matrices(d: int = 0) -> tuple[bool, str]:
    m = ((0, 1, 1, 0), (1, 0, 0, 0), (0, 1, 0, 0))
    if matrices.reading(m) != (2, 3, 1, 2):
        return _fail("matrix reading of a 3x4 example wrong")
    got = set(matrices.word_matrices((1, 2, 2)))
    want = {((1, 1, 0), (0, 1, 0)),
            ((1, 0, 0), (0, 1, 0), (0, 1, 0))}
    return _diff("matrix spread of 122", got, want)


def check_example_g_power(d: int = 0) -> tuple[bool, str]:
    got = gbasis.g_mul(gbasis.g_mul(Lin.basis((1,)), Lin.basis((1,))),
                       Lin.basis((1,)))
    want = lin_sum(Lin.basis(a) for a in words.parking_list(3))
    return _diff("cube of G_1", got, want)


# ---------------------------------------------------------------------------
# Hopf axioms

def _triples(total_max: int):
    for na in range(1, total_max - 1):
        for nb in range(1, total_max - na):
            for nc in range(1, total_max - na - nb + 1):
                for a in sorted(words.parking_list(na)):
                    for b in sorted(words.parking_list(nb)):
                        for c in sorted(words.parking_list(nc)):
                            yield a, b, c


def _sample_words(rng: random.Random, n: int):
    return rng.choice(sorted(words.parking_list(n)))


def check_f_associative(d: int = 4) -> tuple[bool, str]:
    for a, b, c in _triples(min(d, 4)):
        left = fbasis.f_mul(fbasis.f_product(a, b), Lin.basis(c))
        right = fbasis.f_mul(Lin.basis(a), fbasis.f_product(b, c))
        if left != right:
            return _fail(f"associativity fails at {a},{b},{c}")
    rng = random.Random(20260814)
    for _ in range(5):
        na = rng.randint(1, 3)
        nb = rng.randint(1, 4 - na)
        nc = 5 - na - nb
        a, b, c = (_sample_words(rng, k) for k in (na, nb, nc))
        left = fbasis.f_mul(fbasis.f_product(a, b), Lin.basis(c))
        right = fbasis.f_mul(Lin.basis(a), fbasis.f_product(b, c))
        if left != right:
            return _fail(f"associativity fails at sampled {a},{b},{c}")
    return OK


def _coassoc_sides(a) -> tuple[Lin, Lin]:
    t = fbasis.f_coproduct(a)
    left, right = Lin(), Lin()
    for (u, v), c in t.items():
        for (p, q), c2 in fbasis.f_coproduct(u).items():
            left += Lin.basis((p, q, v), c * c2)
        for (p, q), c2 in fbasis.f_coproduct(v).items():
            right += Lin.basis((u, p, q), c * c2)
    return left, right


def check_f_coassociative(d: int = 4) -> tuple[bool, str]:
    for a in _pf_upto(min(d, 5)):
        left, right = _coassoc_sides(a)
        if left != right:
            return _fail(f"coassociativity fails at {a}")
    return OK


def check_f_compatible(d: int = 4) -> tuple[bool, str]:
    dmul = tensor_mul(fbasis.f_product)
    for a, b in _pf_pairs(min(d, 4)):
        left = fbasis.f_comul(fbasis.f_product(a, b))
        right = dmul(fbasis.f_coproduct(a), fbasis.f_coproduct(b))
        if left != right:
            return _fail(f"bialgebra compatibility fails at {a},{b}")
    rng = random.Random(7)
    for _ in range(5):
        na = rng.randint(1, 4)
        a, b = _sample_words(rng, na), _sample_words(rng, 5 - na)
        if fbasis.f_comul(fbasis.f_product(a, b)) != dmul(
                fbasis.f_coproduct(a), fbasis.f_coproduct(b)):
            return _fail(f"bialgebra compatibility fails at sampled {a},{b}")
    return OK


def check_f_counit(d: int = 4) -> tuple[bool, str]:
    for a in _pf_upto(min(d, 5)):
        t = fbasis.f_coproduct(a)
        left = lin_sum(Lin.basis(v, c) for (u, v), c in t.items() if not u)
        right = lin_sum(Lin.basis(u, c) for (u, v), c in t.items() if not v)
        if left != Lin.basis(a) or right != Lin.basis(a):
            return _fail(f"counit axiom fails at {a}")
    return OK


def check_f_antipode_axiom(d: int = 4) -> tuple[bool, str]:
    for a in _pf_upto(min(d, 4)):
        t = fbasis.f_coproduct(a)
        left, right = Lin(), Lin()
        for (u, v), c in t.items():
            left += fbasis.f_mul(fbasis.f_antipode_lin(Lin.basis(u)),
                                 Lin.basis(v)).scale(c)
            right += fbasis.f_mul(Lin.basis(u),
                                  fbasis.f_antipode_lin(Lin.basis(v))).scale(c)
        want = Lin.basis(()) if not a else Lin()
        if left != want or right != want:
            return _fail(f"antipode convolution identity fails at {a}")
    return OK


def check_g_compatible(d: int = 3) -> tuple[bool, str]:
    dmul = tensor_mul(gbasis.g_product)
    for a, b in _pf_pairs(min(d, 3)):
        left = gbasis.g_comul(gbasis.g_product(a, b))
        right = dmul(gbasis.g_coproduct(a), gbasis.g_coproduct(b))
        if left != right:
            return _fail(f"dual bialgebra compatibility fails at {a},{b}")
    return OK


def check_p_cocommutative(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d, 5) + 1):
        for pi in _catalan_labels(n):
            t = catalan.p_coproduct(pi)
            flipped = t.map_labels(lambda uv: (uv[1], uv[0]))
            if t != flipped:
                return _fail(f"coproduct of class {pi} not cocommutative")
    return OK


def check_p_compatible(d: int = 4) -> tuple[bool, str]:
    dmul = tensor_mul(lambda a, b: Lin.basis(catalan.p_product(a, b)))
    for n1 in range(1, min(d, 4)):
        for n2 in range(1, min(d, 4) - n1 + 1):
            for p1 in _catalan_labels(n1):
                for p2 in _catalan_labels(n2):
                    left = catalan.p_comul(Lin.basis(catalan.p_product(p1, p2)))
                    right = dmul(catalan.p_coproduct(p1), catalan.p_coproduct(p2))
                    if left != right:
                        return _fail(f"class bialgebra fails at {p1},{p2}")
    return OK


# ---------------------------------------------------------------------------
# duality

def check_duality_adjoint(d: int = 4) -> tuple[bool, str]:
    for a, b in _pf_pairs(min(d, 4)):
        if gbasis.g_product(a, b) != gbasis.g_product_by_duality(a, b):
            return _fail(f"product/coproduct adjointness fails at {a},{b}")
    for a in _pf_upto(min(d, 4)):
        for (u, v), c in gbasis.g_coproduct(a).items():
            if fbasis.f_product(u, v).coeff(a) != c:
                return _fail(f"coproduct/product adjointness fails at {a}")
    return OK


def check_duality_unshuffle(d: int = 4) -> tuple[bool, str]:
    for a in _pf_upto(min(d, 5)):
        if gbasis.g_coproduct(a) != gbasis.g_coproduct_by_unshuffle(a):
            return _fail(f"breakpoint coproduct differs from unshuffle at {a}")
    return OK


def check_duality_st_bases(d: int = 3) -> tuple[bool, str]:
    for n in range(1, min(d, 4) + 1):
        s, t = gbasis.st_dual_bases(n)
        labels = sorted(words.parking_list(n))
        for b in labels:
            for x in labels:
                want = Fraction(int(b == x))
                from .linear import dual_pairing

                if dual_pairing(s[b], fbasis.f_mult_basis(x)) != want:
                    return _fail(f"S basis not dual to products at {b},{x}")
                if dual_pairing(t[b], gbasis.g_mult_basis(x)) != want:
                    return _fail(f"T basis not dual to products at {b},{x}")
    return OK


def check_classic_convolution(d: int = 4) -> tuple[bool, str]:
    for na in range(1, min(d, 4)):
        for nb in range(1, min(d, 4) - na + 1):
            n = na + nb
            for sig in permutations(range(1, na + 1)):
                for tau in permutations(range(1, nb + 1)):
                    got = Lin()
                    for c, coef in gbasis.g_product(sig, tau).items():
                        if sorted(c) == list(range(1, n + 1)):
                            got += Lin.basis(c, coef)
                    want = lin_sum(
                        Lin.basis(c)
                        for c in permutations(range(1, n + 1))
                        if words.standardize(c[:na]) == sig
                        and words.standardize(c[na:]) == tau
                    )
                    if got != want:
                        return _fail(f"permutation convolution fails at {sig},{tau}")
    return OK


def check_phi_morphism(d: int = 4) -> tuple[bool, str]:
    phi_lin = lambda x: lin_sum(
        gbasis.phi(s).scale(c) for s, c in x.items())
    for na in range(1, min(d, 5)):
        for nb in range(1, min(d, 5) - na + 1):
            for sig in permutations(range(1, na + 1)):
                for tau in permutations(range(1, nb + 1)):
                    left = phi_lin(fbasis.f_product(sig, tau))
                    right = gbasis.g_mul(gbasis.phi(sig), gbasis.phi(tau))
                    if left != right:
                        return _fail(f"phi product fails at {sig},{tau}")
    for n in range(1, min(d, 4) + 1):
        for sig in permutations(range(1, n + 1)):
            classic = Lin()
            for k in range(n + 1):
                u, v = sig[:k], sig[k:]
                classic += Lin.basis(
                    (words.standardize(u), words.standardize(v)))
            left = tensor_map(gbasis.phi, gbasis.phi)(classic)
            right = gbasis.g_comul(gbasis.phi(sig))
            if left != right:
                return _fail(f"phi coproduct fails at {sig}")
    return OK


def check_g_ones_power(d: int = 5) -> tuple[bool, str]:
    acc = Lin.basis(())
    for n in range(1, min(d, 5) + 1):
        acc = gbasis.g_mul(acc, Lin.basis((1,)))
        want = lin_sum(Lin.basis(a) for a in words.parking_list(n))
        if acc != want:
            return _fail(f"power {n} of G_1 is not the full class sum")
    return OK


# ---------------------------------------------------------------------------
# counts

PRINTED_CONNECTED = (1, 2, 11, 92, 1014, 13795, 223061, 4180785,
                     89191196, 2135610879, 56749806356, 1658094051392)
PRINTED_LIE = (1, 2, 9, 80, 901, 12564)
PRINTED_SCHRODER = (1, 1, 3, 11, 45, 197, 903)


def check_counts_parking(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d, 7) + 1):
        if sum(1 for _ in words.parking_functions(n)) != words.pf_count(n):
            return _fail(f"parking count differs from closed form at n={n}")
        if sum(1 for _ in words.prime_parking_functions(n)) != words.ppf_count(n):
            return _fail(f"prime count differs from closed form at n={n}")
        if sum(1 for _ in words.nondecreasing_parking_functions(n)) != words.catalan(n):
            return _fail(f"nondecreasing count is not Catalan at n={n}")
    return OK


def check_counts_connected(d: int = 4) -> tuple[bool, str]:
    top = min(d, 6)
    by_enum = [sum(1 for _ in words.connected_parking_functions(n))
               for n in range(1, top + 1)]
    if tuple(by_enum) != PRINTED_CONNECTED[:top]:
        return _fail(f"connected enumeration gives {by_enum}")
    if tuple(words.connected_counts(12)) != PRINTED_CONNECTED:
        return _fail("connected closed form differs from the printed series")
    return OK


def check_counts_lie(d: int = 4) -> tuple[bool, str]:
    top = min(d, 6)
    got = tuple(gbasis.lie_generator_series(top))
    return _diff("free Lie generator counts", got, PRINTED_LIE[:top])


def check_counts_schroder(d: int = 4) -> tuple[bool, str]:
    for n in range(min(d, 6) + 1):
        closed = words.schroder_count(n)
        if closed != PRINTED_SCHRODER[n]:
            return _fail(f"closed-form class count wrong at n={n}")
        if schroder.schroder_dim(n) != closed:
            return _fail(f"class enumeration differs from closed form at n={n}")
    return OK


def check_counts_free_dimension(d: int = 4) -> tuple[bool, str]:
    top = min(d, 5)
    c = words.connected_counts(top)
    dims = [1] + [0] * top
    for n in range(1, top + 1):
        dims[n] = sum(c[k - 1] * dims[n - k] for k in range(1, n + 1))
        if dims[n] != words.pf_count(n):
            return _fail(f"free-generator monomial count wrong at n={n}")
    return OK


def check_counts_type_partition(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d, 7) + 1):
        total = sum(
            words.multinomial(n, i)
            * _prod((k - 1) ** (k - 1) for k in i)
            for i in words.compositions(n)
        )
        if total != words.pf_count(n):
            return _fail(f"type-class sizes do not partition the count at n={n}")
    return OK


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


# ---------------------------------------------------------------------------
# structural equivalences and cross-route checks

def check_parkize_fixed_points(d: int = 5) -> tuple[bool, str]:
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, min(d + 2, 7))
        w = tuple(rng.randint(1, n + 2) for _ in range(n))
        p = words.parkize(w)
        if not words.is_parking(p) or words.parkize(p) != p:
            return _fail(f"parkization not idempotent at {w}")
        if words.is_parking(w) and p != w:
            return _fail(f"parkization moved the parking word {w}")
    return OK


def check_nc_roundtrip(d: int = 6) -> tuple[bool, str]:
    for n in range(1, min(d + 2, 8) + 1):
        for pi in _catalan_labels(n):
            blocks = words.nc_of_parking(pi)
            if not words.is_noncrossing(blocks):
                return _fail(f"blocks of {pi} cross")
            if words.word_of_nc(blocks) != pi:
                return _fail(f"block round trip fails at {pi}")
    return OK


def check_prime_characterizations(d: int = 4) -> tuple[bool, str]:
    for n in range(2, min(d, 5) + 1):
        shuffled = set()
        for k in range(1, n):
            for u in words.parking_list(k):
                for v in words.parking_list(n - k):
                    shuffled.update(words.shifted_shuffle(u, v))
        for a in words.parking_list(n):
            if words.is_prime(a) != (a not in shuffled):
                return _fail(f"prime/shuffle characterization fails at {a}")
    for n in range(1, min(d + 3, 7) + 1):
        for pi in _catalan_labels(n):
            if words.is_prime(pi) != words.is_connected(pi):
                return _fail(f"prime/connected disagree on sorted {pi}")
    for n in range(1, min(d + 2, 6) + 1):
        for a in sorted(words.parking_list(n)):
            bps = words.breakpoints(a)
            gaps = tuple(b - a_ for a_, b in zip((0,) + bps, bps))
            if words.prime_type(a) != gaps:
                return _fail(f"type differs from breakpoint gaps at {a}")
    return OK


def check_successor_order(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d + 2, 6) + 1):
        labels = _catalan_labels(n)
        for pi in labels:
            for s in words.successors(pi):
                if not words.is_catalan_word(s):
                    return _fail(f"successor {s} of {pi} invalid")
        for pi in labels:
            for rho in words.successor_closure(pi):
                if rho != pi and pi in words.successor_closure(rho):
                    return _fail(f"order not antisymmetric at {pi},{rho}")
    return OK


def check_antipode_routes(d: int = 4) -> tuple[bool, str]:
    for a in _pf_upto(min(d, 4)):
        if fbasis.f_antipode(a) != fbasis.f_antipode_by_recursion(a):
            return _fail(f"antipode routes disagree at {a}")
    return OK


def check_mult_basis(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d, 4) + 1):
        try:
            inv = fbasis._f_in_mult_basis(n)
        except ValueError as exc:
            return _fail(f"product-basis transition at n={n}: {exc}")
        for a in sorted(words.parking_list(n)):
            row = fbasis.f_mult_basis(a)
            if row.coeff(a) != 1 or min(row.labels()) != a:
                return _fail(f"product basis not led by its label at {a}")
            back = lin_sum(fbasis.f_mult_basis(x).scale(c)
                           for x, c in inv[a].items())
            if back != Lin.basis(a):
                return _fail(f"product-basis inversion fails at {a}")
        try:
            gbasis._g_in_mult_basis(n)
        except ValueError as exc:
            return _fail(f"dual product-basis transition at n={n}: {exc}")
    return OK


def check_v_elements(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d, 4) + 1):
        for i in words.compositions(n):
            if fbasis.v_element(i) != fbasis.v_element_by_type(i):
                return _fail(f"type-class sum routes disagree at {i}")
    return OK


def check_prime_inclusion_exclusion(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d, 5) + 1):
        direct = lin_sum(Lin.basis(a)
                         for a in words.prime_parking_functions(n))
        if fbasis.ppf_inclusion_exclusion(n) != direct:
            return _fail(f"prime sum by sign inversion fails at n={n}")
    return OK


def check_eta_morphism(d: int = 4) -> tuple[bool, str]:
    for a, b in _pf_pairs(min(d, 4)):
        left = fbasis.eta(fbasis.f_product(a, b))
        right = symfun.qs_f_product(fbasis.eta(Lin.basis(a)),
                                    fbasis.eta(Lin.basis(b)))
        if left != right:
            return _fail(f"descent projection not multiplicative at {a},{b}")
    for a in _pf_upto(min(d, 4)):
        left = fbasis.f_coproduct(a).map_labels(
            lambda uv: (words.descent_composition(uv[0]) if uv[0] else (),
                        words.descent_composition(uv[1]) if uv[1] else ()))
        right = symfun.qs_f_coproduct(fbasis.eta(Lin.basis(a)))
        if left != right:
            return _fail(f"descent projection not comultiplicative at {a}")
    return OK


def check_ones_coproduct(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d, 6) + 1):
        got = fbasis.f_coproduct((1,) * n)
        want = lin_sum(Lin.basis(((1,) * k, (1,) * (n - k)))
                       for k in range(n + 1))
        if got != want:
            return _fail(f"all-ones coproduct fails at n={n}")
    return OK


def check_eta_star(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d, 4) + 1):
        for i in words.compositions(n):
            prod = Lin.basis(())
            for part in i:
                prod = gbasis.g_mul(prod, gbasis.eta_star(part))
            want = lin_sum(
                Lin.basis(a) for a in words.parking_list(n)
                if _refines(i, words.descent_composition(a)))
            if prod != want:
                return _fail(f"dual descent embedding fails at {i}")
    return OK


def _refines(i, j) -> bool:
    """True when composition i refines j (same total, nested partial sums)."""
    si = set()
    acc = 0
    for p in i[:-1]:
        acc += p
        si.add(acc)
    acc = 0
    sj = set()
    for p in j[:-1]:
        acc += p
        sj.add(acc)
    return sj <= si


def check_prime_eval_counts(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d, 7) + 1):
        brute: dict[tuple[int, ...], int] = {}
        for a in words.prime_parking_functions(n):
            lam = words.partition_of(p for p in words.evaluation(a, n) if p)
            brute[lam] = brute.get(lam, 0) + 1
        total = 0
        for lam in words.partitions(n):
            got = symfun.prime_eval_count(lam)
            if got != brute.get(lam, 0):
                return _fail(f"prime count by evaluation wrong at {lam}")
            total += got
        if total != words.ppf_count(n):
            return _fail(f"prime counts do not sum to the class size at n={n}")
    return OK


def check_descent_type_law(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d, 5) + 1):
        table: dict[tuple, int] = {}
        for a in words.parking_functions(n):
            key = (words.prime_type(a), words.descent_composition(a))
            table[key] = table.get(key, 0) + 1
        for i in words.compositions(n):
            fi = symfun.type_characteristic(i)
            for j in words.compositions(n):
                got = symfun.hall_pairing(symfun.ribbon_h(j), fi)
                if got != table.get((i, j), 0):
                    return _fail(f"ribbon/type pairing wrong at I={i}, J={j}")
    return OK


def check_star_involution(d: int = 4) -> tuple[bool, str]:
    if symfun.h_star(1) != -symfun.Sym.h((1,)):
        return _fail("first star image wrong")
    if symfun.h_star(2) != symfun.Sym.h((1, 1), 2) - symfun.Sym.h((2,)):
        return _fail("second star image wrong")
    for n in range(1, min(d + 2, 6) + 1):
        if symfun.h_star(n) != symfun.h_star_closed(n):
            return _fail(f"star routes differ at n={n}")
        if symfun.star(symfun.h_star(n)) != symfun.Sym.h((n,)):
            return _fail(f"star not involutive at n={n}")
        want = -symfun.omega(symfun.prime_characteristic(n)) \
            if n > 1 else -symfun.Sym.h((1,))
        if symfun.e_star(n) != want:
            return _fail(f"elementary star routes differ at n={n}")
    rng = random.Random(99)
    for _ in range(10):
        vec = Lin()
        for _ in range(3):
            n = rng.randint(1, 4)
            lam = tuple(sorted((rng.randint(1, n) for _ in range(2)),
                               reverse=True))
            vec += Lin.basis(lam, rng.randint(-3, 3))
        x = symfun.Sym("h", vec)
        if symfun.star(symfun.star(x)) != x:
            return _fail("star not involutive on a random element")
    return OK


def check_characteristics(d: int = 4) -> tuple[bool, str]:
    for n in range(2, min(d + 2, 6) + 1):
        if symfun.prime_characteristic(n) != symfun.prime_characteristic_closed(n):
            return _fail(f"prime character routes differ at n={n}")
    for n in range(1, min(d, 5) + 1):
        for i in words.compositions(n):
            if symfun.type_characteristic(i) != symfun.type_characteristic_by_words(i):
                return _fail(f"type character routes differ at {i}")
        pc = symfun.parking_characteristic(n)
        if pc != symfun.parking_characteristic_by_words(n):
            return _fail(f"full character routes differ at n={n}")
        star_route = symfun.omega(symfun.h_star(n)).scale((-1) ** n)
        if pc != star_route:
            return _fail(f"character/star identity fails at n={n}")
    return OK


def check_eta_v_compatibility(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d, 5) + 1):
        for i in words.compositions(n):
            left = symfun.qs_f_to_m(fbasis.eta(fbasis.v_element(i)))
            right = symfun.sym_to_qsym_m(symfun.type_characteristic(i))
            if left != right:
                return _fail(f"character projection mismatch at {i}")
    return OK


def check_hall_pairing(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d, 5) + 1):
        for lam in words.partitions(n):
            for mu in words.partitions(n):
                got = symfun.hall_pairing(symfun.Sym.h(lam), symfun.Sym.m(mu))
                if got != int(lam == mu):
                    return _fail(f"pairing not orthonormal at {lam},{mu}")
    return OK


def check_cumulant_examples(d: int = 0) -> tuple[bool, str]:
    semi = symfun.moments_to_cumulants([0, 1, 0, 2, 0, 5])
    if semi != [Fraction(x) for x in (0, 1, 0, 0, 0, 0)]:
        return _fail(f"semicircle cumulants wrong: {semi}")
    cat = symfun.cumulants_to_moments([1, 1, 1, 1])
    if cat != [Fraction(x) for x in (1, 2, 5, 14)]:
        return _fail(f"all-ones moments wrong: {cat}")
    for seq, n_top in (((0, 1, 0, 2, 0, 5), 6), ((1, 2, 5, 14), 4)):
        rs = symfun.moments_to_cumulants(seq)
        for n in range(1, n_top + 1):
            if symfun.nc_moment(rs, n) != Fraction(seq[n - 1]):
                return _fail(f"partition oracle disagrees at degree {n} of {seq}")
    return OK


def check_cumulant_roundtrip(d: int = 4, trials: int = 25,
                             length: int = 8) -> tuple[bool, str]:
    rng = random.Random(624)
    for _ in range(trials):
        ms = [Fraction(rng.randint(-9, 9), rng.randint(1, 9))
              for _ in range(length)]
        rs = symfun.moments_to_cumulants(ms)
        if symfun.cumulants_to_moments(rs) != ms:
            return _fail(f"moment round trip fails on {ms}")
        if symfun.cumulants_via_star(ms) != rs:
            return _fail(f"cumulant routes disagree on {ms}")
        back = symfun.moments_to_cumulants(symfun.cumulants_to_moments(ms))
        if back != ms:
            return _fail(f"cumulant round trip fails on {ms}")
    return OK


def check_cumulant_oracle(d: int = 4) -> tuple[bool, str]:
    rng = random.Random(1729)
    for _ in range(5):
        rs = [Fraction(rng.randint(-6, 6), rng.randint(1, 6))
              for _ in range(min(d + 3, 7))]
        ms = symfun.cumulants_to_moments(rs)
        for n in range(1, len(rs) + 1):
            if ms[n - 1] != symfun.nc_moment(rs, n):
                return _fail(f"series route differs from oracle at degree {n}")
    return OK


def check_p_expand_embedding(d: int = 4) -> tuple[bool, str]:
    top = min(d, 5)
    for n1 in range(1, top):
        for n2 in range(1, top - n1 + 1):
            for p1 in _catalan_labels(n1):
                for p2 in _catalan_labels(n2):
                    left = fbasis.f_mul(catalan.p_expand(p1),
                                        catalan.p_expand(p2))
                    right = catalan.p_expand(catalan.p_product(p1, p2))
                    if left != right:
                        return _fail(f"class-sum product fails at {p1},{p2}")
    for n in range(1, top + 1):
        for pi in _catalan_labels(n):
            left = fbasis.f_comul(catalan.p_expand(pi))
            right = tensor_map(catalan.p_expand, catalan.p_expand)(
                catalan.p_coproduct(pi))
            if left != right:
                return _fail(f"class-sum coproduct fails at {pi}")
    return OK


def check_m_commutative_associative(d: int = 4) -> tuple[bool, str]:
    top = min(d, 4)
    for n1 in range(1, top):
        for n2 in range(1, top - n1 + 1):
            for p1 in _catalan_labels(n1):
                for p2 in _catalan_labels(n2):
                    if catalan.m_product(p1, p2) != catalan.m_product(p2, p1):
                        return _fail(f"dual class product not commutative at {p1},{p2}")
    for n1 in range(1, top - 1):
        for n2 in range(1, top - n1):
            for n3 in range(1, top - n1 - n2 + 1):
                for p1 in _catalan_labels(n1):
                    for p2 in _catalan_labels(n2):
                        for p3 in _catalan_labels(n3):
                            left = catalan.m_mul(catalan.m_product(p1, p2),
                                                 Lin.basis(p3))
                            right = catalan.m_mul(Lin.basis(p1),
                                                  catalan.m_product(p2, p3))
                            if left != right:
                                return _fail(
                                    f"dual class product not associative at "
                                    f"{p1},{p2},{p3}")
    return OK


def check_m_coproduct_duality(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d, 5) + 1):
        for pi in _catalan_labels(n):
            for (u, v), c in catalan.m_coproduct(pi).items():
                if (u and v) and Lin.basis(catalan.p_product(u, v)).coeff(pi) != c:
                    return _fail(f"deconcatenation not dual to products at {pi}")
    return OK


def check_m_polynomial_realization(d: int = 4) -> tuple[bool, str]:
    k = min(d, 4) + 2
    for n1 in range(1, min(d, 4)):
        for n2 in range(1, min(d, 4) - n1 + 1):
            for p1 in _catalan_labels(n1):
                for p2 in _catalan_labels(n2):
                    left: dict[tuple[int, ...], int] = {}
                    for e1, c1 in catalan.m_polynomial(p1, k).items():
                        for e2, c2 in catalan.m_polynomial(p2, k).items():
                            key = tuple(x + y for x, y in zip(e1, e2))
                            left[key] = left.get(key, 0) + c1 * c2
                    right: dict[tuple[int, ...], int] = {}
                    for pi, c in catalan.m_product(p1, p2).items():
                        for expo, c2 in catalan.m_polynomial(pi, k).items():
                            right[expo] = right.get(expo, 0) + c * c2
                    left = {k2: v for k2, v in left.items() if v}
                    right = {k2: v for k2, v in right.items() if v}
                    if left != right:
                        return _fail(
                            f"polynomial realization breaks at {p1},{p2}")
    return OK


def check_gamma_morphism(d: int = 4) -> tuple[bool, str]:
    cases = {(3,): _flin("111"), (2, 1): _flin("112", "113"),
             (1, 2): _flin("122"), (1, 1, 1): _flin("123")}
    for i, want in cases.items():
        if catalan.gamma(i) != want:
            return _fail(f"monomial embedding wrong at {i}")
    gamma_lin = lambda x: lin_sum(
        catalan.gamma(i).scale(c) for i, c in x.items())
    top = min(d + 1, 5)
    for n1 in range(1, top):
        for n2 in range(1, top - n1 + 1):
            for i in words.compositions(n1):
                for j in words.compositions(n2):
                    left = catalan.m_mul(catalan.gamma(i), catalan.gamma(j))
                    right = gamma_lin(symfun.qs_m_product(
                        Lin.basis(i), Lin.basis(j)))
                    if left != right:
                        return _fail(f"monomial embedding breaks at {i},{j}")
    return OK


def check_ribbon_triangularity(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d, 6) + 1):
        try:
            table = catalan._r_in_p(n)
        except ValueError as exc:
            return _fail(f"ribbon transition at n={n}: {exc}")
        for pi in _catalan_labels(n):
            closure = words.successor_closure(pi)
            expansion = table[pi]
            if any(c not in (1, -1) for _, c in expansion.items()):
                return _fail(f"ribbon expansion of {pi} has entry not ±1")
            if any(rho not in closure for rho in expansion.labels()):
                return _fail(f"ribbon expansion of {pi} leaves its closure")
            back = lin_sum(catalan.p_to_r(rho).scale(c)
                           for rho, c in expansion.items())
            if back != Lin.basis(pi):
                return _fail(f"ribbon inversion fails at {pi}")
    return OK


def _ribbon_law_counterexamples(top: int, law) -> list[tuple]:
    bad = []
    for n1 in range(1, top):
        for n2 in range(1, top - n1 + 1):
            for p1 in _catalan_labels(n1):
                for p2 in _catalan_labels(n2):
                    if law(p1, p2) != catalan.ribbon_product_via_p(p1, p2):
                        bad.append((p1, p2))
    return bad


def check_ribbon_law(d: int = 4) -> tuple[bool, str]:
    bad = _ribbon_law_counterexamples(min(d, 5), catalan.ribbon_product)
    if bad:
        p1, p2 = bad[0]
        got = catalan.ribbon_product(p1, p2)
        want = catalan.ribbon_product_via_p(p1, p2)
        return _fail(
            f"two-term ribbon law disagrees with the expansion route on "
            f"{len(bad)} pairs; first at R_{p1} R_{p2}: law gives {got!r}, "
            f"expansion gives {want!r}")
    return OK


def check_ribbon_glued_law(d: int = 4) -> tuple[bool, str]:
    bad = _ribbon_law_counterexamples(min(d, 5), catalan.ribbon_product_glued)
    if bad:
        p1, p2 = bad[0]
        return _fail(f"junction-merge ribbon law fails first at {p1},{p2}")
    return OK


def check_g_series(d: int = 4) -> tuple[bool, str]:
    top = min(d + 2, 6)
    g = catalan.g_series(top)
    for n in range(1, top + 1):
        image = symfun.ns_image(g[n])
        want = symfun.omega(symfun.h_star(n)).scale((-1) ** n)
        if image != want:
            return _fail(f"commutative image of the series fails at n={n}")
        if catalan.g_weighted_coefficient_sum(n) != words.pf_count(n):
            return _fail(f"weighted coefficient sum wrong at n={n}")
        if catalan.evaluation_type_sum(n) != g[n]:
            return _fail(f"evaluation-type expansion differs at n={n}")
    return OK


def report_g_routes(d: int = 4) -> tuple[bool, str]:
    top = min(d + 1, 5)
    g = catalan.g_series(top)
    lines = []
    for n in range(1, top + 1):
        by_factor = catalan.factor_type_sum(n)
        by_eval = catalan.evaluation_type_sum(n)
        lines.append(
            f"n={n}: factor-type route {'==' if by_factor == g[n] else '!='} g_n, "
            f"evaluation route {'==' if by_eval == g[n] else '!='} g_n")
    return True, "; ".join(lines)


def check_schroder_closure(d: int = 4) -> tuple[bool, str]:
    top = min(d, 4)
    keys = {n: sorted(schroder.classes(n)) for n in range(top + 1)}
    for n1 in range(1, top):
        for n2 in range(1, top - n1 + 1):
            for k1 in keys[n1]:
                for k2 in keys[n2]:
                    try:
                        schroder.pq_product(k1, k2)
                    except ValueError as exc:
                        return _fail(f"class product not closed at {k1},{k2}: {exc}")
    for n in range(1, top + 1):
        for key in keys[n]:
            try:
                t = schroder.pq_coproduct(key)
            except ValueError as exc:
                return _fail(f"class coproduct not closed at {key}: {exc}")
            for _, c in t.items():
                if c != int(c) or c < 0:
                    return _fail(f"class coproduct of {key} not nonnegative")
    return OK


def check_schroder_quotient(d: int = 3) -> tuple[bool, str]:
    top = min(d, 3)
    for n1 in range(1, top + 1):
        for key in sorted(schroder.classes(n1)):
            members = schroder.class_members(key)
            for n2 in range(1, top + 1):
                for x in sorted(words.parking_list(n2)):
                    ref = None
                    for rep in members:
                        got = gbasis.g_mul(Lin.basis(x), Lin.basis(rep)) \
                            .map_labels(schroder.hypo_key)
                        ref = got if ref is None else ref
                        if got != ref:
                            return _fail(
                                f"quotient product depends on the representative "
                                f"of {key} against {x}")
                        got = gbasis.g_mul(Lin.basis(rep), Lin.basis(x)) \
                            .map_labels(schroder.hypo_key)
                        if gbasis.g_mul(Lin.basis(members[0]), Lin.basis(x)) \
                                .map_labels(schroder.hypo_key) != got:
                            return _fail(
                                f"quotient product depends on the representative "
                                f"of {key} against {x} (left)")
    return OK


def check_matrix_product(d: int = 4) -> tuple[bool, str]:
    for a, b in _pf_pairs(min(d, 4)):
        left = matrices.mp_mul(matrices.word_class(a), matrices.word_class(b))
        right = lin_sum(matrices.word_class(c)
                        for c in words.shifted_shuffle(a, b))
        if left != right:
            return _fail(f"grouped matrix product fails at {a},{b}")
    return OK


def check_matrix_coproduct(d: int = 4) -> tuple[bool, str]:
    for a in _pf_upto(min(d, 4)):
        left = matrices.mp_comul(matrices.word_class(a))
        right = Lin()
        for (u, v), c in fbasis.f_coproduct(a).items():
            right += tensor(matrices.word_class(u),
                            matrices.word_class(v)).scale(c)
        if left != right:
            return _fail(f"grouped matrix coproduct fails at {a}")
    return OK


def _packed_matrices(word, width: int):
    n = len(word)
    if n == 0:
        yield ()
        return
    ascents = [i for i in range(1, n) if word[i - 1] < word[i]]
    forced = [i for i in range(1, n) if word[i - 1] >= word[i]]
    for extra in chain.from_iterable(
            combinations(ascents, k) for k in range(len(ascents) + 1)):
        cuts = sorted(forced + list(extra))
        rows = []
        for lo, hi in zip([0] + cuts, cuts + [n]):
            block = set(word[lo:hi])
            rows.append(tuple(1 if j + 1 in block else 0
                              for j in range(width)))
        yield tuple(rows)


def _words_over(alphabet: int, length: int):
    if length == 0:
        yield ()
        return
    for rest in _words_over(alphabet, length - 1):
        for x in range(1, alphabet + 1):
            yield rest + (x,)


def check_matrix_parkize(d: int = 4) -> tuple[bool, str]:
    top = min(d + 1, 5)
    for k in range(1, top + 1):
        for word in _words_over(top, k):
            for w in sorted({max(word), len(word), len(word) + 1}):
                if w < max(word):
                    continue
                for m in _packed_matrices(word, w):
                    r = matrices.reading(m)
                    dfct = words.defect(r)
                    if dfct != len(r) + 1 and any(row[dfct - 1] for row in m):
                        return _fail(f"defect column of {m} not empty")
                    pm = matrices.matrix_parkize(m)
                    if matrices.reading(pm) != words.parkize(r):
                        return _fail(f"matrix parkization disagrees on {m}")
                    if words.is_parking(r) and w >= len(r) \
                            and matrices.width(pm) != len(r):
                        return _fail(f"trailing trim wrong on {m}")
    if matrices.matrix_parkize(((0, 1),)) != ((1,),):
        return _fail("single-entry matrix does not parkize to [[1]]")
    return OK


def check_word_matrices(d: int = 4) -> tuple[bool, str]:
    for a in _pf_upto(min(d + 1, 5)):
        for m in matrices.word_matrices(a):
            if matrices.reading(m) != a:
                return _fail(f"matrix of {a} reads back differently")
            if not matrices.is_packed(m):
                return _fail(f"matrix of {a} has a zero row")
    for a in _pf_upto(min(d, 4)):
        perm = sorted(set(a)) == sorted(a)
        for m in matrices.word_matrices(a):
            if matrices.is_word_matrix(m) and not perm:
                return _fail(f"non-permutation {a} produced a word matrix")
    return OK


def check_s_primitive(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d, 4) + 1):
        s, _t = gbasis.st_dual_bases(n)
        for c in sorted(words.parking_list(n)):
            if not words.is_connected(c):
                continue
            sc = s[c]
            reduced = gbasis.g_comul(sc)
            reduced -= lin_sum(Lin.basis(((), a), coef)
                               for a, coef in sc.items())
            reduced -= lin_sum(Lin.basis((a, ()), coef)
                               for a, coef in sc.items())
            if reduced:
                return _fail(f"dual basis element of {c} is not primitive")
    return OK


def check_graded_dimensions(d: int = 4) -> tuple[bool, str]:
    for n in range(1, min(d, 5) + 1):
        if words.space_dimension("PQSym", n) != words.pf_count(n):
            return _fail("parking dimension table broken")
        if words.space_dimension("CQSym", n) != words.catalan(n):
            return _fail("Catalan dimension table broken")
        if words.space_dimension("SQSym", n) != words.schroder_count(n):
            return _fail("class dimension table broken")
    return OK


# ---------------------------------------------------------------------------
# registry

@dataclass
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str
    kind: str = "check"


SUITES = ("paper-examples", "hopf", "duality", "counts", "equivalences")

CHECKS: list[tuple[str, str, str, object]] = [
    ("paper-examples", "f-product", "check", check_example_f_product),
    ("paper-examples", "f-coproduct", "check", check_example_f_coproduct),
    ("paper-examples", "f-antipode", "check", check_example_f_antipode),
    ("paper-examples", "parkization", "check", check_example_parkization),
    ("paper-examples", "g-product", "check", check_example_g_product),
    ("paper-examples", "g-coproduct", "check", check_example_g_coproduct),
    ("paper-examples", "nc-bijection", "check", check_example_nc_bijection),
    ("paper-examples", "p-coproduct", "check", check_example_p_coproduct),
    ("paper-examples", "m-product", "check", check_example_m_product),
    ("paper-examples", "m-polynomials", "check", check_example_m_polynomials),
    ("paper-examples", "successors", "check", check_example_successors),
    ("paper-examples", "ribbon-product", "check", check_example_ribbon_product),
    ("paper-examples", "matrix-reading", "check", check_example_matrices),
    ("paper-examples", "g-power", "check", check_example_g_power),
    ("hopf", "f-associative", "check", check_f_associative),
    ("hopf", "f-coassociative", "check", check_f_coassociative),
    ("hopf", "f-compatible", "check", check_f_compatible),
    ("hopf", "f-counit", "check", check_f_counit),
    ("hopf", "f-antipode-axiom", "check", check_f_antipode_axiom),
    ("hopf", "g-compatible", "check", check_g_compatible),
    ("hopf", "p-cocommutative", "check", check_p_cocommutative),
    ("hopf", "p-compatible", "check", check_p_compatible),
    ("duality", "adjointness", "check", check_duality_adjoint),
    ("duality", "unshuffle-coproduct", "check", check_duality_unshuffle),
    ("duality", "st-dual-bases", "check", check_duality_st_bases),
    ("duality", "classic-convolution", "check", check_classic_convolution),
    ("duality", "phi-morphism", "check", check_phi_morphism),
    ("duality", "g-ones-power", "check", check_g_ones_power),
    ("counts", "parking-counts", "check", check_counts_parking),
    ("counts", "connected-series", "check", check_counts_connected),
    ("counts", "lie-series", "check", check_counts_lie),
    ("counts", "schroder-series", "check", check_counts_schroder),
    ("counts", "free-dimension", "check", check_counts_free_dimension),
    ("counts", "type-partition", "check", check_counts_type_partition),
    ("counts", "dimension-table", "check", check_graded_dimensions),
    ("equivalences", "parkize-fixed-points", "check", check_parkize_fixed_points),
    ("equivalences", "nc-roundtrip", "check", check_nc_roundtrip),
    ("equivalences", "prime-characterizations", "check", check_prime_characterizations),
    ("equivalences", "successor-order", "check", check_successor_order),
    ("equivalences", "antipode-routes", "check", check_antipode_routes),
    ("equivalences", "mult-basis", "check", check_mult_basis),
    ("equivalences", "type-class-sums", "check", check_v_elements),
    ("equivalences", "prime-inclusion-exclusion", "check",
     check_prime_inclusion_exclusion),
    ("equivalences", "descent-projection", "check", check_eta_morphism),
    ("equivalences", "ones-coproduct", "check", check_ones_coproduct),
    ("equivalences", "dual-descent-embedding", "check", check_eta_star),
    ("equivalences", "prime-eval-counts", "check", check_prime_eval_counts),
    ("equivalences", "descent-type-law", "check", check_descent_type_law),
    ("equivalences", "star-involution", "check", check_star_involution),
    ("equivalences", "characteristics", "check", check_characteristics),
    ("equivalences", "character-projection", "check", check_eta_v_compatibility),
    ("equivalences", "hall-pairing", "check", check_hall_pairing),
    ("equivalences", "cumulant-examples", "check", check_cumulant_examples),
    ("equivalences", "cumulant-roundtrip", "check", check_cumulant_roundtrip),
    ("equivalences", "cumulant-oracle", "check", check_cumulant_oracle),
    ("equivalences", "class-embedding", "check", check_p_expand_embedding),
    ("equivalences", "m-commutative", "check", check_m_commutative_associative),
    ("equivalences", "m-deconcatenation", "check", check_m_coproduct_duality),
    ("equivalences", "m-realization", "check", check_m_polynomial_realization),
    ("equivalences", "monomial-embedding", "check", check_gamma_morphism),
    ("equivalences", "ribbon-triangularity", "check", check_ribbon_triangularity),
    ("equivalences", "ribbon-two-term-law", "check", check_ribbon_law),
    ("equivalences", "ribbon-junction-law", "check", check_ribbon_glued_law),
    ("equivalences", "g-series", "check", check_g_series),
    ("equivalences", "g-series-routes", "report", report_g_routes),
    ("equivalences", "class-closure", "check", check_schroder_closure),
    ("equivalences", "class-quotient", "check", check_schroder_quotient),
    ("equivalences", "matrix-product", "check", check_matrix_product),
    ("equivalences", "matrix-coproduct", "check", check_matrix_coproduct),
    ("equivalences", "matrix-parkization", "check", check_matrix_parkize),
    ("equivalences", "word-matrices", "check", check_word_matrices),
    ("equivalences", "primitive-elements", "check", check_s_primitive),
]


def run(suite: str = "all", max_degree: int = 4) -> list[CheckResult]:
    wanted = SUITES if suite == "all" else (suite,)
    out = []
    for s, name, kind, fn in CHECKS:
        if s not in wanted:
            continue
        ok, detail = fn(max_degree)
        out.append(CheckResult(s, name, ok, detail, kind))
    return out


# ---------------------------------------------------------------------------
# acceptance gates

def _combine(*parts: tuple[bool, str]) -> tuple[bool, str]:
    bad = [msg for ok, msg in parts if not ok]
    if bad:
        return False, "; ".join(bad)
    return True, "ok"


def criterion_1() -> tuple[bool, str]:
    """Enumerated parking and prime counts match the closed forms, n <= 7."""
    return check_counts_parking(7)


def criterion_2() -> tuple[bool, str]:
    """Connected series by enumeration (6) and closed form (12 printed)."""
    return check_counts_connected(6)


def criterion_3() -> tuple[bool, str]:
    """Every worked example replays exactly."""
    results = [fn(0) for s, _n, _k, fn in CHECKS if s == "paper-examples"]
    return _combine(*results)


def criterion_4() -> tuple[bool, str]:
    """Hopf axioms through total degree 4, sampled at 5."""
    return _combine(check_f_associative(4), check_f_coassociative(5),
                    check_f_compatible(4), check_f_counit(4),
                    check_f_antipode_axiom(4))


def criterion_5() -> tuple[bool, str]:
    """Duality adjointness (4) and unshuffle coproduct (5)."""
    return _combine(check_duality_adjoint(4), check_duality_unshuffle(5))


def criterion_6() -> tuple[bool, str]:
    """Prime counts by evaluation vs enumeration through n = 7."""
    return check_prime_eval_counts(7)


def criterion_7() -> tuple[bool, str]:
    """Ribbon/type pairing counts descent classes, n <= 5."""
    return check_descent_type_law(5)


def criterion_8() -> tuple[bool, str]:
    """Star involution and the cumulant round trips."""
    return _combine(check_star_involution(4),
                    check_cumulant_examples(0),
                    check_cumulant_roundtrip(4, trials=100, length=8),
                    check_cumulant_oracle(4))


def criterion_9() -> tuple[bool, str]:
    """Catalan layer: cocommutativity, dual product laws, the monomial
    embedding, and the ribbon product re-verified against expansion."""
    return _combine(check_p_cocommutative(5),
                    check_m_commutative_associative(4),
                    check_gamma_morphism(4),
                    check_ribbon_triangularity(5),
                    check_ribbon_law(5))


def criterion_10() -> tuple[bool, str]:
    """Series fixed point to degree 6 with commutative image and weights."""
    ok, detail = check_g_series(4)
    report_ok, report = report_g_routes(4)
    return ok and report_ok, f"{detail}; report: {report}"


def criterion_11() -> tuple[bool, str]:
    """Class counts, closure, and quotient well-definedness."""
    return _combine(check_counts_schroder(6),
                    check_schroder_closure(4),
                    check_schroder_quotient(3))


def criterion_12() -> tuple[bool, str]:
    """Matrix realization reproduces the word-level structure maps."""
    return _combine(check_matrix_product(4), check_matrix_coproduct(4),
                    check_matrix_parkize(4), check_word_matrices(4))


def criterion_13() -> tuple[bool, str]:
    """Freeness: monomial dimensions, generator series, primitives."""
    return _combine(check_counts_free_dimension(5),
                    check_counts_lie(6),
                    check_s_primitive(4))


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
            criterion_11, criterion_12, criterion_13)
