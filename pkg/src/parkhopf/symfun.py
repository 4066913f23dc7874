"""Symmetric functions, quasi-symmetric functions, and their noncommutative
cousins, at the scale needed for parking-function character computations.

Sym carries the m/e/h bases over partition labels with exact conversions:
e <-> h by the alternating convolution recurrence, h -> m by counting
nonnegative-integer matrices with prescribed margins, m -> h by per-degree
matrix inversion.  On top of that sit the star involution (Lagrange
inversion of the complete-series datum), the characters of the symmetric
group acting on (prime) parking functions, free moment/cumulant
conversions, the Hall pairing, and inclusion-exclusion ribbons.

QSym lives on composition labels (M quasi-shuffle, F by refinement sums,
deconcatenation coproduct); NSym on composition labels (S concatenation,
S <-> R by coarsening sums, commutative image S_n -> h_n).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, factorial

from .linear import Lin, extend_bilinear, lin_sum
from .series import SeriesOps, rational_series
from .words import (
    Composition,
    Partition,
    coarsenings,
    compositions,
    distinct_permutations,
    evaluation,
    multinomial,
    nc_of_parking,
    nondecreasing_parking_functions,
    partition_of,
    partitions,
    prime_type,
    refinements,
)

# ---------------------------------------------------------------------------
# the commutative algebra: products of basis labels

def _merge(parts1: Partition, parts2: Partition) -> Partition:
    return tuple(sorted(parts1 + parts2, reverse=True))


def _mul_multiplicative(a: Lin, b: Lin) -> Lin:
    """Product when the basis is multiplicative (e or h): labels merge."""
    out = Lin()
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            out += Lin.basis(_merge(k1, k2), c1 * c2)
    return out


# -- e <-> h ----------------------------------------------------------------

@lru_cache(maxsize=None)
def _e_in_h(n: int) -> Lin:
    """e_n expanded over h-partition labels via e_n = sum (-1)^(k-1) h_k e_(n-k)."""
    if n == 0:
        return Lin.basis(())
    out = Lin()
    for k in range(1, n + 1):
        sign = 1 if k % 2 else -1
        out += _e_in_h(n - k).map_labels(lambda lam, k=k: _merge(lam, (k,))).scale(sign)
    return out


@lru_cache(maxsize=None)
def _h_in_e(n: int) -> Lin:
    if n == 0:
        return Lin.basis(())
    out = Lin()
    for k in range(1, n + 1):
        sign = 1 if k % 2 else -1
        out += _h_in_e(n - k).map_labels(lambda lam, k=k: _merge(lam, (k,))).scale(sign)
    return out


def _product_expand(lam: Partition, factor) -> Lin:
    out = Lin.basis(())
    for part in lam:
        out = _mul_multiplicative(out, factor(part))
    return out


# -- h <-> m ----------------------------------------------------------------

def _bounded_vectors(total: int, bounds):
    """All nonnegative integer vectors below bounds with the given sum."""
    if not bounds:
        if total == 0:
            yield ()
        return
    for first in range(min(total, bounds[0]) + 1):
        for rest in _bounded_vectors(total - first, bounds[1:]):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _margin_matrix_count(rows: Partition, cols: tuple[int, ...]) -> int:
    """Nonnegative integer matrices with the given row and column sums."""
    if not rows:
        return 1 if not any(cols) else 0
    total = 0
    for alloc in _bounded_vectors(rows[0], cols):
        residual = tuple(sorted((c - a for c, a in zip(cols, alloc)), reverse=True))
        total += _margin_matrix_count(rows[1:], residual)
    return total


def _h_label_in_m(lam: Partition) -> Lin:
    n = sum(lam)
    out = Lin()
    for mu in partitions(n):
        c = _margin_matrix_count(lam, mu)
        if c:
            out += Lin.basis(mu, c)
    return out


def _solve_exact(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Inverse of a small square matrix by Gauss-Jordan over the rationals."""
    k = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(k)]
           for i, row in enumerate(matrix)]
    for col in range(k):
        pivot = next(r for r in range(col, k) if aug[r][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


@lru_cache(maxsize=None)
def _m_in_h(n: int) -> dict[Partition, Lin]:
    labels = list(partitions(n))
    mat = [[Fraction(_margin_matrix_count(lam, mu)) for mu in labels] for lam in labels]
    inv = _solve_exact(mat)
    out = {}
    for j, mu in enumerate(labels):
        v = Lin()
        for i, lam in enumerate(labels):
            if inv[i][j]:
                v += Lin.basis(lam, inv[i][j])
        out[mu] = v
    return out


# ---------------------------------------------------------------------------

class Sym:
    """Symmetric function carried in one of the m/e/h bases."""

    __slots__ = ("basis", "vec")
    BASES = ("m", "e", "h")

    def __init__(self, basis: str, vec: Lin):
        if basis not in Sym.BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.vec = vec

    @staticmethod
    def term(basis: str, parts, c=1) -> "Sym":
        parts = tuple(parts)
        if any(p < 1 for p in parts) or list(parts) != sorted(parts, reverse=True):
            raise ValueError(f"not a partition: {parts}")
        return Sym(basis, Lin.basis(parts, c))

    @staticmethod
    def h(parts, c=1) -> "Sym":
        return Sym.term("h", parts, c)

    @staticmethod
    def e(parts, c=1) -> "Sym":
        return Sym.term("e", parts, c)

    @staticmethod
    def m(parts, c=1) -> "Sym":
        return Sym.term("m", parts, c)

    @staticmethod
    def zero() -> "Sym":
        return Sym("h", Lin())

    @staticmethod
    def one() -> "Sym":
        return Sym.h(())

    def to(self, basis: str) -> "Sym":
        if basis == self.basis:
            return self
        if self.basis == "e" and basis in ("h", "m"):
            in_h = lin_sum(
                _product_expand(lam, _e_in_h).scale(c) for lam, c in self.vec.items()
            )
            return Sym("h", in_h).to(basis)
        if self.basis == "h" and basis == "e":
            vec = lin_sum(
                _product_expand(lam, _h_in_e).scale(c) for lam, c in self.vec.items()
            )
            return Sym("e", vec)
        if self.basis == "h" and basis == "m":
            vec = lin_sum(
                _h_label_in_m(lam).scale(c) for lam, c in self.vec.items()
            )
            return Sym("m", vec)
        if self.basis == "m":
            table_by_degree: dict[int, dict[Partition, Lin]] = {}
            vec = Lin()
            for lam, c in self.vec.items():
                n = sum(lam)
                if n not in table_by_degree:
                    table_by_degree[n] = _m_in_h(n)
                vec += table_by_degree[n][lam].scale(c)
            return Sym("h", vec).to(basis)
        raise ValueError(f"no conversion {self.basis} -> {basis}")

    def __add__(self, other: "Sym") -> "Sym":
        return Sym(self.basis, self.vec + other.to(self.basis).vec)

    def __sub__(self, other: "Sym") -> "Sym":
        return Sym(self.basis, self.vec - other.to(self.basis).vec)

    def __neg__(self) -> "Sym":
        return Sym(self.basis, -self.vec)

    def scale(self, c) -> "Sym":
        return Sym(self.basis, self.vec.scale(c))

    def __mul__(self, other):
        if isinstance(other, Sym):
            a, b = self.to("h").vec, other.to("h").vec
            return Sym("h", _mul_multiplicative(a, b))
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Sym) and self.to("h").vec == other.to("h").vec

    def __hash__(self):
        raise TypeError("Sym is not hashable")

    def __repr__(self) -> str:
        items = sorted(self.vec.items(), key=lambda kv: (sum(kv[0]), kv[0]))
        body = " + ".join(f"{c}*{self.basis}{list(lam)}" for lam, c in items) or "0"
        return f"Sym({body})"


def omega(x: Sym) -> Sym:
    """The involution swapping the e and h generator families."""
    if x.basis == "m":
        x = x.to("h")
    return Sym("e" if x.basis == "h" else "h", x.vec)


# ---------------------------------------------------------------------------
# the star involution

def _h_series_ops(order: int) -> SeriesOps:
    return SeriesOps(order, Lin(), Lin.basis(()), _mul_multiplicative)


@lru_cache(maxsize=None)
def _h_star_table(order: int) -> list[Lin]:
    """Coefficients of the compositional inverse of t*(sum_k h_k t^k)."""
    ops = _h_series_ops(order)
    th = [Lin(), Lin.basis(())] + [Lin.basis((k,)) for k in range(1, order)]
    return ops.reversion(th)


def h_star(n: int) -> Sym:
    """Image of h_n under the star involution, by exact series reversion."""
    if n == 0:
        return Sym.one()
    return Sym("h", _h_star_table(n + 1)[n + 1])


def h_star_closed(n: int) -> Sym:
    """Independent route: h_n* = [t^n] E(-t)^(n+1) / (n+1)."""
    if n == 0:
        return Sym.one()
    ops = _h_series_ops(n)
    em = [Lin.basis(())] + [
        _e_in_h(k).scale(1 if k % 2 == 0 else -1) for k in range(1, n + 1)
    ]
    powed = ops.pow(em, n + 1)
    return Sym("h", powed[n].scale(Fraction(1, n + 1)))


def star(x: Sym) -> Sym:
    """Algebra endomorphism determined by h_n -> h_n*; an involution."""
    x = x.to("h")
    out = Lin()
    for lam, c in x.vec.items():
        term = Lin.basis(())
        for part in lam:
            term = _mul_multiplicative(term, h_star(part).vec)
        out += term.scale(c)
    return Sym("h", out)


def e_star(n: int) -> Sym:
    return star(Sym.e((n,)) if n else Sym.one())


# ---------------------------------------------------------------------------
# characters of the symmetric group on parking functions

def prime_characteristic(n: int) -> Sym:
    """Frobenius characteristic of the action on prime parking functions."""
    if n < 1:
        raise ValueError("defined for n >= 1")
    if n == 1:
        return Sym.h((1,))
    return omega(-e_star(n)).to("h")


def prime_characteristic_closed(n: int) -> Sym:
    """Same character by the explicit partition-indexed formula."""
    if n < 1:
        raise ValueError("defined for n >= 1")
    if n == 1:
        return Sym.h((1,))
    out = Lin()
    for lam in partitions(n):
        ln = len(lam)
        binom = comb(n - 1, ln)
        if not binom:
            continue
        mult = factorial(ln)
        for m in _multiplicities(lam).values():
            mult //= factorial(m)
        out += Lin.basis(lam, Fraction(binom * mult, n - 1))
    return Sym("h", out)


def _multiplicities(lam: Partition) -> dict[int, int]:
    out: dict[int, int] = {}
    for p in lam:
        out[p] = out.get(p, 0) + 1
    return out


def type_characteristic(i: Composition) -> Sym:
    """Character of the action on parking functions of a given type."""
    out = Sym.one()
    for part in i:
        out = out * prime_characteristic(part)
    return out


def type_characteristic_by_words(i: Composition) -> Sym:
    """Oracle route: sum h over evaluations of nondecreasing members of the type class."""
    n = sum(i)
    out = Lin()
    for a in nondecreasing_parking_functions(n):
        if prime_type(a) == tuple(i):
            lam = partition_of(p for p in evaluation(a, n) if p)
            out += Lin.basis(lam)
    return Sym("h", out)


def parking_characteristic(n: int) -> Sym:
    out = Sym.zero()
    for i in compositions(n):
        out = out + type_characteristic(i)
    return out


def parking_characteristic_by_words(n: int) -> Sym:
    out = Lin()
    for a in nondecreasing_parking_functions(n):
        lam = partition_of(p for p in evaluation(a, n) if p)
        out += Lin.basis(lam)
    return Sym("h", out)


def prime_eval_count(lam) -> int:
    """Number of prime parking functions whose sorted evaluation equals lam.

    Closed form: the orbit count (n-1 choose l) * l!/(prod mult!) / (n-1)
    times the number of rearrangements of any word with that evaluation.
    """
    lam = partition_of(lam)
    n = sum(lam)
    if n < 1:
        raise ValueError("empty partition")
    if n == 1:
        return 1
    ln = len(lam)
    binom = comb(n - 1, ln)
    if not binom:
        return 0
    orbit_mult = factorial(ln)
    for m in _multiplicities(lam).values():
        orbit_mult //= factorial(m)
    orbits = Fraction(binom * orbit_mult, n - 1)
    total = orbits * multinomial(n, lam)
    assert total.denominator == 1
    return int(total)


# ---------------------------------------------------------------------------
# ribbons and the Hall pairing

def ribbon_h(j: Composition) -> Sym:
    """Inclusion-exclusion ribbon r_J over the h basis."""
    j = tuple(j)
    out = Lin()
    for k in coarsenings(j):
        sign = 1 if (len(j) - len(k)) % 2 == 0 else -1
        out += Lin.basis(partition_of(k), sign)
    return Sym("h", out)


def hall_pairing(x: Sym, y: Sym) -> Fraction:
    """Bilinear pairing with <h_lam, m_mu> = delta."""
    xh = x.to("h").vec
    ym = y.to("m").vec
    return sum((c * ym.coeff(lam) for lam, c in xh.items()), Fraction(0))


# ---------------------------------------------------------------------------
# moments and free cumulants

def _to_fracs(seq) -> list[Fraction]:
    return [Fraction(x) for x in seq]


def moments_to_cumulants(moments) -> list[Fraction]:
    """Free cumulants by compositional inversion of the moment series."""
    ms = _to_fracs(moments)
    n = len(ms)
    ops = rational_series(n + 1)
    f = [Fraction(0), Fraction(1)] + ms
    phi = ops.reversion(f)
    inner = SeriesOps(n, Fraction(0), Fraction(1), lambda a, b: a * b)
    c = inner.reciprocal(phi[1:n + 2])
    return c[1:n + 1]


def cumulants_to_moments(cumulants) -> list[Fraction]:
    rs = _to_fracs(cumulants)
    n = len(rs)
    inner = rational_series(n)
    psi = inner.reciprocal([Fraction(1)] + rs)
    ops = rational_series(n + 1)
    f = ops.reversion([Fraction(0)] + psi)
    return f[2:n + 2]


def cumulants_via_star(moments) -> list[Fraction]:
    """Independent route: R_n = (-1)^n e_n* specialized at h_k -> M_k."""
    ms = _to_fracs(moments)

    def spec(lam: Partition) -> Fraction:
        out = Fraction(1)
        for p in lam:
            out *= ms[p - 1]
        return out

    out = []
    for n in range(1, len(ms) + 1):
        val = sum((c * spec(lam) for lam, c in e_star(n).to("h").vec.items()),
                  Fraction(0))
        out.append(val if n % 2 == 0 else -val)
    return out


def nc_moment(cumulants, n: int) -> Fraction:
    """Moment oracle: sum over non-crossing partitions of products of cumulants."""
    rs = _to_fracs(cumulants)
    if n == 0:
        return Fraction(1)
    total = Fraction(0)
    for pi in nondecreasing_parking_functions(n):
        term = Fraction(1)
        for block in nc_of_parking(pi):
            term *= rs[len(block) - 1]
        total += term
    return total


# ---------------------------------------------------------------------------
# QSym on composition labels

@lru_cache(maxsize=None)
def quasi_shuffle(i: Composition, j: Composition) -> Lin:
    if not i:
        return Lin.basis(tuple(j))
    if not j:
        return Lin.basis(tuple(i))
    out = quasi_shuffle(i[1:], j).map_labels(lambda k: (i[0],) + k)
    out += quasi_shuffle(i, j[1:]).map_labels(lambda k: (j[0],) + k)
    out += quasi_shuffle(i[1:], j[1:]).map_labels(lambda k: (i[0] + j[0],) + k)
    return out


def qs_m_product(x: Lin, y: Lin) -> Lin:
    return extend_bilinear(quasi_shuffle)(x, y)


def qs_f_to_m(x: Lin) -> Lin:
    out = Lin()
    for i, c in x.items():
        for j in refinements(i):
            out += Lin.basis(j, c)
    return out


def qs_m_to_f(x: Lin) -> Lin:
    out = Lin()
    for i, c in x.items():
        for j in refinements(i):
            sign = 1 if (len(j) - len(i)) % 2 == 0 else -1
            out += Lin.basis(j, c * sign)
    return out


def qs_f_product(x: Lin, y: Lin) -> Lin:
    return qs_m_to_f(qs_m_product(qs_f_to_m(x), qs_f_to_m(y)))


def qs_m_coproduct(x: Lin) -> Lin:
    out = Lin()
    for i, c in x.items():
        for k in range(len(i) + 1):
            out += Lin.basis((i[:k], i[k:]), c)
    return out


def qs_f_coproduct(x: Lin) -> Lin:
    split = qs_m_coproduct(qs_f_to_m(x))
    out = Lin()
    for (left, right), c in split.items():
        out += extend_bilinear(lambda a, b: Lin.basis((a, b)))(
            qs_m_to_f(Lin.basis(left)), qs_m_to_f(Lin.basis(right))
        ).scale(c)
    return out


def sym_to_qsym_m(x: Sym) -> Lin:
    """Expand over QSym monomials: m_lam -> sum of its distinct rearrangements."""
    out = Lin()
    for lam, c in x.to("m").vec.items():
        for alpha in distinct_permutations(lam):
            out += Lin.basis(alpha, c)
    return out


# ---------------------------------------------------------------------------
# NSym on composition labels

def ns_product(x: Lin, y: Lin) -> Lin:
    return extend_bilinear(lambda i, j: Lin.basis(tuple(i) + tuple(j)))(x, y)


def ns_s_to_r(x: Lin) -> Lin:
    out = Lin()
    for i, c in x.items():
        for k in coarsenings(i):
            out += Lin.basis(k, c)
    return out


def ns_r_to_s(x: Lin) -> Lin:
    out = Lin()
    for i, c in x.items():
        for k in coarsenings(i):
            sign = 1 if (len(i) - len(k)) % 2 == 0 else -1
            out += Lin.basis(k, c * sign)
    return out


def ns_image(x: Lin) -> Sym:
    """Commutative image S_n -> h_n of an S-basis element."""
    out = Lin()
    for i, c in x.items():
        out += Lin.basis(partition_of(i), c)
    return Sym("h", out)
