"""Free modules over the rationals with hashable basis labels.

A Lin is an immutable-ish sparse vector: a dict from label to nonzero
Fraction.  Labels can be anything hashable — words, pairs of words for tensor
squares, compositions — so every algebra in the package shares this one class
and the handful of free functions below.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Any, Callable, Iterable, Iterator

Scalar = Fraction
Label = Any


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"non-exact coefficient {c!r}")


class Lin:
    """Finite rational linear combination of basis labels."""

    __slots__ = ("_t",)

    def __init__(self, terms: dict[Label, Fraction] | None = None):
        self._t: dict[Label, Fraction] = {}
        if terms:
            for k, c in terms.items():
                c = _coerce(c)
                if c:
                    self._t[k] = c

    @staticmethod
    def basis(label: Label, c=1) -> "Lin":
        return Lin({label: _coerce(c)})

    @staticmethod
    def zero() -> "Lin":
        return Lin()

    # -- container protocol ------------------------------------------------

    def coeff(self, label: Label) -> Fraction:
        return self._t.get(label, Fraction(0))

    def items(self) -> Iterator[tuple[Label, Fraction]]:
        return iter(self._t.items())

    def labels(self):
        return self._t.keys()

    def __len__(self) -> int:
        return len(self._t)

    def __bool__(self) -> bool:
        return bool(self._t)

    def __iter__(self):
        return iter(self._t)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "Lin") -> "Lin":
        out = dict(self._t)
        for k, c in other._t.items():
            s = out.get(k, Fraction(0)) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        r = Lin()
        r._t = out
        return r

    def __neg__(self) -> "Lin":
        r = Lin()
        r._t = {k: -c for k, c in self._t.items()}
        return r

    def __sub__(self, other: "Lin") -> "Lin":
        return self + (-other)

    def scale(self, c) -> "Lin":
        c = _coerce(c)
        r = Lin()
        if c:
            r._t = {k: v * c for k, v in self._t.items()}
        return r

    def __mul__(self, c):
        if isinstance(c, (int, Fraction, Rational)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, Lin) and self._t == other._t

    def __hash__(self):
        raise TypeError("Lin is not hashable")

    def __repr__(self) -> str:
        if not self._t:
            return "Lin(0)"
        parts = ", ".join(f"{k!r}: {c}" for k, c in sorted_items(self))
        return f"Lin({{{parts}}})"

    def map_labels(self, f: Callable[[Label], Label]) -> "Lin":
        """Relabel basis elements, collecting collisions."""
        out = Lin()
        for k, c in self._t.items():
            out += Lin.basis(f(k), c)
        return out

    def support_sorted(self, key=None):
        return sorted(self._t, key=key)


def lin_sum(items: Iterable[Lin]) -> Lin:
    out = Lin()
    for x in items:
        out += x
    return out


def term_key(label) -> tuple:
    """Graded-lexicographic sort key for word-like or pair-of-words labels."""
    if isinstance(label, tuple) and label and isinstance(label[0], tuple):
        return tuple(term_key(part) for part in label)
    return (len(label), label) if isinstance(label, tuple) else (0, label)


def sorted_items(v: Lin) -> list[tuple[Label, Fraction]]:
    return sorted(v.items(), key=lambda kv: term_key(kv[0]))


def extend_linear(f: Callable[[Label], Lin]) -> Callable[[Lin], Lin]:
    def ext(v: Lin) -> Lin:
        out = Lin()
        for k, c in v.items():
            out += f(k).scale(c)
        return out

    return ext


def extend_bilinear(f: Callable[[Label, Label], Lin]) -> Callable[[Lin, Lin], Lin]:
    def ext(u: Lin, v: Lin) -> Lin:
        out = Lin()
        for k1, c1 in u.items():
            for k2, c2 in v.items():
                out += f(k1, k2).scale(c1 * c2)
        return out

    return ext


def tensor(u: Lin, v: Lin) -> Lin:
    """Tensor product; labels become (label_u, label_v) pairs."""
    out = Lin()
    acc = out._t
    for k1, c1 in u.items():
        for k2, c2 in v.items():
            key = (k1, k2)
            s = acc.get(key, Fraction(0)) + c1 * c2
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
    return out


def dual_pairing(u: Lin, v: Lin) -> Fraction:
    """<u, v> treating equal labels as dual pairs."""
    small, big = (u, v) if len(u) <= len(v) else (v, u)
    return sum((c * big.coeff(k) for k, c in small.items()), Fraction(0))


def tensor_mul(mul: Callable[[Label, Label], Lin]) -> Callable[[Lin, Lin], Lin]:
    """Componentwise product on tensor squares: (a(x)b)(c(x)d) = ac (x) bd."""

    def prod(x: Lin, y: Lin) -> Lin:
        out = Lin()
        for (a1, a2), c1 in x.items():
            for (b1, b2), c2 in y.items():
                out += tensor(mul(a1, b1), mul(a2, b2)).scale(c1 * c2)
        return out

    return prod


def tensor_map(left: Callable[[Label], Lin], right: Callable[[Label], Lin]) -> Callable[[Lin], Lin]:
    """Apply label maps to the two legs of a tensor element."""

    def apply(x: Lin) -> Lin:
        out = Lin()
        for (a, b), c in x.items():
            out += tensor(left(a), right(b)).scale(c)
        return out

    return apply


def invert_unitriangular(
    labels: list[Label],
    expand: Callable[[Label], Lin],
) -> dict[Label, Lin]:
    """Invert a change of basis that is unitriangular in the given label order.

    ``expand(b)`` writes basis element b of the source family in the target
    family; the matrix must have unit diagonal and be triangular with respect
    to the order of ``labels`` (either all strictly-upper or all
    strictly-lower off-diagonal support — the direction is discovered).
    Returns target basis elements written in the source family.
    """
    index = {b: i for i, b in enumerate(labels)}
    rows = {b: expand(b) for b in labels}
    direction = 0  # +1 upper (entries at later labels), -1 lower
    for b in labels:
        row = rows[b]
        if row.coeff(b) != 1:
            raise ValueError("triangularity violated")
        for k in row:
            if k == b:
                continue
            if k not in index:
                raise ValueError("triangularity violated")
            d = 1 if index[k] > index[b] else -1
            if direction == 0:
                direction = d
            elif direction != d:
                raise ValueError("triangularity violated")
    order = reversed(labels) if direction >= 0 else labels
    inv: dict[Label, Lin] = {}
    for b in order:
        v = Lin.basis(b)
        for k, c in rows[b].items():
            if k != b:
                v -= inv[k].scale(c)
        inv[b] = v
    return inv


def graded_dimension(vectors: list[Lin]) -> int:
    """Rank of a finite family of Lin vectors (exact Gaussian elimination).

    Pivots are taken at the minimal remaining label, so every stored
    vector is supported on labels at or above its pivot and each
    reduction strictly raises the working pivot.
    """
    basis: dict[Label, Lin] = {}  # pivot label -> vector with 1 there
    rank = 0
    for v in vectors:
        w = v
        while w:
            pivot = min(w.labels(), key=term_key)
            if pivot in basis:
                w = w - basis[pivot].scale(w.coeff(pivot))
            else:
                basis[pivot] = w.scale(Fraction(1) / w.coeff(pivot))
                rank += 1
                break
    return rank
