"""Packed (0,1)-matrix realization of the parking-function algebra.

A word is spread over matrices whose rows cut it into strictly
increasing blocks; the product interleaves rows of two matrices in all
covering ways, and the coproduct splits rows (or, optionally, columns)
followed by matrix parkization.
"""
from __future__ import annotations

from itertools import chain, combinations

from .linear import Lin, extend_bilinear, extend_linear
from .words import Word, defect, is_parking

Matrix = tuple[tuple[int, ...], ...]


def _normalize(m) -> Matrix:
    return tuple(tuple(row) for row in m)


def width(m: Matrix) -> int:
    return len(m[0]) if m else 0


def ones(m: Matrix) -> int:
    return sum(sum(row) for row in m)


def reading(m: Matrix) -> Word:
    """Row-major list of column indices of the ones."""
    return tuple(j + 1 for row in m for j, x in enumerate(row) if x)


def is_packed(m: Matrix) -> bool:
    """Entries 0/1, no zero rows, within-row ones strictly left to right."""
    m = _normalize(m)
    return all(set(row) <= {0, 1} and any(row) for row in m)


def is_word_matrix(m: Matrix) -> bool:
    """Every column holds exactly one 1."""
    m = _normalize(m)
    return bool(m) and all(sum(col) == 1 for col in zip(*m))


def is_parking_matrix(m: Matrix) -> bool:
    return is_parking(reading(m))


def word_matrices(a: Word) -> list[Matrix]:
    """All packed matrices of width len(a) reading back to a.

    Rows are consecutive strictly increasing blocks: cuts are forced at
    every non-ascent and free at every ascent.
    """
    a = tuple(a)
    n = len(a)
    if not a:
        return [()]
    if max(a) > n:
        return []
    ascents = [i for i in range(1, n) if a[i - 1] < a[i]]
    forced = [i for i in range(1, n) if a[i - 1] >= a[i]]
    out = []
    for extra in chain.from_iterable(
        combinations(ascents, k) for k in range(len(ascents) + 1)
    ):
        cuts = sorted(forced + list(extra))
        rows = []
        for lo, hi in zip([0] + cuts, cuts + [n]):
            block = set(a[lo:hi])
            rows.append(tuple(1 if j + 1 in block else 0 for j in range(n)))
        out.append(tuple(rows))
    return sorted(out)


def word_class(a: Word) -> Lin:
    """Sum of all matrices reading back to a."""
    out = Lin()
    for m in word_matrices(a):
        out += Lin.basis(m)
    return out


def augmented_shuffle(p: Matrix, q: Matrix) -> list[Matrix]:
    """Interleave the rows of p and q over a common set of slots.

    Each slot carries a row of p, a row of q, or both merged; columns of
    q land to the right of those of p.
    """
    p, q = _normalize(p), _normalize(q)
    rp, rq, wp, wq = len(p), len(q), width(p), width(q)
    out = set()
    for r in range(max(rp, rq), rp + rq + 1):
        slots = set(range(r))
        for alpha in combinations(range(r), rp):
            for beta in combinations(range(r), rq):
                if set(alpha) | set(beta) != slots:
                    continue
                pmap = dict(zip(alpha, p))
                qmap = dict(zip(beta, q))
                rows = tuple(
                    pmap.get(s, (0,) * wp) + qmap.get(s, (0,) * wq)
                    for s in range(r)
                )
                out.add(rows)
    return sorted(out)


def matrix_parkize(m: Matrix) -> Matrix:
    """Delete the (all-zero) defect column until the reading parks, then
    trim trailing zero columns so the width matches the number of ones."""
    m = _normalize(m)
    while True:
        r = reading(m)
        d = defect(r)
        if d == len(r) + 1:
            break
        assert all(row[d - 1] == 0 for row in m)
        m = tuple(row[: d - 1] + row[d:] for row in m)
    n = ones(m)
    while width(m) > n and not any(row[-1] for row in m):
        m = tuple(row[:-1] for row in m)
    return m


def mp_product(p: Matrix, q: Matrix) -> Lin:
    out = Lin()
    for m in augmented_shuffle(p, q):
        out += Lin.basis(m)
    return out


mp_mul = extend_bilinear(mp_product)


def mp_coproduct(m: Matrix, mode: str = "rows") -> Lin:
    """Split into two matrices and parkize both halves.

    mode "rows" cuts the row list; mode "columns" cuts the column list
    and drops rows emptied by the cut.
    """
    m = _normalize(m)
    out = Lin()
    if mode == "rows":
        for k in range(len(m) + 1):
            out += Lin.basis((matrix_parkize(m[:k]), matrix_parkize(m[k:])))
        return out
    if mode == "columns":
        w = width(m)
        for j in range(w + 1):
            left = tuple(row[:j] for row in m if any(row[:j]))
            right = tuple(row[j:] for row in m if any(row[j:]))
            out += Lin.basis((matrix_parkize(left), matrix_parkize(right)))
        return out
    raise ValueError(f"unknown coproduct mode {mode!r}")


mp_comul = extend_linear(mp_coproduct)


def reading_classes(x: Lin) -> Lin:
    """Collapse a matrix-indexed element to words via the reading map."""
    return x.map_labels(reading)
