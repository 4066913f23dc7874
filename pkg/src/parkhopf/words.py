"""Words, parking functions, and the combinatorial maps between them.

Words are tuples of positive integers (letters are 1-based); the empty tuple
is the unique word of length 0.  A word of length n is a parking function
when its nondecreasing rearrangement a satisfies a[i] <= i+1 for every index.
Non-crossing partitions of [n] are stored as tuples of blocks, each block a
sorted tuple, blocks ordered by their minima.

Everything here is pure and side-effect free; the only state is a handful of
memo caches that are safe to share.
"""

from __future__ import annotations

import itertools
from bisect import bisect_left
from collections import Counter
from functools import lru_cache
from math import comb, factorial

Word = tuple[int, ...]
Composition = tuple[int, ...]
Partition = tuple[int, ...]
Blocks = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# parking predicates and parkization

def is_parking(w: Word) -> bool:
    n = len(w)
    counts = [0] * (n + 1)
    for x in w:
        if x < 1:
            raise ValueError(f"letters must be positive integers, got {x}")
        if x > n:
            return False
        counts[x] += 1
    seen = 0
    for b in range(1, n + 1):
        seen += counts[b]
        if seen < b:
            return False
    return True


def defect(w: Word) -> int:
    """Smallest i with fewer than i letters <= i; len(w)+1 when w is parking."""
    n = len(w)
    counts = [0] * (n + 1)
    for x in w:
        if 1 <= x <= n:
            counts[x] += 1
    seen = 0
    for i in range(1, n + 1):
        seen += counts[i]
        if seen < i:
            return i
    return n + 1


def parkize(w: Word) -> Word:
    """Nearest parking function below w: repeatedly decrement letters above the defect.

    Each pass strictly decreases the letter sum, so the loop terminates; the
    result has the same relative order (including ties) as the input.
    """
    w = tuple(w)
    while True:
        d = defect(w)
        if d == len(w) + 1:
            return w
        w = tuple(x - 1 if x > d else x for x in w)


def standardize(w: Word) -> Word:
    """The permutation ranking letters left to right, ties broken by position."""
    order = sorted(range(len(w)), key=lambda i: (w[i], i))
    out = [0] * len(w)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    return tuple(out)


def inverse_permutation(p: Word) -> Word:
    out = [0] * len(p)
    for i, x in enumerate(p, start=1):
        out[x - 1] = i
    return tuple(out)


# ---------------------------------------------------------------------------
# shifted concatenation, shuffles

def shift(w: Word, k: int) -> Word:
    return tuple(x + k for x in w)


def shifted_concat(u: Word, v: Word) -> Word:
    return tuple(u) + shift(v, len(u))


def shuffle(u: Word, v: Word):
    """All interleavings of u and v, one per choice of positions for u."""
    n, m = len(u), len(v)
    for pos in itertools.combinations(range(n + m), n):
        word = [0] * (n + m)
        for i, p in enumerate(pos):
            word[p] = u[i]
        it = iter(v)
        for j in range(n + m):
            if not word[j]:
                word[j] = next(it)
        yield tuple(word)


def shifted_shuffle(u: Word, v: Word) -> list[Word]:
    """u shuffled with v shifted by len(u); C(|u|+|v|, |u|) words, as a list."""
    return list(shuffle(u, shift(v, len(u))))


# ---------------------------------------------------------------------------
# breakpoints, primality, connectedness

def breakpoints(a: Word) -> tuple[int, ...]:
    """Values b such that exactly b letters of the parking function a are <= b."""
    if not is_parking(a):
        raise ValueError("not a parking function")
    n = len(a)
    counts = [0] * (n + 1)
    for x in a:
        counts[x] += 1
    out = []
    seen = 0
    for b in range(1, n + 1):
        seen += counts[b]
        if seen == b:
            out.append(b)
    return tuple(out)


def is_prime(a: Word) -> bool:
    """A parking function is prime when its only breakpoint is its length."""
    if len(a) == 0:
        raise ValueError("primality is undefined for the empty word")
    return breakpoints(a) == (len(a),)


def _split_points(w: Word) -> list[int]:
    # k splits w into w[:k] * (w[k:] - k) exactly when every later letter exceeds k
    n = len(w)
    out = []
    suffix_min = n + 2
    mins = [0] * n
    for i in range(n - 1, -1, -1):
        suffix_min = min(suffix_min, w[i])
        mins[i] = suffix_min
    for k in range(1, n):
        if mins[k] > k:
            out.append(k)
    return out


def is_connected(w: Word) -> bool:
    """True when w admits no factorization under shifted concatenation."""
    if len(w) == 0:
        raise ValueError("connectedness is undefined for the empty word")
    return not _split_points(w)


def connected_factorization(w: Word) -> tuple[Word, ...]:
    """The unique maximal factorization w = w1 * w2 * ... under shifted concatenation.

    Valid split points compose, so cutting at every one of them at once gives
    the finest factorization; each factor is unshifted back to the alphabet
    starting at 1.
    """
    w = tuple(w)
    if not w:
        return ()
    cuts = [0] + _split_points(w) + [len(w)]
    return tuple(
        tuple(x - lo for x in w[lo:hi]) for lo, hi in zip(cuts, cuts[1:])
    )


def prime_type(a: Word) -> Composition:
    """Lengths of the maximal factors of the sorted word; equals the breakpoint gaps."""
    if not is_parking(a):
        raise ValueError("not a parking function")
    if len(a) == 0:
        return ()
    return tuple(len(f) for f in connected_factorization(tuple(sorted(a))))


def mirror(w: Word) -> Word:
    return tuple(reversed(w))


def is_anti_connected(w: Word) -> bool:
    return is_connected(mirror(w))


# ---------------------------------------------------------------------------
# descents and compositions

def descent_composition(w: Word) -> Composition:
    if not w:
        raise ValueError("undefined for empty word")
    parts = []
    run = 1
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            parts.append(run)
            run = 1
        else:
            run += 1
    parts.append(run)
    return tuple(parts)


def compositions(n: int):
    """Compositions of n in lexicographic order."""
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def coarsenings(i: Composition):
    """Compositions obtained from i by summing adjacent parts (i itself included)."""
    r = len(i)
    if r == 0:
        yield ()
        return
    for keep in itertools.product((False, True), repeat=r - 1):
        out = [i[0]]
        for part, cut in zip(i[1:], keep):
            if cut:
                out.append(part)
            else:
                out[-1] += part
        yield tuple(out)


def refinements(i: Composition):
    """Compositions refining i: each part split into an arbitrary composition."""
    if len(i) == 0:
        yield ()
        return
    for head in compositions(i[0]):
        for tail in refinements(i[1:]):
            yield head + tail


def partitions(n: int, bound: int | None = None):
    """Partitions of n, parts weakly decreasing, in reverse-lexicographic order."""
    if n == 0:
        yield ()
        return
    if bound is None:
        bound = n
    for first in range(min(n, bound), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partition_of(i) -> Partition:
    return tuple(sorted(i, reverse=True))


def multinomial(n: int, parts) -> int:
    out = factorial(n)
    for p in parts:
        out //= factorial(p)
    assert sum(parts) == n
    return out


# ---------------------------------------------------------------------------
# evaluations and the successor order on nondecreasing parking functions

def evaluation(w: Word, n: int) -> tuple[int, ...]:
    """Multiplicity vector (m_1, ..., m_n); letters above n are rejected."""
    ev = [0] * n
    for x in w:
        if x > n:
            raise ValueError(f"letter {x} exceeds evaluation length {n}")
        ev[x - 1] += 1
    return tuple(ev)


def word_of_evaluation(ev) -> Word:
    out = []
    for value, m in enumerate(ev, start=1):
        out.extend([value] * m)
    return tuple(out)


def evaluation_composition(w: Word) -> Composition:
    """Nonzero evaluation entries read left to right."""
    return tuple(m for m in evaluation(w, len(w)) if m)


def is_catalan_word(pi: Word) -> bool:
    return tuple(pi) == tuple(sorted(pi)) and is_parking(pi)


def successors(pi: Word) -> tuple[Word, ...]:
    """Merge two consecutive nonzero evaluation entries leftward, one pair at a time."""
    if not is_catalan_word(pi):
        raise ValueError("not a Catalan label")
    n = len(pi)
    ev = list(evaluation(pi, n))
    support = [i for i, m in enumerate(ev) if m]
    out = set()
    for left, right in zip(support, support[1:]):
        merged = ev.copy()
        merged[left] += merged[right]
        merged[right] = 0
        out.add(word_of_evaluation(merged))
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def successor_closure(pi: Word) -> frozenset[Word]:
    """pi together with everything reachable by successor moves."""
    out = {pi}
    stack = [pi]
    while stack:
        for s in successors(stack.pop()):
            if s not in out:
                out.add(s)
                stack.append(s)
    return frozenset(out)


def order_leq(pi: Word, rho: Word) -> bool:
    """True when rho is reachable from pi by successor moves."""
    return rho in successor_closure(pi)


# ---------------------------------------------------------------------------
# non-crossing partitions

def is_noncrossing(blocks: Blocks) -> bool:
    for b, c in itertools.combinations(blocks, 2):
        lo, hi = (b, c) if b[0] < c[0] else (c, b)
        # hi must sit inside a single gap of lo
        i = bisect_left(lo, hi[0])
        if i < len(lo) and hi[-1] > lo[i]:
            return False
    return True


def nc_of_parking(a: Word) -> Blocks:
    """The non-crossing partition whose block minima, repeated by block size, sort to a.

    Blocks are rebuilt greedily from the largest minimum down: each minimum v of
    multiplicity m takes the m-1 smallest unused elements above v.  The parking
    condition guarantees enough room at every step.
    """
    if not is_parking(a):
        raise ValueError("not a parking function")
    n = len(a)
    mult = Counter(a)
    used = [False] * (n + 2)
    blocks = []
    for v in sorted(mult, reverse=True):
        block = [v]
        used[v] = True
        need = mult[v] - 1
        x = v + 1
        while need:
            assert x <= n
            if not used[x]:
                block.append(x)
                used[x] = True
                need -= 1
            x += 1
        blocks.append(tuple(block))
    return tuple(sorted(blocks))


def word_of_nc(blocks: Blocks) -> Word:
    """Sorted word of block minima with multiplicity equal to block size."""
    cover = sorted(x for b in blocks for x in b)
    if cover != list(range(1, len(cover) + 1)):
        raise ValueError("not a partition of an initial segment")
    if not is_noncrossing(blocks):
        raise ValueError("not non-crossing")
    out = []
    for b in blocks:
        out.extend([min(b)] * len(b))
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# enumeration

def parking_functions(n: int):
    """Parking functions of length n, lexicographically."""
    if n == 0:
        yield ()
        return
    word: list[int] = []
    below = [0] * (n + 1)  # below[b] = letters <= b placed so far

    def feasible(k: int) -> bool:
        slack = n - k
        return all(below[b] + slack >= b for b in range(1, n + 1))

    def rec():
        k = len(word)
        if k == n:
            yield tuple(word)
            return
        for letter in range(1, n + 1):
            word.append(letter)
            for b in range(letter, n + 1):
                below[b] += 1
            if feasible(k + 1):
                yield from rec()
            for b in range(letter, n + 1):
                below[b] -= 1
            word.pop()

    yield from rec()


def prime_parking_functions(n: int):
    for a in parking_functions(n):
        if n >= 1 and is_prime(a):
            yield a


def nondecreasing_parking_functions(n: int):
    if n == 0:
        yield ()
        return
    word: list[int] = []

    def rec(lo: int, i: int):
        if i == n:
            yield tuple(word)
            return
        for letter in range(lo, i + 2):
            word.append(letter)
            yield from rec(letter, i + 1)
            word.pop()

    yield from rec(1, 0)


def connected_parking_functions(n: int):
    for a in parking_functions(n):
        if n >= 1 and not _split_points(a):
            yield a


ENUM_KINDS = ("pf", "prime", "nondecreasing", "connected")


def enumerate_class(kind: str, n: int):
    if kind == "pf":
        return parking_functions(n)
    if kind == "prime":
        return prime_parking_functions(n)
    if kind == "nondecreasing":
        return nondecreasing_parking_functions(n)
    if kind == "connected":
        return connected_parking_functions(n)
    raise ValueError(f"unknown class {kind!r}")


@lru_cache(maxsize=None)
def parking_list(n: int) -> tuple[Word, ...]:
    """Cached tuple of all parking functions of length n (intended for n <= 6)."""
    return tuple(parking_functions(n))


# ---------------------------------------------------------------------------
# counting

def pf_count(n: int) -> int:
    return 1 if n == 0 else (n + 1) ** (n - 1)


def ppf_count(n: int) -> int:
    if n == 0:
        return 0
    return (n - 1) ** (n - 1)  # 0**0 == 1 covers n == 1


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def schroder_count(n: int) -> int:
    """Little Schroder numbers 1, 1, 3, 11, 45, 197, 903, ..."""
    if n == 0:
        return 1
    total = sum(comb(n + 1, k) * comb(2 * n - k, n - k) for k in range(n + 1))
    q, r = divmod(total, 2 * n + 2)
    assert r == 0
    return q


def connected_counts(top: int) -> list[int]:
    """Numbers of connected parking functions for n = 1..top.

    The counting series c(t) satisfies P(t) = 1 + c(t) P(t) where P is the
    parking-function series, giving an integer convolution recurrence.
    """
    p = [pf_count(n) for n in range(top + 1)]
    c = [0] * (top + 1)
    for n in range(1, top + 1):
        c[n] = p[n] - sum(c[k] * p[n - k] for k in range(1, n))
    return c[1:]


def class_count(kind: str, n: int) -> int:
    if kind == "pf":
        return pf_count(n)
    if kind == "prime":
        return ppf_count(n)
    if kind == "nondecreasing":
        return catalan(n)
    if kind == "connected":
        return connected_counts(n)[-1] if n >= 1 else 0
    raise ValueError(f"unknown class {kind!r}")


def space_dimension(space: str, n: int) -> int:
    """Graded dimension of a named algebra component."""
    if space in ("PQSym", "PQSym*"):
        return pf_count(n)
    if space in ("CQSym", "CQSym*"):
        return catalan(n)
    if space == "SQSym":
        return schroder_count(n)
    raise ValueError(f"unknown space {space!r}")


def distinct_permutations(w: Word):
    """All distinct rearrangements of w, lexicographically."""
    seq = sorted(w)
    n = len(seq)
    if n == 0:
        yield ()
        return
    while True:
        yield tuple(seq)
        i = n - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1:] = reversed(seq[i + 1:])
