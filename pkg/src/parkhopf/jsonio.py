"""Plain-text and JSON rendering for basis expansions."""
from __future__ import annotations

from fractions import Fraction

from .linear import Lin, sorted_items


def render_word(w) -> str:
    """Digit string when all letters fit in one digit, else comma separated."""
    w = tuple(w)
    if not w:
        return ""
    if all(1 <= x <= 9 for x in w):
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


def parse_word(s: str) -> tuple[int, ...]:
    """Inverse of render_word; raises ValueError on malformed input."""
    s = s.strip()
    if not s:
        raise ValueError("malformed word: empty")
    try:
        if "," in s:
            return tuple(int(p) for p in s.split(","))
        return tuple(int(ch) for ch in s)
    except ValueError:
        raise ValueError(f"malformed word: {s!r}") from None


def format_coeff(c) -> str:
    return str(Fraction(c))


def _signed(parts: list[tuple[int, str]]) -> str:
    chunks: list[str] = []
    for sign, body in parts:
        if not chunks:
            chunks.append(body if sign > 0 else f"-{body}")
        else:
            chunks.append(f"{'+' if sign > 0 else '-'} {body}")
    return " ".join(chunks)


def _term_body(label, symbol: str, render) -> str:
    text = render(label)
    return f"{symbol}{text}" if text else "1"


def lin_to_text(x: Lin, symbol: str, render=render_word) -> str:
    """Deterministic rendering, graded-lexicographic term order."""
    if not x:
        return "0"
    parts = []
    for label, c in sorted_items(x):
        body = _term_body(label, symbol, render)
        mag = abs(c)
        if mag != 1:
            body = f"{format_coeff(mag)}*{body}"
        parts.append((1 if c > 0 else -1, body))
    return _signed(parts)


def tensor_to_text(x: Lin, symbol: str, render=render_word) -> str:
    """Rendering for elements whose labels are pairs."""
    if not x:
        return "0"
    parts = []
    for (u, v), c in sorted_items(x):
        body = (
            f"{_term_body(u, symbol, render)} (x) "
            f"{_term_body(v, symbol, render)}"
        )
        mag = abs(c)
        if mag != 1:
            body = f"{format_coeff(mag)}*{body}"
        parts.append((1 if c > 0 else -1, body))
    return _signed(parts)


def lin_to_json(x: Lin, algebra: str, basis: str, encode=None) -> dict:
    """Schema: {"algebra": ..., "basis": ..., "terms": [{"idx", "c"}, ...]}."""
    if encode is None:
        encode = list
    return {
        "algebra": algebra,
        "basis": basis,
        "terms": [
            {"idx": encode(label), "c": format_coeff(c)}
            for label, c in sorted_items(x)
        ],
    }


def tensor_to_json(x: Lin, algebra: str, basis: str, encode=None) -> dict:
    if encode is None:
        encode = list
    return {
        "algebra": algebra,
        "basis": basis,
        "terms": [
            {"idx": [encode(u), encode(v)], "c": format_coeff(c)}
            for (u, v), c in sorted_items(x)
        ],
    }
