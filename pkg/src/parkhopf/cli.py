"""Command-line interface: enumeration, algebra operations on all bases,
coefficient series, moment/cumulant conversion, and the verification runner.

Exit codes: 0 success, 1 verification failure, 2 safety-bound violation,
3 malformed input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalan, fbasis, gbasis, schroder, symfun, verify, words
from .jsonio import (format_coeff, lin_to_json, lin_to_text, parse_word,
                     render_word, tensor_to_json, tensor_to_text)
from .linear import Lin, sorted_items

ENUM_BOUND = 8
SERIES_BOUND = 12
DEGREE_BOUND = 6
CUMULANT_BOUND = 20


def _bound(default: int) -> int:
    env = os.environ.get("PARKHOPF_MAX_N")
    if env:
        try:
            return int(env)
        except ValueError:
            pass
    return default


def _die(code: int, msg: str) -> int:
    print(f"parkhopf: {msg}", file=sys.stderr)
    return code


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
            fh.write("\n")


# ---------------------------------------------------------------------------
# basis plumbing

def _parse_parking(text: str):
    w = parse_word(text)
    if not words.is_parking(w):
        raise ValueError(f"not a parking function: {text}")
    return w


def _parse_catalan(text: str):
    w = parse_word(text)
    if not words.is_catalan_word(w):
        raise ValueError(f"not a nondecreasing parking function: {text}")
    return w


def _parse_key(text: str):
    return schroder.key_of_word(_parse_parking(text))


def _render_key(key) -> str:
    return render_word(schroder.representative(key))


def _encode_key(key):
    return {"ev": list(key[0]), "recoil": list(key[1])}


BASES = {
    # basis: (algebra, symbol, parse, render, json encoder)
    "F": ("PQSym", "F_", _parse_parking, render_word, list),
    "G": ("PQSym*", "G_", _parse_parking, render_word, list),
    "P": ("CQSym", "P^", _parse_catalan, render_word, list),
    "M": ("CQSym*", "M_", _parse_catalan, render_word, list),
    "R": ("CQSym", "R_", _parse_catalan, render_word, list),
    "Pq": ("SQSym", "Pq_", _parse_key, _render_key, _encode_key),
    "Q": ("SQSym*", "Q_", _parse_key, _render_key, _encode_key),
}

MUL = {
    "F": fbasis.f_product,
    "G": gbasis.g_product,
    "P": lambda a, b: Lin.basis(catalan.p_product(a, b)),
    "M": catalan.m_product,
    "R": catalan.ribbon_product_via_p,
    "Pq": schroder.pq_product,
    "Q": schroder.qq_product,
}

COMUL = {
    "F": fbasis.f_coproduct,
    "G": gbasis.g_coproduct,
    "P": catalan.p_coproduct,
    "M": catalan.m_coproduct,
    "Pq": schroder.pq_coproduct,
}

ANTIPODE = {
    "F": fbasis.f_antipode,
    "G": lambda a: gbasis.g_antipode_lin(Lin.basis(a)),
}


# ---------------------------------------------------------------------------
# subcommands

def cmd_enum(args) -> int:
    bound = _bound(ENUM_BOUND)
    if args.n < 0 or args.n > bound:
        return _die(2, f"enumeration bound exceeded: n={args.n} > {bound}")
    try:
        if args.count_only:
            count = words.class_count(args.kind, args.n)
            _emit(args, str(count),
                  {"kind": args.kind, "n": args.n, "count": count})
            return 0
        listed = sorted(words.enumerate_class(args.kind, args.n))
    except ValueError as exc:
        return _die(3, str(exc))
    if args.format == "json" or args.out:
        payload = {"kind": args.kind, "n": args.n,
                   "words": [list(a) for a in listed]}
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for a in listed:
            print(render_word(a))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, sort_keys=True, indent=2)
            fh.write("\n")
    return 0


def _algebra_common(args, arity: int):
    basis = args.basis
    if basis not in BASES:
        raise ValueError(f"unknown basis {basis!r}")
    algebra, symbol, parse, render, encode = BASES[basis]
    if len(args.labels) != arity:
        raise ValueError(f"expected {arity} label(s), got {len(args.labels)}")
    labels = [parse(t) for t in args.labels]
    return algebra, symbol, labels, render, encode


def cmd_mul(args) -> int:
    try:
        algebra, symbol, labels, render, encode = _algebra_common(args, 2)
        op = MUL.get(args.basis)
        if op is None:
            raise ValueError(f"product not available in basis {args.basis}")
        result = op(*labels)
    except ValueError as exc:
        return _die(3, str(exc))
    _emit(args, lin_to_text(result, symbol, render),
          lin_to_json(result, algebra, args.basis, encode))
    return 0


def cmd_comul(args) -> int:
    try:
        algebra, symbol, labels, render, encode = _algebra_common(args, 1)
        op = COMUL.get(args.basis)
        if op is None:
            raise ValueError(f"coproduct not available in basis {args.basis}")
        result = op(labels[0])
    except ValueError as exc:
        return _die(3, str(exc))
    _emit(args, tensor_to_text(result, symbol, render),
          tensor_to_json(result, algebra, args.basis, encode))
    return 0


def cmd_antipode(args) -> int:
    try:
        algebra, symbol, labels, render, encode = _algebra_common(args, 1)
        op = ANTIPODE.get(args.basis)
        if op is None:
            raise ValueError(f"antipode not available in basis {args.basis}")
        result = op(labels[0])
    except ValueError as exc:
        return _die(3, str(exc))
    _emit(args, lin_to_text(result, symbol, render),
          lin_to_json(result, algebra, args.basis, encode))
    return 0


def cmd_series(args) -> int:
    bound = _bound(SERIES_BOUND)
    if args.N < 0 or args.N > bound:
        return _die(2, f"series bound exceeded: N={args.N} > {bound}")
    n = args.N
    if args.which == "connected":
        coeffs = words.connected_counts(n)
    elif args.which == "lie":
        coeffs = gbasis.lie_generator_series(n)
    elif args.which == "schroder":
        coeffs = [words.schroder_count(k) for k in range(n + 1)]
    else:  # g
        g = catalan.g_series(n)
        lines = [f"g_{k} = " + lin_to_text(g[k], "S^") for k in range(1, n + 1)]
        payload = {"series": "g", "N": n,
                   "degrees": [lin_to_json(g[k], "NSym", "S")
                               for k in range(1, n + 1)]}
        _emit(args, "\n".join(lines), payload)
        return 0
    _emit(args, " ".join(str(c) for c in coeffs),
          {"series": args.which, "N": n, "coefficients": list(coeffs)})
    return 0


def _parse_rationals(text: str) -> list[Fraction]:
    toks = [t.strip() for t in text.split(",")]
    if not text.strip() or any(not t for t in toks):
        raise ValueError(f"malformed rational list: {text!r}")
    try:
        return [Fraction(t) for t in toks]
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational list: {text!r}") from exc


def cmd_cumulants(args) -> int:
    source = args.moments if args.moments is not None else args.cumulants
    try:
        seq = _parse_rationals(source)
    except ValueError as exc:
        return _die(3, str(exc))
    bound = _bound(CUMULANT_BOUND)
    if len(seq) > bound:
        return _die(2, f"sequence bound exceeded: {len(seq)} > {bound}")
    if args.moments is not None:
        out = symfun.moments_to_cumulants(seq)
        direction = "moments->cumulants"
        moments, cumulants = seq, out
    else:
        out = symfun.cumulants_to_moments(seq)
        direction = "cumulants->moments"
        moments, cumulants = out, seq
    if args.check:
        for n in range(1, len(seq) + 1):
            if symfun.nc_moment(cumulants, n) != moments[n - 1]:
                return _die(1, f"partition oracle mismatch at degree {n}")
    _emit(args, ",".join(format_coeff(c) for c in out),
          {"direction": direction,
           "input": [format_coeff(c) for c in seq],
           "output": [format_coeff(c) for c in out]})
    return 0


def cmd_verify(args) -> int:
    bound = _bound(DEGREE_BOUND)
    if args.max_degree < 0 or args.max_degree > bound:
        return _die(2, f"degree bound exceeded: {args.max_degree} > {bound}")
    if args.suite != "all" and args.suite not in verify.SUITES:
        return _die(3, f"unknown suite {args.suite!r}")
    results = verify.run(args.suite, args.max_degree)
    lines = []
    failed = 0
    for r in results:
        if r.kind == "report":
            lines.append(f"REPORT {r.suite}/{r.name}: {r.detail}")
        elif r.ok:
            lines.append(f"PASS   {r.suite}/{r.name}")
        else:
            failed += 1
            lines.append(f"FAIL   {r.suite}/{r.name}: {r.detail}")
    checks = sum(1 for r in results if r.kind == "check")
    lines.append(f"{checks - failed}/{checks} checks passed")
    payload = {"suite": args.suite, "max_degree": args.max_degree,
               "results": [{"suite": r.suite, "name": r.name, "ok": r.ok,
                            "kind": r.kind, "detail": r.detail}
                           for r in results]}
    _emit(args, "\n".join(lines), payload)
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", metavar="FILE.json", default=None)

    top = argparse.ArgumentParser(
        prog="parkhopf",
        description="Exact computations in the parking-function Hopf algebras.")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", parents=[common],
                       help="enumerate a class of parking functions")
    p.add_argument("kind", choices=words.ENUM_KINDS)
    p.add_argument("n", type=int)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(fn=cmd_enum)

    for name, fn, nargs in (("mul", cmd_mul, 2), ("comul", cmd_comul, 1),
                            ("antipode", cmd_antipode, 1)):
        p = sub.add_parser(name, parents=[common],
                           help=f"{name} in a chosen basis")
        p.add_argument("--basis", choices=sorted(BASES), default="F")
        p.add_argument("labels", nargs=nargs, metavar="WORD")
        p.set_defaults(fn=fn)

    p = sub.add_parser("series", parents=[common],
                       help="print coefficient series")
    p.add_argument("which", choices=("connected", "lie", "schroder", "g"))
    p.add_argument("N", type=int)
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("cumulants", parents=[common],
                       help="convert between moments and free cumulants")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--moments")
    group.add_argument("--cumulants")
    p.add_argument("--check", action="store_true",
                   help="also replay the conversion through the "
                        "noncrossing-partition sum formula")
    p.set_defaults(fn=cmd_cumulants)

    p = sub.add_parser("verify", parents=[common],
                       help="run the verification suites")
    p.add_argument("--suite", default="all",
                   choices=("all",) + verify.SUITES)
    p.add_argument("--max-degree", type=int, default=4)
    p.set_defaults(fn=cmd_verify)

    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
