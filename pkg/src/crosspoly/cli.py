"""Command-line interface.

Exit status: 0 on success, 1 for invalid input, 2 when a verification fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import ehrhart, identities
from .bijection import forward, inverse
from .colored import (
    NotInDomain,
    enumerate_C,
    parse_colored,
    parse_marked,
    sign,
    theorem_involution,
)
from .numbers import factorial
from .permutation import MalformedInput, parse_cycles
from .report import Report
from .words import EMPTY, NUM, SizeError, count_lattice_points, enumerate_W, parse_tokens, validate_word

MAX_ENUM_D = 8
MAX_OBJECTS = 10**7
EXIT_OK, EXIT_INVALID, EXIT_FAILED = 0, 1, 2


class UsageError(ValueError):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def _dk(args) -> tuple[int, int]:
    if args.d < 1 or not 0 <= args.k <= args.d:
        raise UsageError(f"need d >= 1 and 0 <= k <= d, got d={args.d}, k={args.k}")
    return args.d, args.k


def cmd_coeffs(args) -> int:
    d, k = _dk(args)
    c = ehrhart.coeffs(d, k)
    _emit(args, {"d": d, "k": k, "coeffs": [str(v) for v in c]}, " ".join(map(str, c)))
    return EXIT_OK


def cmd_eval(args) -> int:
    d, k = _dk(args)
    if args.n < 0:
        raise UsageError("n must be nonnegative")
    value = ehrhart.P(d, k, args.n)
    scaled = factorial(d) * value
    _emit(
        args,
        {"d": d, "k": k, "n": args.n, "P": str(value), "scaled": str(scaled)},
        f"P={value} d!P={scaled}",
    )
    return EXIT_OK


def cmd_enumerate(args) -> int:
    d, k = _dk(args)
    if d > MAX_ENUM_D:
        raise UsageError(f"enumeration limited to d <= {MAX_ENUM_D}")
    if args.set == "C":
        if args.j is None or not 0 <= args.j <= d:
            raise UsageError("enumerate C needs --j in 0..d")
        size = ehrhart.coeffs(d, k)[args.j]
        stream = enumerate_C(d, k, args.j)
    else:
        if args.n is None or args.n < 0:
            raise UsageError("enumerate W needs --n >= 0")
        size = factorial(d) * ehrhart.P(d, k, args.n)
        stream = enumerate_W(d, k, args.n)
    if size > MAX_OBJECTS:
        raise UsageError(f"refusing to enumerate {size} objects (limit {MAX_OBJECTS})")
    for obj in stream:
        print(json.dumps(str(obj)) if args.format == "json" else obj)
    return EXIT_OK


def _record(p, labels, w) -> dict:
    return {"permutation": str(p), "labels": list(labels), "word": str(w)}


def cmd_bij(args) -> int:
    if args.direction == "forward":
        if args.perm is None or args.n is None or args.k is None:
            raise UsageError("bij forward needs --perm, --k and --n")
        p = parse_colored(args.perm, args.d, args.k)
        labels = [int(t) for t in args.labels.replace(",", " ").split()] if args.labels else []
        w = forward(p, labels, args.n)
    else:
        if args.word is None:
            raise UsageError("bij inverse needs --word")
        tokens = parse_tokens(args.word)
        d = args.d if args.d is not None else sum(1 for kind, _ in tokens if kind != EMPTY)
        n = args.n if args.n is not None else sum(1 for kind, _ in tokens if kind != NUM)
        k = args.k if args.k is not None else d
        w = validate_word(tokens, d, k, n)
        p, labels = inverse(w)
    record = _record(p, labels, w)
    _emit(args, record, f"{record['permutation']} {record['labels']} <-> {record['word']}")
    return EXIT_OK


def cmd_involution(args) -> int:
    if args.kind == "theorem":
        if args.k is None:
            raise UsageError("involution theorem needs --k")
        p = parse_colored(args.input, args.d, args.k, signed=True)
        q = theorem_involution(p)
        payload = {"input": str(p), "image": str(q), "sign": [sign(p), sign(q)]}
    elif args.kind == "alt-small-k":
        if args.k is None:
            raise UsageError("involution alt-small-k needs --k")
        p = parse_colored(args.input, args.d, args.k)
        q = identities.alt_involution_small_k(p)
        payload = {"input": str(p), "image": str(q), "j": [p.j, q.j]}
    else:
        d = args.d
        if d is None:
            d = max(x for c, _ in parse_cycles(args.input) for x in c) - 1
        m = parse_marked(args.input, d, d)
        q = identities.alt_involution_k_eq_d(m)
        payload = {
            "input": str(m),
            "image": str(q),
            "sign": [identities.marked_sign(m), identities.marked_sign(q)],
        }
    _emit(args, payload, f"{payload['input']} <-> {payload['image']}")
    return EXIT_OK


def _need(args, *names) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"verify {args.what} needs {' '.join(missing)}")


def cmd_verify(args) -> int:
    what = args.what
    if what == "cube":
        _need(args, "d")
        report = ehrhart.cube_identity_check(args.d)
    elif what == "egf":
        _need(args, "d_max")
        report = ehrhart.egf_check(args.d_max, args.j_max if args.j_max is not None else args.d_max)
    else:
        _need(args, "d", "k")
        _dk(args)
        if what == "endpoints":
            report = identities.check_endpoints(args.d, args.k)
        elif what == "alt-sums":
            report = identities.verify_alternating_sums(args.d, args.k)
        elif what == "theorem":
            report = identities.verify_theorem(args.d, args.k)
        elif what == "remark45":
            report = identities.verify_injections(args.d, args.k)
        else:
            _need(args, "n")
            if what == "words-count":
                report = identities.verify_words_count(args.d, args.k, args.n)
            else:
                report = identities.verify_lattice(args.d, args.k, args.n)
    _print_report(args, report)
    return EXIT_OK if report.passed else EXIT_FAILED


def _print_report(args, report: Report) -> None:
    if args.format == "json":
        print(report.to_json())
    else:
        print(report.summary())
        for line in report.details:
            print(f"  {line}")


def cmd_oracle(args) -> int:
    d, k = _dk(args)
    count = count_lattice_points(d, k, args.n)
    _emit(args, {"d": d, "k": k, "n": args.n, "count": str(count)}, str(count))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="crosspoly",
        description="Ehrhart coefficients of cross-polytope pyramids via colored permutations.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", parents=[common], help="scaled Ehrhart coefficients c(d,k,0..d)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("eval", parents=[common], help="P(d,k,n) and d!P(d,k,n)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("enumerate", parents=[common], help="stream C(d,k,j) or W(d,k,n)")
    p.add_argument("set", choices=["C", "W"])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--j", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bij", parents=[common], help="apply the word bijection")
    p.add_argument("direction", choices=["forward", "inverse"])
    p.add_argument("--perm")
    p.add_argument("--labels", help="comma separated circle indices, one per non-final cycle")
    p.add_argument("--word")
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_bij)

    p = sub.add_parser("involution", parents=[common], help="apply one of the involutions")
    p.add_argument("kind", choices=["theorem", "alt-small-k", "alt-k-eq-d"])
    p.add_argument("--input", required=True)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_involution)

    p = sub.add_parser("verify", parents=[common], help="run an identity check")
    p.add_argument(
        "what",
        choices=[
            "endpoints", "alt-sums", "cube", "egf", "theorem", "remark45", "words-count", "lattice",
        ],
    )
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--d-max", type=int)
    p.add_argument("--j-max", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", parents=[common], help="brute-force oracles")
    p.add_argument("which", choices=["lattice"])
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_oracle)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad usage; 2 is reserved for failed verifications
        return EXIT_OK if exc.code == 0 else EXIT_INVALID
    try:
        return args.func(args)
    except (MalformedInput, NotInDomain, UsageError, SizeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
