"""Command line front end: ``weyl-toric {poincare,character,poset,verify}``.

Exit codes: 0 success, 1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import characters, invariants
from .errors import InputError
from .invariants import THREADS_ENV
from .poly import reverse_transform, tutte_eval_poincare
from .poset import all_saturated, build_poset, export
from .roots import positive_roots

EXIT_OK, EXIT_INPUT, EXIT_VERIFY = 0, 1, 2

POINCARE_CAPS = {"closed": 8, "points": 8, "macmeikan": 6, "tutte": 6, "all": 6}
CHARACTER_CAP = 7
POSET_CAP = 6
VERIFY_CAP = 6
VERIFY_FIELDS = (5, 7, 11)


class UsageError(Exception):
    pass


def _check_n(n: int, cap: int, args, flag: str = "--n") -> None:
    if n < 1:
        raise UsageError(f"{flag} must be at least 1")
    if n > cap and not args.unsafe_n:
        raise UsageError(f"{flag} {n} exceeds the cap of {cap}; pass --unsafe-n to lift it")


def _workers(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    return invariants.default_workers()


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)


def cmd_poincare(args, out) -> int:
    _check_n(args.n, POINCARE_CAPS[args.method], args)
    n, workers = args.n, _workers(args)
    if args.method == "all":
        report = invariants.verify_all(n, workers)
        if args.format == "json":
            print(_dump(report.to_dict()), file=out)
        else:
            for name in ("closed_form", "macmeikan", "point_count", "tutte"):
                print(f"{name:12s} {getattr(report, name)}", file=out)
            print(f"{'P(1)':12s} {report.euler_at_1} (expected {report.euler_expected})", file=out)
            print("agree" if report.passed else "MISMATCH", file=out)
            for line in report.mismatches():
                print(f"  {line}", file=out)
        return EXIT_OK if report.passed else EXIT_VERIFY

    if args.method == "closed":
        poly = invariants.poincare_closed_form(n)
    elif args.method == "macmeikan":
        poly = invariants.poincare_macmeikan(build_poset(positive_roots(n)))
    elif args.method == "points":
        poly = reverse_transform(invariants.point_count_poly(n), n)
    else:
        poly = tutte_eval_poincare(invariants.arithmetic_tutte(positive_roots(n), workers), n)
    if args.format == "json":
        print(_dump({"n": n, "method": args.method, "poincare": str(poly)}), file=out)
    else:
        print(poly, file=out)
    return EXIT_OK


def cmd_character(args, out) -> int:
    _check_n(args.n, CHARACTER_CAP, args)
    n = args.n
    report = characters.verify_theorem1(n)
    if args.format == "json":
        print(_dump(characters.character_report(n)), file=out)
        return EXIT_OK if report.passed else EXIT_VERIFY

    print(f"{'class':>16s} {'size':>8s} {'total':>10s} {'Reg':>10s} {'Ind':>8s} {'Reg+n*Ind':>10s}", file=out)
    for row in report.rows:
        print(
            f"{characters.label(row.cls):>16s} {characters.class_size(row.cls):>8d} "
            f"{str(row.total):>10s} {str(row.regular):>10s} {str(row.induced):>8s} "
            f"{str(row.rhs):>10s}{'' if row.ok else '  <-- mismatch'}",
            file=out,
        )
    print(f"theorem1: {'pass' if report.passed else 'FAIL'}", file=out)
    for note in report.notes():
        print(f"note: {note}", file=out)
    mult = characters.decompose(characters.total_character(n))
    print("irreducible multiplicities:", file=out)
    for lam, v in mult.items():
        print(f"  {characters.label(lam):>16s} {v}", file=out)
    return EXIT_OK if report.passed else EXIT_VERIFY


def cmd_poset(args, out) -> int:
    _check_n(args.n, POSET_CAP, args)
    poset = build_poset(positive_roots(args.n))
    text = export(poset, args.format)
    summary = f"{len(poset)} elements, {'all saturated' if all_saturated(poset) else 'NOT all saturated'}"
    if args.output == "-":
        out.write(text)
        # keep stdout machine-readable when the export itself goes there
        print(summary, file=sys.stderr)
        return EXIT_OK
    try:
        with open(args.output, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc}") from exc
    print(summary, file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    _check_n(args.max_n, VERIFY_CAP, args, "--max-n")
    workers = _workers(args)
    failures = []

    def check(name: str, ok: bool, detail: str = "") -> None:
        print(f"{'PASS' if ok else 'FAIL'} {name}{': ' + detail if detail and not ok else ''}", file=out)
        if not ok:
            failures.append(name)

    for n in range(1, args.max_n + 1):
        report = invariants.verify_all(n, workers)
        check(f"poincare n={n} four routes agree, P(1)={report.euler_at_1}",
              report.passed, "; ".join(report.mismatches()))
        t1 = characters.verify_theorem1(n)
        check(f"theorem1 n={n}", t1.passed,
              ", ".join(characters.label(r.cls) for r in t1.failures))
    for n in range(1, min(3, args.max_n) + 1):
        expected = invariants.point_count_poly(n)
        for q in VERIFY_FIELDS:
            got = invariants.brute_force_point_count(n, q, workers=workers)
            check(f"point count n={n} q={q} = {got}", got == expected(q), f"expected {expected(q)}")
    if failures:
        print(f"{len(failures)} check(s) failed: {', '.join(failures)}", file=out)
        return EXIT_VERIFY
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None,
                        help=f"worker processes for enumeration kernels (fallback: ${THREADS_ENV})")
    common.add_argument("--unsafe-n", action="store_true", help="lift the per-command caps on n")

    parser = argparse.ArgumentParser(
        prog="weyl-toric",
        description="Cohomology of the toric arrangement complement of type A_n.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poincare", parents=[common], help="Poincaré polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=list(POINCARE_CAPS), default="closed")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_poincare)

    p = sub.add_parser("character", parents=[common], help="total character and Theorem 1 check")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_character)

    p = sub.add_parser("poset", parents=[common], help="export the intersection poset")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["json", "dot"], default="json")
    p.add_argument("-o", "--output", default="-", help="output path, '-' for standard output")
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("verify", parents=[common], help="run every cross-check")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args, out)
    except (UsageError, InputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
