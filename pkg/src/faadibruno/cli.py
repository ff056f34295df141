"""Command-line front end: partition listings, coefficient tables, expansions,
Bell/Stirling output, concrete checks, and the verification suites.

Exit codes: 0 success, 1 verification failure, 2 usage error (including
cap violations).  Output is byte-deterministic for identical flags and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verification
from .bell import StirlingTable, modified_partial_bell
from .coefficients import CrossCheckError, coefficient_table
from .diffalg import formula_expansion, nth_derivative_expansion
from .partitions import DEFAULT_WEIGHT_CAP, CapExceeded, enumerate_partitions
from .polynomials import RationalPolynomial, check_main_theorem

FORMATS = ("json", "csv", "latex", "pretty")


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("value must be non-negative")
    return value


def _positive(text: str) -> int:
    value = _nonneg(text)
    if value == 0:
        raise argparse.ArgumentTypeError("value must be positive")
    return value


def _polynomial(text: str) -> RationalPolynomial:
    try:
        return RationalPolynomial.from_string(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad polynomial literal {text!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="pretty")
    common.add_argument("--seed", type=_nonneg, default=0)
    common.add_argument("--cap", type=_positive, default=DEFAULT_WEIGHT_CAP)
    common.add_argument("--out", metavar="FILE", default=None)

    parser = argparse.ArgumentParser(
        prog="faadibruno",
        description="Exact expansions of higher-order derivatives of "
        "(f o phi) * (g o phi^(s)), with verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", parents=[common], help="list the partitions of n")
    p.add_argument("--n", type=_nonneg, required=True)

    p = sub.add_parser("coeff", parents=[common], help="coefficient table for (n, s)")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--s", type=_nonneg, default=0)
    p.add_argument("--verify", action="store_true", help="cross-check against the recurrence")

    p = sub.add_parser("expand", parents=[common], help="closed-formula expansion for (n, s)")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--s", type=_nonneg, default=0)
    p.add_argument("--verify", action="store_true", help="compare against the symbolic oracle")

    p = sub.add_parser("bell", parents=[common], help="modified partial Bell polynomial")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--k", type=_nonneg, required=True)
    p.add_argument("--r", type=_nonneg, default=0)
    p.add_argument("--s", type=_nonneg, default=0)

    p = sub.add_parser("stirling", parents=[common], help="modified Stirling number table")
    p.add_argument("--n-max", type=_nonneg, required=True)

    p = sub.add_parser("check", parents=[common], help="concrete polynomial check of the expansion")
    p.add_argument("--f", type=_polynomial, required=True, metavar="COEFFS")
    p.add_argument("--g", type=_polynomial, required=True, metavar="COEFFS")
    p.add_argument("--phi", type=_polynomial, required=True, metavar="COEFFS")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--s", type=_nonneg, default=0)

    p = sub.add_parser("verify", parents=[common], help="run every identity suite")
    p.add_argument("--max-n", type=_nonneg, default=5)
    p.add_argument("--max-s", type=_nonneg, default=2)
    p.add_argument("--trials", type=_nonneg, default=20)

    return parser


def _emit(text: str, out: str | None) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        # bytes straight to stdout: byte-deterministic and locale-proof
        sys.stdout.buffer.write(text.encode("utf-8"))
        sys.stdout.flush()
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _json_text(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False)


def _cmd_partitions(args) -> int:
    parts = list(enumerate_partitions(args.n, cap=args.cap))
    if args.format == "json":
        text = _json_text(
            {"n": args.n, "count": len(parts), "partitions": [p.to_json_dict() for p in parts]}
        )
    elif args.format == "csv":
        text = "\n".join(" ".join(str(a) for a in p.parts) for p in parts)
    elif args.format == "latex":
        rows = [("+".join(str(a) for a in p.parts) or "0") for p in parts]
        text = "\n".join(
            [r"\begin{tabular}{l}", *[rf"${row}$ \\" for row in rows], r"\end{tabular}"]
        )
    else:
        text = "\n".join(("+".join(str(a) for a in p.parts) or "0") for p in parts)
    _emit(text, args.out)
    return 0


def _cmd_coeff(args) -> int:
    table = coefficient_table(args.n, args.s, verify=args.verify, cap=args.cap)
    if args.format == "json":
        text = _json_text(table.to_json_dict())
    elif args.format == "csv":
        text = table.to_csv()
    elif args.format == "latex":
        text = table.to_latex()
    else:
        text = table.pretty()
    _emit(text, args.out)
    return 0


def _cmd_expand(args) -> int:
    expansion = formula_expansion(args.n, args.s, cap=args.cap)
    if args.verify:
        oracle = nth_derivative_expansion(args.n, args.s, cap=args.cap)
        if expansion != oracle:
            diff = expansion - oracle
            _emit(
                _json_text(
                    {"equal": False, "n": args.n, "s": args.s, "difference": diff.to_json_list()}
                ),
                args.out,
            )
            return 1
    if args.format == "json":
        text = _json_text({"n": args.n, "s": args.s, "terms": expansion.to_json_list()})
    elif args.format == "latex":
        text = expansion.latex()
    elif args.format == "pretty":
        text = expansion.pretty()
    else:
        print("csv output is not defined for expansions", file=sys.stderr)
        return 2
    _emit(text, args.out)
    return 0


def _cmd_bell(args) -> int:
    poly = modified_partial_bell(args.n, args.k, args.r, args.s, cap=args.cap)
    if args.format == "json":
        text = _json_text(
            {"n": args.n, "k": args.k, "r": args.r, "s": args.s, "terms": poly.to_json_list()}
        )
    elif args.format == "latex":
        text = poly.latex()
    elif args.format == "pretty":
        text = poly.pretty()
    else:
        print("csv output is not defined for Bell polynomials", file=sys.stderr)
        return 2
    _emit(text, args.out)
    return 0


def _cmd_stirling(args) -> int:
    table = StirlingTable.build(args.n_max)
    if args.format == "json":
        text = _json_text(table.to_json_dict())
    elif args.format == "csv":
        text = table.to_csv()
    elif args.format == "latex":
        text = table.to_latex()
    else:
        text = table.pretty()
    _emit(text, args.out)
    return 0


def _cmd_check(args) -> int:
    if args.format not in ("json", "pretty"):
        print("check reports are JSON only", file=sys.stderr)
        return 2
    report = check_main_theorem(args.f, args.g, args.phi, args.n, args.s, cap=args.cap)
    _emit(_json_text(report), args.out)
    return 0 if report["equal"] else 1


def _cmd_verify(args) -> int:
    if args.format not in ("json", "pretty"):
        print("verify reports are JSON only", file=sys.stderr)
        return 2
    report = verification.run_all(
        max_n=args.max_n, max_s=args.max_s, seed=args.seed, trials=args.trials, cap=args.cap
    )
    _emit(_json_text(report), args.out)
    return 0 if report["passed"] else 1


_HANDLERS = {
    "partitions": _cmd_partitions,
    "coeff": _cmd_coeff,
    "expand": _cmd_expand,
    "bell": _cmd_bell,
    "stirling": _cmd_stirling,
    "check": _cmd_check,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CrossCheckError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
