"""Command-line front end.

Subcommands:

* ``expand EXPR``       print coefficients of a product/theta expression
* ``verify``            run registry entries and report pass/fail
* ``scan K``            empirically hunt for vanishing residue classes
* ``oracle-diff K``     compare the fold oracle against the product form
* ``list``              list registry entries

Text output is byte-deterministic (timings appear only in JSONL reports).
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import modtables
from .oracles import signed_series
from .registry import CongruenceFamily, all_entries
from .series import TruncatedSeries, eq_upto
from .theta import MonomialArg, chi, eta_quotient, f_minus, phi, psi, theta_f
from .verify import run, select

_ARG_PATTERN = r"-?q(?:\^\d+)?"


class UsageError(Exception):
    pass


def _parse_expression(text: str, precision: int) -> TruncatedSeries:
    """Parse ``phi(q)``, ``psi(-q^3)``, ``chi(q)``, ``f(6)``, ``theta(q,q^3)``,
    ``eta{1:-1,2:3}`` or ``A_k(7)`` into a truncated series."""
    compact = re.sub(r"\s+", "", text)
    m = re.fullmatch(rf"(phi|psi|chi)\(({_ARG_PATTERN})\)", compact)
    if m:
        builder = {"phi": phi, "psi": psi, "chi": chi}[m.group(1)]
        return builder(MonomialArg.from_text(m.group(2)), precision)
    m = re.fullmatch(r"f\((\d+)\)", compact)
    if m:
        return f_minus(int(m.group(1)), precision)
    m = re.fullmatch(rf"theta\(({_ARG_PATTERN}),({_ARG_PATTERN})\)", compact)
    if m:
        return theta_f(
            MonomialArg.from_text(m.group(1)), MonomialArg.from_text(m.group(2)), precision
        )
    m = re.fullmatch(r"eta\{([^{}]*)\}", compact)
    if m:
        factors: dict[int, int] = {}
        for pair in filter(None, m.group(1).split(",")):
            km = re.fullmatch(r"(\d+):(-?\d+)", pair)
            if not km:
                raise UsageError(f"bad eta factor {pair!r}")
            factors[int(km.group(1))] = int(km.group(2))
        if not factors:
            raise UsageError("eta expression needs at least one factor")
        return eta_quotient(factors, precision)
    m = re.fullmatch(r"A_k\((\d+)\)", compact)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise UsageError("A_k needs k >= 1")
        return signed_series(k, precision)
    raise UsageError(f"cannot parse expression {text!r}")


def _cmd_expand(args: argparse.Namespace) -> tuple[str, int]:
    precision = 50 if args.precision is None else args.precision
    series = _parse_expression(args.expression, precision)
    if args.mod is not None:
        series = series.reduce_mod(args.mod)
    if args.format == "jsonl":
        lines = [
            json.dumps({"n": n, "coeff": c, "mod": series.modulus}) for n, c in enumerate(series)
        ]
        return "\n".join(lines) + "\n", 0
    return series.to_text(), 0


def _cmd_verify(args: argparse.Namespace) -> tuple[str, int]:
    matched = select(args.filter)
    if not matched:
        raise UsageError("no entries matched")
    reports = run(pattern=args.filter, precision=args.precision, n_max=args.n_max)
    if args.format == "jsonl":
        body = "\n".join(json.dumps(r.to_dict()) for r in reports) + "\n"
    else:
        lines = []
        for r in reports:
            line = f"{r.id}: {r.status.upper()} [{r.mode}] {r.precision_or_range}"
            if r.first_failure is not None:
                f = r.first_failure
                line += (
                    f"; first failure at index {f['index']}: "
                    f"expected {f['expected']}, got {f['got']}"
                )
            lines.append(line)
        npass = sum(r.passed for r in reports)
        lines.append(f"passed {npass}/{len(reports)}")
        body = "\n".join(lines) + "\n"
    return body, 0 if all(r.passed for r in reports) else 1


def _cmd_scan(args: argparse.Namespace) -> tuple[str, int]:
    n_max = 1000 if args.n_max is None else args.n_max
    k, m, period = args.k, args.mod, args.period
    if k < 1 or m < 2 or period < 1:
        raise UsageError("scan needs k >= 1, mod >= 2, period >= 1")
    table = modtables.signed_table_mod(k, m, period * n_max + period - 1)
    lines = [f"scan A_{k} mod {m}, period {period}, n<={n_max}"]
    found = []
    for r in range(period):
        if all(int(table[period * i + r]) == 0 for i in range(n_max + 1)):
            found.append(r)
            lines.append(f"residue {r}: vanishes for all n<={n_max} (empirical, not certified)")
    if not found:
        lines.append("no vanishing residues")
    return "\n".join(lines) + "\n", 0


def _cmd_oracle_diff(args: argparse.Namespace) -> tuple[str, int]:
    precision = 200 if args.precision is None else args.precision
    k = args.k
    if k < 1:
        raise UsageError("oracle-diff needs k >= 1")
    oracle = signed_series(k, precision)
    product = chi(MonomialArg(-1, 1), precision) * chi(MonomialArg(-1, k), precision)
    diff = eq_upto(oracle, product, precision)
    if diff.equal:
        return f"identical through N={precision}\n", 0
    return (
        f"first divergence at index {diff.index}: "
        f"oracle {diff.left}, product {diff.right}\n"
    ), 1


def _cmd_list(args: argparse.Namespace) -> tuple[str, int]:
    entries = sorted(all_entries(), key=lambda e: e.id)
    if args.filter is not None:
        from fnmatch import fnmatch

        entries = [e for e in entries if fnmatch(e.id, args.filter)]
    lines = []
    for e in entries:
        kind = "family" if isinstance(e, CongruenceFamily) else "identity"
        if e.expect_failure:
            kind += " control"
        lines.append(f"{e.id}\t{kind}\t{e.description}")
    if not lines:
        raise UsageError("no entries matched")
    return "\n".join(lines) + "\n", 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qdissect",
        description="expand, dissect and verify signed k-colored partition series",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, fmt: bool = False) -> None:
        p.add_argument("-N", "--precision", type=int, default=None, help="truncation order")
        p.add_argument("--out", default=None, help="write output to this file")
        if fmt:
            p.add_argument("--format", choices=("text", "jsonl"), default="text")

    p_expand = sub.add_parser("expand", help="print coefficients of an expression")
    p_expand.add_argument("expression")
    p_expand.add_argument("--mod", type=int, default=None, help="reduce coefficients mod m")
    add_common(p_expand, fmt=True)
    p_expand.set_defaults(func=_cmd_expand)

    p_verify = sub.add_parser("verify", help="run registry verifications")
    p_verify.add_argument("--filter", default=None, help="glob over entry ids")
    p_verify.add_argument("--n-max", type=int, default=None, help="override family ranges")
    add_common(p_verify, fmt=True)
    p_verify.set_defaults(func=_cmd_verify)

    p_scan = sub.add_parser("scan", help="search residue classes that vanish mod m")
    p_scan.add_argument("k", type=int)
    p_scan.add_argument("--mod", type=int, required=True)
    p_scan.add_argument("--period", type=int, required=True)
    p_scan.add_argument("--n-max", type=int, default=None)
    p_scan.add_argument("--out", default=None)
    p_scan.set_defaults(func=_cmd_scan)

    p_diff = sub.add_parser("oracle-diff", help="fold oracle vs product expansion")
    p_diff.add_argument("k", type=int)
    add_common(p_diff)
    p_diff.set_defaults(func=_cmd_oracle_diff)

    p_list = sub.add_parser("list", help="list registry entries")
    p_list.add_argument("--filter", default=None, help="glob over entry ids")
    p_list.add_argument("--out", default=None)
    p_list.set_defaults(func=_cmd_list)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        body, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    out = getattr(args, "out", None)
    if out:
        Path(out).write_text(body)
    else:
        sys.stdout.write(body)
    return code


if __name__ == "__main__":
    sys.exit(main())
