"""Command-line front end.

Subcommands:

* ``gen``     emit one polynomial from a family (euler, genocchi, hermite,
              bernstein) as JSON or CSV;
* ``expand``  expand a rational-coefficient polynomial in the Hermite basis;
* ``verify``  sweep one of the three closed-form identities against the
              projection oracle and emit the full comparison report;
* ``table``   tabulate number sequences (euler, genocchi) or whole
              polynomial families (hermite, bernstein) up to an index bound.

All values are emitted as exact "numerator/denominator" strings; output is
deterministic byte for byte. Exit status: 0 on success with all verify cases
matching, 1 when a verify sweep records at least one mismatch, 2 on usage or
parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from .classical_polys import (
    bernstein_poly,
    euler_number,
    euler_poly,
    genocchi_number,
    genocchi_poly,
    hermite_poly,
)
from .exact_arith import format_rational, parse_rational
from .hermite_expansion import VARIANTS, VerificationReport, expand, verify_theorem
from .polynomial import Polynomial

__all__ = ["build_parser", "entrypoint", "main"]

FAMILIES = ("euler", "genocchi", "hermite", "bernstein")
NUMBER_FAMILIES = {"euler": euler_number, "genocchi": genocchi_number}
POLY_FAMILIES = {"euler": euler_poly, "genocchi": genocchi_poly, "hermite": hermite_poly}


class UsageError(Exception):
    """Invalid flags, indices or input syntax; maps to exit status 2."""


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _parse_coeff_list(text: str) -> Polynomial:
    tokens = text.split(",")
    if all(tok.strip() == "" for tok in tokens):
        raise UsageError("empty coefficient list")
    try:
        return Polynomial([parse_rational(tok) for tok in tokens])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _read_poly_file(path: str) -> Polynomial:
    """Accept a JSON polynomial ({"coeffs": [...]}) or (power,value) CSV."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            content = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    stripped = content.strip()
    if stripped.startswith("{"):
        try:
            payload = json.loads(stripped)
            tokens = payload["coeffs"]
        except (json.JSONDecodeError, TypeError, KeyError) as exc:
            raise UsageError(f"{path}: expected a JSON object with a 'coeffs' list") from exc
        if not isinstance(tokens, list):
            raise UsageError(f"{path}: 'coeffs' must be a list")

        def coerce(tok):
            if isinstance(tok, str):
                return parse_rational(tok)
            if isinstance(tok, int) and not isinstance(tok, bool):
                return Fraction(tok)
            raise ValueError(f"bad coefficient {tok!r}: expected an integer or 'a/b' string")

        try:
            return Polynomial([coerce(tok) for tok in tokens])
        except ValueError as exc:
            raise UsageError(f"{path}: {exc}") from exc
    rows = list(csv.reader(io.StringIO(stripped)))
    if rows and rows[0] == ["power", "value"]:
        rows = rows[1:]
    coeffs: dict[int, Fraction] = {}
    try:
        for row in rows:
            if not row:
                continue
            power, value = row
            if int(power) < 0:
                raise ValueError(f"negative power {power}")
            coeffs[int(power)] = parse_rational(value)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc
    if not coeffs:
        raise UsageError(f"{path}: no coefficients found")
    return Polynomial([coeffs.get(i, Fraction(0)) for i in range(max(coeffs) + 1)])


# ----------------------------- subcommands -----------------------------


def _cmd_gen(ns: argparse.Namespace) -> int:
    if ns.n < 0:
        raise UsageError("--n must be >= 0")
    if ns.family == "bernstein":
        if ns.k is None:
            raise UsageError("--k is required for the bernstein family")
        if ns.k < 0 or ns.k > ns.n:
            raise UsageError("k must satisfy 0 <= k <= n")
        poly = bernstein_poly(ns.k, ns.n)
    else:
        if ns.k is not None:
            raise UsageError("--k is only meaningful for the bernstein family")
        poly = POLY_FAMILIES[ns.family](ns.n)
    if ns.format == "json":
        text = _json_text(poly.to_json_dict())
    else:
        text = _csv_text(["power", "value"], [list(row) for row in poly.to_csv_rows()])
    _emit(text, ns.out)
    return 0


def _cmd_expand(ns: argparse.Namespace) -> int:
    if (ns.coeffs is None) == (ns.infile is None):
        raise UsageError("provide exactly one of --coeffs or --in")
    poly = _parse_coeff_list(ns.coeffs) if ns.coeffs is not None else _read_poly_file(ns.infile)
    expansion = expand(poly)
    if ns.format == "json":
        text = _json_text(expansion.to_json_dict())
    else:
        rows = [[k, format_rational(c)] for k, c in enumerate(expansion.coeffs)]
        text = _csv_text(["k", "value"], rows)
    _emit(text, ns.out)
    return 0


def _cmd_verify(ns: argparse.Namespace) -> int:
    if ns.max_n < 0:
        raise UsageError("--max-n must be >= 0")
    if ns.theorem == 3 and ns.max_n < 1:
        raise UsageError("--max-n must be >= 1 for theorem 3")
    if ns.theorem in (1, 2) and ns.variant != "verbatim":
        raise UsageError(f"--variant {ns.variant} is only meaningful for theorem 3")
    if ns.l is not None:
        if ns.theorem != 2:
            raise UsageError("--l is only meaningful for theorem 2")
        if ns.l < 0 or ns.l > ns.max_n:
            raise UsageError("l must satisfy 0 <= l <= max-n")
    variants = list(VARIANTS) if ns.variant == "both" else [ns.variant]
    reports = [verify_theorem(ns.theorem, v, ns.max_n) for v in variants]
    if ns.l is not None:
        reports = [
            VerificationReport(
                theorem=r.theorem,
                variant=r.variant,
                cases=tuple(c for c in r.cases if c.l == ns.l),
            )
            for r in reports
        ]

    if ns.format == "json":
        if len(reports) == 1:
            text = _json_text(reports[0].to_json_dict())
        else:
            text = _json_text([r.to_json_dict() for r in reports])
    else:
        rows = []
        for r in reports:
            for c in r.cases:
                rows.append(
                    [
                        r.theorem,
                        r.variant,
                        c.n,
                        "" if c.l is None else c.l,
                        c.k,
                        format_rational(c.closed),
                        format_rational(c.oracle),
                        str(c.match).lower(),
                    ]
                )
        text = _csv_text(["theorem", "variant", "n", "l", "k", "closed", "oracle", "match"], rows)
    _emit(text, ns.out)
    return 0 if all(r.all_match for r in reports) else 1


def _cmd_table(ns: argparse.Namespace) -> int:
    if ns.max_n < 0:
        raise UsageError("--max-n must be >= 0")
    family = ns.family
    if family in NUMBER_FAMILIES:
        number = NUMBER_FAMILIES[family]
        entries = [{"n": n, "value": format_rational(number(n))} for n in range(ns.max_n + 1)]
        header = ["n", "value"]
        rows = [[e["n"], e["value"]] for e in entries]
    elif family == "hermite":
        entries = [
            {"n": n, "coeffs": [format_rational(c) for c in hermite_poly(n).coeffs]}
            for n in range(ns.max_n + 1)
        ]
        header = ["n", "coeffs"]
        rows = [[e["n"], " ".join(e["coeffs"])] for e in entries]
    else:  # bernstein: every pair 0 <= k <= n <= max_n
        entries = [
            {"n": n, "k": k, "coeffs": [format_rational(c) for c in bernstein_poly(k, n).coeffs]}
            for n in range(ns.max_n + 1)
            for k in range(n + 1)
        ]
        header = ["n", "k", "coeffs"]
        rows = [[e["n"], e["k"], " ".join(e["coeffs"])] for e in entries]
    if ns.format == "json":
        text = _json_text({"family": family, "rows": entries})
    else:
        text = _csv_text(header, rows)
    _emit(text, ns.out)
    return 0


# ----------------------------- parser wiring -----------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hermkit",
        description="Exact polynomial family tables, Hermite-basis expansion, "
        "and closed-form identity verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", metavar="PATH", default=None, help="write to PATH instead of stdout")

    gen = sub.add_parser("gen", help="emit one polynomial from a family")
    gen.add_argument("--family", choices=FAMILIES, required=True)
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, default=None, help="Bernstein lower index (bernstein only)")
    add_output_flags(gen)
    gen.set_defaults(func=_cmd_gen)

    exp = sub.add_parser("expand", help="expand a polynomial in the Hermite basis")
    exp.add_argument("--coeffs", metavar="LIST", default=None,
                     help="comma-separated coefficients, lowest power first (integers or a/b)")
    exp.add_argument("--in", dest="infile", metavar="PATH", default=None,
                     help="read the polynomial from a JSON or power,value CSV file")
    add_output_flags(exp)
    exp.set_defaults(func=_cmd_expand)

    ver = sub.add_parser("verify", help="check one closed-form identity against the oracle")
    ver.add_argument("--theorem", type=int, choices=(1, 2, 3), required=True)
    ver.add_argument("--variant", choices=VARIANTS + ("both",), default="verbatim")
    ver.add_argument("--max-n", dest="max_n", type=int, required=True)
    ver.add_argument("--l", type=int, default=None,
                     help="restrict theorem 2 to one Bernstein lower index")
    add_output_flags(ver)
    ver.set_defaults(func=_cmd_verify)

    tab = sub.add_parser("table", help="tabulate a family up to an index bound")
    tab.add_argument("--family", choices=FAMILIES, required=True)
    tab.add_argument("--max-n", dest="max_n", type=int, required=True)
    add_output_flags(tab)
    tab.set_defaults(func=_cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except UsageError as exc:
        print(f"hermkit: error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
