"""Command line interface.

Subcommands compute and export the library's objects in stable formats:

  ad        coefficients a_d(0..order)
  alpha     the numerator polynomial alpha_d(q) with its structure report
  phi       the numerator polynomial phi_k(q) with its structure report
  rk        the sequence R_k(0..n_max), recurrence-extended
  quasipoly the fitted quasi-polynomial for R_k
  period    eventual period of R_k modulo M with its witness window
  verify    the full cross-check battery

Formats: `text` (human readable), `json` (bit-exact, coefficients as
decimal strings), `bfile` (OEIS b-file convention, "index value" lines).
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 structure
violation, 4 fit mismatch.  If DURFEE_OUTPUT_DIR is set, relative --output
paths are resolved against it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from math import lcm

from . import cfinite as cf
from . import genfuncs as gf
from . import qseries as qs
from .polyring import IntPolynomial
from .verify import run_battery

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_STRUCTURE = 3
EXIT_FIT = 4


def _resolve_output(path):
    if path is None:
        return None
    base = os.environ.get("DURFEE_OUTPUT_DIR")
    if base and not os.path.isabs(path):
        return os.path.join(base, path)
    return path


def _emit(text: str, output) -> None:
    path = _resolve_output(output)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def _format_sequence(name: str, values, offset: int, fmt: str) -> str:
    tail = values[offset:]
    if fmt == "bfile":
        return "".join(f"{n} {v}\n" for n, v in enumerate(tail, start=offset))
    if fmt == "json":
        obj = {"name": name, "offset": offset, "values": [str(v) for v in tail]}
        return json.dumps(obj, separators=(",", ":")) + "\n"
    return " ".join(str(v) for v in tail) + "\n"


def _poly_report(poly: IntPolynomial, expected_degree: int, expected_leading: int,
                 expected_at_1: int) -> dict:
    return {
        "degree": poly.degree,
        "degree_ok": poly.degree == expected_degree,
        "constant_term": str(poly.constant_term()),
        "constant_term_ok": poly.constant_term() == 1,
        "leading_coeff": str(poly.leading_coefficient()),
        "leading_coeff_ok": poly.leading_coefficient() == expected_leading,
        "value_at_1": str(poly.eval_at(1)),
        "value_at_1_ok": poly.eval_at(1) == expected_at_1,
        "value_at_minus1": str(poly.eval_at(-1)),
    }


def _format_poly(label: str, poly: IntPolynomial, report: dict, fmt: str,
                 key: str, index: int) -> str:
    if fmt == "json":
        obj = {key: index, "polynomial": poly.to_json_obj(), "structure": report}
        return json.dumps(obj, separators=(",", ":")) + "\n"
    lines = [f"{label} = {poly}"]
    for field, value in report.items():
        lines.append(f"  {field}: {value}")
    return "\n".join(lines) + "\n"


def cmd_ad(args) -> int:
    series = qs.ad_series_dp(args.d, args.order)
    _emit(_format_sequence(f"a_{args.d}", list(series.coeffs), args.offset,
                           args.format), args.output)
    return EXIT_OK


def cmd_alpha(args) -> int:
    alpha = qs.alpha_poly(args.d)
    d = args.d
    report = _poly_report(alpha, (d - 1) * d, (-1) ** (d - 1) if d >= 1 else 1, 1)
    _emit(_format_poly(f"alpha_{d}(q)", alpha, report, args.format, "d", d),
          args.output)
    return EXIT_OK


def cmd_phi(args) -> int:
    phi = gf.phi_poly(args.k)
    k = args.k
    report = _poly_report(phi, k * k, (-1) ** (k - 1), 2 ** k)
    _emit(_format_poly(f"phi_{k}(q)", phi, report, args.format, "k", k),
          args.output)
    return EXIT_OK


def cmd_rk(args) -> int:
    values = cf.rk_values(args.k, args.n_max)
    _emit(_format_sequence(f"R_{args.k}", values, args.offset, args.format),
          args.output)
    return EXIT_OK


def _quasi_period(k: int) -> int:
    return 3 if k == 3 else lcm(*range(1, k + 1))


def cmd_quasipoly(args) -> int:
    k = args.k
    delta = _quasi_period(k)
    n0 = k * k + 1
    values = cf.rk_values(k, n0 + (k + 4) * delta + delta)
    fit = cf.quasipoly_fit(values, period=delta, degree_bound=k - 1, valid_from=n0)
    if args.format == "json":
        _emit(fit.to_json() + "\n", args.output)
        return EXIT_OK
    lines = [f"R_{k}(n) for n >= {fit.valid_from}, quasi-period {fit.period}; "
             f"n = {fit.period}*m + nu:"]
    for nu, poly in enumerate(fit.polys):
        terms = " + ".join(f"({c})*m^{i}" if i else f"({c})"
                           for i, c in enumerate(poly))
        lines.append(f"  nu={nu}: {terms}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_period(args) -> int:
    k, modulus = args.k, args.modulus
    period = cf.rk_eventual_period_mod(k, modulus)
    n_min = k * k + 1
    window_end = n_min + 7 * period
    vals = cf.rk_values_mod(k, modulus, window_end)
    confirmed = all(vals[n] == vals[n + period]
                    for n in range(n_min, window_end - period + 1))
    if args.format == "json":
        obj = {"k": k, "modulus": modulus, "period": period,
               "window": [n_min, window_end], "confirmed": confirmed}
        _emit(json.dumps(obj, separators=(",", ":")) + "\n", args.output)
    else:
        _emit(f"R_{k} mod {modulus}: eventual period {period} "
              f"(witness window {n_min} <= n <= {window_end})\n", args.output)
    return EXIT_OK if confirmed else EXIT_VERIFY_FAILED


def cmd_verify(args) -> int:
    checks = run_battery(k_max=args.k_max, d_max=args.d_max)
    hard = [c for c in checks if c.hard]
    soft = [c for c in checks if not c.hard]
    lines = []
    failed = 0
    for c in hard:
        status = "PASS" if c.ok else "FAIL"
        if not c.ok:
            failed += 1
        suffix = f"  [{c.detail}]" if (c.detail and not c.ok) else ""
        lines.append(f"[{status}] {c.name}{suffix}")
    lines.append("")
    lines.append("conjectural observations (never affect exit status):")
    for c in soft:
        status = "agrees" if c.ok else "DISAGREES"
        suffix = f"  [{c.detail}]" if c.detail else ""
        lines.append(f"[{status}] {c.name}{suffix}")
    lines.append("")
    lines.append(f"hard checks: {len(hard) - failed}/{len(hard)} passed")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="durfee",
        description="Exact generating functions, recurrences, and congruences "
                    "for partition counts by Durfee triangle size.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, formats=("text", "json")):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--output", default=None,
                       help="write to this file instead of stdout")

    p = sub.add_parser("ad", help="coefficients a_d(0..order)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--offset", type=int, default=0)
    add_common(p, ("text", "json", "bfile"))
    p.set_defaults(func=cmd_ad)

    p = sub.add_parser("alpha", help="numerator polynomial alpha_d(q)")
    p.add_argument("--d", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_alpha)

    p = sub.add_parser("phi", help="numerator polynomial phi_k(q)")
    p.add_argument("--k", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("rk", help="values R_k(0..n_max)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--offset", type=int, default=0)
    add_common(p, ("text", "json", "bfile"))
    p.set_defaults(func=cmd_rk)

    p = sub.add_parser("quasipoly", help="fitted quasi-polynomial for R_k")
    p.add_argument("--k", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_quasipoly)

    p = sub.add_parser("period", help="eventual period of R_k modulo M")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--modulus", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("verify", help="run the cross-check battery")
    p.add_argument("--k-max", type=int, default=8)
    p.add_argument("--d-max", type=int, default=10)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate(args)
    except ValueError as exc:
        parser.exit(EXIT_USAGE, f"{parser.prog}: error: {exc}\n")
    try:
        return args.func(args)
    except qs.StructureViolation as exc:
        sys.stderr.write(f"structure violation: {exc}\n")
        return EXIT_STRUCTURE
    except cf.FitMismatch as exc:
        sys.stderr.write(f"fit mismatch: {exc}\n")
        return EXIT_FIT
    except cf.WindowTooSmall as exc:
        sys.stderr.write(f"period not confirmed: {exc}\n")
        return EXIT_VERIFY_FAILED


def _validate(args) -> None:
    if getattr(args, "d", None) is not None and args.command == "ad" and args.d < 0:
        raise ValueError("--d must be nonnegative")
    if getattr(args, "d", None) is not None and args.command == "alpha" and args.d < 1:
        raise ValueError("--d must be positive")
    if getattr(args, "k", None) is not None and args.k < 1:
        raise ValueError("--k must be positive")
    if getattr(args, "order", None) is not None and args.order < 0:
        raise ValueError("--order must be nonnegative")
    if getattr(args, "n_max", None) is not None and args.n_max < 0:
        raise ValueError("--n-max must be nonnegative")
    if getattr(args, "offset", None) not in (None, 0) and args.offset < 0:
        raise ValueError("--offset must be nonnegative")
    if getattr(args, "modulus", None) is not None and args.modulus < 2:
        raise ValueError("--modulus must be at least 2")
    if getattr(args, "k_max", None) is not None and args.k_max < 1:
        raise ValueError("--k-max must be positive")
    if getattr(args, "d_max", None) is not None and args.d_max < 1:
        raise ValueError("--d-max must be positive")


if __name__ == "__main__":
    sys.exit(main())
