"""Command-line interface.

Subcommands: compute, telescope, verify, limits, asym, demo-apery.
Exit codes: 0 success, 1 failed verification, 2 usage or input error,
3 no telescoper up to the requested order, 4 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .documents import (document_bytes, operator_document,
                        parse_operator_document)
from .errors import DocumentError, TelescoperNotFoundError
from .hyperterm import binom_power_term
from .limits import (apery_zeta3_limit, asymptotic_ratio, limit_report,
                     zeta3_reference)
from .sequences import apery_zeta3, coefficient_table
from .telescoper import (analyze_structure, certificate_residual,
                         first_valid_row, verify_certificate, zeilberger)

_EXIT_OK = 0
_EXIT_VERIFY_FAILED = 1
_EXIT_USAGE = 2
_EXIT_NOT_FOUND = 3
_EXIT_INTERNAL = 4


def _default_cache_dir(explicit):
    if explicit:
        return Path(explicit)
    env = os.environ.get("FRANEL_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "franel"


def _write_output(data: bytes, out):
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_bytes(data)
        tmp.replace(path)
    else:
        sys.stdout.write(data.decode("utf-8"))


def _fmt_table(rows, headers):
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers))]
    for row in rows:
        lines.append("  ".join(cell.rjust(widths[i])
                               for i, cell in enumerate(row)))
    return "\n".join(lines) + "\n"


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else \
        "%d/%d" % (q.numerator, q.denominator)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_compute(args) -> int:
    if args.s < 1:
        print("error: --s must be a positive integer", file=sys.stderr)
        return _EXIT_USAGE
    if args.n_max < 0 or args.J < 0:
        print("error: --n-max and --J must be nonnegative", file=sys.stderr)
        return _EXIT_USAGE
    table = coefficient_table(args.s, args.n_max, args.J)
    fmt = args.format or ("json" if args.json else "text")
    if fmt == "json":
        doc = {
            "schema_version": 1,
            "s": table.s,
            "J": table.J,
            "n_max": table.n_max,
            "rows": [[_frac_str(c) for c in row] for row in table.rows],
        }
        data = (json.dumps(doc, sort_keys=True, indent=2,
                           separators=(",", ": ")) + "\n").encode()
    else:
        headers = ["n"] + ["A_%d" % j for j in range(table.J + 1)]
        rows = [[str(n)] + [_frac_str(c) for c in row]
                for n, row in enumerate(table.rows)]
        data = _fmt_table(rows, headers).encode()
    _write_output(data, args.out)
    return _EXIT_OK


def cmd_telescope(args) -> int:
    if args.s < 1 or args.r_max < 1:
        print("error: --s and --r-max must be positive", file=sys.stderr)
        return _EXIT_USAGE
    cache_dir = _default_cache_dir(args.cache_dir)
    cache_path = cache_dir / ("telescope-s%d-v%s.json"
                              % (args.s, _tool_version()))
    term = binom_power_term(args.s)
    data = op = cert = None
    if cache_path.exists():
        try:
            raw = cache_path.read_bytes()
            s_doc, op_c, cert_c, _ = parse_operator_document(raw)
            if s_doc == args.s and op_c.order <= args.r_max \
                    and verify_certificate(term, op_c, cert_c):
                data, op, cert = raw, op_c, cert_c
        except (DocumentError, OSError) as exc:
            print("warning: ignoring corrupt cache entry: %s" % exc,
                  file=sys.stderr)
    if data is None:
        try:
            op, cert = zeilberger(term, args.r_max, verify=False)
        except TelescoperNotFoundError as exc:
            print("no telescoping operator up to order %d (tried %s)"
                  % (args.r_max, list(exc.orders_tried)), file=sys.stderr)
            return _EXIT_NOT_FOUND
        if not verify_certificate(term, op, cert):
            print("internal error: certificate failed exact verification",
                  file=sys.stderr)
            return _EXIT_INTERNAL
        doc = operator_document(args.s, op, cert, args.r_max)
        data = document_bytes(doc)
        try:
            cache_dir.mkdir(parents=True, exist_ok=True)
            tmp = cache_path.with_name(cache_path.name + ".tmp")
            tmp.write_bytes(data)
            tmp.replace(cache_path)
        except OSError as exc:
            print("warning: could not write cache: %s" % exc,
                  file=sys.stderr)
    report = analyze_structure(op, cert, args.s)
    if args.out:
        _write_output(data, args.out)
    summary = {
        "s": args.s,
        "order": report.order,
        "expected_order": report.expected_order,
        "coefficient_degree": report.coeff_degree,
        "expected_degree": report.expected_degree,
        "denominator_matches": report.denominator_matches,
        "denominator_divides": report.denominator_divides,
        "numerator_k_degree": report.numerator_k_degree,
        "expected_numerator_k_degree": report.expected_numerator_k_degree,
        "denominator_integer_roots_in_n":
            list(report.integer_roots_of_denominator_in_n),
        "first_valid_row": first_valid_row(report),
        "cached_document": str(cache_path),
    }
    if args.json:
        print(json.dumps(summary, sort_keys=True, indent=2))
    else:
        for key, val in summary.items():
            print("%s: %s" % (key, val))
    return _EXIT_OK


def cmd_verify(args) -> int:
    try:
        raw = Path(args.infile).read_bytes()
    except OSError as exc:
        print("error: cannot read %s: %s" % (args.infile, exc),
              file=sys.stderr)
        return _EXIT_USAGE
    try:
        s, op, cert, _ = parse_operator_document(raw)
    except DocumentError as exc:
        print("error: invalid document: %s" % exc, file=sys.stderr)
        return _EXIT_USAGE
    term = binom_power_term(s)
    residual = certificate_residual(term, op, cert)
    if residual.is_zero:
        print("certificate verifies exactly (s=%d, order %d)"
              % (s, op.order))
        return _EXIT_OK
    print("certificate MISMATCH; residual = %r" % residual)
    return _EXIT_VERIFY_FAILED


def cmd_limits(args) -> int:
    if args.s < 1:
        print("error: --s must be a positive integer", file=sys.stderr)
        return _EXIT_USAGE
    if args.precision_bits < 64:
        print("error: --precision-bits must be at least 64", file=sys.stderr)
        return _EXIT_USAGE
    theory_max = (args.s - 1) // 2
    if args.J > theory_max and not args.J_force:
        print("error: --J exceeds floor((s-1)/2) = %d; pass --J-force to "
              "explore anyway" % theory_max, file=sys.stderr)
        return _EXIT_USAGE
    reports = limit_report(args.s, args.n_max, args.J, args.precision_bits,
                           enforce_theory_range=not args.J_force)
    places = min(40, args.precision_bits // 8)
    if args.json:
        payload = []
        for rep in reports:
            item = {
                "s": rep.s, "j": rep.j, "n": rep.n_used,
                "estimate": rep.estimate.decimal(places),
                "target": rep.target.decimal(places),
                "abs_error_upper": str(float(rep.abs_error.abs_upper())),
            }
            if rep.successive_diff_ratio is not None:
                item["successive_diff_ratio"] = str(
                    float(rep.successive_diff_ratio.to_fraction()))
            if rep.normalized_estimate is not None:
                item["normalized_estimate"] = \
                    rep.normalized_estimate.decimal(places)
                item["normalized_target"] = \
                    rep.normalized_target.decimal(places)
            payload.append(item)
        data = (json.dumps(payload, indent=2) + "\n").encode()
    else:
        lines = []
        for rep in reports:
            lines.append("s=%d j=%d n=%d" % (rep.s, rep.j, rep.n_used))
            lines.append("  estimate  %s" % rep.estimate.decimal(places))
            lines.append("  target    %s" % rep.target.decimal(places))
            lines.append("  |error| <= %.3e"
                         % float(rep.abs_error.abs_upper()))
            if rep.successive_diff_ratio is not None:
                lines.append("  successive error ratio ~ %.6f" % float(
                    rep.successive_diff_ratio.to_fraction()))
            if rep.normalized_estimate is not None:
                lines.append("  normalized  %s  (target %s)"
                             % (rep.normalized_estimate.decimal(places),
                                rep.normalized_target.decimal(places)))
        data = ("\n".join(lines) + "\n").encode()
    _write_output(data, args.out)
    return _EXIT_OK


def cmd_asym(args) -> int:
    if args.n < 1 or args.s < 1:
        print("error: --s and --n must be positive", file=sys.stderr)
        return _EXIT_USAGE
    if args.precision_bits < 64:
        print("error: --precision-bits must be at least 64", file=sys.stderr)
        return _EXIT_USAGE
    ratio = asymptotic_ratio(args.s, args.n, args.precision_bits)
    deviation = abs(ratio - 1)
    print("ratio       %s" % ratio.decimal(30))
    print("|ratio - 1| %.6e (error bound %.3e)"
          % (float(deviation.to_fraction()),
             float(deviation.error_fraction())))
    return _EXIT_OK


def cmd_demo_apery(args) -> int:
    if args.n_max < 1:
        print("error: --n-max must be at least 1", file=sys.stderr)
        return _EXIT_USAGE
    pairs = apery_zeta3(args.n_max)
    rows = [[str(p.n), str(p.a), _frac_str(p.b)] for p in pairs]
    sys.stdout.write(_fmt_table(rows, ["n", "A", "B"]))
    places = min(50, args.precision_bits // 6)
    approx = apery_zeta3_limit(args.n_max, args.precision_bits)
    ref = zeta3_reference(args.precision_bits)
    diff = abs(approx - ref)
    print("6 B(n)/A(n) = %s" % approx.decimal(places))
    print("zeta(3) ref = %s" % ref.decimal(places))
    print("|difference| <= %.3e" % float(diff.abs_upper()))
    return _EXIT_OK


def _tool_version() -> str:
    from .documents import TOOL_VERSION
    return TOOL_VERSION


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="machine-readable output")
    common.add_argument("--out", help="write output to this path")
    common.add_argument("--cache-dir",
                        help="cache directory (default $FRANEL_CACHE_DIR "
                             "or ~/.cache/franel)")
    common.add_argument("--precision-bits", type=int, default=256)

    parser = argparse.ArgumentParser(
        prog="franel",
        description="Exact telescoping recurrences, certificates, and "
                    "deformation limits for sums of powers of binomial "
                    "coefficients.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common],
                       help="tabulate the deformation coefficient sequences")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--J", type=int, default=0)
    p.add_argument("--format", choices=["json", "text"])
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("telescope", parents=[common],
                       help="find and verify the telescoping operator")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)
    p.set_defaults(func=cmd_telescope)

    p = sub.add_parser("verify", parents=[common],
                       help="verify an operator document exactly")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("limits", parents=[common],
                       help="limit estimates against exact targets")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--J", type=int, default=1)
    p.add_argument("--J-force", action="store_true",
                   help="allow J beyond the guaranteed range")
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("asym", parents=[common],
                       help="growth-formula ratio check")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser("demo-apery", parents=[common],
                       help="the classical zeta(3) convergents")
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_demo_apery)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else _EXIT_USAGE
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
