"""bigamma command line: eval, table, verify, series.

Exit codes: 0 ok, 1 usage, 2 domain or pole error.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import re
import sys
from dataclasses import asdict, dataclass, replace
from typing import Optional

from . import series
from .gamma2 import METHODS, gamma_xz
from .policy import DomainError, PoleError, default_policy
from .verify import UnknownIdentityError, overall_pass, run_all

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_REAL_RE = re.compile(rf"^(?P<re>[+-]?{_NUM})$")
_IMAG_RE = re.compile(rf"^(?P<im>[+-]?(?:{_NUM})?)[ij]$")
_FULL_RE = re.compile(rf"^(?P<re>[+-]?{_NUM})(?P<im>[+-](?:{_NUM})?)[ij]$")


class UsageError(Exception):
    pass


def parse_complex(text: str) -> complex:
    """Parse 'a', 'bi', 'a+bi', 'a-bi', 'i', '-i' (j accepted for i)."""
    t = text.strip()
    m = _REAL_RE.match(t)
    if m:
        return complex(float(m.group("re")), 0.0)
    m = _IMAG_RE.match(t) or _FULL_RE.match(t)
    if not m:
        raise UsageError(f"not a complex number: {text!r}")
    re_part = float(m.groupdict().get("re") or 0.0)
    im_text = m.group("im")
    if im_text in ("", "+"):
        im = 1.0
    elif im_text == "-":
        im = -1.0
    else:
        im = float(im_text)
    return complex(re_part, im)


def _g(v: float) -> str:
    """17 significant digits, round-trip safe."""
    return format(v, ".17g")


def _fmt_complex(z: complex) -> str:
    if z.imag == 0:
        return _g(z.real)
    sign = "+" if z.imag >= 0 else "-"
    return f"{_g(z.real)}{sign}{_g(abs(z.imag))}i"


@dataclass
class OutputRecord:
    x_re: float
    x_im: float
    z_re: float
    z_im: float
    value_re: Optional[float]
    value_im: Optional[float]
    err_estimate: Optional[float]
    method: str
    status: str = "ok"             # ok | pole | error
    pole_index: Optional[int] = None


def _policy(args):
    policy = default_policy()
    if getattr(args, "max_terms", None) is not None:
        policy = policy.with_terms(args.max_terms)
    if getattr(args, "tol", None) is not None:
        policy = replace(policy, target_rel_tol=args.tol)
    return policy


def _evaluate_record(x, z, policy, method) -> OutputRecord:
    try:
        r = gamma_xz(x, z, policy, method)
    except PoleError as e:
        return OutputRecord(x.real, x.imag, z.real, z.imag, None, None, None, method,
                            "pole", e.pole_index)
    except (DomainError, OverflowError):
        return OutputRecord(x.real, x.imag, z.real, z.imag, None, None, None, method,
                            "error")
    return OutputRecord(x.real, x.imag, z.real, z.imag, r.value.real, r.value.imag,
                        r.err_estimate, r.method)


# --- eval ------------------------------------------------------------------

def cmd_eval(args, out) -> int:
    x = parse_complex(args.x)
    z = parse_complex(args.z)
    policy = _policy(args)
    try:
        r = gamma_xz(x, z, policy, args.method)
    except PoleError as e:
        res = "unknown" if e.residue is None else _fmt_complex(complex(e.residue))
        if args.json:
            rec = {"status": "pole", "pole_index": e.pole_index,
                   "residue": None if e.residue is None
                   else [complex(e.residue).real, complex(e.residue).imag]}
            print(json.dumps(rec), file=out)
        print(f"pole m={e.pole_index}, residue={res}", file=sys.stderr)
        return EXIT_DOMAIN
    except (DomainError, OverflowError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.json:
        rec = OutputRecord(x.real, x.imag, z.real, z.imag, r.value.real, r.value.imag,
                           r.err_estimate, r.method)
        print(json.dumps(asdict(rec)), file=out)
    else:
        print(f"value: {_fmt_complex(r.value)}", file=out)
        print(f"err_estimate: {r.err_estimate:.3e}", file=out)
        print(f"method: {r.method}", file=out)
        print(f"terms_used: {r.terms_used}", file=out)
    return EXIT_OK


# --- table -----------------------------------------------------------------

def parse_range(text: str):
    """'a:b:step' (inclusive of b within step/1e6) or a single complex value."""
    if ":" not in text:
        return [parse_complex(text)]
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"range must be a:b:step, got {text!r}")
    try:
        a, b, step = (float(p) for p in parts)
    except ValueError:
        raise UsageError(f"range must be real a:b:step, got {text!r}") from None
    if step <= 0 or not all(math.isfinite(v) for v in (a, b, step)):
        raise UsageError(f"range step must be positive, got {text!r}")
    n = math.floor((b - a) / step + 1e-9)
    if n < 0:
        raise UsageError(f"empty range {text!r}")
    return [complex(a + k * step) for k in range(n + 1)]


def cmd_table(args, out) -> int:
    xs = parse_range(args.x_range)
    zs = parse_range(args.z_range)
    policy = _policy(args)
    records = [_evaluate_record(x, z, policy, args.method) for x in xs for z in zs]
    if args.format == "json":
        print(json.dumps([asdict(r) for r in records]), file=out)
        return EXIT_OK
    fields = list(OutputRecord.__dataclass_fields__)
    w = csv.writer(out, lineterminator="\n")
    w.writerow(fields)
    for r in records:
        row = []
        for f in fields:
            v = getattr(r, f)
            if v is None:
                row.append("")
            elif isinstance(v, float):
                row.append(_g(v))
            else:
                row.append(v)
        w.writerow(row)
    return EXIT_OK


# --- verify ----------------------------------------------------------------

def cmd_verify(args, out) -> int:
    policy = _policy(args)
    try:
        reports = run_all(args.seed, policy, ids=args.id, n_points=args.points)
    except UnknownIdentityError as e:
        print(f"unknown identity id: {e.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps([r.to_dict() for r in reports]), file=out)
    else:
        for r in reports:
            status = "pass" if r.passed else "FAIL"
            tag = " [variant]" if r.role == "variant" else ""
            print(f"{r.id:<20} {status:<4} max_residual={r.max_residual:.3e} "
                  f"tol={r.tolerance:.0e} n={r.grid_spec['n_points']}{tag}", file=out)
            if r.variant_notes:
                print(f"    {r.variant_notes}", file=out)
    return EXIT_OK if overall_pass(reports) else EXIT_DOMAIN


# --- series ----------------------------------------------------------------

def cmd_series(args, out) -> int:
    anchor = parse_complex(args.anchor)
    if args.order < 0:
        raise UsageError("--order must be >= 0")
    policy = _policy(args)
    try:
        variant = "literal" if args.literal else "derived"
        if args.var == "z":
            exp = series.coeffs_a(anchor, args.order, variant, policy)
        else:
            exp = series.coeffs_b(anchor, args.order, variant, policy)
    except (DomainError, OverflowError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["m", "coef_re", "coef_im"])
    for m, c in enumerate(exp.coefficients):
        c = complex(c)
        w.writerow([m, _g(c.real), _g(c.imag)])
    return EXIT_OK


# --- entry point -----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive_int(text):
    v = int(text)
    if v < 8:
        raise argparse.ArgumentTypeError("must be an integer >= 8")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bigamma", description="Two-variable gamma function Gamma(x, z).")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(sp):
        sp.add_argument("--max-terms", type=_positive_int, default=None)
        sp.add_argument("--tol", type=float, default=None,
                        help="target relative tolerance (>= 1e-15)")

    e = sub.add_parser("eval", help="evaluate Gamma(x, z) at one point")
    e.add_argument("--x", required=True)
    e.add_argument("--z", required=True)
    e.add_argument("--method", choices=METHODS, default="auto")
    e.add_argument("--json", action="store_true")
    common(e)

    t = sub.add_parser("table", help="tabulate Gamma(x, z) on a grid")
    t.add_argument("--x-range", required=True)
    t.add_argument("--z-range", required=True)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--method", choices=METHODS, default="auto")
    common(t)

    v = sub.add_parser("verify", help="run the identity harness")
    v.add_argument("--id", action="append", default=None)
    v.add_argument("--seed", type=int, default=42)
    v.add_argument("--points", type=int, default=None)
    v.add_argument("--json", action="store_true")
    common(v)

    s = sub.add_parser("series", help="Taylor coefficients in z or x")
    s.add_argument("--var", choices=("z", "x"), required=True)
    s.add_argument("--anchor", required=True)
    s.add_argument("--order", type=int, default=series.DEFAULT_ORDER)
    s.add_argument("--literal", action="store_true",
                   help="use the alternative (unverified) recursions, for comparison")
    # older spelling of --literal
    s.add_argument("--paper-literal", dest="literal", action="store_true",
                   help=argparse.SUPPRESS)
    common(s)
    return p


_COMMANDS = {"eval": cmd_eval, "table": cmd_table, "verify": cmd_verify,
             "series": cmd_series}


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args, out)
    except (UsageError, ValueError) as e:
        print(f"bigamma: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
