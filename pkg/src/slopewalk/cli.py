"""Command-line front end.

Subcommands: count, series, verify, asymptotics.  Output is a single JSON
record on stdout (CSV available for coefficient tables); diagnostics go to
stderr.  Exit codes: 0 success, 2 argument error, 3 no Diophantine
solution, 4 identity mismatch, 5 root-finder failure.

The environment variable SLOPEWALK_PRECISION overrides the default number
of working digits.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import mpmath as mp

from . import asymptotics as asy
from . import closed_forms as cf
from . import kernel_series as ks
from . import lattice_enum as le

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NO_SOLUTION = 3
EXIT_MISMATCH = 4
EXIT_ROOTFIND = 5


def _default_digits() -> int:
    raw = os.environ.get("SLOPEWALK_PRECISION")
    if raw is None:
        return asy.DEFAULT_DIGITS
    try:
        return max(30, int(raw))
    except ValueError:
        return asy.DEFAULT_DIGITS


def _fmt_exact(value) -> str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    return str(value)


def _fmt_real(value, digits: int) -> str:
    return mp.nstr(value, digits, strip_zeros=False)


def _emit(record: dict, fmt: str = "json") -> None:
    if fmt == "json":
        print(json.dumps(record))
    else:
        values = record.get("values", {})
        table = values.get("coefficients")
        if table is None:
            print(json.dumps(record))
            return
        print("n,coefficient")
        for n, coeff in enumerate(table):
            print(f"{n},{coeff}")


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def _parse_slope(text: str) -> tuple[int, int]:
    num, _, den = text.partition("/")
    a, c = int(num), int(den or "1")
    if a <= 0 or c <= 0:
        raise ValueError("slope must be positive")
    return a, c


def _parse_jumps(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def _parse_end(text: str) -> tuple[int, int]:
    x, _, y = text.partition(",")
    return int(x), int(y)


# -- count --------------------------------------------------------------------

def cmd_count(args) -> int:
    params: dict = {}
    if args.slope:
        a, c = _parse_slope(args.slope)
        slope = le.RationalSlope(a, args.offset, c, touch=args.touch)
        end = _parse_end(args.end)
        value = le.count_ne_below(slope, end)
        params = {
            "slope": f"{a}/{c}", "offset": args.offset,
            "mode": "touch" if args.touch else "strict", "end": list(end),
        }
        oracle = None
        if args.oracle_check:
            oracle = _slope_oracle(slope, end)
    else:
        jumps = le.JumpPolynomial.from_jumps(_parse_jumps(args.jumps))
        end = None if args.to in (None, "any") else int(args.to)
        value = le.count_directed(
            jumps, args.len, args.start, end, constrained=args.meander
        )
        params = {
            "jumps": [j for j, _ in jumps.jumps], "len": args.len,
            "from": args.start, "to": "any" if end is None else end,
            "meander": args.meander,
        }
        oracle = None
        if args.oracle_check:
            oracle = _jumps_oracle(jumps, args.len, args.start, end, args.meander)
    record = {
        "command": "count",
        "parameters": params,
        "values": {"count": _fmt_exact(value)},
        "status": "ok",
    }
    if args.oracle_check:
        if oracle is None:
            record["values"]["oracle"] = "unavailable"
        else:
            record["values"]["oracle"] = _fmt_exact(oracle)
            record["values"]["oracle_equal"] = oracle == value
            if oracle != value:
                record["status"] = "mismatch"
                _emit(record)
                return EXIT_MISMATCH
    _emit(record)
    return EXIT_OK


def _slope_oracle(slope: le.RationalSlope, end):
    """Closed form matching a staircase endpoint: f(a*k, b*k) by the
    exp-of-series route."""
    if not slope.touch or slope.b != 0:
        return None
    x, y = end
    a, c = slope.a, slope.c
    if x == 0 and y == 0:
        return 1
    if x % c == 0 and y % a == 0 and x // c == y // a:
        return cf.bizley_series(a, c, x // c)[x // c]
    return None


def _jumps_oracle(jumps, n, start, end, meander):
    """Kernel-series coefficient matching a unit two-jump meander count."""
    if not (meander and jumps.is_unit_two_jump() and end is not None):
        return None
    a, c = jumps.small_root_count, jumps.max_jump
    from math import gcd
    if gcd(a, c) != 1 or start < a or not 0 <= end < a:
        return None
    series = ks.meander_gf(a, c, start, end, n)
    value = series[n]
    return int(value) if value.denominator == 1 else value


# -- series ---------------------------------------------------------------------

def cmd_series(args) -> int:
    order = args.order
    what = args.what
    if what in ("F0", "G1"):
        a, c = _parse_slope(args.slope or "2/5")
        if (a, c) != (2, 5):
            raise ValueError("F0/G1 are the slope-2/5 generating functions")
        f0, g1 = ks.slope25_F0_G1(max(order, 5))
        series = f0 if what == "F0" else g1
        coeffs = [_fmt_exact(series[n]) for n in range(order + 1)]
        params = {"what": what, "slope": "2/5", "order": order}
    elif what == "Fi":
        a, c = _parse_slope(args.slope)
        series = ks.meander_gf(a, c, args.height, args.end_altitude, order)
        coeffs = [_fmt_exact(series[n]) for n in range(order + 1)]
        params = {
            "what": "Fi", "slope": f"{a}/{c}", "h": args.height,
            "i": args.end_altitude, "order": order,
        }
    elif what == "bizley":
        vals = cf.bizley_series(args.a, args.b, order)
        coeffs = [str(v) for v in vals]
        params = {"what": "bizley", "a": args.a, "b": args.b, "order": order}
    elif what == "tree":
        t = _parse_fraction(args.t)
        r = _parse_fraction(args.r)
        series = cf.tree_series(t, r, order)
        coeffs = [_fmt_exact(series[n]) for n in range(order + 1)]
        params = {"what": "tree", "t": str(t), "r": str(r), "order": order}
    elif what == "powersum":
        a, c = _parse_slope(args.slope)
        series = ks.power_sum(args.height, a, c, order)
        coeffs = [_fmt_exact(series[n]) for n in range(order + 1)]
        params = {
            "what": "powersum", "slope": f"{a}/{c}", "h": args.height,
            "order": order,
        }
    else:
        raise ValueError(f"unknown series kind {what!r}")
    record = {
        "command": "series",
        "parameters": params,
        "values": {"coefficients": coeffs},
        "status": "ok",
    }
    _emit(record, args.format)
    return EXIT_OK


# -- verify ---------------------------------------------------------------------

def _check(name, ok, detail, checks, failures):
    checks.append({"check": name, "ok": bool(ok), "detail": detail})
    if not ok:
        failures.append(name)


def cmd_verify(args) -> int:
    checks: list[dict] = []
    failures: list[str] = []
    suite = args.suite
    max_n = args.max
    params: dict = {"suite": suite, "max": max_n}

    if suite == "knuth":
        jumps = le.JumpPolynomial.two_jump(2, 5)
        f0, g1 = ks.slope25_F0_G1(7 * max_n - 2)
        for n in range(1, max_n + 1):
            m = 7 * n - 2
            a_n = le.count_directed(jumps, m, 4, 1)
            b_n = le.count_directed(jumps, m, 3, 0)
            total = cf.knuth_sum(n)
            _check(
                f"A{n}+B{n}=closed-form", a_n + b_n == total,
                {"A": str(a_n), "B": str(b_n), "sum": str(total)},
                checks, failures,
            )
            _check(
                f"kernel coefficients n={n}",
                g1[m] == a_n and f0[m] == b_n,
                {"G1": _fmt_exact(g1[m]), "F0": _fmt_exact(f0[m])},
                checks, failures,
            )
    elif suite == "bizley":
        a, b = args.a, args.b
        series = cf.bizley_series(a, b, max_n)
        for k in range(1, max_n + 1):
            g = cf.grossman_sum(a, b, k)
            _check(
                f"exp-series=partition-sum k={k}", series[k] == g,
                {"value": str(g)}, checks, failures,
            )
            if k <= 4:
                slope = le.RationalSlope(a, 0, b, touch=True)
                dp = le.count_ne_below(slope, (b * k, a * k))
                _check(
                    f"DP oracle k={k}", dp == g, {"dp": str(dp)},
                    checks, failures,
                )
    elif suite == "naka":
        a, b, c = args.a, args.b, args.c
        try:
            fam = cf.starting_points(a, b, c)
        except cf.NoSolutionError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_NO_SOLUTION
        slope = le.RationalSlope(a, b, c)
        for s in range(fam.s_min, fam.s_min + max_n):
            q = fam.point(s)
            profile = le.distance_profile(slope, q)
            formula = cf.naka_integral(a, b, c, s)
            _check(
                f"integral at {q}", profile.integral == formula,
                {"dp": _fmt_exact(profile.integral), "formula": _fmt_exact(formula)},
                checks, failures,
            )
    elif suite == "general":
        from math import gcd
        for a in range(1, 5):
            for c in range(a + 1, 11 - a):
                if gcd(a, c) != 1:
                    continue
                ell = 0
                while (ell + 1) * a < c:
                    for s in range(1, min(max_n, 3) + 1):
                        formula = cf.general_sum(a, c, ell, s)
                        dp = sum(
                            le.count_ne_below(
                                le.RationalSlope(a, k, c), (c * s - 1, a * s - 1)
                            )
                            for k in range(ell * a + 1, (ell + 1) * a + 1)
                        )
                        _check(
                            f"(a={a},c={c},ell={ell},s={s})", formula == dp,
                            {"formula": str(formula), "dp": str(dp)},
                            checks, failures,
                        )
                    ell += 1
    elif suite == "recurrence":
        for n in range(1, max_n + 1):
            _check(
                f"ratio at n={n}", cf.recurrence_check(n), {},
                checks, failures,
            )
    elif suite == "rotation":
        a, c = _parse_slope(args.slope or "2/5")
        try:
            report = asy.rotation_law_check(a, c, digits=args.digits)
        except asy.RootFindError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_ROOTFIND
        _check(
            "rotation law", report.ok,
            {
                "kappa": report.kappa,
                "max_deviation": _fmt_real(report.max_deviation, 8),
                "samples": report.samples,
            },
            checks, failures,
        )
    elif suite == "logtree":
        t = _parse_fraction(args.t)
        _check(
            f"log identity t={t} order={max_n}",
            cf.log_tree_identity_check(t, max_n), {}, checks, failures,
        )
        _check(
            f"half-tree even identity order={max_n}",
            cf.half_tree_even_identity_check(max_n), {}, checks, failures,
        )
    else:
        raise ValueError(f"unknown suite {suite!r}")

    record = {
        "command": "verify",
        "parameters": params,
        "values": {"checks": checks, "failures": failures},
        "status": "ok" if not failures else "fail",
    }
    _emit(record)
    return EXIT_OK if not failures else EXIT_MISMATCH


# -- asymptotics -----------------------------------------------------------------

def cmd_asymptotics(args) -> int:
    digits = args.digits
    a, c = _parse_slope(args.slope)
    values: dict = {}
    params = {"slope": f"{a}/{c}", "digits": digits}
    try:
        if args.area:
            if (a, c) != (2, 3):
                raise ValueError("the mean-area constant is the slope-2/3 model")
            max_n = args.convergence or 2000
            params["convergence"] = max_n
            report = asy.duchon_area_constant(digits=digits, max_n=max_n)
            values["K"] = _fmt_real(report.k_exact, digits)
            values["K_extrapolated"] = _fmt_real(report.k_extrapolated, digits)
            values["raw_ratio_at_max"] = _fmt_real(report.raw_ratio_at_max, digits)
            values["table"] = [
                {"n": n, "mean_area": _fmt_exact(mean), "ratio": _fmt_real(r, 12)}
                for n, mean, r in report.rows
            ]
        else:
            sc = asy.structural_constants(a, c, digits)
            values["tau"] = _fmt_real(sc.tau, digits)
            values["rho"] = _fmt_real(sc.rho, digits)
            if (a, c) == (2, 5):
                profile = asy.knuth_constants(digits)
                values["tau2"] = _fmt_real(profile.tau2, digits)
                values["kappa1"] = _fmt_real(profile.kappa1, digits)
                values["kappa2"] = _fmt_real(profile.kappa2, digits)
                values["kappa1_residual"] = _fmt_real(
                    profile.kappa1_minpoly_residual(), 8
                )
                values["kappa2_residual"] = _fmt_real(
                    profile.kappa2_minpoly_residual(), 8
                )
                values["tau2_residual"] = _fmt_real(
                    profile.tau2_annihilator_residual(), 8
                )
    except asy.RootFindError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ROOTFIND
    record = {
        "command": "asymptotics",
        "parameters": params,
        "values": values,
        "status": "ok",
        "precision": digits,
    }
    _emit(record)
    return EXIT_OK


# -- argument parsing -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slopewalk",
        description="Exact counts, series, identity suites, and asymptotics "
        "for lattice paths below a line of rational slope.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    digits = _default_digits()

    p_count = sub.add_parser("count", help="exact path counts")
    p_count.add_argument("--slope", help="boundary slope a/c")
    p_count.add_argument("--offset", type=int, default=0, help="intercept b")
    mode = p_count.add_mutually_exclusive_group()
    mode.add_argument("--strict", dest="touch", action="store_false",
                      help="strictly below the line (default)")
    mode.add_argument("--touch", dest="touch", action="store_true",
                      help="touching the line allowed")
    p_count.set_defaults(touch=False)
    p_count.add_argument("--end", help="endpoint x,y")
    p_count.add_argument("--jumps", help='jump set, e.g. "-2,+5"')
    p_count.add_argument("--len", type=int, help="walk length")
    p_count.add_argument("--from", dest="start", type=int, help="start altitude")
    p_count.add_argument("--to", help="end altitude or 'any'")
    p_count.add_argument("--meander", action="store_true",
                         help="constrain altitudes to be non-negative")
    p_count.add_argument("--oracle-check", action="store_true",
                         help="compare against the matching closed form")
    p_count.set_defaults(func=cmd_count)

    p_series = sub.add_parser("series", help="coefficient tables")
    p_series.add_argument("--what", required=True,
                          choices=["F0", "G1", "Fi", "bizley", "tree", "powersum"])
    p_series.add_argument("--slope", help="slope a/c for kernel series")
    p_series.add_argument("--order", type=int, required=True)
    p_series.add_argument("--a", type=int, help="slope numerator (bizley)")
    p_series.add_argument("--b", type=int, help="slope denominator (bizley)")
    p_series.add_argument("--t", help="branching exponent (tree)")
    p_series.add_argument("--r", default="1", help="tree-series power")
    p_series.add_argument("--h", dest="height", type=int,
                          help="start altitude (Fi) / power (powersum)")
    p_series.add_argument("--i", dest="end_altitude", type=int, default=0,
                          help="end altitude (Fi)")
    p_series.add_argument("--format", choices=["json", "csv"], default="json")
    p_series.set_defaults(func=cmd_series)

    p_verify = sub.add_parser("verify", help="identity suites")
    p_verify.add_argument("--suite", required=True,
                          choices=["knuth", "bizley", "naka", "general",
                                   "recurrence", "rotation", "logtree"])
    p_verify.add_argument("--max", type=int, default=4)
    p_verify.add_argument("--a", type=int, default=2)
    p_verify.add_argument("--b", type=int, default=3)
    p_verify.add_argument("--c", type=int, default=5)
    p_verify.add_argument("--t", default="2", help="branching exponent (logtree)")
    p_verify.add_argument("--slope", help="slope a/c (rotation)")
    p_verify.add_argument("--digits", type=int, default=digits)
    p_verify.set_defaults(func=cmd_verify)

    p_asy = sub.add_parser("asymptotics", help="structural constants and limits")
    p_asy.add_argument("--slope", required=True, help="slope a/c")
    p_asy.add_argument("--digits", type=int, default=digits)
    p_asy.add_argument("--area", action="store_true",
                       help="mean-area convergence report (slope 2/3)")
    p_asy.add_argument("--convergence", type=int,
                       help="maximum excursion length for the area table")
    p_asy.set_defaults(func=cmd_asymptotics)
    return parser


def _merge_dash_values(argv: list[str]) -> list[str]:
    """Fold ``--jumps -2,+5`` into ``--jumps=-2,+5`` so argparse does not
    mistake the leading-dash value for an option."""
    out = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok == "--jumps" and i + 1 < len(argv):
            out.append(f"--jumps={argv[i + 1]}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_dash_values(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except cf.NoSolutionError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_NO_SOLUTION
    except asy.RootFindError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_ROOTFIND
    except (ValueError, TypeError, ZeroDivisionError, ks.KernelError) as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
