"""Command-line front end: machine-first JSON/CSV output for every operation.

Exit codes: 0 success, 1 failed verification, 2 usage/parse errors,
3 cap or precision violations.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from decimal import Decimal
from fractions import Fraction

import mpmath

from . import asymptotics, verify
from .basis import build_basis
from .combinatorics import IntegerPartition
from .config import load_config
from .sampling import CapExceededError, FrequencyVector, sampling_probability
from .transient import SpectralEvaluator, STATIONARY
from .verify import run_suite

EXIT_CAP = 3


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError:
        return Fraction(Decimal(text))  # allows 1e6-style input


def parse_theta_grid(text: str) -> list[Fraction]:
    """Either a comma list of thetas or "lo:hi:log" for decade steps."""
    if ":" in text:
        lo, hi, kind = text.split(":")
        if kind != "log":
            raise ValueError("only log-spaced grids are supported, got %r" % kind)
        lo, hi = parse_rational(lo), parse_rational(hi)
        grid = []
        v = lo
        while v <= hi:
            grid.append(v)
            v *= 10
        return grid
    return [parse_rational(tok) for tok in text.split(",")]


def parse_regime(text: str) -> asymptotics.RegimeSpec:
    kind, _, param = text.partition(":")
    if kind == "proportional":
        return asymptotics.RegimeSpec.proportional(parse_rational(param))
    if kind == "logarithmic":
        return asymptotics.RegimeSpec.logarithmic(parse_rational(param))
    if kind == "sublog":
        return asymptotics.RegimeSpec.sublog()
    raise ValueError("unknown regime %r (proportional:C, logarithmic:K, sublog)" % text)


def fmt_float(value, precision_bits: int) -> str:
    if isinstance(value, Fraction):
        value = mpmath.mpf(value.numerator) / value.denominator
    return mpmath.nstr(value, int(precision_bits * 0.30103) + 2)


def emit(payload, rows=None, header=None, fmt="json", out=None):
    stream = open(out, "w", newline="") if out else sys.stdout
    try:
        if fmt == "csv":
            writer = csv.writer(stream)
            writer.writerow(header)
            writer.writerows(rows)
        else:
            json.dump(payload, stream, separators=(",", ":"))
            stream.write("\n")
    finally:
        if out:
            stream.close()


def cmd_sample_prob(args, cfg):
    eta = IntegerPartition.parse(args.eta)
    x = FrequencyVector.parse(args.x)
    if eta.n > cfg.max_n:
        raise CapExceededError("|eta| = %d exceeds max_n = %d" % (eta.n, cfg.max_n))
    p = sampling_probability(eta, x)
    emit({
        "eta": eta.to_json(),
        "x": x.to_json(),
        "dust": str(x.dust),
        "p_exact": str(p),
        "p_float": float(p),
    }, fmt="json", out=args.out)


def cmd_moment(args, cfg):
    from .moments import mixed_power_sum_moment, power_sum_moment
    eta = IntegerPartition.parse(args.eta)
    theta = parse_rational(args.theta)
    if args.xi is not None:
        value = mixed_power_sum_moment(eta, IntegerPartition.parse(args.xi), theta)
    else:
        value = power_sum_moment(eta, theta)
    emit({"eta": eta.to_json(), "xi": args.xi, "theta": str(theta),
          "value": str(value)}, fmt="json", out=args.out)


def cmd_basis(args, cfg):
    theta = parse_rational(args.theta)
    basis = build_basis(args.max_size, theta)
    emit([el.to_json() for el in basis], fmt="json", out=args.out)


def cmd_transient(args, cfg):
    eta = IntegerPartition.parse(args.eta)
    x = FrequencyVector.parse(args.x)
    theta = parse_rational(args.theta)
    prec = args.precision or cfg.precision_bits
    if eta.n > cfg.max_n:
        raise CapExceededError("|eta| = %d exceeds max_n = %d" % (eta.n, cfg.max_n))
    ev = SpectralEvaluator(theta, max(2, eta.n), prec)
    t = STATIONARY if args.t == "inf" else mpmath.mpf(args.t)
    value = ev.sampling_probability(eta, x, t)
    emit({
        "eta": eta.to_json(),
        "theta": str(theta),
        "t": args.t,
        "value": fmt_float(value, prec),
        "precision_bits": prec,
        "stationary_value": str(ev.stationary_sampling_probability(eta)),
        "t0_value": str(sampling_probability(eta, x)),
    }, fmt="json", out=args.out)


def cmd_weak_limit_scan(args, cfg):
    omega = IntegerPartition.parse(args.omega)
    x = FrequencyVector.parse(args.x)
    regime = parse_regime(args.regime)
    prec = args.precision or cfg.precision_bits
    rows = asymptotics.moment_limit_scan(
        omega, x, regime, parse_theta_grid(args.theta_grid), prec)
    table = [[str(r.theta), fmt_float(r.computed, prec),
              fmt_float(r.predicted, prec), fmt_float(r.error, prec)]
             for r in rows]
    emit([dict(zip(("theta", "computed", "predicted", "error"), row))
          for row in table],
         rows=table, header=["theta", "computed", "predicted", "error"],
         fmt=cfg.output_format, out=args.out)


def cmd_lemma41_scan(args, cfg):
    eta = IntegerPartition.parse(args.eta)
    xi = IntegerPartition.parse(args.xi) if args.xi is not None else None
    grid = parse_theta_grid(args.theta_grid)
    pairs = [(th, 2 * th) for th in grid]
    rows = asymptotics.lemma41_order_scan(eta, xi, pairs)
    table = []
    for row in rows:
        ratio = asymptotics.lemma41_constant_ratio(eta, xi, row.theta)
        table.append([str(row.theta), "%.6f" % row.measured_exponent,
                      "%.6f" % float(ratio)])
    emit([dict(zip(("theta", "measured_exponent", "constant_ratio"), row))
          for row in table],
         rows=table, header=["theta", "measured_exponent", "constant_ratio"],
         fmt=cfg.output_format, out=args.out)


def cmd_rate_function(args, cfg):
    eta = IntegerPartition.parse(args.eta)
    k = math.inf if args.k == "inf" else parse_rational(args.k)
    result = asymptotics.rate_function(args.n, eta, k)
    emit({"speed": result.speed, "I": str(result.value)}, fmt="json", out=args.out)


def cmd_ldp_scan(args, cfg):
    eta = IntegerPartition.parse(args.eta)
    x = FrequencyVector.parse(args.x)
    k = parse_rational(args.k)
    prec = args.precision or 512
    target = asymptotics.rate_function(args.n, eta, k)
    rows = asymptotics.ldp_slope_scan(
        args.n, eta, k, parse_theta_grid(args.theta_grid), x, prec)
    table = []
    for r in rows:
        if r.underflow:
            table.append([str(r.theta), "underflow", "", ""])
        else:
            table.append([str(r.theta), fmt_float(r.probability, prec),
                          fmt_float(r.slope, prec), fmt_float(r.abs_error, prec)])
    emit({"I": str(target.value), "speed": target.speed,
          "rows": [dict(zip(("theta", "P", "s", "abs_error"), row))
                   for row in table]},
         rows=table, header=["theta", "P", "s", "abs_error"],
         fmt="csv" if args.out else cfg.output_format, out=args.out)


def cmd_verify(args, cfg):
    kwargs = {}
    if args.suite == "orthogonality":
        kwargs = {"max_size": args.max_size,
                  "thetas": (parse_rational(args.theta),)} \
            if args.theta else {"max_size": args.max_size}
    failures = 0
    for label, ok, detail in run_suite(args.suite, **kwargs):
        if not ok:
            failures += 1
            print("FAIL %s: %s" % (label, detail))
            break
    if failures:
        return 1
    print("ok: suite %r passed" % args.suite)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="neutral-sampler",
        description="Exact sampling probabilities under the neutral diffusion",
    )
    parser.add_argument("--config", help="key=value configuration file")
    parser.add_argument("--precision", type=int, help="precision bits override")
    parser.add_argument("--format", choices=("json", "csv"), dest="output_format")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample-prob", help="exact stationary-free p_eta(x)")
    p.add_argument("--eta", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--dust", choices=("auto",), default="auto")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sample_prob)

    p = sub.add_parser("moment", help="exact PD(theta) power-sum moments")
    p.add_argument("--eta", required=True)
    p.add_argument("--xi")
    p.add_argument("--theta", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_moment)

    p = sub.add_parser("basis", help="dump the orthogonal basis")
    p.add_argument("--max-size", type=int, required=True)
    p.add_argument("--theta", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("transient", help="transient sampling probability")
    p.add_argument("--eta", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--theta", required=True)
    p.add_argument("--t", required=True, help='time, or "inf" for stationary')
    p.add_argument("--precision", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_transient)

    p = sub.add_parser("weak-limit-scan", help="transient moments vs weak limit")
    p.add_argument("--omega", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--regime", required=True)
    p.add_argument("--theta-grid", required=True)
    p.add_argument("--precision", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_weak_limit_scan)

    p = sub.add_parser("lemma41-scan", help="measured theta-orders of inner products")
    p.add_argument("--eta", required=True)
    p.add_argument("--xi")
    p.add_argument("--theta-grid", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_lemma41_scan)

    p = sub.add_parser("rate-function", help="LDP rate function value")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eta", required=True)
    p.add_argument("--k", required=True, help='rational, "inf", or 0 for sublog')
    p.add_argument("--out")
    p.set_defaults(func=cmd_rate_function)

    p = sub.add_parser("ldp-scan", help="rate-function slope scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--eta", required=True)
    p.add_argument("--k", required=True)
    p.add_argument("--theta-grid", required=True)
    p.add_argument("--x", default="1/2,1/3,1/6")
    p.add_argument("--precision", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_ldp_scan)

    p = sub.add_parser("verify", help="run an exact invariant suite")
    p.add_argument("--suite", default="all",
                   choices=sorted(verify.SUITES) + ["all"])
    p.add_argument("--max-size", type=int, default=6)
    p.add_argument("--theta")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config, {
            "precision_bits": args.precision,
            "output_format": args.output_format,
        })
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_CAP
    try:
        rc = args.func(args, cfg)
    except CapExceededError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        parser.exit(2, "error: %s\n" % exc)
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
