"""Command-line driver for the verification toolkit.

Subcommands
-----------
coeffs         print the exact recurrence coefficients of one family member
poly           print one monic family polynomial
eigencheck     sweep an eigenvalue operator over its polynomial family
algebra        check the operator structure relations on all monomials
gram           quadrature Gram matrix off-diagonal check
norms          norm-ratio checks (quadrature vs closed form, exact identity)
pearson        weight-equation and reflection-symmetry checks
transform      kernel-transform round trip and parameter-map checks
limits         run one contraction limit over a step grid
weight-sample  print CSV samples of a weight function over its support
suite          run the pinned verification suites

Conventions
-----------
* Every numeric parameter is an exact rational written ``p/q`` or as an
  integer.  The only float inputs are limit step grids and tolerances.
* ``--json [PATH]`` / ``--csv [PATH]`` (mutually exclusive) write the
  verification records; with ``-`` or no path the stream replaces the
  human-readable output on stdout, otherwise it is written to PATH and
  the usual output is still printed.
* Exit status: 0 when every check passed, 1 when any verification record
  failed (the first failing record is printed to stderr), 2 for usage
  errors.  Identical argv produce identical records and, aside from the
  wall-time field, byte-identical JSON.
* ``DUNKLPOLY_THREADS`` (positive integer) caps suite parallelism.
"""

from __future__ import annotations

import argparse
import math
import os
import re
import sys
import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .dunklop import GaussianPoly, build_operator, eigencheck, expected_eigenvalue
from .exactnum import NotPolynomial
from .families import (
    DegenerateParameters,
    FamilySpec,
    big_m1_jacobi_family,
    big_q_jacobi_family,
    cbi_family,
    chihara_family,
    ext_hermite_family,
    gegenbauer_family,
    gen_hermite_family,
    generate_monic,
    recurrence_coeffs,
)
from .limits import (
    LIMIT_IDS,
    LimitReport,
    beta_case,
    bigq_case,
    cbi_case,
    geometric_steps,
    run_limit,
)
from .quad import (
    gram_matrix,
    gram_offdiag_worst,
    norm_ratio_check,
    norm_ratio_exact,
    verify_pearson,
    weight_for,
)
from .report import (
    VerificationRecord,
    emit,
    exact_record,
    float_record,
    rational_str,
)
from .suites import SUITE_NAMES, run_suites
from .transforms import (
    christoffel,
    geronimus,
    kernel_map,
    kernel_recurrence_coeffs,
    kernel_to_chihara,
    kernel_to_chihara_float,
    split_ratios,
)

__all__ = ["run", "main", "build_parser"]

PROG = "dunklpoly"

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


class UsageError(ValueError):
    """Bad command-line input combinations (exit status 2)."""


def _rational(text: str) -> Fraction:
    if not _RATIONAL_RE.match(text):
        raise argparse.ArgumentTypeError(
            f"expected an exact rational 'p/q' or integer, got {text!r}"
        )
    return Fraction(text)


def _steps(text: str) -> Tuple[float, ...]:
    try:
        values = tuple(float(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad step list {text!r}") from exc
    return values


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if value < 1:
        raise argparse.ArgumentTypeError("value must be a positive integer")
    return value


# --------------------------------------------------------------------------
# Families and operators reachable from the command line.

FAMILY_BUILDERS: Dict[str, Callable[..., FamilySpec]] = {
    "chihara": chihara_family,
    "gegenbauer": gegenbauer_family,
    "cbi": cbi_family,
    "ext_hermite": ext_hermite_family,
    "gen_hermite": gen_hermite_family,
    "big_m1_jacobi": big_m1_jacobi_family,
    "big_q_jacobi": big_q_jacobi_family,
}

FAMILY_PARAMS: Dict[str, Tuple[str, ...]] = {
    "chihara": ("alpha", "beta", "gamma"),
    "gegenbauer": ("alpha", "beta"),
    "cbi": ("rho1", "rho2", "r1", "r2"),
    "ext_hermite": ("mu", "gamma"),
    "gen_hermite": ("mu",),
    "big_m1_jacobi": ("a", "b", "c"),
    "big_q_jacobi": ("qalpha", "qbeta", "qgamma", "q"),
}

_ALL_FAMILY_FLAGS: Tuple[str, ...] = (
    "alpha", "beta", "gamma", "mu",
    "rho1", "rho2", "r1", "r2",
    "a", "b", "c",
    "qalpha", "qbeta", "qgamma", "q",
)

# Eigenvalue operators: required parameters, matching polynomial family,
# default sweep cap, and whether eigenvectors live in the Gaussian class.
OPERATOR_TABLE: Dict[str, Tuple[Tuple[str, ...], Callable[[Dict[str, Fraction]], FamilySpec], int, bool]] = {
    "chihara_D": (
        ("alpha", "beta", "gamma", "eps"),
        lambda p: chihara_family(p["alpha"], p["beta"], p["gamma"]),
        16,
        False,
    ),
    "cbi_K": (
        ("rho1", "rho2", "r1", "r2", "alpha"),
        lambda p: cbi_family(p["rho1"], p["rho2"], p["r1"], p["r2"]),
        12,
        False,
    ),
    "gegenbauer_W": (
        ("alpha", "beta", "eps"),
        lambda p: gegenbauer_family(p["alpha"], p["beta"]),
        16,
        False,
    ),
    "gegenbauer_Q": (
        ("mu", "a"),
        lambda p: gegenbauer_family(p["mu"] - Fraction(1, 2), p["a"]),
        16,
        False,
    ),
    "y_Z": (
        ("mu", "gamma", "eps"),
        lambda p: ext_hermite_family(p["mu"], p["gamma"]),
        16,
        False,
    ),
    "gh_Omega": (
        ("mu", "eps"),
        lambda p: gen_hermite_family(p["mu"]),
        16,
        False,
    ),
    "gh_OmegaTilde": (
        ("mu", "eps"),
        lambda p: gen_hermite_family(p["mu"]),
        12,
        True,
    ),
}

LIMIT_BUILDERS: Dict[str, Callable[..., object]] = {
    "cbi_h_to_0": cbi_case,
    "bigq_q_to_minus1": bigq_case,
    "chihara_beta_to_inf": beta_case,
}


def _collect_params(args: argparse.Namespace, names: Sequence[str],
                    context: str) -> Dict[str, Fraction]:
    """Gather exactly the named rational flags; reject missing or stray ones."""
    values: Dict[str, Fraction] = {}
    for name in names:
        value = getattr(args, name, None)
        if value is None:
            raise UsageError(f"{context} requires --{name}")
        values[name] = value
    for name in _ALL_FAMILY_FLAGS + ("eps",):
        if name in names:
            continue
        if getattr(args, name, None) is not None:
            raise UsageError(f"--{name} does not apply to {context}")
    return values


def _build_family(args: argparse.Namespace) -> FamilySpec:
    names = FAMILY_PARAMS[args.family]
    params = _collect_params(args, names, f"--family {args.family}")
    return FAMILY_BUILDERS[args.family](*(params[name] for name in names))


def _say(args: argparse.Namespace, text: str = "") -> None:
    if not getattr(args, "_quiet", False):
        print(text)


def _add_family_flags(parser: argparse.ArgumentParser,
                      families: Optional[Sequence[str]] = None,
                      with_eps: bool = False) -> None:
    chosen = sorted(families or FAMILY_BUILDERS)
    parser.add_argument("--family", required=True, choices=chosen,
                        help="polynomial family")
    flags = sorted({name for fam in chosen for name in FAMILY_PARAMS[fam]})
    for name in flags:
        parser.add_argument(f"--{name}", type=_rational, default=None,
                            metavar="p/q")
    if with_eps:
        parser.add_argument("--eps", type=_rational, default=None, metavar="p/q")


def _add_format_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--json", nargs="?", const="-", default=None,
                       metavar="PATH", help="write records as JSON "
                       "(to stdout when PATH is omitted or '-')")
    group.add_argument("--csv", nargs="?", const="-", default=None,
                       metavar="PATH", help="write records as CSV "
                       "(to stdout when PATH is omitted or '-')")


def _format_destination(args: argparse.Namespace) -> Tuple[Optional[str], Optional[str]]:
    if getattr(args, "json", None) is not None:
        return "json", args.json
    if getattr(args, "csv", None) is not None:
        return "csv", args.csv
    return None, None


def _deliver(records: Sequence[VerificationRecord], args: argparse.Namespace) -> None:
    fmt, dest = _format_destination(args)
    if fmt is None:
        return
    blob = emit(records, fmt) + b"\n"
    if dest == "-":
        sys.stdout.buffer.write(blob)
        sys.stdout.buffer.flush()
    else:
        with open(dest, "wb") as handle:
            handle.write(blob)


def _finish(records: Sequence[VerificationRecord], args: argparse.Namespace) -> int:
    _deliver(records, args)
    failures = [r for r in records if r.outcome == "fail"]
    if failures:
        first = failures[0]
        print(
            f"{PROG}: first failing record: suite={first.suite} "
            f"target={first.target} params={first.params} "
            f"degrees={first.degrees} residual={first.residual} "
            f"tolerance={first.tolerance}",
            file=sys.stderr,
        )
        return 1
    return 0


# --------------------------------------------------------------------------
# Subcommand handlers.  Each returns the exit status.


def _cmd_coeffs(args: argparse.Namespace) -> int:
    family = _build_family(args)
    diag, sub = recurrence_coeffs(family, args.n)
    print(f"diag {rational_str(diag)}")
    print(f"sub {rational_str(sub)}")
    return 0


def _cmd_poly(args: argparse.Namespace) -> int:
    family = _build_family(args)
    print(str(generate_monic(family, args.n)[args.n]))
    return 0


def _cmd_eigencheck(args: argparse.Namespace) -> int:
    token = args.operator
    names, family_of, default_cap, gaussian = OPERATOR_TABLE[token]
    params = _collect_params(args, names, f"--operator {token}")
    cap = args.cap if args.cap is not None else default_cap
    family = family_of(params)
    operator = build_operator(token, **params)
    polys = generate_monic(family, cap)
    records: List[VerificationRecord] = []
    for n, poly in enumerate(polys):
        start = time.perf_counter()
        eigenvalue = expected_eigenvalue(token, n, **params)
        vector = GaussianPoly(poly) if gaussian else poly
        try:
            ok = eigencheck(operator, vector, eigenvalue).is_zero
            residual = "0" if ok else "nonzero"
        except NotPolynomial:
            ok, residual = False, "not a polynomial"
        record = exact_record(
            "eigencheck", token, family.label(), str(n),
            millis=(time.perf_counter() - start) * 1e3,
            passed=ok, residual=residual,
        )
        records.append(record)
        _say(args, f"n={n:2d} lambda={rational_str(eigenvalue)} {record.outcome}")
    return _finish(records, args)


def _cmd_algebra(args: argparse.Namespace) -> int:
    from .dunklop import verify_algebra

    if args.which == "chihara":
        names = ("alpha", "beta", "gamma", "eps")
    else:
        names = ("mu", "gamma", "eps")
    params = _collect_params(args, names, f"--which {args.which}")
    reports = verify_algebra(args.which, args.cap, **params)
    label = ",".join(f"{k}={rational_str(v)}" for k, v in params.items())
    records = []
    for report in reports:
        record = exact_record(
            "algebra", f"{args.which}:{report.relation}", label,
            f"0..{report.degree_cap}", passed=report.passed,
            residual="0" if report.passed else
            f"first failure at degree {report.first_failure}",
        )
        records.append(record)
        _say(args, f"{report.relation:12s} {record.outcome}")
    return _finish(records, args)


def _cmd_gram(args: argparse.Namespace) -> int:
    family = _build_family(args)
    worst = gram_offdiag_worst(gram_matrix(family, args.cap))
    record = float_record("gram", family.name, family.label(),
                          f"0..{args.cap}", residual=worst,
                          tolerance=args.tolerance)
    _say(args, f"offdiag worst {worst:.3e} tolerance {args.tolerance:.1e} "
               f"{record.outcome}")
    return _finish([record], args)


def _cmd_norms(args: argparse.Namespace) -> int:
    family = _build_family(args)
    worst = 0.0
    for n in range(1, args.cap + 1):
        exact, quad = norm_ratio_check(family, n)
        worst = max(worst, abs(quad / float(exact) - 1.0))
    quad_rec = float_record("norms", family.name, family.label(),
                            f"1..{args.cap}", residual=worst,
                            tolerance=args.tolerance)
    ok = all(norm_ratio_exact(family, n) == family.sub(n)
             for n in range(1, args.exact_cap + 1))
    exact_rec = exact_record("norms", family.name + "-ratio-identity",
                             family.label(), f"1..{args.exact_cap}",
                             passed=ok, residual="0" if ok else "nonzero")
    _say(args, f"quadrature ratio worst {worst:.3e} {quad_rec.outcome}")
    _say(args, f"exact ratio identity {exact_rec.outcome}")
    return _finish([quad_rec, exact_rec], args)


def _cmd_pearson(args: argparse.Namespace) -> int:
    family = _build_family(args)
    report = verify_pearson(family, samples_per_side=args.samples,
                            tolerance=args.tolerance)
    ode_rec = exact_record("pearson", "weight-equation", family.label(),
                           "weight", passed=report.ode_exact,
                           residual="0" if report.ode_exact else "nonzero")
    refl_rec = float_record("pearson", "reflection-samples", family.label(),
                            f"{report.reflection_samples} points",
                            residual=report.reflection_worst,
                            tolerance=args.tolerance)
    _say(args, f"weight equation {ode_rec.outcome}")
    _say(args, f"reflection worst {report.reflection_worst:.3e} "
               f"over {report.reflection_samples} points {refl_rec.outcome}")
    return _finish([ode_rec, refl_rec], args)


def _cmd_transform(args: argparse.Namespace) -> int:
    params = _collect_params(args, ("a", "b", "c"), "transform")
    a, b, c = params["a"], params["b"], params["c"]
    family = big_m1_jacobi_family(a, b, c)
    label = family.label()
    cap = args.cap
    polys = generate_monic(family, cap + 1)
    a_ratios, c_ratios = split_ratios(family, cap + 1)
    kernels = christoffel(polys, a_ratios)
    back = geronimus(kernels, c_ratios)
    records = [
        exact_record("transform", "roundtrip", label, f"0..{cap}",
                     passed=all(back[n] == polys[n] for n in range(len(back))),
                     residual="nonzero"),
        exact_record("transform", "evaluation-at-one", label, f"0..{cap}",
                     passed=all(
                         polys[n + 1].evaluate(Fraction(1))
                         == a_ratios[n] * polys[n].evaluate(Fraction(1))
                         for n in range(cap + 1)),
                     residual="nonzero"),
    ]
    kmap = kernel_map(a, b, c)
    if kmap.is_exact:
        residuals = kernel_to_chihara(kmap, kernels)
        records.append(exact_record(
            "transform", "chihara-map", label, f"0..{len(kernels) - 1}",
            passed=all(r.is_zero for r in residuals), residual="nonzero"))
        mapped = chihara_family(kmap.alpha, kmap.beta, kmap.gamma_exact)
        ok = all(
            mapped.sub(n) * (1 - c * c) == kernel_recurrence_coeffs(a, b, c, n)[1]
            for n in range(1, cap + 1))
        records.append(exact_record(
            "transform", "coefficient-identity", label, f"1..{cap}",
            passed=ok, residual="nonzero"))
    else:
        worst = max(kernel_to_chihara_float(kmap, kernels))
        records.append(float_record(
            "transform", "chihara-map", label, f"0..{len(kernels) - 1}",
            residual=worst, tolerance=args.tolerance))
        mapped = chihara_family(kmap.alpha, kmap.beta,
                                Fraction(kmap.gamma_float))
        worst = max(
            abs(float(mapped.sub(n) * (1 - c * c)
                      - kernel_recurrence_coeffs(a, b, c, n)[1]))
            for n in range(1, cap + 1))
        records.append(float_record(
            "transform", "coefficient-identity", label, f"1..{cap}",
            residual=worst, tolerance=args.tolerance))
    for record in records:
        _say(args, f"{record.target:22s} {record.outcome}")
    return _finish(records, args)


def _cmd_limits(args: argparse.Namespace) -> int:
    builder = LIMIT_BUILDERS[args.case]
    kwargs = {"degree_cap": args.cap}
    if args.steps is not None:
        kwargs["steps"] = args.steps
    case = builder(**kwargs)
    report: LimitReport = run_limit(case)
    for result in report.results:
        _say(args, f"step {result.step:.3e}  max poly error "
                   f"{result.max_poly_error:.6e}  max coeff error "
                   f"{result.max_coeff_error:.6e}")
    order_bits = ", ".join(
        f"deg {n}: {('%.3f' % o) if o is not None else 'noise floor'}"
        for n, o in enumerate(report.poly_orders))
    _say(args, f"empirical orders: {order_bits}")
    coeff = report.coeff_order
    overall = report.overall_order
    _say(args, "coefficient order: "
               + (f"{coeff:.3f}" if coeff is not None else "noise floor"))
    _say(args, "overall order: "
               + (f"{overall:.3f}" if overall is not None else "noise floor"))
    _say(args, f"monotone: {'yes' if report.monotone_ok else 'no'}; "
               f"orders in band: {'yes' if report.orders_ok else 'no'}")
    orders = [o for o in report.poly_orders if o is not None]
    orders += [o for o in (coeff, overall) if o is not None]
    if report.monotone_ok and orders:
        residual = max(abs(o - 1.0) for o in orders)
    else:
        residual = 1.0
    record = float_record("limits", args.case,
                          ",".join(f"{k}={v}" for k, v in
                                   report.results[0].source_params),
                          f"0..{case.degree_cap}",
                          residual=residual, tolerance=args.tolerance)
    return _finish([record], args)


def _cmd_weight_sample(args: argparse.Namespace) -> int:
    family = _build_family(args)
    spec = weight_for(family)
    print("x,weight")
    for lo, hi in spec.support_intervals():
        lo, hi = _finite_window(lo, hi)
        for j in range(args.points):
            x = lo + (j + 0.5) * (hi - lo) / args.points
            print(f"{x!r},{spec.weight_value(x)!r}")
    return 0


def _finite_window(lo: float, hi: float) -> Tuple[float, float]:
    """Clip an unbounded support component to a Gaussian-decay window."""
    if math.isinf(lo) and math.isinf(hi):
        return -8.0, 8.0
    if math.isinf(lo):
        return hi - 8.0, hi
    if math.isinf(hi):
        return lo, lo + 8.0
    return lo, hi


def _cmd_suite(args: argparse.Namespace) -> int:
    if args.all == bool(args.only):
        raise UsageError("choose exactly one of --all or --only")
    names = list(SUITE_NAMES) if args.all else args.only.split(",")
    unknown = [n for n in names if n not in SUITE_NAMES]
    if unknown:
        raise UsageError(f"unknown suite name(s): {', '.join(unknown)}; "
                         f"choose from {', '.join(SUITE_NAMES)}")
    workers = _threads_from_env()
    records = run_suites(names=names, max_workers=workers)
    width = max(len(n) for n in names)
    _say(args, f"{'suite':{width}s}  records  exact  float  fail")
    for name in names:
        batch = [r for r in records if r.suite == name]
        exact = sum(r.outcome == "exact_pass" for r in batch)
        flt = sum(r.outcome == "float_pass" for r in batch)
        fail = sum(r.outcome == "fail" for r in batch)
        _say(args, f"{name:{width}s}  {len(batch):7d}  {exact:5d}  "
                   f"{flt:5d}  {fail:4d}")
    total_fail = sum(r.outcome == "fail" for r in records)
    _say(args, f"{'total':{width}s}  {len(records):7d}  "
               f"{sum(r.outcome == 'exact_pass' for r in records):5d}  "
               f"{sum(r.outcome == 'float_pass' for r in records):5d}  "
               f"{total_fail:4d}")
    return _finish(records, args)


def _threads_from_env() -> Optional[int]:
    raw = os.environ.get("DUNKLPOLY_THREADS")
    if raw is None or raw == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"DUNKLPOLY_THREADS must be a positive integer, "
                         f"got {raw!r}") from None
    if value < 1:
        raise UsageError(f"DUNKLPOLY_THREADS must be a positive integer, "
                         f"got {raw!r}")
    return value


# --------------------------------------------------------------------------
# Parser assembly.


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Exact and float verification checks for -1 orthogonal "
                    "polynomial families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("coeffs", help="print exact recurrence coefficients")
    _add_family_flags(p)
    p.add_argument("--n", type=int, required=True, metavar="N")
    p.set_defaults(handler=_cmd_coeffs)

    p = sub.add_parser("poly", help="print one monic polynomial")
    _add_family_flags(p)
    p.add_argument("--n", type=int, required=True, metavar="N")
    p.set_defaults(handler=_cmd_poly)

    p = sub.add_parser("eigencheck", help="sweep an eigenvalue operator")
    p.add_argument("--operator", required=True, choices=sorted(OPERATOR_TABLE))
    for name in ("alpha", "beta", "gamma", "mu", "a",
                 "rho1", "rho2", "r1", "r2", "eps"):
        p.add_argument(f"--{name}", type=_rational, default=None, metavar="p/q")
    p.add_argument("--cap", type=_positive_int, default=None, metavar="N")
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_eigencheck)

    p = sub.add_parser("algebra", help="check operator structure relations")
    p.add_argument("--which", required=True, choices=("chihara", "ext_hermite"))
    for name in ("alpha", "beta", "gamma", "mu", "eps"):
        p.add_argument(f"--{name}", type=_rational, default=None, metavar="p/q")
    p.add_argument("--cap", type=_positive_int, default=12, metavar="N")
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_algebra)

    p = sub.add_parser("gram", help="Gram matrix off-diagonal check")
    _add_family_flags(p, families=("chihara", "gegenbauer", "ext_hermite",
                                   "gen_hermite"))
    p.add_argument("--cap", type=_positive_int, default=12, metavar="N")
    p.add_argument("--tolerance", type=float, default=1e-10)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_gram)

    p = sub.add_parser("norms", help="norm-ratio checks")
    _add_family_flags(p, families=("chihara", "gegenbauer", "ext_hermite",
                                   "gen_hermite"))
    p.add_argument("--cap", type=_positive_int, default=12, metavar="N")
    p.add_argument("--exact-cap", type=_positive_int, default=30, metavar="N")
    p.add_argument("--tolerance", type=float, default=1e-10)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_norms)

    p = sub.add_parser("pearson", help="weight equation and reflection checks")
    _add_family_flags(p, families=("chihara",))
    p.add_argument("--samples", type=_positive_int, default=20,
                   help="sample points per support component")
    p.add_argument("--tolerance", type=float, default=1e-12)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_pearson)

    p = sub.add_parser("transform", help="kernel transform checks")
    for name in ("a", "b", "c"):
        p.add_argument(f"--{name}", type=_rational, default=None, metavar="p/q")
    p.add_argument("--cap", type=_positive_int, default=12, metavar="N")
    p.add_argument("--tolerance", type=float, default=1e-10)
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_transform)

    p = sub.add_parser("limits", help="run one contraction limit")
    p.add_argument("--case", required=True, choices=LIMIT_IDS)
    p.add_argument("--steps", type=_steps, default=None,
                   metavar="s1,s2,...", help="geometric step grid (floats)")
    p.add_argument("--cap", type=_positive_int, default=6, metavar="N")
    p.add_argument("--tolerance", type=float, default=0.2,
                   help="allowed |empirical order - 1|")
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_limits)

    p = sub.add_parser("weight-sample", help="CSV samples of a weight function")
    _add_family_flags(p, families=("chihara", "gegenbauer", "ext_hermite",
                                   "gen_hermite"))
    p.add_argument("--points", type=_positive_int, required=True, metavar="M",
                   help="sample points per support component")
    p.set_defaults(handler=_cmd_weight_sample)

    p = sub.add_parser("suite", help="run the pinned verification suites")
    p.add_argument("--all", action="store_true", help="run every suite")
    p.add_argument("--only", default=None, metavar="NAME[,NAME...]",
                   help="run a comma-separated subset of suites")
    _add_format_flags(p)
    p.set_defaults(handler=_cmd_suite)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv and execute; returns the exit status (0, 1, or 2)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    fmt, dest = _format_destination(args)
    args._quiet = fmt is not None and dest == "-"
    try:
        return args.handler(args)
    except (UsageError, DegenerateParameters, ValueError) as exc:
        print(f"{PROG}: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
