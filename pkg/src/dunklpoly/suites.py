"""Pinned verification suites covering every acceptance criterion.

Each ``suite_*`` function runs one criterion against a fixed, named set of
parameter choices and returns a list of :class:`VerificationRecord`.  The
parameter sets are module constants so the command-line runner, the tests,
and the acceptance gate all exercise literally the same instances.

Design notes
------------
* Exact checks (construction equivalence, eigen-equations, algebra
  relations, the Jacobi connection, transform round-trips) produce
  ``exact_pass``/``fail`` records: the residual is an exact object and the
  test is ``is_zero`` / ``==``, never a float comparison.
* Float checks (Gram matrices, norm ratios, weight reflection samples,
  limit convergence orders) produce ``float_pass``/``fail`` records whose
  residual and tolerance are recorded verbatim.
* ``run_suites`` may fan the chosen suites out over a thread pool.  Every
  suite function is a pure computation on exact inputs (no shared mutable
  state, no I/O), and results are collected with order-preserving ``map``,
  so the record list is identical for any worker count.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .dunklop import (
    DunklOperator,
    GaussianPoly,
    build_operator,
    eigencheck,
    expected_eigenvalue,
    term,
    verify_algebra,
)
from .exactnum import LaurentPoly, NotDivisible, NotPolynomial, RatFunc
from .families import (
    FamilySpec,
    big_m1_jacobi_family,
    cbi_family,
    chihara_family,
    classical_jacobi_monic,
    explicit_poly,
    ext_hermite_family,
    gegenbauer_family,
    gen_hermite_family,
    generate_monic,
)
from .limits import NOISE_FLOOR, beta_case, bigq_case, cbi_case, run_limit
from .quad import (
    gram_matrix,
    gram_offdiag_worst,
    inner_product,
    norm_ratio_check,
    norm_ratio_exact,
    raw_inner_product,
    verify_pearson,
    weight_for,
)
from .report import (
    VerificationRecord,
    exact_record,
    float_record,
    format_params,
    rational_str,
)
from .transforms import (
    christoffel,
    geronimus,
    kernel_map,
    kernel_recurrence_coeffs,
    kernel_to_chihara,
    split_ratios,
)

__all__ = [
    "ALL_SUITES",
    "SUITE_NAMES",
    "run_suites",
    "suite_construction",
    "suite_eigen",
    "suite_algebra",
    "suite_jacobi",
    "suite_orthogonality",
    "suite_norms",
    "suite_pearson",
    "suite_transform",
    "suite_limits",
    "suite_negative_controls",
]

F = Fraction

# --------------------------------------------------------------------------
# Pinned parameter sets.  These mirror the fixed instances used throughout
# the unit tests so every layer verifies the same objects.

CHIHARA_SETS: Tuple[Tuple[Fraction, Fraction, Fraction], ...] = (
    (F(1), F(1), F(1, 2)),
    (F(1, 2), F(3, 4), F(1, 3)),
    (F(2), F(3), F(-2, 5)),
)

CBI_SETS: Tuple[Tuple[Fraction, Fraction, Fraction, Fraction], ...] = (
    (F(1), F(2), F(1, 3), F(1, 5)),
    (F(3, 2), F(1, 2), F(1, 4), F(-1, 3)),
    (F(2), F(1), F(-1, 2), F(1, 7)),
)

GEGENBAUER_SETS: Tuple[Tuple[Fraction, Fraction], ...] = (
    (F(1), F(1)),
    (F(1, 2), F(2)),
    (F(3, 4), F(5, 4)),
)

EXT_HERMITE_SETS: Tuple[Tuple[Fraction, Fraction], ...] = (
    (F(3, 2), F(1, 2)),
    (F(1, 2), F(1, 3)),
    (F(5, 2), F(-1, 4)),
)

GEN_HERMITE_MUS: Tuple[Fraction, ...] = (F(1, 2), F(3, 2), F(5, 2))

# (mu, a) choices for the squared Dunkl operator; the matching polynomial
# family is gegenbauer_family(mu - 1/2, a).
GEGENBAUER_Q_SETS: Tuple[Tuple[Fraction, Fraction], ...] = (
    (F(3, 2), F(3, 4)),
    (F(1, 2), F(1)),
    (F(5, 4), F(1, 2)),
)

EIGEN_EPS: Tuple[Fraction, ...] = (F(0), F(2, 3), F(5))
ALGEBRA_EPS: Tuple[Fraction, ...] = (F(2, 3), F(5))

JACOBI_SETS: Tuple[Tuple[Fraction, Fraction, Fraction], ...] = (
    (F(1), F(1), F(1, 2)),
    (F(1, 2), F(3, 4), F(-1, 3)),
    (F(2), F(3), F(2, 7)),
)

PEARSON_SETS: Tuple[Tuple[Fraction, Fraction, Fraction], ...] = (
    (F(1), F(2), F(1, 3)),
    (F(1), F(1), F(1, 2)),
    (F(1, 2), F(3, 4), F(1, 3)),
    (F(2), F(3), F(-2, 5)),
    (F(3), F(1), F(2, 7)),
)

TRANSFORM_SETS: Tuple[Tuple[Fraction, Fraction, Fraction], ...] = (
    (F(1), F(1), F(3, 5)),
    (F(1, 2), F(3, 4), F(5, 13)),
    (F(2), F(1), F(5, 13)),
)

GRAM_TOLERANCE = 1e-10
REDUCTION_TOLERANCE = 1e-8
NORM_TOLERANCE = 1e-10
REFLECTION_TOLERANCE = 1e-12
ORDER_TOLERANCE = 0.2
CONSTANT_SPREAD_TOLERANCE = 0.5

# Degree caps, per criterion.
CONSTRUCTION_CAPS: Tuple[Tuple[str, int], ...] = (
    ("chihara", 16),
    ("cbi", 12),
    ("gegenbauer", 16),
    ("ext_hermite", 16),
    ("gen_hermite", 16),
)
EIGEN_CAP = 16
EIGEN_CAP_CBI = 12
EIGEN_CAP_GAUSSIAN = 12
ALGEBRA_CAP = 12
JACOBI_CAP = 8
GRAM_CAP = 12
NORM_CAP = 12
NORM_EXACT_CAP = 30
TRANSFORM_CAP = 12
LIMIT_DEGREE_CAP = 6


def _quadrature_families() -> Tuple[FamilySpec, ...]:
    """The fixed families used for Gram-matrix and norm-ratio checks."""

    return (
        chihara_family(F(1), F(1), F(1, 2)),
        chihara_family(F(1, 2), F(3, 4), F(-1, 3)),
        gegenbauer_family(F(1), F(1)),
        gegenbauer_family(F(1, 2), F(2)),
        ext_hermite_family(F(3, 2), F(1, 2)),
        ext_hermite_family(F(1, 2), F(1, 3)),
        gen_hermite_family(F(1, 2)),
        gen_hermite_family(F(3, 2)),
    )


def _millis(start: float) -> float:
    return (time.perf_counter() - start) * 1000.0


def _family_for(name: str, params: Sequence[Fraction]) -> FamilySpec:
    builders: Dict[str, Callable[..., FamilySpec]] = {
        "chihara": chihara_family,
        "cbi": cbi_family,
        "gegenbauer": gegenbauer_family,
        "ext_hermite": ext_hermite_family,
        "gen_hermite": gen_hermite_family,
    }
    return builders[name](*params)


_CONSTRUCTION_SETS: Dict[str, Tuple[Tuple[Fraction, ...], ...]] = {
    "chihara": CHIHARA_SETS,
    "cbi": CBI_SETS,
    "gegenbauer": GEGENBAUER_SETS,
    "ext_hermite": EXT_HERMITE_SETS,
    "gen_hermite": tuple((mu,) for mu in GEN_HERMITE_MUS),
}


# --------------------------------------------------------------------------
# Criterion: explicit hypergeometric formulas match the recurrence exactly.


def suite_construction() -> List[VerificationRecord]:
    records: List[VerificationRecord] = []
    for name, cap in CONSTRUCTION_CAPS:
        for params in _CONSTRUCTION_SETS[name]:
            family = _family_for(name, params)
            start = time.perf_counter()
            polys = generate_monic(family, cap)
            ok = all(explicit_poly(family, n) == polys[n] for n in range(cap + 1))
            records.append(
                exact_record(
                    "construction",
                    family.name,
                    family.label(),
                    f"0..{cap}",
                    millis=_millis(start),
                    passed=ok,
                    residual="0" if ok else "nonzero",
                )
            )
    return records


# --------------------------------------------------------------------------
# Criterion: every operator/eigenvalue pairing holds with literal zero
# residual on the matching polynomial family.


def _eigen_sweep(
    token: str,
    family: FamilySpec,
    cap: int,
    label: str,
    gaussian: bool = False,
    **params: Fraction,
) -> VerificationRecord:
    start = time.perf_counter()
    operator = build_operator(token, **params)
    polys = generate_monic(family, cap)
    ok = True
    residual = "0"
    for n, poly in enumerate(polys):
        eigenvalue = expected_eigenvalue(token, n, **params)
        vector = GaussianPoly(poly) if gaussian else poly
        try:
            if not eigencheck(operator, vector, eigenvalue).is_zero:
                ok = False
                residual = f"nonzero at n={n}"
                break
        except NotPolynomial:
            ok = False
            residual = f"not a polynomial at n={n}"
            break
    return exact_record(
        "eigen",
        token,
        label,
        f"0..{cap}",
        millis=_millis(start),
        passed=ok,
        residual=residual,
    )


def suite_eigen() -> List[VerificationRecord]:
    records: List[VerificationRecord] = []
    for alpha, beta, gamma in CHIHARA_SETS:
        family = chihara_family(alpha, beta, gamma)
        for eps in EIGEN_EPS:
            records.append(
                _eigen_sweep(
                    "chihara_D",
                    family,
                    EIGEN_CAP,
                    family.label() + ",eps=" + rational_str(eps),
                    alpha=alpha,
                    beta=beta,
                    gamma=gamma,
                    eps=eps,
                )
            )
    for rho1, rho2, r1, r2 in CBI_SETS:
        family = cbi_family(rho1, rho2, r1, r2)
        records.append(
            _eigen_sweep(
                "cbi_K",
                family,
                EIGEN_CAP_CBI,
                family.label() + ",alpha=2/3",
                rho1=rho1,
                rho2=rho2,
                r1=r1,
                r2=r2,
                alpha=F(2, 3),
            )
        )
    for alpha, beta in GEGENBAUER_SETS:
        family = gegenbauer_family(alpha, beta)
        for eps in EIGEN_EPS:
            records.append(
                _eigen_sweep(
                    "gegenbauer_W",
                    family,
                    EIGEN_CAP,
                    family.label() + ",eps=" + rational_str(eps),
                    alpha=alpha,
                    beta=beta,
                    eps=eps,
                )
            )
    for mu, a in GEGENBAUER_Q_SETS:
        family = gegenbauer_family(mu - F(1, 2), a)
        records.append(
            _eigen_sweep(
                "gegenbauer_Q",
                family,
                EIGEN_CAP,
                format_params((("mu", mu), ("a", a))),
                mu=mu,
                a=a,
            )
        )
    for mu, gamma in EXT_HERMITE_SETS:
        family = ext_hermite_family(mu, gamma)
        for eps in EIGEN_EPS:
            records.append(
                _eigen_sweep(
                    "y_Z",
                    family,
                    EIGEN_CAP,
                    family.label() + ",eps=" + rational_str(eps),
                    mu=mu,
                    gamma=gamma,
                    eps=eps,
                )
            )
    for mu in GEN_HERMITE_MUS:
        family = gen_hermite_family(mu)
        for eps in EIGEN_EPS:
            records.append(
                _eigen_sweep(
                    "gh_Omega",
                    family,
                    EIGEN_CAP,
                    family.label() + ",eps=" + rational_str(eps),
                    mu=mu,
                    eps=eps,
                )
            )
            records.append(
                _eigen_sweep(
                    "gh_OmegaTilde",
                    family,
                    EIGEN_CAP_GAUSSIAN,
                    family.label() + ",eps=" + rational_str(eps),
                    gaussian=True,
                    mu=mu,
                    eps=eps,
                )
            )
    return records


# --------------------------------------------------------------------------
# Criterion: the structure-relation identities hold on all monomials up to
# the degree cap, for several parameter sets and reflection weights.


def suite_algebra() -> List[VerificationRecord]:
    records: List[VerificationRecord] = []
    for alpha, beta, gamma in CHIHARA_SETS:
        for eps in ALGEBRA_EPS:
            start = time.perf_counter()
            reports = verify_algebra(
                "chihara", ALGEBRA_CAP, alpha=alpha, beta=beta, gamma=gamma, eps=eps
            )
            ok = all(r.passed for r in reports)
            bad = next((r.relation for r in reports if not r.passed), None)
            records.append(
                exact_record(
                    "algebra",
                    "chihara",
                    format_params(
                        (("alpha", alpha), ("beta", beta), ("gamma", gamma), ("eps", eps))
                    ),
                    f"0..{ALGEBRA_CAP}",
                    millis=_millis(start),
                    passed=ok,
                    residual="0" if ok else f"fails {bad}",
                )
            )
    for mu, gamma in EXT_HERMITE_SETS:
        for eps in ALGEBRA_EPS:
            start = time.perf_counter()
            reports = verify_algebra(
                "ext_hermite", ALGEBRA_CAP, mu=mu, gamma=gamma, eps=eps
            )
            ok = all(r.passed for r in reports)
            bad = next((r.relation for r in reports if not r.passed), None)
            records.append(
                exact_record(
                    "algebra",
                    "ext_hermite",
                    format_params((("mu", mu), ("gamma", gamma), ("eps", eps))),
                    f"0..{ALGEBRA_CAP}",
                    millis=_millis(start),
                    passed=ok,
                    residual="0" if ok else f"fails {bad}",
                )
            )
    return records


# --------------------------------------------------------------------------
# Criterion: even/odd halves of the Chihara family are rescaled monic
# Jacobi polynomials in the quadratic variable.


def suite_jacobi() -> List[VerificationRecord]:
    records: List[VerificationRecord] = []
    x = LaurentPoly.x()
    for alpha, beta, gamma in JACOBI_SETS:
        family = chihara_family(alpha, beta, gamma)
        start = time.perf_counter()
        polys = generate_monic(family, 2 * JACOBI_CAP + 1)
        quad_var = LaurentPoly({0: 1 + 2 * gamma * gamma, 2: F(-2)})
        ok = True
        residual = "0"
        for n in range(JACOBI_CAP + 1):
            scale = F(-1, 2) ** n
            even = classical_jacobi_monic(n, alpha, beta).compose(quad_var) * scale
            if polys[2 * n] != even:
                ok = False
                residual = f"even half fails at n={n}"
                break
            odd = (x - gamma) * (
                classical_jacobi_monic(n, alpha + 1, beta).compose(quad_var) * scale
            )
            if polys[2 * n + 1] != odd:
                ok = False
                residual = f"odd half fails at n={n}"
                break
        records.append(
            exact_record(
                "jacobi",
                "chihara",
                family.label(),
                f"0..{2 * JACOBI_CAP + 1}",
                millis=_millis(start),
                passed=ok,
                residual=residual,
            )
        )
    return records


# --------------------------------------------------------------------------
# Criterion: quadrature Gram matrices are diagonal to tolerance, and the
# closed-form moment reduction agrees with direct adaptive integration.


def suite_orthogonality() -> List[VerificationRecord]:
    records: List[VerificationRecord] = []
    for family in _quadrature_families():
        start = time.perf_counter()
        worst = gram_offdiag_worst(gram_matrix(family, GRAM_CAP))
        records.append(
            float_record(
                "orthogonality",
                family.name,
                family.label(),
                f"0..{GRAM_CAP}",
                residual=worst,
                tolerance=GRAM_TOLERANCE,
                millis=_millis(start),
            )
        )
    # Cross-check the quadrature reduction against a direct adaptive
    # integral on generic (non-orthogonal) integrands.
    probe = LaurentPoly({0: F(1), 2: F(1), 3: F(1)})
    mate = LaurentPoly({1: F(1), 2: F(1)})
    for alpha, beta, gamma in ((F(1), F(1), F(1, 2)), (F(1, 2), F(3, 4), F(1, 3))):
        family = chihara_family(alpha, beta, gamma)
        start = time.perf_counter()
        spec = weight_for(family)
        reduced = inner_product(spec, probe, mate)
        raw = raw_inner_product(spec, probe, mate)
        rel = abs(reduced - raw) / max(abs(raw), 1e-300)
        records.append(
            float_record(
                "orthogonality",
                "reduction-oracle",
                family.label(),
                "integrand deg 3",
                residual=rel,
                tolerance=REDUCTION_TOLERANCE,
                millis=_millis(start),
            )
        )
    return records


# --------------------------------------------------------------------------
# Criterion: norm ratios from quadrature match the closed forms, and the
# closed-form ratio equals the recurrence coefficient exactly.


def suite_norms() -> List[VerificationRecord]:
    records: List[VerificationRecord] = []
    for family in _quadrature_families():
        start = time.perf_counter()
        worst = 0.0
        for n in range(1, NORM_CAP + 1):
            exact, quad = norm_ratio_check(family, n)
            worst = max(worst, abs(quad / float(exact) - 1.0))
        records.append(
            float_record(
                "norms",
                family.name,
                family.label(),
                f"1..{NORM_CAP}",
                residual=worst,
                tolerance=NORM_TOLERANCE,
                millis=_millis(start),
            )
        )
        start = time.perf_counter()
        ok = all(
            norm_ratio_exact(family, n) == family.sub(n)
            for n in range(1, NORM_EXACT_CAP + 1)
        )
        records.append(
            exact_record(
                "norms",
                family.name + "-ratio-identity",
                family.label(),
                f"1..{NORM_EXACT_CAP}",
                millis=_millis(start),
                passed=ok,
                residual="0" if ok else "nonzero",
            )
        )
    return records


# --------------------------------------------------------------------------
# Criterion: the weight satisfies its first-order distributional equation
# exactly, and reflected samples agree to float tolerance.


def suite_pearson() -> List[VerificationRecord]:
    records: List[VerificationRecord] = []
    for alpha, beta, gamma in PEARSON_SETS:
        family = chihara_family(alpha, beta, gamma)
        start = time.perf_counter()
        report = verify_pearson(family, samples_per_side=20, tolerance=REFLECTION_TOLERANCE)
        elapsed = _millis(start)
        records.append(
            exact_record(
                "pearson",
                "weight-equation",
                family.label(),
                "weight",
                millis=elapsed / 2,
                passed=report.ode_exact,
                residual="0" if report.ode_exact else "nonzero",
            )
        )
        records.append(
            float_record(
                "pearson",
                "reflection-samples",
                family.label(),
                f"{report.reflection_samples} points",
                residual=report.reflection_worst,
                tolerance=REFLECTION_TOLERANCE,
                millis=elapsed / 2,
            )
        )
    return records


# --------------------------------------------------------------------------
# Criterion: Christoffel/Geronimus round trip, evaluation identity at the
# transform point, and the exact kernel-to-Chihara parameter map.


def suite_transform() -> List[VerificationRecord]:
    records: List[VerificationRecord] = []
    for a, b, c in TRANSFORM_SETS:
        family = big_m1_jacobi_family(a, b, c)
        label = family.label()
        start = time.perf_counter()
        polys = generate_monic(family, TRANSFORM_CAP + 1)
        a_ratios, c_ratios = split_ratios(family, TRANSFORM_CAP + 1)
        kernels = christoffel(polys, a_ratios)
        back = geronimus(kernels, c_ratios)
        ok = all(back[n] == polys[n] for n in range(len(back)))
        records.append(
            exact_record(
                "transform",
                "roundtrip",
                label,
                f"0..{len(back) - 1}",
                millis=_millis(start),
                passed=ok,
                residual="0" if ok else "nonzero",
            )
        )
        start = time.perf_counter()
        ok = all(
            polys[n + 1].evaluate(F(1)) == a_ratios[n] * polys[n].evaluate(F(1))
            for n in range(TRANSFORM_CAP + 1)
        )
        records.append(
            exact_record(
                "transform",
                "evaluation-at-one",
                label,
                f"0..{TRANSFORM_CAP}",
                millis=_millis(start),
                passed=ok,
                residual="0" if ok else "nonzero",
            )
        )
        start = time.perf_counter()
        kmap = kernel_map(a, b, c)
        residuals = kernel_to_chihara(kmap, kernels)
        ok = all(r.is_zero for r in residuals)
        records.append(
            exact_record(
                "transform",
                "chihara-map",
                label,
                f"0..{len(kernels) - 1}",
                millis=_millis(start),
                passed=ok,
                residual="0" if ok else "nonzero",
            )
        )
        start = time.perf_counter()
        mapped = chihara_family(kmap.alpha, kmap.beta, kmap.gamma_exact)
        ok = True
        for n in range(1, TRANSFORM_CAP + 1):
            f_n = kernel_recurrence_coeffs(a, b, c, n)[1]
            if mapped.sub(n) * (1 - c * c) != f_n:
                ok = False
                break
        records.append(
            exact_record(
                "transform",
                "coefficient-identity",
                label,
                f"1..{TRANSFORM_CAP}",
                millis=_millis(start),
                passed=ok,
                residual="0" if ok else "nonzero",
            )
        )
    return records


# --------------------------------------------------------------------------
# Criterion: the three contraction limits converge monotonically with
# empirical order near one, and the scaled-coefficient constant is stable.


def suite_limits() -> List[VerificationRecord]:
    records: List[VerificationRecord] = []
    cases = (
        ("cbi_h_to_0", cbi_case(), "a1=5,a2=3,b1=3/2,b2=1/2"),
        ("bigq_q_to_minus1", bigq_case(), "alpha=1,beta=1,g=3/5"),
        ("chihara_beta_to_inf", beta_case(), "mu=3/2,gamma=1/2"),
    )
    beta_report = None
    for limit_id, case, label in cases:
        start = time.perf_counter()
        report = run_limit(case)
        if limit_id == "chihara_beta_to_inf":
            beta_report = report
        orders = [o for o in report.poly_orders if o is not None]
        if report.coeff_order is not None:
            orders.append(report.coeff_order)
        if report.overall_order is not None:
            orders.append(report.overall_order)
        if report.monotone_ok and orders:
            residual = max(abs(o - 1.0) for o in orders)
        else:
            residual = 1.0
        records.append(
            float_record(
                "limits",
                limit_id,
                label,
                f"0..{case.degree_cap}",
                residual=residual,
                tolerance=ORDER_TOLERANCE,
                millis=_millis(start),
            )
        )
    # Stability of the scaled sub-coefficient constant for the large-beta
    # contraction: max_n beta * |sigma_n(beta) - theta_n / beta| should stay
    # bounded by the same constant on every step of the grid.
    start = time.perf_counter()
    assert beta_report is not None
    constants = []
    for result in beta_report.results:
        step = result.step
        relevant = [e for e in result.sub_errors if e > NOISE_FLOOR]
        if relevant:
            constants.append(max(relevant) / step)
    finite = all(math.isfinite(c) for c in constants) and len(constants) >= 2
    spread = (max(constants) / min(constants) - 1.0) if finite else float("inf")
    records.append(
        float_record(
            "limits",
            "beta-constant-stability",
            "mu=3/2,gamma=1/2",
            f"{len(constants)} steps",
            residual=spread if finite else 1.0,
            tolerance=CONSTANT_SPREAD_TOLERANCE,
            millis=_millis(start),
        )
    )
    return records


# --------------------------------------------------------------------------
# Criterion: deliberately broken inputs are detected.  A record passes when
# the corruption is caught, so the suite is green exactly when the checks
# have teeth.


def suite_negative_controls() -> List[VerificationRecord]:
    records: List[VerificationRecord] = []

    # Perturb the reflection-free first-derivative term of the eigenvalue
    # operator by one unit and confirm the eigen-equation check fails.
    start = time.perf_counter()
    alpha, beta, gamma = CHIHARA_SETS[0]
    eps = F(2, 3)
    family = chihara_family(alpha, beta, gamma)
    polys = generate_monic(family, 4)
    good = build_operator("chihara_D", alpha=alpha, beta=beta, gamma=gamma, eps=eps)
    bad = good + DunklOperator(
        (term(RatFunc.of(LaurentPoly.const(F(-1)), 2 * LaurentPoly.x()), k=1),)
    )
    detected = False
    for n, poly in enumerate(polys):
        eigenvalue = expected_eigenvalue(
            "chihara_D", n, alpha=alpha, beta=beta, eps=eps
        )
        try:
            if not eigencheck(bad, poly, eigenvalue).is_zero:
                detected = True
                break
        except NotPolynomial:
            detected = True
            break
    records.append(
        exact_record(
            "negative-controls",
            "perturbed-eigen-operator",
            family.label() + ",eps=2/3",
            "0..4",
            millis=_millis(start),
            passed=detected,
            residual="0" if detected else "undetected",
        )
    )

    # Perturb one Christoffel ratio by one unit and confirm the kernel
    # construction rejects the now-inconsistent division.
    start = time.perf_counter()
    a, b, c = TRANSFORM_SETS[0]
    fam = big_m1_jacobi_family(a, b, c)
    polys = generate_monic(fam, 6)
    a_ratios, _ = split_ratios(fam, 6)
    corrupted = list(a_ratios)
    corrupted[2] = corrupted[2] + 1
    detected = False
    try:
        christoffel(polys, corrupted)
    except NotDivisible:
        detected = True
    records.append(
        exact_record(
            "negative-controls",
            "perturbed-transform-ratio",
            fam.label(),
            "0..5",
            millis=_millis(start),
            passed=detected,
            residual="0" if detected else "undetected",
        )
    )
    return records


# --------------------------------------------------------------------------
# Runner.


ALL_SUITES: Dict[str, Callable[[], List[VerificationRecord]]] = {
    "construction": suite_construction,
    "eigen": suite_eigen,
    "algebra": suite_algebra,
    "jacobi": suite_jacobi,
    "orthogonality": suite_orthogonality,
    "norms": suite_norms,
    "pearson": suite_pearson,
    "transform": suite_transform,
    "limits": suite_limits,
    "negative-controls": suite_negative_controls,
}

SUITE_NAMES: Tuple[str, ...] = tuple(ALL_SUITES)


def run_suites(
    names: Optional[Iterable[str]] = None,
    max_workers: Optional[int] = None,
) -> List[VerificationRecord]:
    """Run the named suites (all by default) and return their records.

    Runs sequentially unless ``max_workers`` asks for a thread pool.  The
    suites are independent pure computations and results are collected with
    order-preserving ``map``, so the returned list is identical for every
    ``max_workers`` value.
    """

    chosen = list(SUITE_NAMES) if names is None else list(names)
    unknown = [name for name in chosen if name not in ALL_SUITES]
    if unknown:
        raise ValueError(f"unknown suite name(s): {', '.join(unknown)}")
    functions = [ALL_SUITES[name] for name in chosen]
    if max_workers is not None and max_workers < 1:
        raise ValueError("max_workers must be a positive integer")
    if max_workers is None or max_workers == 1 or len(functions) <= 1:
        batches = [fn() for fn in functions]
    else:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            batches = list(pool.map(lambda fn: fn(), functions))
    return [record for batch in batches for record in batch]
