"""Floating-point verification of three limit processes between families.

Three degenerations are checked, each by running the source family's monic
recurrence at a decreasing sequence of step parameters, rescaling to the
target normalization, and measuring coefficient errors against the exact
target polynomials:

* ``cbi_h_to_0`` -- complementary Bannai-Ito at ``rho1 = a1/h + b1``,
  ``rho2 = a2/h + b2``, ``r1 = a1/h``, ``r2 = a2/h`` contracts, under
  ``x -> s x / h`` with ``s = sqrt(a1^2 - a2^2)`` and monic renormalization,
  to the Chihara family with ``alpha = b2 - 1/2``, ``beta = b1 + 1/2``,
  ``gamma = a2 / s``.

* ``bigq_q_to_minus1`` -- big q-Jacobi at ``q = -e^eps``,
  ``qalpha = e^{2 eps beta}``, ``qbeta = -e^{eps(2 alpha + 1)}``,
  ``qgamma = -g`` contracts, as ``eps -> 0`` and under
  ``x -> x sqrt(1 - g^2)``, to the Chihara family with parameters
  ``(alpha, beta, g / sqrt(1 - g^2))``.

* ``chihara_beta_to_inf`` -- Chihara at ``(mu - 1/2, beta, gamma/sqrt(beta))``
  contracts, as ``beta -> infinity`` and under ``x -> x / sqrt(beta)`` with
  coefficient scaling ``beta^{n/2}``, to the one-parameter extension of the
  generalized Hermite family with parameters ``(mu, gamma)``.  Here both the
  polynomial limit and the recurrence-coefficient limits
  ``beta * sigma_{2m} -> m`` and ``beta * sigma_{2m+1} -> m + mu + 1/2``
  are measured.

All three are verified in floating point: the substitutions involve ``e^eps``
and ``1/h`` scalings that have no exact rational form, while the exact target
polynomials are converted to float for the comparison.  Each report carries
the per-degree error ``e(h)`` at every step plus the empirical convergence
order ``p = log(e(h)/e(rh)) / log(1/r)``, which for all three processes sits
at 1 to within a few parts in 1e4 on the default grids.  A deliberately
wrong parameter map (``qgamma = +g``) is detected by the same machinery: the
odd-degree errors plateau at order ~0 and the report flags non-convergence.

The weight functions themselves are not limits of the source weights, so no
weight-level check is attempted here.

Rescale factors are kept exact-rational on the target side, so the source
parameters must make ``s`` rational (``IrrationalScale`` otherwise); the
default grids use Pythagorean choices (``a1=5, a2=3``; ``g=3/5``).

Steps are independent of each other and every function here is pure, so the
per-step work may safely run concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .exactnum import Scalar, _as_fraction
from .families import (
    FamilySpec,
    _chihara_sigma,
    _cbi_tau,
    big_q_jacobi_AC,
    chihara_family,
    ext_hermite_family,
    generate_monic,
)
from .transforms import IrrationalScale, _rational_sqrt

LIMIT_IDS = ("cbi_h_to_0", "bigq_q_to_minus1", "chihara_beta_to_inf")

#: Default step grid: first step, geometric ratio, and step count.
DEFAULT_FIRST_STEP = 1e-3
DEFAULT_STEP_RATIO = 0.1
DEFAULT_STEP_COUNT = 3

#: Default parameters of the three standard cases.
CBI_LIMIT_DEFAULTS: Dict[str, Fraction] = {
    "a1": Fraction(5),
    "a2": Fraction(3),
    "b1": Fraction(3, 2),
    "b2": Fraction(1, 2),
}
BIGQ_LIMIT_DEFAULTS: Dict[str, Fraction] = {
    "alpha": Fraction(1),
    "beta": Fraction(1),
    "g": Fraction(3, 5),
}
BETA_LIMIT_DEFAULTS: Dict[str, Fraction] = {
    "mu": Fraction(3, 2),
    "gamma": Fraction(1, 2),
}

#: Errors at or below this magnitude are treated as float rounding noise and
#: exempted from monotonicity and order checks (e.g. the beta->inf diagonal,
#: which the rescaling reproduces exactly up to 1-2 ulp).
NOISE_FLOOR = 1e-13

#: Acceptance band for the empirical convergence order.
ORDER_BAND = (0.8, 1.2)

_GEOMETRIC_RTOL = 1e-9


class DegenerateStep(RuntimeError):
    """A source recurrence denominator vanished (or overflowed) at a step."""


@dataclass(frozen=True)
class SourceStep:
    """Float recurrence model of the source family at one step value.

    ``diag``/``sub`` give the monic three-term coefficients of the source
    polynomials; ``rescale`` is the factor ``sigma`` such that
    ``sigma^{-n} P_n(sigma x)`` is the object compared against the target.
    ``params`` echoes the concrete source-family parameters for the record.
    """

    params: Tuple[Tuple[str, float], ...]
    diag: Callable[[int], float]
    sub: Callable[[int], float]
    rescale: float


@dataclass(frozen=True)
class LimitCase:
    """One limit process: source model per step, exact target, step grid."""

    limit_id: str
    source: Callable[[float], SourceStep]
    target: FamilySpec
    degree_cap: int
    steps: Tuple[float, ...]

    def __post_init__(self) -> None:
        if self.limit_id not in LIMIT_IDS:
            raise ValueError(f"unknown limit id {self.limit_id!r}")
        if self.degree_cap < 1:
            raise ValueError("degree cap must be at least 1")
        steps = tuple(float(h) for h in self.steps)
        object.__setattr__(self, "steps", steps)
        if len(steps) < 3:
            raise ValueError("a limit case needs at least 3 steps")
        if any(h <= 0 for h in steps):
            raise ValueError("step values must be positive")
        ratios = [b / a for a, b in zip(steps, steps[1:])]
        if any(r >= 1 for r in ratios):
            raise ValueError("step sequence must be strictly decreasing")
        first = ratios[0]
        if any(abs(r - first) > _GEOMETRIC_RTOL * first for r in ratios):
            raise ValueError("step sequence must be geometric (constant ratio)")

    @property
    def ratio(self) -> float:
        """The constant ratio of consecutive steps (< 1)."""
        return self.steps[1] / self.steps[0]


def geometric_steps(
    first: float = DEFAULT_FIRST_STEP,
    count: int = DEFAULT_STEP_COUNT,
    ratio: float = DEFAULT_STEP_RATIO,
) -> Tuple[float, ...]:
    """Strictly decreasing geometric grid ``first * ratio**k``, k < count."""
    if count < 3:
        raise ValueError("at least 3 steps are required")
    if not 0 < ratio < 1:
        raise ValueError("ratio must lie in (0, 1)")
    if first <= 0:
        raise ValueError("first step must be positive")
    return tuple(first * ratio**k for k in range(count))


# -- case constructors --------------------------------------------------------


def cbi_case(
    a1: Scalar = CBI_LIMIT_DEFAULTS["a1"],
    a2: Scalar = CBI_LIMIT_DEFAULTS["a2"],
    b1: Scalar = CBI_LIMIT_DEFAULTS["b1"],
    b2: Scalar = CBI_LIMIT_DEFAULTS["b2"],
    degree_cap: int = 6,
    steps: Optional[Sequence[float]] = None,
) -> LimitCase:
    """Complementary Bannai-Ito ``h -> 0`` contraction to Chihara.

    Requires ``a1^2 - a2^2 > 0`` and rational ``s = sqrt(a1^2 - a2^2)`` so
    the target ``chihara(b2 - 1/2, b1 + 1/2, a2/s)`` has exact parameters.
    """
    a1, a2, b1, b2 = (_as_fraction(v) for v in (a1, a2, b1, b2))
    s_squared = a1 * a1 - a2 * a2
    if s_squared <= 0:
        raise ValueError("cbi_h_to_0 requires a1^2 - a2^2 > 0")
    s = _rational_sqrt(s_squared)
    if s is None:
        raise IrrationalScale(
            f"sqrt({s_squared}) is irrational; pick a1, a2 with a rational gap"
        )
    target = chihara_family(b2 - Fraction(1, 2), b1 + Fraction(1, 2), a2 / s)
    a1f, a2f, b1f, b2f, sf = float(a1), float(a2), float(b1), float(b2), float(s)

    def source(h: float) -> SourceStep:
        p = {
            "rho1": a1f / h + b1f,
            "rho2": a2f / h + b2f,
            "r1": a1f / h,
            "r2": a2f / h,
        }
        return SourceStep(
            params=tuple(sorted(p.items())),
            diag=lambda n: (-1) ** n * p["rho2"],
            sub=lambda n: 0.0 if n == 0 else float(_cbi_tau(p, n)),
            rescale=sf / h,
        )

    return LimitCase(
        "cbi_h_to_0", source, target, degree_cap,
        tuple(steps) if steps is not None else geometric_steps(),
    )


def bigq_case(
    alpha: Scalar = BIGQ_LIMIT_DEFAULTS["alpha"],
    beta: Scalar = BIGQ_LIMIT_DEFAULTS["beta"],
    g: Scalar = BIGQ_LIMIT_DEFAULTS["g"],
    degree_cap: int = 6,
    steps: Optional[Sequence[float]] = None,
    wrong_gamma_sign: bool = False,
) -> LimitCase:
    """Big q-Jacobi ``q -> -1`` contraction to Chihara.

    Requires ``|g| < 1`` and rational ``sqrt(1 - g^2)`` so the target
    ``chihara(alpha, beta, g/sqrt(1-g^2))`` has exact parameters.  With
    ``wrong_gamma_sign=True`` the source map deliberately uses ``qgamma=+g``
    instead of ``-g``; the run then serves as a negative control and must be
    flagged as non-convergent.
    """
    alpha, beta, g = (_as_fraction(v) for v in (alpha, beta, g))
    if abs(g) >= 1:
        raise ValueError("bigq_q_to_minus1 requires |g| < 1")
    s = _rational_sqrt(1 - g * g)
    if s is None:
        raise IrrationalScale(
            f"sqrt(1 - {g}^2) is irrational; pick g from a Pythagorean pair"
        )
    target = chihara_family(alpha, beta, g / s)
    alphaf, betaf, gf, sf = float(alpha), float(beta), float(g), float(s)
    sign = 1.0 if wrong_gamma_sign else -1.0

    def source(eps: float) -> SourceStep:
        p = {
            "qalpha": math.exp(2 * eps * betaf),
            "qbeta": -math.exp(eps * (2 * alphaf + 1)),
            "qgamma": sign * gf,
            "q": -math.exp(eps),
        }

        def sub(n: int) -> float:
            if n == 0:
                return 0.0
            return float(big_q_jacobi_AC(p, n - 1)[0] * big_q_jacobi_AC(p, n)[1])

        return SourceStep(
            params=tuple(sorted(p.items())),
            diag=lambda n: float(1 - sum(big_q_jacobi_AC(p, n))),
            sub=sub,
            rescale=sf,
        )

    return LimitCase(
        "bigq_q_to_minus1", source, target, degree_cap,
        tuple(steps) if steps is not None else geometric_steps(),
    )


def beta_case(
    mu: Scalar = BETA_LIMIT_DEFAULTS["mu"],
    gamma: Scalar = BETA_LIMIT_DEFAULTS["gamma"],
    degree_cap: int = 6,
    steps: Optional[Sequence[float]] = None,
) -> LimitCase:
    """Chihara ``beta -> infinity`` contraction to the extended Hermite family.

    The step parameter is ``h = 1/beta``; the source runs at
    ``chihara(mu - 1/2, 1/h, gamma * sqrt(h))`` and is compared under
    ``x -> x sqrt(h)`` with coefficient scaling ``h^{-n/2}`` against the
    target ``ext_hermite(mu, gamma)``.
    """
    mu, gamma = _as_fraction(mu), _as_fraction(gamma)
    target = ext_hermite_family(mu, gamma)
    alphaf, gammaf = float(mu) - 0.5, float(gamma)

    def source(h: float) -> SourceStep:
        root_h = math.sqrt(h)
        p = {"alpha": alphaf, "beta": 1.0 / h, "gamma": gammaf * root_h}
        return SourceStep(
            params=tuple(sorted(p.items())),
            diag=lambda n: (-1) ** n * p["gamma"],
            sub=lambda n: 0.0 if n == 0 else float(_chihara_sigma(p, n)),
            rescale=root_h,
        )

    return LimitCase(
        "chihara_beta_to_inf", source, target, degree_cap,
        tuple(steps) if steps is not None else geometric_steps(),
    )


def default_cases() -> Tuple[LimitCase, LimitCase, LimitCase]:
    """The three standard cases at their default parameters and grids."""
    return (cbi_case(), bigq_case(), beta_case())


# -- running a case -----------------------------------------------------------


@dataclass(frozen=True)
class StepResult:
    """Errors measured at one step value.

    ``poly_errors[n]`` is the max absolute coefficient error of the rescaled
    source polynomial of degree ``n`` against the target polynomial;
    ``diag_errors[n]``/``sub_errors[n]`` compare the rescaled recurrence
    coefficients ``diag_src(n)/sigma`` and ``sub_src(n)/sigma^2`` against the
    target's ``diag(n)`` and ``sub(n)``.
    """

    step: float
    source_params: Tuple[Tuple[str, float], ...]
    poly_errors: Tuple[float, ...]
    diag_errors: Tuple[float, ...]
    sub_errors: Tuple[float, ...]

    @property
    def max_poly_error(self) -> float:
        return max(self.poly_errors)

    @property
    def max_coeff_error(self) -> float:
        return max(max(self.diag_errors), max(self.sub_errors))


@dataclass(frozen=True)
class LimitReport:
    """Per-step errors, empirical orders, and the convergence verdict.

    Orders are Richardson quotients ``log(e(h)/e(rh))/log(1/r)`` from the
    final step pair; entries are ``None`` where either error sits at or below
    ``NOISE_FLOOR`` (already at rounding noise, order meaningless).
    ``converged`` requires, over degrees up to ``min(cap, 6)`` and the
    recurrence-coefficient channel: monotone error decay after the first
    step, and every computable order inside ``ORDER_BAND``.
    """

    case: LimitCase
    results: Tuple[StepResult, ...]
    poly_orders: Tuple[Optional[float], ...]
    coeff_order: Optional[float]
    overall_order: Optional[float]
    monotone_ok: bool
    orders_ok: bool

    @property
    def converged(self) -> bool:
        return self.monotone_ok and self.orders_ok

    @property
    def final(self) -> StepResult:
        return self.results[-1]

    def max_errors(self) -> Tuple[float, ...]:
        """Max polynomial coefficient error at each step, coarse to fine."""
        return tuple(r.max_poly_error for r in self.results)


def _probe(fn: Callable[[int], float], n: int, step: float, what: str) -> float:
    try:
        value = fn(n)
    except ZeroDivisionError:
        raise DegenerateStep(
            f"source {what}({n}) denominator vanishes at step {step:g}"
        ) from None
    if not math.isfinite(value):
        raise DegenerateStep(f"source {what}({n}) is not finite at step {step:g}")
    return value


def _float_monic(diag: Sequence[float], sub: Sequence[float], N: int) -> List[List[float]]:
    """Dense float coefficient lists of monic P_0..P_N (index j = x^j)."""
    polys = [[1.0]]
    if N == 0:
        return polys
    polys.append([-diag[0], 1.0])
    for n in range(1, N):
        cur, prev = polys[n], polys[n - 1]
        nxt = [0.0] * (n + 2)
        for j, c in enumerate(cur):
            nxt[j + 1] += c
            nxt[j] -= diag[n] * c
        for j, c in enumerate(prev):
            nxt[j] -= sub[n] * c
        polys.append(nxt)
    return polys


def _order(coarse: float, fine: float, ratio: float) -> Optional[float]:
    if coarse <= NOISE_FLOOR or fine <= NOISE_FLOOR:
        return None
    return math.log(coarse / fine) / math.log(1.0 / ratio)


def _monotone_after_first(series: Sequence[float]) -> bool:
    for k in range(1, len(series) - 1):
        if series[k + 1] > NOISE_FLOOR and series[k + 1] >= series[k]:
            return False
    return True


def run_limit(case: LimitCase) -> LimitReport:
    """Run one limit case over its step grid and measure convergence.

    For each step: build the source family's monic polynomials by the float
    three-term recurrence, rescale them to the target normalization
    (coefficient ``j`` of degree ``n`` picks up ``sigma^{j-n}``), and record
    per-degree coefficient errors plus the rescaled recurrence-coefficient
    errors.  Raises ``DegenerateStep`` if a source denominator vanishes.
    """
    cap = case.degree_cap
    target_polys = generate_monic(case.target, cap)
    tcoeffs = [[float(P.coeff(j)) for j in range(n + 1)] for n, P in enumerate(target_polys)]
    tdiag = [float(case.target.diag(n)) for n in range(cap + 1)]
    tsub = [float(case.target.sub(n)) for n in range(cap + 1)]

    results = []
    for h in case.steps:
        model = case.source(h)
        sigma = model.rescale
        if not math.isfinite(sigma) or sigma <= 0:
            raise DegenerateStep(f"rescale factor degenerate at step {h:g}")
        diag = [_probe(model.diag, n, h, "diag") for n in range(cap + 1)]
        sub = [_probe(model.sub, n, h, "sub") for n in range(cap + 1)]
        polys = _float_monic(diag, sub, cap)
        poly_errors = tuple(
            max(
                abs(polys[n][j] * sigma ** (j - n) - tcoeffs[n][j])
                for j in range(n + 1)
            )
            for n in range(cap + 1)
        )
        diag_errors = tuple(abs(diag[n] / sigma - tdiag[n]) for n in range(cap + 1))
        sub_errors = tuple(
            abs(sub[n] / (sigma * sigma) - tsub[n]) for n in range(cap + 1)
        )
        results.append(
            StepResult(h, model.params, poly_errors, diag_errors, sub_errors)
        )

    ratio = case.steps[-1] / case.steps[-2]
    coarse, fine = results[-2], results[-1]
    poly_orders = tuple(
        _order(coarse.poly_errors[n], fine.poly_errors[n], ratio)
        for n in range(cap + 1)
    )
    coeff_order = _order(coarse.max_coeff_error, fine.max_coeff_error, ratio)
    overall_order = _order(coarse.max_poly_error, fine.max_poly_error, ratio)

    tracked = range(1, min(cap, 6) + 1)
    monotone_ok = all(
        _monotone_after_first([r.poly_errors[n] for r in results]) for n in tracked
    ) and _monotone_after_first([r.max_coeff_error for r in results])

    lo, hi = ORDER_BAND
    candidate_orders = [poly_orders[n] for n in tracked] + [coeff_order, overall_order]
    orders_ok = all(lo <= p <= hi for p in candidate_orders if p is not None)

    return LimitReport(
        case=case,
        results=tuple(results),
        poly_orders=poly_orders,
        coeff_order=coeff_order,
        overall_order=overall_order,
        monotone_ok=monotone_ok,
        orders_ok=orders_ok,
    )
