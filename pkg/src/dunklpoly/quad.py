"""Floating-point orthogonality verification through Gauss quadrature.

Everything here rests on one reduction.  The Chihara-type weights live on a
two-component symmetric set; writing a polynomial product as
``f(x) g(x) = E(x^2) + x O(x^2)`` and summing the two branches of the
support collapses the integral to a single classical weight on a half line
or unit interval:

* Chihara  ``theta(x)(x+gamma)(x^2-gamma^2)^alpha (1+gamma^2-x^2)^beta`` on
  ``[-sqrt(1+gamma^2), -|gamma|] U [|gamma|, sqrt(1+gamma^2)]`` reduces with
  ``t = x^2 - gamma^2`` to

      integral_0^1 t^alpha (1-t)^beta [E(t+gamma^2) + gamma O(t+gamma^2)] dt,

* the Laguerre-type families (``ext_hermite``, ``gen_hermite``) reduce the
  same way to ``exp(-gamma^2) integral_0^inf t^(mu-1/2) e^(-t) [...] dt``,
* the symmetric specializations (``gegenbauer``, ``gen_hermite``) are the
  ``gamma = 0`` cases, where the odd part drops out.

The reduced integrand is a polynomial in t, so a Gauss rule for the
classical weight integrates it exactly up to rounding.  The reduction is
validated in the test suite against a brute-force adaptive Simpson
integration of the raw two-interval integral.

Gauss rules are built from scratch: the Jacobi matrix of the classical
weight (exact rational recurrence coefficients, then rounded) is
diagonalized by an implicit-shift QL iteration with deflation at negligible
off-diagonal entries (threshold 1e-15 of the matrix scale, sweep cap 10^4),
nodes are the eigenvalues and weights are ``mu0`` times the squared first
eigenvector components.  Every rule is validated at build time against
closed-form moments up to degree ``min(2n-1, 8)``.

Gamma functions are avoided in all norm *ratios* (they cancel into
Pochhammer products over the rationals); an absolute-normalization value
through the platform Gamma function is used only for the ``k_0`` and
``l_0`` spot checks (``norm_head``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .exactnum import LaurentPoly, RatFunc, Scalar, _as_fraction
from .families import FamilySpec, generate_monic, pochhammer

SPLIT_THRESHOLD = 1e-15
RESIDUAL_BOUND = 1e-12
MOMENT_TOLERANCE = 1e-13
MAX_SWEEPS = 10_000


class NoConvergence(RuntimeError):
    """The QL iteration exceeded its sweep cap or failed its residual bound."""


class RuleTooSmall(ValueError):
    """The requested node count cannot integrate the given polynomial degree."""


# -- symmetric tridiagonal eigenproblem ------------------------------------------


@dataclass(frozen=True)
class SymTridiag:
    """Symmetric tridiagonal matrix: diagonal and (one shorter) off-diagonal."""

    diag: Tuple[float, ...]
    offdiag: Tuple[float, ...]

    def __post_init__(self):
        if len(self.offdiag) != max(len(self.diag) - 1, 0):
            raise ValueError("offdiag must be one entry shorter than diag")
        object.__setattr__(self, "diag", tuple(float(v) for v in self.diag))
        object.__setattr__(self, "offdiag", tuple(float(v) for v in self.offdiag))

    @property
    def scale(self) -> float:
        """Infinity norm: the largest absolute row sum."""
        n = len(self.diag)
        worst = 0.0
        for i in range(n):
            row = abs(self.diag[i])
            if i > 0:
                row += abs(self.offdiag[i - 1])
            if i < n - 1:
                row += abs(self.offdiag[i])
            worst = max(worst, row)
        return worst


def symtridiag_eigen(
    T: SymTridiag, max_sweeps: int = MAX_SWEEPS
) -> Tuple[List[float], List[float]]:
    """Eigenvalues (ascending) and first components of the unit eigenvectors.

    Implicit-shift QL with deflation at off-diagonal entries below
    ``1e-15 * scale``.  The result is verified against the residual bound
    ``max ||T v - lambda v||_inf <= 1e-12 * scale``; a sweep-cap overflow or
    a residual violation raises ``NoConvergence``.
    """
    n = len(T.diag)
    if n == 0:
        return [], []
    scale = T.scale
    if scale == 0.0:
        return [0.0] * n, [1.0] + [0.0] * (n - 1)
    d = list(T.diag)
    e = list(T.offdiag) + [0.0]
    z = [[1.0 if r == c else 0.0 for c in range(n)] for r in range(n)]
    threshold = SPLIT_THRESHOLD * scale
    sweeps = 0
    for l in range(n):
        while True:
            m = l
            while m < n - 1 and abs(e[m]) > threshold:
                m += 1
            if m == l:
                break
            sweeps += 1
            if sweeps > max_sweeps:
                raise NoConvergence(f"QL sweep cap {max_sweeps} exceeded")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                for row in z:
                    f = row[i + 1]
                    row[i + 1] = s * row[i] + c * f
                    row[i] = c * row[i] - s * f
            else:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
    order = sorted(range(n), key=lambda i: d[i])
    values = [d[i] for i in order]
    vectors = [[z[r][i] for r in range(n)] for i in order]
    _check_residuals(T, values, vectors, scale)
    return values, [vec[0] for vec in vectors]


def _check_residuals(
    T: SymTridiag, values: List[float], vectors: List[List[float]], scale: float
) -> None:
    n = len(values)
    for lam, vec in zip(values, vectors):
        for r in range(n):
            tv = T.diag[r] * vec[r]
            if r > 0:
                tv += T.offdiag[r - 1] * vec[r - 1]
            if r < n - 1:
                tv += T.offdiag[r] * vec[r + 1]
            if abs(tv - lam * vec[r]) > RESIDUAL_BOUND * scale:
                raise NoConvergence(
                    f"eigen residual {abs(tv - lam * vec[r]):.3e} exceeds "
                    f"{RESIDUAL_BOUND:.0e} * {scale:.3e}"
                )


# -- classical weights and their Gauss rules ---------------------------------------


def _normalize_weight_class(weight_class) -> Tuple:
    kind = weight_class[0]
    if kind == "jacobi":
        _, a, b = weight_class
        return ("jacobi", _as_fraction(a), _as_fraction(b))
    if kind == "generalized_laguerre":
        _, a = weight_class
        return ("generalized_laguerre", _as_fraction(a))
    raise ValueError(f"unknown weight class {weight_class!r}")


def _jacobi01_recurrence(a: Fraction, b: Fraction, k: int) -> Tuple[Fraction, Fraction]:
    """Monic recurrence (diag, sub) for the weight t^a (1-t)^b on [0, 1].

    Derived from the classical monic Jacobi coefficients on [-1, 1] for
    (1-z)^b (1+z)^a through the affine map t = (1+z)/2.
    """
    s = 2 * k + a + b
    if k == 0:
        diag_z = (a - b) / (a + b + 2)
        sub_z = Fraction(0)
    else:
        diag_z = (a * a - b * b) / (s * (s + 2))
        if k == 1:
            sub_z = 4 * (1 + a) * (1 + b) / ((2 + a + b) ** 2 * (3 + a + b))
        else:
            sub_z = (
                4 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1) * (s - 1))
            )
    return (diag_z + 1) / 2, sub_z / 4


def _laguerre_recurrence(a: Fraction, k: int) -> Tuple[Fraction, Fraction]:
    """Monic recurrence (diag, sub) for the weight t^a e^(-t) on [0, inf)."""
    return 2 * k + a + 1, Fraction(k) * (k + a)


def _zeroth_moment(weight_class: Tuple) -> float:
    if weight_class[0] == "jacobi":
        _, a, b = weight_class
        return math.gamma(float(a) + 1) * math.gamma(float(b) + 1) / math.gamma(
            float(a) + float(b) + 2
        )
    return math.gamma(float(weight_class[1]) + 1)


def _moment_ratio(weight_class: Tuple, j: int) -> Fraction:
    """Exact mu_j / mu_(j-1) for the classical weight, j >= 1."""
    if weight_class[0] == "jacobi":
        _, a, b = weight_class
        return (a + j) / (a + b + j + 1)
    return weight_class[1] + j


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss rule: ascending nodes, positive weights, stated exact degree."""

    nodes: Tuple[float, ...]
    weights: Tuple[float, ...]
    weight_class: Tuple
    exact_degree: int

    def integrate(self, poly: LaurentPoly) -> float:
        return sum(
            w * poly.evaluate_float(t) for t, w in zip(self.nodes, self.weights)
        )


def gauss_rule(weight_class, n: int) -> QuadratureRule:
    """Gauss rule with n nodes for ``("jacobi", a, b)`` on [0, 1] with weight
    t^a (1-t)^b, or ``("generalized_laguerre", a)`` on [0, inf) with weight
    t^a e^(-t).

    Nodes are Jacobi-matrix eigenvalues; weights are mu0 times the squared
    first eigenvector components.  The rule is validated against the exact
    moments of its weight up to degree min(2n-1, 8) before being returned.
    """
    weight_class = _normalize_weight_class(weight_class)
    if n < 1:
        raise ValueError("a Gauss rule needs at least one node")
    for param in weight_class[1:]:
        if param <= -1:
            raise ValueError("weight parameters must exceed -1")
    if weight_class[0] == "jacobi":
        recurrence = lambda k: _jacobi01_recurrence(weight_class[1], weight_class[2], k)
    else:
        recurrence = lambda k: _laguerre_recurrence(weight_class[1], k)
    diag = []
    subs = []
    for k in range(n):
        dk, sk = recurrence(k)
        diag.append(float(dk))
        if k >= 1:
            if sk <= 0:
                raise ValueError("recurrence sub-coefficient must be positive")
            subs.append(math.sqrt(float(sk)))
    values, firsts = symtridiag_eigen(SymTridiag(tuple(diag), tuple(subs)))
    mu0 = _zeroth_moment(weight_class)
    rule = QuadratureRule(
        nodes=tuple(values),
        weights=tuple(mu0 * v * v for v in firsts),
        weight_class=weight_class,
        exact_degree=2 * n - 1,
    )
    _validate_moments(rule)
    return rule


def _validate_moments(rule: QuadratureRule) -> None:
    moment = _zeroth_moment(rule.weight_class)
    for j in range(0, min(rule.exact_degree, 8) + 1):
        if j > 0:
            moment *= float(_moment_ratio(rule.weight_class, j))
        computed = sum(w * t**j for t, w in zip(rule.nodes, rule.weights))
        if abs(computed - moment) > MOMENT_TOLERANCE * abs(moment):
            raise NoConvergence(
                f"moment validation failed at degree {j}: "
                f"rule gives {computed!r}, weight has {moment!r}"
            )


# -- weights of the polynomial families --------------------------------------------


@dataclass(frozen=True)
class WeightSpec:
    """Weight function of a family: params, support, and pointwise values."""

    family: str
    params: Tuple[Tuple[str, Fraction], ...]
    support: str

    @property
    def p(self) -> Dict[str, Fraction]:
        return dict(self.params)

    @property
    def gamma(self) -> Fraction:
        return self.p.get("gamma", Fraction(0))

    def support_intervals(self) -> Tuple[Tuple[float, float], ...]:
        g = abs(float(self.gamma))
        if self.family == "chihara":
            hi = math.sqrt(1 + g * g)
            return ((-hi, -g), (g, hi))
        if self.family == "gegenbauer":
            return ((-1.0, 1.0),)
        if self.family == "ext_hermite":
            return ((-math.inf, -g), (g, math.inf))
        return ((-math.inf, math.inf),)

    def weight_value(self, x: float) -> float:
        p = {key: float(v) for key, v in self.params}
        if self.family == "chihara":
            g = p["gamma"]
            return (
                math.copysign(1.0, x)
                * (x + g)
                * (x * x - g * g) ** p["alpha"]
                * (1 + g * g - x * x) ** p["beta"]
            )
        if self.family == "gegenbauer":
            return abs(x) ** (2 * p["alpha"] + 1) * (1 - x * x) ** p["beta"]
        if self.family == "ext_hermite":
            g = p["gamma"]
            return (
                math.copysign(1.0, x)
                * (x + g)
                * (x * x - g * g) ** (p["mu"] - 0.5)
                * math.exp(-x * x)
            )
        return abs(x) ** (2 * p["mu"]) * math.exp(-x * x)

    def reduced_weight_class(self) -> Tuple:
        p = self.p
        if self.family in ("chihara", "gegenbauer"):
            return ("jacobi", p["alpha"], p["beta"])
        return ("generalized_laguerre", p["mu"] - Fraction(1, 2))

    def reduced_prefactor(self) -> float:
        if self.family == "ext_hermite":
            return math.exp(-float(self.gamma) ** 2)
        return 1.0


_SUPPORT_TEXT = {
    "chihara": "[-sqrt(1+gamma^2), -|gamma|] U [|gamma|, sqrt(1+gamma^2)]",
    "gegenbauer": "[-1, 1]",
    "ext_hermite": "(-inf, -|gamma|] U [|gamma|, inf)",
    "gen_hermite": "(-inf, inf)",
}


def weight_for(family: FamilySpec) -> WeightSpec:
    """The weight specification attached to an orthogonal family."""
    if family.name not in _SUPPORT_TEXT:
        raise ValueError(f"no continuous weight carried for family {family.name!r}")
    return WeightSpec(family.name, family.params, _SUPPORT_TEXT[family.name])


# -- inner products through the even/odd reduction -----------------------------------


def _even_odd_split(product: LaurentPoly) -> Tuple[LaurentPoly, LaurentPoly]:
    """E, O with product = E(x^2) + x O(x^2)."""
    even = {}
    odd = {}
    for exp, coef in product.items():
        if exp % 2 == 0:
            even[exp // 2] = coef
        else:
            odd[(exp - 1) // 2] = coef
    return LaurentPoly(even), LaurentPoly(odd)


def reduced_integrand(spec: WeightSpec, f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """E(t + gamma^2) + gamma O(t + gamma^2), exact over the rationals.

    The polynomial in t whose integral against the reduced classical weight
    is <f, g>; here f(x) g(x) = E(x^2) + x O(x^2).
    """
    even, odd = _even_odd_split(f * g)
    gamma = spec.gamma
    shift = gamma * gamma
    return even.substitute_affine(1, shift) + odd.substitute_affine(1, shift) * gamma


def _rule_size(degree: int, nodes: Optional[int]) -> int:
    """Default rule size with exactness margin; reject undersized requests."""
    if nodes is None:
        return degree // 2 + 2
    if 2 * nodes - 1 < degree + 1:
        raise RuleTooSmall(
            f"{nodes} nodes integrate degree {2 * nodes - 1} < {degree + 1}"
        )
    return nodes


def _branch_points(spec: WeightSpec, rule: QuadratureRule) -> List[float]:
    """x-values u_i = sqrt(t_i + gamma^2) over the positive support branch."""
    g = float(spec.gamma)
    return [math.sqrt(t + g * g) for t in rule.nodes]


def _branch_sum(
    spec: WeightSpec,
    rule: QuadratureRule,
    us: Sequence[float],
    pos: Sequence[float],
    neg: Sequence[float],
) -> float:
    """sum_i w_i [(u_i+gamma) pos_i + (u_i-gamma) neg_i] / (2 u_i), prefactored.

    ``pos_i``/``neg_i`` are the products f(u_i) g(u_i) and f(-u_i) g(-u_i);
    the bracket equals the reduced integrand E(t_i+gamma^2) + gamma
    O(t_i+gamma^2) identically, but is evaluated from pointwise polynomial
    values, which keeps tiny inner products accurate: for f = g both terms
    are nonnegative (u_i >= |gamma|), so no cancellation occurs.
    """
    g = float(spec.gamma)
    total = 0.0
    for w, u, p_val, n_val in zip(rule.weights, us, pos, neg):
        total += w * ((u + g) * p_val + (u - g) * n_val) / (2.0 * u)
    return spec.reduced_prefactor() * total


def inner_product(
    spec: WeightSpec, f: LaurentPoly, g: LaurentPoly, nodes: Optional[int] = None
) -> float:
    """<f, g> against the family weight, via the even/odd reduction.

    With f g = E(x^2) + x O(x^2), the two support branches collapse to the
    single classical-weight integral of E(t+gamma^2) + gamma O(t+gamma^2);
    the integrand is evaluated at the Gauss nodes in its branch-sum form
    [(u+gamma) f(u) g(u) + (u-gamma) f(-u) g(-u)]/(2u), u = sqrt(t+gamma^2).

    The default rule size ceil((deg f + deg g)/2) + 2 leaves an exactness
    margin; an explicit ``nodes`` below the required degree raises
    ``RuleTooSmall``.
    """
    if not (f.is_polynomial and g.is_polynomial):
        raise ValueError("inner products are defined for polynomial arguments")
    if f.is_zero or g.is_zero:
        return 0.0
    rule = gauss_rule(spec.reduced_weight_class(), _rule_size(f.degree + g.degree, nodes))
    us = _branch_points(spec, rule)
    pos = [f.evaluate_float(u) * g.evaluate_float(u) for u in us]
    neg = [f.evaluate_float(-u) * g.evaluate_float(-u) for u in us]
    return _branch_sum(spec, rule, us, pos, neg)


def _basis_values(family: FamilySpec, N: int, x: float) -> List[float]:
    """[P_0(x) .. P_N(x)] through the float three-term recurrence.

    Recurrence evaluation avoids the coefficient cancellation of Horner on
    expanded monic coefficients, which matters for the tiny high-degree
    norms in the Gram matrix.
    """
    values = [1.0]
    if N >= 1:
        values.append(x - float(family.diag(0)))
    for n in range(1, N):
        values.append(
            (x - float(family.diag(n))) * values[n]
            - float(family.sub(n)) * values[n - 1]
        )
    return values


def gram_matrix(
    family: FamilySpec, N: int, nodes: Optional[int] = None
) -> List[List[float]]:
    """[<P_m, P_n>] for m, n = 0..N against the family weight."""
    spec = weight_for(family)
    rule = gauss_rule(spec.reduced_weight_class(), _rule_size(2 * N, nodes))
    us = _branch_points(spec, rule)
    table_pos = [_basis_values(family, N, u) for u in us]
    table_neg = [_basis_values(family, N, -u) for u in us]
    gram = [[0.0] * (N + 1) for _ in range(N + 1)]
    for m in range(N + 1):
        for n in range(m, N + 1):
            value = _branch_sum(
                spec,
                rule,
                us,
                [row[m] * row[n] for row in table_pos],
                [row[m] * row[n] for row in table_neg],
            )
            gram[m][n] = gram[n][m] = value
    return gram


def gram_offdiag_worst(gram: Sequence[Sequence[float]]) -> float:
    """max |G_mn| / sqrt(G_mm G_nn) over m != n."""
    worst = 0.0
    for m in range(len(gram)):
        for n in range(m + 1, len(gram)):
            worst = max(worst, abs(gram[m][n]) / math.sqrt(gram[m][m] * gram[n][n]))
    return worst


# -- brute-force oracle ----------------------------------------------------------------


def _adaptive_simpson(
    func: Callable[[float], float], a: float, b: float, tol: float
) -> float:
    """Classic adaptive Simpson integration with the 1/15 error estimate."""

    def simpson(lo: float, hi: float, flo: float, fmid: float, fhi: float) -> float:
        return (hi - lo) / 6.0 * (flo + 4.0 * fmid + fhi)

    def recurse(lo, hi, flo, fmid, fhi, whole, tol, depth):
        mid = (lo + hi) / 2.0
        fq1 = func((lo + mid) / 2.0)
        fq3 = func((mid + hi) / 2.0)
        left = simpson(lo, mid, flo, fq1, fmid)
        right = simpson(mid, hi, fmid, fq3, fhi)
        if depth <= 0:
            return left + right
        if abs(left + right - whole) <= 15.0 * tol:
            return left + right + (left + right - whole) / 15.0
        return recurse(lo, mid, flo, fq1, fmid, left, tol / 2.0, depth - 1) + recurse(
            mid, hi, fmid, fq3, fhi, right, tol / 2.0, depth - 1
        )

    mid = (a + b) / 2.0
    fa, fm, fb = func(a), func(mid), func(b)
    whole = simpson(a, b, fa, fm, fb)
    return recurse(a, b, fa, fm, fb, whole, tol, 48)


def raw_inner_product(
    spec: WeightSpec, f: LaurentPoly, g: LaurentPoly, tol: float = 1e-10
) -> float:
    """<f, g> by brute-force integration over the raw support, no reduction.

    Validation oracle for ``inner_product``.  Infinite support components
    are truncated where the Gaussian factor is negligible; endpoint weight
    singularities are not handled (use parameter sets with nonnegative
    weight exponents).
    """
    total = 0.0
    for lo, hi in spec.support_intervals():
        lo = max(lo, -(abs(float(spec.gamma)) + 9.0))
        hi = min(hi, abs(float(spec.gamma)) + 9.0)
        if hi <= lo:
            continue
        func = lambda x: f.evaluate_float(x) * g.evaluate_float(x) * spec.weight_value(x)
        total += _adaptive_simpson(func, lo, hi, tol)
    return total


# -- norms ------------------------------------------------------------------------------


def norm_ratio_exact(family: FamilySpec, n: int) -> Fraction:
    """<P_n, P_n> / <P_(n-1), P_(n-1)> as an exact rational.

    Obtained from the closed-form normalization constants with every Gamma
    ratio cancelled into Pochhammer products; no floating point involved.
    """
    if n < 1:
        raise ValueError("norm ratios start at n = 1")
    p = family.p
    m = n // 2
    if family.name in ("chihara", "gegenbauer"):
        alpha, beta = p["alpha"], p["beta"]
        if n % 2 == 1:
            # Gamma(m+alpha+2)/Gamma(m+alpha+1) and the Pochhammer-square ratio.
            return (
                (m + alpha + 1)
                / (m + alpha + beta + 1)
                * (2 * m + alpha + beta + 1)
                / (2 * m + alpha + beta + 2)
                * (
                    pochhammer(m + alpha + beta + 1, m)
                    / pochhammer(m + alpha + beta + 2, m)
                )
                ** 2
            )
        return (
            Fraction(m)
            * (m + beta)
            * (2 * m + alpha + beta)
            / (2 * m + alpha + beta + 1)
            * (
                pochhammer(m + alpha + beta + 1, m - 1)
                / pochhammer(m + alpha + beta + 1, m)
            )
            ** 2
        )
    if family.name in ("ext_hermite", "gen_hermite"):
        mu = p["mu"]
        if n % 2 == 1:
            # Gamma(m+mu+3/2)/Gamma(m+mu+1/2) = m+mu+1/2.
            return m + mu + Fraction(1, 2)
        # m!/(m-1)! = m; the Gamma factors coincide and cancel.
        return Fraction(m)
    raise ValueError(f"no closed-form norms carried for family {family.name!r}")


def norm_ratio_check(
    family: FamilySpec, n: int, nodes: Optional[int] = None
) -> Tuple[Fraction, float]:
    """(exact ratio, quadrature ratio) of consecutive squared norms.

    The quadrature side evaluates P_n at the Gauss nodes through the float
    recurrence (see ``_basis_values``) so both norms keep full relative
    accuracy even when they are geometrically small.
    """
    if n < 1:
        raise ValueError("norm ratios start at n = 1")
    exact = norm_ratio_exact(family, n)
    spec = weight_for(family)
    rule = gauss_rule(spec.reduced_weight_class(), _rule_size(2 * n, nodes))
    us = _branch_points(spec, rule)
    table_pos = [_basis_values(family, n, u) for u in us]
    table_neg = [_basis_values(family, n, -u) for u in us]
    norms = [
        _branch_sum(
            spec,
            rule,
            us,
            [row[k] * row[k] for row in table_pos],
            [row[k] * row[k] for row in table_neg],
        )
        for k in (n, n - 1)
    ]
    return exact, norms[0] / norms[1]


def norm_head(family: FamilySpec) -> float:
    """Absolute <P_0, P_0> from the closed-form constants (Gamma evaluation)."""
    p = {key: float(v) for key, v in family.params}
    if family.name in ("chihara", "gegenbauer"):
        a, b = p["alpha"], p["beta"]
        return math.gamma(a + 1) * math.gamma(b + 1) / math.gamma(a + b + 2)
    if family.name in ("ext_hermite", "gen_hermite"):
        g = p.get("gamma", 0.0)
        return math.exp(-g * g) * math.gamma(p["mu"] + 0.5)
    raise ValueError(f"no closed-form norms carried for family {family.name!r}")


# -- Pearson verification -----------------------------------------------------------


@dataclass(frozen=True)
class PearsonReport:
    """Outcome of the two weight-function conditions."""

    ode_residual: str
    ode_exact: bool
    reflection_samples: int
    reflection_worst: float
    reflection_ok: bool

    @property
    def passed(self) -> bool:
        return self.ode_exact and self.reflection_ok


def verify_pearson(
    family: FamilySpec, samples_per_side: int = 12, tolerance: float = 1e-12
) -> PearsonReport:
    """Check that the two-interval weight satisfies both Pearson conditions.

    (i) Exactly, as rational functions: the logarithmic derivative of the
    weight, 1/(x+gamma) + 2 alpha x/(x^2-gamma^2) - 2 beta x/(1+gamma^2-x^2),
    equals the first-order coefficient demanded by operator symmetry,
    alpha/(x-gamma) + (alpha+1)/(x+gamma) - 2 beta x/(gamma^2+1-x^2).

    (ii) In float, on >= ``samples_per_side`` interior points of each
    support component: (x+gamma) w(-x) + (-x+gamma) w(x) = 0 within
    ``tolerance * |w(x)|``.
    """
    if family.name != "chihara":
        raise ValueError("the Pearson conditions are carried for the chihara family")
    p = family.p
    alpha, beta, gamma = p["alpha"], p["beta"], p["gamma"]
    x = LaurentPoly.x()
    one = LaurentPoly.one()
    log_derivative = (
        RatFunc.of(one, x + gamma)
        + RatFunc.of(x * (2 * alpha), x * x - gamma * gamma)
        - RatFunc.of(x * (2 * beta), (1 + gamma * gamma) - x * x)
    )
    symmetry_side = (
        RatFunc.of(one * alpha, x - gamma)
        + RatFunc.of(one * (alpha + 1), x + gamma)
        - RatFunc.of(x * (2 * beta), (gamma * gamma + 1) - x * x)
    )
    residual = log_derivative - symmetry_side
    ode_exact = residual.is_zero

    spec = weight_for(family)
    worst = 0.0
    count = 0
    for lo, hi in spec.support_intervals():
        for i in range(samples_per_side):
            xx = lo + (hi - lo) * (i + 0.5) / samples_per_side
            wx = spec.weight_value(xx)
            wmx = spec.weight_value(-xx)
            relative = abs((xx + float(gamma)) * wmx + (-xx + float(gamma)) * wx) / abs(wx)
            worst = max(worst, relative)
            count += 1
    return PearsonReport(
        ode_residual=str(residual),
        ode_exact=ode_exact,
        reflection_samples=count,
        reflection_worst=worst,
        reflection_ok=worst <= tolerance,
    )
