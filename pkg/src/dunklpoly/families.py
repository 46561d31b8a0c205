"""Polynomial families: recurrence coefficients and explicit constructions.

Every family is presented in monic normalized form and generated two
independent ways:

* through the three-term recurrence
  ``P_{n+1} = (x - diag(n)) P_n - sub(n) P_{n-1}``, and
* where a terminating hypergeometric expression exists, through
  ``explicit_poly``, built from exact Pochhammer products.

Agreement of the two routes, coefficient by coefficient over the rationals,
is the construction-equivalence check of the acceptance suite.

Families carried here:

* ``chihara``        -- alpha, beta, gamma; two-interval Jacobi-type weight.
* ``gegenbauer``     -- generalized Gegenbauer, the gamma = 0 specialization.
* ``cbi``            -- complementary Bannai-Ito, rho1, rho2, r1, r2.
* ``ext_hermite``    -- one-parameter extension of generalized Hermite
                        (mu, gamma); Laguerre-type weight.
* ``gen_hermite``    -- generalized Hermite, the gamma = 0 specialization.
* ``big_m1_jacobi``  -- big -1 Jacobi, a, b, c; defined through its
                        recurrence (its kernel partners live in transforms).
* ``big_q_jacobi``   -- big q-Jacobi at exact rational q, the q -> -1
                        parent family used by the limits module.

Parameter degeneracies (vanishing recurrence denominators, vanishing
denominator Pochhammers) raise ``DegenerateParameters`` lazily at the first
offending index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple, Union

from .exactnum import BigRational, LaurentPoly, Scalar, _as_fraction

PolyOrScalar = Union[LaurentPoly, BigRational, int]


class DegenerateParameters(ValueError):
    """A recurrence or series denominator vanished for the given parameters."""


@dataclass(frozen=True)
class FamilySpec:
    """A named family with exact recurrence coefficient callables."""

    name: str
    params: Tuple[Tuple[str, Fraction], ...]

    @property
    def p(self) -> Dict[str, Fraction]:
        return dict(self.params)

    def diag(self, n: int) -> Fraction:
        try:
            return _DIAG[self.name](self.p, n)
        except ZeroDivisionError:
            raise DegenerateParameters(f"{self.name} diag({n}) denominator vanishes") from None

    def sub(self, n: int) -> Fraction:
        if n == 0:
            # multiplies P_{-1} = 0; value is conventional
            return Fraction(0)
        try:
            return _SUB[self.name](self.p, n)
        except ZeroDivisionError:
            raise DegenerateParameters(f"{self.name} sub({n}) denominator vanishes") from None

    def label(self) -> str:
        return ",".join(f"{k}={v}" for k, v in self.params)


def _params(**kwargs: Scalar) -> Tuple[Tuple[str, Fraction], ...]:
    return tuple((k, _as_fraction(v)) for k, v in kwargs.items())


def chihara_family(alpha: Scalar, beta: Scalar, gamma: Scalar) -> FamilySpec:
    return FamilySpec("chihara", _params(alpha=alpha, beta=beta, gamma=gamma))


def gegenbauer_family(alpha: Scalar, beta: Scalar) -> FamilySpec:
    return FamilySpec("gegenbauer", _params(alpha=alpha, beta=beta))


def cbi_family(rho1: Scalar, rho2: Scalar, r1: Scalar, r2: Scalar) -> FamilySpec:
    return FamilySpec("cbi", _params(rho1=rho1, rho2=rho2, r1=r1, r2=r2))


def ext_hermite_family(mu: Scalar, gamma: Scalar) -> FamilySpec:
    return FamilySpec("ext_hermite", _params(mu=mu, gamma=gamma))


def gen_hermite_family(mu: Scalar) -> FamilySpec:
    return FamilySpec("gen_hermite", _params(mu=mu))


def big_m1_jacobi_family(a: Scalar, b: Scalar, c: Scalar) -> FamilySpec:
    return FamilySpec("big_m1_jacobi", _params(a=a, b=b, c=c))


def big_q_jacobi_family(qalpha: Scalar, qbeta: Scalar, qgamma: Scalar, q: Scalar) -> FamilySpec:
    q = _as_fraction(q)
    if q in (Fraction(0), Fraction(1), Fraction(-1)):
        raise DegenerateParameters("big_q_jacobi requires q outside {0, 1, -1}")
    return FamilySpec("big_q_jacobi", _params(qalpha=qalpha, qbeta=qbeta, qgamma=qgamma, q=q))


# -- recurrence coefficients -------------------------------------------------


def _chihara_sigma(p: Dict[str, Fraction], n: int) -> Fraction:
    alpha, beta = p["alpha"], p["beta"]
    m = n // 2
    if n % 2 == 0:
        return Fraction(m) * (m + beta) / ((2 * m + alpha + beta) * (2 * m + alpha + beta + 1))
    return (m + alpha + 1) * (m + alpha + beta + 1) / (
        (2 * m + alpha + beta + 1) * (2 * m + alpha + beta + 2)
    )


def _cbi_tau(p: Dict[str, Fraction], n: int) -> Fraction:
    rho1, rho2, r1, r2 = p["rho1"], p["rho2"], p["r1"], p["r2"]
    g = rho1 + rho2 - r1 - r2
    m = n // 2
    if n % 2 == 0:
        return -Fraction(m) * (m + rho1 - r1 + Fraction(1, 2)) * (
            m + rho1 - r2 + Fraction(1, 2)
        ) * (m - r1 - r2) / ((2 * m + g) * (2 * m + g + 1))
    return -(m + g + 1) * (m + rho1 + rho2 + 1) * (m + rho2 - r1 + Fraction(1, 2)) * (
        m + rho2 - r2 + Fraction(1, 2)
    ) / ((2 * m + g + 1) * (2 * m + g + 2))


def _ext_hermite_theta(p: Dict[str, Fraction], n: int) -> Fraction:
    mu = p["mu"]
    m = n // 2
    return Fraction(m) if n % 2 == 0 else m + mu + Fraction(1, 2)


def big_m1_jacobi_AC(p: Dict[str, Fraction], n: int) -> Tuple[Fraction, Fraction]:
    """Christoffel split coefficients A_n, C_n of the big -1 Jacobi family."""
    a, b, c = p["a"], p["b"], p["c"]
    if n % 2 == 0:
        A = (1 + c) * (a + n + 1) / (2 * n + a + b + 2)
        C = (1 - c) * Fraction(n) / (2 * n + a + b)
    else:
        A = (1 - c) * (n + a + b + 1) / (2 * n + a + b + 2)
        C = (1 + c) * (n + b) / (2 * n + a + b)
    return A, C


def big_q_jacobi_AC(p: Dict[str, Fraction], n: int) -> Tuple[Fraction, Fraction]:
    """Recurrence split coefficients (upsilon_n, nu_n) of big q-Jacobi."""
    al, be, ga, q = p["qalpha"], p["qbeta"], p["qgamma"], p["q"]
    qn = q**n
    ups = (1 - al * qn * q) * (1 - al * be * qn * q) * (1 - ga * qn * q) / (
        (1 - al * be * qn * qn * q) * (1 - al * be * qn * qn * q * q)
    )
    nu = -al * ga * qn * q * (1 - qn) * (1 - al * be * qn / ga) * (1 - be * qn) / (
        (1 - al * be * qn * qn) * (1 - al * be * qn * qn * q)
    )
    return ups, nu


_DIAG = {
    "chihara": lambda p, n: (-1) ** n * p["gamma"],
    "gegenbauer": lambda p, n: Fraction(0),
    "cbi": lambda p, n: (-1) ** n * p["rho2"],
    "ext_hermite": lambda p, n: (-1) ** n * p["gamma"],
    "gen_hermite": lambda p, n: Fraction(0),
    "big_m1_jacobi": lambda p, n: 1 - sum(big_m1_jacobi_AC(p, n)),
    "big_q_jacobi": lambda p, n: 1 - sum(big_q_jacobi_AC(p, n)),
}

_SUB = {
    "chihara": _chihara_sigma,
    "gegenbauer": lambda p, n: _chihara_sigma({**p, "gamma": Fraction(0)}, n),
    "cbi": _cbi_tau,
    "ext_hermite": _ext_hermite_theta,
    "gen_hermite": lambda p, n: _ext_hermite_theta({**p, "gamma": Fraction(0)}, n),
    "big_m1_jacobi": lambda p, n: big_m1_jacobi_AC(p, n - 1)[0] * big_m1_jacobi_AC(p, n)[1],
    "big_q_jacobi": lambda p, n: big_q_jacobi_AC(p, n - 1)[0] * big_q_jacobi_AC(p, n)[1],
}


def recurrence_coeffs(family: FamilySpec, n: int) -> Tuple[Fraction, Fraction]:
    """Exact (diag, sub) pair of the monic three-term recurrence at index n."""
    return family.diag(n), family.sub(n)


def generate_monic(family: FamilySpec, N: int) -> List[LaurentPoly]:
    """P_0 .. P_N through the recurrence; every entry monic of degree n."""
    if N < 0:
        raise ValueError("N must be nonnegative")
    polys = [LaurentPoly.one()]
    if N == 0:
        return polys
    x = LaurentPoly.x()
    polys.append(x - family.diag(0))
    for n in range(1, N):
        nxt = (x - family.diag(n)) * polys[n] - family.sub(n) * polys[n - 1]
        polys.append(nxt)
    return polys


# -- hypergeometric construction ----------------------------------------------


def pochhammer(a: PolyOrScalar, k: int):
    """Rising factorial (a)_k over the rationals or the Laurent ring."""
    if k < 0:
        raise ValueError("pochhammer order must be nonnegative")
    if isinstance(a, LaurentPoly):
        result: PolyOrScalar = LaurentPoly.one()
    else:
        a = _as_fraction(a)
        result = Fraction(1)
    for i in range(k):
        result = result * (a + i)
    return result


def hypergeometric_terminating(
    num_params: Sequence[PolyOrScalar],
    den_params: Sequence[Scalar],
    argument: LaurentPoly,
) -> LaurentPoly:
    """Terminating series sum_k [prod (a_j)_k / prod (b_i)_k] z^k / k!.

    The first numerator parameter fixes the truncation: it must be -n for a
    nonnegative integer n.  Numerator parameters may be scalars or degree-one
    polynomials (the complementary Bannai-Ito series carries rho2 +/- x in
    the numerator); denominator parameters must be scalars, and a vanishing
    denominator Pochhammer raises DegenerateParameters.
    """
    if not num_params:
        raise ValueError("at least one numerator parameter required")
    first = num_params[0]
    if isinstance(first, LaurentPoly):
        raise ValueError("the terminating parameter must be a scalar")
    first = _as_fraction(first)
    if first > 0 or first.denominator != 1:
        raise ValueError(f"terminating parameter must be a nonpositive integer, got {first}")
    n = -int(first)
    dens = [_as_fraction(b) for b in den_params]
    total = LaurentPoly.zero()
    for k in range(n + 1):
        den = Fraction(1)
        for b in dens:
            den *= pochhammer(b, k)
        if den == 0:
            raise DegenerateParameters(f"denominator Pochhammer vanishes at k={k}")
        for i in range(1, k + 1):
            den *= i
        term = LaurentPoly.one()
        for a in num_params:
            term = term * pochhammer(a, k)
        total = total + term * argument**k / den
    return total


def explicit_poly(family: FamilySpec, n: int) -> LaurentPoly:
    """Monic P_n through its terminating hypergeometric expression."""
    p = family.p
    x = LaurentPoly.x()
    m, odd = divmod(n, 2)
    if family.name in ("chihara", "gegenbauer"):
        alpha, beta = p["alpha"], p["beta"]
        gamma = p.get("gamma", Fraction(0))
        z = x * x - LaurentPoly.const(gamma**2)
        shift = 1 if odd else 0
        pref = Fraction((-1) ** m) * pochhammer(alpha + 1 + shift, m) / pochhammer(
            m + alpha + beta + 1 + shift, m
        )
        series = hypergeometric_terminating(
            [Fraction(-m), m + alpha + beta + 1 + shift], [alpha + 1 + shift], z
        )
        return pref * series * (x - gamma) if odd else pref * series
    if family.name in ("ext_hermite", "gen_hermite"):
        mu = p["mu"]
        gamma = p.get("gamma", Fraction(0))
        z = x * x - LaurentPoly.const(gamma**2)
        half = mu + Fraction(1, 2) + (1 if odd else 0)
        pref = Fraction((-1) ** m) * pochhammer(half, m)
        series = hypergeometric_terminating([Fraction(-m)], [half], z)
        return pref * series * (x - gamma) if odd else pref * series
    if family.name == "cbi":
        rho1, rho2, r1, r2 = p["rho1"], p["rho2"], p["r1"], p["r2"]
        g = rho1 + rho2 - r1 - r2
        one = LaurentPoly.one()
        s = 1 if odd else 0
        h = Fraction(1, 2) + s
        dens = [rho1 + rho2 + 1 + s, rho2 - r1 + h, rho2 - r2 + h]
        eta = pochhammer(dens[0], m) * pochhammer(dens[1], m) * pochhammer(dens[2], m) / pochhammer(
            m + g + 1 + s, m
        )
        series = hypergeometric_terminating(
            [Fraction(-m), m + g + 1 + s, x + rho2 + s, -x + rho2 + s],
            dens,
            one,
        )
        return eta * series * (x - rho2) if odd else eta * series
    raise ValueError(f"no terminating ordinary hypergeometric form for {family.name}")


def classical_jacobi_monic(n: int, alpha: Scalar, beta: Scalar) -> LaurentPoly:
    """Monic Jacobi polynomial in z for the weight (1-z)^alpha (1+z)^beta."""
    alpha, beta = _as_fraction(alpha), _as_fraction(beta)
    z = LaurentPoly.x()
    polys = [LaurentPoly.one()]
    try:
        for k in range(n):
            if k == 0:
                ak = (beta - alpha) / (alpha + beta + 2)
                nxt = z - ak
            else:
                s = 2 * k + alpha + beta
                ak = (beta**2 - alpha**2) / (s * (s + 2))
                bk = 4 * k * (k + alpha) * (k + beta) * (k + alpha + beta) / (
                    s * s * (s + 1) * (s - 1)
                )
                nxt = (z - ak) * polys[k] - bk * polys[k - 1]
            polys.append(nxt)
    except ZeroDivisionError:
        raise DegenerateParameters(f"jacobi({alpha},{beta}) recurrence degenerate at k={k}") from None
    return polys[n]
