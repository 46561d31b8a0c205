"""Quadrature tests: eigensolver, Gauss rules, reduction, norms, Pearson."""

import math
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dunklpoly.exactnum import LaurentPoly
from dunklpoly.families import (
    chihara_family,
    ext_hermite_family,
    gegenbauer_family,
    gen_hermite_family,
    generate_monic,
)
from dunklpoly.quad import (
    NoConvergence,
    QuadratureRule,
    RuleTooSmall,
    SymTridiag,
    gauss_rule,
    gram_matrix,
    gram_offdiag_worst,
    inner_product,
    norm_head,
    norm_ratio_check,
    norm_ratio_exact,
    raw_inner_product,
    symtridiag_eigen,
    verify_pearson,
    weight_for,
)

FAMILY_SETS = [
    chihara_family(1, 1, F(1, 2)),
    chihara_family(F(1, 2), F(3, 4), F(-1, 3)),
    gegenbauer_family(1, 1),
    gegenbauer_family(F(1, 2), 2),
    ext_hermite_family(F(3, 2), F(1, 2)),
    ext_hermite_family(F(1, 2), F(1, 3)),
    gen_hermite_family(F(1, 2)),
    gen_hermite_family(F(3, 2)),
]


# -- tridiagonal eigensolver -----------------------------------------------------


def test_eigen_one_by_one():
    values, firsts = symtridiag_eigen(SymTridiag((5.0,), ()))
    assert values == [5.0]
    assert firsts == [1.0]


def test_eigen_two_by_two_closed_form():
    b = 1 / math.sqrt(3)
    values, firsts = symtridiag_eigen(SymTridiag((0.0, 0.0), (b,)))
    assert values[0] == pytest.approx(-b, abs=1e-14)
    assert values[1] == pytest.approx(b, abs=1e-14)
    # Eigenvectors are (1, -+1)/sqrt(2); first components have magnitude 1/sqrt(2).
    assert [abs(v) for v in firsts] == pytest.approx([2**-0.5, 2**-0.5], abs=1e-14)


def test_eigen_three_by_three_closed_form():
    a = 0.7
    values, _ = symtridiag_eigen(SymTridiag((0.0, 0.0, 0.0), (a, a)))
    assert values == pytest.approx([-a * math.sqrt(2), 0.0, a * math.sqrt(2)], abs=1e-12)


def test_eigen_zero_matrix():
    values, firsts = symtridiag_eigen(SymTridiag((0.0, 0.0), (0.0,)))
    assert values == [0.0, 0.0]
    assert firsts[0] == 1.0


def test_eigen_random_trace_and_frobenius():
    rng = random.Random(7)
    for _ in range(30):
        n = rng.randint(1, 12)
        diag = tuple(rng.uniform(-2, 2) for _ in range(n))
        off = tuple(rng.uniform(-2, 2) for _ in range(n - 1))
        values, _ = symtridiag_eigen(SymTridiag(diag, off))
        assert values == sorted(values)
        assert sum(values) == pytest.approx(sum(diag), abs=1e-11)
        frobenius = sum(d * d for d in diag) + 2 * sum(e * e for e in off)
        assert sum(v * v for v in values) == pytest.approx(frobenius, rel=1e-11)


def test_eigen_sweep_cap_raises():
    with pytest.raises(NoConvergence):
        symtridiag_eigen(SymTridiag((0.0, 0.0), (1.0,)), max_sweeps=0)


def test_symtridiag_shape_validation():
    with pytest.raises(ValueError):
        SymTridiag((1.0, 2.0), (0.5, 0.5))


# -- Gauss rules --------------------------------------------------------------------


def test_uniform_rule_one_node():
    rule = gauss_rule(("jacobi", 0, 0), 1)
    assert rule.nodes[0] == pytest.approx(0.5, abs=1e-15)
    assert rule.weights[0] == pytest.approx(1.0, abs=1e-15)
    assert rule.exact_degree == 1


def test_uniform_rule_two_nodes():
    rule = gauss_rule(("jacobi", 0, 0), 2)
    off = 1 / (2 * math.sqrt(3))
    assert rule.nodes == pytest.approx([0.5 - off, 0.5 + off], abs=1e-14)
    assert rule.weights == pytest.approx([0.5, 0.5], abs=1e-14)


def test_laguerre_rule_one_node():
    rule = gauss_rule(("generalized_laguerre", 0), 1)
    assert rule.nodes[0] == pytest.approx(1.0, abs=1e-14)
    assert rule.weights[0] == pytest.approx(1.0, abs=1e-14)


def test_laguerre_rule_one_node_shifted():
    # mu_0 = Gamma(a+1), mu_1 = Gamma(a+2) force the node to a+1.
    rule = gauss_rule(("generalized_laguerre", F(3, 2)), 1)
    assert rule.nodes[0] == pytest.approx(2.5, abs=1e-13)
    assert rule.weights[0] == pytest.approx(math.gamma(2.5), rel=1e-14)


@pytest.mark.parametrize(
    "weight_class",
    [("jacobi", F(3, 2), F(1, 2)), ("jacobi", 1, 2), ("generalized_laguerre", 1)],
)
@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_rule_invariants(weight_class, n):
    rule = gauss_rule(weight_class, n)
    assert list(rule.nodes) == sorted(rule.nodes)
    assert all(w > 0 for w in rule.weights)
    lo, hi = (0.0, 1.0) if weight_class[0] == "jacobi" else (0.0, math.inf)
    assert all(lo < t < hi for t in rule.nodes)


def test_rule_rejects_bad_parameters():
    with pytest.raises(ValueError):
        gauss_rule(("jacobi", -1, 0), 3)
    with pytest.raises(ValueError):
        gauss_rule(("generalized_laguerre", F(-5, 4)), 3)
    with pytest.raises(ValueError):
        gauss_rule(("jacobi", 0, 0), 0)
    with pytest.raises(ValueError):
        gauss_rule(("chebyshev",), 3)


@settings(deadline=None, max_examples=30)
@given(
    a=st.fractions(min_value=F(-1, 2), max_value=3, max_denominator=4),
    b=st.fractions(min_value=F(-1, 2), max_value=3, max_denominator=4),
    n=st.integers(min_value=1, max_value=8),
)
def test_rule_moment_property(a, b, n):
    # gauss_rule validates its own moments to 1e-13 relative at build time.
    rule = gauss_rule(("jacobi", a, b), n)
    assert rule.exact_degree == 2 * n - 1


# -- inner products -------------------------------------------------------------------


def test_orthogonality_lowest_pair():
    fam = chihara_family(1, 1, F(1, 2))
    polys = generate_monic(fam, 1)
    value = inner_product(weight_for(fam), polys[0], polys[1])
    assert abs(value) <= 1e-12


def test_uniform_weight_total_mass():
    fam = chihara_family(0, 0, F(2, 3))
    one = LaurentPoly.one()
    assert inner_product(weight_for(fam), one, one) == pytest.approx(1.0, rel=1e-14)


def test_hermite_type_total_mass():
    fam = gen_hermite_family(F(1, 2))
    one = LaurentPoly.one()
    # l_0 = Gamma(mu + 1/2) at mu = 1/2 is Gamma(1) = 1.
    assert inner_product(weight_for(fam), one, one) == pytest.approx(1.0, rel=1e-14)


def test_inner_product_rejects_small_rule():
    fam = chihara_family(1, 1, F(1, 2))
    polys = generate_monic(fam, 4)
    with pytest.raises(RuleTooSmall):
        inner_product(weight_for(fam), polys[4], polys[4], nodes=3)


def test_inner_product_rejects_laurent_input():
    fam = chihara_family(1, 1, F(1, 2))
    with pytest.raises(ValueError):
        inner_product(weight_for(fam), LaurentPoly({-1: F(1)}), LaurentPoly.one())


def test_zero_argument_gives_zero():
    fam = chihara_family(1, 1, F(1, 2))
    assert inner_product(weight_for(fam), LaurentPoly.zero(), LaurentPoly.one()) == 0.0


@pytest.mark.parametrize(
    "fam,f,g",
    [
        (chihara_family(1, 1, F(1, 2)), LaurentPoly({3: F(1)}), LaurentPoly({2: F(1), 0: F(1)})),
        (chihara_family(1, 2, F(1, 3)), LaurentPoly.x(), LaurentPoly({2: F(1)})),
    ],
)
def test_reduction_matches_brute_force(fam, f, g):
    """The even/odd reduction agrees with raw two-interval integration."""
    spec = weight_for(fam)
    reduced = inner_product(spec, f, g)
    raw = raw_inner_product(spec, f, g, tol=1e-11)
    assert reduced == pytest.approx(raw, rel=1e-8)


def test_reduction_matches_brute_force_laguerre_type():
    fam = ext_hermite_family(F(3, 2), F(1, 2))
    spec = weight_for(fam)
    f, g = LaurentPoly.x(), LaurentPoly({2: F(1), 1: F(1)})
    assert inner_product(spec, f, g) == pytest.approx(
        raw_inner_product(spec, f, g, tol=1e-11), rel=1e-8
    )


def test_branch_sum_equals_exact_reduced_integrand():
    """The pointwise branch-sum form agrees with the exact t-polynomial."""
    from dunklpoly.quad import reduced_integrand

    fam = chihara_family(1, 2, F(1, 3))
    spec = weight_for(fam)
    f, g = LaurentPoly({3: F(1), 0: F(2)}), LaurentPoly({2: F(1), 1: F(-1)})
    integrand = reduced_integrand(spec, f, g)
    gamma = float(spec.gamma)
    for k in range(1, 9):
        t = k / 9.0
        u = math.sqrt(t + gamma * gamma)
        bracket = (
            (u + gamma) * f.evaluate_float(u) * g.evaluate_float(u)
            + (u - gamma) * f.evaluate_float(-u) * g.evaluate_float(-u)
        ) / (2.0 * u)
        assert bracket == pytest.approx(integrand.evaluate_float(t), rel=1e-13)


# -- Gram matrices ---------------------------------------------------------------------


@pytest.mark.parametrize("fam", FAMILY_SETS)
def test_gram_matrix_orthogonal_to_tolerance(fam):
    gram = gram_matrix(fam, 6)
    assert all(gram[n][n] > 0 for n in range(7))
    assert gram_offdiag_worst(gram) <= 1e-10


# -- norms -----------------------------------------------------------------------------


def test_norm_ratio_exact_worked_values():
    fam = chihara_family(1, 1, F(1, 2))
    # n = 1: (alpha+1)/(alpha+beta+2) = 1/2; n = 2: 1/10.
    assert norm_ratio_exact(fam, 1) == F(1, 2)
    assert norm_ratio_exact(fam, 2) == F(1, 10)
    # Laguerre type, mu = 3/2: ratio Gamma(mu+3/2)/Gamma(mu+1/2) = mu + 1/2 = 2.
    assert norm_ratio_exact(ext_hermite_family(F(3, 2), F(1, 2)), 1) == 2


def test_norm_ratio_rejects_n_zero():
    with pytest.raises(ValueError):
        norm_ratio_exact(chihara_family(1, 1, F(1, 2)), 0)


@pytest.mark.parametrize("fam", FAMILY_SETS)
def test_norm_ratio_equals_recurrence_sub(fam):
    """The closed-form norm ratio is the recurrence sub-coefficient, n <= 30."""
    for n in range(1, 31):
        assert norm_ratio_exact(fam, n) == fam.sub(n)


@pytest.mark.parametrize(
    "fam", [chihara_family(1, 1, F(1, 2)), ext_hermite_family(F(3, 2), F(1, 2))]
)
def test_norm_ratio_quadrature_agreement(fam):
    for n in range(1, 13):
        exact, quad = norm_ratio_check(fam, n)
        assert quad == pytest.approx(float(exact), rel=1e-10)


def test_norm_head_matches_quadrature():
    one = LaurentPoly.one()
    for fam in (chihara_family(1, 1, F(1, 2)), ext_hermite_family(F(3, 2), F(1, 2))):
        head = norm_head(fam)
        assert inner_product(weight_for(fam), one, one) == pytest.approx(head, rel=1e-12)


# -- weights ----------------------------------------------------------------------------


@pytest.mark.parametrize("fam", FAMILY_SETS)
def test_weight_positive_inside_support(fam):
    # Even sample count keeps x = 0 (a legitimate weight zero of the
    # symmetric families) out of the sample set.
    spec = weight_for(fam)
    for lo, hi in spec.support_intervals():
        lo = max(lo, -8.0)
        hi = min(hi, 8.0)
        for i in range(8):
            x = lo + (hi - lo) * (i + 0.5) / 8
            assert spec.weight_value(x) > 0


def test_support_descriptors():
    spec = weight_for(chihara_family(1, 1, F(1, 2)))
    (nlo, nhi), (plo, phi) = spec.support_intervals()
    assert (plo, phi) == (0.5, pytest.approx(math.sqrt(1.25)))
    assert (nlo, nhi) == (pytest.approx(-math.sqrt(1.25)), -0.5)
    assert weight_for(gen_hermite_family(F(1, 2))).support_intervals() == (
        (-math.inf, math.inf),
    )
    with pytest.raises(ValueError):
        weight_for(__import__("dunklpoly").families.big_m1_jacobi_family(1, 1, F(1, 2)))


# -- Pearson ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "alpha,beta,gamma",
    [(1, 2, F(1, 3)), (1, 1, F(1, 2)), (F(1, 2), F(3, 4), F(1, 3)), (2, 3, F(-2, 5)), (3, 1, F(2, 7))],
)
def test_pearson_exact_and_reflection(alpha, beta, gamma):
    report = verify_pearson(chihara_family(alpha, beta, gamma))
    assert report.ode_exact
    assert report.ode_residual == "0"
    assert report.reflection_samples >= 20
    assert report.reflection_ok
    assert report.passed


def test_pearson_symmetric_point_trivial():
    report = verify_pearson(chihara_family(1, 1, 0))
    assert report.passed
    assert report.reflection_worst == 0.0


def test_pearson_rejects_other_families():
    with pytest.raises(ValueError):
        verify_pearson(gen_hermite_family(F(1, 2)))
