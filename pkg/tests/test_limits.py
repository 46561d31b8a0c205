"""Tests for the floating-point limit-process verifications.

Frozen numbers below were produced by an independent script that implemented
the three contractions from scratch (own tau/upsilon-nu/sigma formulas, own
float recurrence, own exact targets) and printed per-degree errors and
Richardson orders; the module under test must reproduce them:

  cbi (5, 3, 3/2, 1/2), steps 1e-3..1e-5:
      e_1(1e-3) = 1.250000e-4 (= b2*h/s exactly), e_6(1e-3) = 1.192155e-3,
      max coeff error(1e-3) = 4.425130e-4, all orders ~= 1.0000
  bigq (1, 1, 3/5): e_1(1e-3) = 1.750368e-3, max coeff error(1e-3)
      = 3.615937e-3, orders ~= 1.000
  beta (3/2, 1/2): e_2(1e-3) = 5.982054e-3, max coeff error(1e-3)
      = 3.570237e-2, diag channel exactly 0, orders ~= 0.9995-0.9999
  beta (mu=1): |beta*sigma_2 - 1| at beta=1e4 is 4.99788e-4
      (analytically (beta^2+beta)/((beta+5/2)(beta+7/2)) - 1)
  bigq wrong-sign control: odd-degree errors plateau near 2*gamma_C
      (order ~ -8e-5), even degrees still decay; flagged non-convergent.
"""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dunklpoly.families import DegenerateParameters, chihara_family
from dunklpoly.limits import (
    BETA_LIMIT_DEFAULTS,
    BIGQ_LIMIT_DEFAULTS,
    CBI_LIMIT_DEFAULTS,
    DegenerateStep,
    LimitCase,
    NOISE_FLOOR,
    ORDER_BAND,
    SourceStep,
    beta_case,
    bigq_case,
    cbi_case,
    default_cases,
    geometric_steps,
    run_limit,
)
from dunklpoly.transforms import IrrationalScale


# -- construction and validation ----------------------------------------------


def test_geometric_steps_default():
    steps = geometric_steps()
    assert len(steps) == 3
    assert steps[0] == pytest.approx(1e-3)
    assert steps[1] / steps[0] == pytest.approx(0.1)
    assert steps[2] / steps[1] == pytest.approx(0.1)


@pytest.mark.parametrize(
    "kwargs",
    [dict(count=2), dict(ratio=1.0), dict(ratio=0.0), dict(first=0.0)],
)
def test_geometric_steps_rejects_bad_grid(kwargs):
    with pytest.raises(ValueError):
        geometric_steps(**kwargs)


def _dummy_source(h):
    return SourceStep(params=(), diag=lambda n: 0.0, sub=lambda n: 0.0, rescale=1.0)


_TARGET = chihara_family(1, 1, F(1, 2))


def test_case_rejects_unknown_id():
    with pytest.raises(ValueError):
        LimitCase("h_to_17", _dummy_source, _TARGET, 4, (1e-1, 1e-2, 1e-3))


def test_case_rejects_short_step_list():
    with pytest.raises(ValueError):
        LimitCase("cbi_h_to_0", _dummy_source, _TARGET, 4, (1e-1, 1e-2))


def test_case_rejects_increasing_steps():
    with pytest.raises(ValueError):
        LimitCase("cbi_h_to_0", _dummy_source, _TARGET, 4, (1e-3, 1e-2, 1e-1))


def test_case_rejects_non_geometric_steps():
    with pytest.raises(ValueError):
        LimitCase("cbi_h_to_0", _dummy_source, _TARGET, 4, (1e-1, 1e-2, 2e-3))


def test_case_rejects_zero_degree_cap():
    with pytest.raises(ValueError):
        LimitCase("cbi_h_to_0", _dummy_source, _TARGET, 0, (1e-1, 1e-2, 1e-3))


def test_cbi_case_default_target():
    case = cbi_case()
    assert case.target.name == "chihara"
    assert case.target.p == {"alpha": F(0), "beta": F(2), "gamma": F(3, 4)}
    assert case.ratio == pytest.approx(0.1)


def test_cbi_case_rejects_negative_gap():
    with pytest.raises(ValueError):
        cbi_case(a1=3, a2=5)


def test_cbi_case_rejects_irrational_scale():
    with pytest.raises(IrrationalScale):
        cbi_case(a1=2, a2=1)


def test_bigq_case_default_target():
    case = bigq_case()
    assert case.target.p == {"alpha": F(1), "beta": F(1), "gamma": F(3, 4)}


def test_bigq_case_rejects_large_g():
    with pytest.raises(ValueError):
        bigq_case(g=F(7, 5))


def test_bigq_case_rejects_irrational_scale():
    with pytest.raises(IrrationalScale):
        bigq_case(g=F(1, 3))


def test_beta_case_default_target():
    case = beta_case()
    assert case.target.name == "ext_hermite"
    assert case.target.p == {"mu": F(3, 2), "gamma": F(1, 2)}


def test_source_params_echo():
    step = cbi_case().source(1e-3)
    p = dict(step.params)
    assert p["rho1"] == pytest.approx(5001.5)
    assert p["rho2"] == pytest.approx(3000.5)
    assert p["r1"] == pytest.approx(5000.0)
    assert p["r2"] == pytest.approx(3000.0)
    assert step.rescale == pytest.approx(4000.0)


# -- frozen convergence numbers ------------------------------------------------


def test_cbi_frozen_errors():
    report = run_limit(cbi_case())
    first = report.results[0]
    assert first.step == pytest.approx(1e-3)
    # degree-1 error is exactly |b2*h/s| = 0.5e-3/4
    assert first.poly_errors[1] == pytest.approx(1.25e-4, rel=1e-6)
    assert first.poly_errors[6] == pytest.approx(1.192155e-3, rel=1e-4)
    assert first.max_coeff_error == pytest.approx(4.425130e-4, rel=1e-4)
    assert report.converged


def test_bigq_frozen_errors():
    report = run_limit(bigq_case())
    first = report.results[0]
    assert first.poly_errors[1] == pytest.approx(1.750368e-3, rel=1e-4)
    assert first.max_coeff_error == pytest.approx(3.615937e-3, rel=1e-4)
    assert report.converged


def test_beta_frozen_errors():
    report = run_limit(beta_case())
    first = report.results[0]
    assert first.poly_errors[2] == pytest.approx(5.982054e-3, rel=1e-4)
    assert first.max_coeff_error == pytest.approx(3.570237e-2, rel=1e-4)
    assert report.converged


def test_default_cases_all_converge_with_unit_order():
    for case in default_cases():
        report = run_limit(case)
        assert report.converged, case.limit_id
        for p in report.poly_orders:
            if p is not None:
                assert 0.99 <= p <= 1.01
        assert 0.99 <= report.coeff_order <= 1.01
        assert 0.99 <= report.overall_order <= 1.01
        lo, hi = ORDER_BAND
        assert lo <= report.overall_order <= hi


def test_max_errors_decrease():
    for case in default_cases():
        errs = run_limit(case).max_errors()
        assert all(a > b for a, b in zip(errs, errs[1:]))


def test_monotone_decay_on_longer_grid():
    for make in (cbi_case, bigq_case, beta_case):
        case = make(steps=geometric_steps(1e-2, count=5))
        report = run_limit(case)
        assert report.monotone_ok, case.limit_id
        for n in range(1, case.degree_cap + 1):
            series = [r.poly_errors[n] for r in report.results]
            for k in range(1, len(series) - 1):
                assert series[k + 1] < series[k] or series[k + 1] <= NOISE_FLOOR


# -- the beta -> infinity dual check -------------------------------------------


def test_beta_case_checks_both_coefficient_and_polynomial_limits():
    report = run_limit(beta_case())
    for result in report.results:
        beta = 1.0 / result.step
        # diagonal is reproduced exactly by the rescaling (pure rounding)
        assert max(result.diag_errors) <= NOISE_FLOOR
        # beta*sigma_{2m} -> m and beta*sigma_{2m+1} -> m + mu + 1/2,
        # with error bounded by C/beta
        assert max(result.sub_errors) <= 400.0 / beta
        # polynomial limit is tracked as well and is nontrivial
        assert result.poly_errors[2] > NOISE_FLOOR
    assert report.coeff_order is not None


def test_beta_sigma_bound_at_beta_1e4():
    # alpha = mu - 1/2 = 1/2: |beta*sigma_2(beta) - 1| at beta = 1e4 equals
    # 1 - (beta^2+beta)/((beta+5/2)(beta+7/2)) = 4.99788e-4 <= 1e-3
    report = run_limit(beta_case(mu=1, gamma=F(1, 2)))
    middle = report.results[1]
    assert middle.step == pytest.approx(1e-4)
    assert middle.sub_errors[2] == pytest.approx(4.99788e-4, rel=1e-3)
    assert middle.sub_errors[2] <= 1e-3


# -- negative control and degeneracies ------------------------------------------


def test_wrong_gamma_sign_flagged_as_non_convergent():
    report = run_limit(bigq_case(wrong_gamma_sign=True))
    assert not report.converged
    assert not report.monotone_ok
    assert not report.orders_ok
    # odd degrees plateau at O(1): order collapses to ~0
    assert abs(report.poly_orders[1]) < 0.1
    assert report.results[-1].poly_errors[1] > 1.0
    # even degrees still decay; the flag comes from the odd channel
    assert report.poly_orders[2] == pytest.approx(1.0, abs=0.05)


def test_degenerate_source_diag_raises():
    case = LimitCase(
        "cbi_h_to_0",
        lambda h: SourceStep(
            params=(), diag=lambda n: 1.0 / (n - 2), sub=lambda n: 0.0, rescale=1.0
        ),
        _TARGET,
        4,
        (1e-1, 1e-2, 1e-3),
    )
    with pytest.raises(DegenerateStep, match="diag"):
        run_limit(case)


def test_non_finite_source_sub_raises():
    case = LimitCase(
        "cbi_h_to_0",
        lambda h: SourceStep(
            params=(),
            diag=lambda n: 0.0,
            sub=lambda n: float("inf") if n == 1 else 0.0,
            rescale=1.0,
        ),
        _TARGET,
        4,
        (1e-1, 1e-2, 1e-3),
    )
    with pytest.raises(DegenerateStep, match="sub"):
        run_limit(case)


def test_overflowing_steps_raise_degenerate_step():
    # tau ~ (a1*a2)/h^2 overflows past 1e308 for h ~ 1e-155
    with pytest.raises(DegenerateStep):
        run_limit(cbi_case(steps=(1e-155, 1e-156, 1e-157)))


def test_degenerate_target_raises_family_error():
    # b1 = -5/2 makes the *target* chihara(0, -2, 3/4) recurrence degenerate
    with pytest.raises(DegenerateParameters):
        run_limit(cbi_case(b1=F(-5, 2)))


# -- property: the contractions converge across the parameter windows -----------

_PYTHAGOREAN = [(F(5), F(3)), (F(13), F(5)), (F(5), F(4)), (F(25), F(7))]
_RATIONAL_G = [F(3, 5), F(5, 13), F(8, 17), F(4, 5)]


@settings(max_examples=10, deadline=None)
@given(
    pair=st.sampled_from(_PYTHAGOREAN),
    b1=st.fractions(min_value=F(1, 4), max_value=F(4), max_denominator=4),
    b2=st.fractions(min_value=F(1, 4), max_value=F(4), max_denominator=4),
)
def test_cbi_property_monotone_and_at_least_first_order(pair, b1, b2):
    report = run_limit(cbi_case(a1=pair[0], a2=pair[1], b1=b1, b2=b2, degree_cap=4))
    assert report.monotone_ok
    for p in report.poly_orders:
        if p is not None:
            assert p >= 0.8


@settings(max_examples=10, deadline=None)
@given(
    g=st.sampled_from(_RATIONAL_G),
    alpha=st.fractions(min_value=F(1, 4), max_value=F(4), max_denominator=4),
    beta=st.fractions(min_value=F(1, 4), max_value=F(4), max_denominator=4),
)
def test_bigq_property_monotone_and_at_least_first_order(g, alpha, beta):
    report = run_limit(bigq_case(alpha=alpha, beta=beta, g=g, degree_cap=4))
    assert report.monotone_ok
    for p in report.poly_orders:
        if p is not None:
            assert p >= 0.8


@settings(max_examples=10, deadline=None)
@given(
    mu=st.fractions(min_value=F(1, 4), max_value=F(4), max_denominator=4),
    gamma=st.fractions(min_value=F(-2), max_value=F(2), max_denominator=4),
)
def test_beta_property_monotone_and_at_least_first_order(mu, gamma):
    report = run_limit(beta_case(mu=mu, gamma=gamma, degree_cap=4))
    assert report.monotone_ok
    for p in report.poly_orders:
        if p is not None:
            assert p >= 0.8
