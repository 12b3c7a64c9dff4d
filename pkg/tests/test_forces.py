"""Kuvvet ifadeleri: ayrıştırma, metin, kesin türev"""
import math
from fractions import Fraction

import numpy as np
import pytest

from core.exceptions import ConfigError, ForceSyntaxError, NumericalError
from core.forces import TRIG_COS, TRIG_NONE, TRIG_SIN, ForceExpr, ForceTerm, exact_text, format_number, parse_force


def test_two_term_exponential_force():
    expr = parse_force("-35*exp(t) - 14*t*exp(t)")
    assert len(expr.terms) == 2
    assert expr(0) == pytest.approx(-35.0)
    assert expr(1) == pytest.approx(-49 * math.e)


def test_factor_t_squared_minus_one_vanishes_at_one():
    expr = parse_force("t^2*sin(t) - sin(t)")
    assert len(expr.terms) == 2
    assert expr(1) == pytest.approx(0.0, abs=1e-15)
    assert expr(0.5) == pytest.approx((0.25 - 1) * math.sin(0.5))


def test_polynomial_evaluation_is_exact_for_fractions():
    expr = parse_force("3/4*t^3 - 2*t + 1/3")
    assert expr(Fraction(1, 2)) == Fraction(3, 32) - 1 + Fraction(1, 3)


@pytest.mark.parametrize(
    "text",
    [
        "-35*exp(t) - 14*t*exp(t)",
        "t^2*sin(t) - sin(t)",
        "sin(2*t+1/2) + 3/4*t^5*cos(-t-2)",
        "exp(-t) + exp(-3/2*t)*t",
        "-t + 7",
        "0",
    ],
)
def test_text_round_trip(text):
    expr = parse_force(text)
    assert parse_force(expr.to_text()) == expr


def test_like_terms_merge_and_cancel():
    assert parse_force("t + 2*t - 3*t").is_zero
    assert parse_force("t*t*t") == parse_force("t^3")
    assert parse_force("exp(t)*exp(t)") == parse_force("exp(2*t)")


def test_derivatives_are_exact():
    assert parse_force("t^7").derivative(7) == ForceExpr.constant(5040)
    assert parse_force("t^7").derivative(8).is_zero
    assert parse_force("exp(t)*sin(t)").derivative(2) == parse_force("2*exp(t)*cos(t)")
    assert parse_force("sin(2*t)").derivative() == parse_force("2*cos(2*t)")
    assert parse_force("cos(t)").derivative(4) == parse_force("cos(t)")


def test_derivative_matches_finite_difference():
    expr = parse_force("t^2*exp(-t)*sin(3*t)")
    t, eps = 0.3, 1e-6
    numeric = (expr(t + eps) - expr(t - eps)) / (2 * eps)
    assert expr.derivative()(t) == pytest.approx(numeric, rel=1e-7)


def test_arithmetic():
    t = parse_force("t")
    assert (t - t).is_zero
    assert (3 * t)(2) == 6
    assert (t + 1)(2) == 3
    assert (-t)(2) == -2
    assert (t - 1).to_text() == "-1 + t"


def test_evaluate_many_matches_scalar():
    expr = parse_force("t^2*sin(t) - sin(t) + exp(t)")
    ts = np.linspace(-1, 1, 7)
    np.testing.assert_allclose(expr.evaluate_many(ts), [expr(float(t)) for t in ts], rtol=1e-14)


def test_format_number():
    assert format_number(Fraction(51, 2)) == "51/2"
    assert format_number(Fraction(4)) == "4"
    assert format_number(3) == "3"
    assert format_number(0.25) == "0.25"


@pytest.mark.parametrize(
    "text, position",
    [
        ("t + foo(t)", 4),
        ("", 0),
        ("t $ 2", 2),
        ("sin(t)*cos(t)", 7),
        ("1/0", 2),
        ("t^1.5", 2),
    ],
)
def test_syntax_errors_report_position(text, position):
    with pytest.raises(ForceSyntaxError) as info:
        parse_force(text)
    assert info.value.position == position
    assert f"konum {position}" in str(info.value)


def test_syntax_error_is_config_error():
    with pytest.raises(ConfigError):
        parse_force("log(t)")


def test_term_validation():
    with pytest.raises(ValueError):
        ForceTerm(1, poly_power=-1)
    with pytest.raises(ValueError):
        ForceTerm(1, trig="tan")
    with pytest.raises(ValueError):
        ForceTerm(float("nan"))


def test_exp_overflow_is_numerical_error():
    with pytest.raises(NumericalError):
        parse_force("exp(1000*t)")(1)
    assert parse_force("exp(-1000*t)")(1) == 0.0


def test_float_coefficients_written_exactly():
    assert exact_text(0.25) == "1/4"
    assert exact_text(3.0) == "3"
    expr = ForceExpr.of([ForceTerm(0.1, 1), ForceTerm(-2.5, 0, 0.3, TRIG_SIN, 1.7, -0.2)])
    assert parse_force(expr.to_text()) == expr


# ============================================
# RASTGELE İFADELERLE ÖZELLİKLER
# ============================================

def _random_expr(rng: np.random.Generator) -> ForceExpr:
    terms = []
    for _ in range(int(rng.integers(1, 5))):
        if rng.random() < 0.3:
            coeff = float(rng.uniform(-2, 2))
        else:
            coeff = Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 5)))
        power = int(rng.integers(0, 3))
        rate = Fraction(int(rng.integers(-2, 3)), 2)
        trig = (TRIG_NONE, TRIG_SIN, TRIG_COS)[int(rng.integers(3))]
        freq, phase = 0, 0
        if trig != TRIG_NONE:
            freq = Fraction(int(rng.integers(1, 3)))
            phase = Fraction(int(rng.integers(-3, 4)), 4)
        terms.append(ForceTerm(coeff, power, rate, trig, freq, phase))
    return ForceExpr.of(terms)


@pytest.mark.parametrize("seed", range(10))
def test_evaluation_is_linear(seed):
    rng = np.random.default_rng(seed)
    first, second = _random_expr(rng), _random_expr(rng)
    c = Fraction(int(rng.integers(-7, 8)), 3)
    combined = first + c * second
    ts = np.linspace(-1, 1, 9)
    expected = first.evaluate_many(ts) + float(c) * second.evaluate_many(ts)
    np.testing.assert_allclose(combined.evaluate_many(ts), expected, rtol=1e-12, atol=1e-12)
    for t in ts:
        assert combined(float(t)) == pytest.approx(first(float(t)) + float(c) * second(float(t)), rel=1e-12, abs=1e-12)


@pytest.mark.parametrize("seed", range(10))
def test_derivative_matches_central_difference(seed):
    rng = np.random.default_rng(100 + seed)
    expr = _random_expr(rng)
    derivative = expr.derivative()
    for t in rng.uniform(-1, 1, 5):
        t = float(t)
        h = 1e-5 * max(1.0, abs(t))
        numeric = (expr(t + h) - expr(t - h)) / (2 * h)
        assert derivative(t) == pytest.approx(numeric, rel=1e-6, abs=1e-5)


@pytest.mark.parametrize("seed", range(10))
def test_derivatives_survive_text_round_trip(seed):
    expr = _random_expr(np.random.default_rng(200 + seed))
    for order in range(4):
        derivative = expr.derivative(order)
        assert parse_force(derivative.to_text()) == derivative
