"""Sistem montajı: şekil, bant yapısı, satır tamlığı, ön koşullar"""
import numpy as np
import pytest

from core.assembly import build, interior_row, row_residual, row_scale, row_stencil, taylor_values
from core.end_conditions import EndConditionMode
from core.exceptions import ConstraintViolation, GridTooSmallError, UnsupportedOrderError
from core.forces import ForceExpr, parse_force
from core.linsolve import lu_solve
from core.problem import IvpProblem, initial_data_from_exact
from core.spline_params import SplineParams
from modules.oracle import PARAMETER_SETS, example1, example2

STANDARD = EndConditionMode.STANDARD
IMPROVED = EndConditionMode.IMPROVED


def test_shape_and_interior_band(half_params):
    system = build(example1(), half_params, STANDARD, 12)
    assert system.matrix.shape == (12, 12)
    assert system.rhs.shape == (12,)
    assert system.grid[0] == -1 and system.grid[-1] == 1
    assert system.h == pytest.approx(2 / 12)
    for r in range(6, 12):
        outside = [c for c in range(12) if c < r - 7 or c > r]
        assert np.all(system.matrix[r, outside] == 0)
        assert system.matrix[r, r] != 0


def test_interior_row_weights(half_params):
    row = interior_row(half_params, 9)
    assert sorted(row.u_coeffs) == list(range(2, 10))
    assert list(row.u_coeffs.values()) == [
        half_params.alpha, half_params.beta, half_params.gamma, half_params.delta,
        half_params.delta, half_params.gamma, half_params.beta, half_params.alpha,
    ]
    assert sum(row.y_coeffs.values()) == 0


@pytest.mark.parametrize("key", ["half", "delta60", "tens"])
@pytest.mark.parametrize("sample", ["t^8", "t^8 - 3*t^7 + t^2 + 5", "t^7"])
def test_interior_rows_exact_through_degree_eight(key, sample):
    params = PARAMETER_SETS[key]
    for row in (7, 9, 12):
        assert row_residual(STANDARD, params, parse_force(sample), 12, row) == 0


def test_interior_degree_nine_defect_is_visible():
    residual = row_residual(STANDARD, PARAMETER_SETS["delta60"], parse_force("t^9"), 12, 9)
    assert residual != 0


@pytest.mark.parametrize("sample", ["t^12", "t^11 - 3*t^5 + 1", "t^9"])
def test_optimal_interior_rows_exact_through_degree_twelve(optimal_params, sample):
    for row in (7, 10, 15):
        assert row_residual(IMPROVED, optimal_params, parse_force(sample), 15, row, a=-1, b=1) == 0


def test_optimal_interior_degree_thirteen_defect_is_visible(optimal_params):
    assert row_residual(IMPROVED, optimal_params, parse_force("t^13"), 15, 10) != 0


@pytest.mark.parametrize("row", range(1, 7))
def test_standard_end_rows_exact_through_degree_eight(half_params, row):
    assert row_residual(STANDARD, half_params, parse_force("t^8 + t^3"), 12, row) == 0


@pytest.mark.parametrize("row", range(1, 7))
def test_improved_end_rows_exact_through_degree_twelve(optimal_params, row):
    assert row_residual(IMPROVED, optimal_params, parse_force("t^12 - t^10 + 2*t"), 20, row) == 0


def test_non_polynomial_sample_is_small_relative_to_scale(optimal_params):
    sample = parse_force("t*exp(t) - t^2*exp(t)")
    for row in range(1, 8):
        residual = row_residual(IMPROVED, optimal_params, sample, 40, row)
        assert abs(residual) <= 1e-6 * row_scale(IMPROVED, optimal_params, sample, 40, row)


def test_row_stencil_index_starts_at_one(half_params):
    with pytest.raises(ValueError):
        row_stencil(STANDARD, half_params, 0)


def test_grid_too_small(half_params, optimal_params):
    with pytest.raises(GridTooSmallError):
        build(example2(), half_params, STANDARD, 8)
    with pytest.raises(GridTooSmallError):
        build(example2(), optimal_params, IMPROVED, 9)
    build(example2(), half_params, STANDARD, 9)
    build(example2(), optimal_params, IMPROVED, 10)


def test_only_seventh_order_problems(half_params):
    problem = IvpProblem(a=0, b=1, f=ForceExpr.constant(1), g=ForceExpr.zero(), u=(1.0, 0.0, 0.0, 0.0, 0.0))
    with pytest.raises(UnsupportedOrderError):
        build(problem, half_params, STANDARD, 20)


def test_constraint_checked_at_build():
    with pytest.raises(ConstraintViolation):
        build(example2(), SplineParams(1, 1, 1, 1), STANDARD, 20)


def test_initial_value_moves_to_right_side(half_params):
    problem = example1()
    system = build(problem, half_params, STANDARD, 12)
    assert system.initial_value == problem.u[0]
    assert system.mode == STANDARD and system.params == half_params


def test_row_normalization_keeps_solution(half_params):
    plain = build(example2(), half_params, STANDARD, 20)
    scaled = build(example2(), half_params, STANDARD, 20, normalize_rows=True)
    np.testing.assert_allclose(np.max(np.abs(scaled.matrix), axis=1), 1.0)
    np.testing.assert_allclose(lu_solve(scaled).y, lu_solve(plain).y, rtol=0, atol=1e-8)


def test_taylor_shift_changes_only_right_side(optimal_params):
    problem = example2()
    plain = build(problem, optimal_params, IMPROVED, 12)
    shifted = build(problem, optimal_params, IMPROVED, 12, taylor_shift=True)
    np.testing.assert_array_equal(shifted.matrix, plain.matrix)
    assert plain.offset is None
    assert shifted.initial_value == 0.0
    assert shifted.offset[0] == problem.u[0]
    assert np.max(np.abs(shifted.rhs)) < np.max(np.abs(plain.rhs))


def test_taylor_values_match_degree_seven_solution():
    exact = parse_force("t^7 - 2*t^3 + 1")
    problem = IvpProblem(
        a=0, b=1, f=ForceExpr.zero(), g=exact.derivative(7),
        u=initial_data_from_exact(exact, 0, 7), exact=exact, label="poly7",
    )
    grid = np.linspace(0, 1, 11)
    np.testing.assert_allclose(taylor_values(problem, grid), exact.evaluate_many(grid), rtol=1e-14, atol=1e-14)
    solution = lu_solve(build(problem, PARAMETER_SETS["optimal"], IMPROVED, 10, taylor_shift=True))
    np.testing.assert_allclose(solution.y, exact.evaluate_many(grid), atol=1e-12)
