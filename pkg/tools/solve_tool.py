"""
Solve Tool - Tek çözüm, knot değerleri CSV'ye
"""
import logging

from core.spline_solver import SplineSolver
from modules.oracle import max_abs_error, reference_values
from storage.config_loader import load_config
from storage.result_writer import ResultWriter

logger = logging.getLogger(__name__)


def run_solve(config: str) -> str:
    """
    Yapılandırmadaki problemi verilen n ile çözer
    örn config = "example1_improved_n20"
    """
    run = load_config(config, "solve")
    method = run.method
    solver = SplineSolver(
        method.params, method.mode, method.normalize_rows, method.with_condition, method.taylor_shift
    )
    grid = solver.solve(run.problem, method.n)

    exact = None
    summary = f"✅ {run.problem.label}: n={grid.n}, mode={method.mode.value}"
    if run.problem.exact is not None:
        exact = reference_values(run.problem.exact, grid.t)
        summary += f", maks. hata = {max_abs_error(grid, run.problem.exact):.3e}"
    if grid.condition is not None:
        summary += f", koşul ≈ {grid.condition:.3e}"

    path = ResultWriter().write_solution(run.output.csv_path, grid, exact)
    return f"{summary}\n💾 {path}"
