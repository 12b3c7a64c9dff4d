"""
Cascade Tool - Kaskadı indirge, 7. mertebe problemi çöz, g(t)'yi yaz
"""
import logging

from core.spline_solver import SplineSolver
from modules.cascade import reduce, simulate_direct
from storage.config_loader import load_config
from storage.result_writer import ResultWriter

logger = logging.getLogger(__name__)

# Doğrudan simülasyon, her spline aralığına düşen RK adımı
DIRECT_STEPS_PER_INTERVAL = 200


def run_cascade(config: str) -> str:
    run = load_config(config, "cascade")
    method = run.method
    problem = reduce(run.cascade)

    solver = SplineSolver(
        method.params, method.mode, method.normalize_rows, method.with_condition, method.taylor_shift
    )
    grid = solver.solve(problem, method.n)

    reference = None
    summary = f"✅ Kaskad N={run.cascade.n_scales}: n={grid.n}, mode={method.mode.value}"
    if run.output.reference == "direct":
        steps = DIRECT_STEPS_PER_INTERVAL * method.n
        trajectory = simulate_direct(run.cascade, steps)
        reference = trajectory.scale(1)[::DIRECT_STEPS_PER_INTERVAL]
        summary += f", doğrudan simülasyona göre maks. fark = {abs(grid.y - reference).max():.3e}"

    writer = ResultWriter()
    path = writer.write_solution(run.output.csv_path, grid, reference)
    g_path = writer.write_expression(run.output.csv_path, problem.g)
    return f"{summary}\n🌊 g(t) = {problem.g.to_text()}\n💾 {path}\n💾 {g_path}"
