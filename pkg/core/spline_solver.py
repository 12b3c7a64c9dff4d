"""
Spline Çözücü - Montaj + LU akışını yöneten sınıf
"""
import logging
import time

from core.assembly import build
from core.end_conditions import EndConditionMode, Mode
from core.linsolve import SolutionGrid, condition_estimate, lu_solve
from core.problem import IvpProblem
from core.spline_params import SplineParams, is_optimal, validate

logger = logging.getLogger(__name__)


class SplineSolver:
    """Tek parametre seti ve uç koşul modu için 7. mertebe çözücü"""

    def __init__(
        self,
        params: SplineParams,
        mode: Mode = EndConditionMode.STANDARD,
        normalize_rows: bool = False,
        with_condition: bool = False,
        taylor_shift: bool = False,
    ):
        self.params = validate(params)
        self.mode = EndConditionMode(mode)
        self.normalize_rows = normalize_rows
        self.with_condition = with_condition
        self.taylor_shift = taylor_shift

        if self.mode == EndConditionMode.IMPROVED and not is_optimal(self.params):
            logger.warning(
                f"⚠️ İyileştirilmiş uç koşullar optimal aile dışında bir parametre setiyle kullanılıyor: {self.params}"
            )

    def solve(self, problem: IvpProblem, n: int) -> SolutionGrid:
        started = time.perf_counter()
        system = build(problem, self.params, self.mode, n, self.normalize_rows, self.taylor_shift)
        solution = lu_solve(system)
        if self.with_condition:
            solution.condition = condition_estimate(system)

        elapsed = (time.perf_counter() - started) * 1000
        logger.info(
            f"✅ {problem.label or 'problem'}: mode={self.mode.value}, n={n}, "
            f"artık={solution.residual:.2e} ({elapsed:.1f} ms)"
        )
        return solution


def solve_spline(problem: IvpProblem, params: SplineParams, mode: Mode, n: int) -> SolutionGrid:
    return SplineSolver(params, mode).solve(problem, n)
