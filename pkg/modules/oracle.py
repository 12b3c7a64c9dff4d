"""
Kahin (Oracle) - Bağımsız referans çözümler ve yakınsama çalışmaları
RK4 ile tamamlayıcı birinci mertebe sistem, maksimum mutlak hata, tablo karşılaştırması
"""
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from core.end_conditions import EndConditionMode, Mode, min_knots
from core.exceptions import ConfigError
from core.forces import ForceExpr, parse_force
from core.linsolve import SolutionGrid
from core.problem import IvpProblem, initial_data_from_exact
from core.spline_params import SplineParams, optimal_family
from core.spline_solver import SplineSolver

logger = logging.getLogger(__name__)

RK_REFERENCE_FACTOR = 100
IMPROVED_DELTA = Fraction(51, 2)


@dataclass
class RkTrajectory:
    """Adım noktalarında durum vektörleri (y, y', ..., y^(N-1))"""

    t: np.ndarray
    states: np.ndarray
    h: float

    @property
    def y(self) -> np.ndarray:
        return self.states[:, 0]

    def at(self, t: float) -> float:
        """Adım noktasında y; ara noktalar için interpolasyon yapılmaz"""
        position = (t - self.t[0]) / self.h
        index = int(round(position))
        if index < 0 or index >= self.t.shape[0] or abs(position - index) > 1e-6:
            raise ValueError(f"t={t} bir adım noktası değil")
        return float(self.states[index, 0])

    def sample(self, ts: Sequence[float]) -> np.ndarray:
        return np.array([self.at(t) for t in ts])


def rk_solve(problem: IvpProblem, steps: int) -> RkTrajectory:
    """y^(N) = g - f y, durum (y, ..., y^(N-1)), klasik RK4, sabit adım"""
    if steps < 1:
        raise ValueError(f"steps ≥ 1 olmalı: {steps}")
    a, b = float(problem.a), float(problem.b)
    h = (b - a) / steps
    half_grid = a + 0.5 * h * np.arange(2 * steps + 1)
    f_half = problem.f.evaluate_many(half_grid)
    g_half = problem.g.evaluate_many(half_grid)

    def rhs(state: np.ndarray, index: int) -> np.ndarray:
        derivative = np.empty_like(state)
        derivative[:-1] = state[1:]
        derivative[-1] = g_half[index] - f_half[index] * state[0]
        return derivative

    states = np.empty((steps + 1, problem.order))
    state = np.array(problem.u, dtype=float)
    states[0] = state
    for i in range(steps):
        k1 = rhs(state, 2 * i)
        k2 = rhs(state + 0.5 * h * k1, 2 * i + 1)
        k3 = rhs(state + 0.5 * h * k2, 2 * i + 1)
        k4 = rhs(state + h * k3, 2 * i + 2)
        state = state + h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
        states[i + 1] = state

    return RkTrajectory(np.linspace(a, b, steps + 1), states, h)


Reference = Union[ForceExpr, RkTrajectory]


def reference_values(reference: Reference, t: np.ndarray) -> np.ndarray:
    if isinstance(reference, ForceExpr):
        return reference.evaluate_many(t)
    return reference.sample(t)


def max_abs_error(grid: SolutionGrid, reference: Reference) -> float:
    """max_i |y_i - y_ref(t_i)|, i = 0..n"""
    return float(np.max(np.abs(grid.y - reference_values(reference, grid.t))))


# ============================================
# YAKINSAMA
# ============================================

@dataclass
class ConvergenceReport:
    entries: List[Tuple[int, float]]
    orders: List[Optional[float]]
    mode: EndConditionMode
    params: SplineParams
    reference_kind: str = "analytic"

    @property
    def n_values(self) -> List[int]:
        return [n for n, _ in self.entries]

    @property
    def errors(self) -> List[float]:
        return [e for _, e in self.entries]

    def error_at(self, n: int) -> float:
        return dict(self.entries)[n]

    def order_between(self, n: int) -> Optional[float]:
        """n → 2n gözlenen mertebe"""
        index = self.n_values.index(n)
        return self.orders[index] if index < len(self.orders) else None


def observed_orders(entries: Sequence[Tuple[int, float]]) -> List[Optional[float]]:
    """Yalnızca tam ikiye katlamalarda log2(E_n / E_2n)"""
    orders: List[Optional[float]] = []
    for (n1, e1), (n2, e2) in zip(entries, entries[1:]):
        if n2 == 2 * n1 and e1 > 0 and e2 > 0:
            orders.append(math.log2(e1 / e2))
        else:
            orders.append(None)
    return orders


def reference_steps(n_list: Sequence[int], factor: int = RK_REFERENCE_FACTOR) -> int:
    """factor·max(n), tüm n'lerin ortak katına yuvarlanır (her düğüm bir RK adım noktası)"""
    common = math.lcm(*n_list)
    target = factor * max(n_list)
    return common * math.ceil(target / common)


def convergence_study(
    problem: IvpProblem,
    params: SplineParams,
    mode: Mode,
    n_list: Sequence[int],
    workers: int = 1,
    reference: Optional[Reference] = None,
    taylor_shift: bool = False,
) -> ConvergenceReport:
    """Her n için montaj + çözüm, referansa karşı hata ve gözlenen mertebeler"""
    mode = EndConditionMode(mode)
    n_list = list(n_list)
    if not n_list or any(b <= a for a, b in zip(n_list, n_list[1:])):
        raise ConfigError(f"n_list kesin artan olmalı: {n_list}")
    minimum = min_knots(mode)
    if n_list[0] < minimum:
        raise ConfigError(f"{mode.value} için en küçük n = {minimum} (gelen: {n_list[0]})")

    kind = "analytic"
    if reference is None:
        if problem.exact is not None:
            reference = problem.exact
        else:
            steps = reference_steps(n_list)
            logger.info(f"🏃 Analitik çözüm yok, RK4 referansı hesaplanıyor ({steps} adım)")
            reference = rk_solve(problem, steps)
            kind = "rk"
    elif isinstance(reference, RkTrajectory):
        kind = "rk"

    solver = SplineSolver(params, mode, taylor_shift=taylor_shift)

    def run(n: int) -> Tuple[int, float]:
        return n, max_abs_error(solver.solve(problem, n), reference)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            entries = list(pool.map(run, n_list))
    else:
        entries = [run(n) for n in n_list]

    report = ConvergenceReport(entries, observed_orders(entries), mode, params, kind)
    for (n, error), order in zip(entries, report.orders + [None]):
        logger.info(f"📉 n={n}: hata={error:.3e}" + (f", mertebe={order:.2f}" if order is not None else ""))
    return report


# ============================================
# ÖRNEK PROBLEMLER VE YAYIMLANAN TABLOLAR
# ============================================

def _example(label: str, a, b, f: str, g: str, exact: str) -> IvpProblem:
    exact_expr = parse_force(exact)
    return IvpProblem(
        a=Fraction(a),
        b=Fraction(b),
        f=parse_force(f),
        g=parse_force(g),
        u=initial_data_from_exact(exact_expr, Fraction(a), 7),
        exact=exact_expr,
        label=label,
    )


def example1() -> IvpProblem:
    """y^(7) + y = g, [-1, 1], y = (t^2 - 1) sin t"""
    return _example(
        "example1",
        -1,
        1,
        "1",
        "-t^2*cos(t) + 43*cos(t) - sin(t) + t^2*sin(t) - 14*t*sin(t)",
        "t^2*sin(t) - sin(t)",
    )


def example2() -> IvpProblem:
    """y^(7) - y = g, [0, 1], y = t(1 - t) e^t"""
    return _example("example2", 0, 1, "-1", "-35*exp(t) - 14*t*exp(t)", "t*exp(t) - t^2*exp(t)")


def example3() -> IvpProblem:
    """y^(7) = g, [0, 1], y = t(1 - t) e^t"""
    return _example(
        "example3", 0, 1, "0", "-35*exp(t) - 13*t*exp(t) - t^2*exp(t)", "t*exp(t) - t^2*exp(t)"
    )


EXAMPLES: Dict[str, Callable[[], IvpProblem]] = {
    "example1": example1,
    "example2": example2,
    "example3": example3,
}

PARAMETER_SETS: Dict[str, SplineParams] = {
    "half": SplineParams(Fraction(1, 2), Fraction(19, 2), Fraction(49, 2), Fraction(51, 2)),
    "delta60": SplineParams(Fraction(0), Fraction(0), Fraction(0), Fraction(60)),
    "tens": SplineParams(Fraction(10), Fraction(10), Fraction(10), Fraction(30)),
    "optimal": optimal_family(IMPROVED_DELTA),
}


@dataclass(frozen=True)
class PublishedColumn:
    example: str
    mode: EndConditionMode
    params_key: str
    values: Dict[int, float] = field(default_factory=dict)
    # Ön-asimptotik, karşılaştırma dışı
    excluded: Tuple[int, ...] = ()

    @property
    def params(self) -> SplineParams:
        return PARAMETER_SETS[self.params_key]


_STD = EndConditionMode.STANDARD
_IMP = EndConditionMode.IMPROVED

PUBLISHED_TABLES: Dict[str, PublishedColumn] = {
    "table1/half": PublishedColumn("example1", _STD, "half", {12: 2.88e-1, 24: 3.09e-2, 48: 2.5e-3, 96: 1.70e-4}),
    "table1/delta60": PublishedColumn("example1", _STD, "delta60", {12: 3.04e-1, 24: 3.56e-2, 48: 3.9e-3, 96: 7.37e-4}),
    "table1/tens": PublishedColumn("example1", _STD, "tens", {12: 2.76e-1, 24: 2.73e-2, 48: 1.4e-3, 96: 3.19e-4}),
    "table2/optimal": PublishedColumn("example1", _IMP, "optimal", {10: 2.25e-1, 20: 2.08e-6, 40: 7.50e-7}, (10,)),
    "table3/half": PublishedColumn("example2", _STD, "half", {10: 1.5e-3, 20: 1.75e-4, 40: 1.81e-5}),
    "table3/delta60": PublishedColumn("example2", _STD, "delta60", {10: 1.6e-3, 20: 1.94e-4, 40: 2.62e-5}),
    "table3/tens": PublishedColumn("example2", _STD, "tens", {10: 1.5e-3, 20: 1.60e-4, 40: 1.32e-5}),
    "table4/optimal": PublishedColumn("example2", _IMP, "optimal", {10: 1.82e-1, 12: 2.15e-8, 15: 3.65e-9}, (10,)),
    "table5/half": PublishedColumn("example3", _STD, "half", {9: 2.0e-3, 18: 2.26e-4, 36: 2.16e-5}),
    "table5/delta60": PublishedColumn("example3", _STD, "delta60", {9: 2.22e-3, 18: 2.66e-4, 36: 3.46e-5}),
    "table5/tens": PublishedColumn("example3", _STD, "tens", {9: 1.5e-3, 18: 1.60e-4, 36: 1.32e-5}),
    "table6/optimal": PublishedColumn("example3", _IMP, "optimal", {10: 1.82e-1, 12: 2.33e-8, 15: 1.67e-8}, (10,)),
}


def published_column(key: str) -> PublishedColumn:
    try:
        return PUBLISHED_TABLES[key]
    except KeyError:
        raise ConfigError(f"Bilinmeyen tablo '{key}'; geçerli: {', '.join(PUBLISHED_TABLES)}")


def compare_with_table(report: ConvergenceReport, column: PublishedColumn) -> Dict[int, float]:
    """n → hesaplanan / yayımlanan; tabloda olmayan n'ler atlanır"""
    ratios = {}
    for n, error in report.entries:
        if n in column.values:
            ratios[n] = error / column.values[n]
    return ratios


def reproduce_column(key: str, workers: int = 1) -> Tuple[ConvergenceReport, Dict[int, float]]:
    column = published_column(key)
    problem = EXAMPLES[column.example]()
    report = convergence_study(problem, column.params, column.mode, sorted(column.values), workers)
    return report, compare_with_table(report, column)
