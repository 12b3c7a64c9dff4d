"""
Sistem Montajı
n×n doğrusal sistem: satır 1..6 uç koşullar, satır 7..n iç spline bağıntısı.
Bilinmeyenler y_1..y_n; U_j = g_j - f_j y_j yerine konur, y_0 = u0 sağ tarafa geçer.
Rasyonel katsayılar burada, tek seferde float'a çevrilir.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Dict, Optional, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from core.end_conditions import EndConditionMode, Mode, RowStencil, min_knots, resolved_rows
from core.exceptions import GridTooSmallError, UnsupportedOrderError
from core.forces import ForceExpr
from core.problem import IvpProblem
from core.spline_params import SplineParams, validate

logger = logging.getLogger(__name__)

SPLINE_ORDER = 7
INTERIOR_Y_WEIGHTS = (-120, 840, -2520, 4200, -4200, 2520, -840, 120)


@dataclass
class LinearSystem:
    matrix: np.ndarray
    rhs: np.ndarray
    grid: np.ndarray
    h: float
    initial_value: float = 0.0
    mode: Optional[EndConditionMode] = None
    params: Optional[SplineParams] = None
    offset: Optional[np.ndarray] = None  # çözüme geri eklenen Taylor polinomu (t_0..t_n)

    @classmethod
    def from_arrays(cls, matrix, rhs, initial_value: float = 0.0) -> "LinearSystem":
        """Hazır matristen sistem (ızgara 0..n, h = 1)"""
        matrix = np.asarray(matrix, dtype=float)
        rhs = np.asarray(rhs, dtype=float)
        n = rhs.shape[0]
        return cls(matrix, rhs, np.arange(n + 1, dtype=float), 1.0, initial_value)

    @property
    def n(self) -> int:
        return self.rhs.shape[0]


def interior_row(params: SplineParams, i: int) -> RowStencil:
    """i = 7..n için iç bağıntı; U ağırlıkları (α β γ δ δ γ β α)"""
    alpha, beta, gamma, delta = params.as_tuple()
    weights = (alpha, beta, gamma, delta, delta, gamma, beta, alpha)
    knots = range(i - SPLINE_ORDER, i + 1)
    return RowStencil(
        label=f"interior-{i}",
        u_coeffs=dict(zip(knots, weights)),
        y_coeffs={j: Fraction(w) for j, w in zip(knots, INTERIOR_Y_WEIGHTS)},
    )


def row_stencil(mode: Mode, params: SplineParams, i: int) -> RowStencil:
    if i < 1:
        raise ValueError(f"Satır indeksi 1'den başlar: {i}")
    if i <= 6:
        return resolved_rows(mode)[i - 1]
    return interior_row(params, i)


def _start_derivatives(problem: IvpProblem) -> Dict[int, float]:
    known = {k: float(problem.u[k]) for k in range(1, SPLINE_ORDER)}
    known[SPLINE_ORDER] = float(problem.seventh_derivative_at_start())
    return known


def taylor_values(problem: IvpProblem, grid: np.ndarray) -> np.ndarray:
    """Başlangıç verisinden 7. dereceden Taylor polinomu T(t) = Σ y^(k)(a) (t-a)^k / k!"""
    known = _start_derivatives(problem)
    coeffs = [float(problem.u[0])] + [known[k] / math.factorial(k) for k in range(1, SPLINE_ORDER + 1)]
    return P.polyval(grid - float(problem.a), coeffs)


def build(
    problem: IvpProblem,
    params: SplineParams,
    mode: Mode,
    n: int,
    normalize_rows: bool = False,
    taylor_shift: bool = False,
) -> LinearSystem:
    """
    Problemi ve parametreleri n×n sisteme dönüştür.
    taylor_shift: y = T + z yazılır, z sıfır başlangıç verisiyle çözülür; matris değişmez.
    """
    mode = EndConditionMode(mode)
    validate(params)
    if problem.order != SPLINE_ORDER:
        raise UnsupportedOrderError(
            f"Spline çözücü yalnızca 7. mertebe problemleri çözer (gelen mertebe: {problem.order})"
        )
    minimum = min_knots(mode)
    if n < minimum:
        raise GridTooSmallError(f"{mode.value} uç koşulları en az n = {minimum} ister (gelen: {n})")

    h = float(problem.b - problem.a) / n
    grid = np.linspace(float(problem.a), float(problem.b), n + 1)
    f = problem.f.evaluate_many(grid)
    g = problem.g.evaluate_many(grid)
    u0 = float(problem.u[0])
    known = _start_derivatives(problem)
    offset = None
    if taylor_shift:
        offset = taylor_values(problem, grid)
        # z^(7) + f z = g - f T - y^(7)(a), z ve türevleri a noktasında sıfır
        g = g - f * offset - known[SPLINE_ORDER]
        u0 = 0.0
        known = dict.fromkeys(known, 0.0)
    scale = h ** -SPLINE_ORDER

    matrix = np.zeros((n, n))
    rhs = np.zeros(n)
    for i in range(1, n + 1):
        stencil = row_stencil(mode, params, i)
        r = i - 1
        for j, weight in stencil.u_coeffs.items():
            weight = float(weight)
            rhs[r] += weight * g[j]
            if j == 0:
                rhs[r] -= weight * f[0] * u0
            else:
                matrix[r, j - 1] += weight * f[j]
        for j, coeff in stencil.y_coeffs.items():
            coeff = float(coeff) * scale
            if j == 0:
                rhs[r] -= coeff * u0
            else:
                matrix[r, j - 1] += coeff
        for k, coeff in stencil.deriv_coeffs.items():
            rhs[r] -= float(coeff) * h ** (k - SPLINE_ORDER) * known[k]

    if normalize_rows:
        row_max = np.max(np.abs(matrix), axis=1)
        row_max[row_max == 0] = 1.0
        matrix /= row_max[:, None]
        rhs /= row_max

    logger.debug(
        f"🧱 Sistem kuruldu: mode={mode.value}, n={n}, h={h:.6g}, params={params}"
        + (" (Taylor kaydırmalı)" if taylor_shift else "")
    )
    return LinearSystem(matrix, rhs, grid, h, u0, mode, params, offset)


# ============================================
# POLİNOM TAMLIK KONTROLÜ
# ============================================

def _exact(value: Real) -> Real:
    return Fraction(value) if isinstance(value, (int, Fraction)) else value


def _row_balance(
    mode: Mode,
    params: SplineParams,
    sample: ForceExpr,
    n: int,
    row: int,
    a: Real,
    b: Real,
) -> Tuple[Real, Real, Real]:
    a, b = _exact(a), _exact(b)
    h = (b - a) / n
    stencil = row_stencil(mode, params, row)
    seventh = sample.derivative(SPLINE_ORDER)

    lhs = sum((w * seventh(a + j * h) for j, w in stencil.u_coeffs.items()), 0)
    terms = [c * sample(a + j * h) for j, c in stencil.y_coeffs.items()]
    terms += [e * h ** k * sample.derivative(k)(a) for k, e in stencil.deriv_coeffs.items()]
    rhs = sum(terms, 0) / h ** SPLINE_ORDER
    magnitude = max(abs(lhs), sum(abs(t) for t in terms) / h ** SPLINE_ORDER, 1)
    return lhs, rhs, magnitude


def row_residual(
    mode: Mode,
    params: SplineParams,
    sample: ForceExpr,
    n: int,
    row: int,
    a: Real = 0,
    b: Real = 1,
) -> float:
    """f ≡ 0 ve y = sample için satır LHS - RHS; polinom ve kesin girdilerle hesap rasyoneldir"""
    lhs, rhs, _ = _row_balance(mode, params, sample, n, row, a, b)
    return float(lhs - rhs)


def row_scale(
    mode: Mode,
    params: SplineParams,
    sample: ForceExpr,
    n: int,
    row: int,
    a: Real = 0,
    b: Real = 1,
) -> float:
    """Satırdaki terimlerin büyüklüğü; row_residual için göreli tolerans tabanı"""
    return float(_row_balance(mode, params, sample, n, row, a, b)[2])
