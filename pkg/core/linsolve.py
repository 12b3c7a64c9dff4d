"""
Doğrusal Çözücü - Kısmi pivotlu LU (LAPACK getrf/getrs/gecon)
"""
import logging
import warnings
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.linalg import LinAlgWarning, get_lapack_funcs, lu_factor
from scipy.linalg import lu_solve as lapack_lu_solve

from core.assembly import LinearSystem
from core.end_conditions import EndConditionMode
from core.exceptions import NumericalError, SingularSystemError
from core.spline_params import SplineParams

logger = logging.getLogger(__name__)

PIVOT_TOLERANCE = 1e-14
RESIDUAL_TOLERANCE = 1e-8


@dataclass
class SolutionGrid:
    """t_0..t_n üzerinde sayısal çözüm (y_0 = u0 dahil)"""

    t: np.ndarray
    y: np.ndarray
    h: float
    mode: Optional[EndConditionMode] = None
    params: Optional[SplineParams] = None
    residual: float = 0.0
    condition: Optional[float] = None

    def __post_init__(self):
        if self.t.shape != self.y.shape:
            raise ValueError(f"t ve y boyları farklı: {self.t.shape} / {self.y.shape}")

    @property
    def n(self) -> int:
        return self.t.shape[0] - 1


def _row_order(pivots: np.ndarray) -> np.ndarray:
    """getrf ipiv takaslarını satır permütasyonuna çevir (PA = LU, PA = A[order])"""
    order = np.arange(pivots.shape[0])
    for i, p in enumerate(pivots):
        order[i], order[p] = order[p], order[i]
    return order


def factorize(matrix: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """LU ayrışımı; ölçeklenmiş pivot eşiğin altındaysa SingularSystemError"""
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", LinAlgWarning)
        warnings.simplefilter("ignore", RuntimeWarning)
        lu, pivots = lu_factor(matrix, check_finite=True)

    row_norms = np.max(np.abs(matrix), axis=1)[_row_order(pivots)]
    diagonal = np.abs(np.diag(lu))
    weak = np.flatnonzero(diagonal <= PIVOT_TOLERANCE * row_norms)
    if weak.size:
        raise SingularSystemError(f"Sistem tekil: {weak[0] + 1}. pivot sıfıra çok yakın")
    return lu, pivots


def lu_solve(system: LinearSystem) -> SolutionGrid:
    """Ay = b çöz, u0'ı başa ekle, geri artığı ölç"""
    lu, pivots = factorize(system.matrix)
    interior = lapack_lu_solve((lu, pivots), system.rhs)

    residual = float(np.max(np.abs(system.matrix @ interior - system.rhs), initial=0.0))
    bound = RESIDUAL_TOLERANCE * (
        np.linalg.norm(system.matrix, np.inf) * np.max(np.abs(interior), initial=0.0)
        + np.max(np.abs(system.rhs), initial=0.0)
    )
    if not np.all(np.isfinite(interior)) or residual > bound:
        raise NumericalError(f"Geri artık çok büyük: {residual:.3e} > {bound:.3e}")

    y = np.concatenate(([system.initial_value], interior))
    if system.offset is not None:
        y = y + system.offset
    logger.debug(f"🔢 LU çözümü: n={system.n}, artık={residual:.3e}")
    return SolutionGrid(system.grid, y, system.h, system.mode, system.params, residual)


def condition_estimate(system: LinearSystem) -> float:
    """Sonsuz normda koşul sayısı tahmini (1/rcond)"""
    lu, pivots = factorize(system.matrix)
    anorm = np.linalg.norm(system.matrix, np.inf)
    (gecon,) = get_lapack_funcs(("gecon",), (lu,))
    rcond, info = gecon(lu, anorm, norm="I")
    if info != 0 or rcond == 0:
        return float("inf")
    return float(1.0 / rcond)
