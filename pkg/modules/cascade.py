"""
Kaskad Modeli - Hiyerarşik hız farkı sistemi
ẏ^(k) = -Γ y^(k+1) + L^(k)(t), k = 1..N, periyodik kapanış y^(k+N) ≡ y^(k)
Tek N için N. mertebe BDP'ye indirgenir: y^(N) + Γ^N y = g(t)
"""
import logging
import math
from dataclasses import dataclass, replace
from numbers import Real
from typing import Tuple

import numpy as np

from core.exceptions import ConfigError, UnsupportedCascadeError
from core.forces import ForceExpr
from core.problem import IvpProblem

logger = logging.getLogger(__name__)

# 9 noktalı merkezi fark, y^(7) için O(H^2); katsayılar -4..4
SEVENTH_DIFFERENCE = (-0.5, 3.0, -7.0, 7.0, 0.0, -7.0, 7.0, -3.0, 0.5)


@dataclass(frozen=True)
class CascadeModel:
    """N ölçekli kaskad; kuvvetler ve başlangıç hızları 1..N sırasıyla"""

    n_scales: int
    gamma: Real
    forces: Tuple[ForceExpr, ...]
    init_velocities: Tuple[float, ...]
    a: Real = 0
    b: Real = 1

    def __post_init__(self):
        if not isinstance(self.n_scales, int) or self.n_scales < 1:
            raise ConfigError(f"N pozitif tamsayı olmalı: {self.n_scales}")
        if len(self.forces) != self.n_scales or len(self.init_velocities) != self.n_scales:
            raise ConfigError(
                f"N={self.n_scales} için {self.n_scales} kuvvet ve hız gerekli "
                f"(gelen: {len(self.forces)} kuvvet, {len(self.init_velocities)} hız)"
            )
        if not math.isfinite(self.gamma) or self.gamma <= 0:
            raise ConfigError(f"Γ pozitif sonlu olmalı: {self.gamma}")
        if not self.a < self.b:
            raise ConfigError(f"Geçersiz aralık: [{self.a}, {self.b}]")

    def force(self, k: int) -> ForceExpr:
        """L^(k); indeks mod N"""
        return self.forces[(k - 1) % self.n_scales]

    def velocity(self, k: int) -> float:
        return self.init_velocities[(k - 1) % self.n_scales]

    def shifted(self, s: int) -> "CascadeModel":
        """Ölçek indekslerini s kadar döndür: yeni model k. ölçekte eskinin k+s. ölçeğini görür"""
        N = self.n_scales
        return replace(
            self,
            forces=tuple(self.force(k + s) for k in range(1, N + 1)),
            init_velocities=tuple(self.velocity(k + s) for k in range(1, N + 1)),
        )


def compose_g(model: CascadeModel) -> ForceExpr:
    """g = Σ_{j=0}^{N-1} (-Γ)^{N-1-j} d^j L^{(N-j)}"""
    N = model.n_scales
    total = ForceExpr.zero()
    for j in range(N):
        total = total + (-model.gamma) ** (N - 1 - j) * model.force(N - j).derivative(j)
    return total


def derive_initial_conditions(model: CascadeModel) -> Tuple[float, ...]:
    """u_m = (-Γ)^m v^{(1+m)} + Σ_{j<m} (-Γ)^{m-1-j} [L^{(m-j)}]^{(j)}(a)"""
    values = []
    for m in range(model.n_scales):
        value = (-model.gamma) ** m * model.velocity(1 + m)
        for j in range(m):
            value += (-model.gamma) ** (m - 1 - j) * model.force(m - j).derivative(j)(model.a)
        values.append(float(value))
    return tuple(values)


def reduce(model: CascadeModel) -> IvpProblem:
    """Tek N için y^(1)'in sağladığı N. mertebe problem"""
    N = model.n_scales
    if N % 2 == 0:
        raise UnsupportedCascadeError(f"N={N} çift; indirgeme yalnızca tek N için tanımlı")
    if N != 7:
        logger.warning(f"⚠️ N={N}: indirgenen problem yalnızca RK kahini ile çözülebilir")

    problem = IvpProblem(
        a=model.a,
        b=model.b,
        f=ForceExpr.constant(model.gamma ** N),
        g=compose_g(model),
        u=derive_initial_conditions(model),
        label=f"kaskad N={N}, Γ={model.gamma}",
    )
    logger.info(f"🌊 Kaskad indirgendi: N={N}, g(t) = {problem.g.to_text()}")
    return problem


@dataclass
class CascadeTrajectory:
    t: np.ndarray
    y: np.ndarray  # (N, steps+1)

    def scale(self, k: int) -> np.ndarray:
        return self.y[(k - 1) % self.y.shape[0]]


def simulate_direct(model: CascadeModel, steps: int) -> CascadeTrajectory:
    """Bağlı sistemi doğrudan RK4 ile integre et"""
    if steps < 1:
        raise ValueError(f"steps ≥ 1 olmalı: {steps}")
    a, b = float(model.a), float(model.b)
    h = (b - a) / steps
    half_grid = a + 0.5 * h * np.arange(2 * steps + 1)
    forcing = np.array([model.force(k).evaluate_many(half_grid) for k in range(1, model.n_scales + 1)])
    gamma = float(model.gamma)

    def rhs(state: np.ndarray, index: int) -> np.ndarray:
        # np.roll(state, -1)[k] = state[k+1]: periyodik kapanış
        return -gamma * np.roll(state, -1) + forcing[:, index]

    y = np.empty((model.n_scales, steps + 1))
    state = np.array(model.init_velocities, dtype=float)
    y[:, 0] = state
    for i in range(steps):
        k1 = rhs(state, 2 * i)
        k2 = rhs(state + 0.5 * h * k1, 2 * i + 1)
        k3 = rhs(state + 0.5 * h * k2, 2 * i + 1)
        k4 = rhs(state + h * k3, 2 * i + 2)
        state = state + h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4)
        y[:, i + 1] = state

    return CascadeTrajectory(np.linspace(a, b, steps + 1), y)


def seventh_difference_residual(model: CascadeModel, steps: int, stride: int) -> float:
    """
    Doğrudan çözümün ilk ölçeği indirgenmiş denklemi ne kadar sağlıyor:
    H = stride·h aralıklı örneklerde max |δ^7 y / H^7 + Γ^7 y - g|
    """
    if model.n_scales != 7:
        raise UnsupportedCascadeError("Yedinci fark kontrolü yalnızca N=7 için")
    trajectory = simulate_direct(model, steps)
    t = trajectory.t[::stride]
    y = trajectory.scale(1)[::stride]
    if t.shape[0] < len(SEVENTH_DIFFERENCE):
        raise ValueError("Fark şablonu için örnek sayısı yetersiz")

    H = t[1] - t[0]
    centre = len(SEVENTH_DIFFERENCE) // 2
    interior = slice(centre, t.shape[0] - centre)
    seventh = sum(
        c * y[k : t.shape[0] - 2 * centre + k] for k, c in enumerate(SEVENTH_DIFFERENCE) if c
    ) / H ** 7
    g = compose_g(model).evaluate_many(t[interior])
    residual = seventh + float(model.gamma) ** 7 * y[interior] - g
    return float(np.max(np.abs(residual)))
