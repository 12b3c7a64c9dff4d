"""
Başlangıç Değer Problemi
y^(N) + f(t) y = g(t), a ≤ t ≤ b, y^(m)(a) = u_m  (m = 0..N-1)
"""
import math
from dataclasses import dataclass
from numbers import Real
from typing import Optional, Tuple

from core.exceptions import ConfigError
from core.forces import ForceExpr


@dataclass(frozen=True)
class IvpProblem:
    a: Real
    b: Real
    f: ForceExpr
    g: ForceExpr
    u: Tuple[float, ...]
    exact: Optional[ForceExpr] = None
    label: str = ""

    def __post_init__(self):
        if not (math.isfinite(self.a) and math.isfinite(self.b)) or not self.a < self.b:
            raise ConfigError(f"Geçersiz aralık: [{self.a}, {self.b}]")
        if not self.u:
            raise ConfigError("En az bir başlangıç değeri gerekli")
        for value in self.u:
            if not math.isfinite(value):
                raise ConfigError(f"Sonlu olmayan başlangıç değeri: {value}")

    @property
    def order(self) -> int:
        return len(self.u)

    def seventh_derivative_at_start(self) -> float:
        """y^(7)(a) = g(a) - f(a) u0 (7. mertebe denklemden)"""
        return self.g(self.a) - self.f(self.a) * self.u[0]


def initial_data_from_exact(exact: ForceExpr, a: Real, order: int) -> Tuple[float, ...]:
    """Analitik çözümden u_m = y^(m)(a)"""
    return tuple(float(exact.derivative(m)(a)) for m in range(order))
