"""
Spline Parametreleri - (α, β, γ, δ)
Doğrulama, optimal aile, θ kapalı formları ve iç satır kesme katsayıları
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Dict, NamedTuple, Tuple, Union

import mpmath

from core.exceptions import ConfigError, ConstraintViolation, SingularThetaError

logger = logging.getLogger(__name__)

SUM_TARGET = 60
SUM_TOLERANCE = 1e-9
THETA_TOLERANCE = 1e-12
THETA_DIGITS = 40

Number = Union[int, float, str, Fraction]


@dataclass(frozen=True)
class SplineParams:
    """İç satır ağırlıkları; Fraction veya float tutar"""

    alpha: Real
    beta: Real
    gamma: Real
    delta: Real

    @property
    def total(self) -> Real:
        return self.alpha + self.beta + self.gamma + self.delta

    def as_tuple(self) -> Tuple[Real, Real, Real, Real]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def as_floats(self) -> Tuple[float, float, float, float]:
        return tuple(float(v) for v in self.as_tuple())

    def is_exact(self) -> bool:
        return all(isinstance(v, (int, Fraction)) for v in self.as_tuple())

    def __str__(self) -> str:
        from core.forces import format_number

        return "(" + ", ".join(format_number(v) for v in self.as_tuple()) + ")"


class TruncationCoeffs(NamedTuple):
    """Yerel kesme hatasının h^7..h^12 katsayıları (y^(7)..y^(12) çarpanları)"""

    c7: Real
    c8: Real
    c9: Real
    c10: Real
    c11: Real
    c12: Real

    def higher_order(self) -> Tuple[Real, Real, Real, Real]:
        return (self.c9, self.c10, self.c11, self.c12)


class EndRowErrorConstants(NamedTuple):
    """Standart uç satırların önde gelen hata sabitleri (× h^2 y^(9))"""

    row1: float
    row2: float
    row3: float
    row4: float
    row5: float
    row6: float


STANDARD_END_ROW_ERRORS = EndRowErrorConstants(-5.778, -6.472, -7.230, -19.288, -25.620, -33.020)


def exact_number(value: Number) -> Real:
    """JSON/CLI sayısını kesin değere çevir: '51/2' → Fraction(51, 2), 0.5 → Fraction(1, 2)"""
    if isinstance(value, bool):
        raise ConfigError(f"Sayı bekleniyordu: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ConfigError(f"Sonlu olmayan sayı: {value}")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"Sayı okunamadı: {value!r}")
    raise ConfigError(f"Sayı bekleniyordu: {value!r}")


def validate(params: SplineParams) -> SplineParams:
    """Sonluluk ve α+β+γ+δ = 60 kontrolü"""
    for value in params.as_tuple():
        if not isinstance(value, Real) or not math.isfinite(value):
            raise ConfigError(f"Parametre sonlu gerçel sayı olmalı: {value!r}")
    total = params.total
    if abs(total - SUM_TARGET) > SUM_TOLERANCE:
        raise ConstraintViolation(total)
    return params


def parse_params(text: str) -> SplineParams:
    """'1/2,19/2,49/2,51/2' biçimindeki dörtlüyü oku ve doğrula"""
    parts = [p for p in text.replace(";", ",").split(",") if p.strip()]
    if len(parts) != 4:
        raise ConfigError(f"Dört parametre bekleniyordu, {len(parts)} geldi: {text!r}")
    return validate(SplineParams(*(exact_number(p) for p in parts)))


def optimal_family(delta: Number) -> SplineParams:
    """c9..c12'yi sıfırlayan tek parametreli aile"""
    if not isinstance(delta, float):
        delta = exact_number(delta)
    params = SplineParams(
        alpha=Fraction(151, 15) - delta / 5,
        beta=Fraction(-301, 6) + delta,
        gamma=Fraction(1001, 10) - 9 * delta / 5,
        delta=delta,
    )
    return validate(params)


def from_theta(theta: float) -> SplineParams:
    """Trigonometrik kapalı formlar; 60 kısıtı uygulanmaz"""
    theta = float(theta)
    if not math.isfinite(theta) or abs(theta) < THETA_TOLERANCE or abs(math.sin(theta)) < THETA_TOLERANCE:
        raise SingularThetaError(f"θ = {theta} için kapalı formlar tanımsız (θ ≠ 0, sin θ ≠ 0 olmalı)")

    with mpmath.workdps(THETA_DIGITS):
        th = mpmath.mpf(theta)
        s, c = mpmath.sin(th), mpmath.cos(th)
        t7, t5, t3, t1 = (th ** k * s for k in (7, 5, 3, 1))
        alpha = 120 * (c - 1) / t7 + 60 / t5 - 5 / t3 + 1 / (6 * t1)
        beta = 600 * (1 - c) / t7 - 60 * (2 * c - 3) / t5 + 5 * (2 * c - 9) / t3 - (2 * c - 57) / (6 * t1)
        gamma = 1080 * (c - 1) / t7 + 180 * (2 * c + 1) / t5 + 45 * (2 * c + 1) / t3 - (38 * c - 101) / (2 * t1)
        delta = 600 * (1 - c) / t7 - 60 * (4 * c + 1) / t5 - 5 * (20 * c - 1) / t3 - (604 * c - 359) / (6 * t1)
        params = SplineParams(float(alpha), float(beta), float(gamma), float(delta))

    logger.debug(f"📐 θ={theta} → {params}, toplam={params.total}")
    return params


def theta_constraint_sum(theta: float) -> float:
    """θ formlarının toplamının kapalı ifadesi: 360/(θ^5 sin θ) + 120(1 - cos θ)/(θ sin θ)"""
    with mpmath.workdps(THETA_DIGITS):
        th = mpmath.mpf(theta)
        s = mpmath.sin(th)
        return float(360 / (th ** 5 * s) + 120 * (1 - mpmath.cos(th)) / (th * s))


def truncation_coeffs(params: SplineParams) -> TruncationCoeffs:
    """Kesin parametrelerde kesin (Fraction) sonuç döner"""
    a, b, g, d = params.as_tuple()
    excess = a + b + g + d - SUM_TARGET
    return TruncationCoeffs(
        c7=2 * excess,
        c8=excess,
        c9=(-100 + 25 * a + 13 * b + 5 * g + d) * Fraction(1, 2),
        c10=(-120 + 37 * a + 19 * b + 7 * g + d) * Fraction(1, 6),
        c11=(-228 + 337 * a + 97 * b + 17 * g + d) * Fraction(1, 24),
        c12=(-380 + 781 * a + 211 * b + 31 * g + d) * Fraction(1, 120),
    )


def is_optimal(params: SplineParams, tolerance: float = 1e-9) -> bool:
    """c9..c12 hepsi sıfır mı"""
    coeffs = truncation_coeffs(params)
    scale = max(1.0, *(abs(float(v)) for v in params.as_tuple()))
    if params.is_exact():
        return all(c == 0 for c in coeffs.higher_order())
    return all(abs(float(c)) <= tolerance * scale for c in coeffs.higher_order())


def coeffs_report(params: SplineParams) -> Dict[str, Real]:
    """Parametreler ve c7..c12 tek sözlükte"""
    report: Dict[str, Real] = dict(zip(("alpha", "beta", "gamma", "delta"), params.as_tuple()))
    report.update(truncation_coeffs(params)._asdict())
    report["sum"] = params.total
    return report
