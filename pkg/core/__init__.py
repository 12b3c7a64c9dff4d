"""
KASKAD-7 Çekirdek Modülleri
Kuvvet ifadeleri, spline parametreleri, uç koşullar, montaj ve doğrusal çözüm
"""

from .end_conditions import EndConditionMode
from .forces import ForceExpr, ForceTerm, parse_force
from .problem import IvpProblem
from .spline_params import SplineParams, from_theta, optimal_family, truncation_coeffs, validate
from .spline_solver import SplineSolver

__all__ = [
    'EndConditionMode',
    'ForceExpr',
    'ForceTerm',
    'parse_force',
    'IvpProblem',
    'SplineParams',
    'from_theta',
    'optimal_family',
    'truncation_coeffs',
    'validate',
    'SplineSolver',
]
