"""
Coeffs Tool - (α, β, γ, δ) ve kesme katsayıları c7..c12
"""
from typing import Optional

from core.exceptions import ConfigError
from core.forces import format_number
from core.spline_params import (
    SUM_TARGET,
    coeffs_report,
    exact_number,
    from_theta,
    optimal_family,
    parse_params,
    theta_constraint_sum,
)


def run_coeffs(delta: Optional[str] = None, theta: Optional[str] = None, params: Optional[str] = None) -> str:
    given = [name for name, value in (("delta", delta), ("theta", theta), ("params", params)) if value is not None]
    if len(given) != 1:
        raise ConfigError("Tam olarak biri gerekli: --delta, --theta veya --params")

    notes = []
    if delta is not None:
        values = optimal_family(delta)
        title = f"optimal aile, δ = {delta}"
    elif theta is not None:
        angle = float(exact_number(theta))
        values = from_theta(angle)
        title = f"θ = {theta}"
        notes.append(f"ℹ️ θ formlarında α+β+γ+δ = {theta_constraint_sum(angle):.15g} ({SUM_TARGET} kısıtı uygulanmaz)")
    else:
        values = parse_params(params)
        title = f"params = {params}"

    lines = [f"📐 {title}"]
    for name, value in coeffs_report(values).items():
        text = format_number(value)
        if not isinstance(value, float) and "/" in text:
            text += f"  (≈ {float(value):.15g})"
        lines.append(f"{name} = {text}")
    return "\n".join(lines + notes)
