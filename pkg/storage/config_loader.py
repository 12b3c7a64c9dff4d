"""
Config Loader - JSON çalışma yapılandırmaları
Bölümler: problem | cascade, method, output
"""
import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from core.end_conditions import EndConditionMode
from core.exceptions import ConfigError
from core.forces import parse_force
from core.problem import IvpProblem, initial_data_from_exact
from core.spline_params import SplineParams, exact_number, from_theta, optimal_family
from modules.cascade import CascadeModel

logger = logging.getLogger(__name__)

CONFIG_DIR = os.path.join("data", "configs")
SUBCOMMANDS = ("solve", "cascade", "converge")
PARAM_KEYS = ("alpha", "beta", "gamma_", "delta")
ORDER = 7


@dataclass
class MethodSpec:
    mode: EndConditionMode
    params: SplineParams
    param_source: str
    n: Optional[int] = None
    n_list: Optional[List[int]] = None
    normalize_rows: bool = False
    with_condition: bool = False
    taylor_shift: bool = False
    workers: int = 1


@dataclass
class OutputSpec:
    csv_path: str
    table: Optional[str] = None
    reference: Optional[str] = None


@dataclass
class RunConfig:
    subcommand: str
    method: MethodSpec
    output: OutputSpec
    problem: Optional[IvpProblem] = None
    cascade: Optional[CascadeModel] = None
    source: Optional[Path] = None
    extras: Dict[str, Any] = field(default_factory=dict)


def resolve_config_path(name: str) -> Path:
    """Dosya yolu veya data/configs altındaki paket yapılandırmasının adı"""
    candidates = [Path(name), Path(CONFIG_DIR) / name, Path(CONFIG_DIR) / f"{name}.json"]
    for candidate in candidates:
        if candidate.is_file():
            return candidate
    raise ConfigError(f"Yapılandırma bulunamadı: {name}")


def load_config(name: str, subcommand: str) -> RunConfig:
    path = resolve_config_path(name)
    try:
        with open(path, "r", encoding="utf-8") as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigError(f"JSON okunamadı ({path}): {e}")
    except OSError as e:
        raise ConfigError(f"Yapılandırma açılamadı ({path}): {e}")

    config = parse_config(data, subcommand, source=path)
    logger.info(f"📂 Yapılandırma yüklendi: {path} ({subcommand})")
    return config


def parse_config(data: Dict[str, Any], subcommand: str, source: Optional[Path] = None) -> RunConfig:
    if subcommand not in SUBCOMMANDS:
        raise ConfigError(f"Bilinmeyen alt komut: {subcommand}")
    if not isinstance(data, dict):
        raise ConfigError("Yapılandırma bir JSON nesnesi olmalı")

    has_problem = "problem" in data
    has_cascade = "cascade" in data
    if has_problem == has_cascade:
        raise ConfigError("Tam olarak bir bölüm gerekli: 'problem' veya 'cascade'")
    if subcommand == "cascade" and not has_cascade:
        raise ConfigError("'cascade' alt komutu 'cascade' bölümü ister")
    if subcommand != "cascade" and not has_problem:
        raise ConfigError(f"'{subcommand}' alt komutu 'problem' bölümü ister")

    method = _parse_method(_section(data, "method"), subcommand)
    stem = source.stem if source else "kaskad"
    output = _parse_output(data.get("output", {}), stem)

    config = RunConfig(subcommand=subcommand, method=method, output=output, source=source)
    if has_problem:
        config.problem = parse_problem(_section(data, "problem"), label=stem)
    else:
        config.cascade = parse_cascade(_section(data, "cascade"))

    unknown = set(data) - {"problem", "cascade", "method", "output", "description"}
    if unknown:
        logger.warning(f"⚠️ Bilinmeyen yapılandırma bölümleri yok sayıldı: {sorted(unknown)}")
    config.extras = {key: data[key] for key in unknown}
    return config


def _section(data: Dict[str, Any], name: str) -> Dict[str, Any]:
    section = data.get(name)
    if not isinstance(section, dict):
        raise ConfigError(f"'{name}' bölümü eksik veya nesne değil")
    return section


def _require(section: Dict[str, Any], key: str, where: str) -> Any:
    if key not in section:
        raise ConfigError(f"'{where}.{key}' eksik")
    return section[key]


def _positive_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise ConfigError(f"'{where}' pozitif tamsayı olmalı: {value!r}")
    return value


def parse_problem(section: Dict[str, Any], label: str = "") -> IvpProblem:
    a = exact_number(_require(section, "a", "problem"))
    b = exact_number(_require(section, "b", "problem"))
    f = parse_force(str(_require(section, "f", "problem")))
    g = parse_force(str(_require(section, "g", "problem")))
    exact = parse_force(section["exact"]) if section.get("exact") else None

    if "u" in section:
        values = section["u"]
        if not isinstance(values, list):
            raise ConfigError("'problem.u' bir liste olmalı")
        u = tuple(float(exact_number(v)) for v in values)
    elif all(f"u{m}" in section for m in range(ORDER)):
        u = tuple(float(exact_number(section[f"u{m}"])) for m in range(ORDER))
    elif exact is not None:
        u = initial_data_from_exact(exact, a, ORDER)
        logger.info("ℹ️ u0..u6 analitik çözümden türetildi")
    else:
        raise ConfigError("'problem' bölümünde u0..u6 (veya 'exact') gerekli")

    return IvpProblem(a=a, b=b, f=f, g=g, u=u, exact=exact, label=label)


def parse_cascade(section: Dict[str, Any]) -> CascadeModel:
    N = _positive_int(_require(section, "N", "cascade"), "cascade.N")
    gamma = exact_number(_require(section, "gamma", "cascade"))
    forces = tuple(parse_force(str(section.get(f"L{k}", "0"))) for k in range(1, N + 1))
    velocities = tuple(float(exact_number(_require(section, f"v{k}", "cascade"))) for k in range(1, N + 1))
    extra = [k for k in section if k.startswith(("L", "v")) and k[1:].isdigit() and int(k[1:]) > N]
    if extra:
        raise ConfigError(f"N={N} için fazla ölçek anahtarları: {sorted(extra)}")
    return CascadeModel(
        n_scales=N,
        gamma=gamma,
        forces=forces,
        init_velocities=velocities,
        a=exact_number(section.get("a", 0)),
        b=exact_number(section.get("b", 1)),
    )


def _parse_params(section: Dict[str, Any]) -> tuple:
    present = [key for key in ("params", "delta_opt", "theta") if _has_source(section, key)]
    if len(present) != 1:
        raise ConfigError(
            "Tam olarak bir parametre kaynağı gerekli: alpha/beta/gamma_/delta, delta_opt veya theta "
            f"(bulunan: {present or 'hiçbiri'})"
        )
    source = present[0]
    if source == "params":
        missing = [key for key in PARAM_KEYS if key not in section]
        if missing:
            raise ConfigError(f"Eksik parametreler: {missing}")
        return SplineParams(*(exact_number(section[key]) for key in PARAM_KEYS)), source
    if source == "delta_opt":
        return optimal_family(section["delta_opt"]), source
    return from_theta(float(exact_number(section["theta"]))), source


def _has_source(section: Dict[str, Any], key: str) -> bool:
    if key == "params":
        return any(k in section for k in PARAM_KEYS)
    return key in section


def _parse_method(section: Dict[str, Any], subcommand: str) -> MethodSpec:
    try:
        mode = EndConditionMode(str(section.get("mode", "standard")).lower())
    except ValueError:
        raise ConfigError(f"Geçersiz mode: {section.get('mode')!r} (standard | improved)")
    params, source = _parse_params(section)

    method = MethodSpec(
        mode=mode,
        params=params,
        param_source=source,
        normalize_rows=bool(section.get("normalize_rows", False)),
        with_condition=bool(section.get("condition", False)),
        taylor_shift=bool(section.get("taylor_shift", False)),
        workers=_positive_int(section.get("workers", 1), "method.workers"),
    )
    if subcommand == "converge":
        n_list = _require(section, "n_list", "method")
        if not isinstance(n_list, list) or not n_list:
            raise ConfigError("'method.n_list' boş olmayan bir liste olmalı")
        method.n_list = [_positive_int(n, "method.n_list") for n in n_list]
    else:
        method.n = _positive_int(_require(section, "n", "method"), "method.n")
    return method


def _parse_output(section: Dict[str, Any], stem: str) -> OutputSpec:
    if not isinstance(section, dict):
        raise ConfigError("'output' bölümü nesne olmalı")
    reference = section.get("reference")
    if reference not in (None, "direct"):
        raise ConfigError(f"Geçersiz referans: {reference!r} (yalnızca 'direct')")
    return OutputSpec(
        csv_path=str(section.get("csv_path", f"{stem}.csv")),
        table=section.get("table"),
        reference=reference,
    )
