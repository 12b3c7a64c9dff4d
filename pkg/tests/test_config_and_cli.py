"""JSON yapılandırmaları, alt komutlar ve CSV çıktıları"""
import csv
import json
from pathlib import Path

import pytest

from core.end_conditions import EndConditionMode
from core.exceptions import ConfigError
from core.forces import parse_force
from main import attach_negative_values, main
from modules.cascade import reduce
from storage.config_loader import load_config, parse_config
from storage.result_writer import CONVERGENCE_HEADER, SOLUTION_HEADER, format_value
from tools.registry import EXIT_CONFIG, EXIT_NUMERICAL, EXIT_OK, registry

ROOT = Path(__file__).resolve().parent.parent


@pytest.fixture
def in_repo(monkeypatch, output_dir):
    monkeypatch.chdir(ROOT)
    return output_dir


def _read_csv(path: Path):
    with open(path, encoding="utf-8", newline="") as f:
        return list(csv.reader(f))


def _problem_section():
    return {
        "a": 0,
        "b": 1,
        "f": "-1",
        "g": "-35*exp(t) - 14*t*exp(t)",
        "exact": "t*exp(t) - t^2*exp(t)",
    }


def _write_config(tmp_path: Path, data: dict, name: str = "run.json") -> str:
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return str(path)


# ============================================
# ALT KOMUTLAR
# ============================================

def test_coeffs_delta(in_repo, capsys):
    assert main(["coeffs", "--delta", "30"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "c9 = 0" in out
    assert "c12 = 0" in out
    assert "sum = 60" in out


def test_coeffs_params(in_repo, capsys):
    assert main(["coeffs", "--params", "0,0,0,60"]) == EXIT_OK
    assert "c9 = -20" in capsys.readouterr().out


def test_coeffs_theta_notes_sum(in_repo, capsys):
    assert main(["coeffs", "--theta", "1"]) == EXIT_OK
    assert "60" in capsys.readouterr().out


@pytest.mark.parametrize("argv", [["coeffs", "--params", "1,1,1,56"], ["coeffs", "--theta", "0"]])
def test_coeffs_errors_exit_one(in_repo, argv):
    assert main(argv) == EXIT_CONFIG


@pytest.mark.parametrize(
    "argv",
    [
        ["coeffs"],
        ["coeffs", "--delta", "30", "--theta", "1"],
        ["coeffs", "--delta"],
        ["solve"],
        ["plot", "--config", "x"],
        [],
    ],
)
def test_usage_errors_exit_one(in_repo, capsys, argv):
    assert main(argv) == EXIT_CONFIG
    assert "kaskad7" in capsys.readouterr().err


def test_negative_params_are_values_not_options(in_repo, capsys):
    assert main(["coeffs", "--params", "-29/15,59/6,-79/10,60"]) == EXIT_OK
    from_params = capsys.readouterr().out.splitlines()
    assert main(["coeffs", "--delta", "60"]) == EXIT_OK
    from_delta = capsys.readouterr().out.splitlines()
    assert from_params[1:] == from_delta[1:]
    assert main(["coeffs", "--params", "-1,1,0,59"]) == EXIT_CONFIG


def test_attach_negative_values():
    assert attach_negative_values(["coeffs", "--params", "-1,1,0,60"]) == ["coeffs", "--params=-1,1,0,60"]
    assert attach_negative_values(["coeffs", "--theta", "-.5"]) == ["coeffs", "--theta=-.5"]
    assert attach_negative_values(["coeffs", "--delta", "30"]) == ["coeffs", "--delta", "30"]
    assert attach_negative_values(["--log-level", "DEBUG", "coeffs"]) == ["--log-level", "DEBUG", "coeffs"]


def test_numerical_failure_exits_two(in_repo, tmp_path):
    section = {**_problem_section(), "a": 1, "b": 2, "exact": "exp(800*t)"}
    config = _write_config(tmp_path, {"problem": section, "method": {"delta_opt": "51/2", "mode": "improved", "n": 12}})
    assert main(["solve", "--config", config]) == EXIT_NUMERICAL


def test_solve_bundled_improved_example(in_repo):
    assert main(["solve", "--config", "example1_improved_n20"]) == EXIT_OK
    rows = _read_csv(in_repo / "example1_improved_n20.csv")
    assert tuple(rows[0]) == SOLUTION_HEADER
    assert len(rows) == 22
    error = max(float(row[3]) for row in rows[1:])
    assert 2.08e-7 < error < 2.08e-5
    assert float(rows[1][0]) == -1.0 and float(rows[-1][0]) == 1.0


def test_solve_output_is_deterministic(in_repo):
    path = in_repo / "example1_improved_n20.csv"
    main(["solve", "--config", "example1_improved_n20"])
    first = path.read_bytes()
    main(["solve", "--config", "example1_improved_n20"])
    assert path.read_bytes() == first


def test_solve_without_reference_leaves_columns_empty(in_repo, tmp_path):
    section = _problem_section()
    del section["exact"]
    section["u"] = [0, 1, 0, -3, -8, -15, -24]
    config = _write_config(
        tmp_path,
        {"problem": section, "method": {"delta_opt": "51/2", "mode": "improved", "n": 12}},
    )
    assert main(["solve", "--config", config]) == EXIT_OK
    rows = _read_csv(in_repo / "run.csv")
    assert all(row[2] == "" and row[3] == "" for row in rows[1:])


def test_sum_violation_exits_one(in_repo, tmp_path):
    config = _write_config(
        tmp_path,
        {"problem": _problem_section(), "method": {"alpha": 0, "beta": 0, "gamma_": 0, "delta": 59, "n": 20}},
    )
    assert main(["solve", "--config", config]) == EXIT_CONFIG


def test_theta_config_fails_sum_check(in_repo, tmp_path):
    config = _write_config(tmp_path, {"problem": _problem_section(), "method": {"theta": 0.5, "n": 20}})
    assert main(["solve", "--config", config]) == EXIT_CONFIG


def test_missing_config_exits_one(in_repo):
    assert main(["solve", "--config", "no_such_config"]) == EXIT_CONFIG


def test_converge_bundled_table(in_repo, capsys):
    assert main(["converge", "--config", "example2_standard_half"]) == EXIT_OK
    rows = _read_csv(in_repo / "example2_standard_half.csv")
    assert tuple(rows[0]) == CONVERGENCE_HEADER
    assert [int(row[0]) for row in rows[1:]] == [10, 20, 40]
    assert all(row[3] for row in rows[1:])
    assert rows[-1][2] == ""
    assert 0.1 < float(rows[2][4]) < 10


def test_cascade_demo_writes_expression(in_repo):
    assert main(["cascade", "--config", "cascade_demo"]) == EXIT_OK
    rows = _read_csv(in_repo / "cascade_demo.csv")
    assert len(rows) == 42
    assert all(row[2] for row in rows[1:])
    assert max(float(row[3]) for row in rows[1:]) < 1e-3

    text = (in_repo / "cascade_demo.csv.g.txt").read_text(encoding="utf-8").strip()
    run = load_config("cascade_demo", "cascade")
    assert parse_force(text) == reduce(run.cascade).g


def test_cascade_subcommand_needs_cascade_section(in_repo, tmp_path):
    config = _write_config(
        tmp_path, {"problem": _problem_section(), "method": {"delta_opt": 30, "mode": "improved", "n": 20}}
    )
    assert main(["cascade", "--config", config]) == EXIT_CONFIG


# ============================================
# YAPILANDIRMA AYRIŞTIRMA
# ============================================

def test_bundled_configs_parse(in_repo):
    for path in sorted((ROOT / "data" / "configs").glob("*.json")):
        data = json.loads(path.read_text(encoding="utf-8"))
        subcommand = "cascade" if "cascade" in data else ("converge" if "n_list" in data["method"] else "solve")
        config = parse_config(data, subcommand, source=path)
        assert config.method.params.total == 60
        if config.output.table:
            assert config.problem is not None


def test_initial_values_derived_from_exact():
    config = parse_config(
        {"problem": _problem_section(), "method": {"delta_opt": "51/2", "mode": "improved", "n": 12}}, "solve"
    )
    assert config.problem.u == pytest.approx((0, 1, 0, -3, -8, -15, -24))
    assert config.method.mode == EndConditionMode.IMPROVED
    assert config.method.param_source == "delta_opt"
    assert config.output.csv_path == "kaskad.csv"


@pytest.mark.parametrize(
    "data",
    [
        {"method": {"delta_opt": 30, "n": 20}},
        {"problem": _problem_section(), "cascade": {}, "method": {"delta_opt": 30, "n": 20}},
        {"problem": _problem_section(), "method": {"n": 20}},
        {"problem": _problem_section(), "method": {"delta_opt": 30, "theta": 1, "n": 20}},
        {"problem": _problem_section(), "method": {"alpha": 0, "delta": 60, "n": 20}},
        {"problem": _problem_section(), "method": {"delta_opt": 30, "mode": "fast", "n": 20}},
        {"problem": _problem_section(), "method": {"delta_opt": 30, "n": 0}},
        {"problem": _problem_section(), "method": {"delta_opt": 30, "n": 20}, "output": {"reference": "rk"}},
        {"problem": {**_problem_section(), "g": "log(t)"}, "method": {"delta_opt": 30, "n": 20}},
    ],
)
def test_invalid_configs(data):
    with pytest.raises(ConfigError):
        parse_config(data, "solve")


def test_cascade_extra_scale_keys_rejected():
    cascade = {"N": 3, "gamma": 1, "v1": 0, "v2": 0, "v3": 0, "v4": 1}
    with pytest.raises(ConfigError):
        parse_config({"cascade": cascade, "method": {"delta_opt": 30, "n": 20}}, "cascade")


def test_unknown_sections_are_kept_as_extras(caplog):
    config = parse_config(
        {"problem": _problem_section(), "method": {"delta_opt": 30, "n": 20}, "notes": "x"}, "solve"
    )
    assert config.extras == {"notes": "x"}


# ============================================
# REGISTRY VE ÇIKTI BİÇİMİ
# ============================================

def test_registry_lists_subcommands():
    assert registry.list_tools() == ["solve", "cascade", "converge", "coeffs"]
    names = [schema["name"] for schema in registry.get_tools_schema()]
    assert names == registry.list_tools()


def test_registry_error_codes():
    code, message = registry.execute_tool("plot", {})
    assert code == EXIT_CONFIG and "plot" in message
    code, _ = registry.execute_tool("coeffs", {"bogus": "1"})
    assert code == EXIT_CONFIG


def test_format_value():
    assert format_value(None) == ""
    assert format_value(0.1) == "0.10000000000000001"
    assert format_value(2) == "2"
