import os
import sys

import pytest

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core.end_conditions import EndConditionMode  # noqa: E402
from modules.oracle import PARAMETER_SETS  # noqa: E402


@pytest.fixture
def half_params():
    return PARAMETER_SETS["half"]


@pytest.fixture
def optimal_params():
    return PARAMETER_SETS["optimal"]


@pytest.fixture(params=[EndConditionMode.STANDARD, EndConditionMode.IMPROVED], ids=["standard", "improved"])
def mode(request):
    return request.param


@pytest.fixture
def output_dir(tmp_path, monkeypatch):
    """CSV çıktıları geçici klasöre"""
    monkeypatch.setenv("KASKAD_OUTPUT_DIR", str(tmp_path / "results"))
    monkeypatch.setenv("KASKAD_LOG_FILE", str(tmp_path / "kaskad.log"))
    return tmp_path / "results"
