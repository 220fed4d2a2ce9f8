# test_config.py
import logging
from pathlib import Path

import pytest
from omegaconf.errors import ValidationError

from sasgames.config import (
    AppConfig,
    OracleConfig,
    SimulationConfig,
    load_config,
)
from sasgames.defaults import get_default_oracle_config
from sasgames.utils.logger import setup_logging

CONFIGS = Path(__file__).parents[1] / "configs"


# 1. Loading
def test_defaults():
    config = load_config()
    assert isinstance(config, AppConfig)
    assert config.schedule.kind == "geometric" and config.schedule.n0 is None
    assert config.oracle == get_default_oracle_config()
    assert config.solver.memoize


def test_overrides():
    config = load_config(overrides=["oracle.max_states=512", "schedule.kind=table", "schedule.table=[2,4]"])
    assert config.oracle.max_states == 512
    assert config.schedule.table == [2, 4]


@pytest.mark.parametrize("name", ["defaults.yaml", "oracle-small.yaml", "counter-fig1.yaml"])
def test_bundled_presets(name):
    config = load_config(str(CONFIGS / name))
    assert isinstance(config, AppConfig)


def test_counter_preset():
    config = load_config(str(CONFIGS / "counter-fig1.yaml"))
    assert config.schedule.n0 == 4
    assert config.simulation.seed == 42


def test_wrong_type():
    with pytest.raises(ValidationError):
        load_config(overrides=["oracle.max_states=many"])


@pytest.mark.parametrize(
    "override",
    ["oracle.max_states=0", "schedule.kind=harmonic", "schedule.kind=table", "simulation.runs=0"],
)
def test_out_of_range(override):
    with pytest.raises(ValueError):
        load_config(overrides=[override])


def test_section_validation():
    with pytest.raises(ValueError):
        SimulationConfig(jobs=0).validate()
    with pytest.raises(ValueError):
        OracleConfig(max_scc=-1).validate()


# 2. Logging
def test_setup_logging_level(tmp_path):
    log_file = tmp_path / "run.log"
    setup_logging("debug", str(log_file))
    assert logging.root.level == logging.DEBUG
    logging.getLogger("sasgames.test").debug("hello")
    for handler in logging.root.handlers:
        handler.flush()
    assert "hello" in log_file.read_text()
    setup_logging("warning")
    assert logging.root.level == logging.WARNING


def test_setup_logging_env(monkeypatch):
    monkeypatch.setenv("SASGAMES_LOGGING_LEVEL", "info")
    setup_logging()
    assert logging.root.level == logging.INFO


def test_setup_logging_rejects_unknown_level():
    with pytest.raises(ValueError):
        setup_logging("chatty")
