from fractions import Fraction

import pytest

from app.config import SchinzelSettings, settings
from app.errors import ConfigError
from app.schemas.run import SCALED_CAPS, RunConfig


def test_defaults():
    config = RunConfig.from_settings(SchinzelSettings())
    assert config.budget_scale == 1
    assert set(config.caps) == set(SCALED_CAPS)
    assert config.caps["SCAN_CAP"] == 100


def test_scale_is_applied_to_every_cap():
    config = RunConfig.from_settings(SchinzelSettings(), budget_scale="1/2", seed=7)
    assert config.budget_scale == Fraction(1, 2)
    assert config.seed == 7
    assert config.caps["SCAN_CAP"] == 50
    assert config.caps["LAMBDA_HEIGHT"] == 2


def test_tiny_scale_keeps_caps_positive():
    config = RunConfig.from_settings(SchinzelSettings(), budget_scale="1/1000")
    assert all(cap >= 1 for cap in config.caps.values())


@pytest.mark.parametrize("scale", ["0", "-1", "abc", "1/0"])
def test_invalid_scale(scale):
    with pytest.raises(ConfigError):
        RunConfig.from_settings(SchinzelSettings(), budget_scale=scale)


def test_activate_updates_global_settings():
    RunConfig.from_settings(budget_scale="0.5", seed=3).activate()
    assert settings.BUDGET_SCALE == Fraction(1, 2)
    assert settings.SEED == 3
    assert settings.scaled("SCAN_CAP") == 50


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("SCHINZEL_SCAN_CAP", "7")
    monkeypatch.setenv("SCHINZEL_BUDGET_SCALE", "3/2")
    source = SchinzelSettings()
    assert source.SCAN_CAP == 7
    assert source.scaled("SCAN_CAP") == 10


def test_environment_rejects_non_positive_scale(monkeypatch):
    monkeypatch.setenv("SCHINZEL_BUDGET_SCALE", "0")
    with pytest.raises(ValueError):
        SchinzelSettings()
