from __future__ import annotations

import json

import pytest

from translen.bounds.config_loader import load_config as load_bounds_config
from translen.exceptions import ConfigError
from translen.report.config_loader import load_config as load_report_config
from translen.utils.settings import convert_string_booleans, env_override, load_settings

DEFAULTS = {
    "sweep": {"parameter_cap": 200, "workers": 4},
    "csv": {"float_precision": 12},
}


def test_missing_file_uses_defaults(tmp_path):
    settings = load_settings(tmp_path / "absent.json", DEFAULTS)
    assert settings == DEFAULTS
    settings["sweep"]["workers"] = 1
    assert DEFAULTS["sweep"]["workers"] == 4


def test_partial_sections_are_merged(tmp_path):
    path = tmp_path / "settings.json"
    path.write_text(json.dumps({"sweep": {"workers": 8}}), encoding="utf-8")
    settings = load_settings(path, DEFAULTS)
    assert settings["sweep"] == {"parameter_cap": 200, "workers": 8}
    assert settings["csv"] == {"float_precision": 12}


def test_unparsable_file(tmp_path):
    path = tmp_path / "settings.json"
    path.write_text("{\n  \"sweep\": ", encoding="utf-8")
    with pytest.raises(ConfigError, match="line"):
        load_settings(path, DEFAULTS)


def test_convert_string_booleans():
    converted = convert_string_booleans({"a": "true", "b": {"c": "False", "d": "maybe"}, "e": 1})
    assert converted == {"a": True, "b": {"c": False, "d": "maybe"}, "e": 1}


def test_packaged_settings():
    assert load_bounds_config()["certify"] == {
        "max_j": 200,
        "mode": "boolean",
        "debug_exact_spot_check": False,
    }
    assert load_report_config()["sweep"]["progress"] is True


def test_env_override(monkeypatch):
    settings = {"power_iteration": {"tolerance": 1e-12}}
    monkeypatch.setenv("TRANSLEN_TEST_TOLERANCE", "1e-8")
    assert env_override(settings, "power_iteration", "tolerance", "TRANSLEN_TEST_TOLERANCE", float) == 1e-8
    assert settings["power_iteration"]["tolerance"] == 1e-8

    monkeypatch.setenv("TRANSLEN_TEST_TOLERANCE", "tight")
    with pytest.raises(ConfigError, match="TRANSLEN_TEST_TOLERANCE"):
        env_override(settings, "power_iteration", "tolerance", "TRANSLEN_TEST_TOLERANCE", float)


def test_env_override_absent(monkeypatch):
    monkeypatch.delenv("TRANSLEN_TEST_TOLERANCE", raising=False)
    settings = {"power_iteration": {"tolerance": 1e-12}}
    assert env_override(settings, "power_iteration", "tolerance", "TRANSLEN_TEST_TOLERANCE", float) is None
    assert settings["power_iteration"]["tolerance"] == 1e-12
