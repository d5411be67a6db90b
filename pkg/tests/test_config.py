"""
Unit tests for harness configuration
"""
import pytest

from poset_metrics.config import DEFAULT_CONFIG_PATH, HarnessSettings, load_settings
from poset_metrics.core.errors import InvalidParameterError

ENV_VARS = ["POSET_METRICS_CONFIG", "POSET_METRICS_JOBS", "POSET_METRICS_MAX_WITNESSES",
            "POSET_METRICS_MAX_N", "LOG_LEVEL"]


class TestLoadSettings:
    """Test cases for load_settings"""

    @pytest.fixture(autouse=True)
    def clean_env(self, monkeypatch):
        for variable in ENV_VARS:
            monkeypatch.delenv(variable, raising=False)

    def test_defaults(self, tmp_path):
        settings = load_settings(tmp_path / "missing.yaml")
        assert settings == HarnessSettings()
        assert settings.enumeration_cap == 8
        assert settings.max_witnesses == 10

    def test_shipped_file(self):
        assert DEFAULT_CONFIG_PATH.is_file()
        assert load_settings().default_max_n == 6

    def test_yaml(self, tmp_path):
        path = tmp_path / "harness.yaml"
        path.write_text("harness:\n  jobs: 4\n  max_witnesses: all\n  enumeration_cap: 6\n")
        settings = load_settings(path)
        assert settings.jobs == 4
        assert settings.max_witnesses is None
        assert settings.enumeration_cap == 6

    def test_env_overrides_yaml(self, tmp_path, monkeypatch):
        path = tmp_path / "harness.yaml"
        path.write_text("harness:\n  jobs: 4\n")
        monkeypatch.setenv("POSET_METRICS_JOBS", "2")
        monkeypatch.setenv("POSET_METRICS_MAX_N", "5")
        settings = load_settings(path)
        assert settings.jobs == 2
        assert settings.default_max_n == 5

    def test_config_path_from_env(self, tmp_path, monkeypatch):
        path = tmp_path / "other.yaml"
        path.write_text("harness:\n  log_level: DEBUG\n")
        monkeypatch.setenv("POSET_METRICS_CONFIG", str(path))
        assert load_settings().log_level == "DEBUG"

    @pytest.mark.parametrize(
        "text",
        ["harness:\n  enumeration_cap: 9\n", "harness:\n  jobs: 0\n", "- a\n- b\n"],
    )
    def test_invalid(self, tmp_path, text):
        path = tmp_path / "harness.yaml"
        path.write_text(text)
        with pytest.raises(InvalidParameterError):
            load_settings(path)
