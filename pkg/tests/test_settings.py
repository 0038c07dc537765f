import json
from unittest.mock import patch

import pytest

from core.errors import InputError, ParseError
from utils.helpers import FanoPoissonHelpers
from utils.settings import Settings, load_settings


@pytest.fixture
def config_file(tmp_path):
    """Fixture for a small valid settings file."""
    path = tmp_path / "settings.yaml"
    path.write_text("sampling:\n  seed: 7\n  count: 3\nverification:\n  n_jobs: 2\n")
    return path


def test_defaults_when_missing(tmp_path):
    """Test that a missing settings file gives the defaults."""
    settings = load_settings(tmp_path / "absent.yaml")
    assert settings == Settings()
    assert settings.sampling.max_height == 100
    assert settings.cubic.chart_order == [0, 1, 2, 3, 4]


def test_load_overrides(config_file):
    """Test that file values override defaults."""
    settings = load_settings(config_file)
    assert settings.sampling.seed == 7
    assert settings.sampling.count == 3
    assert settings.verification.n_jobs == 2
    assert settings.logging.level == "INFO"


def test_project_settings_file_is_valid():
    """Test that config/settings.yaml validates."""
    assert load_settings().reports.indent == 2


@pytest.mark.parametrize(
    "text",
    [
        "sampling:\n  count: 0\n",
        "cubic:\n  chart_order: [0, 0]\n",
        "logging:\n  level: LOUD\n",
        "verification:\n  n_jobs: 0\n",
        "unknown: 1\n",
        "- just\n- a list\n",
    ],
)
def test_invalid_settings(tmp_path, text):
    """Test that invalid values raise InputError."""
    path = tmp_path / "bad.yaml"
    path.write_text(text)
    with pytest.raises(InputError):
        load_settings(path)


def test_malformed_yaml(tmp_path):
    """Test that unparsable YAML raises ParseError."""
    path = tmp_path / "broken.yaml"
    path.write_text("sampling: [unclosed\n")
    with pytest.raises(ParseError):
        load_settings(path)


def test_load_json(tmp_path):
    """Test JSON loading and its error cases."""
    good = tmp_path / "good.json"
    good.write_text(json.dumps({"a": {"01": "1"}}))
    assert FanoPoissonHelpers.load_json(str(good)) == {"a": {"01": "1"}}
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        FanoPoissonHelpers.load_json(str(bad))
    with pytest.raises(InputError):
        FanoPoissonHelpers.load_json(str(tmp_path / "missing.json"))


def test_setup_logging_uses_settings(tmp_path, config_file):
    """Test that the rotating log file follows the logging settings."""
    settings = load_settings(config_file)
    with patch("utils.helpers.logfile") as mock_logfile:
        path = FanoPoissonHelpers.setup_logging("unit", settings, tmp_path)
    assert path == tmp_path / "logs" / "unit.log"
    mock_logfile.assert_called_once_with(path, maxBytes=5_000_000, backupCount=5)
    assert path.parent.is_dir()


if __name__ == "__main__":
    pytest.main([__file__])
