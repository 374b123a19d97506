"""Tests for configuration loading."""

import pytest
import yaml

from fatgraph.config import Config
from fatgraph.domain.errors import ConfigError


def test_defaults_without_file(temp_dir):
    """Test that a missing file yields the defaults."""
    cfg = Config(config_path=temp_dir / "missing.yaml")
    assert cfg.get("gamma") == "log"
    assert cfg.get("separator.exact_h0_limit") == 2000
    assert cfg.get("oracle.max_n") == 24
    assert cfg.get("no.such.key", "fallback") == "fallback"


def test_file_values_merge_with_defaults(temp_dir):
    """Test that nested file values override only their own keys."""
    path = temp_dir / "config.yaml"
    path.write_text(yaml.safe_dump({"separator": {"exact_h0_limit": 50}, "gamma": "sqrt"}))
    cfg = Config(config_path=path)
    assert cfg.get("separator.exact_h0_limit") == 50
    assert cfg.get("separator.exact_h0") is False
    assert cfg.get("gamma") == "sqrt"


def test_set_and_save(temp_dir):
    """Test dot-notation updates written back to disk."""
    path = temp_dir / "nested" / "config.yaml"
    cfg = Config(config_path=path)
    cfg.set("wiring.length_factor", 120)
    cfg.save()
    assert Config(config_path=path).get("wiring.length_factor") == 120


def test_init_config_creates_file(temp_dir):
    """Test that init writes the defaults."""
    path = Config.init_config(temp_dir / "init.yaml")
    assert path.exists()
    assert yaml.safe_load(path.read_text())["decomposition"]["method"] == "blowup"


def test_malformed_config_raises(temp_dir):
    """Test unparsable YAML and non-mapping documents."""
    bad = temp_dir / "bad.yaml"
    bad.write_text("gamma: [unclosed")
    with pytest.raises(ConfigError):
        Config(config_path=bad)
    scalar = temp_dir / "scalar.yaml"
    scalar.write_text("42")
    with pytest.raises(ConfigError):
        Config(config_path=scalar)


@pytest.mark.parametrize("values", [
    {"gamma": "cubic"},
    {"decomposition": {"method": "greedy"}},
    {"oracle": {"max_n": 0}},
    {"bench": {"threads": "four"}},
    {"generator": {"size_ratio": 0.5}},
    {"logging": {"level": "LOUD"}},
])
def test_invalid_values_raise(temp_dir, values):
    """Test that invalid names and ranges are rejected on load."""
    path = temp_dir / "config.yaml"
    path.write_text(yaml.safe_dump(values))
    with pytest.raises(ConfigError):
        Config(config_path=path)


def test_solver_settings_overrides(temp_dir):
    """Test that only non-None overrides replace configured values."""
    path = temp_dir / "config.yaml"
    path.write_text(yaml.safe_dump({"solver": {"prune": False}, "separator": {"exact_h0": True}}))
    cfg = Config(config_path=path)
    settings = cfg.solver_settings(method="separator", prune=None)
    assert settings["method"] == "separator"
    assert settings["prune"] is False
    assert settings["exact_h0"] is True
    assert settings["exact_limit"] == 2000
    assert Config(config_path=temp_dir / "none.yaml").solver_settings()["exact_h0"] is None
    assert cfg.oracle_limits() == (24, 14)
