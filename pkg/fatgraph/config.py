"""Configuration management for fatgraph."""

import copy
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import yaml

from fatgraph.domain.errors import ConfigError
from fatgraph.domain.types import SHAPE_MIXES

DECOMPOSITION_METHODS = ("blowup", "separator")


def _deep_merge(base: Dict[str, Any], updates: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in updates.items():
        if isinstance(merged.get(key), dict) and isinstance(value, dict):
            merged[key] = _deep_merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class Config:
    """Layered settings for the solvers, generator, wiring and bench commands.

    Values from the YAML file override ``DEFAULT_CONFIG`` key by key, so a file
    that only sets ``separator.exact_h0_limit`` keeps every other default.
    """

    CONFIG_DIR = Path.home() / ".fatgraph"
    CONFIG_FILE = CONFIG_DIR / "config.yaml"

    DEFAULT_CONFIG = {
        "gamma": "log",
        "separator": {
            "exact_h0": False,
            "exact_h0_limit": 2000,
        },
        "decomposition": {
            "method": "blowup",
            "base_constant": 4,
        },
        "solver": {
            "prune": True,
        },
        "oracle": {
            "max_n": 24,
            "max_n_connectivity": 14,
        },
        "generator": {
            "denominator_bits": 16,
            "shape_mix": "ball",
            "size_ratio": 1,
        },
        "wiring": {
            "length_factor": 200,
            "check_subgrids": False,
        },
        "bench": {
            "threads": 1,
        },
        "logging": {
            "level": "WARNING",
        },
    }

    # keys that must hold positive integers
    POSITIVE_INTS = (
        "separator.exact_h0_limit",
        "oracle.max_n",
        "oracle.max_n_connectivity",
        "generator.denominator_bits",
        "wiring.length_factor",
        "bench.threads",
    )

    def __init__(self, config_path: Optional[Path] = None):
        """Load and validate the configuration.

        Args:
            config_path: Optional custom path to config file. If None, uses default.

        Raises:
            ConfigError: If the file cannot be parsed or holds invalid values.
        """
        self.config_path = Path(config_path) if config_path else self.CONFIG_FILE
        self._config: Dict[str, Any] = {}
        self.load()

    def load(self) -> Dict[str, Any]:
        """Read the file if present and merge it over the defaults."""
        loaded: Any = {}
        if self.config_path.exists():
            try:
                loaded = yaml.safe_load(self.config_path.read_text(encoding="utf-8")) or {}
            except (OSError, yaml.YAMLError) as e:
                raise ConfigError(f"Failed to load config from {self.config_path}: {e}")
            if not isinstance(loaded, dict):
                raise ConfigError(f"Config file {self.config_path} must contain a mapping")
        self._config = _deep_merge(self.DEFAULT_CONFIG, loaded)
        self.validate()
        return self._config

    def validate(self) -> None:
        """Check names and numeric ranges of the merged settings.

        Raises:
            ConfigError: On the first invalid value.
        """
        from fatgraph.separator.weights import WeightRegistry

        gamma = self.get("gamma")
        if str(gamma).lower() not in WeightRegistry.list_functions():
            raise ConfigError(f"Unknown weight function '{gamma}'. Available: {', '.join(WeightRegistry.list_functions())}")
        method = self.get("decomposition.method")
        if method not in DECOMPOSITION_METHODS:
            raise ConfigError(f"decomposition.method must be one of {', '.join(DECOMPOSITION_METHODS)}, got '{method}'")
        if self.get("generator.shape_mix") not in SHAPE_MIXES:
            raise ConfigError(f"generator.shape_mix must be one of {', '.join(SHAPE_MIXES)}")
        for key in self.POSITIVE_INTS:
            value = self.get(key)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ConfigError(f"{key} must be a positive integer, got {value!r}")
        for key in ("decomposition.base_constant", "generator.size_ratio"):
            value = self.get(key)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or value <= 0:
                raise ConfigError(f"{key} must be a positive number, got {value!r}")
        if self.get("generator.size_ratio") < 1:
            raise ConfigError("generator.size_ratio must be at least 1")
        level = str(self.get("logging.level")).upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ConfigError(f"Unknown logging level '{level}'")

    def save(self) -> None:
        """Write the active configuration as YAML."""
        self.config_path.parent.mkdir(parents=True, exist_ok=True)
        with open(self.config_path, "w", encoding="utf-8") as f:
            yaml.safe_dump(self._config, f, default_flow_style=False, sort_keys=False)

    def get(self, key: str, default: Any = None) -> Any:
        """Get a configuration value.

        Args:
            key: Configuration key (supports dot notation, e.g., "separator.exact_h0_limit")
            default: Default value if key not found.
        """
        value = self._config
        for k in key.split("."):
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default
        return value

    def set(self, key: str, value: Any) -> None:
        """Set a configuration value by dot-notation key."""
        keys = key.split(".")
        node = self._config
        for k in keys[:-1]:
            if not isinstance(node.get(k), dict):
                node[k] = {}
            node = node[k]
        node[keys[-1]] = value

    def solver_settings(self, **overrides: Any) -> Dict[str, Any]:
        """Keyword arguments for a solver, with non-None overrides winning.

        A false ``exact_h0`` maps to None so the solver picks the exhaustive
        search by instance size.
        """
        settings = {
            "gamma": self.get("gamma"),
            "method": self.get("decomposition.method"),
            "c": float(self.get("decomposition.base_constant")),
            "exact_h0": True if self.get("separator.exact_h0") else None,
            "exact_limit": self.get("separator.exact_h0_limit"),
            "prune": bool(self.get("solver.prune")),
        }
        settings.update({k: v for k, v in overrides.items() if v is not None})
        return settings

    def oracle_limits(self) -> Tuple[int, int]:
        """(max_n, max_n_connectivity) for the brute-force oracle."""
        return self.get("oracle.max_n"), self.get("oracle.max_n_connectivity")

    def as_dict(self) -> Dict[str, Any]:
        return copy.deepcopy(self._config)

    @classmethod
    def init_config(cls, config_path: Optional[Path] = None) -> Path:
        """Write a config file holding the defaults and return its path."""
        config = cls(config_path)
        config.save()
        return config.config_path
