#!/usr/bin/env python3
"""
prodgraph - configuration module

Settings live in an optional YAML file ($PRODGRAPH_DIR/config.yml or an
explicit path). Every key has a default, so a missing file is not an error.
PRODGRAPH_TOL overrides the spectral tolerance everywhere.
"""

import math
import os
import re
import shutil
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Set

import yaml

from .errors import ConfigError

DEFAULT_TOL = 1e-6
DEFAULT_NODE_BUDGET = 10**7
TOL_ENV_VAR = "PRODGRAPH_TOL"
DIR_ENV_VAR = "PRODGRAPH_DIR"


# --- Settings Key Definitions ---
# Each key defines: type, default, description, path and optional bounds
SETTINGS_KEYS: Dict[str, Dict[str, Any]] = {
    "spectral.tol": {
        "type": "number",
        "default": DEFAULT_TOL,
        "description": "Absolute eigenvalue clustering tolerance "
        f"(overridden by ${TOL_ENV_VAR})",
        "path": ["config", "spectral", "tol"],
        "min": 0.0,
        "exclusive_min": True,
    },
    "search.node_budget": {
        "type": "integer",
        "default": DEFAULT_NODE_BUDGET,
        "description": "Backtracking nodes before the isomorphism search aborts",
        "path": ["config", "search", "node_budget"],
        "min": 1,
    },
    "reproduce.max_n": {
        "type": "integer",
        "default": 13,
        "description": "Largest odd cycle length used by 'reproduce'",
        "path": ["config", "reproduce", "max_n"],
        "min": 3,
    },
    "reproduce.jobs": {
        "type": "integer",
        "default": 1,
        "description": "Worker processes for 'reproduce' (1 = sequential)",
        "path": ["config", "reproduce", "jobs"],
        "min": 1,
    },
    "corpus.exhaustive_order": {
        "type": "integer",
        "default": 5,
        "description": "All connected graphs up to this order enter the corpus",
        "path": ["config", "corpus", "exhaustive_order"],
        "min": 1,
        "max": 5,
    },
    "corpus.max_order": {
        "type": "integer",
        "default": 8,
        "description": "Largest order of named families in the corpus",
        "path": ["config", "corpus", "max_order"],
        "min": 2,
    },
}


def get_prodgraph_dir() -> Path:
    """Get the prodgraph directory path (with environment variable support).

    Returns:
        Path: $PRODGRAPH_DIR if set, otherwise ~/.config/prodgraph.
    """
    return Path(os.getenv(DIR_ENV_VAR, "~/.config/prodgraph")).expanduser().resolve()


def find_config_file() -> Optional[str]:
    """Find config.yml in the prodgraph directory, None if absent."""
    config_path = get_prodgraph_dir() / "config.yml"
    if config_path.exists():
        return str(config_path)
    return None


def expand_env_vars(value: Any, missing_vars: Optional[Set[str]] = None) -> Any:
    """Expand ${VAR} and ${VAR:-default} in strings, recursing into containers."""
    if missing_vars is None:
        missing_vars = set()

    if isinstance(value, str):

        def replace_env_var(match):
            var_expr = match.group(1)
            if ":-" in var_expr:
                var_name, default_value = var_expr.split(":-", 1)
                env_value = os.getenv(var_name)
                if env_value is None:
                    missing_vars.add(var_name)
                    return default_value
                return env_value
            env_value = os.getenv(var_expr)
            if env_value is None:
                missing_vars.add(var_expr)
                return f"${{{var_expr}}}"  # keep the original form
            return env_value

        return re.sub(r"\$\{([^}]+)\}", replace_env_var, value)

    if isinstance(value, dict):
        return {k: expand_env_vars(v, missing_vars) for k, v in value.items()}

    if isinstance(value, list):
        return [expand_env_vars(item, missing_vars) for item in value]

    return value


def parse_tolerance(raw: Any, source: str) -> float:
    """Parse a positive finite tolerance, raising ConfigError otherwise."""
    try:
        tol = float(raw)
    except (TypeError, ValueError):
        raise ConfigError(f"{source}: '{raw}' is not a number") from None
    if not math.isfinite(tol) or tol <= 0:
        raise ConfigError(f"{source}: tolerance must be positive, got {raw}")
    return tol


def default_tolerance() -> float:
    """Library-wide clustering tolerance: $PRODGRAPH_TOL or 1e-6."""
    raw = os.getenv(TOL_ENV_VAR)
    if raw is None or raw.strip() == "":
        return DEFAULT_TOL
    return parse_tolerance(raw, TOL_ENV_VAR)


def _coerce_scalar(value: Any) -> Any:
    """Numeric strings (typically from ${VAR} expansion) become numbers."""
    if not isinstance(value, str):
        return value
    text = value.strip()
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return value


@dataclass
class SpectralConfig:
    """Eigenvalue clustering settings"""

    tol: float = DEFAULT_TOL


@dataclass
class SearchConfig:
    """Isomorphism search settings"""

    node_budget: int = DEFAULT_NODE_BUDGET


@dataclass
class ReproduceConfig:
    """Acceptance suite settings"""

    max_n: int = 13
    jobs: int = 1


@dataclass
class CorpusConfig:
    """Small-graph corpus settings"""

    exhaustive_order: int = 5
    max_order: int = 8


@dataclass
class Config:
    """prodgraph settings"""

    spectral: SpectralConfig = field(default_factory=SpectralConfig)
    search: SearchConfig = field(default_factory=SearchConfig)
    reproduce: ReproduceConfig = field(default_factory=ReproduceConfig)
    corpus: CorpusConfig = field(default_factory=CorpusConfig)

    @classmethod
    def from_dict(cls, data: Optional[Dict[str, Any]]) -> "Config":
        """Build a Config from the parsed YAML document."""
        config_data = (data or {}).get("config") or {}

        spectral_data = config_data.get("spectral") or {}
        search_data = config_data.get("search") or {}
        reproduce_data = config_data.get("reproduce") or {}
        corpus_data = config_data.get("corpus") or {}

        return cls(
            spectral=SpectralConfig(
                tol=_coerce_scalar(spectral_data.get("tol", DEFAULT_TOL))
            ),
            search=SearchConfig(
                node_budget=_coerce_scalar(
                    search_data.get("node_budget", DEFAULT_NODE_BUDGET)
                )
            ),
            reproduce=ReproduceConfig(
                max_n=_coerce_scalar(reproduce_data.get("max_n", 13)),
                jobs=_coerce_scalar(reproduce_data.get("jobs", 1)),
            ),
            corpus=CorpusConfig(
                exhaustive_order=_coerce_scalar(
                    corpus_data.get("exhaustive_order", 5)
                ),
                max_order=_coerce_scalar(corpus_data.get("max_order", 8)),
            ),
        )

    def to_dict(self) -> dict:
        """Dict in the same shape as config.yml."""
        return {
            "config": {
                "spectral": {"tol": self.spectral.tol},
                "search": {"node_budget": self.search.node_budget},
                "reproduce": {
                    "max_n": self.reproduce.max_n,
                    "jobs": self.reproduce.jobs,
                },
                "corpus": {
                    "exhaustive_order": self.corpus.exhaustive_order,
                    "max_order": self.corpus.max_order,
                },
            }
        }


class ConfigManager:
    """Loads, validates and reports prodgraph settings."""

    def __init__(self, config_path: Optional[str] = None):
        self.config_path = Path(config_path) if config_path else None
        self._config: Optional[Config] = None
        self._missing_env_vars: Set[str] = set()
        self._raw: dict = {}

    def load_config(self) -> Config:
        """Read the YAML file (if any), expand variables, apply PRODGRAPH_TOL."""
        self._missing_env_vars.clear()
        data: dict = {}

        if self.config_path is not None:
            if not self.config_path.exists():
                raise FileNotFoundError(f"Config file not found: {self.config_path}")
            try:
                with open(self.config_path, "r", encoding="utf-8") as f:
                    data = yaml.safe_load(f) or {}
            except yaml.YAMLError as e:
                raise ConfigError(f"YAML parse error: {e}") from e
            if not isinstance(data, dict):
                raise ConfigError("Invalid config structure: expected a mapping")

        self._raw = expand_env_vars(data, self._missing_env_vars)
        self._config = Config.from_dict(self._raw)

        env_tol = os.getenv(TOL_ENV_VAR)
        if env_tol is not None and env_tol.strip() != "":
            self._config.spectral.tol = parse_tolerance(env_tol, TOL_ENV_VAR)

        return self._config

    @property
    def config(self) -> Config:
        """Settings object (lazy load)."""
        if self._config is None:
            self._config = self.load_config()
        return self._config

    @property
    def missing_env_vars(self) -> Set[str]:
        """Variables referenced by the file but undefined in the environment."""
        if self._config is None:
            self.load_config()
        return self._missing_env_vars.copy()

    @property
    def source(self) -> str:
        """Human-readable origin of the settings."""
        return str(self.config_path) if self.config_path else "(defaults)"

    def validate_config(self) -> List[str]:
        """Check every setting; messages are prefixed ✗ (error), ! or i."""
        errors = []
        warnings = []

        for var in sorted(self.missing_env_vars):
            warnings.append(f"!Environment variable '{var}' is not defined")

        for key, meta in SETTINGS_KEYS.items():
            value = self._get_nested_value(self.config.to_dict(), meta["path"])
            problem = self._check_value(meta, value)
            if problem:
                errors.append(f"✗{key}: {problem}")

        if errors:
            return warnings + errors

        if self.config.reproduce.max_n % 2 == 0:
            warnings.append(
                f"!reproduce.max_n is even ({self.config.reproduce.max_n}); "
                "odd-cycle claims stop at the next lower odd value"
            )

        if os.getenv(TOL_ENV_VAR):
            warnings.append(
                f"i{TOL_ENV_VAR} overrides spectral.tol "
                f"(effective tol = {self.config.spectral.tol:g})"
            )

        if self.config.search.node_budget < 10**5:
            warnings.append(
                "!search.node_budget is small; cross-validation may report "
                "'unvalidated' for isomorphic products"
            )

        return warnings + errors

    def get_validation_errors(self) -> List[str]:
        """Errors only (no warnings or info)."""
        return [r for r in self.validate_config() if r.startswith("✗")]

    def checked_config(self) -> Config:
        """Settings for commands to use; ConfigError names every invalid value."""
        errors = self.get_validation_errors()
        if errors:
            details = "; ".join(error[1:] for error in errors)
            raise ConfigError(f"invalid configuration ({self.source}): {details}")
        return self.config

    @staticmethod
    def _check_value(meta: Dict[str, Any], value: Any) -> Optional[str]:
        if meta["type"] == "integer":
            if isinstance(value, bool) or not isinstance(value, int):
                return f"expected an integer, got {value!r}"
        elif meta["type"] == "number":
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                return f"expected a number, got {value!r}"
            if not math.isfinite(value):
                return f"expected a finite number, got {value!r}"

        if "min" in meta:
            if meta.get("exclusive_min") and value <= meta["min"]:
                return f"must be greater than {meta['min']}"
            if value < meta["min"]:
                return f"must be at least {meta['min']}"
        if "max" in meta and value > meta["max"]:
            return f"must be at most {meta['max']}"
        return None

    def _get_nested_value(self, data: dict, path: list) -> Any:
        """Walk a key path; None when any segment is missing."""
        current = data
        for key in path:
            if not isinstance(current, dict) or key not in current:
                return None
            current = current[key]
        return current

    def get_setting(self, key: str) -> dict:
        """Current value, default and description of one setting."""
        if key not in SETTINGS_KEYS:
            return {
                "success": False,
                "error": f"Unknown setting: {key}",
                "available_keys": sorted(SETTINGS_KEYS),
            }
        meta = SETTINGS_KEYS[key]
        value = self._get_nested_value(self.config.to_dict(), meta["path"])
        return {
            "success": True,
            "key": key,
            "value": value,
            "default": meta["default"],
            "is_default": value == meta["default"],
            "description": meta["description"],
        }

    def list_settings(self) -> dict:
        """All settings with their effective values."""
        settings = {key: self.get_setting(key) for key in SETTINGS_KEYS}
        return {"source": self.source, "settings": settings}


def _get_template_path() -> Path:
    """Packaged config template."""
    return Path(__file__).parent / "templates" / "config-template.yml"


def create_default_config(output_path: str = "config.yml", force: bool = False) -> str:
    """Copy the packaged template to output_path.

    Raises:
        FileExistsError: If the target exists and force is False.
    """
    target = Path(output_path).expanduser()
    if target.exists() and not force:
        raise FileExistsError(
            f"Config file already exists: {target}\nUse --force to overwrite."
        )
    target.parent.mkdir(parents=True, exist_ok=True)
    shutil.copyfile(_get_template_path(), target)
    return str(target)
