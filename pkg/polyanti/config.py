"""
Configuration management for search limits.
"""

import json
import os
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Any, Dict

from .utils import ValidationError

# Try to import yaml for YAML support
try:
    import yaml
    YAML_AVAILABLE = True
except ImportError:
    YAML_AVAILABLE = False


@dataclass(frozen=True)
class SearchLimits:
    """
    Every cap the searches honour. A search that reaches one of these
    reports an interval or an indeterminate verdict instead of an answer.
    """

    chain_cap: int = 10_000
    subset_cap: int = 2_000_000
    maximal_cuboid_cap: int = 64
    cuboid_cap: int = 4096
    max_sequence_length: int = 8
    node_cap: int = 200_000
    workers: int = 1
    seed: int = 0

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValidationError(f"'{f.name}' must be an integer")
            if f.name == "seed":
                if value < 0:
                    raise ValidationError("'seed' must be a non-negative integer")
            elif value <= 0:
                raise ValidationError(f"'{f.name}' must be a positive integer")

    @classmethod
    def field_names(cls):
        return [f.name for f in fields(cls)]

    @classmethod
    def from_args(cls, args) -> "SearchLimits":
        """Build limits from parsed arguments; missing or None values keep their defaults."""
        values = {}
        for name in cls.field_names():
            value = getattr(args, name, None)
            if value is not None:
                values[name] = value
        return cls(**values)

    def staircase_kwargs(self) -> Dict[str, int]:
        return {
            "maximal_cuboid_cap": self.maximal_cuboid_cap,
            "cuboid_cap": self.cuboid_cap,
            "max_length": self.max_sequence_length,
            "node_cap": self.node_cap,
        }

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


class ConfigManager:
    """Manages loading and saving of configuration files."""

    @staticmethod
    def load_config(config_file):
        """Load limits from a JSON or YAML configuration file."""
        if not os.path.exists(config_file):
            raise FileNotFoundError(f"Config file not found: {config_file}")

        if config_file.lower().endswith(('.yml', '.yaml')):
            if not YAML_AVAILABLE:
                raise ImportError("PyYAML not installed. Install with: pip install PyYAML")
            return ConfigManager._load_yaml(config_file)
        else:
            return ConfigManager._load_json(config_file)

    @staticmethod
    def _load_yaml(config_file):
        with open(config_file, 'r') as f:
            return yaml.safe_load(f) or {}

    @staticmethod
    def _load_json(config_file):
        with open(config_file, 'r') as f:
            return json.load(f)

    @staticmethod
    def save_config(limits: SearchLimits, config_file):
        """Save limits to a JSON or YAML configuration file."""
        config = limits.to_dict()
        Path(config_file).parent.mkdir(parents=True, exist_ok=True)

        if config_file.lower().endswith(('.yml', '.yaml')):
            if not YAML_AVAILABLE:
                raise ImportError("PyYAML not installed. Install with: pip install PyYAML")
            ConfigManager._save_yaml(config, config_file)
        else:
            ConfigManager._save_json(config, config_file)

    @staticmethod
    def _save_yaml(config_dict: Dict[str, Any], config_file: str):
        with open(config_file, 'w') as f:
            yaml.dump(config_dict, f, default_flow_style=False, indent=2)

    @staticmethod
    def _save_json(config_dict: Dict[str, Any], config_file: str):
        with open(config_file, 'w') as f:
            json.dump(config_dict, f, indent=2)

    @staticmethod
    def apply_config_to_args(args, config):
        """Apply configuration values to arguments, preserving command line overrides."""
        for key, value in config.items():
            if key in SearchLimits.field_names() and getattr(args, key, None) is None:
                setattr(args, key, value)

    @staticmethod
    def validate_config(config: Dict[str, Any]) -> Dict[str, Any]:
        """
        Validate configuration and return validation results.

        Returns:
            Dictionary with 'valid', 'errors', and 'warnings' keys
        """
        result = {
            'valid': True,
            'errors': [],
            'warnings': []
        }

        if not isinstance(config, dict):
            result['errors'].append("Configuration must be a mapping of limit names to values")
            result['valid'] = False
            return result

        known = SearchLimits.field_names()
        for key, value in config.items():
            if key not in known:
                result['warnings'].append(f"Unknown field ignored: {key}")
                continue
            if not isinstance(value, int) or isinstance(value, bool):
                result['errors'].append(f"'{key}' must be an integer")
                result['valid'] = False
            elif key == 'seed' and value < 0:
                result['errors'].append("'seed' must be a non-negative integer")
                result['valid'] = False
            elif key != 'seed' and value <= 0:
                result['errors'].append(f"'{key}' must be a positive integer")
                result['valid'] = False

        if result['valid'] and config.get('workers', 1) > (os.cpu_count() or 1):
            result['warnings'].append("'workers' exceeds the number of available CPUs")

        return result
