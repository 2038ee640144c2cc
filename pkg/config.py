"""
Configuration file for the quaternary Hermitian LCD code toolkit
"""

import copy
import os
from pathlib import Path
from typing import Any, Dict

from dotenv import load_dotenv

# Default configuration
DEFAULT_CONFIG = {
    "codes": {
        "direct_enumeration_max_k": 12,
    },
    "search": {
        "mode": "exhaustive",
        "jobs": 1,
        "checkpoint_every": 50_000,  # nodes between checkpoint writes
        "max_row_length": 20,
        "filter_block_elements": 4_000_000,
    },
    "certified_codes": {
        "data_directory": str(Path(__file__).resolve().parent / "data" / "codes"),
    },
    "logging": {
        "level": "INFO",
        "file": None,
        "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    },
    "random": {
        "seed": 20190,
    },
}

# Environment variable -> (dotted key, type)
ENV_OVERRIDES = {
    "LCD4_LOG_LEVEL": ("logging.level", str),
    "LCD4_LOG_FILE": ("logging.file", str),
    "LCD4_JOBS": ("search.jobs", int),
    "LCD4_SEED": ("random.seed", int),
    "LCD4_DATA_DIR": ("certified_codes.data_directory", str),
    "LCD4_DIRECT_ENUM_MAX_K": ("codes.direct_enumeration_max_k", int),
    "LCD4_CHECKPOINT_EVERY": ("search.checkpoint_every", int),
}


class Config:
    """Configuration class for the toolkit"""

    def __init__(self, config_dict: Dict[str, Any] = None):
        """
        Initialize configuration

        Args:
            config_dict: Optional custom configuration dictionary
        """
        self.config = copy.deepcopy(DEFAULT_CONFIG)
        if config_dict:
            self._update_config(config_dict)

    @classmethod
    def from_env(cls, config_dict: Dict[str, Any] = None) -> "Config":
        """
        Build a configuration from defaults, a .env file and LCD4_* variables

        Args:
            config_dict: Optional custom values applied before the environment

        Returns:
            Config instance
        """
        load_dotenv()
        instance = cls(config_dict)
        for variable, (key, kind) in ENV_OVERRIDES.items():
            raw = os.getenv(variable)
            if raw is None or raw == "":
                continue
            try:
                value = kind(raw)
            except ValueError:
                raise ValueError(f"Environment variable {variable} must be {kind.__name__}, got {raw!r}")
            instance.set(key, value)
        return instance

    def _update_config(self, config_dict: Dict[str, Any]):
        """Update configuration with custom values"""
        for key, value in config_dict.items():
            if key in self.config and isinstance(self.config[key], dict):
                self.config[key].update(value)
            else:
                self.config[key] = value

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value"""
        keys = key.split('.')
        value = self.config

        for k in keys:
            if isinstance(value, dict) and k in value:
                value = value[k]
            else:
                return default

        return value

    def set(self, key: str, value: Any) -> None:
        """Set a configuration value by dotted key"""
        *sections, last = key.split('.')
        target = self.config
        for section in sections:
            target = target.setdefault(section, {})
        target[last] = value

    def get_codes_config(self) -> Dict[str, Any]:
        """Get code operations configuration"""
        return self.config["codes"]

    def get_search_config(self) -> Dict[str, Any]:
        """Get search configuration"""
        return self.config["search"]

    def get_certified_codes_config(self) -> Dict[str, Any]:
        """Get certified codes configuration"""
        return self.config["certified_codes"]

    def get_logging_config(self) -> Dict[str, Any]:
        """Get logging configuration"""
        return self.config["logging"]

    def get_random_config(self) -> Dict[str, Any]:
        """Get randomness configuration"""
        return self.config["random"]


# Global configuration instance
config = Config.from_env()
