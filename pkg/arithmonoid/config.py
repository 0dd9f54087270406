"""Process-wide settings: oracle window, digit order, audit grid and friends.

Every module reads settings through ``get_config`` or ``config_value``; the CLI
and ``main.py`` change them with ``set_config``.
"""

import copy
from typing import Any, Dict, Optional

import arithmonoid.default_config as default_config
from arithmonoid.numtheory import DomainError

_config: Optional[Dict[str, Any]] = None

_POSITIVE_KEYS = ("window", "margin_factor", "bicyclic_prime", "sample_size", "max_modulus")
_DIGIT_ORDERS = ("msb", "lsb")


def _validate(config: Dict[str, Any]):
    unknown = set(config) - set(default_config.DEFAULT_CONFIG)
    if unknown:
        raise DomainError(f"unknown config keys: {', '.join(sorted(unknown))}")
    for key in _POSITIVE_KEYS:
        if key in config and (not isinstance(config[key], int) or config[key] < 1):
            raise DomainError(f"config {key} must be a positive integer, got {config[key]!r}")
    if "digit_order" in config and config["digit_order"] not in _DIGIT_ORDERS:
        raise DomainError(f"config digit_order must be one of {_DIGIT_ORDERS}, got {config['digit_order']!r}")


def initialize_config():
    """Initialize the configuration with default values."""
    global _config
    if _config is None:
        _config = copy.deepcopy(default_config.DEFAULT_CONFIG)
        _validate(_config)


def set_config(config: Dict[str, Any]):
    """Update the configuration with custom values.

    The update is shallow: passing ``audit`` replaces the whole audit grid.
    Unknown keys and out-of-range values raise DomainError and leave the
    current configuration untouched.
    """
    _validate(config)
    initialize_config()
    _config.update(config)


def reset_config():
    """Drop every override and go back to the defaults."""
    global _config
    _config = None
    initialize_config()


def get_config() -> Dict[str, Any]:
    """Get a copy of the current configuration."""
    initialize_config()
    return copy.deepcopy(_config)


def config_value(key: str, override: Any = None) -> Any:
    """``override`` when given, else the configured value for ``key``."""
    if override is not None:
        return override
    initialize_config()
    return copy.deepcopy(_config[key])


initialize_config()
