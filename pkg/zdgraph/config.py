"""
Central configuration for zdgraph.
All tunable limits live here; config.yaml mirrors the defaults.
"""

import copy
import os
from pathlib import Path
from typing import Any, Dict, Optional

import yaml

DEFAULT_CONFIG_PATH = Path(__file__).with_name("config.yaml")
CLOSURE_CAP_ENV = "ZDG_CLOSURE_CAP"

# =========================
# CLOSURE CONFIG
# =========================
CONFIG: Dict[str, Any] = {
    "closure": {
        "cap": 50000
    },

    # =========================
    # ISOMORPHISM / CANONICAL FORM
    # =========================
    "isomorphism": {
        "max_order": 32
    },
    "canonical": {
        "max_order": 8
    },

    # =========================
    # ENUMERATION CONFIG
    # =========================
    "enumeration": {
        "min_order": 2,
        "max_order": 4,
        "hard_limit": 5,
        "noncommutative_max_order": 3
    },

    # =========================
    # AMBIENT LIMITS
    # =========================
    "matrices": {
        "bool_max_dim": 17,
        "lattice_max_dim": 8
    },
    "presented": {
        "max_elements": 256
    },

    # =========================
    # HARNESS CONFIG
    # =========================
    "harness": {
        "census_order": 4,
        "noncommutative_census_order": 3
    },

    # =========================
    # LOGGING
    # =========================
    "logging": {
        "level": "INFO"
    }
}


# ===============================
# CONFIG LOADERS
# ===============================

def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load a YAML config file and merge it over the built-in defaults.

    Args:
        path: YAML file; defaults to the packaged config.yaml

    Returns:
        Merged configuration dict
    """
    path = Path(path) if path else DEFAULT_CONFIG_PATH
    with open(path, "r") as f:
        loaded = yaml.safe_load(f) or {}
    if not isinstance(loaded, dict):
        raise ValueError(f"Invalid config file {path}: top level must be a mapping")
    return _merge(CONFIG, loaded)


def apply_config(path: str) -> None:
    """Replace the active CONFIG sections with those loaded from path."""
    CONFIG.update(load_config(path))


def closure_cap() -> int:
    """Closure size cap, overridden by ZDG_CLOSURE_CAP when set."""
    raw = os.environ.get(CLOSURE_CAP_ENV)
    if raw is None or raw.strip() == "":
        return int(CONFIG["closure"]["cap"])
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"Invalid {CLOSURE_CAP_ENV}: {raw!r} is not an integer")
    if cap < 1:
        raise ValueError(f"Invalid {CLOSURE_CAP_ENV}: {cap} must be positive")
    return cap
