import logging

import pytest

from zdgraph.config import CONFIG, apply_config, closure_cap, load_config
from zdgraph.log_utils import setup_logger


def test_packaged_yaml_mirrors_defaults():
    assert load_config() == CONFIG


def test_override_merges_sections(tmp_path):
    path = tmp_path / "limits.yaml"
    path.write_text("closure:\n  cap: 10\nenumeration:\n  max_order: 3\n")

    merged = load_config(str(path))

    assert merged["closure"]["cap"] == 10
    assert merged["enumeration"]["max_order"] == 3
    assert merged["enumeration"]["hard_limit"] == CONFIG["enumeration"]["hard_limit"]


def test_non_mapping_config_rejected(tmp_path):
    path = tmp_path / "bad.yaml"
    path.write_text("- 1\n- 2\n")
    with pytest.raises(ValueError, match="mapping"):
        load_config(str(path))


def test_apply_config_updates_active_limits(tmp_path):
    path = tmp_path / "limits.yaml"
    path.write_text("closure:\n  cap: 123\n")
    apply_config(str(path))
    assert closure_cap() == 123


def test_closure_cap_env_override(monkeypatch):
    monkeypatch.setenv("ZDG_CLOSURE_CAP", "77")
    assert closure_cap() == 77


@pytest.mark.parametrize("raw", ["lots", "0", "-5"])
def test_closure_cap_env_invalid(monkeypatch, raw):
    monkeypatch.setenv("ZDG_CLOSURE_CAP", raw)
    with pytest.raises(ValueError, match="ZDG_CLOSURE_CAP"):
        closure_cap()


def test_setup_logger_adds_one_handler():
    logger = setup_logger("zdgraph", "DEBUG")
    setup_logger("zdgraph", "DEBUG")
    assert logger.level == logging.DEBUG
    assert len(logger.handlers) == 1


def test_missing_config_file(tmp_path):
    with pytest.raises(FileNotFoundError):
        load_config(str(tmp_path / "absent.yaml"))
