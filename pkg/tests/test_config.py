#!/usr/bin/env python3
"""
Run configuration parsing, validation and flag overrides
"""

import json
import logging
import os

import pytest

from cli.app import parse_config
from core.errors import ConfigError
from models.run import Command, ModelKind, Spacing
from repositories.config_repository import ConfigRepository


def driven_document(**grid):
    return {
        "command": "sweep",
        "model": "driven",
        "params": {"mu": 1.0, "gamma1": 1.0, "gamma2": 1.0},
        "grid": {"r_min": 0.5, "r_max": 2.0, "n_points": 4, **grid},
    }


def test_shipped_configs_parse(config_dir):
    repo = ConfigRepository()
    for name in sorted(os.listdir(config_dir)):
        config = repo.load(os.path.join(config_dir, name))
        assert config.command in Command


def test_defaults_fill_missing_parameters():
    config = parse_config(json.dumps(driven_document()))
    assert config.model == ModelKind.DRIVEN
    assert config.params["beta_pop"] == 1.0
    assert config.params["delta2"] == 0.0
    assert config.grid.spacing == Spacing.LINEAR


def test_unknown_parameter_is_named():
    document = driven_document()
    document["params"]["gamma3"] = 2.0
    with pytest.raises(ConfigError) as excinfo:
        parse_config(json.dumps(document))
    assert "gamma3" in str(excinfo.value)


def test_unknown_top_level_key():
    document = driven_document()
    document["seeds"] = 1
    with pytest.raises(ConfigError, match="seeds"):
        parse_config(json.dumps(document))


def test_flag_overrides_file_value():
    config = parse_config(json.dumps(driven_document()), ["--r-max=5"])
    assert config.grid.r_max == 5.0
    assert config.grid.r_min == 0.5


def test_override_creates_missing_block():
    document = {"command": "audit"}
    config = parse_config(json.dumps(document), ["--seed", "17", "--n-samples", "5000"])
    assert config.mc.seed == 17
    assert config.mc.n_samples == 5000


def test_malformed_json():
    with pytest.raises(ConfigError, match="malformed JSON"):
        parse_config('{"command": "sweep",')


@pytest.mark.parametrize("grid,key", [
    ({"r_min": 0.0}, "grid.r_min"),
    ({"r_min": -1.0}, "grid.r_min"),
    ({"n_points": 1}, "grid.n_points"),
    ({"r_max": 0.25}, "grid.r_max"),
    ({"spacing": "cubic"}, "grid.spacing"),
])
def test_grid_constraints(grid, key):
    with pytest.raises(ConfigError) as excinfo:
        parse_config(json.dumps(driven_document(**grid)))
    assert excinfo.value.key_path == key


def test_nonpositive_time_step():
    document = {"command": "dynamics", "model": "bloch2", "time": {"duration": 1.0, "dt": 0.0}}
    with pytest.raises(ConfigError) as excinfo:
        parse_config(json.dumps(document))
    assert excinfo.value.key_path == "time.dt"


def test_wrong_model_for_command():
    with pytest.raises(ConfigError, match="model"):
        parse_config(json.dumps({"command": "dynamics", "model": "driven"}))


def test_type_errors_name_the_key():
    document = driven_document()
    document["params"]["mu"] = "one"
    with pytest.raises(ConfigError) as excinfo:
        parse_config(json.dumps(document))
    assert excinfo.value.key_path == "params.mu"


def test_spinor_accepts_complex_pairs():
    document = {"command": "dynamics", "model": "bloch2", "params": {"initial": [[0.6, 0.0], [0.0, 0.8]]}}
    config = parse_config(json.dumps(document))
    assert config.params["initial"] == [[0.6, 0.0], [0.0, 0.8]]


def test_requested_command_must_match():
    with pytest.raises(ConfigError, match="requested"):
        ConfigRepository().parse(json.dumps(driven_document()), command="audit")
    config = ConfigRepository().parse(json.dumps({"model": "bloch2"}), command="dynamics")
    assert config.command == Command.DYNAMICS


def test_audit_requires_enough_samples():
    with pytest.raises(ConfigError) as excinfo:
        parse_config(json.dumps({"command": "audit", "mc": {"n_samples": 10}}))
    assert excinfo.value.key_path == "mc.n_samples"


def test_setup_script_writes_a_loadable_config(tmp_path, monkeypatch, config_dir):
    import importlib.util

    loader_spec = importlib.util.spec_from_file_location("setup_script", os.path.join(config_dir, os.pardir, "scripts", "setup.py"))
    setup_script = importlib.util.module_from_spec(loader_spec)
    loader_spec.loader.exec_module(setup_script)

    target = tmp_path / "starter.json"
    answers = iter(["sweep", "pair_averaged", "0.5", "4.0", "8", "", str(target)])
    monkeypatch.setattr("builtins.input", lambda prompt: next(answers))
    assert setup_script.create_config_file()

    config = ConfigRepository().load(str(target))
    assert config.model == ModelKind.PAIR_AVERAGED
    assert config.grid.r_max == 4.0
    assert config.grid.n_points == 8
    assert config.output == "out/sweep.csv"


@pytest.mark.parametrize("document,key", [
    ({"command": "sweep", "model": "driven", "params": {"gamma1": 0.0}}, "params.gamma1"),
    ({"command": "sweep", "model": "driven", "params": {"gamma2": -1.0}}, "params.gamma2"),
    ({"command": "dynamics", "model": "bloch2", "params": {"gamma": 0.0}}, "params.gamma"),
    ({"command": "dynamics", "model": "bloch2", "params": {"E0": -1.0}}, "params.E0"),
    ({"command": "dynamics", "model": "dirac4", "params": {"c": 0.0}}, "params.c"),
    ({"command": "dynamics", "model": "dirac4", "params": {"hbar": -2.0}}, "params.hbar"),
])
def test_physical_parameters_are_range_checked(document, key):
    with pytest.raises(ConfigError) as excinfo:
        parse_config(json.dumps(document))
    assert excinfo.value.key_path == key


def test_initial_state_length_must_match_model():
    document = {"command": "dynamics", "model": "bloch2", "params": {"initial": [1.0, 0.0, 0.0]}}
    with pytest.raises(ConfigError, match="needs 2 amplitudes, got 3") as excinfo:
        parse_config(json.dumps(document))
    assert excinfo.value.key_path == "params.initial"


def test_initial_state_must_not_vanish():
    document = {"command": "dynamics", "model": "dirac4", "params": {"initial": [0.0, [0.0, 0.0], 0.0, 0.0]}}
    with pytest.raises(ConfigError, match="zero norm") as excinfo:
        parse_config(json.dumps(document))
    assert excinfo.value.key_path == "params.initial"


def test_loading_logs_the_artifact_kind(config_dir, caplog):
    caplog.set_level(logging.DEBUG, logger="repositories.base_repository")
    ConfigRepository().load(os.path.join(config_dir, "regime_optical.json"))
    assert "Loading configs artifact" in caplog.text
