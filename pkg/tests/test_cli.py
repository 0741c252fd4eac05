#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `dynamic_grouping` package, command line."""

import json

import pytest

import dynamic_grouping
from dynamic_grouping.__main__ import parse_scenarios, parse_seeds, run


def test_parse_seeds():
    """Testing the forms of the seed list."""
    assert parse_seeds("0..3") == [0, 1, 2, 3]
    assert parse_seeds("1,4") == [1, 4]
    assert parse_seeds(" 7 ") == [7]
    for text in ("", "5..2", "-1", "a..b", "1,x"):
        with pytest.raises(dynamic_grouping.ConfigurationError):
            parse_seeds(text)


def test_parse_scenarios():
    """Testing the scenario list."""
    assert parse_scenarios("none, dynamic") == ["none", "dynamic"]
    for text in ("", "none,global"):
        with pytest.raises(dynamic_grouping.ConfigurationError):
            parse_scenarios(text)


def test_presets(capsys):
    """Testing the listing of scenarios and policy presets."""
    assert run(["presets"]) == 0
    out = capsys.readouterr().out
    for name in dynamic_grouping.scenarios:
        assert name in out
    assert "paper-table" in out
    assert "all-selfish" in out


def test_simulate(tmp_path, capsys):
    """Testing a short simulation with a report."""
    out = tmp_path / "out"
    code = run(
        ["simulate", "--scenario", "none", "--seed", "2", "--horizon", "2"]
        + ["--out", str(out)]
    )
    assert code == 0
    assert "Temp. Rise" in capsys.readouterr().out
    for name in ("metrics.csv", "trajectories.csv", "partitions.csv"):
        assert (out / name).exists()
    data = json.loads((out / "transcript.json").read_text())
    assert data["config"]["scenario"]["scenario"] == "none"
    assert data["config"]["scenario"]["seed"] == 2
    assert len(data["steps"]) == 2


def test_simulate_with_config(tmp_path):
    """Testing a simulation set up by a config file."""
    config = tmp_path / "run.ini"
    config.write_text("[scenario]\nscenario = bilateral\nhorizon = 2\n")
    out = tmp_path / "out"
    assert run(["simulate", "--config", str(config), "--out", str(out)]) == 0
    data = json.loads((out / "transcript.json").read_text())
    assert data["config"]["scenario"]["scenario"] == "bilateral"
    assert len(data["steps"]) == 2


def test_compare_is_reproducible(tmp_path):
    """Testing that comparing twice writes identical tables."""
    for directory in ("first", "second"):
        code = run(
            ["compare", "--scenarios", "none,dynamic", "--seeds", "0..1"]
            + ["--horizon", "2", "--out", str(tmp_path / directory)]
        )
        assert code == 0
    for name in ("metrics.csv", "comparison.csv", "trajectories.csv"):
        first = (tmp_path / "first" / name).read_bytes()
        assert first == (tmp_path / "second" / name).read_bytes()


def test_replay(tmp_path, capsys):
    """Testing the replay of a transcript, intact and altered."""
    out = tmp_path / "out"
    argv = ["simulate", "--scenario", "dynamic", "--horizon", "2", "--out", str(out)]
    assert run(argv) == 0
    path = out / "transcript.json"
    assert run(["replay", "--transcript", str(path)]) == 0
    assert "reproduces the transcript" in capsys.readouterr().out

    data = json.loads(path.read_text())
    data["metrics"]["gross_output"] *= 1.01
    altered = tmp_path / "altered.json"
    altered.write_text(json.dumps(data))
    assert run(["replay", "--transcript", str(altered)]) == 2
    assert "Invariant violated" in capsys.readouterr().err

    data = json.loads(path.read_text())
    del data["steps"][0]["actions"]
    damaged = tmp_path / "damaged.json"
    damaged.write_text(json.dumps(data))
    assert run(["replay", "--transcript", str(damaged)]) == 1
    capsys.readouterr()

    data = json.loads(path.read_text())
    data["steps"][0]["proposals"][0][2] = 11
    out_of_range = tmp_path / "out_of_range.json"
    out_of_range.write_text(json.dumps(data))
    assert run(["replay", "--transcript", str(out_of_range)]) == 1
    assert "The transcript is damaged" in capsys.readouterr().err


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["dance"],
        ["simulate", "--scenario", "global"],
        ["simulate", "--horizon", "0"],
        ["simulate", "--seed", "-3"],
        ["compare", "--seeds", "5..2"],
        ["compare", "--scenarios", "none,global"],
        ["compare", "--workers", "0", "--horizon", "1"],
        ["replay"],
    ],
)
def test_bad_arguments(argv, capsys):
    """Testing that bad arguments exit with code 1."""
    assert run(argv) == 1
    assert "Error" in capsys.readouterr().err


def test_bad_config_file(tmp_path, capsys):
    """Testing that bad or missing config files exit with code 1."""
    config = tmp_path / "run.ini"
    config.write_text("[scenario]\nspeed = 3\n")
    assert run(["simulate", "--config", str(config)]) == 1
    assert run(["simulate", "--config", str(tmp_path / "missing.ini")]) == 1
    assert run(["replay", "--transcript", str(tmp_path / "missing.json")]) == 1
    assert "Error" in capsys.readouterr().err
