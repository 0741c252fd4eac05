#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `dynamic_grouping` package, calibration module."""

import pytest

import dynamic_grouping
from dynamic_grouping import (
    archetype_of,
    archetypes,
    load_calibration,
    resolve_calibration,
    save_calibration,
    synthetic_calibration,
)

header = "id,A0,gA,L0,gL,K0,sigma0,gSigma,theta1,gamma,delta\n"


def _write(path, rows, columns=header):
    path.write_text(columns + "".join(rows))
    return path


def _rows(n=27):
    return [f"{i},0.35,0.01,8.0,0.005,3.0,0.05,0.01,0.08,0.3,0.1\n" for i in range(n)]


def test_archetypes():
    """Testing the archetype of the members of the seed groups."""
    assert archetype_of(26) == "high-capital"
    assert archetype_of(1) == "high-population"
    assert archetype_of(2) == "small"
    assert archetype_of(0) == "small"
    with pytest.raises(ValueError):
        archetype_of(27)


def test_synthetic_calibration(regions):
    """Testing the synthetic regions against their archetypes."""
    assert len(regions) == 27
    assert [p.id for p in regions] == list(range(27))
    for p in regions:
        mean = archetypes[archetype_of(p.id)]
        for key in ("A0", "L0", "K0", "sigma0", "theta1"):
            assert 0.9 * mean[key] <= getattr(p, key) <= 1.1 * mean[key]
        for key in ("gA", "gL", "gSigma"):
            assert getattr(p, key) == mean[key]
        assert p.gamma == 0.3
        assert p.delta == 0.1


def test_synthetic_calibration_is_reproducible(regions):
    """Testing that the seed fixes the calibration."""
    assert tuple(synthetic_calibration(0)) == regions
    assert synthetic_calibration(1) != list(regions)


def test_calibration_file(tmp_path, regions):
    """Testing writing and reading a calibration."""
    path = tmp_path / "regions.csv"
    save_calibration(regions, path)
    again = load_calibration(path)
    assert [p.id for p in again] == list(range(27))
    for p, q in zip(regions, again):
        for key in dynamic_grouping.RegionParams.field_names():
            assert getattr(q, key) == pytest.approx(getattr(p, key), rel=1.0e-9)


def test_calibration_file_in_any_order(tmp_path):
    """Testing that rows may come in any order, with comments."""
    rows = list(reversed(_rows()))
    path = _write(tmp_path / "regions.csv", ["# reversed\n"] + rows)
    regions = load_calibration(path)
    assert [p.id for p in regions] == list(range(27))
    assert regions[0].K0 == 3.0


@pytest.mark.parametrize(
    "rows, columns",
    [
        (_rows(26), header),
        (_rows(26) + ["0,0.35,0.01,8.0,0.005,3.0,0.05,0.01,0.08,0.3,0.1\n"], header),
        (_rows(26) + ["26,0.35,0.01,8.0,0.005,-3.0,0.05,0.01,0.08,0.3,0.1\n"], header),
        (_rows(26) + ["26,0.35,0.01,8.0,0.005,,0.05,0.01,0.08,0.3,0.1\n"], header),
        (_rows(26) + ["26,abc,0.01,8.0,0.005,3.0,0.05,0.01,0.08,0.3,0.1\n"], header),
        (_rows(), header.replace("theta1", "theta")),
        (_rows(), header.replace(",delta", ",delta,extra")),
    ],
)
def test_bad_calibration_file(tmp_path, rows, columns):
    """Testing that bad calibration files are configuration errors."""
    path = _write(tmp_path / "regions.csv", rows, columns)
    with pytest.raises(dynamic_grouping.ConfigurationError):
        load_calibration(path)


def test_missing_calibration_file(tmp_path):
    """Testing that a missing file is a configuration error."""
    with pytest.raises(dynamic_grouping.ConfigurationError):
        load_calibration(tmp_path / "missing.csv")


def test_resolve_calibration(tmp_path, regions):
    """Testing synthetic seeds and paths as calibrations."""
    assert tuple(resolve_calibration("synthetic:0")) == regions
    assert resolve_calibration("synthetic:4") == synthetic_calibration(4)
    path = tmp_path / "regions.csv"
    save_calibration(regions, path)
    assert len(resolve_calibration(str(path))) == 27
    for value in ("synthetic:", "synthetic:-1", "synthetic:one"):
        with pytest.raises(dynamic_grouping.ConfigurationError):
            resolve_calibration(value)
