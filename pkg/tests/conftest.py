#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Fixtures for testing the 'dynamic_grouping' package."""

import pytest

import dynamic_grouping


@pytest.fixture(scope="session")
def regions():
    """The synthetic calibration with seed 0."""
    return tuple(dynamic_grouping.synthetic_calibration(0))


@pytest.fixture
def climate():
    """The default climate parameters."""
    return dynamic_grouping.ClimateParams()


@pytest.fixture
def cooperative_map():
    """Every region cooperative with the default target."""
    return {
        r: dynamic_grouping.PolicyConfig(kind="cooperative")
        for r in range(dynamic_grouping.n_regions)
    }


@pytest.fixture
def unit_region():
    """One region with unit productivity, capital, labor and intensity."""
    return dynamic_grouping.RegionParams(
        id=0,
        A0=1.0,
        gA=0.0,
        L0=1.0,
        gL=0.0,
        K0=1.0,
        sigma0=1.0,
        gSigma=0.0,
        theta1=0.05,
    )


@pytest.fixture
def make_world():
    """A function making a world at step 0 with the regions in their initial
    state."""

    def _make_world(params, temperature=0.0, carbon_stock=0.0):
        return dynamic_grouping.World(
            regions=tuple(
                dynamic_grouping.RegionState(
                    capital=p.K0,
                    productivity=p.A0,
                    population=p.L0,
                    intensity=p.sigma0,
                )
                for p in params
            ),
            climate=dynamic_grouping.ClimateState(
                carbon_stock=carbon_stock, temperature=temperature
            ),
        )

    return _make_world
