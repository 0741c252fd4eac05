# -*- coding: utf-8 -*-

"""Region calibrations: reading, writing and generating synthetic ones.

A calibration file is a CSV file with one row per region and exactly the
RegionParams fields as columns::

    id,A0,gA,L0,gL,K0,sigma0,gSigma,theta1,gamma,delta
    0,0.35,0.01,8.0,0.005,3.0,0.05,0.01,0.08,0.3,0.1
    ...
"""

import logging
from pathlib import Path

import numpy as np
import pandas

from .engine import RegionParams, n_regions
from .errors import ConfigurationError
from .grouping import seed_groups

logger = logging.getLogger(__name__)

# Mean parameters of the three archetypes. The synthetic generator jitters the
# levels (not the growth rates) by up to 10% either way.
archetypes = {
    "high-capital": {
        "A0": 0.45,
        "gA": 0.008,
        "L0": 30.0,
        "gL": 0.002,
        "K0": 40.0,
        "sigma0": 0.04,
        "gSigma": 0.01,
        "theta1": 0.04,
    },
    "high-population": {
        "A0": 0.16,
        "gA": 0.012,
        "L0": 100.0,
        "gL": 0.008,
        "K0": 15.0,
        "sigma0": 0.07,
        "gSigma": 0.01,
        "theta1": 0.05,
    },
    "small": {
        "A0": 0.35,
        "gA": 0.01,
        "L0": 8.0,
        "gL": 0.005,
        "K0": 3.0,
        "sigma0": 0.05,
        "gSigma": 0.01,
        "theta1": 0.08,
    },
}
jittered = ("A0", "L0", "K0", "sigma0", "theta1")


def archetype_of(region):
    """The archetype of a region in the synthetic calibration.

    The first member of each seed group is high-capital, the second
    high-population and the third small.
    """
    for group in seed_groups:
        if region in group:
            return tuple(archetypes)[group.index(region)]
    raise ValueError(f"Region {region} is not a valid region id")


def synthetic_calibration(seed=0):
    """Draw a reproducible calibration of the 27 regions.

    Parameters
    ----------
    seed : int
        The seed for numpy's default generator.

    Returns
    -------
    [RegionParams]
        The regions in id order.
    """
    rng = np.random.default_rng(seed)
    factors = rng.uniform(0.9, 1.1, size=(n_regions, len(jittered)))
    result = []
    for region in range(n_regions):
        values = dict(archetypes[archetype_of(region)])
        for column, key in enumerate(jittered):
            values[key] = float(values[key] * factors[region, column])
        result.append(RegionParams(id=region, **values))
    logger.debug(f"Generated the synthetic calibration with seed {seed}")
    return result


def load_calibration(path):
    """Read and validate a calibration file."""
    path = Path(path)
    try:
        data = pandas.read_csv(path, comment="#", skipinitialspace=True)
    except (OSError, pandas.errors.ParserError, pandas.errors.EmptyDataError) as e:
        raise ConfigurationError(f"Cannot read the calibration file {path}: {e}")

    expected = RegionParams.field_names()
    columns = [str(c).strip() for c in data.columns]
    if sorted(columns) != sorted(expected):
        missing = sorted(set(expected) - set(columns))
        extra = sorted(set(columns) - set(expected))
        raise ConfigurationError(
            f"Calibration file {path}: the columns must be exactly {expected}. "
            f"Missing {missing}, unexpected {extra}."
        )
    data.columns = columns

    if len(data) != n_regions:
        raise ConfigurationError(
            f"Calibration file {path} has {len(data)} regions, not {n_regions}."
        )
    try:
        ids = sorted(int(i) for i in data["id"])
    except ValueError:
        ids = None
    if ids != list(range(n_regions)):
        raise ConfigurationError(
            f"Calibration file {path}: region ids must be 0..{n_regions - 1} "
            "each exactly once."
        )

    if data.isna().to_numpy().any():
        raise ConfigurationError(f"Calibration file {path} has empty values.")

    result = []
    for row in data.sort_values("id").itertuples(index=False):
        try:
            values = {k: float(v) for k, v in row._asdict().items()}
            values["id"] = int(values["id"])
            result.append(RegionParams(**values))
        except (TypeError, ValueError) as e:
            raise ConfigurationError(f"Calibration file {path}: {e}")
    logger.info(f"Read the calibration for {len(result)} regions from {path}")
    return result


def resolve_calibration(value):
    """The regions for a config value: 'synthetic:<seed>' or a file path."""
    value = str(value)
    if value.startswith("synthetic:"):
        text = value.split(":", 1)[1]
        if not text.isdigit():
            raise ConfigurationError(
                f"The synthetic calibration seed must be an integer, not '{text}'"
            )
        return synthetic_calibration(int(text))
    return load_calibration(value)


def save_calibration(params, path):
    """Write the regions' parameters as a calibration file."""
    columns = RegionParams.field_names()
    table = pandas.DataFrame(
        [[getattr(p, c) for c in columns] for p in params], columns=columns
    )
    table.to_csv(path, index=False, float_format="%.10g")
