# -*- coding: utf-8 -*-

"""Scenario configuration: the ScenarioConfig value and its INI file format.

A config file has the sections and keys of ScenarioParameters and nothing
else::

    [scenario]
    scenario = dynamic
    horizon = 20
    seed = 0

    [grouping]
    inconsistency_threshold = 18

Keys that are left out take their defaults. The defaults are shipped as
``data/scenario.ini``.
"""

import configparser
from dataclasses import dataclass, field, replace
import importlib.resources
import logging
from pathlib import Path

from .engine import ClimateParams
from .errors import ConfigurationError
from .grouping import SimilarityConfig
from .metrics import IndexAnchors
from .scenario_parameters import ScenarioParameters, scenarios

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScenarioConfig:
    """Everything needed to run one episode, apart from the seed's effects."""

    scenario: str = "dynamic"
    horizon: int = 20
    dt: float = 5.0
    calibration: str = "synthetic:0"
    policy_map: str = "paper-table"
    formation: str = "seed-table"
    output_measure: str = "net"
    seed: int = 0
    similarity: SimilarityConfig = field(default_factory=SimilarityConfig)
    inconsistency_threshold: int = 18
    anchors: IndexAnchors = field(default_factory=IndexAnchors)
    climate: ClimateParams = field(default_factory=ClimateParams)

    def __post_init__(self):
        if self.scenario not in scenarios:
            raise ValueError(
                f"Unknown scenario '{self.scenario}'. Choose from "
                f"{', '.join(scenarios)}"
            )
        table = ScenarioParameters.parameters["scenario"]
        for key in ("formation", "output_measure"):
            if getattr(self, key) not in table[key]["enumeration"]:
                raise ValueError(
                    f"'{key}' must be one of {', '.join(table[key]['enumeration'])}"
                )
        if int(self.seed) != self.seed or self.seed < 0:
            raise ValueError(
                f"The seed must be a non-negative integer, not {self.seed}"
            )
        if int(self.inconsistency_threshold) != self.inconsistency_threshold:
            raise ValueError("The inconsistency threshold must be an integer")
        if self.inconsistency_threshold <= 0:
            raise ValueError("The inconsistency threshold must be positive")
        # The climate always carries the scenario's horizon and step length,
        # which also validates them.
        object.__setattr__(
            self,
            "climate",
            replace(self.climate, dt=self.dt, horizon=self.horizon),
        )

    @property
    def mode(self):
        return scenarios[self.scenario][0]

    @property
    def variant(self):
        return scenarios[self.scenario][1]

    @property
    def use_gross(self):
        return self.output_measure == "gross"

    def with_overrides(self, **kwargs):
        """A copy with the given top-level fields changed; None is ignored."""
        changes = {k: v for k, v in kwargs.items() if v is not None}
        try:
            return replace(self, **changes)
        except ValueError as e:
            raise ConfigurationError(str(e))

    def to_dict(self):
        """The configuration as {section: {key: value}}, as in the file."""
        result = {}
        for section, table in ScenarioParameters.parameters.items():
            result[section] = {key: self._get(section, key) for key in table}
        return result

    def _get(self, section, key):
        if section == "grouping":
            if key == "inconsistency_threshold":
                return self.inconsistency_threshold
            name = "threshold" if key == "similarity_threshold" else key
            return getattr(self.similarity, name)
        if section == "anchors":
            return getattr(self.anchors, key)
        if section == "climate":
            return getattr(self.climate, key)
        return getattr(self, key)

    @classmethod
    def from_dict(cls, data):
        """Create from {section: {key: value}}, filling in the defaults.

        Unknown sections or keys raise ConfigurationError.
        """
        values = ScenarioParameters.defaults()
        for section, items in data.items():
            if section not in values:
                raise ConfigurationError(f"Unknown section [{section}]")
            unknown = sorted(set(items) - set(values[section]))
            if unknown:
                raise ConfigurationError(f"[{section}]: unknown keys {unknown}")
            values[section].update(items)

        s = values["scenario"]
        g = values["grouping"]
        try:
            return cls(
                scenario=s["scenario"],
                horizon=s["horizon"],
                dt=s["dt"],
                calibration=str(s["calibration"]),
                policy_map=str(s["policy_map"]),
                formation=s["formation"],
                output_measure=s["output_measure"],
                seed=s["seed"],
                similarity=SimilarityConfig(
                    pop_scale=g["pop_scale"],
                    cap_scale=g["cap_scale"],
                    threshold=g["similarity_threshold"],
                ),
                inconsistency_threshold=g["inconsistency_threshold"],
                anchors=IndexAnchors(**values["anchors"]),
                climate=ClimateParams(
                    dt=s["dt"], horizon=s["horizon"], **values["climate"]
                ),
            )
        except (TypeError, ValueError) as e:
            raise ConfigurationError(str(e))


def _convert(section, key, text, where):
    parameter = ScenarioParameters.parameters[section][key]
    kind = parameter["kind"]
    text = text.strip()
    try:
        if kind == "integer":
            return int(text)
        if kind == "float":
            return float(text)
        if kind == "boolean":
            return configparser.ConfigParser.BOOLEAN_STATES[text.lower()]
    except (KeyError, ValueError):
        raise ConfigurationError(f"{where}: '{key}' cannot be '{text}'")
    if kind == "enumeration" and text not in parameter["enumeration"]:
        raise ConfigurationError(
            f"{where}: '{key}' must be one of {', '.join(parameter['enumeration'])}, "
            f"not '{text}'"
        )
    return text


def parse_config(text, where="<string>", directory=None):
    """Parse the text of a config file into a ScenarioConfig.

    Parameters
    ----------
    text : str
        The INI text.
    where : str
        Where the text came from, for error messages.
    directory : pathlib.Path, optional
        Relative calibration and policy file names are taken relative to
        this directory if the files exist there.
    """
    parser = configparser.ConfigParser(default_section="__none__")
    parser.optionxform = str
    try:
        parser.read_string(text, source=where)
    except configparser.Error as e:
        raise ConfigurationError(f"Cannot parse {where}: {e}")

    tables = ScenarioParameters.parameters
    data = {}
    for section in parser.sections():
        if section not in tables:
            raise ConfigurationError(f"{where}: unknown section [{section}]")
        data[section] = {}
        for key, value in parser.items(section):
            if key not in tables[section]:
                raise ConfigurationError(f"{where} [{section}]: unknown key '{key}'")
            data[section][key] = _convert(section, key, value, f"{where} [{section}]")

    if directory is not None:
        for key in ("calibration", "policy_map"):
            value = data.get("scenario", {}).get(key)
            if value is None or Path(value).is_absolute():
                continue
            candidate = Path(directory) / value
            if candidate.exists():
                data["scenario"][key] = str(candidate)

    return ScenarioConfig.from_dict(data)


def default_config_text():
    """The text of the shipped default config file."""
    resources = importlib.resources.files("dynamic_grouping") / "data"
    return (resources / "scenario.ini").read_text()


def load_config(path=None):
    """Read a config file, or the shipped defaults if no path is given."""
    if path is None:
        return parse_config(default_config_text(), where="scenario.ini (default)")
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ConfigurationError(f"Cannot read the config file {path}: {e}")
    config = parse_config(text, where=str(path), directory=path.parent)
    logger.info(f"Read the configuration from {path}")
    return config


def save_config(config, path):
    """Write a config file holding every key of the configuration."""
    parser = configparser.ConfigParser(default_section="__none__")
    parser.optionxform = str
    for section, items in config.to_dict().items():
        parser[section] = {key: str(value) for key, value in items.items()}
    with Path(path).open("w") as fd:
        parser.write(fd)
