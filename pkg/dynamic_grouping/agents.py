# -*- coding: utf-8 -*-

"""Rule-based policies for the regions.

A policy proposes mitigation shares and levels, accepts or rejects the
proposals it receives, and picks the region's mitigation and savings rates,
never below what the region is committed to.

Random policies draw from numpy generators. Each region gets its own
`SeedSequence` with entropy (policy seed, episode seed) and spawn key
(region,), spawned again into three streams for proposing, deciding and
acting, so a region's actions do not depend on how often it negotiated.
"""

import configparser
from dataclasses import dataclass
import logging
import math
from pathlib import Path

import numpy as np

from .engine import n_regions
from .errors import ConfigurationError
from .grouping import seed_groups
from .policy_parameters import PolicyParameters

logger = logging.getLogger(__name__)

policy_kinds = PolicyParameters.parameters["kind"]["enumeration"]
max_acceptable_savings = 8


@dataclass(frozen=True)
class Observation:
    """What a region sees when it has to propose, decide or act."""

    region: int
    state: object
    climate: object
    commitment: object
    group_members: tuple = ()
    member_actions: tuple = ()
    targets: tuple = ()
    proposal: object = None


@dataclass(frozen=True)
class PolicyConfig:
    kind: str = "cooperative"
    target_level: int = 7
    capacity_slope: float = 0.3
    savings_level: int = 5
    seed: int = 0

    def __post_init__(self):
        if self.kind not in policy_kinds:
            raise ValueError(
                f"Unknown policy '{self.kind}'. Choose from {', '.join(policy_kinds)}"
            )
        for name in ("target_level", "savings_level"):
            value = getattr(self, name)
            if int(value) != value or not 0 <= value <= 10:
                raise ValueError(f"The policy's {name} must be an integer 0..10")
        if self.capacity_slope < 0:
            raise ValueError("The capacity slope cannot be negative")
        if self.seed < 0:
            raise ValueError("The policy seed cannot be negative")


def _clamp(preferred, commitment):
    mu, s = preferred
    return (max(mu, commitment.min_mitigation), max(s, commitment.min_savings))


class Policy(object):
    """The base class: subclasses give the preferred behaviour."""

    preferred_action = (0.0, 0.2)

    def __init__(self, config, region_params, episode_seed=0):
        self.config = config
        self.region_params = region_params
        sequence = np.random.SeedSequence(
            entropy=(int(config.seed), int(episode_seed)),
            spawn_key=(int(region_params.id),),
        )
        propose, decide, act = sequence.spawn(3)
        self.propose_rng = np.random.default_rng(propose)
        self.decide_rng = np.random.default_rng(decide)
        self.act_rng = np.random.default_rng(act)

    def __repr__(self):
        return f"{type(self).__name__}(region={self.region_params.id})"

    def propose(self, obs):
        """The region's mitigation share and its (mitigation, savings) request
        to each target."""
        raise NotImplementedError()

    def decide(self, obs):
        """Accept or reject obs.proposal as a whole."""
        raise NotImplementedError()

    def preferred(self, obs):
        return self.preferred_action

    def act(self, obs):
        """The (mu, s) to play, respecting the commitment."""
        return _clamp(self.preferred(obs), obs.commitment)


class SelfishPolicy(Policy):
    def propose(self, obs):
        return 0, {t: (0, 0) for t in obs.targets}

    def decide(self, obs):
        return False


class CooperativePolicy(Policy):
    def propose(self, obs):
        level = self.config.target_level
        return level, {t: (level, self.config.savings_level) for t in obs.targets}

    def decide(self, obs):
        return True

    def preferred(self, obs):
        return (self.config.target_level / 10, 0.25)


class AdaptiveThresholdPolicy(Policy):
    """Asks for, and accepts up to, the mitigation it can afford."""

    @property
    def max_level(self):
        theta1 = self.region_params.theta1
        if theta1 == 0:
            return 10
        return min(10, int(math.floor(self.config.capacity_slope / theta1 + 0.5)))

    def propose(self, obs):
        level = self.max_level
        return level, {t: (level, self.config.savings_level) for t in obs.targets}

    def decide(self, obs):
        proposal = obs.proposal
        return (
            proposal.mitigation_level <= self.max_level
            and proposal.savings_level <= max_acceptable_savings
        )


class RandomPolicy(Policy):
    def propose(self, obs):
        share = int(self.propose_rng.integers(0, 11))
        levels = {}
        for target in sorted(obs.targets):
            mitigation, savings = self.propose_rng.integers(0, 11, size=2)
            levels[target] = (int(mitigation), int(savings))
        return share, levels

    def decide(self, obs):
        return bool(self.decide_rng.random() < 0.5)

    def preferred(self, obs):
        mu = int(self.act_rng.integers(0, 11)) / 10
        s = int(self.act_rng.integers(1, 4)) / 10
        return (mu, s)


policy_classes = {
    "selfish": SelfishPolicy,
    "cooperative": CooperativePolicy,
    "adaptive-threshold": AdaptiveThresholdPolicy,
    "random": RandomPolicy,
}


def make_policy(config, region_params, episode_seed=0):
    return policy_classes[config.kind](config, region_params, episode_seed)


def make_policies(policy_map, params, episode_seed=0):
    """One policy per region, from a mapping of region id to PolicyConfig."""
    missing = [p.id for p in params if p.id not in policy_map]
    if missing:
        raise ConfigurationError(f"No policy given for regions {missing}")
    return [make_policy(policy_map[p.id], p, episode_seed) for p in params]


# Presets. The seed groups list a high-capital, a high-population and a small
# region in that order.
def _paper_table():
    result = {}
    for group, (rich, populous, small) in enumerate(seed_groups):
        result[rich] = PolicyConfig(kind="cooperative", target_level=7)
        result[populous] = PolicyConfig(kind="adaptive-threshold", capacity_slope=0.3)
        if group < 6:
            result[small] = PolicyConfig(kind="random")
        else:
            result[small] = PolicyConfig(kind="selfish")
    return result


def _uniform(kind):
    def preset():
        return {r: PolicyConfig(kind=kind) for r in range(n_regions)}

    return preset


policy_presets = {
    "paper-table": (
        _paper_table,
        "High-capital regions cooperative (7), high-population adaptive (0.3), "
        "small regions random in groups 0-5 and selfish in groups 6-8.",
    ),
    "all-cooperative": (_uniform("cooperative"), "Every region cooperative (7)."),
    "all-selfish": (_uniform("selfish"), "Every region selfish."),
    "all-adaptive": (_uniform("adaptive-threshold"), "Every region adaptive (0.3)."),
    "all-random": (_uniform("random"), "Every region random."),
}


def policy_preset(name):
    if name not in policy_presets:
        raise ConfigurationError(
            f"Unknown policy preset '{name}'. Choose from "
            f"{', '.join(policy_presets)}"
        )
    return policy_presets[name][0]()


def _policy_config(values, where):
    parameters = PolicyParameters.parameters
    unknown = sorted(set(values) - set(parameters))
    if unknown:
        raise ConfigurationError(f"{where}: unknown keys {unknown}")
    data = PolicyParameters.defaults()
    for key, text in values.items():
        kind = parameters[key]["kind"]
        try:
            if kind == "integer":
                data[key] = int(text)
            elif kind == "float":
                data[key] = float(text)
            else:
                data[key] = text.strip()
        except ValueError:
            raise ConfigurationError(f"{where}: '{key}' cannot be '{text}'")
    try:
        return PolicyConfig(**data)
    except ValueError as e:
        raise ConfigurationError(f"{where}: {e}")


def load_policy_map(path):
    """Read a policy assignment file.

    The file is INI text with a section per region, ``[region 7]``, holding
    the PolicyConfig keys. An optional ``[all]`` section gives the policy of
    every region not listed.
    """
    path = Path(path)
    parser = configparser.ConfigParser(default_section="__none__")
    try:
        with path.open() as fd:
            parser.read_file(fd)
    except (OSError, configparser.Error) as e:
        raise ConfigurationError(f"Cannot read the policy file {path}: {e}")

    default = None
    result = {}
    for section in parser.sections():
        where = f"{path} [{section}]"
        values = dict(parser.items(section))
        if section == "all":
            default = _policy_config(values, where)
            continue
        words = section.split()
        if len(words) != 2 or words[0] != "region" or not words[1].isdigit():
            raise ConfigurationError(f"{path}: unknown section [{section}]")
        region = int(words[1])
        if region >= n_regions:
            raise ConfigurationError(f"{path}: there is no region {region}")
        result[region] = _policy_config(values, where)

    for region in range(n_regions):
        if region not in result:
            if default is None:
                raise ConfigurationError(f"{path}: no policy for region {region}")
            result[region] = default
    return result


def save_policy_map(policy_map, path):
    """Write a policy assignment file readable by load_policy_map."""
    parser = configparser.ConfigParser(default_section="__none__")
    for region in sorted(policy_map):
        config = policy_map[region]
        parser[f"region {region}"] = {
            key: str(getattr(config, key)) for key in PolicyParameters.parameters
        }
    with Path(path).open("w") as fd:
        parser.write(fd)


def resolve_policy_map(value):
    """A preset name or the path of a policy assignment file."""
    if value in policy_presets:
        return policy_preset(value)
    if Path(value).exists():
        return load_policy_map(value)
    raise ConfigurationError(
        f"'{value}' is neither a policy preset ({', '.join(policy_presets)}) "
        "nor a policy file"
    )
