# -*- coding: utf-8 -*-

"""
dynamic_grouping
Climate negotiation between regions in dynamically regrouped coalitions,
on a small climate-economy model.
"""

# Bring up the classes so that they appear to be directly in
# the dynamic_grouping package.

# The metadata
from .metadata import metadata

from .errors import ConfigurationError
from .errors import InvariantViolation

from .engine_parameters import ClimateParameters
from .engine import n_regions
from .engine import RegionParams
from .engine import RegionState
from .engine import ClimateState
from .engine import ClimateParams
from .engine import World
from .engine import production
from .engine import abatement_cost
from .engine import damage_factor
from .engine import net_output
from .engine import consumption
from .engine import forcing
from .engine import initial_world
from .engine import step_world

from .calibration import archetypes
from .calibration import archetype_of
from .calibration import synthetic_calibration
from .calibration import load_calibration
from .calibration import save_calibration
from .calibration import resolve_calibration

from .grouping import seed_groups
from .grouping import Indicators
from .grouping import SwapEvent
from .grouping import Partition
from .grouping import InconsistencyLedger
from .grouping import SimilarityConfig
from .grouping import check_partition
from .grouping import form_initial_groups
from .grouping import similarity_distance
from .grouping import indicators_from_world
from .grouping import record_inconsistencies
from .grouping import update_groups
from .grouping import load_partition
from .grouping import save_partition

from .policy_parameters import PolicyParameters
from .agents import Observation
from .agents import PolicyConfig
from .agents import Policy
from .agents import SelfishPolicy
from .agents import CooperativePolicy
from .agents import AdaptiveThresholdPolicy
from .agents import RandomPolicy
from .agents import make_policy
from .agents import make_policies
from .agents import policy_presets
from .agents import policy_preset
from .agents import load_policy_map
from .agents import save_policy_map
from .agents import resolve_policy_map

from .negotiation import Proposal
from .negotiation import Decision
from .negotiation import decision_table
from .negotiation import Commitment
from .negotiation import ShareVector
from .negotiation import RoundOutcome
from .negotiation import level_to_rate
from .negotiation import intra_group_share_split
from .negotiation import group_vote
from .negotiation import set_group_commitments
from .negotiation import apply_commitments
from .negotiation import bilateral_round
from .negotiation import run_negotiation_round

from .metrics import IndexAnchors
from .metrics import EpisodeMetrics
from .metrics import temperature_rise
from .metrics import gross_output_total
from .metrics import climate_index
from .metrics import econ_index
from .metrics import hypervolume_contribution
from .metrics import hypervolume_set
from .metrics import pareto_front
from .metrics import episode_metrics
from .metrics import trajectory_metrics

from .scenario_parameters import ScenarioParameters
from .scenario_parameters import scenarios
from .config import ScenarioConfig
from .config import parse_config
from .config import load_config
from .config import save_config

from .harness import RunRecord
from .harness import Comparison
from .harness import run_episode
from .harness import run_comparison
from .harness import emit_report

from .transcript import write_transcript
from .transcript import read_transcript
from .transcript import replay_transcript

# Handle the version
from ._version import get_versions

__author__ = """The dynamic_grouping developers"""
__email__ = ""
versions = get_versions()
__version__ = versions["version"]
__git_revision__ = versions["full-revisionid"]
del get_versions, versions
