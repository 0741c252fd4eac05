# -*- coding: utf-8 -*-

"""JSON transcripts of episodes and their replay.

A transcript holds the configuration, and for every step the partition in
force, what was proposed and decided, the group votes and levels, the
commitments, the actions played and the group exchanges. Replay needs no
policies: it recomputes the votes, levels and commitments from the recorded
proposals and decisions, replays the recorded actions through the dynamics
and checks that everything, down to the metrics, comes out the same.
"""

from dataclasses import dataclass
import json
import logging
from pathlib import Path

from ._version import get_versions
from .calibration import resolve_calibration
from .config import ScenarioConfig
from .engine import initial_world, step_world
from .errors import ConfigurationError
from .grouping import (
    InconsistencyLedger,
    Partition,
    form_initial_groups,
    indicators_from_world,
    record_inconsistencies,
    update_groups,
)
from .metrics import trajectory_metrics
from .negotiation import (
    Decision,
    Proposal,
    bilateral_round,
    decision_table,
    no_commitments,
    resolve_group_round,
)

logger = logging.getLogger(__name__)

format_version = 2


@dataclass(frozen=True)
class ReplayResult:
    """The metrics recomputed from a transcript and any differences found."""

    metrics: object
    recorded_metrics: dict
    mismatches: tuple

    @property
    def matches(self):
        return len(self.mismatches) == 0


def _decisions(member_decisions):
    return [
        [region, key, bool(accept)]
        for region, answers in sorted(member_decisions.items())
        for key, accept in sorted(answers.items())
    ]


def _votes(group_outcomes):
    return [
        [group, from_group, bool(accepted)]
        for group, outcomes in sorted(group_outcomes.items())
        for from_group, accepted in sorted(outcomes.items())
    ]


def _levels(group_levels):
    return [[group, m, s] for group, (m, s) in sorted(group_levels.items())]


def step_entry(step, partition, outcome, actions, swaps):
    """The transcript entry for one step."""
    return {
        "step": step,
        "groups": None if partition is None else [list(g) for g in partition.groups],
        "generation": None if partition is None else partition.generation,
        "proposals": [
            [p.from_group, p.to_group, p.mitigation_level, p.savings_level]
            for p in outcome.proposals
        ],
        "decisions": _decisions(outcome.member_decisions),
        "votes": _votes(outcome.group_outcomes),
        "group_levels": _levels(outcome.group_levels),
        "shares": [[r, s] for r, s in sorted(outcome.share_proposals.items())],
        "commitments": [
            [c.min_mitigation, c.min_savings] for c in outcome.commitments
        ],
        "actions": [[mu, s] for mu, s in actions],
        "swaps": [list(event) for event in swaps],
    }


def transcript_data(record):
    """The whole transcript of a RunRecord as JSON-ready data."""
    swaps = {}
    for step, event in record.swaps:
        swaps.setdefault(step, []).append(event)
    steps = []
    for i, (outcome, actions) in enumerate(zip(record.rounds, record.actions)):
        step = i + 1
        steps.append(
            step_entry(
                step, record.partitions[i], outcome, actions, swaps.get(step, [])
            )
        )
    return {
        "format": format_version,
        "version": get_versions()["version"],
        "config": record.config.to_dict(),
        "steps": steps,
        "metrics": record.metrics.as_dict(),
    }


def write_transcript(record, path):
    with Path(path).open("w") as fd:
        json.dump(transcript_data(record), fd, indent=2, sort_keys=True)
        fd.write("\n")


def read_transcript(path):
    """Read a transcript file, checking its overall layout."""
    path = Path(path)
    try:
        with path.open() as fd:
            data = json.load(fd)
    except (OSError, json.JSONDecodeError) as e:
        raise ConfigurationError(f"Cannot read the transcript {path}: {e}")
    missing = {"format", "config", "steps", "metrics"} - set(data)
    if missing:
        raise ConfigurationError(f"Transcript {path} lacks {sorted(missing)}")
    if data["format"] != format_version:
        raise ConfigurationError(
            f"Transcript {path} has format {data['format']}, not {format_version}"
        )
    return data


def _recomputed_round(config, partition, entry, n):
    """Commitments, votes, group levels and answers rebuilt from the recorded
    proposals and decisions."""
    if config.mode == "none":
        return no_commitments(n), {}, {}, {}
    proposals = {(p[0], p[1]): Proposal(*p) for p in entry["proposals"]}
    if config.mode == "bilateral":
        decisions = [
            Decision(region, proposals[(key, region)], accept)
            for region, key, accept in entry["decisions"]
        ]
        requested = [[0] * n for _ in range(n)]
        accepted = [[False] * n for _ in range(n)]
        for p in proposals.values():
            requested[p.from_group][p.to_group] = p.mitigation_level
        for d in decisions:
            accepted[d.proposal.from_group][d.region] = d.accept
        commitments = bilateral_round(requested, accepted)
        return commitments, {}, {}, decision_table(decisions, n)
    decisions = [
        Decision(region, proposals[(key, partition.group_of(region))], accept)
        for region, key, accept in entry["decisions"]
    ]
    member_decisions = decision_table(decisions, n)
    share_proposals = {r: s for r, s in entry["shares"]}
    group_outcomes, commitments, _, group_levels = resolve_group_round(
        partition,
        list(proposals.values()),
        member_decisions,
        share_proposals,
        config.variant,
    )
    return commitments, group_outcomes, group_levels, member_decisions


def replay_transcript(data, regions=None):
    """Replay a transcript and compare the result with what it recorded.

    Parameters
    ----------
    data : dict
        The transcript, as returned by read_transcript.
    regions : [RegionParams], optional
        The calibration; resolved from the recorded configuration if not
        given.

    Returns
    -------
    ReplayResult
    """
    config = ScenarioConfig.from_dict(data["config"])
    if regions is None:
        regions = resolve_calibration(config.calibration)
    n = len(regions)
    climate = config.climate

    world = initial_world(regions, climate)
    worlds = [world]
    partition = None
    if config.mode in ("static-group", "dynamic-group"):
        partition = form_initial_groups(regions, config.formation)
    ledger = InconsistencyLedger(threshold=config.inconsistency_threshold)

    mismatches = []
    if len(data["steps"]) != climate.horizon:
        mismatches.append(
            f"The transcript has {len(data['steps'])} steps, not {climate.horizon}"
        )
    for entry in data["steps"]:
        step = entry["step"]
        recorded_groups = entry["groups"]
        if partition is None:
            if recorded_groups is not None:
                mismatches.append(f"Step {step}: unexpected groups")
        elif recorded_groups != [list(g) for g in partition.groups]:
            mismatches.append(f"Step {step}: the groups differ")
            partition = Partition(
                groups=recorded_groups, generation=entry["generation"]
            )

        commitments, group_outcomes, group_levels, member_decisions = (
            _recomputed_round(config, partition, entry, n)
        )
        if _votes(group_outcomes) != entry["votes"]:
            mismatches.append(f"Step {step}: the votes differ")
        if _levels(group_levels) != entry["group_levels"]:
            mismatches.append(f"Step {step}: the group levels differ")
        recorded = [tuple(c) for c in entry["commitments"]]
        if recorded != [(c.min_mitigation, c.min_savings) for c in commitments]:
            mismatches.append(f"Step {step}: the commitments differ")

        actions = [tuple(a) for a in entry["actions"]]
        for commitment, (mu, s) in zip(commitments, actions):
            if not commitment.is_respected_by(mu, s):
                mismatches.append(
                    f"Step {step}: region {commitment.region} broke its commitment"
                )
        world = step_world(world, actions, regions, climate)
        worlds.append(world)

        if config.mode == "dynamic-group":
            ledger = record_inconsistencies(
                ledger, partition, group_outcomes, member_decisions
            )
            update = update_groups(
                partition, ledger, indicators_from_world(world), config.similarity
            )
            if [list(e) for e in update.swaps] != entry["swaps"]:
                mismatches.append(f"Step {step}: the group exchanges differ")
            partition = update.partition
            ledger = update.ledger
        elif len(entry["swaps"]) > 0:
            mismatches.append(f"Step {step}: exchanges in a scenario without them")

    metrics = trajectory_metrics(worlds, config.anchors, use_gross=config.use_gross)
    if metrics.as_dict() != data["metrics"]:
        mismatches.append("The metrics differ")
    for text in mismatches:
        logger.warning(text)
    return ReplayResult(
        metrics=metrics, recorded_metrics=data["metrics"], mismatches=tuple(mismatches)
    )
