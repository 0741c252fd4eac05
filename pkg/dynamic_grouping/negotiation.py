# -*- coding: utf-8 -*-

"""The negotiation protocols: none, bilateral, and group negotiation.

In the group protocol every group sends each other group a proposal of
(mitigation level, savings level). The members of the receiving group each
accept or reject a proposal as a whole, and two votes of three carry it. A
group is then bound to the highest levels it accepted or had accepted by
others, and its members split the mitigation between them so that their
average meets the group's level.
"""

from dataclasses import dataclass, field
import itertools
import logging
import math

import numpy as np

from .agents import Observation
from .errors import InvariantViolation

logger = logging.getLogger(__name__)

max_level = 10
tolerance = 1.0e-9

modes = ("none", "bilateral", "static-group", "dynamic-group")
variants = ("mitigation-only", "mitigation+savings")


def round_half_up(x):
    return int(math.floor(x + 0.5))


@dataclass(frozen=True)
class Proposal:
    """A request from one party to another for a mitigation and savings level.

    In the group protocols the parties are groups; in the bilateral protocol
    they are regions.
    """

    from_group: int
    to_group: int
    mitigation_level: int
    savings_level: int = 0

    def __post_init__(self):
        for name in ("mitigation_level", "savings_level"):
            value = getattr(self, name)
            if int(value) != value or not 0 <= value <= max_level:
                raise ValueError(
                    f"Proposal {name} must be an integer 0..10, not {value}"
                )
            object.__setattr__(self, name, int(value))
        if self.from_group == self.to_group:
            raise ValueError(f"Party {self.from_group} cannot propose to itself")

    @property
    def levels(self):
        return (self.mitigation_level, self.savings_level)


@dataclass(frozen=True)
class Decision:
    """A region's answer to a proposal. There is one flag for both levels."""

    region: int
    proposal: Proposal
    accept: bool

    def __post_init__(self):
        object.__setattr__(self, "accept", bool(self.accept))


@dataclass(frozen=True)
class Commitment:
    """The minimum rates a region has to respect when it acts."""

    region: int
    min_mitigation: float = 0.0
    min_savings: float = 0.0

    def __post_init__(self):
        for name in ("min_mitigation", "min_savings"):
            if not 0 <= getattr(self, name) <= 1:
                raise ValueError(f"Commitment {name} must be in [0, 1]")

    def is_respected_by(self, mu, s):
        return mu >= self.min_mitigation and s >= self.min_savings


@dataclass(frozen=True)
class ShareVector:
    """The members' mitigation levels, averaging to the group's level."""

    group: int
    shares: tuple

    def __post_init__(self):
        shares = tuple(float(x) for x in self.shares)
        if len(shares) == 0:
            raise ValueError(f"Group {self.group} has no shares")
        for share in shares:
            if not -tolerance <= share <= max_level + tolerance:
                raise ValueError(
                    f"Group {self.group}: share {share} is not in [0, {max_level}]"
                )
        object.__setattr__(self, "shares", shares)

    @property
    def level(self):
        return sum(self.shares) / len(self.shares)


@dataclass(frozen=True)
class RoundOutcome:
    """Everything one negotiation round decided."""

    mode: str
    variant: str
    commitments: tuple
    proposals: tuple = ()
    decisions: tuple = ()
    member_decisions: dict = field(default_factory=dict)
    group_outcomes: dict = field(default_factory=dict)
    share_proposals: dict = field(default_factory=dict)
    shares: dict = field(default_factory=dict)
    group_levels: dict = field(default_factory=dict)


def level_to_rate(level):
    """Normalise a level 0..10 to a rate 0..1."""
    if not 0 <= level <= max_level:
        raise ValueError(f"Level {level} is not in [0, {max_level}]")
    return level / max_level


def intra_group_share_split(member_proposed_shares, group_commitment_level, group=0):
    """Split the group's mitigation level between its members.

    All the members' own proposals move by the same amount so that their mean
    is the group's level. Any share pushed past 0 or 10 is clipped and the
    difference is spread evenly over the members that are not clipped.
    """
    if len(member_proposed_shares) == 0:
        raise ValueError("There are no shares to split")
    for share in member_proposed_shares:
        if not 0 <= share <= max_level:
            raise ValueError(f"Proposed share {share} is not in [0, {max_level}]")
    if not 0 <= group_commitment_level <= max_level:
        raise ValueError(f"Group level {group_commitment_level} is not in [0, 10]")

    n = len(member_proposed_shares)
    c = float(group_commitment_level)
    shift = c - sum(member_proposed_shares) / n
    shares = [float(x) + shift for x in member_proposed_shares]
    clipped = set()
    for _ in range(2 * n):
        excess = 0.0
        for i, x in enumerate(shares):
            if x > max_level:
                excess += x - max_level
                shares[i] = float(max_level)
                clipped.add(i)
            elif x < 0:
                excess += x
                shares[i] = 0.0
                clipped.add(i)
        free = [i for i in range(n) if i not in clipped]
        if excess == 0 or len(free) == 0:
            break
        for i in free:
            shares[i] += excess / len(free)

    result = ShareVector(group=group, shares=tuple(shares))
    if abs(result.level - c) > tolerance:
        raise InvariantViolation(
            f"Group {group}: the shares {shares} do not average to {c}"
        )
    return result


def decision_table(decisions, n):
    """The answers of every region, keyed by the proposing party.

    Returns ``{region: {from_group: accept}}`` with an entry, possibly empty,
    for each of the `n` regions.
    """
    table = {r: {} for r in range(n)}
    for decision in decisions:
        table[decision.region][decision.proposal.from_group] = decision.accept
    return table


def group_vote(member_decisions):
    """True if at least two of the three members accept."""
    if len(member_decisions) != 3:
        raise ValueError(
            f"A group vote needs 3 decisions, not {len(member_decisions)}"
        )
    return sum(bool(d) for d in member_decisions) >= 2


def set_group_commitments(accepted_incoming, own_accepted_outgoing):
    """The group's (mitigation, savings) levels: the elementwise maximum over
    the proposals it accepted and its own proposals that were accepted."""
    mitigation = 0
    savings = 0
    for proposal in itertools.chain(accepted_incoming, own_accepted_outgoing):
        mitigation = max(mitigation, proposal.mitigation_level)
        savings = max(savings, proposal.savings_level)
    return (mitigation, savings)


def apply_commitments(group_levels, share_vector, members):
    """Turn the group's levels and the split shares into the members'
    commitments."""
    mitigation_level, savings_level = group_levels
    if len(members) != len(share_vector.shares):
        raise ValueError(
            f"Group {share_vector.group} has {len(members)} members but "
            f"{len(share_vector.shares)} shares"
        )
    if abs(share_vector.level - mitigation_level) > tolerance:
        raise ValueError(
            f"Group {share_vector.group}: the shares average {share_vector.level}, "
            f"not the group's level {mitigation_level}"
        )
    min_savings = level_to_rate(savings_level)
    return tuple(
        Commitment(
            region=region,
            min_mitigation=level_to_rate(min(max(share, 0.0), max_level)),
            min_savings=min_savings,
        )
        for region, share in zip(members, share_vector.shares)
    )


def bilateral_round(requested, accepted):
    """The commitments from one round of bilateral negotiation.

    Parameters
    ----------
    requested : array-like of int, n x n
        requested[i][j] is the mitigation level region i asks of region j,
        and also the level i promises itself should j accept. The diagonal
        is ignored.
    accepted : array-like of bool, n x n
        accepted[i][j] is region j's decision on region i's proposal.

    Returns
    -------
    (Commitment, ...)
        One per region. Savings are not negotiated bilaterally.
    """
    requested = np.asarray(requested)
    accepted = np.asarray(accepted, dtype=bool)
    if requested.ndim != 2 or requested.shape[0] != requested.shape[1]:
        raise ValueError(
            f"The proposals must be a square matrix, not {requested.shape}"
        )
    if accepted.shape != requested.shape:
        raise ValueError("There must be one decision per proposal")
    n = requested.shape[0]
    off_diagonal = ~np.eye(n, dtype=bool)
    offered = requested[off_diagonal]
    if np.any(offered < 0) or np.any(offered > max_level):
        raise ValueError("Requested levels must be in 0..10")

    binding = np.where(accepted & off_diagonal, requested, 0)
    # Column r: what others asked of r and r accepted. Row r: what r promised
    # in proposals that were accepted.
    levels = np.maximum(binding.max(axis=0), binding.max(axis=1))
    return tuple(
        Commitment(region=r, min_mitigation=level_to_rate(int(levels[r])))
        for r in range(n)
    )


def no_commitments(n):
    return tuple(Commitment(region=r) for r in range(n))


def resolve_group_round(
    partition, proposals, member_decisions, share_proposals, variant
):
    """Votes, group levels, shares and commitments from what was said.

    This is the deterministic part of a group round and is shared by live
    negotiation and by replay of a transcript.
    """
    n = sum(len(g) for g in partition.groups)
    by_target = {}
    for proposal in proposals:
        by_target.setdefault(proposal.to_group, []).append(proposal)

    group_outcomes = {}
    for group, members in enumerate(partition.groups):
        outcomes = {}
        for proposal in by_target.get(group, []):
            key = proposal.from_group
            votes = [member_decisions[r][key] for r in members]
            outcomes[key] = group_vote(votes)
        group_outcomes[group] = outcomes

    commitments = [None] * n
    shares = {}
    group_levels = {}
    for group, members in enumerate(partition.groups):
        incoming = [
            p for p in by_target.get(group, []) if group_outcomes[group][p.from_group]
        ]
        outgoing = [
            p
            for p in proposals
            if p.from_group == group and group_outcomes[p.to_group][group]
        ]
        levels = set_group_commitments(incoming, outgoing)
        if variant == "mitigation-only":
            levels = (levels[0], 0)
        split = intra_group_share_split(
            [share_proposals[r] for r in members], levels[0], group=group
        )
        for commitment in apply_commitments(levels, split, members):
            commitments[commitment.region] = commitment
        shares[group] = split
        group_levels[group] = levels

    return group_outcomes, tuple(commitments), shares, group_levels


def observe(region, world, partition, commitments, targets=(), proposal=None):
    """What `region` sees of the world, its group and its commitment."""
    if partition is None:
        members = (region,)
    else:
        members = partition.members(partition.group_of(region))
    return Observation(
        region=region,
        state=world.regions[region],
        climate=world.climate,
        commitment=commitments[region],
        group_members=tuple(members),
        member_actions=tuple(
            (world.regions[m].mitigation_rate, world.regions[m].savings_rate)
            for m in members
        ),
        targets=tuple(targets),
        proposal=proposal,
    )


def run_negotiation_round(
    mode, variant, policies, world, partition=None, commitments=None
):
    """Run one complete negotiation round.

    Parameters
    ----------
    mode : str
        One of "none", "bilateral", "static-group" or "dynamic-group".
    variant : str
        "mitigation-only" or "mitigation+savings".
    policies : [Policy]
        One policy per region, in region order.
    world : World
        The current state, which the policies observe.
    partition : Partition
        The groups; required by the group modes.
    commitments : (Commitment, ...)
        The commitments from the previous round, which the policies observe.

    Returns
    -------
    RoundOutcome
    """
    if mode not in modes:
        raise ValueError(f"Unknown negotiation mode '{mode}'")
    if variant not in variants:
        raise ValueError(f"Unknown negotiation variant '{variant}'")
    n = len(world.regions)
    if len(policies) != n:
        raise ValueError(
            f"Need a policy for each of the {n} regions, not {len(policies)}"
        )
    if commitments is None:
        commitments = no_commitments(n)

    if mode == "none":
        return RoundOutcome(mode=mode, variant=variant, commitments=no_commitments(n))

    if mode == "bilateral":
        return _bilateral(variant, policies, world, commitments)

    if partition is None:
        raise ValueError(f"Mode '{mode}' needs the groups")
    return _group(mode, variant, policies, world, partition, commitments)


def _bilateral(variant, policies, world, commitments):
    n = len(world.regions)
    requested = np.zeros((n, n), dtype=int)
    proposals = []
    for region, policy in enumerate(policies):
        targets = [r for r in range(n) if r != region]
        obs = observe(region, world, None, commitments, targets=targets)
        _, levels = policy.propose(obs)
        for target in targets:
            mitigation, _ = levels[target]
            requested[region, target] = mitigation
            proposals.append(Proposal(region, target, mitigation, 0))

    decisions = []
    for proposal in proposals:
        target = proposal.to_group
        obs = observe(target, world, None, commitments, proposal=proposal)
        decisions.append(Decision(target, proposal, policies[target].decide(obs)))

    accepted = np.zeros((n, n), dtype=bool)
    for decision in decisions:
        accepted[decision.proposal.from_group, decision.region] = decision.accept

    return RoundOutcome(
        mode="bilateral",
        variant=variant,
        commitments=bilateral_round(requested, accepted),
        proposals=tuple(proposals),
        decisions=tuple(decisions),
        member_decisions=decision_table(decisions, n),
    )


def _group(mode, variant, policies, world, partition, commitments):
    n_groups = len(partition.groups)

    # Proposal stage: shares within the group, then one proposal per group.
    share_proposals = {}
    suggestions = {}
    for group, members in enumerate(partition.groups):
        targets = [g for g in range(n_groups) if g != group]
        for region in members:
            obs = observe(region, world, partition, commitments, targets=targets)
            share, levels = policies[region].propose(obs)
            share_proposals[region] = float(share)
            suggestions[region] = levels

    proposals = []
    for group, members in enumerate(partition.groups):
        for target in range(n_groups):
            if target == group:
                continue
            mitigation = round_half_up(
                np.median([suggestions[r][target][0] for r in members])
            )
            if variant == "mitigation-only":
                savings = 0
            else:
                savings = round_half_up(
                    np.median([suggestions[r][target][1] for r in members])
                )
            proposals.append(Proposal(group, target, mitigation, savings))

    # Evaluation stage: every member answers every incoming proposal.
    decisions = []
    for proposal in proposals:
        for region in partition.members(proposal.to_group):
            obs = observe(
                region, world, partition, commitments, proposal=proposal
            )
            decisions.append(Decision(region, proposal, policies[region].decide(obs)))
    member_decisions = decision_table(decisions, len(world.regions))

    group_outcomes, new_commitments, shares, group_levels = resolve_group_round(
        partition, proposals, member_decisions, share_proposals, variant
    )
    logger.debug(
        f"{mode} round: group levels "
        + ", ".join(f"{g}:{m}/{s}" for g, (m, s) in sorted(group_levels.items()))
    )

    return RoundOutcome(
        mode=mode,
        variant=variant,
        commitments=new_commitments,
        proposals=tuple(proposals),
        decisions=tuple(decisions),
        member_decisions=member_decisions,
        group_outcomes=group_outcomes,
        share_proposals=share_proposals,
        shares=shares,
        group_levels=group_levels,
    )
