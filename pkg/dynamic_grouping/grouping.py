# -*- coding: utf-8 -*-

"""Forming the nine groups of three regions and exchanging members.

The regions keep a count of how often each one voted against its group. Once
a count passes the threshold the region joins the pool of candidates for an
exchange, and two pooled regions in different groups with similar population
and capital swap groups.
"""

from collections import namedtuple
from dataclasses import dataclass, field, replace
import itertools
import logging
from pathlib import Path

from .engine import n_regions
from .errors import ConfigurationError, InvariantViolation

logger = logging.getLogger(__name__)

n_groups = 9
group_size = 3

# The initial groups, in the order the members are listed.
seed_groups = (
    (26, 1, 2),
    (3, 4, 6),
    (5, 7, 18),
    (19, 10, 12),
    (20, 13, 15),
    (14, 16, 22),
    (8, 9, 21),
    (11, 17, 23),
    (24, 25, 0),
)

formation_modes = ("seed-table", "principled")

Indicators = namedtuple("Indicators", "population capital")
SwapEvent = namedtuple("SwapEvent", "region_a region_b group_a group_b")
GroupUpdate = namedtuple("GroupUpdate", "partition ledger swaps")


def check_partition(groups):
    """Raise InvariantViolation unless the groups are 9 disjoint triples
    covering all the regions."""
    if len(groups) != n_groups:
        raise InvariantViolation(f"There are {len(groups)} groups, not {n_groups}")
    for i, group in enumerate(groups):
        if len(group) != group_size or len(set(group)) != group_size:
            raise InvariantViolation(
                f"Group {i} has members {sorted(group)}, not {group_size} regions"
            )
    members = sorted(itertools.chain.from_iterable(groups))
    if members != list(range(n_regions)):
        raise InvariantViolation(
            f"The groups do not cover regions 0..{n_regions - 1} exactly once"
        )


@dataclass(frozen=True)
class Partition:
    """The assignment of the regions to groups.

    `groups` holds one tuple of member ids per group; `generation` counts the
    swaps applied since the groups were formed.
    """

    groups: tuple
    generation: int = 0

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(tuple(g) for g in self.groups))
        check_partition(self.groups)

    def group_of(self, region):
        for i, group in enumerate(self.groups):
            if region in group:
                return i
        raise ValueError(f"Region {region} is not in any group")

    def members(self, group):
        return self.groups[group]

    def swap(self, region_a, region_b):
        """A new partition with the two regions exchanged."""
        ga = self.group_of(region_a)
        gb = self.group_of(region_b)
        if ga == gb:
            raise ValueError(
                f"Regions {region_a} and {region_b} are both in group {ga}"
            )
        groups = [list(g) for g in self.groups]
        groups[ga][groups[ga].index(region_a)] = region_b
        groups[gb][groups[gb].index(region_b)] = region_a
        return Partition(groups=groups, generation=self.generation + 1)


@dataclass(frozen=True)
class InconsistencyLedger:
    """How often each region disagreed with its group, and the pool of
    regions waiting for an exchange."""

    counts: tuple = (0,) * n_regions
    threshold: int = 18
    pool: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        object.__setattr__(self, "pool", frozenset(self.pool))
        if len(self.counts) != n_regions:
            raise ValueError(f"The ledger needs {n_regions} counts")
        if any(c < 0 for c in self.counts):
            raise ValueError("Inconsistency counts cannot be negative")
        if self.threshold < 0:
            raise ValueError("The inconsistency threshold cannot be negative")


@dataclass(frozen=True)
class SimilarityConfig:
    """Normalisation of the two indicators and the similarity threshold."""

    pop_scale: float = 100.0
    cap_scale: float = 100.0
    threshold: float = 0.1

    def __post_init__(self):
        if self.pop_scale <= 0 or self.cap_scale <= 0 or self.threshold <= 0:
            raise ValueError("The similarity scales and threshold must be positive")


def form_initial_groups(params, mode="seed-table"):
    """Form the initial nine groups.

    Parameters
    ----------
    params : [RegionParams]
        The 27 regions.
    mode : str
        "seed-table" returns the published initial groups. "principled" deals
        the nine richest regions one per group, then the nine most populous
        ones starting with the poorest group, and finally places the rest to
        even out the groups' total population.

    Returns
    -------
    Partition
    """
    if len(params) != n_regions:
        raise ValueError(f"Need exactly {n_regions} regions, not {len(params)}")
    ids = [p.id for p in params]
    if len(set(ids)) != len(ids):
        raise ValueError("The regions' ids are not unique")

    if mode == "seed-table":
        return Partition(groups=seed_groups)
    if mode != "principled":
        raise ValueError(f"Unknown group formation mode '{mode}'")

    by_capital = sorted(params, key=lambda p: (-p.K0, p.id))
    groups = [[p] for p in by_capital[:n_groups]]

    rest = sorted(by_capital[n_groups:], key=lambda p: (-p.L0, p.id))
    for p in rest[:n_groups]:
        open_groups = [i for i, g in enumerate(groups) if len(g) == 1]
        i = min(open_groups, key=lambda i: (sum(m.K0 for m in groups[i]), i))
        groups[i].append(p)

    for p in rest[n_groups:]:
        open_groups = [i for i, g in enumerate(groups) if len(g) < group_size]
        i = min(open_groups, key=lambda i: (sum(m.L0 for m in groups[i]), i))
        groups[i].append(p)

    partition = Partition(groups=[[p.id for p in g] for g in groups])
    totals = [sum(p.L0 for p in g) for g in groups]
    logger.info(
        f"Formed the groups from principles; population spread "
        f"{max(totals) - min(totals):.2f}"
    )
    return partition


def similarity_distance(a, b, cfg):
    """The summed absolute differences of the normalised population and
    capital of two regions. Anything with `population` and `capital`
    attributes will do, e.g. RegionState or Indicators."""
    return (
        abs(a.population - b.population) / cfg.pop_scale
        + abs(a.capital - b.capital) / cfg.cap_scale
    )


def indicators_from_world(world):
    """The current population and capital of every region."""
    return [Indicators(r.population, r.capital) for r in world.regions]


def record_inconsistencies(ledger, partition, group_outcomes, member_decisions):
    """Count each region's disagreements with its group's votes.

    Parameters
    ----------
    ledger : InconsistencyLedger
    partition : Partition
        Which group each region belongs to.
    group_outcomes : {int: {key: bool}}
        For each group, the voted outcome of every proposal it evaluated.
    member_decisions : {int: {key: bool}}
        For each region, its own decision on the same proposals.

    Returns
    -------
    InconsistencyLedger
        The ledger with the counts increased; the pool is unchanged.
    """
    counts = list(ledger.counts)
    for region, decisions in member_decisions.items():
        group = partition.group_of(region)
        outcomes = group_outcomes.get(group, {})
        for key, accept in decisions.items():
            if key not in outcomes:
                raise ValueError(
                    f"Region {region} decided on {key}, which group {group} "
                    "did not vote on"
                )
            if bool(accept) != bool(outcomes[key]):
                counts[region] += 1
    return replace(ledger, counts=tuple(counts))


def update_groups(partition, ledger, indicators, cfg):
    """Pool the regions over the threshold and swap similar pooled pairs.

    Pairs are scanned in ascending (region, region) order and the first
    eligible pair is swapped, until no eligible pair is left. Swapped regions
    leave the pool with their counts reset; the others stay pooled and keep
    their counts.

    Returns
    -------
    GroupUpdate
        The new partition and ledger, and the swaps made in order.
    """
    counts = list(ledger.counts)
    pool = set(ledger.pool)
    pool.update(r for r, c in enumerate(counts) if c > ledger.threshold)

    swaps = []
    while True:
        for a, b in itertools.combinations(sorted(pool), 2):
            ga = partition.group_of(a)
            gb = partition.group_of(b)
            if ga == gb:
                continue
            if similarity_distance(indicators[a], indicators[b], cfg) <= cfg.threshold:
                partition = partition.swap(a, b)
                pool -= {a, b}
                counts[a] = counts[b] = 0
                swaps.append(SwapEvent(a, b, ga, gb))
                logger.info(f"Swapped region {a} (group {ga}) and {b} (group {gb})")
                break
        else:
            break

    return GroupUpdate(
        partition=partition,
        ledger=replace(ledger, counts=tuple(counts), pool=frozenset(pool)),
        swaps=swaps,
    )


def load_partition(path):
    """Read groups from a text file: one group per line, ids separated by
    whitespace or commas, '#' starting a comment."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ConfigurationError(f"Cannot read the partition file {path}: {e}")
    groups = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].replace(",", " ").strip()
        if line == "":
            continue
        try:
            groups.append([int(x) for x in line.split()])
        except ValueError:
            raise ConfigurationError(f"{path}: cannot read the group '{line}'")
    try:
        return Partition(groups=groups)
    except InvariantViolation as e:
        raise ConfigurationError(f"{path}: {e}")


def save_partition(partition, path):
    """Write the groups in the format read by load_partition."""
    lines = ["# one group per line"]
    lines.extend(" ".join(str(r) for r in group) for group in partition.groups)
    Path(path).write_text("\n".join(lines) + "\n")
