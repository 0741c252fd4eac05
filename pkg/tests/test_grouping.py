#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""Tests for `dynamic_grouping` package, grouping module."""

import numpy as np
import pytest

import dynamic_grouping
from dynamic_grouping import (
    InconsistencyLedger,
    Indicators,
    Partition,
    RegionParams,
    SimilarityConfig,
    SwapEvent,
    check_partition,
    form_initial_groups,
    record_inconsistencies,
    similarity_distance,
    update_groups,
)


def _region(i, K0=1.0, L0=1.0):
    return RegionParams(
        id=i, A0=1.0, gA=0.0, L0=L0, gL=0.0, K0=K0, sigma0=0.1, gSigma=0.0, theta1=0.1
    )


def _counts(**kwargs):
    counts = [0] * dynamic_grouping.n_regions
    for key, value in kwargs.items():
        counts[int(key[1:])] = value
    return tuple(counts)


def test_seed_table(regions):
    """Testing the published initial groups."""
    partition = form_initial_groups(regions, "seed-table")
    assert partition.groups[0] == (26, 1, 2)
    assert partition.groups[8] == (24, 25, 0)
    assert partition.generation == 0
    assert partition.group_of(26) == 0
    assert partition.group_of(0) == 8


def test_principled_identical_regions():
    """Testing that identical regions still give a valid partition."""
    params = [_region(i) for i in range(27)]
    partition = form_initial_groups(params, "principled")
    check_partition(partition.groups)


def test_principled_archetypes():
    """Testing that the richest and the most populous are dealt one per group."""
    params = (
        [_region(i, K0=100.0) for i in range(9)]
        + [_region(i, L0=100.0) for i in range(9, 18)]
        + [_region(i) for i in range(18, 27)]
    )
    partition = form_initial_groups(params, "principled")
    for group in partition.groups:
        assert sum(1 for r in group if r < 9) == 1
        assert sum(1 for r in group if 9 <= r < 18) == 1


def test_principled_is_deterministic(regions):
    """Testing the principled formation on the synthetic calibration."""
    first = form_initial_groups(regions, "principled")
    check_partition(first.groups)
    assert form_initial_groups(regions, "principled") == first


def test_formation_errors(regions):
    """Testing bad inputs to the group formation."""
    with pytest.raises(ValueError):
        form_initial_groups(regions[:26])
    with pytest.raises(ValueError):
        form_initial_groups(regions, "alphabetical")
    with pytest.raises(ValueError):
        form_initial_groups([_region(0)] * 27, "principled")


def test_partition_invariants():
    """Testing that malformed groups are invariant violations."""
    groups = [list(g) for g in dynamic_grouping.seed_groups]
    groups[0][0] = 1
    with pytest.raises(dynamic_grouping.InvariantViolation):
        Partition(groups=groups)
    with pytest.raises(dynamic_grouping.InvariantViolation):
        Partition(groups=dynamic_grouping.seed_groups[:8])
    groups = [list(g) for g in dynamic_grouping.seed_groups]
    groups[0].append(27)
    with pytest.raises(dynamic_grouping.InvariantViolation):
        Partition(groups=groups)


def test_partition_swap():
    """Testing the exchange of two regions."""
    partition = Partition(groups=dynamic_grouping.seed_groups)
    swapped = partition.swap(5, 12)
    assert swapped.groups[2] == (12, 7, 18)
    assert swapped.groups[3] == (19, 10, 5)
    assert swapped.generation == 1
    assert partition.generation == 0
    with pytest.raises(ValueError):
        partition.swap(26, 1)


def test_similarity_distance():
    """Testing the normalised distance."""
    cfg = SimilarityConfig()
    a = Indicators(50.0, 20.0)
    assert similarity_distance(a, a, cfg) == 0.0
    b = Indicators(30.0, 25.0)
    assert similarity_distance(a, b, cfg) == pytest.approx(0.25)
    assert similarity_distance(b, a, cfg) == similarity_distance(a, b, cfg)


def test_similarity_config_validation():
    """Testing that the scales and threshold must be positive."""
    with pytest.raises(ValueError):
        SimilarityConfig(pop_scale=0.0)
    with pytest.raises(ValueError):
        SimilarityConfig(threshold=-0.1)


def test_ledger_validation():
    """Testing the invariants of the ledger."""
    with pytest.raises(ValueError):
        InconsistencyLedger(counts=(0,) * 26)
    with pytest.raises(ValueError):
        InconsistencyLedger(counts=_counts(r3=-1))
    with pytest.raises(ValueError):
        InconsistencyLedger(threshold=-1)


def test_single_disagreement():
    """Testing that only the dissenting member is counted."""
    partition = Partition(groups=dynamic_grouping.seed_groups)
    ledger = InconsistencyLedger()
    new = record_inconsistencies(
        ledger,
        partition,
        {0: {3: True}},
        {26: {3: True}, 1: {3: False}, 2: {3: True}},
    )
    assert new.counts == _counts(r1=1)
    assert ledger.counts == _counts()
    assert new.pool == frozenset()


def test_several_disagreements():
    """Testing that each disagreement on an incoming proposal counts."""
    partition = Partition(groups=dynamic_grouping.seed_groups)
    outcomes = {0: {g: True for g in range(1, 9)}}
    decisions = {r: {g: True for g in range(1, 9)} for r in (26, 1, 2)}
    for g in (2, 5, 7):
        decisions[26][g] = False
    new = record_inconsistencies(InconsistencyLedger(), partition, outcomes, decisions)
    assert new.counts == _counts(r26=3)


def test_unanimous_decisions():
    """Testing that unanimous groups leave the counts alone."""
    partition = Partition(groups=dynamic_grouping.seed_groups)
    ledger = InconsistencyLedger(counts=_counts(r4=7))
    outcomes = {g: {(g + 1) % 9: False} for g in range(9)}
    decisions = {
        r: {(partition.group_of(r) + 1) % 9: False} for r in range(27)
    }
    assert record_inconsistencies(ledger, partition, outcomes, decisions) == ledger


def test_decision_without_vote():
    """Testing that a decision on an unknown proposal is an error."""
    partition = Partition(groups=dynamic_grouping.seed_groups)
    with pytest.raises(ValueError):
        record_inconsistencies(
            InconsistencyLedger(), partition, {0: {}}, {26: {3: True}}
        )


def test_swap_of_similar_regions():
    """Testing that two pooled, similar regions in different groups swap."""
    partition = Partition(groups=dynamic_grouping.seed_groups)
    ledger = InconsistencyLedger(counts=_counts(r5=19, r12=20))
    indicators = [Indicators(1000.0 * i, 0.0) for i in range(27)]
    indicators[12] = Indicators(5005.0, 0.0)
    update = update_groups(partition, ledger, indicators, SimilarityConfig())
    assert update.swaps == [SwapEvent(5, 12, 2, 3)]
    assert update.partition.group_of(5) == 3
    assert update.partition.group_of(12) == 2
    assert update.partition.generation == 1
    assert update.ledger.counts == _counts()
    assert update.ledger.pool == frozenset()


def test_below_threshold():
    """Testing that nothing happens while the counts are at most the
    threshold."""
    partition = Partition(groups=dynamic_grouping.seed_groups)
    ledger = InconsistencyLedger(counts=_counts(r5=18, r12=18))
    indicators = [Indicators(0.0, 0.0)] * 27
    update = update_groups(partition, ledger, indicators, SimilarityConfig())
    assert update.partition == partition
    assert update.ledger.pool == frozenset()
    assert update.swaps == []


def test_lonely_pooled_region():
    """Testing that a region alone in the pool waits there."""
    partition = Partition(groups=dynamic_grouping.seed_groups)
    ledger = InconsistencyLedger(counts=_counts(r5=19))
    indicators = [Indicators(0.0, 0.0)] * 27
    update = update_groups(partition, ledger, indicators, SimilarityConfig())
    assert update.partition == partition
    assert update.ledger.pool == frozenset({5})
    assert update.ledger.counts == _counts(r5=19)


def test_pooled_pair_in_one_group():
    """Testing that pooled members of the same group do not swap."""
    partition = Partition(groups=dynamic_grouping.seed_groups)
    ledger = InconsistencyLedger(counts=_counts(r26=30, r1=30))
    indicators = [Indicators(0.0, 0.0)] * 27
    update = update_groups(partition, ledger, indicators, SimilarityConfig())
    assert update.swaps == []
    assert update.ledger.pool == frozenset({26, 1})


def test_dissimilar_pair():
    """Testing that dissimilar pooled regions stay pooled."""
    partition = Partition(groups=dynamic_grouping.seed_groups)
    ledger = InconsistencyLedger(counts=_counts(r5=19, r12=19))
    indicators = [Indicators(float(i), 0.0) for i in range(27)]
    update = update_groups(
        partition, ledger, indicators, SimilarityConfig(threshold=0.01)
    )
    assert update.swaps == []
    assert update.ledger.pool == frozenset({5, 12})


def test_swaps_in_ascending_order():
    """Testing that the first eligible pair in ascending order swaps first."""
    partition = Partition(groups=dynamic_grouping.seed_groups)
    # 3 and 4 share group 1; 3 and 5, then 4 and 7 are next in order.
    ledger = InconsistencyLedger(counts=_counts(r3=19, r4=19, r5=19, r7=19))
    indicators = [Indicators(0.0, 0.0)] * 27
    update = update_groups(partition, ledger, indicators, SimilarityConfig())
    assert update.swaps == [SwapEvent(3, 5, 1, 2), SwapEvent(4, 7, 1, 2)]
    assert update.partition.generation == 2
    check_partition(update.partition.groups)


def test_random_updates_keep_partition():
    """Testing that random ledgers never break the partition."""
    rng = np.random.default_rng(42)
    cfg = SimilarityConfig(threshold=0.5)
    for _ in range(1000):
        partition = Partition(groups=dynamic_grouping.seed_groups)
        ledger = InconsistencyLedger()
        for _ in range(5):
            counts = np.array(ledger.counts) + rng.integers(0, 8, size=27)
            ledger = InconsistencyLedger(
                counts=tuple(int(c) for c in counts),
                threshold=ledger.threshold,
                pool=ledger.pool,
            )
            indicators = [
                Indicators(float(p), float(k))
                for p, k in rng.uniform(0, 100, size=(27, 2))
            ]
            update = update_groups(partition, ledger, indicators, cfg)
            check_partition(update.partition.groups)
            assert update.partition.generation == partition.generation + len(
                update.swaps
            )
            for event in update.swaps:
                assert update.ledger.counts[event.region_a] == 0
                assert update.ledger.counts[event.region_b] == 0
                assert event.region_a not in update.ledger.pool
                assert event.region_b not in update.ledger.pool
            partition = update.partition
            ledger = update.ledger


def test_indicators_from_world(regions, climate):
    """Testing the indicators taken from a world."""
    world = dynamic_grouping.initial_world(regions, climate)
    indicators = dynamic_grouping.indicators_from_world(world)
    assert len(indicators) == 27
    assert indicators[4] == Indicators(regions[4].L0, regions[4].K0)


def test_partition_file(tmp_path):
    """Testing writing and reading the groups."""
    partition = Partition(groups=dynamic_grouping.seed_groups).swap(5, 12)
    path = tmp_path / "groups.txt"
    dynamic_grouping.save_partition(partition, path)
    again = dynamic_grouping.load_partition(path)
    assert again.groups == partition.groups


def test_bad_partition_file(tmp_path):
    """Testing that bad partition files are configuration errors."""
    path = tmp_path / "groups.txt"
    path.write_text("0 1 2\n3 4 five\n")
    with pytest.raises(dynamic_grouping.ConfigurationError):
        dynamic_grouping.load_partition(path)
    path.write_text("0, 1, 2  # too few\n")
    with pytest.raises(dynamic_grouping.ConfigurationError):
        dynamic_grouping.load_partition(path)
    with pytest.raises(dynamic_grouping.ConfigurationError):
        dynamic_grouping.load_partition(tmp_path / "missing.txt")
