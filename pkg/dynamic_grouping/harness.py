# -*- coding: utf-8 -*-

"""Running episodes and scenario comparisons, and reporting on them.

Every step of an episode runs four stages in order: the proposal stage,
the evaluation stage, the action stage and the updating stage. Which of them
do anything depends on the scenario; the others are logged as disabled.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
import itertools
import logging
from pathlib import Path

import numpy as np
import pandas
from scipy import stats
from tabulate import tabulate

import seamm_util.printing as printing
from seamm_util.printing import FormattedText as __

from .agents import make_policies, resolve_policy_map
from .calibration import resolve_calibration
from .engine import consumption, initial_world, n_regions, step_world
from .errors import ConfigurationError, InvariantViolation
from .grouping import (
    InconsistencyLedger,
    form_initial_groups,
    indicators_from_world,
    record_inconsistencies,
    update_groups,
)
from .metadata import metadata
from .metrics import hypervolume_set, pareto_front, trajectory_metrics
from .negotiation import (
    RoundOutcome,
    level_to_rate,
    no_commitments,
    observe,
    run_negotiation_round,
    tolerance,
)
from . import transcript

logger = logging.getLogger(__name__)
job = printing.getPrinter()
printer = printing.getPrinter("dynamic_grouping")

group_modes = ("static-group", "dynamic-group")
stages = ("proposal", "evaluation", "action", "updating")

metric_keys = tuple(metadata["results"])
float_format = "%.12g"


@dataclass(frozen=True)
class RunRecord:
    """Everything that happened in one episode.

    `partitions[0]` is the partition formed at the start and `partitions[t]`
    the one after the updating stage of step t; in scenarios without groups
    they are all None. `swaps` holds (step, SwapEvent) pairs and `ledgers`
    the inconsistency ledger after each step.
    """

    config: object
    regions: tuple
    worlds: tuple
    rounds: tuple
    actions: tuple
    partitions: tuple
    swaps: tuple
    ledgers: tuple
    metrics: object

    @property
    def scenario(self):
        return self.config.scenario

    @property
    def seed(self):
        return self.config.seed


@dataclass(frozen=True)
class Comparison:
    """The per-scenario table of a comparison and the runs behind it."""

    scenarios: tuple
    seeds: tuple
    table: pandas.DataFrame
    hypervolume: float
    records: tuple


def enabled_stages(mode):
    """The stages that do anything in a negotiation mode."""
    if mode == "none":
        return ("action",)
    if mode == "dynamic-group":
        return stages
    return ("proposal", "evaluation", "action")


def check_commitments(step, outcome, partition, actions):
    """Raise InvariantViolation if an action falls below its commitment or a
    group's commitments do not average to the group's level."""
    for commitment, (mu, s) in zip(outcome.commitments, actions):
        if not commitment.is_respected_by(mu, s):
            raise InvariantViolation(
                f"Step {step}: region {commitment.region} played ({mu}, {s}) "
                f"below its commitment ({commitment.min_mitigation}, "
                f"{commitment.min_savings})"
            )
    for group, (level, _) in outcome.group_levels.items():
        members = partition.members(group)
        mean = sum(outcome.commitments[r].min_mitigation for r in members) / len(
            members
        )
        if abs(mean - level_to_rate(level)) > tolerance:
            raise InvariantViolation(
                f"Step {step}: group {group} commits to {mean} on average, "
                f"not its level {level}"
            )


def run_episode(config, regions=None, policy_map=None):
    """Run one episode of a scenario.

    Parameters
    ----------
    config : ScenarioConfig
        The scenario, its seed and all the parameters.
    regions : [RegionParams], optional
        The calibration; read from `config.calibration` if not given.
    policy_map : {int: PolicyConfig}, optional
        The regions' policies; resolved from `config.policy_map` if not given.

    Returns
    -------
    RunRecord
    """
    if regions is None:
        regions = resolve_calibration(config.calibration)
    if policy_map is None:
        policy_map = resolve_policy_map(config.policy_map)
    regions = tuple(regions)
    if len(regions) != n_regions:
        raise ConfigurationError(f"Need {n_regions} regions, not {len(regions)}")

    mode = config.mode
    variant = config.variant
    climate = config.climate
    policies = make_policies(policy_map, regions, episode_seed=config.seed)
    enabled = enabled_stages(mode)

    world = initial_world(regions, climate)
    partition = None
    if mode in group_modes:
        partition = form_initial_groups(regions, config.formation)
    ledger = InconsistencyLedger(threshold=config.inconsistency_threshold)
    commitments = no_commitments(n_regions)

    worlds = [world]
    rounds = []
    actions = []
    partitions = [partition]
    swaps = []
    ledgers = []
    for step in range(1, climate.horizon + 1):
        for stage in stages:
            if stage not in enabled:
                logger.info(
                    f"Step {step}: the {stage} stage is disabled in scenario "
                    f"'{config.scenario}'"
                )

        # Proposal and evaluation stages
        if mode == "none":
            outcome = RoundOutcome(
                mode=mode, variant=variant, commitments=no_commitments(n_regions)
            )
        else:
            logger.debug(f"Step {step}: proposal and evaluation stages")
            outcome = run_negotiation_round(
                mode, variant, policies, world, partition, commitments
            )
        commitments = outcome.commitments

        # Action stage
        step_actions = []
        for region, policy in enumerate(policies):
            obs = observe(region, world, partition, commitments)
            mu, s = policy.act(obs)
            step_actions.append((min(float(mu), 1.0), min(float(s), 1.0)))
        check_commitments(step, outcome, partition, step_actions)
        world = step_world(world, step_actions, regions, climate)

        # Updating stage
        if "updating" in enabled:
            logger.debug(f"Step {step}: updating stage")
            ledger = record_inconsistencies(
                ledger, partition, outcome.group_outcomes, outcome.member_decisions
            )
            update = update_groups(
                partition, ledger, indicators_from_world(world), config.similarity
            )
            partition = update.partition
            ledger = update.ledger
            swaps.extend((step, event) for event in update.swaps)

        worlds.append(world)
        rounds.append(outcome)
        actions.append(tuple(step_actions))
        partitions.append(partition)
        ledgers.append(ledger)

    metrics = trajectory_metrics(worlds, config.anchors, use_gross=config.use_gross)
    logger.info(
        f"{config.scenario}, seed {config.seed}: temperature rise "
        f"{metrics.temp_rise:.3f}, output {metrics.gross_output:.1f}"
    )
    return RunRecord(
        config=config,
        regions=regions,
        worlds=tuple(worlds),
        rounds=tuple(rounds),
        actions=tuple(actions),
        partitions=tuple(partitions),
        swaps=tuple(swaps),
        ledgers=tuple(ledgers),
        metrics=metrics,
    )


def _run_cell(cell):
    config, regions, policy_map = cell
    return run_episode(config, regions, policy_map)


def _summarise(values):
    """Mean, standard deviation and 95% t confidence half-width."""
    values = np.asarray(values, dtype=float)
    mean = float(values.mean())
    n = len(values)
    if n < 2:
        return mean, 0.0, 0.0
    std = float(values.std(ddof=1))
    sem = std / np.sqrt(n)
    if sem == 0:
        return mean, std, 0.0
    ci = stats.t.interval(0.95, n - 1, loc=0, scale=1)
    return mean, std, float((ci[1] - ci[0]) / 2 * sem)


def run_comparison(config, scenarios, seeds, workers=None):
    """Run every scenario with every seed and tabulate the mean metrics.

    Parameters
    ----------
    config : ScenarioConfig
        The base configuration; its scenario and seed are replaced.
    scenarios : [str]
        The scenarios, in the order of the table's rows. A scenario may be
        listed more than once.
    seeds : [int]
    workers : int, optional
        Run the episodes in this many processes. The results do not depend
        on it.

    Returns
    -------
    Comparison
    """
    scenarios = tuple(scenarios)
    seeds = tuple(int(s) for s in seeds)
    if len(scenarios) == 0:
        raise ValueError("Need at least one scenario to compare")
    if len(seeds) == 0:
        raise ValueError("Need at least one seed")

    regions = tuple(resolve_calibration(config.calibration))
    policy_map = resolve_policy_map(config.policy_map)
    cells = [
        (config.with_overrides(scenario=scenario, seed=seed), regions, policy_map)
        for scenario, seed in itertools.product(scenarios, seeds)
    ]
    logger.info(f"Running {len(cells)} episodes")

    if workers is not None and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            records = list(executor.map(_run_cell, cells))
    else:
        records = [_run_cell(cell) for cell in cells]

    rows = []
    for i, scenario in enumerate(scenarios):
        batch = records[i * len(seeds) : (i + 1) * len(seeds)]
        row = {"scenario": scenario, "n_seeds": len(seeds)}
        for key in metric_keys:
            mean, std, half_width = _summarise(
                [getattr(r.metrics, key) for r in batch]
            )
            row[key] = mean
            if len(seeds) > 1:
                row[f"{key}_std"] = std
                row[f"{key}_ci95"] = half_width
        rows.append(row)
    table = pandas.DataFrame(rows)

    points = table[["climate_index", "econ_index"]].to_numpy()
    table["on_front"] = pareto_front(points)
    hypervolume = hypervolume_set(points)

    return Comparison(
        scenarios=scenarios,
        seeds=seeds,
        table=table,
        hypervolume=hypervolume,
        records=tuple(records),
    )


def metrics_table(records):
    """One row of metrics per run."""
    return pandas.DataFrame(
        [
            {"scenario": r.scenario, "seed": r.seed, **r.metrics.as_dict()}
            for r in records
        ],
        columns=["scenario", "seed", *metric_keys],
    )


def trajectory_table(records):
    """The global quantities after every step of every run."""
    rows = []
    for r in records:
        dt = r.config.climate.dt
        for world in r.worlds:
            states = world.regions
            rows.append(
                {
                    "scenario": r.scenario,
                    "seed": r.seed,
                    "step": world.step,
                    "year": world.step * dt,
                    "temperature": world.climate.temperature,
                    "carbon_stock": world.climate.carbon_stock,
                    "gross_output": sum(s.last_gross_output for s in states),
                    "net_output": sum(s.last_net_output for s in states),
                    "emissions": world.total_emissions,
                    "mean_mitigation": float(
                        np.mean([s.mitigation_rate for s in states])
                    ),
                    "mean_savings": float(np.mean([s.savings_rate for s in states])),
                    "consumption": sum(
                        consumption(s.last_net_output, s.savings_rate) for s in states
                    ),
                }
            )
    return pandas.DataFrame(
        rows, columns=["scenario", "seed", *metadata["trajectory"]]
    )


def _groups_text(partition):
    return "|".join(" ".join(str(m) for m in g) for g in partition.groups)


def partition_table(records):
    """The initial partition and every swap, with the groups after it."""
    columns = [
        "scenario",
        "seed",
        "step",
        "generation",
        "event",
        "region_a",
        "region_b",
        "group_a",
        "group_b",
        "groups",
    ]
    rows = []
    for r in records:
        partition = r.partitions[0]
        if partition is None:
            continue
        rows.append(
            {
                "scenario": r.scenario,
                "seed": r.seed,
                "step": 0,
                "generation": partition.generation,
                "event": "formed",
                "groups": _groups_text(partition),
            }
        )
        for step, event in r.swaps:
            partition = partition.swap(event.region_a, event.region_b)
            rows.append(
                {
                    "scenario": r.scenario,
                    "seed": r.seed,
                    "step": step,
                    "generation": partition.generation,
                    "event": "swap",
                    "region_a": event.region_a,
                    "region_b": event.region_b,
                    "group_a": event.group_a,
                    "group_b": event.group_b,
                    "groups": _groups_text(partition),
                }
            )
    table = pandas.DataFrame(rows, columns=columns)
    for column in ("region_a", "region_b", "group_a", "group_b"):
        table[column] = table[column].astype("Int64")
    return table


def comparison_table(comparison):
    """The comparison table with the hypervolume of the set as a last row."""
    footer = {"scenario": "hypervolume_set", "hv_contribution": comparison.hypervolume}
    return pandas.concat(
        [comparison.table, pandas.DataFrame([footer])], ignore_index=True
    )


def emit_report(records, directory, comparison=None):
    """Write the report files for a set of runs.

    The files are ``metrics.csv``, ``trajectories.csv``, ``partitions.csv``
    and a JSON transcript per run; for a comparison also ``comparison.csv``.
    Running again with the same inputs writes identical files.

    Returns
    -------
    [pathlib.Path]
        The files written.
    """
    records = list(records)
    if len(records) == 0:
        raise ValueError("There are no runs to report")
    directory = Path(directory)
    try:
        directory.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ConfigurationError(f"Cannot create the output directory: {e}")

    tables = {
        "metrics.csv": metrics_table(records),
        "trajectories.csv": trajectory_table(records),
        "partitions.csv": partition_table(records),
    }
    if comparison is not None:
        tables["comparison.csv"] = comparison_table(comparison)

    paths = []
    try:
        for filename, table in tables.items():
            path = directory / filename
            table.to_csv(path, index=False, float_format=float_format)
            paths.append(path)
        if len(records) == 1:
            names = ["transcript.json"]
        else:
            names = [f"transcript_{r.scenario}_{r.seed}.json" for r in records]
        for name, record in zip(names, records):
            path = directory / name
            transcript.write_transcript(record, path)
            paths.append(path)
    except OSError as e:
        raise ConfigurationError(f"Cannot write the report in {directory}: {e}")

    logger.info(f"Wrote {len(paths)} report files to {directory}")
    return paths


def print_episode(record):
    """Print the metrics of one run."""
    config = record.config
    job.job(
        __(
            f"Scenario '{config.scenario}' with seed {config.seed}: "
            f"{config.climate.horizon} steps of {config.climate.dt} years, "
            f"{len(record.swaps)} group exchanges.",
            indent=4 * " ",
        )
    )
    table = {
        "Metric": [v["title"] for v in metadata["results"].values()],
        "Value": [
            f"{getattr(record.metrics, k):{v['format']}}"
            for k, v in metadata["results"].items()
        ],
        "Units": [v["units"] for v in metadata["results"].values()],
    }
    text = tabulate(
        table,
        headers="keys",
        tablefmt="simple",
        disable_numparse=True,
        colalign=("left", "decimal", "left"),
    )
    printer.normal(__(text, indent=8 * " ", wrap=False, dedent=False))
    printer.normal("")


def print_comparison(comparison):
    """Print the mean metrics of each scenario and the set's hypervolume."""
    results = metadata["results"]
    table = {"Scenario": list(comparison.table["scenario"])}
    for key, value in results.items():
        column = []
        for _, row in comparison.table.iterrows():
            text = f"{row[key]:{value['format']}}"
            if f"{key}_ci95" in row:
                text += f" ± {row[f'{key}_ci95']:{value['format']}}"
            column.append(text)
        table[value["title"]] = column
    table["Pareto"] = ["*" if x else "" for x in comparison.table["on_front"]]
    text = tabulate(table, headers="keys", tablefmt="simple", disable_numparse=True)
    length = len(text.splitlines()[0])
    seeds = len(comparison.seeds)
    heading = f"Mean over {seeds} seed{'' if seeds == 1 else 's'}".center(length)
    printer.normal(
        __(heading + "\n" + text, indent=8 * " ", wrap=False, dedent=False)
    )
    printer.normal(
        __(
            f"Hypervolume of the scenario set: {comparison.hypervolume:.4f}",
            indent=8 * " ",
        )
    )
    printer.normal("")
