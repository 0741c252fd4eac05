# -*- coding: utf-8 -*-

"""Evaluation of an episode: temperature rise, output, the two indices and
the hypervolume they dominate."""

from dataclasses import asdict, dataclass
import logging

import numpy as np

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IndexAnchors:
    """Where the linear climate and economic indices reach 0 and 1."""

    temp_zero: float = 0.0
    temp_one: float = 8.0
    output_scale: float = 10000.0

    def __post_init__(self):
        if self.temp_one <= self.temp_zero:
            raise ValueError("temp_one must be greater than temp_zero")
        if self.output_scale <= 0:
            raise ValueError("The output scale must be positive")


@dataclass(frozen=True)
class EpisodeMetrics:
    temp_rise: float
    gross_output: float
    climate_index: float
    econ_index: float
    hv_contribution: float
    mean_mitigation: float = 0.0

    def as_dict(self):
        return asdict(self)


def _clamp(x):
    return min(1.0, max(0.0, x))


def temperature_rise(trajectory):
    """The temperature at the end of a sequence of ClimateStates."""
    if len(trajectory) == 0:
        raise ValueError("The climate trajectory is empty")
    return trajectory[-1].temperature


def gross_output_total(outputs):
    """The sum over steps and regions of a rectangular array of outputs."""
    outputs = np.asarray(outputs, dtype=float)
    if outputs.size == 0:
        return 0.0
    if outputs.ndim != 2:
        raise ValueError(f"Expected steps x regions outputs, not shape {outputs.shape}")
    return float(outputs.sum())


def climate_index(temp_rise, anchors=IndexAnchors()):
    return _clamp(
        1.0 - (temp_rise - anchors.temp_zero) / (anchors.temp_one - anchors.temp_zero)
    )


def econ_index(gross_output, anchors=IndexAnchors()):
    return _clamp(gross_output / anchors.output_scale)


def hypervolume_contribution(climate, econ):
    """The area a single (climate, econ) point dominates above the origin."""
    for value in (climate, econ):
        if not 0 <= value <= 1:
            raise ValueError(f"Index {value} is not in [0, 1]")
    return climate * econ


def hypervolume_set(points):
    """The area of the union of the rectangles [0, c] x [0, e].

    The points are swept in decreasing c; each slice between consecutive c
    values is as tall as the highest e seen so far.
    """
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    if len(points) == 0:
        return 0.0
    if np.any(points < 0) or np.any(points > 1):
        raise ValueError("Points must lie in [0, 1] x [0, 1]")
    order = np.argsort(-points[:, 0], kind="stable")
    c = points[order, 0]
    e = np.maximum.accumulate(points[order, 1])
    widths = c - np.append(c[1:], 0.0)
    return float(np.sum(widths * e))


def pareto_front(points):
    """A boolean mask of the points that no other point dominates.

    Both indices are to be maximised; duplicates are all kept.
    """
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    mask = np.ones(len(points), dtype=bool)
    for i, p in enumerate(points):
        better_or_equal = np.all(points >= p, axis=1)
        strictly_better = np.any(points > p, axis=1)
        if np.any(better_or_equal & strictly_better):
            mask[i] = False
    return mask


def episode_metrics(
    climate_trajectory,
    net_outputs,
    gross_outputs=None,
    anchors=IndexAnchors(),
    use_gross=False,
    mitigation_rates=None,
):
    """All the metrics for one episode.

    Parameters
    ----------
    climate_trajectory : [ClimateState]
        The climate after each step.
    net_outputs : steps x regions
        Output net of damages and abatement.
    gross_outputs : steps x regions, optional
        Output before damages and abatement, summed instead of the net output
        when `use_gross` is true.
    anchors : IndexAnchors
    mitigation_rates : steps x regions, optional
        The realised mitigation rates, for the mean-mitigation diagnostic.
    """
    temp = temperature_rise(climate_trajectory)
    if use_gross:
        if gross_outputs is None:
            raise ValueError("The gross outputs are needed when summing gross output")
        output = gross_output_total(gross_outputs)
    else:
        output = gross_output_total(net_outputs)
    c = climate_index(temp, anchors)
    e = econ_index(output, anchors)
    if mitigation_rates is None or np.size(mitigation_rates) == 0:
        mean_mu = 0.0
    else:
        mean_mu = float(np.mean(mitigation_rates))
    return EpisodeMetrics(
        temp_rise=float(temp),
        gross_output=output,
        climate_index=c,
        econ_index=e,
        hv_contribution=hypervolume_contribution(c, e),
        mean_mitigation=mean_mu,
    )


def trajectory_metrics(worlds, anchors=IndexAnchors(), use_gross=False):
    """The metrics of an episode given the worlds after step 0, 1, ..., n.

    The initial world is skipped; outputs, temperatures and mitigation rates
    come from the n worlds after it.
    """
    stepped = worlds[1:]
    if len(stepped) == 0:
        raise ValueError("The episode has no steps")
    return episode_metrics(
        [w.climate for w in stepped],
        [[r.last_net_output for r in w.regions] for w in stepped],
        gross_outputs=[[r.last_gross_output for r in w.regions] for w in stepped],
        anchors=anchors,
        use_gross=use_gross,
        mitigation_rates=[[r.mitigation_rate for r in w.regions] for w in stepped],
    )
