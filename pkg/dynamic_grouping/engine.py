# -*- coding: utf-8 -*-

"""A small DICE/RICE-style climate-economy model.

Each region produces with a Cobb-Douglas technology, pays for abatement and
suffers quadratic damages. Emissions feed one global carbon box whose forcing
drives a single temperature equation. Every function here is pure: the world
is an immutable value and `step_world` returns a new one.
"""

from dataclasses import dataclass, field, fields, replace
import logging
import math

from .engine_parameters import ClimateParameters
from .errors import InvariantViolation

logger = logging.getLogger(__name__)

n_regions = 27


@dataclass(frozen=True)
class RegionParams:
    """The exogenous description of one region."""

    id: int
    A0: float
    gA: float
    L0: float
    gL: float
    K0: float
    sigma0: float
    gSigma: float
    theta1: float
    gamma: float = 0.3
    delta: float = 0.1

    def __post_init__(self):
        if self.A0 <= 0:
            raise ValueError(f"Region {self.id}: A0 must be positive, not {self.A0}")
        if self.L0 <= 0:
            raise ValueError(f"Region {self.id}: L0 must be positive, not {self.L0}")
        if self.K0 < 0:
            raise ValueError(f"Region {self.id}: K0 cannot be negative ({self.K0})")
        if self.sigma0 < 0:
            raise ValueError(
                f"Region {self.id}: sigma0 cannot be negative ({self.sigma0})"
            )
        if not 0 < self.gamma < 1:
            raise ValueError(f"Region {self.id}: gamma must be in (0, 1)")
        if not 0 <= self.delta <= 1:
            raise ValueError(f"Region {self.id}: delta must be in [0, 1]")
        if self.theta1 < 0:
            raise ValueError(f"Region {self.id}: theta1 cannot be negative")

    @classmethod
    def field_names(cls):
        return [f.name for f in fields(cls)]


@dataclass(frozen=True)
class RegionState:
    """The endogenous state of one region after a step."""

    capital: float
    productivity: float
    population: float
    intensity: float
    mitigation_rate: float = 0.0
    savings_rate: float = 0.0
    last_gross_output: float = 0.0
    last_net_output: float = 0.0
    last_emissions: float = 0.0


@dataclass(frozen=True)
class ClimateState:
    """Carbon above the pre-industrial reference and the temperature rise."""

    carbon_stock: float
    temperature: float


@dataclass(frozen=True)
class ClimateParams:
    M0: float = 588.0
    carbon_decay: float = 0.05
    F2x: float = 3.6813
    ECS: float = 3.1
    c1: float = 0.1005
    psi2: float = 0.00236
    theta2: float = 2.6
    dt: float = 5.0
    horizon: int = 20
    M_init: float = 263.0
    T_init: float = 1.1

    def __post_init__(self):
        for name in ("M0", "carbon_decay", "F2x", "ECS", "c1", "psi2", "theta2"):
            if getattr(self, name) <= 0:
                raise ValueError(f"Climate parameter '{name}' must be positive")
        if self.dt <= 0:
            raise ValueError("The step length 'dt' must be positive")
        if int(self.horizon) != self.horizon or self.horizon < 1:
            raise ValueError(f"The horizon must be at least 1 step, not {self.horizon}")
        if self.carbon_decay > 1:
            raise ValueError("The carbon decay cannot exceed 1 per step")
        if self.M_init < 0:
            raise ValueError("The initial carbon stock cannot be negative")
        # The temperature update has to be a contraction, or a warmer start
        # could end colder than a cooler one.
        if self.c1 * self.F2x / self.ECS >= 1:
            raise ValueError("c1 * F2x / ECS must be less than 1")

    @classmethod
    def from_dict(cls, data):
        """Create from a dictionary such as ClimateParameters.defaults()."""
        values = {**ClimateParameters.defaults(), **data}
        values["horizon"] = int(values["horizon"])
        return cls(**{k: values[k] for k in ClimateParameters.parameters})


@dataclass(frozen=True)
class World:
    """The complete state of the simulation at the end of a step."""

    regions: tuple
    climate: ClimateState
    step: int = 0
    total_emissions: float = field(default=0.0)


def production(params, state):
    """Gross output, Y = A K^gamma L^(1 - gamma)."""
    return (
        state.productivity
        * state.capital**params.gamma
        * state.population ** (1 - params.gamma)
    )


def abatement_cost(mu, theta1, theta2):
    """The fraction of output spent on abatement, theta1 mu^theta2."""
    if not 0 <= mu <= 1:
        raise ValueError(f"The mitigation rate must be in [0, 1], not {mu}")
    return theta1 * mu**theta2


def damage_factor(T, psi2):
    """The fraction of output left after damages, 1 / (1 + psi2 T^2)."""
    return 1.0 / (1.0 + psi2 * T * T)


def net_output(Y, mu, T, region, climate):
    """Output net of damages and abatement costs."""
    cost = abatement_cost(mu, region.theta1, climate.theta2)
    return Y * damage_factor(T, climate.psi2) * (1.0 - cost)


def consumption(Q, s):
    """What is left of net output after saving."""
    return (1.0 - s) * Q


def forcing(carbon_stock, climate):
    """Radiative forcing from the carbon above the pre-industrial level."""
    return climate.F2x * math.log2((carbon_stock + climate.M0) / climate.M0)


def initial_world(params, climate):
    """The world at step 0, built from the regions' initial parameters."""
    regions = []
    for p in params:
        state = RegionState(
            capital=p.K0,
            productivity=p.A0,
            population=p.L0,
            intensity=p.sigma0,
        )
        Y = production(p, state)
        Q = net_output(Y, 0.0, climate.T_init, p, climate)
        regions.append(replace(state, last_gross_output=Y, last_net_output=Q))
    return World(
        regions=tuple(regions),
        climate=ClimateState(carbon_stock=climate.M_init, temperature=climate.T_init),
    )


def step_world(world, actions, params, climate):
    """Advance the world one step under the given (mu, s) per region.

    Parameters
    ----------
    world : World
        The current world, which is not changed.
    actions : sequence of (float, float)
        The mitigation and savings rate for each region, in region order.
    params : sequence of RegionParams
        The regions' parameters, in the same order.
    climate : ClimateParams
        The climate parameters.

    Returns
    -------
    World
        The world at the end of the step.
    """
    if len(actions) != len(world.regions) or len(params) != len(world.regions):
        raise ValueError(
            f"Expected {len(world.regions)} actions and parameters, got "
            f"{len(actions)} and {len(params)}"
        )

    dt = climate.dt
    T = world.climate.temperature
    total_emissions = 0.0
    regions = []
    for p, state, (mu, s) in zip(params, world.regions, actions):
        if not 0 <= mu <= 1:
            raise ValueError(f"Region {p.id}: mitigation rate {mu} is not in [0, 1]")
        if not 0 <= s <= 1:
            raise ValueError(f"Region {p.id}: savings rate {s} is not in [0, 1]")
        Y = production(p, state)
        Q = net_output(Y, mu, T, p, climate)
        E = state.intensity * (1.0 - mu) * Y * dt
        total_emissions += E
        regions.append(
            RegionState(
                capital=(1.0 - p.delta) ** dt * state.capital + dt * s * Q,
                productivity=state.productivity * (1.0 + p.gA) ** dt,
                population=state.population * (1.0 + p.gL) ** dt,
                intensity=state.intensity * (1.0 - p.gSigma) ** dt,
                mitigation_rate=mu,
                savings_rate=s,
                last_gross_output=Y,
                last_net_output=Q,
                last_emissions=E,
            )
        )

    M = (1.0 - climate.carbon_decay) * world.climate.carbon_stock + total_emissions
    F = forcing(M, climate)
    T_next = T + climate.c1 * (F - (climate.F2x / climate.ECS) * T)

    if not (math.isfinite(M) and math.isfinite(T_next)):
        raise InvariantViolation(
            f"Step {world.step + 1}: the climate is not finite (M={M}, T={T_next})"
        )
    for p, state in zip(params, regions):
        if not all(math.isfinite(getattr(state, f.name)) for f in fields(state)):
            raise InvariantViolation(
                f"Step {world.step + 1}: region {p.id} has a non-finite state"
            )

    logger.debug(
        f"step {world.step + 1}: emissions = {total_emissions:.3f}, M = {M:.2f}, "
        f"T = {T_next:.3f}"
    )

    return World(
        regions=tuple(regions),
        climate=ClimateState(carbon_stock=M, temperature=T_next),
        step=world.step + 1,
        total_emissions=total_emissions,
    )
