# -*- coding: utf-8 -*-

"""Control parameters for the climate part of the climate-economy engine"""

import logging

logger = logging.getLogger(__name__)


class ClimateParameters(object):
    """The control parameters for the one-box carbon and temperature model.

    The table follows the usual layout: every key gives the default, the kind
    of value, its units and the text used for help and descriptions.
    """

    parameters = {
        "M0": {
            "default": 588.0,
            "kind": "float",
            "default_units": "GtC",
            "format_string": ".1f",
            "description": "Pre-industrial carbon:",
            "help_text": "The pre-industrial atmospheric carbon reference.",
        },
        "carbon_decay": {
            "default": 0.05,
            "kind": "float",
            "default_units": "1/step",
            "format_string": ".3f",
            "description": "Carbon decay:",
            "help_text": (
                "The fraction of the excess carbon stock removed from the "
                "atmosphere each step."
            ),
        },
        "F2x": {
            "default": 3.6813,
            "kind": "float",
            "default_units": "W/m^2",
            "format_string": ".4f",
            "description": "Forcing per doubling:",
            "help_text": "The radiative forcing for a doubling of carbon.",
        },
        "ECS": {
            "default": 3.1,
            "kind": "float",
            "default_units": "degC",
            "format_string": ".2f",
            "description": "Climate sensitivity:",
            "help_text": "The equilibrium warming for a doubling of carbon.",
        },
        "c1": {
            "default": 0.1005,
            "kind": "float",
            "default_units": "degC/(W/m^2)/step",
            "format_string": ".4f",
            "description": "Thermal inertia:",
            "help_text": (
                "The speed with which temperature follows the forcing, per step."
            ),
        },
        "psi2": {
            "default": 0.00236,
            "kind": "float",
            "default_units": "1/degC^2",
            "format_string": ".5f",
            "description": "Damage coefficient:",
            "help_text": "The quadratic coefficient of the damage function.",
        },
        "theta2": {
            "default": 2.6,
            "kind": "float",
            "default_units": None,
            "format_string": ".2f",
            "description": "Abatement exponent:",
            "help_text": "The exponent of the abatement cost curve.",
        },
        "dt": {
            "default": 5.0,
            "kind": "float",
            "default_units": "years",
            "format_string": ".1f",
            "description": "Years per step:",
            "help_text": "The number of model years covered by one step.",
        },
        "horizon": {
            "default": 20,
            "kind": "integer",
            "default_units": "steps",
            "format_string": "d",
            "description": "Horizon:",
            "help_text": (
                "The number of steps in an episode. 20 five-year steps is the "
                "usual century; 10 gives a 50-year horizon."
            ),
        },
        "M_init": {
            "default": 263.0,
            "kind": "float",
            "default_units": "GtC",
            "format_string": ".1f",
            "description": "Initial carbon:",
            "help_text": "The carbon stock above pre-industrial at step 0.",
        },
        "T_init": {
            "default": 1.1,
            "kind": "float",
            "default_units": "degC",
            "format_string": ".2f",
            "description": "Initial temperature:",
            "help_text": "The temperature above pre-industrial at step 0.",
        },
    }

    @classmethod
    def defaults(cls):
        """The default value of every parameter, as a dictionary."""
        return {key: value["default"] for key, value in cls.parameters.items()}
