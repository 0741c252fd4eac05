# -*- coding: utf-8 -*-

"""Control parameters for a scenario run, by section of the config file"""

import logging

from .engine_parameters import ClimateParameters

logger = logging.getLogger(__name__)

# scenario name -> (negotiation mode, negotiation variant)
scenarios = {
    "none": ("none", "mitigation-only"),
    "bilateral": ("bilateral", "mitigation-only"),
    "static-mitigation": ("static-group", "mitigation-only"),
    "static-mitigation-saving": ("static-group", "mitigation+savings"),
    "dynamic": ("dynamic-group", "mitigation+savings"),
}

scenario_descriptions = {
    "none": "No negotiation; every region follows its own preference.",
    "bilateral": "Every region proposes a mitigation level to every other region.",
    "static-mitigation": "Nine fixed groups negotiate mitigation only.",
    "static-mitigation-saving": "Nine fixed groups negotiate mitigation and savings.",
    "dynamic": (
        "Groups negotiate mitigation and savings; dissenting regions are "
        "exchanged between groups."
    ),
}


class ScenarioParameters(object):
    """The parameters of a scenario, as they appear in the config file."""

    parameters = {
        "scenario": {
            "scenario": {
                "default": "dynamic",
                "kind": "enumeration",
                "default_units": None,
                "format_string": "s",
                "enumeration": tuple(scenarios),
                "description": "Scenario:",
                "help_text": "Which negotiation protocol to run.",
            },
            "horizon": {
                **ClimateParameters.parameters["horizon"],
            },
            "dt": {
                **ClimateParameters.parameters["dt"],
            },
            "calibration": {
                "default": "synthetic:0",
                "kind": "string",
                "default_units": None,
                "format_string": "s",
                "description": "Calibration:",
                "help_text": (
                    "The path of a calibration CSV file, or 'synthetic:<seed>' "
                    "for the generated calibration."
                ),
            },
            "policy_map": {
                "default": "paper-table",
                "kind": "string",
                "default_units": None,
                "format_string": "s",
                "description": "Policies:",
                "help_text": "A policy preset name or a policy assignment file.",
            },
            "formation": {
                "default": "seed-table",
                "kind": "enumeration",
                "default_units": None,
                "format_string": "s",
                "enumeration": ("seed-table", "principled"),
                "description": "Initial groups:",
                "help_text": (
                    "Use the published initial groups, or form them from the "
                    "regions' capital and population."
                ),
            },
            "output_measure": {
                "default": "net",
                "kind": "enumeration",
                "default_units": None,
                "format_string": "s",
                "enumeration": ("net", "gross"),
                "description": "Output summed:",
                "help_text": (
                    "Sum the output net of damages and abatement, or the gross "
                    "output before them."
                ),
            },
            "seed": {
                "default": 0,
                "kind": "integer",
                "default_units": None,
                "format_string": "d",
                "description": "Seed:",
                "help_text": "The seed of the episode's random generators.",
            },
        },
        "grouping": {
            "similarity_threshold": {
                "default": 0.1,
                "kind": "float",
                "default_units": None,
                "format_string": ".3f",
                "description": "Similarity threshold:",
                "help_text": (
                    "Two pooled regions closer than this in normalised "
                    "population and capital may swap groups."
                ),
            },
            "pop_scale": {
                "default": 100.0,
                "kind": "float",
                "default_units": "millions",
                "format_string": ".1f",
                "description": "Population scale:",
                "help_text": "The population difference that counts as 1.",
            },
            "cap_scale": {
                "default": 100.0,
                "kind": "float",
                "default_units": "output",
                "format_string": ".1f",
                "description": "Capital scale:",
                "help_text": "The capital difference that counts as 1.",
            },
            "inconsistency_threshold": {
                "default": 18,
                "kind": "integer",
                "default_units": None,
                "format_string": "d",
                "description": "Inconsistency threshold:",
                "help_text": (
                    "A region that has disagreed with its group more often than "
                    "this becomes a candidate for an exchange."
                ),
            },
        },
        "anchors": {
            "temp_zero": {
                "default": 0.0,
                "kind": "float",
                "default_units": "degC",
                "format_string": ".2f",
                "description": "Best temperature:",
                "help_text": "The temperature rise giving a climate index of 1.",
            },
            "temp_one": {
                "default": 8.0,
                "kind": "float",
                "default_units": "degC",
                "format_string": ".2f",
                "description": "Worst temperature:",
                "help_text": "The temperature rise giving a climate index of 0.",
            },
            "output_scale": {
                "default": 10000.0,
                "kind": "float",
                "default_units": "output",
                "format_string": ".1f",
                "description": "Output scale:",
                "help_text": "The summed output giving an economic index of 1.",
            },
        },
        "climate": {
            key: value
            for key, value in ClimateParameters.parameters.items()
            if key not in ("dt", "horizon")
        },
    }

    @classmethod
    def defaults(cls):
        """The default values, by section."""
        return {
            section: {key: value["default"] for key, value in table.items()}
            for section, table in cls.parameters.items()
        }
