# -*- coding: utf-8 -*-

"""Control parameters for the regions' negotiating policies"""

import logging

logger = logging.getLogger(__name__)


class PolicyParameters(object):
    """The parameters of one region's policy.

    These are the keys allowed in each section of a policy assignment file.
    """

    parameters = {
        "kind": {
            "default": "cooperative",
            "kind": "enumeration",
            "default_units": None,
            "format_string": "s",
            "enumeration": ("selfish", "cooperative", "adaptive-threshold", "random"),
            "description": "Policy:",
            "help_text": (
                "How the region negotiates. Selfish regions propose and accept "
                "nothing; cooperative ones propose their target and accept "
                "everything; adaptive ones accept up to what they can afford; "
                "random ones draw their choices."
            ),
        },
        "target_level": {
            "default": 7,
            "kind": "integer",
            "default_units": None,
            "format_string": "d",
            "description": "Target mitigation level:",
            "help_text": "The mitigation level 0..10 a cooperative region wants.",
        },
        "capacity_slope": {
            "default": 0.3,
            "kind": "float",
            "default_units": None,
            "format_string": ".3f",
            "description": "Capacity slope:",
            "help_text": (
                "For adaptive regions, the highest acceptable mitigation level "
                "is this divided by the region's abatement cost coefficient."
            ),
        },
        "savings_level": {
            "default": 5,
            "kind": "integer",
            "default_units": None,
            "format_string": "d",
            "description": "Requested savings level:",
            "help_text": (
                "The savings level 0..10 cooperative and adaptive regions ask "
                "of others."
            ),
        },
        "seed": {
            "default": 0,
            "kind": "integer",
            "default_units": None,
            "format_string": "d",
            "description": "Random seed:",
            "help_text": (
                "Mixed with the episode's seed to seed a random region's "
                "generators."
            ),
        },
    }

    @classmethod
    def defaults(cls):
        return {key: value["default"] for key, value in cls.parameters.items()}
