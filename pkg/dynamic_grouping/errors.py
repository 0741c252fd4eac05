# -*- coding: utf-8 -*-

"""Exceptions that the command line maps onto exit codes."""


class ConfigurationError(ValueError):
    """A configuration, calibration, partition or policy file is invalid."""


class InvariantViolation(RuntimeError):
    """The simulation reached a state that breaks one of its invariants."""
