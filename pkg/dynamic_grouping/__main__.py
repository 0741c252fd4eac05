# !/usr/bin/env python
# -*- coding: utf-8 -*-

"""The command line: simulate, compare, replay and presets.

Exit codes are 0 for success, 1 for an error in the configuration or input
files, and 2 when the simulation breaks one of its invariants or a replay
does not reproduce its transcript.
"""

import argparse
import logging
import sys

from tabulate import tabulate

import seamm_util.printing as printing
from seamm_util.printing import FormattedText as __

from .agents import policy_presets
from .config import load_config
from .errors import ConfigurationError, InvariantViolation
from .harness import (
    emit_report,
    print_comparison,
    print_episode,
    run_comparison,
    run_episode,
)
from .metadata import metadata
from .scenario_parameters import scenario_descriptions, scenarios
from .transcript import read_transcript, replay_transcript

logger = logging.getLogger(__name__)
job = printing.getPrinter()
printer = printing.getPrinter("dynamic_grouping")


class ArgumentParser(argparse.ArgumentParser):
    """Report bad arguments as configuration errors, with exit code 1."""

    def error(self, message):
        raise ConfigurationError(f"{self.prog}: {message}")


def parse_seeds(text):
    """Seeds as 'a..b' (inclusive), 'a,b,c' or a single integer."""
    text = text.strip()
    try:
        if ".." in text:
            first, last = (int(x) for x in text.split(".."))
            if last < first:
                raise ValueError()
            return list(range(first, last + 1))
        seeds = [int(x) for x in text.split(",") if x.strip() != ""]
        if len(seeds) == 0 or min(seeds) < 0:
            raise ValueError()
        return seeds
    except ValueError:
        raise ConfigurationError(f"Cannot understand the seeds '{text}'")


def parse_scenarios(text):
    result = [x.strip() for x in text.split(",") if x.strip() != ""]
    unknown = [x for x in result if x not in scenarios]
    if unknown or len(result) == 0:
        raise ConfigurationError(
            f"Unknown scenarios {unknown}; choose from {', '.join(scenarios)}"
        )
    return result


def create_parser():
    parser = ArgumentParser(
        prog="dynamic-grouping",
        description="Simulate climate negotiations between regions in groups.",
    )
    parser.add_argument(
        "--log-level",
        default="WARNING",
        type=str.upper,
        choices=["CRITICAL", "ERROR", "WARNING", "INFO", "DEBUG"],
        help="The level of the diagnostic messages",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    simulate = subparsers.add_parser("simulate", help="Run one episode")
    simulate.add_argument("--config", default=None, help="The config file")
    simulate.add_argument("--scenario", choices=tuple(scenarios), default=None)
    simulate.add_argument("--seed", type=int, default=None)
    simulate.add_argument("--horizon", type=int, default=None)
    simulate.add_argument("--out", default=None, help="Directory for the report")

    compare = subparsers.add_parser(
        "compare", help="Run several scenarios over several seeds"
    )
    compare.add_argument("--config", default=None, help="The config file")
    compare.add_argument(
        "--scenarios",
        default=",".join(scenarios),
        help="Comma-separated scenarios (default: all five)",
    )
    compare.add_argument(
        "--seeds", default="0..9", help="Seeds as 0..9 or 0,1,2 (default: 0..9)"
    )
    compare.add_argument("--horizon", type=int, default=None)
    compare.add_argument(
        "--workers", type=int, default=None, help="Number of processes to use"
    )
    compare.add_argument("--out", default=None, help="Directory for the report")

    replay = subparsers.add_parser("replay", help="Replay a transcript")
    replay.add_argument("--transcript", required=True)

    subparsers.add_parser("presets", help="List the scenarios and policy presets")

    return parser


def simulate(options):
    config = load_config(options.config).with_overrides(
        scenario=options.scenario, seed=options.seed, horizon=options.horizon
    )
    record = run_episode(config)
    print_episode(record)
    if options.out is not None:
        emit_report([record], options.out)
        printer.normal(f"    Wrote the report to {options.out}")
    return 0


def compare(options):
    config = load_config(options.config).with_overrides(horizon=options.horizon)
    if options.workers is not None and options.workers < 1:
        raise ConfigurationError("The number of workers must be at least 1")
    comparison = run_comparison(
        config,
        parse_scenarios(options.scenarios),
        parse_seeds(options.seeds),
        workers=options.workers,
    )
    print_comparison(comparison)
    if options.out is not None:
        emit_report(comparison.records, options.out, comparison=comparison)
        printer.normal(f"    Wrote the report to {options.out}")
    return 0


def replay(options):
    data = read_transcript(options.transcript)
    try:
        result = replay_transcript(data)
    except (KeyError, TypeError, ValueError) as e:
        raise ConfigurationError(f"The transcript is damaged: {e}")

    results = metadata["results"]
    table = {
        "Metric": [v["title"] for v in results.values()],
        "Recorded": [
            f"{result.recorded_metrics.get(k, float('nan')):{v['format']}}"
            for k, v in results.items()
        ],
        "Replayed": [
            f"{getattr(result.metrics, k):{v['format']}}" for k, v in results.items()
        ],
    }
    text = tabulate(table, headers="keys", tablefmt="simple", disable_numparse=True)
    printer.normal(__(text, indent=4 * " ", wrap=False, dedent=False))
    if not result.matches:
        raise InvariantViolation(
            f"The replay of {options.transcript} differs: "
            + "; ".join(result.mismatches)
        )
    printer.normal("    The replay reproduces the transcript.")
    return 0


def presets(options):
    table = {
        "Scenario": list(scenarios),
        "Negotiation": [f"{m}, {v}" for m, v in scenarios.values()],
        "Description": [scenario_descriptions[s] for s in scenarios],
    }
    printer.normal(tabulate(table, headers="keys", tablefmt="simple"))
    printer.normal("")
    table = {
        "Policy preset": list(policy_presets),
        "Description": [text for _, text in policy_presets.values()],
    }
    printer.normal(tabulate(table, headers="keys", tablefmt="simple"))
    return 0


commands = {
    "simulate": simulate,
    "compare": compare,
    "replay": replay,
    "presets": presets,
}


def run(argv=None):
    """Run the command line, returning the exit code."""
    handler = logging.StreamHandler(sys.stdout)
    handler.setFormatter(logging.Formatter(fmt="{message:s}", style="{"))
    job.addHandler(handler)
    job.setLevel(printing.NORMAL)
    try:
        options = create_parser().parse_args(argv)
        logging.basicConfig(level=options.log_level)
        return commands[options.command](options)
    except ConfigurationError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 1
    except InvariantViolation as e:
        print(f"Invariant violated: {e}", file=sys.stderr)
        return 2
    finally:
        job.removeHandler(handler)


if __name__ == "__main__":
    sys.exit(run())
