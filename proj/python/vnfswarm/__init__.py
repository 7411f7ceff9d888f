"""Python access to the vnfswarm solver.

Instances and results are plain dicts in the same shape as the JSON files
the command-line tool reads and writes.
"""

import json

from . import _core
from ._core import (
    Error,
    FormatError,
    InvalidInputError,
    InvalidInstanceError,
    SpaceTooLargeError,
)

__all__ = [
    "Error",
    "FormatError",
    "InvalidInputError",
    "InvalidInstanceError",
    "SpaceTooLargeError",
    "decode",
    "dimension",
    "fitness",
    "generate",
    "load_instance",
    "solve",
    "validate",
]


def _text(instance):
    return instance if isinstance(instance, str) else json.dumps(instance)


def load_instance(path):
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def validate(instance):
    """Returns a list of problems; empty when the instance is valid."""
    return _core.validate(_text(instance))


def generate(**spec):
    """Random instance from scenario parameters (servers, demands, seed, ...)."""
    if "demands" in spec:
        spec["demand_count"] = spec.pop("demands")
    return json.loads(_core.generate(json.dumps(spec)))


def dimension(instance):
    return _core.dimension(_text(instance))


def decode(instance, position):
    return json.loads(_core.decode(_text(instance), list(position)))


def fitness(instance, position, config=None):
    cfg = None if config is None else json.dumps(config)
    return json.loads(_core.fitness(_text(instance), list(position), cfg))


def solve(instance, algorithm="pso", seed=None, attempts=100, config=None):
    """Runs pso, random or oracle; returns {placement, report, trace}."""
    cfg = None if config is None else json.dumps(config)
    return json.loads(_core.solve(_text(instance), algorithm, seed, attempts, cfg))
