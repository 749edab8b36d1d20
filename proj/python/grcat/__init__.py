"""Gabriel-Roiter measures and length-category checks on finite instances."""

import json

from ._core import (
    ParseError,
    SizeGuardError,
    Spec,
    SpecError,
    chain_leq,
    fixture,
    generate_an,
)

__all__ = [
    "ParseError",
    "SizeGuardError",
    "Spec",
    "SpecError",
    "chain_leq",
    "check",
    "fixture",
    "generate_an",
    "load",
    "measure_table",
    "report",
]


def load(path):
    return Spec.load(str(path))


def measure_table(spec):
    return json.loads(spec.measure_table_json())


def check(spec, suite="all"):
    return json.loads(spec.check_json(suite))


def report(spec):
    return json.loads(spec.report_json())
