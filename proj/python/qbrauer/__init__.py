"""Exact relation checks for the quantum Brauer algebra on tensor powers of C^n."""

from ._core import (
    GenericityError,
    GuardError,
    compose,
    diagrams,
    duality,
    operator,
    run,
    suites,
    verify,
)

__all__ = [
    "GenericityError",
    "GuardError",
    "compose",
    "diagrams",
    "duality",
    "operator",
    "run",
    "suites",
    "verify",
]


def failures(reports):
    return [r for r in reports if r["verdict"] == "fail"]
