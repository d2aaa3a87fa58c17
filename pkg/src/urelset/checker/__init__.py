"""Exhaustive bounded checking of the axioms and theorems."""

from .kernel import DEFAULT_KERNEL, Kernel
from .report import Obligation, Report
from .suites import MAX_N_LIMIT, SUITES, run_suite
from .universe import InvalidUniverse, UniverseSpec, enumerate_objects, universe_size

__all__ = [
    "DEFAULT_KERNEL",
    "Kernel",
    "Obligation",
    "Report",
    "MAX_N_LIMIT",
    "SUITES",
    "run_suite",
    "InvalidUniverse",
    "UniverseSpec",
    "enumerate_objects",
    "universe_size",
]
