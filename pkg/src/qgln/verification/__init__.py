"""Verification suites, reports and the classical oracle."""

from .report import Case, SuiteReport
from .suites import ALIASES, SUITES, battery, default_grid, resolve, run_suite, suite_names

__all__ = ["ALIASES", "Case", "SUITES", "SuiteReport", "battery", "default_grid", "resolve", "run_suite", "suite_names"]
