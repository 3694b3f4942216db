"""
Verification checks, registered by suite.
"""
from .base import (
    CheckSuite,
    PopulationKind,
    CheckOutcome,
    BaseCheck,
    ElementCheck,
    PopulationCheck,
    CheckRegistry,
    describe,
)
from . import stats_checks, code_checks, han_checks, foata_checks, fixed_checks, mahonian_checks  # noqa: F401
from .mahonian_checks import mahonian_outcome, mahonian_tables

__all__ = [
    'CheckSuite',
    'PopulationKind',
    'CheckOutcome',
    'BaseCheck',
    'ElementCheck',
    'PopulationCheck',
    'CheckRegistry',
    'describe',
    'mahonian_outcome',
    'mahonian_tables',
]
