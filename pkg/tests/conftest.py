import io
import json
from dataclasses import dataclass
from typing import Any, Dict, Optional

import pytest

from apps.permutations.domain import Permutation, Word
from apps.permutations.services import parse_input
from apps.verification.checks import CheckRegistry, CheckSuite, ElementCheck


@dataclass
class CliResult:
    """Captured outcome of one `mahonia` invocation."""
    exit_code: int
    stdout: str
    stderr: str

    @property
    def json(self):
        return json.loads(self.stdout)


@pytest.fixture
def api_client():
    """Return DRF API client."""
    from rest_framework.test import APIClient
    return APIClient()


@pytest.fixture
def cli():
    """Run the CLI in-process and capture stdout, stderr and the exit code."""
    from apps.cli.runner import run

    def invoke(*argv) -> CliResult:
        stdout, stderr = io.StringIO(), io.StringIO()
        code = run(list(argv), stdout=stdout, stderr=stderr)
        return CliResult(exit_code=code, stdout=stdout.getvalue(), stderr=stderr.getvalue())

    return invoke


@pytest.fixture
def table_sigma() -> Permutation:
    """The permutation of the worked H example."""
    return parse_input('392648517')


@pytest.fixture
def sample_word() -> Word:
    """A word over {1^3, 2^2, 3^2, 4^2}."""
    return parse_input('211324314')


@pytest.fixture
def failing_check():
    """Register a stats check that fails on every permutation not starting with 1."""

    class FirstValueCheck(ElementCheck):
        name = "first_value_is_one"
        description = "sigma_1 = 1"
        suite = CheckSuite.STATS

        def check(self, element) -> Optional[Dict[str, Any]]:
            if element[0] != 1:
                return {'first': element[0]}
            return None

    CheckRegistry.register(FirstValueCheck)
    yield FirstValueCheck
    CheckRegistry._checks.pop(FirstValueCheck.name, None)
