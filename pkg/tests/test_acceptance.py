"""Acceptance criteria 1-10; each prints one PASS/FAIL line, repeated in the run summary."""

import os

import pytest

from conftest import ACCEPTANCE_LINES
from ordcomp import acceptance

JOBS = int(os.environ.get("ORDCOMP_JOBS", "1"))


@pytest.mark.parametrize("number", range(1, len(acceptance.CRITERIA) + 1))
def test_criterion(number):
    r = acceptance.run(number, acceptance.default_seed(), JOBS)
    print(r.line())
    ACCEPTANCE_LINES.append(r.line())
    assert r.passed, r.line()
