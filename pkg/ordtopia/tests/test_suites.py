"""
Smoke tests for every verification suite on small settings.
"""
import pytest

from ordtopia.core.runner import run_suite
from ordtopia.schemas.config import RunConfig
from ordtopia.schemas.report import Status
from ordtopia.suites import SUITES

SMALL = RunConfig(seed=3, trials=20, max_carrier=3)


@pytest.mark.parametrize("suite_id", sorted(SUITES))
def test_suite_has_no_failures(suite_id):
    document = run_suite(suite_id, SMALL)
    failed = [c.name for c in document.checks if c.status == Status.FAIL]

    assert document.checks
    assert failed == []
    assert {c.suite for c in document.checks} == {suite_id}


def test_exhaustive_counts_are_recorded():
    document = run_suite("lgiltza", SMALL)

    assert [c.name for c in document.checks] == [f"refinement-exhaustive-n{n}" for n in (1, 2, 3)]
    # 29 preorders on three points give 29² ordered pairs
    assert ("cases_pass", str(29 * 29)) in document.checks[-1].observed
