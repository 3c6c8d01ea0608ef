"""
Tests for the suite orchestrator.
"""
import pytest

from ordtopia.core.runner import run_example, run_suite
from ordtopia.errors import ConfigError
from ordtopia.schemas.config import RunConfig
from ordtopia.schemas.report import Status


def test_shifted_blocks_reproduces():
    document = run_example("svensson-seq", RunConfig())

    assert len(document.checks) == 32
    assert document.summary() == {"pass": 32, "fail": 0, "skip": 0}
    first = document.checks[0]
    assert first.name == "shifted-blocks-n01"
    assert ("d_s", "1") in first.observed
    assert all(("x<=l", "True") in c.observed and ("l<=x", "False") in c.observed for c in document.checks)


def test_lp_uses_requested_exponent():
    document = run_example("lsupnorm", RunConfig(p=2.5))

    assert [c.name for c in document.checks] == ["shifted-blocks-lp-p2.5"]
    assert document.checks[0].passed


def test_half_threshold_reproduces():
    document = run_example("eneg", RunConfig())

    assert len(document.checks) == 21
    assert all(c.status == Status.PASS for c in document.checks)


def test_half_threshold_zero_sequence_is_graded_below():
    """x_1 is the zero sequence: literal verdict x<y, every later n incomparable."""
    checks = {c.name: c for c in run_example("eneg", RunConfig()).checks}

    assert ("literal", "x<y") in checks["half-threshold-n01"].observed
    assert ("literal", "x<y") in checks["half-threshold-n01"].expected
    assert all(("literal", "x|y") in checks[f"half-threshold-n{n:02d}"].observed for n in range(2, 21))


def test_aliases_resolve_to_canonical_examples():
    alias = run_example("half-threshold", RunConfig())
    canonical = run_example("eneg", RunConfig())

    assert [c.to_dict() for c in alias.checks] == [c.to_dict() for c in canonical.checks]
    assert run_suite("welfare-axioms", RunConfig(trials=20)).checks[0].suite == "axioms-overtaking"


def test_overtaking_demo_reproduces():
    document = run_example("overtaking-demo", RunConfig())

    assert all(c.passed for c in document.checks)
    assert "overtaking-demo-dfsc-linear-control" in [c.name for c in document.checks]


def test_unknown_ids():
    with pytest.raises(ConfigError, match="Unknown example 'nope'"):
        run_example("nope", RunConfig())
    with pytest.raises(ConfigError, match="Unknown suite 'nope'; choose from"):
        run_suite("nope", RunConfig())


def test_checks_are_timed():
    document = run_example("simplex", RunConfig())

    assert all(c.elapsed_ms >= 0 for c in document.checks)
    assert set(document.to_dict()["timing"]) == {f"repro/{c.name}" for c in document.checks}
