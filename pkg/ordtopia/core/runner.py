"""
Suite orchestrator.

Looks up a suite or reproduction by id, drives it, and times each check.
Stateless: the same id and config always produce the same checks.
"""
import logging
import time
from typing import Callable, Dict, Iterator, List

from ordtopia.errors import ConfigError
from ordtopia.schemas.config import RunConfig
from ordtopia.schemas.report import CheckReport, ReportDocument
from ordtopia.suites import EXAMPLE_ALIASES, EXAMPLES, SUITE_ALIASES, SUITES

logger = logging.getLogger(__name__)

SuiteFn = Callable[[RunConfig], Iterator[CheckReport]]


def run_suite(suite_id: str, cfg: RunConfig) -> ReportDocument:
    """
    Run one verification suite by id or alias.

    Raises:
        ConfigError: If suite_id is unknown
    """
    return _run(SUITE_ALIASES.get(suite_id, suite_id), SUITES, "suite", cfg)


def run_example(example_id: str, cfg: RunConfig) -> ReportDocument:
    """
    Reproduce one worked example by id or alias.

    Raises:
        ConfigError: If example_id is unknown
    """
    return _run(EXAMPLE_ALIASES.get(example_id, example_id), EXAMPLES, "example", cfg)


def _run(key: str, registry: Dict[str, SuiteFn], kind: str, cfg: RunConfig) -> ReportDocument:
    if key not in registry:
        raise ConfigError(f"Unknown {kind} '{key}'; choose from {', '.join(sorted(registry))}")
    logger.info("Running %s %s (seed=%d, trials=%d)", kind, key, cfg.seed, cfg.trials)
    checks = _timed(registry[key](cfg))
    document = ReportDocument(checks=checks)
    logger.info("Finished %s %s: %s", kind, key, document.summary())
    return document


def _timed(checks: Iterator[CheckReport]) -> List[CheckReport]:
    """Drain a check generator, charging each check with the time spent producing it."""
    out = []
    start = time.perf_counter()
    for check in checks:
        now = time.perf_counter()
        check.elapsed_ms = int((now - start) * 1000)
        logger.debug("%s/%s: %s (%d ms)", check.suite, check.name, check.status.value, check.elapsed_ms)
        out.append(check)
        start = now
    return out
