"""
Report aggregation and exit policy.

Folds many per-instance reports into one suite-level report, merges report
documents, and maps a document to the CLI exit code.
"""
from typing import Dict, Iterable, List, Optional, Tuple

from ordtopia.errors import DuplicateCheck
from ordtopia.schemas.report import CheckReport, Pair, ReportDocument, Status

# Exit codes are fixed by the CLI contract
EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def aggregate(
    name: str,
    suite: str,
    anchor: str,
    reports: Iterable[CheckReport],
    expected: Optional[List[Pair]] = None,
    seed: Optional[int] = None,
    extra: Optional[List[Pair]] = None,
) -> CheckReport:
    """
    Collapse per-instance reports into one.

    Fails if any instance failed and records the first failure's
    observations; skipped if nothing passed or failed.
    """
    counts = {status: 0 for status in Status}
    first_failure: Optional[CheckReport] = None
    for report in reports:
        counts[report.status] += 1
        if report.status == Status.FAIL and first_failure is None:
            first_failure = report

    observed: List[Pair] = [(f"cases_{status.value}", str(count)) for status, count in counts.items()]
    observed += extra or []
    if first_failure is not None:
        observed += [(f"first_failure.{label}", value) for label, value in first_failure.observed]

    if counts[Status.FAIL]:
        status = Status.FAIL
    elif counts[Status.PASS]:
        status = Status.PASS
    else:
        status = Status.SKIP
    return CheckReport(
        name=name,
        suite=suite,
        anchor=anchor,
        status=status,
        observed=observed,
        expected=expected or [("cases_fail", "0")],
        seed=seed,
    )


def merge_documents(documents: Iterable[ReportDocument]) -> ReportDocument:
    """
    Concatenate documents; summary counts are recomputed.

    Raises:
        DuplicateCheck: If two documents contain the same (suite, name)
    """
    seen: Dict[Tuple[str, str], CheckReport] = {}
    for document in documents:
        for check in document.checks:
            key = check.sort_key()
            if key in seen:
                raise DuplicateCheck(f"Cannot merge: duplicate check {key[0]}/{key[1]}")
            seen[key] = check
    return ReportDocument(checks=list(seen.values()))


def exit_code(document: ReportDocument) -> int:
    return EXIT_FAIL if any(check.status == Status.FAIL for check in document.checks) else EXIT_PASS


def render_text(document: ReportDocument) -> str:
    """Human summary table; JSON remains the contract."""
    rows = [("SUITE", "CHECK", "STATUS", "ANCHOR")]
    rows += [(c.suite, c.name, c.status.value.upper(), c.anchor) for c in document.checks]
    widths = [max(len(row[i]) for row in rows) for i in range(4)]
    lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    summary = document.summary()
    lines.append("")
    lines.append(
        f"pass: {summary['pass']}  fail: {summary['fail']}  skip: {summary['skip']}"
    )
    for check in document.checks:
        if check.status == Status.FAIL:
            lines.append(f"FAILED {check.suite}/{check.name}:")
            lines += [f"  {label} = {value}" for label, value in check.observed]
    return "\n".join(lines) + "\n"
