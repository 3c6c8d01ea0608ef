"""
Command-line interface for ordtopia.

Usage:
    python -m ordtopia.cli repro <example> [options]
    python -m ordtopia.cli verify <suite> [options]
    python -m ordtopia.cli merge <report.json> [<report.json> ...]

Output:
    - JSON report (or a text table with --format text) on stdout or --out
    - Diagnostics and logging on stderr
"""
import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from ordtopia import __description__
from ordtopia.core.runner import run_example, run_suite
from ordtopia.core.summary import EXIT_USAGE, exit_code, merge_documents, render_text
from ordtopia.errors import ConfigError, OrdtopiaError
from ordtopia.schemas.config import (
    DEFAULT_MAX_CARRIER,
    DEFAULT_Q,
    DEFAULT_TRIALS,
    MAX_EXHAUSTIVE_TOPOLOGY_CARRIER,
    OutputFormat,
    RunConfig,
    resolve_seed,
)
from ordtopia.schemas.report import ReportDocument
from ordtopia.suites import EXAMPLE_ALIASES, EXAMPLES, SUITE_ALIASES, SUITES

logger = logging.getLogger("ordtopia")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordtopia",
        description=__description__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    commands = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.JSON.value,
                        help="Report rendering (default: json)")
    common.add_argument("--out", help="Write the report to this path instead of stdout")
    common.add_argument("--verbose", "-v", action="store_true", help="Log debug output to stderr")

    running = argparse.ArgumentParser(add_help=False, parents=[common])
    running.add_argument("--seed", type=int, help="Run seed (falls back to ORDTOPIA_SEED, then 0)")
    running.add_argument("--trials", type=int, default=DEFAULT_TRIALS,
                         help=f"Random instances per randomized check (default: {DEFAULT_TRIALS})")
    running.add_argument("--max-carrier", type=int, default=DEFAULT_MAX_CARRIER,
                         help=f"Largest carrier size to enumerate (default: {DEFAULT_MAX_CARRIER})")
    running.add_argument("--p", type=float, help="Exponent for the l_p distance (p > 1)")
    running.add_argument("--q", default=str(DEFAULT_Q), help="Exponent for the d_q distance, in (0, 1)")

    repro = commands.add_parser("repro", parents=[running], help="Reproduce a worked example")
    repro.add_argument("example", choices=sorted([*EXAMPLES, *EXAMPLE_ALIASES]))

    verify = commands.add_parser("verify", parents=[running], help="Run a verification suite")
    verify.add_argument("suite", choices=sorted([*SUITES, *SUITE_ALIASES]))

    merge = commands.add_parser("merge", parents=[common], help="Merge JSON report files")
    merge.add_argument("paths", nargs="*", help="Report files written by repro or verify")
    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


def _build_config(args: argparse.Namespace) -> RunConfig:
    try:
        q = Fraction(args.q)
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"Invalid config: q={args.q!r} is not a number")
    if args.max_carrier > MAX_EXHAUSTIVE_TOPOLOGY_CARRIER:
        logger.info(
            "Topology enumeration clamped to carrier %d (requested %d)",
            MAX_EXHAUSTIVE_TOPOLOGY_CARRIER, args.max_carrier,
        )
    return RunConfig(
        seed=resolve_seed(args.seed),
        trials=args.trials,
        max_carrier=args.max_carrier,
        format=OutputFormat(args.format),
        output_path=args.out,
        p=args.p,
        q=q,
        verbose=args.verbose,
    )


def _load_document(path: str) -> ReportDocument:
    """Load a report document from a JSON file."""
    file_path = Path(path)
    if not file_path.exists():
        raise FileNotFoundError(f"Report file not found: {path}")
    with open(file_path, "r") as f:
        data = json.load(f)
    return ReportDocument.from_dict(data)


def _write(document: ReportDocument, output_format: OutputFormat, out: Optional[str]) -> None:
    if output_format == OutputFormat.TEXT:
        text = render_text(document)
    else:
        text = json.dumps(document.to_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if out is None:
        sys.stdout.write(text)
        return
    with open(out, "w", encoding="utf-8") as f:
        f.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main CLI entry point.

    Returns:
        int: 0 if every check passed, 1 if any failed, 2 on usage or config errors
    """
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors
        return EXIT_USAGE if exc.code else 0

    _configure_logging(args.verbose)

    try:
        if args.command == "merge":
            documents: List[ReportDocument] = [_load_document(path) for path in args.paths]
            document = merge_documents(documents)
            _write(document, OutputFormat(args.format), args.out)
            return exit_code(document)

        cfg = _build_config(args)
        if args.command == "repro":
            document = run_example(args.example, cfg)
        else:
            document = run_suite(args.suite, cfg)
        _write(document, cfg.format, cfg.output_path)
        return exit_code(document)

    except (OrdtopiaError, OSError, ValueError, KeyError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
