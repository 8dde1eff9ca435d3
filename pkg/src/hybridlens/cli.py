"""Command-line entry point.

Exit codes: 0 success (and quality gate passed, if one was set), 1 the
gate failed, 2 usage or configuration errors, 3 nothing measurable in the
project.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from ._version import __version__
from .config import ConfigError, ModelConfig, load_config
from .report import AnalysabilityReport, build_report, render_json, render_text
from .scanner import Diagnostic, ingest, scan
from .scoring import NoApplicablePropertiesError

EXIT_OK = 0
EXIT_GATE_FAILED = 1
EXIT_USAGE = 2
EXIT_NOTHING_TO_EVALUATE = 3

DEFAULT_JSON_NAME = "analysability.json"


@dataclass
class CliInvocation:
    project_root: str
    config_path: Optional[str] = None
    output_path: Optional[str] = None
    format: str = "text"
    expand_gates: bool = False
    fail_below_level: Optional[int] = None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hybridlens",
        description=(
            "Measure the analysability of a hybrid quantum-classical project: "
            "parse .qasm circuits and classical sources, score the model's "
            "properties, and report a 0-100 value with a 1-5 level."
        ),
    )
    parser.add_argument("project_root", help="directory to analyze")
    parser.add_argument("--config", dest="config_path", metavar="PATH",
                        help="JSON model configuration (defaults are built in)")
    parser.add_argument("--format", choices=("text", "json", "both"), default="text",
                        help="report format(s) to emit (default: text)")
    parser.add_argument("--output", dest="output_path", metavar="PATH",
                        help=f"output file (text default: stdout; json default: {DEFAULT_JSON_NAME})")
    parser.add_argument("--expand-gates", action="store_true",
                        help="inline user-defined gate bodies before measuring")
    parser.add_argument("--fail-below-level", type=int, choices=range(1, 6), metavar="{1..5}",
                        help="exit 1 when the analysability level is below this gate")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def run(invocation: CliInvocation) -> int:
    """Execute the scan -> measure -> score -> report pipeline."""
    try:
        if invocation.config_path is not None:
            config = load_config(invocation.config_path)
        else:
            config = ModelConfig.default()
            config.validate()
    except ConfigError as exc:
        print(f"hybridlens: configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        inventory = scan(invocation.project_root, config)
    except NotADirectoryError as exc:
        print(f"hybridlens: {exc}", file=sys.stderr)
        return EXIT_USAGE

    circuits, facts, diagnostics = ingest(inventory, expand_gates=invocation.expand_gates)
    for path, reason in inventory.skipped:
        diagnostics.append(Diagnostic(path, 0, f"skipped: {reason}"))

    try:
        report = build_report(inventory.root, circuits, facts, diagnostics, config)
    except NoApplicablePropertiesError:
        print(
            "hybridlens: nothing to evaluate: the project contains no "
            "measurable circuits or classical sources",
            file=sys.stderr,
        )
        return EXIT_NOTHING_TO_EVALUATE

    _emit(report, invocation)

    if invocation.fail_below_level is not None:
        if report.analysability_level < invocation.fail_below_level:
            print(
                f"hybridlens: quality gate failed: level {report.analysability_level} "
                f"< required {invocation.fail_below_level}",
                file=sys.stderr,
            )
            return EXIT_GATE_FAILED
    return EXIT_OK


def _emit(report: AnalysabilityReport, invocation: CliInvocation) -> None:
    fmt = invocation.format
    if fmt in ("text", "both"):
        text = render_text(report)
        if fmt == "text" and invocation.output_path:
            Path(invocation.output_path).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
    if fmt in ("json", "both"):
        payload = render_json(report)
        target = Path(invocation.output_path or DEFAULT_JSON_NAME)
        target.write_bytes(payload)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    invocation = CliInvocation(
        project_root=args.project_root,
        config_path=args.config_path,
        output_path=args.output_path,
        format=args.format,
        expand_gates=args.expand_gates,
        fail_below_level=args.fail_below_level,
    )
    return run(invocation)


if __name__ == "__main__":
    raise SystemExit(main())
