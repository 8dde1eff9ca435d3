"""Command line: `qexport export <script.py> --out <dir>`."""

from __future__ import annotations

import argparse
import sys

from .export import ExportError, LoadError, NoCircuitsFound, export_module


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qexport",
        description="Serialize circuits from a build script to OpenQASM 2.0 files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    export = sub.add_parser("export", help="run a build script and export its circuits")
    export.add_argument("script_path", help="Python script exposing circuits")
    export.add_argument("--out", required=True, metavar="DIR", help="output directory")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        manifest = export_module(args.script_path, args.out)
    except (LoadError, NoCircuitsFound) as exc:
        print(f"qexport: {exc}", file=sys.stderr)
        return 1
    except ExportError as exc:
        print(f"qexport: {exc}", file=sys.stderr)
        return 1
    for entry in manifest.entries:
        print(f"exported {entry.name}: {entry.path} "
              f"({entry.num_qubits} qubits, {entry.instruction_count} instructions)")
    for name, message in manifest.errors:
        print(f"qexport: failed to serialize {name!r}: {message}", file=sys.stderr)
    return 0 if manifest.entries else 1


if __name__ == "__main__":
    raise SystemExit(main())
