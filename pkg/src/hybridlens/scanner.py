"""Project discovery and ingestion.

The walk is depth-first with lexicographically sorted entries so repeated
scans of the same tree inventory files in the same order. Hidden
directories, configured ignore names, and symlinks are skipped with a
recorded reason; unreadable subtrees degrade to skip entries instead of
aborting the scan. Per-file parse failures likewise degrade to
diagnostics: a broken file is itself an analysability finding, not a
reason to lose the rest of the project.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .classical import ClassicalFileFacts, NotTextError, analyze_source
from .config import ModelConfig
from .qasm import QasmError, QuantumCircuit, expand_user_gates, parse_qasm

CIRCUIT_EXTENSION = ".qasm"


@dataclass(frozen=True)
class Diagnostic:
    """A per-file problem that did not abort the run. line 0 = whole file."""

    path: str
    line: int
    message: str


@dataclass
class ProjectInventory:
    root: str
    circuit_files: list[str]
    classical_files: list[str]
    skipped: list[tuple[str, str]]


def scan(root: str | Path, config: ModelConfig) -> ProjectInventory:
    """Inventory circuit and classical source files under `root`."""
    root_path = Path(root)
    if not root_path.is_dir():
        raise NotADirectoryError(f"not a directory: {root}")

    circuit_files: list[str] = []
    classical_files: list[str] = []
    skipped: list[tuple[str, str]] = []
    classical_exts = set(config.classical_extensions)
    ignored = set(config.ignore_dirs)

    def walk(directory: Path) -> None:
        try:
            entries = sorted(directory.iterdir(), key=lambda e: e.name)
        except PermissionError:
            skipped.append((str(directory), "permission denied"))
            return
        for entry in entries:
            if entry.is_symlink():
                skipped.append((str(entry), "symlink not followed"))
                continue
            if entry.is_dir():
                if entry.name.startswith("."):
                    skipped.append((str(entry), "hidden directory"))
                elif entry.name in ignored:
                    skipped.append((str(entry), "ignored directory"))
                else:
                    walk(entry)
            elif entry.is_file():
                suffix = entry.suffix
                if suffix == CIRCUIT_EXTENSION:
                    circuit_files.append(str(entry))
                elif suffix in classical_exts:
                    classical_files.append(str(entry))

    walk(root_path)
    circuit_files.sort()
    classical_files.sort()
    return ProjectInventory(str(root_path), circuit_files, classical_files, skipped)


def ingest(
    inventory: ProjectInventory, expand_gates: bool = False
) -> tuple[list[QuantumCircuit], list[ClassicalFileFacts], list[Diagnostic]]:
    """Parse every inventoried file; failures become diagnostics."""
    circuits: list[QuantumCircuit] = []
    facts: list[ClassicalFileFacts] = []
    diagnostics: list[Diagnostic] = []

    for path in inventory.circuit_files:
        text = _read_text(path, diagnostics)
        if text is None:
            continue
        try:
            circuit = parse_qasm(text, path)
            if expand_gates:
                circuit = expand_user_gates(circuit)
        except QasmError as exc:
            line = exc.span.line if exc.span is not None else 0
            diagnostics.append(Diagnostic(path, line, exc.message))
            continue
        circuits.append(circuit)

    for path in inventory.classical_files:
        text = _read_text(path, diagnostics)
        if text is None:
            continue
        try:
            facts.append(analyze_source(text, path))
        except NotTextError:
            diagnostics.append(Diagnostic(path, 0, "not a text file"))

    return circuits, facts, diagnostics


def _read_text(path: str, diagnostics: list[Diagnostic]) -> str | None:
    try:
        data = Path(path).read_bytes()
    except OSError as exc:
        diagnostics.append(Diagnostic(path, 0, f"unreadable: {exc.strerror or exc}"))
        return None
    if b"\x00" in data:
        diagnostics.append(Diagnostic(path, 0, "binary file"))
        return None
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError:
        diagnostics.append(Diagnostic(path, 0, "not valid UTF-8"))
        return None
