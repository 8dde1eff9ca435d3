"""Load circuit build scripts and serialize their circuits to OpenQASM 2.0.

A build script either exposes a `build_circuits()` callable returning a
list of circuits, or defines circuits as top-level values. A circuit is
anything the serializer understands: a real Qiskit `QuantumCircuit` (when
Qiskit is importable), or any object with a `to_qasm2()` / `qasm()`
method, such as `qexport.builder.SimpleCircuit`.

Each circuit lands in `<out_dir>/<name>.qasm`; `<out_dir>/manifest.json`
records the exported entries plus any per-circuit serialization failures
(one bad circuit never blocks the others).
"""

from __future__ import annotations

import importlib.util
import json
import re
from dataclasses import dataclass, field
from pathlib import Path


class ExportError(Exception):
    pass


class LoadError(ExportError):
    """The build script failed to import or run."""


class NoCircuitsFound(ExportError):
    """The build script exposed nothing exportable."""


class SerializationError(ExportError):
    """A circuit has no OpenQASM 2.0 form."""


@dataclass(frozen=True)
class ManifestEntry:
    name: str
    path: str
    num_qubits: int
    instruction_count: int


@dataclass
class ExportManifest:
    entries: list[ManifestEntry] = field(default_factory=list)
    errors: list[tuple[str, str]] = field(default_factory=list)  # (circuit name, message)

    def to_dict(self) -> dict:
        return {
            "entries": [
                {
                    "name": e.name,
                    "path": e.path,
                    "num_qubits": e.num_qubits,
                    "instruction_count": e.instruction_count,
                }
                for e in self.entries
            ],
            "errors": [{"name": name, "message": message} for name, message in self.errors],
        }


def load_circuits(script_path: str | Path) -> list[tuple[str, object]]:
    """Run a build script and collect its circuit objects as (name, obj)."""
    path = Path(script_path)
    spec = importlib.util.spec_from_file_location(f"qexport_script_{path.stem}", path)
    if spec is None or spec.loader is None:
        raise LoadError(f"cannot load {path}")
    module = importlib.util.module_from_spec(spec)
    try:
        spec.loader.exec_module(module)
    except Exception as exc:
        raise LoadError(f"{path}: script failed to run: {exc}") from exc

    found: list[tuple[str, object]] = []
    builder = getattr(module, "build_circuits", None)
    if callable(builder):
        try:
            circuits = builder()
        except Exception as exc:
            raise LoadError(f"{path}: build_circuits() failed: {exc}") from exc
        if circuits is None:
            circuits = []
        for i, circuit in enumerate(circuits):
            found.append((_circuit_name(circuit, f"circuit{i}"), circuit))
    else:
        for attr, value in vars(module).items():
            if attr.startswith("_") or isinstance(value, type):
                continue
            if _looks_like_circuit(value):
                found.append((_circuit_name(value, attr), value))
    if not found:
        raise NoCircuitsFound(f"{path}: no circuit objects found")
    return found


def serialize_circuit(circuit: object) -> str:
    """OpenQASM 2.0 text for one circuit, trying the SDK dumper first."""
    qasm = _try_qiskit_dump(circuit)
    if qasm is not None:
        return qasm
    for method in ("to_qasm2", "qasm"):
        dump = getattr(circuit, method, None)
        if callable(dump):
            try:
                return dump()
            except Exception as exc:
                raise SerializationError(f"{method}() failed: {exc}") from exc
    raise SerializationError(
        f"object of type {type(circuit).__name__} has no OpenQASM 2.0 form"
    )


def export_module(script_path: str | Path, out_dir: str | Path) -> ExportManifest:
    """Export every circuit a build script exposes; write the manifest."""
    circuits = load_circuits(script_path)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    manifest = ExportManifest()
    used_names: set[str] = set()
    for name, circuit in circuits:
        safe = _unique_name(_sanitize(name), used_names)
        try:
            qasm = serialize_circuit(circuit)
        except SerializationError as exc:
            manifest.errors.append((name, str(exc)))
            continue
        used_names.add(safe)
        target = out / f"{safe}.qasm"
        target.write_text(qasm, encoding="utf-8")
        manifest.entries.append(
            ManifestEntry(
                name=safe,
                path=str(target),
                num_qubits=int(getattr(circuit, "num_qubits", 0)),
                instruction_count=_instruction_count(circuit, qasm),
            )
        )
    (out / "manifest.json").write_text(
        json.dumps(manifest.to_dict(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return manifest


def _try_qiskit_dump(circuit: object) -> str | None:
    try:
        from qiskit import QuantumCircuit  # type: ignore
        from qiskit import qasm2  # type: ignore
    except ImportError:
        return None
    if isinstance(circuit, QuantumCircuit):
        try:
            return qasm2.dumps(circuit)
        except Exception as exc:  # qasm2.QASM2ExportError and friends
            raise SerializationError(f"SDK export failed: {exc}") from exc
    return None


def _looks_like_circuit(value: object) -> bool:
    if not isinstance(getattr(value, "num_qubits", None), int):
        return False
    return any(callable(getattr(value, m, None)) for m in ("to_qasm2", "qasm", "draw"))


def _circuit_name(circuit: object, fallback: str) -> str:
    name = getattr(circuit, "name", None)
    return name if isinstance(name, str) and name else fallback


def _sanitize(name: str) -> str:
    cleaned = re.sub(r"[^A-Za-z0-9_.-]+", "_", name).strip("._-")
    return cleaned or "circuit"


def _unique_name(name: str, used: set[str]) -> str:
    if name not in used:
        return name
    i = 2
    while f"{name}-{i}" in used:
        i += 1
    return f"{name}-{i}"


_DECLARATION_PREFIXES = ("OPENQASM", "include", "qreg", "creg", "gate", "opaque", "//")


def _instruction_count(circuit: object, qasm: str) -> int:
    data = getattr(circuit, "data", None)
    if data is not None:
        try:
            return len(data)
        except TypeError:
            pass
    count = 0
    for line in qasm.splitlines():
        stripped = line.strip()
        if stripped and not stripped.startswith(_DECLARATION_PREFIXES):
            count += 1
    return count
