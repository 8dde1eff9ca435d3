"""qexport: serialize SDK-built quantum circuits to OpenQASM 2.0 files."""

from .builder import Operation, SimpleCircuit
from .export import (
    ExportError,
    ExportManifest,
    LoadError,
    ManifestEntry,
    NoCircuitsFound,
    SerializationError,
    export_module,
    load_circuits,
    serialize_circuit,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "ExportError",
    "ExportManifest",
    "LoadError",
    "ManifestEntry",
    "NoCircuitsFound",
    "Operation",
    "SerializationError",
    "SimpleCircuit",
    "export_module",
    "load_circuits",
    "serialize_circuit",
]
