"""hybridlens: analysability measurement for hybrid quantum-classical projects.

Parses OpenQASM 2.0 circuits and Python-style classical sources, computes
structural measurements for both, and evaluates them through severity
classification, density derivation, and banded profile functions into a
0-100 analysability value with a five-level rating.
"""

from ._version import __version__
from .classical import ClassicalFileFacts, FunctionUnit, NotTextError, analyze_source
from .circuit_metrics import (
    QuantumMetricSet,
    auxiliary_qubits,
    circuit_depth,
    circuit_width,
    compute_metrics,
    conditional_metrics,
    gate_complexity,
    measurement_metrics,
    reset_metrics,
)
from .code_metrics import (
    ClassicalMetricSet,
    comment_density,
    cyclomatic,
    duplicate_ratio,
    method_sizes,
)
from .config import ConfigError, ModelConfig, config_from_dict, load_config
from .qasm import (
    GateDef,
    Instruction,
    InstructionKind,
    QasmError,
    QasmSyntaxError,
    QuantumCircuit,
    SourceSpan,
    UndefinedSymbolError,
    UnsupportedVersionError,
    IndexOutOfRangeError,
    GateRecursionError,
    expand_user_gates,
    parse_qasm,
    to_qasm,
)
from .report import AnalysabilityReport, build_report, render_json, render_text
from .scanner import Diagnostic, ProjectInventory, ingest, scan
from .scoring import (
    MetricRecord,
    NoApplicablePropertiesError,
    NotApplicableError,
    ProfileBand,
    ProfileBands,
    PropertyEvaluation,
    SeverityThresholds,
    aggregate,
    classify,
    compute_densities,
    evaluate_property,
    profile_quality,
)

__all__ = [
    "__version__",
    "AnalysabilityReport",
    "ClassicalFileFacts",
    "ClassicalMetricSet",
    "ConfigError",
    "Diagnostic",
    "FunctionUnit",
    "GateDef",
    "GateRecursionError",
    "IndexOutOfRangeError",
    "Instruction",
    "InstructionKind",
    "MetricRecord",
    "ModelConfig",
    "NoApplicablePropertiesError",
    "NotApplicableError",
    "NotTextError",
    "ProfileBand",
    "ProfileBands",
    "ProjectInventory",
    "PropertyEvaluation",
    "QasmError",
    "QasmSyntaxError",
    "QuantumCircuit",
    "QuantumMetricSet",
    "SeverityThresholds",
    "SourceSpan",
    "UndefinedSymbolError",
    "UnsupportedVersionError",
    "aggregate",
    "analyze_source",
    "auxiliary_qubits",
    "build_report",
    "circuit_depth",
    "circuit_width",
    "classify",
    "comment_density",
    "compute_densities",
    "compute_metrics",
    "conditional_metrics",
    "config_from_dict",
    "cyclomatic",
    "duplicate_ratio",
    "evaluate_property",
    "expand_user_gates",
    "gate_complexity",
    "ingest",
    "load_config",
    "measurement_metrics",
    "method_sizes",
    "parse_qasm",
    "profile_quality",
    "render_json",
    "render_text",
    "reset_metrics",
    "scan",
    "to_qasm",
]
