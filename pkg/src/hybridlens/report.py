"""Whole-project evaluation and report rendering.

The JSON rendering is canonical on purpose: keys sorted, arrays ordered by
path or property name, fractional values rounded to at most six digits,
and no timestamps. Two runs over the same tree with the same effective
configuration produce byte-identical documents; provenance comes from the
tool version and the configuration fingerprint instead of wall time.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass

from ._version import __version__
from .classical import ClassicalFileFacts
from .circuit_metrics import QuantumMetricSet, compute_metrics as compute_circuit_metrics
from .code_metrics import ClassicalMetricSet, compute_metrics as compute_classical_metrics
from .config import CIRCUIT_METRICS, FUNCTION_METRICS, ModelConfig
from .qasm import QuantumCircuit
from .scanner import Diagnostic
from .scoring import MetricRecord, PropertyEvaluation, aggregate, evaluate_property


@dataclass
class AnalysabilityReport:
    project_path: str
    circuits: list[QuantumMetricSet]
    classical_files: list[ClassicalMetricSet]
    properties: list[PropertyEvaluation]
    analysability_value: float
    analysability_level: int
    config_fingerprint: str
    tool_version: str
    diagnostics: list[Diagnostic]


def collect_records(
    metric: str,
    circuit_sets: list[QuantumMetricSet],
    classical_sets: list[ClassicalMetricSet],
) -> list[MetricRecord]:
    """Pull the records a property classifies from the measurement sets."""
    if metric in CIRCUIT_METRICS:
        return [
            MetricRecord(metric, ms.path or ms.circuit_name, float(getattr(ms, metric)))
            for ms in circuit_sets
        ]
    if metric in FUNCTION_METRICS:
        records = []
        for cs in classical_sets:
            pairs = (
                cs.function_complexities
                if metric == "function_cyclomatic"
                else cs.function_sizes
            )
            records.extend(
                MetricRecord(metric, f"{cs.path}::{name}", float(value)) for name, value in pairs
            )
        return records
    if metric == "comment_penalty":
        return [
            MetricRecord(metric, cs.path, 100.0 * (1.0 - cs.comment_density))
            for cs in classical_sets
        ]
    if metric == "duplicate_ratio_pct":
        return [
            MetricRecord(metric, cs.path, 100.0 * cs.duplicate_token_ratio)
            for cs in classical_sets
        ]
    raise ValueError(f"unknown metric selector {metric!r}")


def build_report(
    project_path: str,
    circuits: list[QuantumCircuit],
    facts: list[ClassicalFileFacts],
    diagnostics: list[Diagnostic],
    config: ModelConfig,
) -> AnalysabilityReport:
    """Measure, evaluate, and aggregate one project.

    Raises NoApplicablePropertiesError when nothing measurable exists.
    """
    circuit_sets = sorted(
        (compute_circuit_metrics(c, config.auxiliary_register_prefixes) for c in circuits),
        key=lambda ms: ms.path,
    )
    classical_sets = sorted(
        compute_classical_metrics(facts, config.duplicate_shingle_size),
        key=lambda cs: cs.path,
    )

    evaluations: list[PropertyEvaluation] = []
    for name in sorted(config.properties):
        prop = config.properties[name]
        if not prop.enabled:
            continue
        records = collect_records(prop.metric, circuit_sets, classical_sets)
        evaluations.append(
            evaluate_property(records, config.thresholds_for(name), config.bands_for(name))
        )

    value, level = aggregate(evaluations, config.weights(), config.level_cut_points)
    return AnalysabilityReport(
        project_path=project_path,
        circuits=circuit_sets,
        classical_files=classical_sets,
        properties=evaluations,
        analysability_value=value,
        analysability_level=level,
        config_fingerprint=config.fingerprint(),
        tool_version=__version__,
        diagnostics=sorted(diagnostics, key=lambda d: (d.path, d.line)),
    )


def _round6(value: float) -> float:
    return round(float(value), 6)


def render_json(report: AnalysabilityReport) -> bytes:
    """Canonical JSON bytes for the report."""
    doc = {
        "tool_version": report.tool_version,
        "config_fingerprint": report.config_fingerprint,
        "project": report.project_path,
        "circuits": [dataclasses.asdict(ms) for ms in report.circuits],
        "classical_files": [
            {
                "path": cs.path,
                "function_complexities": [[name, value] for name, value in cs.function_complexities],
                "function_sizes": [[name, value] for name, value in cs.function_sizes],
                "comment_density": _round6(cs.comment_density),
                "duplicate_token_ratio": _round6(cs.duplicate_token_ratio),
            }
            for cs in report.classical_files
        ],
        "properties": [
            {
                "property_name": ev.property_name,
                "applicable": ev.applicable,
                "nc1": ev.nc1,
                "nc2": ev.nc2,
                "nc3": ev.nc3,
                "n_total": ev.n_total,
                "dc1": _round6(ev.dc1),
                "dc2": _round6(ev.dc2),
                "dc3": _round6(ev.dc3),
                "band": ev.band,
                "quality": _round6(ev.quality),
            }
            for ev in report.properties
        ],
        "analysability_value": _round6(report.analysability_value),
        "analysability_level": report.analysability_level,
        "diagnostics": [
            {"path": d.path, "line": d.line, "message": d.message} for d in report.diagnostics
        ],
    }
    return (json.dumps(doc, sort_keys=True, indent=2) + "\n").encode("utf-8")


def render_text(report: AnalysabilityReport) -> str:
    """Human-readable summary table with footer and diagnostics."""
    lines = [
        f"Analysability report for {report.project_path}",
        f"(tool {report.tool_version}, config {report.config_fingerprint[:12]})",
        "",
        f"{'Property':<32}{'NC1':>5}{'NC2':>5}{'NC3':>5}"
        f"{'DC1%':>8}{'DC2%':>8}{'DC3%':>8}{'Band':>6}{'Quality':>9}",
    ]
    for ev in report.properties:
        if not ev.applicable:
            lines.append(f"{ev.property_name:<32}{'(no artifacts - not applicable)':>54}")
            continue
        lines.append(
            f"{ev.property_name:<32}{ev.nc1:>5}{ev.nc2:>5}{ev.nc3:>5}"
            f"{ev.dc1:>8.1f}{ev.dc2:>8.1f}{ev.dc3:>8.1f}{ev.band:>6}{ev.quality:>9.2f}"
        )
    lines.append("")
    lines.append(
        f"Analysability value: {report.analysability_value:.2f} / 100"
        f"  (level {report.analysability_level} of 5)"
    )
    if report.diagnostics:
        lines.append("")
        lines.append(f"Diagnostics ({len(report.diagnostics)}):")
        for d in report.diagnostics:
            where = f"{d.path}:{d.line}" if d.line else d.path
            lines.append(f"  {where}: {d.message}")
    return "\n".join(lines) + "\n"
