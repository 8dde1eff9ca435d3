"""Model configuration: per-property thresholds, profile bands, weights,
metric selectors, and scan settings, loadable from JSON.

Circuit width ships the model's published calibration (severity bounds
8/15 and profile ceilings (20,40)/(15,30)/(10,20)/(7,15)). Every other
property ships declared defaults that make the tool runnable out of the
box; all of them are overridable from the config file. Unknown keys are
rejected so config drift fails loudly instead of being ignored.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Any

from .scoring import ProfileBand, ProfileBands, SeverityThresholds

__all__ = [
    "ConfigError",
    "PropertyConfig",
    "ModelConfig",
    "load_config",
    "config_from_dict",
    "METRIC_NAMES",
    "DEFAULT_BANDS",
]


class ConfigError(Exception):
    """Invalid or unknown configuration content."""


# Metric selectors a property may classify on, keyed by extraction domain.
CIRCUIT_METRICS = frozenset(
    {
        "width",
        "depth",
        "gate_complexity_score",
        "conditional_count",
        "quantum_cyclomatic",
        "nonterminal_measure_count",
        "midcircuit_reset_count",
        "auxiliary_qubit_count",
    }
)
FUNCTION_METRICS = frozenset({"function_cyclomatic", "function_code_lines"})
FILE_METRICS = frozenset({"comment_penalty", "duplicate_ratio_pct"})
METRIC_NAMES = CIRCUIT_METRICS | FUNCTION_METRICS | FILE_METRICS

# Quality intervals per band are fixed by the model: 0, [0-33), [33-66),
# [66-100), 100. Only the density ceilings are calibration data.
BAND_QUALITY_INTERVALS = ((0.0, 33.0), (33.0, 66.0), (66.0, 100.0), (100.0, 100.0))

DEFAULT_BANDS: tuple[tuple[float, float], ...] = ((20.0, 40.0), (15.0, 30.0), (10.0, 20.0), (7.0, 15.0))

DEFAULT_CUT_POINTS: tuple[float, ...] = (20.0, 40.0, 60.0, 80.0)
DEFAULT_AUX_PREFIXES: tuple[str, ...] = ("anc", "aux")
DEFAULT_SHINGLE_SIZE = 30
DEFAULT_CLASSICAL_EXTENSIONS: tuple[str, ...] = (".py",)
DEFAULT_IGNORE_DIRS: tuple[str, ...] = ("venv", "node_modules", ".git", "build", "target")


@dataclass(frozen=True)
class PropertyConfig:
    metric: str
    level3_max: float
    level2_max: float
    weight: float = 1.0
    bands: tuple[tuple[float, float], ...] = DEFAULT_BANDS
    enabled: bool = True


def _default_properties() -> dict[str, PropertyConfig]:
    return {
        # Quantum circuit properties. Circuit width carries the published
        # calibration; the rest are shipped defaults.
        "circuit_width": PropertyConfig("width", 8, 15),
        "circuit_depth": PropertyConfig("depth", 25, 60),
        "gate_complexity": PropertyConfig("gate_complexity_score", 30, 100),
        "conditional_instructions": PropertyConfig("conditional_count", 0, 2),
        "quantum_cyclomatic_complexity": PropertyConfig("quantum_cyclomatic", 2, 4),
        "measurement_operations": PropertyConfig("nonterminal_measure_count", 0, 1),
        "reset_operations": PropertyConfig("midcircuit_reset_count", 0, 2),
        "auxiliary_qubits": PropertyConfig("auxiliary_qubit_count", 2, 4),
        # Classical code properties.
        "cyclomatic_complexity": PropertyConfig("function_cyclomatic", 10, 20),
        "method_size": PropertyConfig("function_code_lines", 30, 60),
        "code_documentation": PropertyConfig("comment_penalty", 40, 75),
        "duplicate_code": PropertyConfig("duplicate_ratio_pct", 5, 15),
    }


@dataclass
class ModelConfig:
    properties: dict[str, PropertyConfig] = field(default_factory=_default_properties)
    level_cut_points: tuple[float, ...] = DEFAULT_CUT_POINTS
    auxiliary_register_prefixes: tuple[str, ...] = DEFAULT_AUX_PREFIXES
    duplicate_shingle_size: int = DEFAULT_SHINGLE_SIZE
    classical_extensions: tuple[str, ...] = DEFAULT_CLASSICAL_EXTENSIONS
    ignore_dirs: tuple[str, ...] = DEFAULT_IGNORE_DIRS

    @classmethod
    def default(cls) -> "ModelConfig":
        return cls()

    def validate(self) -> None:
        if len(self.level_cut_points) != 4:
            raise ConfigError("level_cut_points must hold exactly 4 values")
        if list(self.level_cut_points) != sorted(set(self.level_cut_points)):
            raise ConfigError("level_cut_points must be strictly ascending")
        if not all(0.0 < c < 100.0 for c in self.level_cut_points):
            raise ConfigError("level_cut_points must lie strictly between 0 and 100")
        if self.duplicate_shingle_size < 2:
            raise ConfigError("duplicate_shingle_size must be at least 2")
        for ext in self.classical_extensions:
            if not ext.startswith("."):
                raise ConfigError(f"classical extension {ext!r} must start with '.'")
        if not self.properties:
            raise ConfigError("at least one property must be configured")
        enabled_weight = 0.0
        for name, prop in self.properties.items():
            if prop.metric not in METRIC_NAMES:
                raise ConfigError(
                    f"property {name!r}: unknown metric {prop.metric!r} "
                    f"(valid: {', '.join(sorted(METRIC_NAMES))})"
                )
            if prop.weight < 0:
                raise ConfigError(f"property {name!r}: weight must be >= 0")
            if len(prop.bands) != 4:
                raise ConfigError(f"property {name!r}: exactly 4 profile bands required")
            # Constructing the scoring types re-checks ordering constraints.
            try:
                self.thresholds_for(name)
                self.bands_for(name)
            except ValueError as exc:
                raise ConfigError(str(exc)) from exc
            if prop.enabled:
                enabled_weight += prop.weight
        if enabled_weight <= 0.0:
            raise ConfigError("enabled property weights must not all be zero")

    def thresholds_for(self, name: str) -> SeverityThresholds:
        prop = self.properties[name]
        return SeverityThresholds(name, prop.level3_max, prop.level2_max)

    def bands_for(self, name: str) -> ProfileBands:
        prop = self.properties[name]
        bands = tuple(
            ProfileBand(t1, t2, low, high)
            for (t1, t2), (low, high) in zip(prop.bands, BAND_QUALITY_INTERVALS)
        )
        return ProfileBands(name, bands)  # type: ignore[arg-type]

    def weights(self) -> dict[str, float]:
        return {name: prop.weight for name, prop in self.properties.items() if prop.enabled}

    def to_canonical_dict(self) -> dict[str, Any]:
        return {
            "properties": {
                name: {
                    "metric": prop.metric,
                    "level3_max": prop.level3_max,
                    "level2_max": prop.level2_max,
                    "weight": prop.weight,
                    "bands": [list(pair) for pair in prop.bands],
                    "enabled": prop.enabled,
                }
                for name, prop in sorted(self.properties.items())
            },
            "level_cut_points": list(self.level_cut_points),
            "auxiliary_register_prefixes": list(self.auxiliary_register_prefixes),
            "duplicate_shingle_size": self.duplicate_shingle_size,
            "classical_extensions": list(self.classical_extensions),
            "ignore_dirs": list(self.ignore_dirs),
        }

    def fingerprint(self) -> str:
        canonical = json.dumps(self.to_canonical_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()


_TOP_LEVEL_KEYS = frozenset(
    {
        "properties",
        "level_cut_points",
        "auxiliary_register_prefixes",
        "duplicate_shingle_size",
        "classical_extensions",
        "ignore_dirs",
    }
)
_PROPERTY_KEYS = frozenset({"metric", "level3_max", "level2_max", "weight", "bands", "enabled"})


def config_from_dict(data: dict[str, Any]) -> ModelConfig:
    """Build a config by overlaying `data` on the shipped defaults."""
    if not isinstance(data, dict):
        raise ConfigError("configuration document must be a JSON object")
    unknown = set(data) - _TOP_LEVEL_KEYS
    if unknown:
        raise ConfigError(f"unknown configuration key(s): {', '.join(sorted(unknown))}")

    config = ModelConfig.default()
    if "level_cut_points" in data:
        config.level_cut_points = tuple(float(c) for c in _as_list(data, "level_cut_points"))
    if "auxiliary_register_prefixes" in data:
        config.auxiliary_register_prefixes = tuple(
            str(p) for p in _as_list(data, "auxiliary_register_prefixes")
        )
    if "duplicate_shingle_size" in data:
        if not isinstance(data["duplicate_shingle_size"], int):
            raise ConfigError("duplicate_shingle_size must be an integer")
        config.duplicate_shingle_size = data["duplicate_shingle_size"]
    if "classical_extensions" in data:
        config.classical_extensions = tuple(str(e) for e in _as_list(data, "classical_extensions"))
    if "ignore_dirs" in data:
        config.ignore_dirs = tuple(str(d) for d in _as_list(data, "ignore_dirs"))

    for name, overrides in data.get("properties", {}).items():
        if not isinstance(overrides, dict):
            raise ConfigError(f"property {name!r}: expected an object")
        unknown = set(overrides) - _PROPERTY_KEYS
        if unknown:
            raise ConfigError(
                f"property {name!r}: unknown key(s): {', '.join(sorted(unknown))}"
            )
        base = config.properties.get(name)
        if base is None:
            # New properties (configuration extension point) must be fully
            # specified; there is no default to inherit from.
            for required in ("metric", "level3_max", "level2_max"):
                if required not in overrides:
                    raise ConfigError(f"new property {name!r}: missing key {required!r}")
            base = PropertyConfig(
                metric=str(overrides["metric"]),
                level3_max=float(overrides["level3_max"]),
                level2_max=float(overrides["level2_max"]),
            )
            overrides = {k: v for k, v in overrides.items() if k not in ("metric", "level3_max", "level2_max")}
        updates: dict[str, Any] = {}
        if "metric" in overrides:
            updates["metric"] = str(overrides["metric"])
        if "level3_max" in overrides:
            updates["level3_max"] = float(overrides["level3_max"])
        if "level2_max" in overrides:
            updates["level2_max"] = float(overrides["level2_max"])
        if "weight" in overrides:
            updates["weight"] = float(overrides["weight"])
        if "enabled" in overrides:
            if not isinstance(overrides["enabled"], bool):
                raise ConfigError(f"property {name!r}: enabled must be a boolean")
            updates["enabled"] = overrides["enabled"]
        if "bands" in overrides:
            bands = overrides["bands"]
            if not (isinstance(bands, list) and len(bands) == 4):
                raise ConfigError(f"property {name!r}: bands must be a list of 4 [t1, t2] pairs")
            parsed = []
            for pair in bands:
                if not (isinstance(pair, (list, tuple)) and len(pair) == 2):
                    raise ConfigError(f"property {name!r}: each band must be a [t1, t2] pair")
                parsed.append((float(pair[0]), float(pair[1])))
            updates["bands"] = tuple(parsed)
        config.properties[name] = replace(base, **updates)

    config.validate()
    return config


def _as_list(data: dict[str, Any], key: str) -> list[Any]:
    if not isinstance(data[key], list):
        raise ConfigError(f"{key} must be a list")
    return data[key]


def load_config(path: str | Path) -> ModelConfig:
    """Read and validate a JSON configuration file."""
    p = Path(path)
    try:
        raw = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read configuration file {p}: {exc}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {p}: {exc}") from exc
    return config_from_dict(data)
