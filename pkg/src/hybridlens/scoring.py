"""Evaluation calculus: severity classification, density derivation,
banded profile functions, and aggregation to the 0-100 value with its
five-level rating.

Per-artifact values classify into severity levels 3 (best) / 2 / 1 against
two inclusive upper bounds. Level tallies divide by the artifact total to
give densities in percent. A profile function picks the strictest band
whose level-1 and level-2 density ceilings both hold, then interpolates a
quality value inside the band's interval by worst-dimension slack:

    s = min_i clamp((t_i(b) - dc_i) / (t_i(b) - t_i(b+1)), 0, 1)

which is continuous, deterministic, and monotone: lowering either density
never lowers band or quality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class NotApplicableError(ValueError):
    """Raised when a derived metric is requested for zero artifacts."""


class NoApplicablePropertiesError(Exception):
    """Nothing to aggregate: no applicable property carries weight."""


@dataclass(frozen=True)
class SeverityThresholds:
    """Inclusive upper bounds of the best (level 3) and middle (level 2)
    ranges; higher measured values are always worse."""

    property_name: str
    level3_max: float
    level2_max: float

    def __post_init__(self) -> None:
        if not self.level3_max < self.level2_max:
            raise ValueError(
                f"{self.property_name}: level3_max ({self.level3_max}) must be "
                f"below level2_max ({self.level2_max})"
            )


@dataclass(frozen=True)
class ProfileBand:
    """Density ceilings and quality interval for one profile row."""

    t1: float
    t2: float
    quality_low: float
    quality_high: float


@dataclass(frozen=True)
class ProfileBands:
    """Four bands ordered best-last; band 0 (quality 0) is implicit."""

    property_name: str
    bands: tuple[ProfileBand, ProfileBand, ProfileBand, ProfileBand]

    def __post_init__(self) -> None:
        for prev, cur in zip(self.bands, self.bands[1:]):
            if not (cur.t1 < prev.t1 and cur.t2 < prev.t2):
                raise ValueError(
                    f"{self.property_name}: band thresholds must strictly decrease"
                )


@dataclass(frozen=True)
class MetricRecord:
    """One named numeric measurement attached to one artifact."""

    metric: str
    artifact: str
    value: float


@dataclass(frozen=True)
class PropertyEvaluation:
    property_name: str
    nc1: int = 0
    nc2: int = 0
    nc3: int = 0
    n_total: int = 0
    dc1: float = 0.0
    dc2: float = 0.0
    dc3: float = 0.0
    band: int = 0
    quality: float = 0.0
    applicable: bool = False


def classify(value: float, thresholds: SeverityThresholds) -> int:
    """Severity level in {1, 2, 3}; boundary values take the better level."""
    if value <= thresholds.level3_max:
        return 3
    if value <= thresholds.level2_max:
        return 2
    return 1


def compute_densities(nc1: int, nc2: int, nc3: int) -> tuple[float, float, float]:
    """Level tallies to percentages of the artifact total."""
    total = nc1 + nc2 + nc3
    if total == 0:
        raise NotApplicableError("no artifacts to derive densities from")
    return 100.0 * nc1 / total, 100.0 * nc2 / total, 100.0 * nc3 / total


def profile_quality(dc1: float, dc2: float, bands: ProfileBands) -> tuple[int, float]:
    """Band selection plus within-band interpolated quality.

    The best-density share never constrains band choice; only the level-1
    and level-2 densities are ceiling-checked.
    """
    selected = 0
    for b, band in enumerate(bands.bands, start=1):
        if dc1 <= band.t1 and dc2 <= band.t2:
            selected = b
    if selected == 0:
        return 0, 0.0
    band = bands.bands[selected - 1]
    if selected == len(bands.bands):
        return selected, 100.0
    nxt = bands.bands[selected]
    slack = min(
        _clamp((band.t1 - dc1) / (band.t1 - nxt.t1)),
        _clamp((band.t2 - dc2) / (band.t2 - nxt.t2)),
    )
    return selected, band.quality_low + slack * (band.quality_high - band.quality_low)


def _clamp(x: float) -> float:
    return 0.0 if x < 0.0 else 1.0 if x > 1.0 else x


def evaluate_property(
    records: Iterable[MetricRecord],
    thresholds: SeverityThresholds,
    bands: ProfileBands,
) -> PropertyEvaluation:
    """Classify every record, derive densities, and score the property.

    An empty record list yields an inapplicable evaluation instead of an
    error so absent artifact kinds never poison a project run.
    """
    tallies = {1: 0, 2: 0, 3: 0}
    for record in records:
        tallies[classify(record.value, thresholds)] += 1
    total = tallies[1] + tallies[2] + tallies[3]
    if total == 0:
        return PropertyEvaluation(property_name=thresholds.property_name)
    dc1, dc2, dc3 = compute_densities(tallies[1], tallies[2], tallies[3])
    band, quality = profile_quality(dc1, dc2, bands)
    return PropertyEvaluation(
        property_name=thresholds.property_name,
        nc1=tallies[1],
        nc2=tallies[2],
        nc3=tallies[3],
        n_total=total,
        dc1=dc1,
        dc2=dc2,
        dc3=dc3,
        band=band,
        quality=quality,
        applicable=True,
    )


def aggregate(
    evaluations: Sequence[PropertyEvaluation],
    weights: dict[str, float],
    cut_points: Sequence[float],
) -> tuple[float, int]:
    """Weighted mean of applicable property qualities plus its 1-5 level.

    Inapplicable evaluations are excluded rather than scored. The level is
    1 plus the number of cut points at or below the value.
    """
    weighted = 0.0
    weight_sum = 0.0
    for ev in evaluations:
        if not ev.applicable:
            continue
        w = weights.get(ev.property_name, 0.0)
        if w <= 0.0:
            continue
        weighted += w * ev.quality
        weight_sum += w
    if weight_sum == 0.0:
        raise NoApplicablePropertiesError("no applicable property carries weight")
    value = weighted / weight_sum
    level = 1 + sum(1 for cut in cut_points if value >= cut)
    return value, level
