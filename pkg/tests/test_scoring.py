"""Scoring calculus: classification, densities, profile bands,
aggregation, and their invariants under randomized input."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hybridlens import (
    MetricRecord,
    ModelConfig,
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

WIDTH_THRESHOLDS = SeverityThresholds("circuit_width", 8, 15)
WIDTH_BANDS = ProfileBands(
    "circuit_width",
    (
        ProfileBand(20, 40, 0, 33),
        ProfileBand(15, 30, 33, 66),
        ProfileBand(10, 20, 66, 100),
        ProfileBand(7, 15, 100, 100),
    ),
)

densities = st.floats(min_value=0, max_value=100, allow_nan=False)


# -- classify


@pytest.mark.parametrize(
    "value,expected",
    [(1, 3), (8, 3), (8.0, 3), (9, 2), (12, 2), (15, 2), (16, 1), (100, 1), (0.5, 3)],
)
def test_classify_width_boundaries(value, expected):
    assert classify(value, WIDTH_THRESHOLDS) == expected


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_classify_is_total_and_exclusive(value):
    level = classify(value, WIDTH_THRESHOLDS)
    assert level in (1, 2, 3)
    in_3 = value <= 8
    in_2 = 8 < value <= 15
    in_1 = value > 15
    assert [in_1, in_2, in_3].count(True) == 1
    assert (level == 3) == in_3 and (level == 2) == in_2 and (level == 1) == in_1


def test_thresholds_must_be_ordered():
    with pytest.raises(ValueError):
        SeverityThresholds("broken", 10, 10)


# -- densities


def test_density_example():
    assert compute_densities(1, 2, 17) == (5.0, 10.0, 85.0)


def test_all_good_project():
    for n in (1, 7, 99):
        assert compute_densities(0, 0, n) == (0.0, 0.0, 100.0)


def test_zero_total_not_applicable():
    with pytest.raises(NotApplicableError):
        compute_densities(0, 0, 0)


@given(st.integers(0, 10_000), st.integers(0, 10_000), st.integers(0, 10_000))
def test_densities_sum_to_hundred(nc1, nc2, nc3):
    if nc1 + nc2 + nc3 == 0:
        return
    dc1, dc2, dc3 = compute_densities(nc1, nc2, nc3)
    assert abs(dc1 + dc2 + dc3 - 100.0) < 1e-9


# -- profile function


@pytest.mark.parametrize(
    "dc1,dc2,band,quality",
    [
        (5, 10, 4, 100.0),
        (7, 15, 4, 100.0),
        (25, 50, 0, 0.0),
        (20, 40, 1, 0.0),
        (20.01, 40, 0, 0.0),
        (10, 20, 3, 66.0),
        (15, 30, 2, 33.0),
        (0, 0, 4, 100.0),
    ],
)
def test_profile_band_corners(dc1, dc2, band, quality):
    got_band, got_quality = profile_quality(dc1, dc2, WIDTH_BANDS)
    assert got_band == band
    assert got_quality == pytest.approx(quality, abs=1e-9)


def test_profile_interpolation_worked_example():
    band, quality = profile_quality(8, 16, WIDTH_BANDS)
    assert band == 3
    # slack = min((10-8)/(10-7), (20-16)/(20-15)) = 2/3
    assert quality == pytest.approx(66 + (2 / 3) * 34, abs=1e-9)


def test_dc3_never_constrains_band():
    # Only dc1/dc2 feed band selection; an all-good split is band 4.
    assert profile_quality(0.0, 0.0, WIDTH_BANDS) == (4, 100.0)


@given(densities, densities)
def test_band_quality_consistency(dc1, dc2):
    band, quality = profile_quality(dc1, dc2, WIDTH_BANDS)
    assert 0 <= band <= 4
    assert 0.0 <= quality <= 100.0
    if band == 4:
        assert quality == 100.0
    if band == 0:
        assert quality == 0.0
    if quality == 100.0:
        assert band == 4
    if 0 < band < 4:
        low = WIDTH_BANDS.bands[band - 1].quality_low
        high = WIDTH_BANDS.bands[band - 1].quality_high
        assert low <= quality < high


@given(densities, densities, st.floats(min_value=0, max_value=1))
def test_monotone_in_dc1(dc1, dc2, shrink):
    band, quality = profile_quality(dc1, dc2, WIDTH_BANDS)
    band_lo, quality_lo = profile_quality(dc1 * shrink, dc2, WIDTH_BANDS)
    assert band_lo >= band
    assert quality_lo >= quality - 1e-9


@given(densities, densities, st.floats(min_value=0, max_value=1))
def test_monotone_in_dc2(dc1, dc2, shrink):
    band, quality = profile_quality(dc1, dc2, WIDTH_BANDS)
    band_lo, quality_lo = profile_quality(dc1, dc2 * shrink, WIDTH_BANDS)
    assert band_lo >= band
    assert quality_lo >= quality - 1e-9


def test_bands_must_strictly_decrease():
    with pytest.raises(ValueError):
        ProfileBands(
            "broken",
            (
                ProfileBand(20, 40, 0, 33),
                ProfileBand(20, 30, 33, 66),
                ProfileBand(10, 20, 66, 100),
                ProfileBand(7, 15, 100, 100),
            ),
        )


# -- evaluate_property


def _width_records(widths):
    return [MetricRecord("width", f"c{i}", w) for i, w in enumerate(widths)]


def test_evaluate_property_composition():
    widths = [16, 12, 12] + [4] * 17
    ev = evaluate_property(_width_records(widths), WIDTH_THRESHOLDS, WIDTH_BANDS)
    assert (ev.nc1, ev.nc2, ev.nc3, ev.n_total) == (1, 2, 17, 20)
    assert (ev.dc1, ev.dc2, ev.dc3) == (5.0, 10.0, 85.0)
    assert ev.band == 4
    assert ev.quality == 100.0
    assert ev.applicable


def test_evaluate_property_single_worst_artifact():
    ev = evaluate_property(_width_records([30]), WIDTH_THRESHOLDS, WIDTH_BANDS)
    assert (ev.nc1, ev.nc2, ev.nc3) == (1, 0, 0)
    assert (ev.dc1, ev.dc2, ev.dc3) == (100.0, 0.0, 0.0)
    assert (ev.band, ev.quality) == (0, 0.0)


def test_evaluate_property_empty_is_inapplicable():
    ev = evaluate_property([], WIDTH_THRESHOLDS, WIDTH_BANDS)
    assert not ev.applicable
    assert ev.n_total == 0


@given(st.lists(st.floats(min_value=0, max_value=200, allow_nan=False), min_size=1, max_size=60))
def test_evaluate_property_invariants(values):
    ev = evaluate_property(_width_records(values), WIDTH_THRESHOLDS, WIDTH_BANDS)
    assert ev.nc1 + ev.nc2 + ev.nc3 == ev.n_total == len(values)
    assert abs(ev.dc1 + ev.dc2 + ev.dc3 - 100.0) < 1e-9
    if ev.band == 4:
        assert ev.quality == 100.0
    if ev.band == 0:
        assert ev.quality == 0.0


# -- aggregation


def _evaluation(name, quality):
    return PropertyEvaluation(
        property_name=name, nc3=1, n_total=1, dc3=100.0, band=4, quality=quality, applicable=True
    )


def test_aggregate_weighted_mean():
    evals = [_evaluation("a", 100.0), _evaluation("b", 60.0)]
    value, level = aggregate(evals, {"a": 1.0, "b": 3.0}, (20, 40, 60, 80))
    assert value == pytest.approx(70.0)
    assert level == 4


def test_aggregate_constant_qualities():
    evals = [_evaluation(n, 100.0) for n in "abc"]
    assert aggregate(evals, {n: 1.0 for n in "abc"}, (20, 40, 60, 80)) == (100.0, 5)
    evals = [_evaluation(n, 0.0) for n in "abc"]
    assert aggregate(evals, {n: 1.0 for n in "abc"}, (20, 40, 60, 80)) == (0.0, 1)


def test_aggregate_excludes_inapplicable():
    evals = [_evaluation("a", 40.0), PropertyEvaluation(property_name="b")]
    value, level = aggregate(evals, {"a": 1.0, "b": 1.0}, (20, 40, 60, 80))
    assert value == pytest.approx(40.0)
    assert level == 3  # 40 reaches the second cut point


def test_aggregate_level_boundaries():
    cuts = (20, 40, 60, 80)
    for value, expected in [(0, 1), (19.99, 1), (20, 2), (39.9, 2), (40, 3), (60, 4), (80, 5), (100, 5)]:
        _, level = aggregate([_evaluation("a", value)], {"a": 1.0}, cuts)
        assert level == expected


def test_aggregate_requires_applicable_weight():
    with pytest.raises(NoApplicablePropertiesError):
        aggregate([PropertyEvaluation(property_name="a")], {"a": 1.0}, (20, 40, 60, 80))
    with pytest.raises(NoApplicablePropertiesError):
        aggregate([_evaluation("a", 50.0)], {"a": 0.0}, (20, 40, 60, 80))


@given(
    st.lists(st.floats(min_value=0, max_value=100, allow_nan=False), min_size=1, max_size=8),
    st.floats(min_value=0.01, max_value=1000),
)
def test_aggregate_scale_invariant_in_weights(qualities, scale):
    evals = [_evaluation(f"p{i}", q) for i, q in enumerate(qualities)]
    weights = {f"p{i}": 1.0 + i for i in range(len(qualities))}
    scaled = {name: w * scale for name, w in weights.items()}
    cuts = (20, 40, 60, 80)
    value_a, level_a = aggregate(evals, weights, cuts)
    value_b, level_b = aggregate(evals, scaled, cuts)
    assert value_a == pytest.approx(value_b, abs=1e-9)
    assert level_a == level_b


def test_default_config_weights_feed_aggregate():
    config = ModelConfig.default()
    weights = config.weights()
    assert set(weights) == set(config.properties)
    assert all(w == 1.0 for w in weights.values())
