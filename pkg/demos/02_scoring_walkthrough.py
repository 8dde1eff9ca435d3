"""
    Follow one property through the evaluation calculus by hand, using
    circuit width (the property with the published calibration).

    Stage 1 - severity: each artifact's value classifies into level 3
    (best, width 1-8), level 2 (9-15), or level 1 (worse than 15).

    Stage 2 - densities: the level tallies NC1/NC2/NC3 divide by the
    artifact total, giving the DC densities in percent.

    Stage 3 - profile function: the strictest band whose level-1 and
    level-2 density ceilings both hold determines the quality interval;
    within a band, worst-dimension slack interpolates the 0-100 value.

    Run:  python3 demos/02_scoring_walkthrough.py
"""

from hybridlens import (
    MetricRecord,
    ModelConfig,
    classify,
    compute_densities,
    evaluate_property,
    profile_quality,
)

config = ModelConfig.default()
thresholds = config.thresholds_for("circuit_width")
bands = config.bands_for("circuit_width")

print("severity classification (width -> level):")
for width in (1, 8, 9, 15, 16, 40):
    print(f"  width {width:>3} -> level {classify(width, thresholds)}")

# A 20-circuit product: one bad, two regular, seventeen good.
widths = [16, 12, 12] + [4] * 17
tallies = {1: 0, 2: 0, 3: 0}
for width in widths:
    tallies[classify(width, thresholds)] += 1
print(f"\ntallies over {len(widths)} circuits: "
      f"NC1={tallies[1]} NC2={tallies[2]} NC3={tallies[3]}")

dc1, dc2, dc3 = compute_densities(tallies[1], tallies[2], tallies[3])
print(f"densities: DC1={dc1}%  DC2={dc2}%  DC3={dc3}%")

band, quality = profile_quality(dc1, dc2, bands)
print(f"profile function: band {band} -> quality {quality}")

# The same pipeline in one call, as project evaluation uses it.
records = [MetricRecord("width", f"circuit-{i}", w) for i, w in enumerate(widths)]
evaluation = evaluate_property(records, thresholds, bands)
print(f"\nevaluate_property: band {evaluation.band}, quality {evaluation.quality}")

# Interpolation inside a band: (8, 16) misses band 4 but sits well
# inside band 3, scoring between 66 and 100 by worst-dimension slack.
band, quality = profile_quality(8.0, 16.0, bands)
print(f"densities (8, 16) -> band {band}, quality {quality:.6f}")
