"""Acceptance criteria.

One test per criterion, each pinned to its stated tolerance and runtime
budget; the conftest hook prints a PASS/FAIL line per criterion.
"""

import json
import random
import time

from hybridlens import (
    ModelConfig,
    analyze_source,
    build_report,
    circuit_depth,
    classify,
    compute_densities,
    compute_metrics,
    duplicate_ratio,
    ingest,
    profile_quality,
    render_json,
    scan,
)
from hybridlens.cli import main

from conftest import load_qasm
from test_circuit_metrics import dag_depth
from test_code_metrics import brute_force_ratios
from test_scoring import WIDTH_BANDS, WIDTH_THRESHOLDS


def test_table1_severity_boundaries_exact():
    started = time.perf_counter()
    assert [classify(w, WIDTH_THRESHOLDS) for w in (1, 8)] == [3, 3]
    assert [classify(w, WIDTH_THRESHOLDS) for w in (9, 15)] == [2, 2]
    assert [classify(w, WIDTH_THRESHOLDS) for w in (16, 100)] == [1, 1]
    assert time.perf_counter() - started < 1.0


def test_density_derivation_and_normalization():
    assert compute_densities(1, 2, 17) == (5.0, 10.0, 85.0)
    rng = random.Random(20_240_501)
    for _ in range(1000):
        tally = [rng.randint(0, 500) for _ in range(3)]
        if sum(tally) == 0:
            tally[rng.randrange(3)] = 1
        dc = compute_densities(*tally)
        assert abs(sum(dc) - 100.0) <= 1e-9


def test_profile_band_corners_exact():
    cases = {
        (7.0, 15.0): (4, 100.0),
        (20.0, 40.0): (1, 0.0),
        (20.01, 40.0): (0, 0.0),
        (10.0, 20.0): (3, 66.0),
        (15.0, 30.0): (2, 33.0),
    }
    for (dc1, dc2), (band, quality) in cases.items():
        got_band, got_quality = profile_quality(dc1, dc2, WIDTH_BANDS)
        assert got_band == band, (dc1, dc2)
        assert abs(got_quality - quality) <= 1e-6, (dc1, dc2)


def test_interpolated_quality_worked_example():
    band, quality = profile_quality(8, 16, WIDTH_BANDS)
    assert band == 3
    assert abs(quality - 88.666667) <= 1e-4


def test_depth_oracle_equivalence_on_corpus():
    started = time.perf_counter()
    for name in ("bell.qasm", "ghz3.qasm", "qft4.qasm", "grover3.qasm", "teleport.qasm"):
        circuit = load_qasm(name)
        assert circuit_depth(circuit) == dag_depth(circuit), name
    assert time.perf_counter() - started < 5.0


def test_hand_verified_corpus_metrics():
    bell = compute_metrics(load_qasm("bell.qasm"))
    assert bell.width == 2
    assert bell.depth == 3
    assert (bell.gate_count_total, bell.gate_complexity_score) == (2, 3)
    assert (bell.measure_count, bell.nonterminal_measure_count) == (2, 0)
    teleport = compute_metrics(load_qasm("teleport.qasm"))
    assert teleport.conditional_count == 2
    assert teleport.quantum_cyclomatic == 3


def test_monotonicity_property_suite():
    started = time.perf_counter()
    rng = random.Random(20_240_502)
    for _ in range(10_000):
        dc1 = rng.uniform(0, 60)
        dc2 = rng.uniform(0, 60)
        band, quality = profile_quality(dc1, dc2, WIDTH_BANDS)
        lower1 = dc1 * rng.random()
        band_a, quality_a = profile_quality(lower1, dc2, WIDTH_BANDS)
        assert band_a >= band and quality_a >= quality - 1e-9
        lower2 = dc2 * rng.random()
        band_b, quality_b = profile_quality(dc1, lower2, WIDTH_BANDS)
        assert band_b >= band and quality_b >= quality - 1e-9
        value = rng.uniform(-50, 150)
        level = classify(value, WIDTH_THRESHOLDS)
        assert level in (1, 2, 3)
        assert (value <= 8) == (level == 3)
        assert (8 < value <= 15) == (level == 2)
        assert (value > 15) == (level == 1)
    assert time.perf_counter() - started < 10.0


def test_duplicate_oracle_equivalence():
    clone_text = (
        "def normalize(rows, scale):\n"
        "    out = []\n"
        "    for row in rows:\n"
        "        value = row.value * scale + 1\n"
        "        if value > 0 and row.keep:\n"
        "            out.append(value)\n"
        "    return out\n"
    )
    facts = [
        analyze_source(clone_text, "a.py"),
        analyze_source(clone_text + "\n\nTAIL = 1\n", "b.py"),
        analyze_source("def other(x):\n    return x * 2\n", "c.py"),
    ]
    assert sum(len(f.token_stream) for f in facts) <= 500
    for k in (4, 10, 30):
        assert duplicate_ratio(facts, k) == brute_force_ratios(facts, k)

    verbatim = [analyze_source(clone_text, "x.py"), analyze_source(clone_text, "y.py")]
    ratios = duplicate_ratio(verbatim, 30)
    assert ratios == {"x.py": 1.0, "y.py": 1.0}


def _write_synthetic_project(root):
    gates = ["h q[0];", "cx q[0],q[1];", "x q[1];", "ccx q[0],q[1],q[2];", "rz(0.5) q[2];"]
    for i in range(100):
        width = 3 + (i % 7)
        body = "\n".join(gates[: 2 + (i % 4)])
        measures = "\n".join(f"measure q[{j}] -> c[{j}];" for j in range(min(width, 3)))
        (root / f"circ_{i:03d}.qasm").write_text(
            f'OPENQASM 2.0;\ninclude "qelib1.inc";\nqreg q[{width}];\n'
            f"creg c[{width}];\n{body}\n{measures}\n"
        )
    for i in range(50):
        (root / f"mod_{i:03d}.py").write_text(
            f'"""Module {i}."""\n\n\n'
            f"def handler_{i}(items):\n"
            f"    total = {i}\n"
            "    for item in items:\n"
            "        if item.active and item.value > 0:\n"
            "            total += item.value\n"
            "    return total\n"
        )


def test_end_to_end_determinism_and_performance(tmp_path):
    _write_synthetic_project(tmp_path)

    def run():
        config = ModelConfig.default()
        config.validate()
        inventory = scan(tmp_path, config)
        circuits, facts, diagnostics = ingest(inventory)
        assert len(circuits) == 100
        assert len(facts) == 50
        return render_json(build_report(inventory.root, circuits, facts, diagnostics, config))

    started = time.perf_counter()
    first = run()
    second = run()
    elapsed = time.perf_counter() - started
    assert first == second
    assert elapsed < 5.0, f"two analyses took {elapsed:.2f}s"


def test_degenerate_projects(tmp_path, capsys):
    classical_only = tmp_path / "classical_only"
    classical_only.mkdir()
    (classical_only / "mod.py").write_text('"""Doc."""\n\n\ndef f(x):\n    return x\n')
    out = classical_only / "report.json"
    assert main([str(classical_only), "--format", "json", "--output", str(out)]) == 0
    doc = json.loads(out.read_text())
    by_name = {p["property_name"]: p for p in doc["properties"]}
    assert not by_name["circuit_width"]["applicable"]
    assert by_name["code_documentation"]["applicable"]

    empty = tmp_path / "empty"
    empty.mkdir()
    assert main([str(empty)]) == 3
