"""Classical metrics: complexity, sizes, documentation density, and the
shingle-based clone detector checked against a brute-force oracle."""

import itertools

import pytest

from hybridlens import (
    ConfigError,
    analyze_source,
    comment_density,
    cyclomatic,
    duplicate_ratio,
    method_sizes,
)
from hybridlens.code_metrics import compute_metrics

from conftest import load_facts


def brute_force_ratios(all_facts, k):
    """Oracle: pairwise window comparison by token content, no hashing.

    A position is duplicated when covered by a window whose exact token
    sequence occurs at two or more (file, start) positions project-wide.
    """
    windows = []  # (file index, start, tokens)
    for fi, facts in enumerate(all_facts):
        toks = facts.token_stream
        for s in range(len(toks) - k + 1):
            windows.append((fi, s, toks[s:s + k]))

    duplicated_window = [False] * len(windows)
    for (i, a), (j, b) in itertools.combinations(enumerate(windows), 2):
        if a[2] == b[2]:
            duplicated_window[i] = True
            duplicated_window[j] = True

    ratios = {}
    for fi, facts in enumerate(all_facts):
        n = len(facts.token_stream)
        if n < k:
            ratios[facts.path] = 0.0
            continue
        covered = [False] * n
        for (wfi, s, _), dup in zip(windows, duplicated_window):
            if wfi == fi and dup:
                for p in range(s, s + k):
                    covered[p] = True
        ratios[facts.path] = sum(covered) / n
    return ratios


def test_cyclomatic_values():
    facts = load_facts("decisions.py")
    assert cyclomatic(facts) == [("munge", 6)]
    straight = analyze_source("def f():\n    return 0\n", "s.py")
    assert cyclomatic(straight) == [("f", 1)]


def test_method_sizes_passthrough():
    facts = load_facts("nested.py")
    assert dict(method_sizes(facts)) == {"outer": 5, "inner": 4}
    no_funcs = analyze_source("x = 1\n", "x.py")
    assert method_sizes(no_funcs) == []


def test_comment_density_cases():
    mixed = analyze_source("# a\n# b\n# c\nx = 1\ny = 2\nz = 3\nw = 4\nv = 5\n", "m.py")
    assert comment_density(mixed) == pytest.approx(0.375)
    all_comments = analyze_source("# only\n# notes\n", "c.py")
    assert comment_density(all_comments) == 1.0
    assert comment_density(analyze_source("", "e.py")) == 0.0


def test_clone_fixtures_report_duplication():
    a = load_facts("clone_a.py")
    b = load_facts("clone_b.py")
    ratios = duplicate_ratio([a, b], shingle_size=30)
    assert ratios[a.path] > 0
    assert ratios[b.path] > 0
    # The unique tails differ in length, so so do the ratios.
    assert ratios[a.path] != ratios[b.path]


def test_shingle_ratios_match_brute_force_oracle():
    names = ["clone_a.py", "clone_b.py", "short.py", "simple.py"]
    all_facts = [load_facts(n) for n in names]
    assert sum(len(f.token_stream) for f in all_facts) <= 500
    for k in (5, 12, 30):
        assert duplicate_ratio(all_facts, k) == brute_force_ratios(all_facts, k)


def test_verbatim_file_clone_scores_one():
    text = "def repeated(a, b):\n    if a > b:\n        return a - b\n    return b - a\n"
    one = analyze_source(text, "one.py")
    two = analyze_source(text, "two.py")
    k = len(one.token_stream)
    assert k >= 2
    ratios = duplicate_ratio([one, two], shingle_size=k)
    assert ratios == {"one.py": 1.0, "two.py": 1.0}


def test_file_shorter_than_window_scores_zero():
    short = load_facts("short.py")
    other = load_facts("simple.py")
    ratios = duplicate_ratio([short, other], shingle_size=30)
    assert ratios[short.path] == 0.0


def test_duplicate_detection_is_order_independent():
    all_facts = [load_facts(n) for n in ("clone_a.py", "clone_b.py", "simple.py")]
    baseline = duplicate_ratio(all_facts, 30)
    for perm in itertools.permutations(all_facts):
        assert duplicate_ratio(list(perm), 30) == baseline


def test_renaming_does_not_hide_clones():
    a = load_facts("clone_a.py")
    b = load_facts("clone_b.py")  # same logic, renamed identifiers
    solo = duplicate_ratio([a], 30)[a.path]
    paired = duplicate_ratio([a, b], 30)[a.path]
    assert paired > solo


def test_invalid_shingle_size():
    with pytest.raises(ConfigError):
        duplicate_ratio([load_facts("simple.py")], shingle_size=1)


def test_compute_metrics_assembles_per_file_sets():
    all_facts = [load_facts(n) for n in ("clone_a.py", "short.py")]
    sets = compute_metrics(all_facts, shingle_size=30)
    by_path = {s.path: s for s in sets}
    assert set(by_path) == {f.path for f in all_facts}
    clone = by_path[all_facts[0].path]
    assert clone.function_complexities[0][0] == "accumulate_scores"
    assert 0.0 <= clone.duplicate_token_ratio <= 1.0
    assert all(v >= 1 for _, v in clone.function_complexities)
