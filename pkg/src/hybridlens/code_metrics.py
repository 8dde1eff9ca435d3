"""Classical code measurements: control-flow complexity, method size,
comment density, and token-shingle duplicate detection.

Duplication is measured project-wide: every sliding window of
`shingle_size` normalized tokens is indexed across all files, and a token
position counts as duplicated when it lies inside any window whose content
occurs at two or more positions anywhere in the project. Windows are
compared by exact token content, so identifier renames cannot hide a
clone (the frontend already normalized identifiers to `ID`).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .classical import ClassicalFileFacts
from .config import ConfigError


@dataclass
class ClassicalMetricSet:
    path: str
    function_complexities: list[tuple[str, int]]
    function_sizes: list[tuple[str, int]]
    comment_density: float
    duplicate_token_ratio: float


def cyclomatic(facts: ClassicalFileFacts) -> list[tuple[str, int]]:
    """McCabe value per function: decision points plus one."""
    return [(f.name, f.decision_points + 1) for f in facts.functions]


def method_sizes(facts: ClassicalFileFacts) -> list[tuple[str, int]]:
    return [(f.name, f.code_lines) for f in facts.functions]


def comment_density(facts: ClassicalFileFacts) -> float:
    """Comment share of documented-plus-code lines; blank lines are neutral."""
    denominator = facts.comment_lines + facts.code_lines
    if denominator == 0:
        return 0.0
    return facts.comment_lines / denominator


def duplicate_ratio(
    all_facts: Sequence[ClassicalFileFacts], shingle_size: int = 30
) -> dict[str, float]:
    """Per-file share of token positions covered by repeated shingles.

    Files shorter than the window report 0. Results are independent of
    file order: the index is content-keyed over the whole project.
    """
    if shingle_size < 2:
        raise ConfigError("duplicate detection needs a shingle size of at least 2")

    occurrences: Counter[tuple[str, ...]] = Counter()
    for facts in all_facts:
        tokens = facts.token_stream
        for start in range(len(tokens) - shingle_size + 1):
            occurrences[tuple(tokens[start:start + shingle_size])] += 1

    ratios: dict[str, float] = {}
    for facts in all_facts:
        tokens = facts.token_stream
        n = len(tokens)
        if n < shingle_size:
            ratios[facts.path] = 0.0
            continue
        duplicated = [False] * n
        for start in range(n - shingle_size + 1):
            if occurrences[tuple(tokens[start:start + shingle_size])] >= 2:
                for i in range(start, start + shingle_size):
                    duplicated[i] = True
        ratios[facts.path] = sum(duplicated) / n
    return ratios


def compute_metrics(
    all_facts: Iterable[ClassicalFileFacts], shingle_size: int = 30
) -> list[ClassicalMetricSet]:
    """Assemble the per-file measurement sets for a whole project."""
    facts_list = list(all_facts)
    ratios = duplicate_ratio(facts_list, shingle_size)
    return [
        ClassicalMetricSet(
            path=facts.path,
            function_complexities=cyclomatic(facts),
            function_sizes=method_sizes(facts),
            comment_density=comment_density(facts),
            duplicate_token_ratio=ratios[facts.path],
        )
        for facts in facts_list
    ]
