"""Fact extraction from Python-style classical sources.

This is a deliberately language-light scanner, not a grammar: the four
classical measurements downstream need only line classes, branch-keyword
counts, function extents, and a normalized token stream. Lines are
classified blank / comment / code; triple-quoted strings that open a
module or directly follow a `def` header are treated as documentation
(comment lines). Identifiers normalize to `ID` and literals to `LIT` so
clone detection survives renaming. Odd input never fails: unparseable
text still contributes code lines and tokens.
"""

from __future__ import annotations

import keyword
import re
from dataclasses import dataclass, field


class NotTextError(Exception):
    """Input is binary or otherwise not analyzable text."""


@dataclass(frozen=True)
class FunctionUnit:
    name: str
    start_line: int
    end_line: int
    code_lines: int
    decision_points: int


@dataclass
class ClassicalFileFacts:
    path: str
    total_lines: int
    blank_lines: int
    comment_lines: int
    code_lines: int
    functions: list[FunctionUnit]
    token_stream: list[str]


_KEYWORDS = frozenset(keyword.kwlist) | {"match", "case"}
_DECISION_KEYWORDS = frozenset({"if", "elif", "for", "while", "and", "or", "except"})

# Longest-first so compound operators win over their prefixes.
_OPERATORS = (
    "**=", "//=", ">>=", "<<=", "...",
    "->", ":=", "<=", ">=", "==", "!=", "+=", "-=", "*=", "/=", "%=",
    "@=", "&=", "|=", "^=", "**", "//", "<<", ">>",
)

_OPEN_BRACKETS = frozenset("([{")
_CLOSE_BRACKETS = frozenset(")]}")

_STRING_OPEN_RE = re.compile(r"[rRbBuUfF]{0,2}(\"\"\"|'''|\"|')")
_IDENT_RE = re.compile(r"[A-Za-z_]\w*")
_NUMBER_RE = re.compile(r"(?:\d[\w.]*|\.\d[\w.]*)")
_DEF_NAME_RE = re.compile(r"\s*(?:async\s+)?def\s+([A-Za-z_]\w*)")


@dataclass
class _Line:
    cls: str  # "blank" | "comment" | "code"
    indent: int
    tokens: list[str] = field(default_factory=list)
    decision_points: int = 0
    # Line began inside a multi-line string or an open bracket pair; such
    # lines never terminate an indentation block.
    continuation: bool = False


def _find_close(line: str, pos: int, quote: str) -> int:
    """Index just past the closing quote, or -1 if the string runs on."""
    i = pos
    while i < len(line):
        if line[i] == "\\":
            i += 2
            continue
        if line.startswith(quote, i):
            return i + len(quote)
        i += 1
    return -1


def _scan_code(
    line: str, expect_docstring: bool
) -> tuple[list[str], int, bool, tuple[str, bool] | None]:
    """Tokenize one line of code; returns (tokens, decision_points,
    saw_docstring, open_triple_string_state)."""
    tokens: list[str] = []
    decisions = 0
    saw_doc = False
    open_state: tuple[str, bool] | None = None
    pos = 0

    while pos < len(line):
        ch = line[pos]
        if ch in " \t\r":
            pos += 1
            continue
        if ch == "#":
            break
        m = _STRING_OPEN_RE.match(line, pos)
        if m and m.group(1):
            quote = m.group(1)
            is_doc = len(quote) == 3 and not tokens and expect_docstring
            end = _find_close(line, m.end(), quote)
            if end == -1 and len(quote) == 3:
                if is_doc:
                    saw_doc = True
                else:
                    tokens.append("LIT")
                open_state = (quote, is_doc)
                break
            if end == -1:
                # Unterminated short string: tolerate, runs to end of line.
                tokens.append("LIT")
                break
            if is_doc:
                saw_doc = True
            else:
                tokens.append("LIT")
            pos = end
            continue
        m = _IDENT_RE.match(line, pos)
        if m:
            word = m.group()
            if word in _KEYWORDS:
                if word in _DECISION_KEYWORDS:
                    decisions += 1
                elif word == "case" and not tokens and ":" in line[m.end():]:
                    decisions += 1
                tokens.append(word)
            else:
                tokens.append("ID")
            pos = m.end()
            continue
        m = _NUMBER_RE.match(line, pos)
        if m:
            tokens.append("LIT")
            pos = m.end()
            continue
        for op in _OPERATORS:
            if line.startswith(op, pos):
                tokens.append(op)
                pos += len(op)
                break
        else:
            tokens.append(ch)
            pos += 1
    return tokens, decisions, saw_doc, open_state


def analyze_source(text: str, path: str = "<memory>") -> ClassicalFileFacts:
    """Extract line classes, function units, and the normalized token stream."""
    if "\x00" in text:
        raise NotTextError(f"{path}: input contains NUL bytes")

    raw_lines = text.splitlines()
    lines: list[_Line] = []

    in_string: tuple[str, bool] | None = None  # (quote, is_docstring)
    expect_docstring = True  # file start may open a module docstring
    pending_def = False
    bracket_depth = 0

    for raw in raw_lines:
        stripped = raw.strip()
        indent = len(raw) - len(raw.lstrip())

        if in_string is not None:
            quote, is_doc = in_string
            end = _find_close(raw, 0, quote)
            if end == -1:
                lines.append(_Line("comment" if is_doc else "code", indent, continuation=True))
                continue
            in_string = None
            if is_doc:
                expect_docstring = False
                lines.append(_Line("comment", indent, continuation=True))
                continue
            tokens, decisions, _, open_state = _scan_code(raw[end:], False)
            in_string = open_state
            bracket_depth += _bracket_delta(tokens)
            lines.append(_Line("code", indent, tokens, decisions, continuation=True))
            continue

        if stripped == "":
            lines.append(_Line("blank", indent))
            continue
        if stripped.startswith("#"):
            lines.append(_Line("comment", indent))
            continue

        started_in_brackets = bracket_depth > 0
        tokens, decisions, saw_doc, open_state = _scan_code(raw, expect_docstring)
        in_string = open_state
        if saw_doc:
            lines.append(_Line("comment", indent, continuation=started_in_brackets))
            if open_state is None:
                expect_docstring = False
            continue

        bracket_depth += _bracket_delta(tokens)
        lines.append(_Line("code", indent, tokens, decisions, continuation=started_in_brackets))

        if tokens and (tokens[0] == "def" or tokens[:2] == ["async", "def"]):
            pending_def = True
        if pending_def:
            if tokens and tokens[-1] == ":" and bracket_depth == 0:
                expect_docstring = True
                pending_def = False
        else:
            expect_docstring = False

    blank = sum(1 for ln in lines if ln.cls == "blank")
    comment = sum(1 for ln in lines if ln.cls == "comment")
    code = sum(1 for ln in lines if ln.cls == "code")

    functions = _detect_functions(raw_lines, lines)
    token_stream = [tok for ln in lines if ln.cls == "code" for tok in ln.tokens]

    return ClassicalFileFacts(
        path=path,
        total_lines=len(raw_lines),
        blank_lines=blank,
        comment_lines=comment,
        code_lines=code,
        functions=functions,
        token_stream=token_stream,
    )


def _bracket_delta(tokens: list[str]) -> int:
    delta = 0
    for tok in tokens:
        if tok in _OPEN_BRACKETS:
            delta += 1
        elif tok in _CLOSE_BRACKETS:
            delta -= 1
    return delta


def _detect_functions(raw_lines: list[str], lines: list[_Line]) -> list[FunctionUnit]:
    headers: list[tuple[int, int, str]] = []  # (index, indent, name)
    for i, ln in enumerate(lines):
        if ln.cls != "code" or ln.continuation or not ln.tokens:
            continue
        if ln.tokens[0] == "def" or ln.tokens[:2] == ["async", "def"]:
            m = _DEF_NAME_RE.match(raw_lines[i])
            headers.append((i, ln.indent, m.group(1) if m else "<anonymous>"))

    extents: list[tuple[int, int, str]] = []  # (start, end, name)
    for start, indent, name in headers:
        end = start
        j = start + 1
        while j < len(lines):
            ln = lines[j]
            if ln.cls == "blank":
                j += 1
                continue
            if ln.continuation or ln.indent > indent:
                end = j
                j += 1
                continue
            break
        extents.append((start, end, name))

    # Innermost ownership: nested units claim their own lines, keeping
    # counted line sets disjoint across units.
    code_counts = [0] * len(extents)
    decision_counts = [0] * len(extents)
    for i, ln in enumerate(lines):
        if ln.cls != "code":
            continue
        owner = -1
        owner_span = -1
        for u, (start, end, _) in enumerate(extents):
            if start <= i <= end:
                span = end - start
                if owner < 0 or span < owner_span:
                    owner, owner_span = u, span
        if owner >= 0:
            code_counts[owner] += 1
            decision_counts[owner] += ln.decision_points

    return [
        FunctionUnit(
            name=name,
            start_line=start + 1,
            end_line=end + 1,
            code_lines=code_counts[u],
            decision_points=decision_counts[u],
        )
        for u, (start, end, name) in enumerate(extents)
    ]
