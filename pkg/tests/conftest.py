from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def qasm_dir() -> Path:
    return FIXTURES / "qasm"


@pytest.fixture
def classical_dir() -> Path:
    return FIXTURES / "classical"


def load_qasm(name: str):
    from hybridlens import parse_qasm

    path = FIXTURES / "qasm" / name
    return parse_qasm(path.read_text(encoding="utf-8"), str(path))


def load_facts(name: str):
    from hybridlens import analyze_source

    path = FIXTURES / "classical" / name
    return analyze_source(path.read_text(encoding="utf-8"), str(path))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    """Print one PASS/FAIL line per acceptance criterion."""
    outcome = yield
    report = outcome.get_result()
    if report.when != "call" or not item.fspath.basename == "test_acceptance.py":
        return
    terminal = item.config.pluginmanager.get_plugin("terminalreporter")
    if terminal is None:
        return
    status = "PASS" if report.passed else "FAIL"
    terminal.write_line(f"[{status}] {item.name}")
