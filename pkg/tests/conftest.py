import pytest

from refplan.fixtures import fixture_text
from refplan.io import load_spec

_acceptance: dict[str, str] = {}


@pytest.fixture(scope="session")
def library():
    return load_spec(fixture_text("library.json"))


@pytest.fixture(scope="session")
def two_artifacts():
    return load_spec(fixture_text("two_artifacts.json"))


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1]
        _acceptance[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in _acceptance.items():
        terminalreporter.write_line(f"{verdict}  {name}")
