import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from calframe import Date, TidyTable  # noqa: E402
from calframe.synthetic import hourly_counts, write_csv  # noqa: E402

SENSORS = ("Flagstaff Station", "Birrarung Marr", "State Library")

_acceptance: dict[str, str] = {}
_SESSION_START = time.perf_counter()
RUNTIME_BUDGET = 30.0


@pytest.fixture(scope="session")
def records_2016():
    return hourly_counts(Date(2016, 1, 1), Date(2016, 12, 31))


@pytest.fixture(scope="session")
def table_2016(records_2016):
    return TidyTable.from_records(records_2016, date="Date", x="Time", y="Count")


@pytest.fixture(scope="session")
def records_3sensors():
    return hourly_counts(Date(2016, 1, 1), Date(2016, 12, 31), sensors=SENSORS)


@pytest.fixture(scope="session")
def csv_2016(tmp_path_factory, records_2016):
    return write_csv(records_2016, tmp_path_factory.mktemp("data") / "flagstaff_2016.csv")


@pytest.fixture(scope="session")
def csv_3sensors(tmp_path_factory, records_3sensors):
    return write_csv(records_3sensors, tmp_path_factory.mktemp("data") / "sensors_2016.csv")


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        name = report.nodeid.split("::")[-1]
        _acceptance[name] = "PASS" if report.passed else "FAIL"


def _elapsed():
    return time.perf_counter() - _SESSION_START


def pytest_sessionfinish(session, exitstatus):
    if _acceptance and _elapsed() >= RUNTIME_BUDGET and exitstatus == 0:
        session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance.items():
        terminalreporter.write_line(f"{outcome}  {name}")
    elapsed = _elapsed()
    outcome = "PASS" if elapsed < RUNTIME_BUDGET else "FAIL"
    terminalreporter.write_line(f"{outcome}  suite_runtime ({elapsed:.1f} s, budget {RUNTIME_BUDGET:.0f} s)")
