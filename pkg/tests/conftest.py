import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cmnet.instances import example_instance  # noqa: E402
from cmnet.suites import recurrence_suite  # noqa: E402


@pytest.fixture(scope="session")
def inst1():
    return example_instance(1)


@pytest.fixture(scope="session")
def inst2():
    return example_instance(2)


@pytest.fixture(scope="session")
def K1(inst1):
    return inst1.params


@pytest.fixture(scope="session")
def K2(inst2):
    return inst2.params


@pytest.fixture(scope="session")
def recurrence_reports(inst1, inst2):
    """Box-3 sweeps of the general recurrence, shared by several test files."""
    return {1: recurrence_suite(inst1, 3), 2: recurrence_suite(inst2, 3)}


ACCEPTANCE: dict[int, tuple[str, str]] = {}


def record_criterion(n: int, ok: bool, detail: str) -> None:
    ACCEPTANCE[n] = ("PASS" if ok else "FAIL", detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {status}  {detail}")
