import re
from pathlib import Path

import pytest

from adian.presentation import Presentation

DATA = Path(__file__).parent / "data"


@pytest.fixture
def comm():
    return Presentation.build("ab", [("ab", "ba")])


@pytest.fixture
def aba_cc():
    return Presentation.build("abc", [("aba", "cc")])


@pytest.fixture
def free_ab():
    return Presentation.build("ab")


@pytest.fixture
def data_dir():
    return DATA


def pytest_terminal_summary(terminalreporter):
    rows = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)_(\w+)", nodeid)
            if m and getattr(rep, "when", "call") == "call":
                rows.append((int(m.group(1)), m.group(2), outcome))
    if rows:
        terminalreporter.write_sep("=", "acceptance criteria")
        for n, name, outcome in sorted(rows):
            status = "PASS" if outcome == "passed" else "FAIL"
            terminalreporter.write_line(f"criterion {n} {name}: {status}")
