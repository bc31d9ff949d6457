from __future__ import annotations

import pytest

from symsat.graceful import enumerate_dw
from symsat.magic import build_magic, enumerate_squares

# acceptance results, filled in by test_acceptance and printed after the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture(scope="session")
def dw4_labellings():
    return list(enumerate_dw(4))


@pytest.fixture(scope="session")
def magic4_squares():
    return enumerate_squares(build_magic(4))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {k}: {detail}")
