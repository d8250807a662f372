import math

import numpy as np
import pytest

from qlogic.scenarios import coin_fixture

S = 1 / math.sqrt(2)


@pytest.fixture(scope="session")
def coin():
    return coin_fixture()


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


# (number, title, passed, seconds) rows filled in by test_acceptance.py
ACCEPTANCE: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, seconds in sorted(ACCEPTANCE, key=lambda r: (int(str(r[0]).rstrip('abc')), str(r[0]))):
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {str(number):>3}  {title}  ({seconds:.2f}s)")
