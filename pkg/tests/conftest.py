import numpy as np
import pytest

from exact01.core import Dataset

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion for the terminal summary."""

    def record(name, passed, detail=""):
        _ACCEPTANCE.append((name, bool(passed), detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")


def random_dataset(rng, n, d):
    return Dataset(rng.standard_normal((n, d)), rng.choice([-1, 1], n))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
