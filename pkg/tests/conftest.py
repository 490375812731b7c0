import numpy as np
import pytest

from mixedsums.charcore import build_modulus


@pytest.fixture(scope="session")
def mod():
    cache = {}

    def get(p):
        if p not in cache:
            cache[p] = build_modulus(p)
        return cache[p]

    return get


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


_ACCEPTANCE = []


@pytest.fixture
def accept():
    """report(n, ok, detail): record one acceptance line, then assert it."""

    def report(n, ok, detail):
        line = f"ACCEPTANCE {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        _ACCEPTANCE.append((n, line))
        print(line)
        assert ok, line

    return report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)
