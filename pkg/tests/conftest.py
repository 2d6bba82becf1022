import functools

import pytest
from hypothesis import HealthCheck, settings

from renormlab.params import SuperattractingPeriod, find_param, period_doubling_ladder
from renormlab.renorm import build_tower

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@functools.lru_cache(maxsize=None)
def ladder(n=7):
    return tuple(period_doubling_ladder(n))


@functools.lru_cache(maxsize=None)
def tower(c):
    return build_tower(c)


@functools.lru_cache(maxsize=None)
def window3(q, near):
    return find_param(SuperattractingPeriod(q, near=near))


@pytest.fixture(scope="session")
def c6():
    return ladder()[6]


ACCEPTANCE_LINES = {}


def record(n, ok, detail):
    line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[n] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
