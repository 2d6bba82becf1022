import pytest

from renormlab.errors import NoRootInBracket
from renormlab.params import (
    FEIGENBAUM_DELTA,
    NearWindow,
    PeriodDoubling,
    SuperattractingPeriod,
    exact_period,
    find_param,
    ladder_ratios,
    superattracting_parameters,
)

from conftest import ladder


def test_period_doubling_one_is_minus_one():
    assert find_param(PeriodDoubling(1)) == -1.0


def test_period_three_centre():
    c = find_param(SuperattractingPeriod(3))
    assert c == pytest.approx(-1.754878, abs=1e-6)
    x = 0.0
    for _ in range(3):
        x = x * x + c
    assert abs(x) < 1e-12


def test_ladder_ratio_near_delta():
    r = ladder_ratios(ladder()[:6])
    assert abs(r[4] / FEIGENBAUM_DELTA - 1) < 0.05


def test_ladder_is_decreasing_with_exact_periods():
    L = ladder()
    assert all(a > b for a, b in zip(L, L[1:]))
    for n in range(1, 7):
        assert exact_period(L[n], 2 ** n + 1) == 2 ** n


def test_divisor_periods_are_excluded():
    roots = superattracting_parameters(4, -2.0, 0.25)
    assert all(abs(r - (-1.0)) > 1e-6 for r in roots)
    assert all(exact_period(r, 4) == 4 for r in roots)


def test_near_window():
    c = find_param(NearWindow(-1.7499, 1e-4, 130))
    assert abs(c + 1.7499) <= 1e-4
    assert exact_period(c, 130, tol=1e-6) == 130


def test_no_root():
    with pytest.raises(NoRootInBracket):
        find_param(SuperattractingPeriod(3, -0.5, 0.25))
    with pytest.raises(ValueError):
        find_param(PeriodDoubling(-1))
