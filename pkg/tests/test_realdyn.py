import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from renormlab.errors import (
    CriticalPoint,
    CriticalValueOutside,
    NoPreimage,
    NoRealFixedPoints,
    NoReturnWithinBudget,
)
from renormlab.realdyn import (
    RInterval,
    alpha_interval,
    critical_orbit,
    critical_pullback,
    f,
    first_return_time,
    fixed_points,
    monotone_pullback_step,
    monotonicity_interval,
    symmetric_point,
)

PHI = (1 + math.sqrt(5)) / 2


@pytest.mark.parametrize("c, alpha, beta", [
    (0.25, 0.5, 0.5),
    (-1.0, -0.61803398875, 1.61803398875),
    (-2.0, -1.0, 2.0),
])
def test_fixed_points_closed_form(c, alpha, beta):
    a, b = fixed_points(c)
    assert a == pytest.approx(alpha, abs=1e-11)
    assert b == pytest.approx(beta, abs=1e-11)


def test_no_real_fixed_points():
    with pytest.raises(NoRealFixedPoints):
        fixed_points(0.3)


@given(st.floats(-2.0, 0.25))
def test_fixed_points_are_fixed(c):
    a, b = fixed_points(c)
    assert abs(f(c, a) - a) <= 1e-12 * max(1, abs(a))
    assert abs(f(c, b) - b) <= 1e-12 * max(1, abs(b))
    assert 2 * b >= 1 >= 2 * a - 1e-12


@pytest.mark.parametrize("x", [0.0, 1.618, -0.25])
def test_symmetric_point(x):
    assert symmetric_point(x) == -x
    assert f(-1.3, symmetric_point(x)) == f(-1.3, x)


def test_first_return_c19():
    c = -1.9
    A = alpha_interval(c)
    assert A.hi == pytest.approx((math.sqrt(8.6) - 1) / 2, abs=1e-14)
    assert A.hi == pytest.approx(0.96629, abs=5e-6)
    orbit = critical_orbit(c, 100)
    assert first_return_time(c, A, orbit) == 4
    assert np.allclose(orbit[:5], [0, -1.9, 1.71, 1.0241, -0.85121919], atol=1e-6)


def test_first_return_c1():
    c = -1.0
    assert first_return_time(c, alpha_interval(c), critical_orbit(c, 10)) == 2


def test_first_return_c2_escapes_to_beta():
    with pytest.raises(NoReturnWithinBudget):
        first_return_time(-2.0, RInterval(-1.0, 1.0), critical_orbit(-2.0, 1000))


@given(st.floats(-2.0, -0.76), st.integers(0, 3))
def test_first_return_is_first(c, shrink):
    A = alpha_interval(c).dilate(0.5 ** shrink)
    orbit = critical_orbit(c, 20_000)
    try:
        t = first_return_time(c, A, orbit)
    except NoReturnWithinBudget:
        return
    assert A.contains(orbit[t])
    assert not any(A.contains(orbit[j]) for j in range(1, t))


def test_monotone_pullback_examples():
    J = monotone_pullback_step(-1.0, RInterval(0.9, 1.1), 1)
    assert (J.lo, J.hi) == pytest.approx((1.378405, 1.449138), abs=1e-6)
    J = monotone_pullback_step(0.0, RInterval(1.0, 4.0), -1)
    assert (J.lo, J.hi) == pytest.approx((-2.0, -1.0), abs=1e-15)
    with pytest.raises(NoPreimage):
        monotone_pullback_step(-1.0, RInterval(-1.5, -1.2), 1)


@given(st.floats(-2.0, 0.25), st.floats(0.0, 3.0), st.floats(1e-6, 2.0))
def test_pullback_forward_consistency_and_mirror(c, off, width):
    J = RInterval(c + off, c + off + width)
    P = monotone_pullback_step(c, J, 1)
    M = monotone_pullback_step(c, J, -1)
    assert (M.lo, M.hi) == (-P.hi, -P.lo)
    for y, target in ((P.lo, J.lo), (P.hi, J.hi)):
        assert abs(f(c, y) - target) <= 1e-12 * max(1.0, abs(target))


def test_critical_pullback_examples():
    J = critical_pullback(-1.0, RInterval(-1.2, -0.8))
    assert J.hi == pytest.approx(0.447214, abs=1e-6) and J.lo == -J.hi
    J = critical_pullback(-1.0, RInterval(-1.0, 0.0))
    assert (J.lo, J.hi) == (-1.0, 1.0)
    with pytest.raises(CriticalValueOutside):
        critical_pullback(-1.0, RInterval(-0.5, 0.5))


def test_monotonicity_interval_examples():
    T = RInterval(-PHI, PHI)
    H = monotonicity_interval(-1.0, 0.3, 1, T)
    assert H.lo == pytest.approx(0.0, abs=1e-15) and H.hi == pytest.approx(PHI, abs=1e-12)
    assert monotonicity_interval(-1.3, 0.2, 0, T) == T
    with pytest.raises(CriticalPoint):
        monotonicity_interval(-1.0, 0.0, 1, T)


@given(st.floats(-2.0, -1.0), st.floats(0.01, 0.9))
def test_monotonicity_intervals_nest(c, x):
    _, beta = fixed_points(c)
    T = RInterval(-beta, beta)
    prev = T
    for n in range(1, 7):
        try:
            H = monotonicity_interval(c, x, n, T)
        except CriticalPoint:
            return
        assert prev.contains_interval(H)
        prev = H
