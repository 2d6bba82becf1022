"""Parameter search: superattracting centres, the period-doubling ladder, windows."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .errors import NoRootInBracket
from .realdyn import C_MAX, C_MIN

FEIGENBAUM_DELTA = 4.669201609102990
SCAN_POINTS = 4001


@dataclass(frozen=True)
class SuperattractingPeriod:
    q: int
    lo: float = C_MIN
    hi: float = C_MAX
    near: float | None = None


@dataclass(frozen=True)
class PeriodDoubling:
    n: int


@dataclass(frozen=True)
class NearWindow:
    c0: float
    radius: float
    q: int


def _crit_iter(c, q):
    x = np.zeros_like(c, dtype=float)
    for _ in range(q):
        x = x * x + c
    return x


def exact_period(c, qmax, tol=1e-9):
    """Least j <= qmax with |f_c^j(0)| below ``tol`` relative to the orbit scale."""
    x = 0.0
    for j in range(1, qmax + 1):
        x = x * x + c
        if abs(x) < tol:
            return j
    return None


def _root(q, a, b):
    return brentq(lambda t: float(_crit_iter(t, q)), a, b, xtol=1e-16, rtol=1e-15, maxiter=200)


def superattracting_parameters(q, lo=C_MIN, hi=C_MAX, points=SCAN_POINTS):
    """All centres of exact period q in [lo, hi] resolved by a sign-change scan."""
    grid = np.linspace(lo, hi, points)
    with np.errstate(over="ignore", invalid="ignore"):
        vals = _crit_iter(grid, q)
    out = []
    for i in np.flatnonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0):
        r = _root(q, grid[i], grid[i + 1])
        if _is_exact(r, q):
            out.append(r)
    return sorted(out)


def _is_exact(c, q):
    # f^j(0) must stay away from 0 for proper divisors j of q
    x = 0.0
    scale = 1e-7
    for j in range(1, q):
        x = x * x + c
        if q % j == 0 and abs(x) < scale:
            return False
    return True


def period_doubling_ladder(n):
    """[c_0, ..., c_n]: superattracting centres of period 2^j on the main cascade."""
    ladder = [0.0, -1.0]
    for j in range(2, n + 1):
        gap = ladder[-2] - ladder[-1]
        seed = ladder[-1] - gap / FEIGENBAUM_DELTA
        lo = ladder[-1] - 1.6 * gap / FEIGENBAUM_DELTA
        hi = ladder[-1] - 0.4 * gap / FEIGENBAUM_DELTA
        roots = superattracting_parameters(2 ** j, lo, hi, points=801)
        if not roots:
            raise NoRootInBracket(f"no period-{2 ** j} centre in [{lo}, {hi}]")
        ladder.append(min(roots, key=lambda r: abs(r - seed)))
    return ladder[: n + 1]


def find_param(kind):
    if isinstance(kind, PeriodDoubling):
        if kind.n < 0:
            raise ValueError("n must be >= 0")
        return period_doubling_ladder(kind.n)[kind.n]
    if isinstance(kind, SuperattractingPeriod):
        roots = superattracting_parameters(kind.q, kind.lo, kind.hi)
        if not roots:
            raise NoRootInBracket(f"no centre of period {kind.q} in [{kind.lo}, {kind.hi}]")
        if kind.near is None:
            return roots[-1]
        return min(roots, key=lambda r: abs(r - kind.near))
    if isinstance(kind, NearWindow):
        lo = max(C_MIN, kind.c0 - kind.radius)
        hi = min(C_MAX, kind.c0 + kind.radius)
        roots = superattracting_parameters(kind.q, lo, hi, points=20_001)
        if not roots:
            raise NoRootInBracket(f"no centre of period {kind.q} within {kind.radius} of {kind.c0}")
        return min(roots, key=lambda r: abs(r - kind.c0))
    raise TypeError(f"unknown search kind {kind!r}")


def ladder_ratios(ladder):
    """(c_{n-1} - c_n) / (c_n - c_{n+1}) keyed by n."""
    return {n: (ladder[n - 1] - ladder[n]) / (ladder[n] - ladder[n + 1])
            for n in range(1, len(ladder) - 1)}
