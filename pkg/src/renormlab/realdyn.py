"""Real dynamics of the quadratic family f_c(x) = x**2 + c.

Intervals are closed and orientation free.  Everything here is pure and works
in binary64; endpoints produced by square roots get one Newton polish step.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    CriticalPoint,
    CriticalValueOutside,
    NoPreimage,
    NoRealFixedPoints,
    NoReturnWithinBudget,
)

C_MIN = -2.0
C_MAX = 0.25
DEFAULT_BUDGET = 100_000
REL_SLACK = 1e-12


@dataclass(frozen=True)
class RInterval:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo <= self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def of(cls, a, b):
        a, b = float(a), float(b)
        return cls(min(a, b), max(a, b))

    @classmethod
    def symmetric(cls, r):
        r = abs(float(r))
        return cls(-r, r)

    @property
    def length(self):
        return self.hi - self.lo

    @property
    def mid(self):
        return 0.5 * (self.lo + self.hi)

    @property
    def radius(self):
        """Largest |x| over the interval (the half-width for symmetric ones)."""
        return max(abs(self.lo), abs(self.hi))

    def slack(self):
        return REL_SLACK * max(self.length, abs(self.lo), abs(self.hi), 1e-300)

    def contains(self, x, slack=True):
        s = self.slack() if slack else 0.0
        return self.lo - s <= x <= self.hi + s

    def contains_interior(self, x):
        return self.lo < x < self.hi

    def contains_interval(self, other, slack=True):
        s = self.slack() if slack else 0.0
        return self.lo - s <= other.lo and other.hi <= self.hi + s

    def dilate(self, factor):
        h = 0.5 * self.length * factor
        return RInterval(self.mid - h, self.mid + h)

    def dist(self, z):
        """Euclidean distance from a real or complex point to the interval."""
        z = complex(z)
        x = min(max(z.real, self.lo), self.hi)
        return abs(z - x)

    def side(self):
        """+1 / -1 for intervals on one side of 0, 0 if 0 is inside."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0

    def as_list(self):
        return [self.lo, self.hi]


def check_param(c):
    c = float(c)
    if not C_MIN <= c <= C_MAX:
        raise ValueError(f"c={c} outside the real connectedness locus [-2, 1/4]")
    return c


def f(c, x):
    return x * x + c


def fn(c, x, n):
    """n-th iterate; works elementwise on numpy arrays and complex input."""
    for _ in range(n):
        x = x * x + c
    return x


def fn_deriv(c, x, n):
    """(f^n(x), (f^n)'(x))."""
    d = 1.0
    for _ in range(n):
        d = 2.0 * x * d
        x = x * x + c
    return x, d


def critical_orbit(c, budget=DEFAULT_BUDGET):
    """points[i] = f^i(0), i < budget."""
    pts = np.empty(budget)
    x = 0.0
    for i in range(budget):
        pts[i] = x
        x = x * x + c
        if abs(x) > 1e150:
            pts[i + 1:] = np.inf
            break
    return pts


def fixed_points(c):
    """(alpha, beta): multipliers 2*alpha <= 1 <= 2*beta."""
    disc = 1.0 - 4.0 * c
    if disc < 0:
        raise NoRealFixedPoints(f"c={c} > 1/4")
    r = math.sqrt(disc)
    return 0.5 * (1.0 - r), 0.5 * (1.0 + r)


def symmetric_point(x):
    return -x


def alpha_interval(c):
    """A = [alpha, alpha'] around the critical point."""
    alpha, _ = fixed_points(c)
    return RInterval.symmetric(alpha)


def beta_interval(c):
    """B = [beta, beta'] (the whole invariant core)."""
    _, beta = fixed_points(c)
    return RInterval.symmetric(beta)


def first_return_time(c, interval, orbit, stride=1):
    """Least t >= 1 with f^(stride*t)(0) in ``interval``."""
    if not interval.contains_interior(0.0):
        raise ValueError("interval must contain the critical point")
    pts = orbit[stride::stride]
    s = interval.slack()
    hits = np.flatnonzero((pts >= interval.lo - s) & (pts <= interval.hi + s))
    if hits.size == 0:
        raise NoReturnWithinBudget(
            f"no return to [{interval.lo:.6g}, {interval.hi:.6g}] within {len(pts)} steps")
    return int(hits[0]) + 1


def _polish_root(y, c, target):
    # one Newton step on y**2 + c = target
    if y == 0.0:
        return y
    return y - (y * y + c - target) / (2.0 * y)


def _branch_root(c, target):
    v = target - c
    if v < 0.0:
        if v > -1e-13 * max(1.0, abs(c)):
            return 0.0
        raise NoPreimage(f"{target} < c={c}")
    return _polish_root(math.sqrt(v), c, target)


def monotone_pullback_step(c, J, sign):
    """Preimage of J under f on the half-line selected by ``sign``."""
    if J.lo < c - 1e-13 * max(1.0, abs(c)):
        raise NoPreimage(f"J.lo={J.lo} < c={c}")
    a = _branch_root(c, J.lo)
    b = _branch_root(c, J.hi)
    return RInterval.of(sign * a, sign * b)


def critical_pullback(c, J):
    """Component of f^{-1}(J) containing 0; needs c in J."""
    if not J.contains(c):
        raise CriticalValueOutside(f"c={c} not in [{J.lo}, {J.hi}]")
    return RInterval.symmetric(_branch_root(c, J.hi))


def half_line_pullback(c, J, sign):
    """Preimage of J inside the closed half-line of ``sign`` (cut at 0)."""
    if J.hi < c:
        raise NoPreimage(f"J.hi={J.hi} < c={c}")
    a = 0.0 if J.lo <= c else _branch_root(c, J.lo)
    b = _branch_root(c, J.hi)
    return RInterval.of(sign * a, sign * b)


def monotonicity_interval(c, x, n, T):
    """H_n(x): maximal interval around x on which f^n is monotone, cut at 0.

    Built backwards: H_0 = T, H_{j+1}(x) is the half-line preimage of
    H_j(f x) on the side of x.
    """
    orbit = [x]
    for j in range(n):
        if orbit[-1] == 0.0:
            raise CriticalPoint(f"f^{j}(x) = 0")
        orbit.append(f(c, orbit[-1]))
    H = T
    for j in range(n - 1, -1, -1):
        H = half_line_pullback(c, H, 1 if orbit[j] > 0 else -1)
    return H


def interval_image(c, J, n=1):
    """Exact image of J under f^n."""
    lo, hi = J.lo, J.hi
    for _ in range(n):
        a, b = lo * lo + c, hi * hi + c
        if lo <= 0.0 <= hi:
            lo, hi = c, max(a, b)
        else:
            lo, hi = min(a, b), max(a, b)
    return RInterval(lo, hi)
