"""Periodic-interval machinery for g = f^n on the critical-centred frame.

Shared by the nest (renormalization tail detection) and the tower.  ``g`` is
even, so everything is computed on [0, R] and mirrored.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import AlphaAttracting
from .realdyn import fn, fn_deriv

BISECT_ITERS = 200
BISECT_RTOL = 1e-13
SCAN_POINTS = 2049


def bisect(func, a, b, fa=None):
    """Root of a sign-changing scalar function on [a, b]."""
    if fa is None:
        fa = func(a)
    for _ in range(BISECT_ITERS):
        m = 0.5 * (a + b)
        if m == a or m == b or abs(b - a) <= BISECT_RTOL * max(abs(a), abs(b), 1e-300):
            break
        fm = func(m)
        if fm == 0.0:
            return m
        if (fm < 0) == (fa < 0):
            a, fa = m, fm
        else:
            b = m
    return 0.5 * (a + b)


def smallest_precritical(c, n, cap):
    """Smallest x in (0, cap] with f^j(x) = 0 for some 1 <= j < n, else None.

    Uses that f^j is monotone on [0, xi_{j-1}] where xi_{j-1} is the smallest
    precritical point of order < j, so a root exists iff the endpoint values
    differ in sign.
    """
    orbit = [0.0]
    for _ in range(n):
        orbit.append(orbit[-1] ** 2 + c)
    xi = float(cap)
    found = None
    y = xi  # f^j(xi)
    y_from_zero = None  # once xi is precritical of order j0, f^j(xi) = orbit[j - j0]
    for j in range(1, n):
        y = y * y + c
        if y_from_zero is not None:
            y = orbit[j - y_from_zero]
        v0 = orbit[j]
        if v0 == 0.0 or y == 0.0:
            continue
        if (v0 < 0) != (y < 0):
            xi = bisect(lambda x, j=j: fn(c, x, j), 0.0, xi, fa=v0)
            found = j
            y_from_zero = j
            y = 0.0
    return (xi, found) if found is not None else (float(cap), None)


@dataclass(frozen=True)
class PeriodicInterval:
    n: int
    b: float          # half-width of B = [-b, b]
    beta: float       # the endpoint fixed by g with multiplier >= 1 (+b or -b)
    multiplier: float
    xi: float         # half-width of the maximal unimodality interval
    xi_capped: bool
    increasing: bool  # g increasing on [0, xi]


def find_periodic_interval(c, n, radius):
    """B = [-b, b] with g = f^n unimodal on it, g(B) in B, g(beta) = beta.

    Returns None when no such interval of half-width <= ``radius`` exists.
    """
    orbit = [0.0]
    for _ in range(n):
        orbit.append(orbit[-1] ** 2 + c)
    if any(orbit[j] == 0.0 for j in range(1, n)):
        return None  # critical orbit has smaller period
    xi, order = smallest_precritical(c, n, radius)
    g0 = orbit[n]
    x = np.linspace(0.0, xi, SCAN_POINTS)
    gx = fn(c, x, n)
    increasing = gx[-1] > g0
    sgn = -1.0 if increasing else 1.0
    h = gx + sgn * x  # g - x if increasing, g + x if decreasing
    best = None
    for i in range(len(x) - 2, -1, -1):
        h0, h1 = h[i], h[i + 1]
        if increasing and not (h0 < 0.0 <= h1):
            continue
        if not increasing and not (h0 > 0.0 >= h1):
            continue
        b = bisect(lambda t: fn(c, t, n) + sgn * t, x[i], x[i + 1], fa=h0)
        if b <= 0.0:
            continue
        if increasing and g0 < -b * (1 + 1e-12):
            continue
        if not increasing and g0 > b * (1 + 1e-12):
            continue
        _, d = fn_deriv(c, b, n)
        best = (b, d)
        break
    if best is None:
        return None
    b, d = best
    beta = b if increasing else -b
    mult = d if increasing else -d
    return PeriodicInterval(n=n, b=b, beta=beta, multiplier=mult, xi=xi,
                            xi_capped=order is None, increasing=bool(increasing))


def alpha_point(c, per):
    """Fixed point of g on its decreasing branch inside B, and its multiplier."""
    n, b = per.n, per.b
    g0 = fn(c, 0.0, n)
    if per.increasing:
        # decreasing branch is [-b, 0]
        if not g0 < 0.0:
            raise AlphaAttracting("no orientation-reversing fixed point")
        a = bisect(lambda t: fn(c, t, n) - t, -b, 0.0)
    else:
        if not g0 > 0.0:
            raise AlphaAttracting("no orientation-reversing fixed point")
        a = bisect(lambda t: fn(c, t, n) - t, 0.0, b)
    _, d = fn_deriv(c, a, n)
    if not abs(d) > 1.0:
        raise AlphaAttracting(f"orientation-reversing fixed point has multiplier {d:.6g}")
    return a, d


def periodic_interval_at(c, n, b, cap=None):
    """PeriodicInterval record for a known symmetric half-width ``b``."""
    cap = 4.0 * b if cap is None else cap
    xi, order = smallest_precritical(c, n, cap)
    g0 = fn(c, 0.0, n)
    gb, d = fn_deriv(c, b, n)
    increasing = gb > g0
    return PeriodicInterval(n=n, b=b, beta=b if increasing else -b,
                            multiplier=d if increasing else -d, xi=xi,
                            xi_capped=order is None, increasing=bool(increasing))
