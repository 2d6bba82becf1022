"""Renormalization tower of a real quadratic map.

A renormalization is stored as (c, n_k, intervals in the original coordinates);
f_k = f^{n_k} is always evaluated by composing f, never expanded.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import (
    AlphaAttracting,
    CriticalPoint,
    DynamicsError,
    NoPreimageInInterval,
    NotRenormalizable,
)
from .nest import PrincipalNest, build_principal_nest
from .periodic import (
    PeriodicInterval,
    alpha_point,
    bisect,
    smallest_precritical,
)
from .realdyn import (
    RInterval,
    check_param,
    critical_orbit,
    fixed_points,
    fn,
    fn_deriv,
    interval_image,
    monotonicity_interval,
)

MAX_DEPTH = 6
P_GUARD = 1e-7
S_CAP = 4.0


@dataclass(frozen=True)
class TowerConfig:
    max_depth: int = MAX_DEPTH
    orbit_budget: int = 100_000
    max_levels: int = 20_000
    p_guard: float = P_GUARD


@dataclass(frozen=True)
class RenormLevel:
    k: int
    n: int
    P: RInterval
    B: RInterval
    S: RInterval
    T: RInterval
    cycle: tuple
    sigma: float | None        # |B^k| / |B^{k-1}|, from level 1 on
    alpha: float | None        # fixed point of f_k on its decreasing branch
    beta: float                # endpoint of B fixed by f_k with multiplier >= 1
    multiplier: float
    xi_capped: bool
    P_minimal: bool            # P = [f^n(0), f^2n(0)] rather than B
    T_image: RInterval         # f_k(S) itself
    log10_deriv: float         # conditioning sample: log10 |(f^n)'(b)|
    nest: PrincipalNest | None = None

    @property
    def lambda_proxy(self):
        return self.S.length / self.T.length


@dataclass(frozen=True)
class RenormTower:
    c: float
    levels: tuple
    stop_reason: str

    @property
    def depth(self):
        return len(self.levels) - 1

    @property
    def periods(self):
        return [lev.n for lev in self.levels]

    @property
    def epstein_lambda(self):
        return [lev.lambda_proxy for lev in self.levels]


def detect_renormalization(c, nest):
    """(n, P, periodic interval) of the first renormalization read off a nest."""
    if nest.immediately_renormalizable:
        per = nest.renormalization
        return per.n, nest.A, per
    if nest.stop_reason != "renormalized" or nest.renormalization is None:
        raise NotRenormalizable(f"nest stopped by {nest.stop_reason}")
    per = nest.renormalization
    return per.n, choose_P(c, per), per


def choose_P(c, per):
    """Minimal periodic interval when it is a genuine one, else B."""
    B = RInterval.symmetric(per.b)
    a, b = fn(c, 0.0, per.n), fn(c, 0.0, 2 * per.n)
    P = RInterval.of(a, b)
    if P.contains_interior(0.0) and B.contains_interval(P):
        img = interval_image(c, P, per.n)
        if P.contains_interval(img):
            return P
    return B


def unimodality_interval(c, n, P):
    """(S, capped): S = [-xi, xi] with xi the least precritical point of order < n."""
    cap = S_CAP * P.radius
    xi, order = smallest_precritical(c, n, cap)
    return RInterval.symmetric(xi), order is None


def psi_range(c, n, ambient):
    """Range of the monotone branch of f^(n-1) around the critical value."""
    if n == 1:
        return ambient
    M = monotonicity_interval(c, c, n - 1, ambient)
    return interval_image(c, M, n - 1)


def cycle_of(c, P, n):
    out = [P]
    for _ in range(n - 1):
        out.append(interval_image(c, out[-1], 1))
    return tuple(out)


def _make_level(c, k, per, P, parent_B, ambient, P_minimal):
    n = per.n
    B = RInterval.symmetric(per.b)
    S, capped = unimodality_interval(c, n, P)
    try:
        T = psi_range(c, n, ambient)
    except CriticalPoint:
        T = ambient
    T_image = interval_image(c, S, n) if n > 1 else interval_image(c, S, 1)
    try:
        alpha, _ = alpha_point(c, per)
    except AlphaAttracting:
        alpha = None
    _, d = fn_deriv(c, per.b, n)
    return RenormLevel(
        k=k, n=n, P=P, B=B, S=S, T=T, cycle=cycle_of(c, P, n),
        sigma=None if parent_B is None else B.length / parent_B.length,
        alpha=alpha, beta=per.beta, multiplier=per.multiplier, xi_capped=capped,
        P_minimal=P_minimal, T_image=T_image,
        log10_deriv=float(np.log10(max(abs(d), 1e-300))))


def build_tower(c, config=TowerConfig(), orbit=None):
    """Levels 0..depth; level 0 is f itself on B = [-beta, beta]."""
    c = check_param(c)
    if orbit is None:
        orbit = critical_orbit(c, config.orbit_budget)
    _, beta = fixed_points(c)
    ambient = RInterval.symmetric(beta)
    per0 = PeriodicInterval(n=1, b=beta, beta=beta, multiplier=2 * beta, xi=float("inf"),
                            xi_capped=True, increasing=True)
    levels = [_make_level(c, 0, per0, ambient, None, ambient, False)]
    reason = "max_depth"
    while len(levels) <= config.max_depth:
        lev = levels[-1]
        if lev.alpha is None or not c < -0.75:
            reason = "alpha attracting"
            break
        A = RInterval.symmetric(lev.alpha)
        try:
            nest = build_principal_nest(c, orbit, config.max_levels, stride=lev.n,
                                        A=A if lev.n > 1 else None)
            n, P, per = detect_renormalization(c, nest)
        except DynamicsError as e:
            reason = f"{type(e).__name__}: {e}"
            break
        levels[-1] = replace(lev, nest=nest)
        P_min = P != RInterval.symmetric(per.b)
        new = _make_level(c, lev.k + 1, per, P, lev.B, ambient, P_min)
        levels.append(new)
        if new.P.length < config.p_guard:
            reason = "precision guard"
            break
    return RenormTower(c, tuple(levels), reason)


def sigma(tower, k):
    """|B^{k+1}| / |B^k|."""
    if k + 1 >= len(tower.levels):
        raise IndexError(f"tower has no level {k + 1}")
    return tower.levels[k + 1].sigma


def divides_ratio(c, level):
    """Split of [alpha_k, beta_k'] by the zero of f_k between them, min/max."""
    if level.alpha is None:
        raise NoPreimageInInterval("f_k has an attracting fixed point")
    a = level.alpha
    bp = level.B.hi if a > 0 else level.B.lo
    n = level.n
    ga, gb = fn(c, a, n), fn(c, bp, n)
    if ga == 0.0:
        eta = a
    elif (ga < 0) == (gb < 0):
        raise NoPreimageInInterval(f"no zero of f_{level.k} in [{a}, {bp}]")
    else:
        eta = bisect(lambda x: fn(c, x, n), a, bp, fa=ga)
    u, v = abs(eta - a), abs(bp - eta)
    return min(u, v) / max(u, v)


__all__ = [
    "RenormLevel", "RenormTower", "TowerConfig", "build_tower", "choose_P", "cycle_of",
    "detect_renormalization", "divides_ratio", "psi_range",
    "sigma", "unimodality_interval",
]
