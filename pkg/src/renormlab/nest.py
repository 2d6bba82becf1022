"""Principal nest, central cascades, Markov families and the essential period.

The nest is built for g = f^stride on its interval A (stride 1 and A = [alpha,
alpha'] for the base map; the tower reuses it on renormalizations).  Return
times are counted in iterates of g; orbit samples are always orbits of f.

Indexing of the non-central set: level m is non-central when the return of
the critical point to I^m is non-central, i.e. t(m+1) > t(m).  Cascades then
run over I^{m(k)+1} > ... > I^{m(k+1)} with return map h_k = g_{m(k)+1}.
"""

from __future__ import annotations

import bisect as _bisect
import os
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import (
    AlphaAttracting,
    CriticalValueOutside,
    NoPreimage,
    NoReturnWithinBudget,
    NotRenormalizable,
)
from .periodic import PeriodicInterval, find_periodic_interval, periodic_interval_at
from .realdyn import (
    RInterval,
    alpha_interval,
    critical_pullback,
    first_return_time,
    interval_image,
    monotone_pullback_step,
)

DEFAULT_MAX_LEVELS = 20_000
DEFAULT_GUARD = 1e-9
SADDLE_NODE = "SaddleNode"
ULAM_NEUMANN = "UlamNeumann"


def precision_guard():
    return float(os.environ.get("RENORMLAB_PRECISION_GUARD", DEFAULT_GUARD))


@dataclass(frozen=True)
class NestLevel:
    m: int
    interval: RInterval
    return_time: int
    return_domains: tuple = ()
    return_domain_times: tuple = ()
    gaps: tuple = ()


@dataclass(frozen=True)
class PrincipalNest:
    c: float
    stride: int
    levels: tuple
    noncentral_set: tuple
    height: int
    immediately_renormalizable: bool
    stop_reason: str
    renormalization: PeriodicInterval | None = None
    A: RInterval | None = None
    # return time to the deepest level when the next level could not be resolved
    pending_return_time: int | None = None

    @property
    def return_times(self):
        return [lev.return_time for lev in self.levels]

    @property
    def radii(self):
        return np.array([lev.interval.hi for lev in self.levels])

    def level_of(self, y):
        """Unique l with y in I^l minus I^{l+1}; boundary hits go outward; -1 outside I^0."""
        r = self.radii
        # radii are non-increasing; count levels strictly containing |y|
        return int(np.count_nonzero(abs(y) < r)) - 1


@dataclass(frozen=True)
class CascadeRecord:
    k: int
    m_start: int
    m_end: int
    kind: str
    length: int
    return_time: int
    depth: int | None = None
    neglectable: tuple = (0, 0)  # open range (lo, hi)
    depth_flag: str = "not computed"
    markov: tuple = ()
    markov_truncated: bool = False

    def is_neglectable(self, level):
        lo, hi = self.neglectable
        return lo < level < hi


@dataclass(frozen=True)
class EssentialPeriodReport:
    period: int
    essential_period: int
    removed_indices: tuple
    per_interval_levels: dict = field(default_factory=dict)


def noncentral_set(return_times):
    """X from t(1..M): {0} plus every m with t(m+1) > t(m)."""
    t = list(return_times)
    X = [0]
    for m in range(1, len(t) - 1):
        if t[m + 1] > t[m]:
            X.append(m)
    return tuple(X)


def _pull_back_along(c, J, orbit, start, stop):
    """Monotone pullback of J along orbit[stop-1], ..., orbit[start]."""
    for j in range(stop - 1, start - 1, -1):
        J = monotone_pullback_step(c, J, 1 if orbit[j] > 0 else -1)
    return J


def is_immediately_renormalizable(c, A, stride=1):
    img = interval_image(c, interval_image(c, A, stride), stride)
    return A.contains_interval(img)


def build_principal_nest(c, orbit, max_levels=DEFAULT_MAX_LEVELS, *, stride=1, A=None,
                         guard=None, domains=False):
    """Principal nest of g = f^stride on A.

    Stops at ``max_levels``, at the precision guard, when the critical orbit
    sample runs out, or when the return time has stabilised at n and g has a
    genuine periodic interval of period n inside the current level (the
    renormalization tail, which would otherwise be an infinite cascade).
    """
    guard = precision_guard() if guard is None else guard
    if A is None:
        if stride != 1:
            raise ValueError("A is required for stride > 1")
        if not c < -0.75:
            raise AlphaAttracting(f"alpha is not repelling at c={c}")
        A = alpha_interval(c)
    if is_immediately_renormalizable(c, A, stride):
        per = periodic_interval_at(c, 2 * stride, A.hi)
        return PrincipalNest(c, stride, (), (), -1, True, "immediately renormalizable",
                             per, A)

    levels = [NestLevel(0, A, 0)]
    tested = {}
    reason = "max_levels"
    renorm = None
    pending = None
    for m in range(1, max_levels + 1):
        prev = levels[-1].interval
        try:
            t = first_return_time(c, prev, orbit, stride)
        except NoReturnWithinBudget:
            reason = "orbit budget"
            break
        try:
            J = _pull_back_along(c, prev, orbit, 1, stride * t)
            Im = critical_pullback(c, J)
        except (NoPreimage, CriticalValueOutside):
            # |I^m|^2 has sunk below the rounding of the critical value
            reason, pending = "precision guard", t
            break
        if Im.length < guard:
            reason, pending = "precision guard", t
            break
        levels.append(NestLevel(m, Im, t))
        if m >= 2 and t == levels[-2].return_time:
            n = stride * t
            # a failed test is retried once the level has halved in size
            if n not in tested or (tested[n][0] is None and Im.hi < 0.5 * tested[n][1]):
                tested[n] = (find_periodic_interval(c, n, prev.hi), Im.hi)
            per = tested[n][0]
            if per is not None and per.b <= Im.hi * (1 + 1e-9):
                reason = "renormalized"
                renorm = per
                break
    if domains:
        levels = [levels[0]] + [
            _with_domains(c, levels, m, orbit, stride) for m in range(1, len(levels))]
    times = [lev.return_time for lev in levels]
    X = noncentral_set(times + ([pending] if pending is not None else []))
    return PrincipalNest(c, stride, tuple(levels), X, len(X) - 1, False, reason, renorm, A,
                         pending)


def return_domains(c, nest, m, orbit, max_domains=5000):
    """First-return domains to I^{m-1} meeting the orbit sample, central one first.

    Returns (domains, return_times) with times in iterates of g.
    """
    s = nest.stride
    P = nest.levels[m - 1].interval
    central = nest.levels[m].interval
    pts = orbit[::s]
    sl = P.slack()
    hits = np.flatnonzero((pts >= P.lo - sl) & (pts <= P.hi + sl))
    found = []  # sorted by lo: (lo, hi, time)
    los = []
    for a, b in zip(hits[:-1], hits[1:]):
        x = pts[a]
        if central.contains(x, slack=False):
            continue
        i = _bisect.bisect_right(los, x) - 1
        if i >= 0 and found[i][0] <= x <= found[i][1]:
            continue
        try:
            D = _pull_back_along(c, P, orbit, s * a, s * b)
        except NoPreimage:
            continue
        pos = _bisect.bisect_left(los, D.lo)
        los.insert(pos, D.lo)
        found.insert(pos, (D.lo, D.hi, int(b - a)))
        if len(found) >= max_domains:
            break
    doms = [central] + [RInterval(lo, hi) for lo, hi, _ in found]
    times = [nest.levels[m].return_time] + [t for _, _, t in found]
    return doms, times


def gaps_of(P, domains):
    out = []
    cur = P.lo
    for D in sorted(domains, key=lambda d: d.lo):
        if D.lo > cur:
            out.append(RInterval(cur, D.lo))
        cur = max(cur, D.hi)
    if cur < P.hi:
        out.append(RInterval(cur, P.hi))
    return out


def _with_domains(c, levels, m, orbit, stride):
    tmp = PrincipalNest(c, stride, tuple(levels), (), 0, False, "")
    doms, times = return_domains(c, tmp, m, orbit)
    gaps = gaps_of(levels[m - 1].interval, doms)
    return replace(levels[m], return_domains=tuple(doms), return_domain_times=tuple(times),
                   gaps=tuple(gaps))


def detect_cascades(c, nest):
    """Cascades between consecutive non-central levels, classified by one image test."""
    if len(nest.levels) < 2:
        return []
    X = nest.noncentral_set
    out = []
    for k, (m0, m1) in enumerate(zip(X[:-1], X[1:])):
        top = nest.levels[m0 + 1]
        t = top.return_time
        img = interval_image(c, top.interval, nest.stride * t)
        kind = ULAM_NEUMANN if img.contains_interior(0.0) else SADDLE_NODE
        out.append(CascadeRecord(k=k, m_start=m0, m_end=m1, kind=kind, length=m1 - m0,
                                 return_time=t))
    return out


def depth_and_neglectable(c, nest, cascade, orbit):
    """(d_k, neglectable open range, flag) from the orbit sample."""
    pts = orbit[::nest.stride]
    top = nest.levels[cascade.m_start].interval
    inner = nest.levels[cascade.m_start + 1].interval
    in_top = np.abs(pts) < top.hi
    hits = np.flatnonzero(in_top)
    if hits.size < 2:
        return 0, (cascade.m_start, cascade.m_start), "no annulus points"
    x = pts[hits[:-1]]
    y = pts[hits[1:]]
    annulus = np.abs(x) >= inner.hi
    if not annulus.any():
        return 0, (cascade.m_start, cascade.m_start), "no annulus points"
    r = nest.radii
    # landing level of h_k x: number of levels strictly containing |y|, minus 1
    ay = np.abs(y[annulus])
    order = np.argsort(-r)  # r is non-increasing already; keep explicit
    rs = r[order][::-1]  # ascending
    counts = len(rs) - np.searchsorted(rs, ay, side="right")
    j = counts - 1
    d = np.minimum(j - cascade.m_start, cascade.m_end - j)
    dk = int(max(0, d.max()))
    return dk, (cascade.m_start + dk, cascade.m_end - dk), "ok"


def markov_family(c, nest, cascade, domains, max_intervals=20_000):
    """Markov intervals of a cascade: (level, K) with K in I^{level-1} minus I^level.

    ``domains`` are the non-central return domains K^{m(k)+1}; each is pulled
    back through the central branch of h_k as long as it stays in its image.
    Both symmetric preimages are recorded.  Returns (intervals, truncated).
    """
    s, t = nest.stride, cascade.return_time
    orbit0 = [0.0]
    for _ in range(s * t):
        orbit0.append(orbit0[-1] ** 2 + c)
    out = []
    for D in domains:
        K = D
        for i in range(1, cascade.length):
            level = cascade.m_start + i + 1
            outer = nest.levels[level - 1].interval
            inner = nest.levels[level].interval
            try:
                J = _pull_back_along(c, K, orbit0, 1, s * t)
                pre = monotone_pullback_step(c, J, 1)
            except NoPreimage:
                break
            if not (outer.contains_interval(pre) and pre.lo >= inner.hi * (1 - 1e-12)):
                break
            mirrored = RInterval(-pre.hi, -pre.lo)
            out.append((level, mirrored))
            out.append((level, pre))
            if len(out) >= max_intervals:
                return tuple(out), True
            # continue from whichever component lies in the image of h_k
            img = interval_image(c, nest.levels[cascade.m_start + 1].interval,
                                 s * t)
            K = pre if img.contains_interval(pre) else mirrored
            if not img.contains_interval(K):
                break
    return tuple(out), False


def analyze_cascades(c, nest, orbit, with_markov=False):
    out = []
    for cas in detect_cascades(c, nest):
        dk, rng, flag = depth_and_neglectable(c, nest, cas, orbit)
        cas = replace(cas, depth=dk, neglectable=rng, depth_flag=flag)
        if with_markov:
            lev = nest.levels[cas.m_start + 1]
            doms = lev.return_domains[1:] if lev.return_domains else ()
            mk, tr = markov_family(c, nest, cas, doms)
            cas = replace(cas, markov=mk, markov_truncated=tr)
        out.append(cas)
    return out


def essential_period(c, nest, cascades, period, orbit):
    """Essential period of the period-``period`` cycle (period in iterates of g).

    Index i is removed when, for some cascade k, the first entry of g^i(0)
    into I^{m(k)} lands at a neglectable level of that cascade.
    """
    if period is None or period < 1:
        raise NotRenormalizable("no renormalization period")
    pts = orbit[::nest.stride]
    if len(pts) < period:
        raise NotRenormalizable("orbit sample shorter than the period")
    removed = []
    table = {}
    active = [k for k in cascades if k.neglectable[1] - k.neglectable[0] > 1]
    next_hit = {}
    for cas in active:
        top = nest.levels[cas.m_start].interval
        next_hit[cas.k] = np.flatnonzero(np.abs(pts) < top.hi)
    for i in range(period):
        landings = []
        drop = False
        for cas in active:
            hits = next_hit[cas.k]
            pos = np.searchsorted(hits, i)
            if pos >= len(hits):
                continue
            y = pts[hits[pos]]
            level = nest.level_of(y)
            landings.append((cas.k, level))
            if cas.is_neglectable(level):
                drop = True
        table[i] = tuple(landings)
        if drop:
            removed.append(i)
    return EssentialPeriodReport(period=period, essential_period=period - len(removed),
                                 removed_indices=tuple(removed), per_interval_levels=table)


def commensurability_table(nest, cascades, pbar):
    """Per-level ratios against the half-annulus width |I^{m-1}| - |I^m| (over 2).

    Rows: (m, deep, central_ratio, min_noncentral, max_noncentral, min_gap, max_gap).
    Only levels carrying return domains contribute non-central and gap entries.
    """
    deep = set()
    for cas in cascades:
        for m in range(cas.m_start + pbar, cas.m_end - pbar + 1):
            deep.add(m)
    rows = []
    for m in range(1, len(nest.levels)):
        lev = nest.levels[m]
        w = nest.levels[m - 1].interval.hi - lev.interval.hi
        if w <= 0:
            continue
        nc = [D.length / w for D in lev.return_domains[1:]]
        gp = [G.length / w for G in lev.gaps]
        rows.append((m, m in deep, lev.interval.length / w,
                     min(nc) if nc else None, max(nc) if nc else None,
                     min(gp) if gp else None, max(gp) if gp else None))
    return rows
