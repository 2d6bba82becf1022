"""Empirical checks of the complex-bounds machinery on concrete maps.

Every check returns a report dataclass; nothing here asserts.  Complex points
are plain ``complex`` numbers internally, wrapped as ``CPoint`` in reports.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.spatial import ConvexHull, QhullError
from scipy.stats import spearmanr

from .cgeom import (
    CPoint,
    angle_to_interval,
    geodisk_theta,
    in_geodisk,
    in_Q,
    in_S,
    inverse_step,
    inverse_step_array,
    subtended_angle_array,
)
from .errors import (
    DegeneratePosition,
    InsufficientData,
    SamplingFailure,
    WrongCascadeKind,
)
from .nest import SADDLE_NODE
from .realdyn import RInterval, fn, monotone_pullback_step, monotonicity_interval

DEFAULT_EPS = 0.05
DEFAULT_KBAR = 64.0


@dataclass(frozen=True)
class VerifyConfig:
    eps: float = DEFAULT_EPS
    Kbar: float = DEFAULT_KBAR
    quad_radius: float = 5.0
    quad_points: int = 10_000
    julia_grid: int = 400
    julia_max_iter: int = 500
    contraction_samples: int = 100
    cascade_trials: int = 200
    cascade_dmax: float = 100.0
    seed: int = 0


# ---------------------------------------------------------------- contraction

@dataclass(frozen=True)
class StepRecord:
    s: int
    J: RInterval
    z: CPoint
    angle: float
    good: bool
    jumped: bool
    moment: str | None = None    # classification at a return moment


@dataclass(frozen=True)
class JumpTrace:
    steps: tuple
    first_jump: int | None
    jump_eps: float

    @property
    def unclassified(self):
        return [st.s for st in self.steps if st.moment == "Unclassified"]


@dataclass(frozen=True)
class ContractionReport:
    k: int
    z0: CPoint
    ratio_in: float
    ratio_out: float
    C_measured: float
    trace: JumpTrace
    outcome: str                 # JumpedGood | ReachedV_tau
    final_in_V: bool
    eps: float
    Kbar: float


def j_orbit(level):
    """[J_0, J_-1, ..., J_-(n-1)] = [P, P_{n-1}, ..., P_1]."""
    cyc = level.cycle
    n = level.n
    return [cyc[0]] + [cyc[n - s] for s in range(1, n)]


def v_tau(tower, k):
    """Target interval at the end of a level-k trial."""
    parent = tower.levels[k - 1]
    nest = parent.nest
    if nest is None or nest.immediately_renormalizable:
        return parent.B
    X = nest.noncentral_set
    chi = nest.height
    idx = X[chi - 1] - 1 if chi >= 1 else -1
    if idx < 0:
        return parent.B
    return nest.levels[idx].interval


def _return_levels(tower, k, n, s):
    # coarser levels l (1 <= l < k) whose central interval holds J_{-s}
    return [l for l in range(1, k) if (n - s) % tower.levels[l].n == 0]


def _classify(z, tower, levels_hit, jumped_before, jumped_now):
    if jumped_before:
        return "AfterJump"
    if jumped_now:
        return "Jumped"
    deepest = max(levels_hit)
    for l in range(deepest, -1, -1):
        if in_geodisk(z, tower.levels[l].B, math.pi / 2):
            return f"InDisk({l},{deepest - l})"
    return "Unclassified"


def run_contraction_trial(tower, k, z0, eps=DEFAULT_EPS, Kbar=DEFAULT_KBAR):
    if k < 1 or k >= len(tower.levels):
        raise ValueError(f"level {k} is not a renormalization level of this tower")
    c = tower.c
    level = tower.levels[k]
    Js = j_orbit(level)
    n = level.n
    z0 = CPoint.of(z0)
    J0 = Js[0]
    ratio_in = J0.dist(z0.z) / J0.length
    steps = []
    first_jump = None
    z = z0
    for s in range(0, n):
        if s > 0:
            z = inverse_step(c, z, Js[s].side())
        J = Js[s]
        try:
            ang = angle_to_interval(z, J)
        except DegeneratePosition:
            ang = float("nan")
        good = J.length >= J0.length / Kbar
        jumped = bool(ang >= eps - 1e-12) if ang == ang else False
        moment = None
        if s > 0:
            hit = _return_levels(tower, k, n, s)
            if hit:
                moment = _classify(z, tower, hit, first_jump is not None, jumped and good)
        if jumped and good and first_jump is None:
            first_jump = s
        steps.append(StepRecord(s, J, z, ang, good, jumped, moment))
    Jlast = Js[-1]
    ratio_out = Jlast.dist(z.z) / Jlast.length
    # last (critical) pullback, tested against V_tau
    w = complex(np.sqrt(complex(z.z) - c))
    final_in_V = in_geodisk(w, v_tau(tower, k), math.pi / 2)
    outcome = "JumpedGood" if first_jump is not None else "ReachedV_tau"
    return ContractionReport(k, z0, ratio_in, ratio_out, ratio_out / ratio_in,
                             JumpTrace(tuple(steps), first_jump, eps), outcome,
                             bool(final_in_V), eps, Kbar)


def contraction_samples(level, n, rng):
    """n points on |z - mid(P)| = 2|P|, off the real axis."""
    P = level.P
    phi = rng.uniform(0.0, 2.0 * np.pi, n)
    phi = np.where(np.abs(np.sin(phi)) < 1e-6, phi + 0.1, phi)
    return P.mid + 2.0 * P.length * np.exp(1j * phi)


@dataclass(frozen=True)
class ContractionSummary:
    k: int
    C_max: float
    C_median: float
    n_trials: int
    jumped: int
    unclassified: int
    reports: tuple = field(default=(), repr=False)


def contraction_level(tower, k, n_samples=100, seed=0, eps=DEFAULT_EPS, Kbar=DEFAULT_KBAR):
    rng = np.random.default_rng([seed, k])
    reps = [run_contraction_trial(tower, k, z, eps, Kbar)
            for z in contraction_samples(tower.levels[k], n_samples, rng)]
    C = np.array([r.C_measured for r in reps])
    return ContractionSummary(
        k=k, C_max=float(C.max()), C_median=float(np.median(C)), n_trials=len(reps),
        jumped=sum(r.outcome == "JumpedGood" for r in reps),
        unclassified=sum(len(r.trace.unclassified) for r in reps), reports=tuple(reps))


# ------------------------------------------------------------ jump dichotomy

@dataclass(frozen=True)
class DichotomyResult:
    outcome: str                  # Jumped | InS | Neither
    k: int | None
    theta_star: float | None      # least theta with z' in D_theta(H)
    in_S: bool
    H: RInterval | None
    J_final: RInterval


def monotone_pullback(c, J, signs):
    out = [J]
    for s in signs:
        out.append(monotone_pullback_step(c, out[-1], s))
    return out


def jump_dichotomy_check(c, J, signs, z0, eps=DEFAULT_EPS, T=None):
    """First eps-jump of the backward orbit of z0 along a monotone pullback of J,
    or membership of the end point in the wedge pair cut off by D_theta(H_l)."""
    Js = monotone_pullback(c, J, signs)
    z = CPoint.of(z0)
    for k, Jk in enumerate(Js):
        if k > 0:
            z = inverse_step(c, z, signs[k - 1])
        if in_Q(z, Jk, eps):
            return DichotomyResult("Jumped", k, None, False, None, Jk)
    Jp = Js[-1]
    if T is None:
        from .realdyn import beta_interval
        T = beta_interval(c)
    H = monotonicity_interval(c, Jp.mid, len(signs), T)
    theta = geodisk_theta(z, H)
    ok = theta < math.pi and in_S(z, H, Jp, min(math.pi - 1e-15, theta + 1e-12), eps)
    return DichotomyResult("InS" if ok else "Neither", None, theta, bool(ok), H, Jp)


def random_monotone_itinerary(rng, c, J, max_len):
    """Random signs for which every pullback of J stays to the right of c."""
    signs = []
    cur = J
    for _ in range(int(rng.integers(1, max_len + 1))):
        opts = []
        for s in (1, -1):
            try:
                nxt = monotone_pullback_step(c, cur, s)
            except Exception:
                continue
            if nxt.lo > c and not nxt.contains_interior(0.0) and nxt.length > 0:
                opts.append((s, nxt))
        if not opts:
            break
        s, cur = opts[int(rng.integers(len(opts)))]
        signs.append(s)
    return signs


def fit_kappa(results, eps):
    """Least kappa >= 0 with theta* <= pi/2 + kappa*eps over the InS outcomes."""
    th = [r.theta_star for r in results if r.outcome == "InS"]
    if not th:
        return 0.0
    return max(0.0, max((t - math.pi / 2) / eps for t in th))


def dichotomy_trials(n_trials=1000, eps=DEFAULT_EPS, seed=0, max_len=20, c_range=(-2.0, -1.3)):
    """Random (c, J, itinerary, z0) with z0 within angle eps of an outward ray of J
    and inside D(T), T = [-beta, beta]; returns the DichotomyResult list."""
    from .realdyn import fixed_points
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < n_trials:
        c = float(rng.uniform(*c_range))
        beta = fixed_points(c)[1]
        T = RInterval(-beta, beta)
        a = float(rng.uniform(c + 0.05, beta - 0.1))
        b = float(rng.uniform(a + 0.01, min(beta, a + 0.5)))
        if a < 0.0 < b:
            a, b = (0.02, b) if b > 0.03 else (a, -0.02)
        J = RInterval(a, b)
        signs = random_monotone_itinerary(rng, c, J, max_len)
        right = rng.random() < 0.5
        end, d = (J.hi, 1.0) if right else (J.lo, -1.0)
        r = float(rng.uniform(0.01, 1.0)) * J.length
        phi = float(rng.uniform(-1.0, 1.0)) * eps * 0.99
        z0 = complex(end + d * r * math.cos(phi), r * math.sin(phi))
        if not in_geodisk(z0, T, math.pi / 2):
            continue
        out.append(jump_dichotomy_check(c, J, signs, z0, eps, T))
    return out


# ------------------------------------------------------------ schwarz and square roots

@dataclass(frozen=True)
class SchwarzReport:
    pairs: int
    samples: int
    violations: int
    worst_excess: float          # max of theta(z') - theta over all samples


def schwarz_trials(n_pairs=10, n_points=1000, max_len=20, seed=0, slack=1e-9):
    """Pull samples of D_theta(J) back along random monotone itineraries and
    measure how far the images stick out of D_theta(J')."""
    from .realdyn import fixed_points
    rng = np.random.default_rng(seed)
    total = bad = 0
    worst = -math.inf
    pairs = 0
    while pairs < n_pairs:
        c = float(rng.uniform(-2.0, -0.8))
        beta = fixed_points(c)[1]
        a = float(rng.uniform(c + 0.05, beta - 0.05))
        b = float(rng.uniform(a + 0.01, beta))
        J = RInterval(a, b)
        signs = random_monotone_itinerary(rng, c, J, max_len)
        if not signs:
            continue
        pairs += 1
        theta = float(rng.uniform(0.1, math.pi - 0.1))
        Jp = monotone_pullback(c, J, signs)[-1]
        # boundary arcs of smaller disks fill D_theta(J); flip half to the lower side
        th = rng.uniform(0.0, theta, n_points)
        h = np.tan(th / 2.0) * J.length / 2.0
        R = (J.length ** 2 / 4.0 + h * h) / (2.0 * h)
        y0 = h - R
        phi0 = np.arcsin(np.clip(-y0 / R, -1.0, 1.0))
        phi = phi0 + rng.uniform(0.0, 1.0, n_points) * (np.pi - 2.0 * phi0)
        z = J.mid + y0 * 1j + R * np.exp(1j * phi)
        z = np.where(rng.random(n_points) < 0.5, z, z.conj())
        w = z
        for s in signs:
            w = inverse_step_array(c, w, s)
        excess = (np.pi - subtended_angle_array(w, Jp)) - theta
        real_in = (w.imag == 0.0) & (w.real >= Jp.lo) & (w.real <= Jp.hi)
        excess = np.where(real_in, -theta, excess)
        total += n_points
        bad += int(np.count_nonzero(excess > slack))
        worst = max(worst, float(excess.max()))
    return SchwarzReport(pairs, total, bad, worst)


def sqrt_angle_grid(n=10_000, theta_max=math.pi / 2):
    """Smallest angle between sqrt(zeta) and the positive axis over a grid of zeta
    whose angle to the slit R_- is at most theta_max (both half-planes)."""
    m = max(2, int(round(math.sqrt(n))))
    r = np.logspace(-6, 6, m)
    th = np.linspace(0.0, theta_max, m)
    zeta = (r[:, None] * np.exp(1j * (np.pi - th[None, :]))).ravel()
    w = inverse_step_array(0.0, np.concatenate([zeta, zeta.conj()]), 1)
    return float(np.min(np.abs(np.angle(w))))


# ------------------------------------------------------------ quad estimate

def u_prime_mask(c, z, level, T=None):
    """Points of the domain of the double cover f_k : U' -> C_T."""
    n = level.n
    T = level.T if T is None else T
    ok = np.ones(z.shape, dtype=bool)
    w = z
    for j in range(1, n):
        w = w * w + c
        s = level.cycle[j].side()
        if s:
            ok &= (s * w.real) > 0
    w = w * w + c
    ok &= ~((w.imag == 0.0) & ((w.real < T.lo) | (w.real > T.hi)))
    return ok, w


def quad_estimate(tower, k, R=5.0, n_points=10_000, r_min=1.0):
    """min |F(u)|/|u|^2 over the annulus r_min <= |u| <= R inside the domain,
    F the level-k map rescaled so that B^k is [-1, 1] (level 0 is not rescaled)."""
    level = tower.levels[k]
    c = tower.c
    b = 1.0 if k == 0 else level.B.hi
    m = max(2, int(round(math.sqrt(n_points))))
    r = np.linspace(r_min, R, m)
    phi = (np.arange(m) + 0.5) * (2 * np.pi / m)
    u = (r[:, None] * np.exp(1j * phi[None, :])).ravel()
    if k == 0:
        F = fn(c, u, 1)
        mask = np.ones(u.shape, dtype=bool)
    else:
        mask, w = u_prime_mask(c, b * u, level)
        F = w / b
    if not mask.any():
        return float("nan")
    q = np.abs(F[mask]) / np.abs(u[mask]) ** 2
    return float(q.min())


# ------------------------------------------------------------ little Julia

@dataclass(frozen=True)
class JuliaSample:
    k: int
    points: np.ndarray = field(repr=False)
    diam: float
    sector_theta: float
    commensurability: float
    modulus_proxy: float
    r_in: float
    r_out: float
    grid_n: int
    max_iter: int

    @property
    def sector_margin(self):
        return math.pi - self.sector_theta


def _diameter(pts):
    if len(pts) < 3:
        return float(np.max(np.abs(pts[:, None] - pts[None, :]))) if len(pts) else 0.0
    xy = np.column_stack([pts.real, pts.imag])
    try:
        hull = xy[ConvexHull(xy).vertices]
    except QhullError:
        hull = xy
    d = hull[:, None, :] - hull[None, :, :]
    return float(np.sqrt((d ** 2).sum(-1)).max())


def sample_little_julia(tower, k, grid_n=400, max_iter=500):
    level = tower.levels[k]
    c, n, T = tower.c, level.n, level.T
    R0 = max(abs(T.lo), abs(T.hi))
    # odd size so that both axes, and hence the real points of P, are sampled
    xs = np.linspace(-R0, R0, grid_n | 1)
    z0 = (xs[None, :] + 1j * xs[:, None]).ravel()
    sides = [level.cycle[j].side() for j in range(n)]
    centre, esc = T.mid, 2.0 * T.length
    idx = np.arange(z0.size)
    w = z0.copy()
    with np.errstate(over="ignore", invalid="ignore"):
        for _ in range(max_iter):
            for j in range(1, n + 1):
                w = w * w + c
                if j < n and sides[j]:
                    keep = (sides[j] * w.real) > 0
                    w, idx = w[keep], idx[keep]
            keep = (np.abs(w - centre) <= esc) & ~(
                (w.imag == 0.0) & ((w.real < T.lo) | (w.real > T.hi)))
            w, idx = w[keep], idx[keep]
            if idx.size == 0:
                break
    pts = z0[idx]
    if pts.size == 0:
        raise SamplingFailure(f"no grid point of level {k} survived; refine the grid")
    # the real trace of the filled set is exactly B; its repelling ends cannot
    # survive 500 rounded iterations, so the slice is added directly
    pts = np.concatenate([pts, np.linspace(level.B.lo, level.B.hi, grid_n | 1) + 0j])
    diam = _diameter(pts)
    th = np.pi - subtended_angle_array(pts, level.B)
    th[(pts.imag == 0) & (np.abs(pts.real) <= level.B.hi)] = 0.0
    sector = float(th.max())
    r_in = float(np.abs(pts).max())
    r_out = float(min(-T.lo, T.hi))
    proxy = math.log(r_out / r_in) / (2 * math.pi) if r_out > 0 else float("-inf")
    return JuliaSample(k=k, points=pts, diam=diam, sector_theta=sector,
                       commensurability=diam / level.P.length, modulus_proxy=proxy,
                       r_in=r_in, r_out=r_out, grid_n=grid_n, max_iter=max_iter)


# ------------------------------------------------------------ cascades

def return_branch(c, nest, cascade):
    """(chain signs for f^(t-1) .. f^1, final side) of the inverse branch of h_k
    that keeps E_{-i} inside the image of the central interval."""
    t = nest.stride * cascade.return_time
    orbit = [0.0]
    for _ in range(t):
        orbit.append(orbit[-1] ** 2 + c)
    chain = [1 if orbit[j] > 0 else -1 for j in range(t - 1, 0, -1)]
    side = 1 if orbit[t] > 0 else -1
    return chain, side


def _gap_in_range(c, nest, cascade, side, inner, top):
    # the outer gap on the critical-value side, clipped to h_k(inner) so it stays pullable
    t = nest.stride * cascade.return_time
    a, b = fn(c, 0.0, t), fn(c, inner.hi, t)
    lo = max(min(side * inner.hi, side * top.hi), min(a, b))
    hi = min(max(side * inner.hi, side * top.hi), max(a, b))
    if hi <= lo:
        return RInterval.of(side * inner.hi, side * top.hi)
    return RInterval(lo, hi)


def _apply_branch(c, z, chain, side):
    for s in chain:
        z = inverse_step_array(c, z, s)
    return inverse_step_array(c, z, side)


def _apply_branch_real(c, J, chain, side):
    for s in chain:
        J = monotone_pullback_step(c, J, s)
    return monotone_pullback_step(c, J, side)


@dataclass(frozen=True)
class TrackResult:
    outcome: str          # InDisk | JumpedWithDist | Violation
    steps: int
    d: float | None
    angle: float | None
    z_final: CPoint

    @property
    def satisfies(self):
        return self.outcome != "Violation"


def track_cascade(c, nest, cascade, z, eps=DEFAULT_EPS, steps=None, dmax=100.0):
    """Pull z back ``steps`` times (default: length - 1) through the cascade."""
    top = nest.levels[cascade.m_start].interval
    inner = nest.levels[cascade.m_start + 1].interval
    chain, side = return_branch(c, nest, cascade)
    j = max(1, cascade.length - 1) if steps is None else steps
    E = _gap_in_range(c, nest, cascade, side, inner, top)
    w = np.array([CPoint.of(z).z])
    for _ in range(j):
        w = _apply_branch(c, w, chain, side)
        E = _apply_branch_real(c, E, chain, side)
    zf = complex(w[0])
    return _judge(zf, E, top, j, eps, dmax)


def _judge(zf, E, top, j, eps, dmax):
    if abs(zf - top.mid) <= top.length / 2:
        return TrackResult("InDisk", j, None, None, CPoint.of(zf))
    try:
        ang = angle_to_interval(zf, E)
    except DegeneratePosition:
        ang = math.pi / 2
    d = E.dist(zf) / top.length
    ok = ang > eps and d <= dmax
    return TrackResult("JumpedWithDist" if ok else "Violation", j, d, ang, CPoint.of(zf))


def track_cascade_trials(c, nest, cascade, n_trials=200, eps=DEFAULT_EPS, seed=0, dmax=100.0):
    """Random z in D(I^{m(k)}) (upper half) and random depths 1..length-1."""
    rng = np.random.default_rng(seed)
    top = nest.levels[cascade.m_start].interval
    inner = nest.levels[cascade.m_start + 1].interval
    chain, side = return_branch(c, nest, cascade)
    rad = top.length / 2
    r = rad * np.sqrt(rng.uniform(1e-6, 1.0, n_trials))
    phi = rng.uniform(1e-3, np.pi - 1e-3, n_trials)
    z = top.mid + r * np.exp(1j * phi)
    depth = rng.integers(1, max(2, cascade.length), n_trials)
    E = _gap_in_range(c, nest, cascade, side, inner, top)
    out = [None] * n_trials
    w = z.copy()
    for j in range(1, int(depth.max()) + 1):
        w = _apply_branch(c, w, chain, side)
        E = _apply_branch_real(c, E, chain, side)
        for i in np.flatnonzero(depth == j):
            out[i] = _judge(complex(w[i]), E, top, j, eps, dmax)
    return out


def parabolic_proximity(c, nest, cascade, grid=4001):
    """min over the central interval of the sign-adjusted gap h_k(x) - x, over |I^{m(k)}|."""
    if cascade.kind != SADDLE_NODE:
        raise WrongCascadeKind(f"cascade {cascade.k} is {cascade.kind}")
    t = nest.stride * cascade.return_time
    top = nest.levels[cascade.m_start].interval
    I1 = nest.levels[cascade.m_start + 1].interval
    s = 1.0 if fn(c, 0.0, t) > 0 else -1.0
    x = np.linspace(I1.lo, I1.hi, grid)
    gap = s * (fn(c, x, t) - x)
    i = int(np.argmin(gap))
    lo, hi = x[max(i - 1, 0)], x[min(i + 1, grid - 1)]
    res = minimize_scalar(lambda u: s * (fn(c, u, t) - u), bounds=(lo, hi), method="bounded",
                          options={"xatol": 1e-14})
    g = min(float(gap[i]), float(res.fun))
    return g / top.length


# ------------------------------------------------------------ trends

@dataclass(frozen=True)
class TrendReport:
    rho_sigma: float
    rho_modulus: float
    n: int
    defined: bool
    pe: tuple
    sigma: tuple
    modulus: tuple


def trend_sigma_vs_pe(entries, min_entries=10):
    """Spearman correlations of sigma and of the modulus proxy against p_e.

    ``entries``: iterable of (p_e, sigma, modulus_proxy).
    """
    rows = [(float(a), float(b), float(m)) for a, b, m in entries
            if all(np.isfinite([a, b, m]))]
    if len(rows) < min_entries:
        raise InsufficientData(f"need {min_entries} usable entries, got {len(rows)}")
    pe, sg, md = (np.array(v) for v in zip(*rows))
    if np.all(pe == pe[0]):
        return TrendReport(float("nan"), float("nan"), len(rows), False,
                           tuple(pe), tuple(sg), tuple(md))
    rs = spearmanr(sg, pe).statistic
    rm = spearmanr(md, pe).statistic
    return TrendReport(float(rs), float(rm), len(rows), True, tuple(pe), tuple(sg), tuple(md))


def goodangle_ratio(c, J, signs, z):
    """(dist(phi z, J')/|J'|) / (dist(z, J)/|J|) for the branch along ``signs``."""
    Js = monotone_pullback(c, J, signs)
    w = CPoint.of(z)
    for s in signs:
        w = inverse_step(c, w, s)
    Jp = Js[-1]
    return (Jp.dist(w.z) / Jp.length) / (J.dist(CPoint.of(z).z) / J.length)


def goodangle_constant(c, J, eps, n_samples=200, seed=0, max_len=12, n_itineraries=20,
                       reach=6.0):
    """Largest goodangle ratio over random z with dist(z, J) >= |J| and angle >= eps."""
    rng = np.random.default_rng(seed)
    its = [s for s in (random_monotone_itinerary(rng, c, J, max_len)
                       for _ in range(n_itineraries)) if s]
    if not its:
        raise SamplingFailure("no monotone itinerary from J")
    best = 0.0
    done = 0
    while done < n_samples:
        z = J.mid + J.length * rng.uniform(1.0, reach) * np.exp(1j * rng.uniform(0.0, np.pi))
        if J.dist(z) < J.length or angle_to_interval(z, J) < eps:
            continue
        best = max(best, goodangle_ratio(c, J, its[done % len(its)], z))
        done += 1
    return best


__all__ = [
    "ContractionReport", "ContractionSummary", "DichotomyResult", "JuliaSample", "JumpTrace",
    "SchwarzReport", "StepRecord", "TrackResult", "TrendReport", "VerifyConfig",
    "contraction_level", "dichotomy_trials", "fit_kappa", "goodangle_constant",
    "goodangle_ratio",
    "jump_dichotomy_check", "monotone_pullback", "parabolic_proximity", "quad_estimate",
    "random_monotone_itinerary", "run_contraction_trial", "sample_little_julia",
    "schwarz_trials", "sqrt_angle_grid", "track_cascade", "track_cascade_trials", "trend_sigma_vs_pe", "v_tau",
]
