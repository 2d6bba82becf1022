"""Slit-plane geometry around real intervals.

``C_J`` is the plane cut along the two real rays outside J.  A point that sits
exactly on one of those rays carries a bank tag telling which side it came from.
Angles are in radians; comparisons use an absolute slack of ANGLE_TOL.
"""

from __future__ import annotations

import math
import cmath
from dataclasses import dataclass

import numpy as np

from .errors import BranchCutAmbiguity, DegeneratePosition, InvalidNesting
from .realdyn import RInterval

ANGLE_TOL = 1e-12
UPPER = "Upper"
LOWER = "Lower"


@dataclass(frozen=True)
class CPoint:
    re: float
    im: float = 0.0
    bank: str | None = None

    def __post_init__(self):
        if self.bank is not None:
            if self.bank not in (UPPER, LOWER):
                raise ValueError(f"unknown bank {self.bank!r}")
            if self.im != 0.0:
                raise ValueError("a bank tag requires im == 0")

    @classmethod
    def of(cls, z, bank=None):
        if isinstance(z, CPoint):
            return z
        z = complex(z)
        return cls(z.real, z.imag, bank if z.imag == 0.0 else None)

    @property
    def z(self):
        return complex(self.re, self.im)

    def conj(self):
        flip = {UPPER: LOWER, LOWER: UPPER}.get(self.bank)
        return CPoint(self.re, -self.im if self.im else 0.0, flip)

    def neg(self):
        flip = {UPPER: LOWER, LOWER: UPPER}.get(self.bank)
        return CPoint(-self.re, -self.im if self.im else 0.0, flip)


@dataclass(frozen=True)
class GeoDisk:
    J: RInterval
    theta: float

    def __post_init__(self):
        if not 0.0 < self.theta < math.pi:
            raise ValueError("theta must lie in (0, pi)")

    @property
    def apex_height(self):
        return math.tan(self.theta / 2.0) * self.J.length / 2.0

    def contains(self, z):
        return in_geodisk(z, self)

    def boundary(self, n):
        """n points on the upper arc, endpoints excluded."""
        return geodisk_arc(self.J, self.theta, n)


def _z(z):
    return z.z if isinstance(z, CPoint) else complex(z)


def _on_interior(z, J):
    return z.imag == 0.0 and J.lo < z.real < J.hi


def angle_to_interval(z, J):
    """Least angle between [a, z], [b, z] and the outward rays at a and b."""
    w = _z(z)
    if _on_interior(w, J):
        raise DegeneratePosition(f"{w} lies inside [{J.lo}, {J.hi}]")
    da, db = w - J.lo, w - J.hi
    at_a = 0.0 if da == 0 else abs(math.atan2(da.imag, -da.real))
    at_b = 0.0 if db == 0 else abs(math.atan2(db.imag, db.real))
    return min(at_a, at_b)


def subtended_angle(z, J):
    """Angle under which J is seen from z, |arg((a - z)/(b - z))|."""
    w = _z(z)
    if w == J.lo or w == J.hi:
        return math.pi
    return abs(cmath.phase((J.lo - w) / (J.hi - w)))


def in_geodisk(z, d, theta=None):
    """Membership in D_theta(J); accepts a GeoDisk or (J, theta)."""
    if theta is not None:
        d = GeoDisk(d, theta)
    w = _z(z)
    if w.imag == 0.0 and d.J.contains(w.real):
        return True
    return subtended_angle(w, d.J) > math.pi - d.theta - ANGLE_TOL


def geodisk_theta(z, J):
    """Least theta with z in the closure of D_theta(J)."""
    w = _z(z)
    if w.imag == 0.0 and J.contains(w.real):
        return 0.0
    return math.pi - subtended_angle(w, J)


def in_Q(z, J, eps):
    """z sees J at angle >= eps (interior points of J count as inside)."""
    w = _z(z)
    if _on_interior(w, J):
        return True
    return angle_to_interval(w, J) >= eps - ANGLE_TOL


def in_S(z, H, J, theta, eps):
    """z in the pair of R-symmetric wedges of half-angle 2*eps at the ends of J,
    opening along the outward rays, cut off by D_theta(H)."""
    if not H.contains_interval(J):
        raise InvalidNesting(f"[{J.lo}, {J.hi}] is not inside [{H.lo}, {H.hi}]")
    w = _z(z)
    if w == J.lo or w == J.hi:
        return True
    if _on_interior(w, J):
        return False
    if angle_to_interval(w, J) > 2.0 * eps + ANGLE_TOL:
        return False
    return in_geodisk(w, H, theta)


def sqrt_branch(w):
    """Square root into the right half-plane; banks of R_- go to the imaginary axis."""
    p = CPoint.of(w)
    if p.im == 0.0 and p.re < 0.0:
        if p.bank is None:
            raise BranchCutAmbiguity(f"sqrt of {p.re} on the cut without a bank")
        r = math.sqrt(-p.re)
        return CPoint(0.0, r if p.bank == UPPER else -r)
    if p.im == 0.0:
        return CPoint(math.sqrt(p.re), 0.0, p.bank)
    s = cmath.sqrt(p.z)
    return CPoint(s.real, s.imag)


def inverse_step(c, z, sign):
    """sign * sqrt(z - c); real results keep (and under sign -1 flip) the bank."""
    p = CPoint.of(z)
    w = sqrt_branch(CPoint(p.re - c, p.im, p.bank))
    return w if sign > 0 else w.neg()


def pullback_points(c, z0, signs):
    """[z_0, z_-1, ...] with z_{-k-1} = inverse_step(z_{-k}, signs[k])."""
    pts = [CPoint.of(z0)]
    for k, s in enumerate(signs):
        try:
            pts.append(inverse_step(c, pts[-1], s))
        except BranchCutAmbiguity as e:
            raise BranchCutAmbiguity(str(e), step=k) from None
    return pts


def inverse_step_array(c, z, sign):
    """Vectorised inverse step; points on the cut are sent to the upper bank."""
    w = np.asarray(z, dtype=complex) - c
    r = np.sqrt(w)
    cut = (w.imag == 0.0) & (w.real < 0.0)
    if np.any(cut):
        r = np.where(cut, 1j * np.sqrt(np.abs(w.real)), r)
    return sign * r


def subtended_angle_array(z, J):
    z = np.asarray(z, dtype=complex)
    with np.errstate(divide="ignore", invalid="ignore"):
        ang = np.abs(np.angle((J.lo - z) / (J.hi - z)))
    on_end = (z == J.lo) | (z == J.hi)
    ang = np.where(on_end, np.pi, ang)
    return ang


def in_geodisk_array(z, J, theta):
    z = np.asarray(z, dtype=complex)
    on_J = (z.imag == 0.0) & (z.real >= J.lo) & (z.real <= J.hi)
    return on_J | (subtended_angle_array(z, J) > np.pi - theta - ANGLE_TOL)


def angle_to_interval_array(z, J):
    z = np.asarray(z, dtype=complex)
    da, db = z - J.lo, z - J.hi
    return np.minimum(np.abs(np.arctan2(da.imag, -da.real)),
                      np.abs(np.arctan2(db.imag, db.real)))


def geodisk_arc(J, theta, n):
    """Upper boundary arc of D_theta(J) sampled at n interior points."""
    half = J.length / 2.0
    h = math.tan(theta / 2.0) * half
    R = (half * half + h * h) / (2.0 * h)
    y0 = h - R
    phi0 = math.asin(max(-1.0, min(1.0, -y0 / R)))
    phi = np.linspace(phi0, math.pi - phi0, n + 2)[1:-1]
    return J.mid + y0 * 1j + R * np.exp(1j * phi)


def ray_angle(z, v, direction):
    """Angle at v between [v, z] and the real ray from v pointing in ``direction``."""
    d = _z(z) - v
    if d == 0:
        return 0.0
    return abs(math.atan2(d.imag, direction * d.real))


def sqrt_theta_fit(theta, a, n):
    """Least theta' with sqrt(D_theta([-a, 1])) inside D_theta'([0, 1]), from n arc samples."""
    T, Tp = RInterval(-a, 1.0), RInterval(0.0, 1.0)
    w = np.sqrt(geodisk_arc(T, theta, n))
    return float(np.max(np.pi - subtended_angle_array(w, Tp)))
