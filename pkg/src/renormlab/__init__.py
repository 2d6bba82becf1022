"""Numerical renormalization lab for the real quadratic family x -> x^2 + c."""

from .errors import RenormLabError
from .realdyn import RInterval, critical_orbit, f, fixed_points
from .nest import analyze_cascades, build_principal_nest, essential_period
from .renorm import RenormTower, TowerConfig, build_tower, sigma
from .params import NearWindow, PeriodDoubling, SuperattractingPeriod, find_param

__version__ = "0.1.0"

__all__ = [
    "NearWindow", "PeriodDoubling", "RInterval", "RenormLabError", "RenormTower",
    "SuperattractingPeriod", "TowerConfig", "analyze_cascades", "build_principal_nest",
    "build_tower", "critical_orbit", "essential_period", "f", "find_param",
    "fixed_points", "sigma",
]
