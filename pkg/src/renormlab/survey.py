"""Per-parameter pipelines and corpus surveys.

Everything here returns plain JSON-ready structures; the CLI only serializes.
"""

from __future__ import annotations

import dataclasses
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DynamicsError, InsufficientData, RenormLabError
from .nest import analyze_cascades, build_principal_nest, essential_period
from .realdyn import C_MAX, C_MIN, RInterval, critical_orbit
from .renorm import TowerConfig, build_tower
from .verify import (
    contraction_level,
    quad_estimate,
    sample_little_julia,
    trend_sigma_vs_pe,
)

SCHEMA = 1
CSV_COLUMNS = ("c", "label", "p", "p_e", "sigma", "d_max", "cascade_max_len",
               "C_measured_max", "c_min_quad", "julia_diam_ratio", "sector_theta",
               "modulus_proxy")
CONTRACTION_LEVELS = 3
QUAD_LEVELS = 4
JULIA_LEVELS = 3


@dataclass(frozen=True)
class RunConfig:
    eps: float = 0.05
    kbar: float = 64.0
    grid: int = 400
    max_iter: int = 500
    max_levels: int = 20_000
    depth: int = 6
    seed: int = 0
    samples: int = 100
    quad_points: int = 10_000
    orbit_budget: int = 100_000

    def tower_config(self):
        return TowerConfig(max_depth=self.depth, orbit_budget=self.orbit_budget,
                           max_levels=self.max_levels)


@dataclass(frozen=True)
class CorpusEntry:
    c: float
    label: str
    line: int


class CorpusError(ValueError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


def parse_corpus(text):
    """``c [label]`` per line; ``#`` starts a comment."""
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        head, _, rest = body.partition(" ")
        try:
            c = float(head)
        except ValueError:
            raise CorpusError(i, f"cannot read a parameter from {head!r}") from None
        if not (C_MIN <= c <= C_MAX) or not math.isfinite(c):
            raise CorpusError(i, f"c = {c} outside [{C_MIN}, {C_MAX}]")
        out.append(CorpusEntry(c, rest.strip() or f"c{len(out)}", i))
    return out


def jsonable(x):
    if isinstance(x, RInterval):
        return [x.lo, x.hi]
    if dataclasses.is_dataclass(x) and not isinstance(x, type):
        return {f.name: jsonable(getattr(x, f.name)) for f in dataclasses.fields(x)}
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, (np.integer,)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        return x if math.isfinite(x) else None
    if isinstance(x, np.ndarray):
        return jsonable(x.tolist())
    if isinstance(x, np.bool_):
        return bool(x)
    return x


def _note(e):
    return {"error": type(e).__name__, "message": str(e)}


def _level_summary(lev):
    return {
        "k": lev.k, "n": lev.n, "P": jsonable(lev.P), "B": jsonable(lev.B),
        "S": jsonable(lev.S), "T": jsonable(lev.T), "T_image": jsonable(lev.T_image),
        "sigma": jsonable(lev.sigma), "alpha": jsonable(lev.alpha), "beta": lev.beta,
        "multiplier": lev.multiplier, "lambda_proxy": lev.lambda_proxy,
        "P_minimal": lev.P_minimal, "xi_capped": lev.xi_capped,
    }


def _nest_summary(nest):
    return {
        "stride": nest.stride, "levels": len(nest.levels), "height": nest.height,
        "immediately_renormalizable": nest.immediately_renormalizable,
        "stop_reason": nest.stop_reason,
        "return_times": list(nest.return_times),
        "radii": jsonable(nest.radii),
        "noncentral_set": list(nest.noncentral_set),
        "pending_return_time": nest.pending_return_time,
    }


def _cascade_summary(cas):
    return {"k": cas.k, "m_start": cas.m_start, "m_end": cas.m_end, "kind": cas.kind,
            "length": cas.length, "return_time": cas.return_time, "depth": cas.depth,
            "neglectable": list(cas.neglectable), "depth_flag": cas.depth_flag}


def analyze(c, cfg=RunConfig()):
    """(orbit, nest, cascades, essential-period report, tower, notes); failures become notes."""
    notes = []
    orbit = critical_orbit(c, cfg.orbit_budget)
    nest = cascades = ep = None
    try:
        nest = build_principal_nest(c, orbit, cfg.max_levels)
        cascades = analyze_cascades(c, nest, orbit)
    except DynamicsError as e:
        notes.append({"stage": "nest", **_note(e)})
    tower = build_tower(c, cfg.tower_config(), orbit)
    if nest is not None and tower.depth >= 1:
        try:
            ep = essential_period(c, nest, cascades, tower.levels[1].n, orbit)
        except DynamicsError as e:
            notes.append({"stage": "essential_period", **_note(e)})
    if tower.depth == 0:
        notes.append({"stage": "tower", "error": "NotRenormalizable",
                      "message": tower.stop_reason})
    return orbit, nest, cascades, ep, tower, notes


def run_pipeline(c, cfg=RunConfig()):
    _, nest, cascades, ep, tower, notes = analyze(c, cfg)
    report = {"c": c, "config": jsonable(cfg), "notes": notes}
    report["nest"] = None if nest is None else _nest_summary(nest)
    report["cascades"] = [] if cascades is None else [_cascade_summary(x) for x in cascades]
    report["essential_period"] = None if ep is None else {
        "period": ep.period, "essential_period": ep.essential_period,
        "removed_indices": list(ep.removed_indices)}
    report["tower"] = {"depth": tower.depth, "periods": tower.periods,
                       "stop_reason": tower.stop_reason,
                       "levels": [_level_summary(lev) for lev in tower.levels]}
    report["verify"] = verify_tower(tower, cfg, notes)
    return report


def verify_tower(tower, cfg, notes=None):
    notes = [] if notes is None else notes
    out = {"contraction": [], "quad": [], "julia": []}
    for k in range(1, min(CONTRACTION_LEVELS, tower.depth) + 1):
        try:
            s = contraction_level(tower, k, cfg.samples, cfg.seed, cfg.eps, cfg.kbar)
            out["contraction"].append({"k": k, "C_max": s.C_max, "C_median": s.C_median,
                                       "n_trials": s.n_trials, "jumped": s.jumped,
                                       "unclassified": s.unclassified})
        except RenormLabError as e:
            notes.append({"stage": f"contraction[{k}]", **_note(e)})
    for k in range(1, min(QUAD_LEVELS, tower.depth) + 1):
        out["quad"].append({"k": k, "c_min": jsonable(
            quad_estimate(tower, k, n_points=cfg.quad_points))})
    for k in range(1, min(JULIA_LEVELS, tower.depth) + 1):
        try:
            js = sample_little_julia(tower, k, cfg.grid, cfg.max_iter)
            out["julia"].append({"k": k, "points": int(js.points.size), "diam": js.diam,
                                 "commensurability": js.commensurability,
                                 "sector_theta": js.sector_theta,
                                 "modulus_proxy": jsonable(js.modulus_proxy),
                                 "r_in": js.r_in, "r_out": js.r_out})
        except RenormLabError as e:
            notes.append({"stage": f"julia[{k}]", **_note(e)})
    return out


def survey_row(entry, cfg=RunConfig()):
    """One CSV row; metrics that cannot be computed are left empty."""
    c = entry.c
    row = dict.fromkeys(CSV_COLUMNS)
    row["c"], row["label"] = c, entry.label
    _, nest, cascades, ep, tower, notes = analyze(c, cfg)
    if tower.depth >= 1:
        row["p"] = tower.levels[1].n
        row["sigma"] = tower.levels[1].sigma
    if ep is not None:
        row["p_e"] = ep.essential_period
    if cascades:
        row["d_max"] = max((x.depth or 0) for x in cascades)
        row["cascade_max_len"] = max(x.length for x in cascades)
    elif nest is not None:
        row["d_max"] = row["cascade_max_len"] = 0
    if tower.depth >= 1:
        v = verify_tower(tower, cfg, notes)
        if v["contraction"]:
            row["C_measured_max"] = max(x["C_max"] for x in v["contraction"])
        q = [x["c_min"] for x in v["quad"] if x["c_min"] is not None]
        if q:
            row["c_min_quad"] = min(q)
        if v["julia"]:
            j1 = v["julia"][0]
            row["julia_diam_ratio"] = j1["commensurability"]
            row["sector_theta"] = j1["sector_theta"]
            row["modulus_proxy"] = j1["modulus_proxy"]
    return row


def _row_job(args):
    return survey_row(*args)


def run_survey(entries, cfg=RunConfig(), jobs=1):
    """Rows in input order; ``jobs > 1`` spreads entries over processes."""
    if jobs > 1 and len(entries) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            return list(ex.map(_row_job, [(e, cfg) for e in entries]))
    return [survey_row(e, cfg) for e in entries]


def survey_trend(rows):
    """Footer dict with the Spearman coefficients over rows carrying (p_e, sigma, proxy)."""
    data = [(r["p_e"], r["sigma"], r["modulus_proxy"]) for r in rows
            if None not in (r["p_e"], r["sigma"], r["modulus_proxy"])]
    out = {"schema": SCHEMA, "entries": len(rows), "usable": len(data)}
    try:
        t = trend_sigma_vs_pe(data)
    except InsufficientData as e:
        out.update(rho_sigma_pe=None, rho_modulus_pe=None, defined=False, note=str(e))
        return out
    out.update(rho_sigma_pe=jsonable(t.rho_sigma), rho_modulus_pe=jsonable(t.rho_modulus),
               defined=t.defined)
    return out


def format_value(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return "" if not math.isfinite(v) else repr(v)
    return str(v)
