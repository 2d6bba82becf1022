"""Acceptance criteria, one test each; every test records a PASS/FAIL line."""

import math
import time
from pathlib import Path

import numpy as np
import pytest

from renormlab.cgeom import GeoDisk, sqrt_theta_fit
from renormlab.cli import main
from renormlab.nest import SADDLE_NODE, analyze_cascades, build_principal_nest
from renormlab.params import FEIGENBAUM_DELTA, PeriodDoubling, find_param, ladder_ratios
from renormlab.realdyn import RInterval, alpha_interval, critical_orbit, first_return_time, fixed_points
from renormlab.renorm import build_tower, divides_ratio
from renormlab.survey import RunConfig, parse_corpus, run_survey, survey_trend
from renormlab.verify import (
    contraction_level,
    dichotomy_trials,
    fit_kappa,
    parabolic_proximity,
    quad_estimate,
    sample_little_julia,
    schwarz_trials,
    sqrt_angle_grid,
    track_cascade_trials,
)

from conftest import record

DATA = Path(__file__).resolve().parent.parent / "data"


def corpus(name):
    return parse_corpus((DATA / name).read_text())


def test_criterion_01_closed_forms():
    t0 = time.perf_counter()
    errs = []
    for c in (-2.0, -1.5, -1.0, 0.0, 0.25):
        a, b = fixed_points(c)
        errs += [abs(a * a + c - a), abs(b * b + c - b),
                 abs(b - (1 + math.sqrt(1 - 4 * c)) / 2)]
    sig = build_tower(-1.0).levels[1].sigma
    lev = build_tower(-2.0).levels[0]
    ratio = divides_ratio(-2.0, lev)
    thetas = np.linspace(0.1, math.pi - 0.1, 50)
    apex = max(abs(GeoDisk(RInterval(-1.0, 1.0), th).apex_height - math.tan(th / 2))
               for th in thetas)
    c = -1.9
    t1 = first_return_time(c, alpha_interval(c), critical_orbit(c))
    dt = time.perf_counter() - t0
    ok = (max(errs) < 1e-12 and abs(sig - 0.381966) <= 1e-6 and abs(ratio - 0.707107) <= 1e-6
          and apex <= 1e-12 and t1 == 4 and dt < 1.0)
    record(1, ok, f"sigma={sig:.7f} ratio={ratio:.7f} apex_err={apex:.1e} t1={t1} "
                  f"fixed_err={max(errs):.1e} time={dt:.2f}s")
    assert ok


def test_criterion_02_schwarz():
    t0 = time.perf_counter()
    rep = schwarz_trials(n_pairs=10, n_points=1000, max_len=20, seed=0, slack=1e-9)
    dt = time.perf_counter() - t0
    ok = rep.violations == 0 and rep.samples == 10_000 and dt < 10
    record(2, ok, f"pairs={rep.pairs} samples={rep.samples} violations={rep.violations} "
                  f"worst_excess={rep.worst_excess:.2e} time={dt:.2f}s")
    assert ok


def test_criterion_03_square_root():
    eta = sqrt_angle_grid(10_000, math.pi / 2)
    drift = 0.0
    for th in (0.5, 1.0, 1.5, 2.5):
        for a in (0.0, 0.3, 1.0):
            coarse, fine = sqrt_theta_fit(th, a, 200), sqrt_theta_fit(th, a, 2000)
            drift = max(drift, abs(fine - coarse) / fine)
    ok = eta >= math.pi / 4 - 1e-12 and drift <= 0.02
    record(3, ok, f"min_angle={eta:.15f} (pi/4={math.pi / 4:.15f}) fit_drift={drift:.2%}")
    assert ok


def test_criterion_04_dichotomy():
    t0 = time.perf_counter()
    res = dichotomy_trials(1000, 0.05, seed=0)
    kinds = {r.outcome for r in res}
    neither = sum(r.outcome == "Neither" for r in res)
    kappa = fit_kappa(res, 0.05)
    ok = len(res) == 1000 and neither == 0 and kappa <= 10
    record(4, ok, f"trials={len(res)} outcomes={sorted(kinds)} neither={neither} "
                  f"kappa={kappa:.3f} time={time.perf_counter() - t0:.2f}s")
    assert ok


def test_criterion_05_feigenbaum_ladder():
    t0 = time.perf_counter()
    L = [find_param(PeriodDoubling(n)) for n in range(0, 7)]
    r4 = ladder_ratios(L)[4]
    tw = build_tower(L[6])
    periods = [lev.n for lev in tw.levels[1:]]
    dt = time.perf_counter() - t0
    ok = (abs(r4 / FEIGENBAUM_DELTA - 1) <= 0.05 and tw.depth >= 5
          and all(tw.levels[k].n == 2 ** k for k in range(1, tw.depth + 1)) and dt < 60)
    record(5, ok, f"ratio4={r4:.4f} depth={tw.depth} periods={periods} time={dt:.1f}s")
    assert ok


@pytest.fixture(scope="module")
def bounded_towers():
    return [(e, build_tower(e.c)) for e in corpus("bounded.txt")]


def test_criterion_06_contraction(bounded_towers):
    t0 = time.perf_counter()
    per_level = {1: [], 2: [], 3: []}
    unclassified = 0
    for _, tw in bounded_towers:
        for k in range(1, min(3, tw.depth) + 1):
            s = contraction_level(tw, k, 100, seed=0)
            per_level[k].append(s.C_max)
            unclassified += s.unclassified
    cmax = [max(per_level[k]) for k in (1, 2, 3)]
    growth = max(cmax[i + 1] / cmax[i] for i in range(2))
    dt = time.perf_counter() - t0
    ok = (len(bounded_towers) >= 5 and all(map(math.isfinite, cmax)) and growth <= 1.10
          and unclassified == 0 and dt < 120)
    record(6, ok, f"params={len(bounded_towers)} C_max_by_level="
                  f"{[round(x, 3) for x in cmax]} growth={growth:.3f} "
                  f"unclassified={unclassified} time={dt:.1f}s")
    assert ok


def test_criterion_07_quad(c6):
    tw = build_tower(c6)
    vals = [quad_estimate(tw, k) for k in range(1, 5)]
    spread = max(vals) / min(vals)
    ok = min(vals) > 0 and spread <= 2
    record(7, ok, f"c_min_by_level={[round(v, 4) for v in vals]} spread={spread:.3f}")
    assert ok


def test_criterion_08_little_julia(bounded_towers):
    t0 = time.perf_counter()
    comm, sect = [], []
    for _, tw in bounded_towers:
        for k in range(1, min(3, tw.depth) + 1):
            js = sample_little_julia(tw, k, 400, 500)
            comm.append(js.commensurability)
            sect.append(js.sector_theta)
    dt = time.perf_counter() - t0
    ok = all(1 <= x <= 50 for x in comm) and min(sect) >= 0.01 and dt < 120
    record(8, ok, f"samples={len(comm)} commensurability=[{min(comm):.2f}, {max(comm):.2f}] "
                  f"min_sector={min(sect):.4f} time={dt:.1f}s")
    assert ok


def test_criterion_09_saddle_node():
    lengths, prox, bad, dmax = [], [], 0, 0.0
    for j in range(3, 7):
        c = -1.75 + 10.0 ** -j
        orb = critical_orbit(c)
        nest = build_principal_nest(c, orb)
        sn = [x for x in analyze_cascades(c, nest, orb) if x.kind == SADDLE_NODE]
        cas = max(sn, key=lambda x: x.length)
        lengths.append(cas.length)
        prox.append(parabolic_proximity(c, nest, cas))
        res = track_cascade_trials(c, nest, cas, 200, seed=j)
        bad += sum(not r.satisfies for r in res)
        dmax = max([dmax] + [r.d for r in res if r.d is not None])
    ok = (all(a < b for a, b in zip(lengths, lengths[1:]))
          and all(a > b for a, b in zip(prox, prox[1:])) and bad == 0 and dmax <= 100)
    record(9, ok, f"lengths={lengths} proximity={[f'{p:.2e}' for p in prox]} "
                  f"violations={bad} d_max={dmax:.2f}")
    assert ok


def test_criterion_10_trend():
    rows = run_survey(corpus("mixed.txt"), RunConfig(), jobs=1)
    tr = survey_trend(rows)
    rs, rm = tr["rho_sigma_pe"], tr["rho_modulus_pe"]
    ok_s = rs is not None and rs <= -0.7
    ok_m = rm is not None and rm <= -0.5
    record(10, ok_s and ok_m, f"usable={tr['usable']} rho(sigma,p_e)={rs:+.3f} "
                              f"[{'ok' if ok_s else 'fail'}] rho(modulus_proxy,p_e)={rm:+.3f} "
                              f"[{'ok' if ok_m else 'fail'}]")
    assert ok_s, "sigma trend"
    assert ok_m, "modulus proxy trend"


def test_criterion_11_determinism(tmp_path):
    src = DATA / "mixed.txt"
    blobs = []
    for name in ("a", "b"):
        out = tmp_path / name
        assert main(["survey", str(src), "--out", str(out)]) == 0
        blobs.append([(out / f).read_bytes() for f in ("survey.csv", "survey.json")])
    ok = blobs[0] == blobs[1]
    record(11, ok, f"csv_bytes={len(blobs[0][0])} json_bytes={len(blobs[0][1])} identical={ok}")
    assert ok
