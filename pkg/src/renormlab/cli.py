"""renormlab command line.

Exit codes: 0 success, 1 usage or malformed input, 2 I/O or typed dynamical
failure of a single-purpose command, 3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path

from . import __version__
from .errors import DynamicsError, RenormLabError
from .nest import SADDLE_NODE, analyze_cascades, build_principal_nest, essential_period
from .params import NearWindow, PeriodDoubling, SuperattractingPeriod, find_param
from .realdyn import check_param, critical_orbit
from .renorm import build_tower
from .survey import (
    CSV_COLUMNS,
    SCHEMA,
    CorpusError,
    RunConfig,
    _cascade_summary,
    _level_summary,
    _nest_summary,
    format_value,
    jsonable,
    parse_corpus,
    run_pipeline,
    run_survey,
    survey_trend,
)
from .verify import (
    contraction_level,
    parabolic_proximity,
    quad_estimate,
    sample_little_julia,
    track_cascade_trials,
)

log = logging.getLogger("renormlab")

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_INVARIANT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _dump(obj):
    return json.dumps(jsonable(obj), indent=2, sort_keys=True, allow_nan=False) + "\n"


def _emit(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _config(a):
    return RunConfig(eps=a.eps, kbar=a.kbar, grid=a.grid, max_iter=a.max_iter,
                     max_levels=a.max_levels, depth=a.depth, seed=a.seed,
                     samples=a.samples)


def _nest_and_cascades(c, cfg):
    orbit = critical_orbit(c, cfg.orbit_budget)
    nest = build_principal_nest(c, orbit, cfg.max_levels)
    return orbit, nest, analyze_cascades(c, nest, orbit)


def _level_arg(tower, k):
    if not 1 <= k <= tower.depth:
        raise UsageError(f"level {k} not available; tower depth is {tower.depth}")
    return k


# ------------------------------------------------------------ commands

def cmd_nest(a, cfg):
    _, nest, _ = _nest_and_cascades(a.c, cfg)
    return _dump({"c": a.c, "nest": _nest_summary(nest)})


def cmd_cascades(a, cfg):
    _, nest, cas = _nest_and_cascades(a.c, cfg)
    return _dump({"c": a.c, "cascades": [_cascade_summary(x) for x in cas]})


def cmd_essential_period(a, cfg):
    orbit, nest, cas = _nest_and_cascades(a.c, cfg)
    tower = build_tower(a.c, replace(cfg.tower_config(), max_depth=1), orbit)
    p = tower.levels[1].n if tower.depth >= 1 else None
    ep = essential_period(a.c, nest, cas, p, orbit)
    return _dump({"c": a.c, "period": ep.period, "essential_period": ep.essential_period,
                  "removed_indices": list(ep.removed_indices),
                  "per_interval_levels": {str(i): [list(t) for t in v]
                                          for i, v in ep.per_interval_levels.items()}})


def cmd_tower(a, cfg):
    t = build_tower(a.c, cfg.tower_config())
    return _dump({"c": a.c, "depth": t.depth, "periods": t.periods,
                  "stop_reason": t.stop_reason,
                  "levels": [_level_summary(lev) for lev in t.levels]})


def cmd_contraction(a, cfg):
    t = build_tower(a.c, cfg.tower_config())
    s = contraction_level(t, _level_arg(t, a.level), cfg.samples, cfg.seed, cfg.eps, cfg.kbar)
    return _dump({"c": a.c, "k": s.k, "C_max": s.C_max, "C_median": s.C_median,
                  "n_trials": s.n_trials, "jumped": s.jumped,
                  "unclassified": s.unclassified,
                  "outcomes": [r.outcome for r in s.reports]})


def cmd_quad(a, cfg):
    t = build_tower(a.c, cfg.tower_config())
    k = a.level if a.level == 0 else _level_arg(t, a.level)
    return _dump({"c": a.c, "k": k, "R": a.radius,
                  "c_min": quad_estimate(t, k, a.radius, a.points)})


def cmd_julia(a, cfg):
    t = build_tower(a.c, cfg.tower_config())
    js = sample_little_julia(t, _level_arg(t, a.level), cfg.grid, cfg.max_iter)
    if a.svg:
        _julia_svg(js, t.levels[a.level], a.svg)
    return _dump({"c": a.c, "k": js.k, "points": int(js.points.size), "diam": js.diam,
                  "commensurability": js.commensurability, "sector_theta": js.sector_theta,
                  "sector_margin": js.sector_margin, "modulus_proxy": js.modulus_proxy,
                  "r_in": js.r_in, "r_out": js.r_out})


def cmd_track_cascade(a, cfg):
    _, nest, cas = _nest_and_cascades(a.c, cfg)
    sn = [x for x in cas if x.kind == SADDLE_NODE]
    if not sn:
        raise UsageError(f"no saddle-node cascade at c = {a.c}")
    casc = max(sn, key=lambda x: x.length)
    res = track_cascade_trials(a.c, nest, casc, a.trials, cfg.eps, cfg.seed)
    counts = {}
    for r in res:
        counts[r.outcome] = counts.get(r.outcome, 0) + 1
    ds = [r.d for r in res if r.d is not None]
    return _dump({"c": a.c, "cascade": _cascade_summary(casc),
                  "parabolic_proximity": parabolic_proximity(a.c, nest, casc),
                  "trials": len(res), "outcomes": counts,
                  "all_satisfy": all(r.satisfies for r in res),
                  "d_max": max(ds) if ds else None})


def cmd_find_param(a, cfg):
    if a.kind == "period-doubling":
        kind = PeriodDoubling(int(a.values[0]))
    elif a.kind == "superattracting":
        q = int(a.values[0])
        kind = SuperattractingPeriod(q, near=a.near) if a.near is not None else SuperattractingPeriod(q)
    else:
        if len(a.values) != 3:
            raise UsageError("near-window needs C0 RADIUS Q")
        kind = NearWindow(float(a.values[0]), float(a.values[1]), int(a.values[2]))
    return _dump({"kind": a.kind, "args": a.values, "c": find_param(kind)})


def cmd_pipeline(a, cfg):
    return _dump(run_pipeline(a.c, cfg))


def cmd_survey(a, cfg):
    text = Path(a.corpus).read_text()
    entries = parse_corpus(text)
    out = Path(a.out or "survey_out")
    out.mkdir(parents=True, exist_ok=True)
    rows = run_survey(entries, cfg, a.jobs)
    lines = [f"# schema={SCHEMA}", ",".join(CSV_COLUMNS)]
    lines += [",".join(format_value(r[k]) for k in CSV_COLUMNS) for r in rows]
    (out / "survey.csv").write_text("\n".join(lines) + "\n")
    footer = survey_trend(rows)
    footer["config"] = jsonable(cfg)
    (out / "survey.json").write_text(_dump(footer))
    if rows:
        _survey_svg(rows, footer, out / "survey.svg")
    log.info("survey: %d rows written to %s", len(rows), out)
    return None


# ------------------------------------------------------------ plots

def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    plt.rcParams["svg.hashsalt"] = "renormlab"
    return plt


def _save_svg(fig, path):
    fig.savefig(path, format="svg", metadata={"Date": None, "Creator": None})


def _survey_svg(rows, footer, path):
    plt = _pyplot()
    fig, axes = plt.subplots(1, 2, figsize=(9, 4))
    for ax, key, name, rho in ((axes[0], "sigma", "sigma", footer.get("rho_sigma_pe")),
                               (axes[1], "modulus_proxy", "modulus proxy",
                                footer.get("rho_modulus_pe"))):
        pts = [(r["p_e"], r[key]) for r in rows if r["p_e"] is not None and r[key] is not None]
        if pts:
            x, y = zip(*pts)
            ax.scatter(x, y, s=14)
        if key == "sigma":
            ax.set_yscale("log")
        ax.set_xlabel("p_e")
        ax.set_ylabel(name)
        ax.set_title("rho = " + ("n/a" if rho is None else f"{rho:.3f}"))
    fig.tight_layout()
    _save_svg(fig, path)
    plt.close(fig)


def _julia_svg(js, level, path):
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(5, 5))
    ax.plot(js.points.real, js.points.imag, ",", color="k")
    ax.plot([level.B.lo, level.B.hi], [0, 0], color="tab:red", lw=1)
    ax.set_aspect("equal")
    ax.set_title(f"level {js.k}: sector {js.sector_theta:.3f} rad")
    _save_svg(fig, path)
    plt.close(fig)


# ------------------------------------------------------------ parser

def _param(s):
    try:
        return check_param(float(s))
    except (ValueError, RenormLabError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eps", type=float, default=0.05)
    common.add_argument("--kbar", type=float, default=64.0)
    common.add_argument("--grid", type=int, default=400)
    common.add_argument("--max-iter", type=int, default=500)
    common.add_argument("--max-levels", type=int, default=20_000)
    common.add_argument("--depth", type=int, default=6)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=100)
    common.add_argument("--out", default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="renormlab", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, with_c=True, **kw):
        sp = sub.add_parser(name, parents=[common], **kw)
        if with_c:
            sp.add_argument("c", type=_param)
        sp.set_defaults(func=fn)
        return sp

    add("nest", cmd_nest, help="principal nest")
    add("cascades", cmd_cascades, help="central cascades with depths")
    add("essential-period", cmd_essential_period, help="essential period of the first renormalization")
    add("tower", cmd_tower, help="renormalization tower")
    add("contraction", cmd_contraction, help="contraction trials").add_argument(
        "--level", type=int, default=1)
    sp = add("quad", cmd_quad, help="quadratic estimate")
    sp.add_argument("--level", type=int, default=1)
    sp.add_argument("--radius", type=float, default=5.0)
    sp.add_argument("--points", type=int, default=10_000)
    sp = add("julia", cmd_julia, help="little Julia set metrics")
    sp.add_argument("--level", type=int, default=1)
    sp.add_argument("--svg", default=None)
    add("track-cascade", cmd_track_cascade, help="pull points through the longest saddle-node cascade"
        ).add_argument("--trials", type=int, default=200)
    sp = add("find-param", cmd_find_param, with_c=False, help="parameter search")
    sp.add_argument("kind", choices=["period-doubling", "superattracting", "near-window"])
    sp.add_argument("values", nargs="+")
    sp.add_argument("--near", type=float, default=None)
    add("pipeline", cmd_pipeline, help="full per-parameter report")
    sp = add("survey", cmd_survey, with_c=False, help="corpus survey to CSV, JSON and SVG")
    sp.add_argument("corpus")
    sp.add_argument("--jobs", type=int, default=1)
    return p


def main(argv=None):
    parser = build_parser()
    a = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = _config(a)
        text = a.func(a, cfg)
        if text is not None:
            _emit(text, a.out)
    except (UsageError, CorpusError, ValueError) as e:
        print(f"renormlab: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"renormlab: {e}", file=sys.stderr)
        return EXIT_IO
    except DynamicsError as e:
        print(f"renormlab: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_IO
    except (RenormLabError, AssertionError) as e:
        print(f"renormlab: internal invariant violated: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INVARIANT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
