"""Write the survey corpora under data/.

bounded.txt      period-doubling centres and the first doublings in the period-3 window
long_cascade.txt superattracting centres just inside the period-3 window, whose
                 critical orbits spend a long saddle-node cascade near the ghost 3-cycle
mixed.txt        both, in that order
"""

import argparse
from pathlib import Path

from renormlab.params import (
    SuperattractingPeriod,
    find_param,
    period_doubling_ladder,
    superattracting_parameters,
)

# (q, near) for the period-3 window and two of its doublings
WINDOW3 = [(3, -1.75), (6, -1.77), (12, -1.7788)]
# periods and scan range for the long-cascade centres
LONG_PERIODS = (44, 47, 50, 53, 56)
LONG_RANGE = (-1.7490, -1.7480)
RESIDUAL = 1e-9


def residual(c, q):
    x = 0.0
    for _ in range(q):
        x = x * x + c
    return abs(x)


def bounded():
    ladder = period_doubling_ladder(7)
    rows = [(ladder[n], f"pd{n}") for n in range(2, 8)]
    rows += [(find_param(SuperattractingPeriod(q, near=c0)), f"w3q{q}") for q, c0 in WINDOW3]
    return rows


def long_cascade(per_period=2):
    rows = []
    for q in LONG_PERIODS:
        roots = [r for r in superattracting_parameters(q, *LONG_RANGE, points=20_001)
                 if residual(r, q) < RESIDUAL]
        rows += [(r, f"sn{q}_{i}") for i, r in enumerate(roots[:per_period])]
    return rows


def write(path, rows, title):
    lines = [f"# {title}", "# c label"] + [f"{c!r} {label}" for c, label in rows]
    path.write_text("\n".join(lines) + "\n")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="data")
    a = ap.parse_args()
    out = Path(a.out)
    out.mkdir(parents=True, exist_ok=True)
    b, lc = bounded(), long_cascade()
    write(out / "bounded.txt", b, "bounded combinatorics")
    write(out / "long_cascade.txt", lc, "long saddle-node cascades near the period-3 window")
    write(out / "mixed.txt", b + lc, "bounded + long cascades")
    print(f"{len(b)} bounded, {len(lc)} long-cascade entries")


if __name__ == "__main__":
    main()
