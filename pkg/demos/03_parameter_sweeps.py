"""Parameter sweeps with CSV and SVG output, plus exact crossover points.

Run with ``python demos/03_parameter_sweeps.py``; files go to demos/out/.
"""
# %%
from pathlib import Path

import numpy as np

from mermin import FamilySpec, analyze, analytic_threshold, build
from mermin.analytic import candidate_crossover
from mermin.cli import main

out = Path(__file__).resolve().parent / "out"
out.mkdir(exist_ok=True)

# %% [markdown]
# The CLI writes one row per parameter value. With --numeric each row also
# carries the seesaw value and the gap.

# %%
for family in ("wsup", "ghzw_mix"):
    main(["sweep", "--family", family, "--steps", "51", "--numeric", "--starts", "32",
          "--out", str(out / f"{family}.csv"), "--svg", str(out / f"{family}.svg")])
    print("wrote", out / f"{family}.csv")

# %% [markdown]
# Where does the W-plus-|000> family stop violating? Bisection on the
# analytic value between the sweep points that bracket the change.

# %%
ps = np.linspace(0, 1, 101)
value_at = lambda p: analyze(build(FamilySpec("wsup", p)))[2].value
sweep = [(p, analyze(build(FamilySpec("wsup", p)))[2]) for p in ps]
print("violation boundary:", analytic_threshold(sweep, value_at))

# %% [markdown]
# Regime changes: the y candidate (factor 4) hands over to x, then x to z.

# %%
def cand(p, k):
    return analyze(build(FamilySpec("wsup", p)))[2].candidates[k]


print("4sqrt(l_y) = 2sqrt(l_x) at p =", candidate_crossover(lambda p: cand(p, 1) - cand(p, 0), 0.4, 0.44))
print("2sqrt(l_x) = 2sqrt(l_z) at p =", candidate_crossover(lambda p: cand(p, 0) - cand(p, 2), 0.44, 0.46))
