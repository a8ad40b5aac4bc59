"""Eigenvalue criterion on the named three-qubit families.

Run with ``python demos/01_analytic_criterion.py``.
"""
# %% [markdown]
# Each state is reduced to its three-body correlation tensor t_ijk. Fixing the
# first-party axis gives three 3x3 slices; the largest eigenvalue of each
# slice's Gram matrix T^T T, and whether it is degenerate, decides the
# analytic Mermin maximum.

# %%
import numpy as np

from mermin import FamilySpec, analyze, build

for family, param in [("ghz", None), ("w", None), ("gghz", 0.6), ("wsup", 0.2),
                      ("ghzw_mix", 0.5)]:
    b, spectra, verdict = analyze(build(FamilySpec(family, param)))
    label = family if param is None else f"{family}({param})"
    lams = ", ".join(f"{sp.axis}: {sp.lambda_max:.4f} x{sp.max_multiplicity}" for sp in spectra)
    print(f"{label:15s} {lams:45s} -> {verdict.case_id} value={verdict.value:.4f} "
          f"violated={verdict.violated}")

# %% [markdown]
# The GGHZ family alpha|000> + beta|111> violates once 2 alpha beta exceeds 1/2.
# Near the product-state ends the ZZZ correlation alpha^2 - beta^2 takes over
# the z slice, so the value there is 2|alpha^2 - beta^2| rather than 8 alpha beta.

# %%
for alpha in (0.0, 0.1, 0.3, 1 / np.sqrt(2), 0.95, 1.0):
    beta = np.sqrt(1 - alpha ** 2)
    v = analyze(build(FamilySpec("gghz", alpha)))[2]
    print(f"alpha={alpha:.4f}  analytic={v.value:.6f}  8ab={8 * alpha * beta:.6f}  "
          f"2|a2-b2|={2 * abs(alpha ** 2 - beta ** 2):.6f}")

# %% [markdown]
# The slices themselves, for the W-plus-|000> family at p = 0.3.

# %%
from mermin.bloch import slices

s = slices(analyze(build(FamilySpec("wsup", 0.3)))[0])
for name, gram in zip("xyz", s.grams()):
    print(f"T_{name}^T T_{name} =\n{np.round(gram, 5)}")
