"""Eigenvalue criterion for the maximal Mermin value.

For each first-party axis a in {x, y, z} take the largest eigenvalue of
``T_a^T T_a``. Its candidate is ``2*sqrt(lambda)`` when that eigenvalue is
simple and ``4*sqrt(lambda)`` when it is degenerate; the analytic maximum is
the largest candidate. The degeneracy pattern over the three axes selects
which theorem or corollary applies (see ``CASES``).
"""
from dataclasses import dataclass
from math import sqrt

import numpy as np
from scipy.optimize import bisect

from .bloch import decompose, slices
from .config import TOL
from .linalg import AXES, sym_eig3

MERMIN_LOCAL_BOUND = 2.0

# (x, y, z) "largest eigenvalue degenerate" pattern -> case
CASES = {
    (False, False, False): "T1",
    (True, True, True): "T2",
    (True, False, False): "T3",
    (False, True, False): "C1",
    (False, False, True): "C2",
    (True, True, False): "C3",
    (True, False, True): "C4",
    (False, True, True): "C5",
}


@dataclass(frozen=True)
class SliceSpectrum:
    axis: str
    eigenvalues: tuple
    max_multiplicity: int

    @property
    def lambda_max(self):
        return self.eigenvalues[0]

    @property
    def degenerate(self):
        return self.max_multiplicity >= 2

    def as_dict(self):
        return {"axis": self.axis, "eigenvalues": list(self.eigenvalues),
                "max_multiplicity": self.max_multiplicity}


@dataclass(frozen=True)
class AnalyticVerdict:
    candidates: tuple
    case_id: str
    value: float
    violated: bool
    degeneracy_pattern: tuple

    def as_dict(self):
        return {"candidates": list(self.candidates), "case_id": self.case_id,
                "value": self.value, "violated": self.violated,
                "degeneracy_pattern": list(self.degeneracy_pattern)}


def multiplicity(eigenvalues, degeneracy_tol=TOL.degeneracy):
    """Count eigenvalues within ``max(tol, tol*lambda_1)`` of the largest."""
    lam1 = eigenvalues[0]
    band = max(degeneracy_tol, degeneracy_tol * lam1)
    return int(sum(1 for lam in eigenvalues if lam1 - lam <= band))


def slice_spectra(s, degeneracy_tol=TOL.degeneracy):
    if degeneracy_tol <= 0:
        raise ValueError("degeneracy_tol must be positive")
    out = []
    for axis, gram in zip(AXES, s.grams()):
        vals, _ = sym_eig3(gram)
        if vals[-1] < -TOL.gram_clamp:
            raise ValueError(f"Gram matrix for axis {axis} has eigenvalue {vals[-1]:.3e} < 0")
        vals = np.maximum(vals, 0.0)
        out.append(SliceSpectrum(axis, tuple(float(v) for v in vals),
                                 multiplicity(vals, degeneracy_tol)))
    return tuple(out)


def analytic_max(spectra):
    if len(spectra) != 3:
        raise ValueError("need one spectrum per axis")
    pattern = tuple(sp.degenerate for sp in spectra)
    candidates = tuple((4.0 if d else 2.0) * sqrt(sp.lambda_max)
                       for d, sp in zip(pattern, spectra))
    value = max(candidates)
    return AnalyticVerdict(candidates=candidates, case_id=CASES[pattern], value=value,
                           violated=value > MERMIN_LOCAL_BOUND, degeneracy_pattern=pattern)


def analyze(rho, degeneracy_tol=TOL.degeneracy):
    """Full pipeline: returns ``(decomposition, spectra, verdict)``."""
    b = decompose(rho)
    spectra = slice_spectra(slices(b), degeneracy_tol)
    return b, spectra, analytic_max(spectra)


def analytic_threshold(family_sweep, value_at, xtol=TOL.threshold_xtol):
    """Parameters where the analytic value crosses the local bound 2.

    ``family_sweep`` is a list of ``(param, AnalyticVerdict)`` sorted by
    param; each bracket whose ``violated`` flag flips is refined by bisection
    on ``value_at(param) - 2``.
    """
    if not family_sweep:
        raise ValueError("empty sweep")
    params = [p for p, _ in family_sweep]
    if any(b < a for a, b in zip(params, params[1:])):
        raise ValueError("sweep must be sorted by parameter")

    def excess(p):
        v = value_at(p) - MERMIN_LOCAL_BOUND
        # only the sign matters; exactly 2 is not a violation
        return v if v != 0 else -1.0

    crossings = []
    for (p0, v0), (p1, v1) in zip(family_sweep, family_sweep[1:]):
        if v0.violated != v1.violated:
            crossings.append(bisect(excess, p0, p1, xtol=xtol))
    return crossings


def candidate_crossover(candidate_at, lo, hi, xtol=TOL.threshold_xtol):
    """Bisection root of ``candidate_at(p)`` (a signed candidate difference) in [lo, hi]."""
    return bisect(candidate_at, lo, hi, xtol=xtol)
