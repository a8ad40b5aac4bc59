"""Numerical tolerances shared by every module.

All thresholds live in one frozen record so a caller can inspect (or
replace, via :func:`dataclasses.replace`) exactly the numbers the checks use.
"""
from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    # matrix / state validation
    hermitian: float = 1e-10
    trace: float = 1e-10
    psd: float = 1e-10
    norm: float = 1e-12
    unitary: float = 1e-10
    symmetric: float = 1e-12
    # Jacobi eigensolver: stop when off(A) <= jacobi_rel * ||A||_F
    jacobi_rel: float = 1e-13
    jacobi_max_sweeps: int = 100
    # Bloch coefficients
    bloch_imag: float = 1e-10
    bloch_range: float = 1e-10
    # analytic criterion
    gram_clamp: float = 1e-12
    degeneracy: float = 1e-9
    threshold_xtol: float = 1e-8
    # seesaw
    gradient_floor: float = 1e-14
    expectation_imag: float = 1e-10
    report: float = 1e-6


TOL = Tolerances()
