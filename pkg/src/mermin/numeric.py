"""Numerical side: Mermin operator, expectation values by two independent
routes, seesaw maximisation over measurement directions and the
analytic-versus-numeric discrepancy report.

The Mermin expectation is multilinear in the six unit vectors, so fixing all
but one leaves a linear form ``g . v`` that is maximised exactly by
``v = g / |g|``. Cycling these best responses never lowers the objective.
"""
from dataclasses import dataclass, field

import numpy as np

from .analytic import analyze
from .bloch import decompose
from .config import TOL
from .linalg import kron3, pauli_stack
from .qstate import DensityMatrix, stream

VECTORS = ("a1", "a2", "a3", "b1", "b2", "b3")
_INDEX = {name: k for k, name in enumerate(VECTORS)}
_SIGMA3 = pauli_stack()[1:]
ALGEBRAIC_BOUND = 4.0


@dataclass(frozen=True, eq=False)
class MeasurementSettings:
    a1: np.ndarray
    a2: np.ndarray
    a3: np.ndarray
    b1: np.ndarray
    b2: np.ndarray
    b3: np.ndarray

    def __post_init__(self):
        for name in VECTORS:
            v = np.array(getattr(self, name), dtype=float).reshape(-1)
            if v.shape != (3,) or not np.all(np.isfinite(v)):
                raise ValueError(f"{name} must be a finite 3-vector")
            if abs(np.linalg.norm(v) - 1.0) > TOL.norm:
                raise ValueError(f"{name} is not a unit vector (norm {np.linalg.norm(v)!r})")
            v.flags.writeable = False
            object.__setattr__(self, name, v)

    def as_array(self):
        """Shape (6, 3) array in the order a1, a2, a3, b1, b2, b3."""
        return np.stack([getattr(self, n) for n in VECTORS])

    @classmethod
    def from_array(cls, arr):
        arr = np.asarray(arr, dtype=float)
        return cls(*arr)

    @classmethod
    def uniform(cls, a, b):
        """Same ``a`` for all three parties and same ``b`` for all three."""
        return cls(a, a, a, b, b, b)

    def replace(self, which, vector):
        arr = self.as_array()
        arr[_INDEX[which]] = vector
        return MeasurementSettings.from_array(arr)

    def as_dict(self):
        return {n: getattr(self, n).tolist() for n in VECTORS}


@dataclass(frozen=True)
class OptimizerConfig:
    starts: int = 64
    max_sweeps: int = 500
    convergence_tol: float = 1e-12
    seed: int = 0

    def __post_init__(self):
        if self.starts < 1:
            raise ValueError("starts must be >= 1")
        if self.max_sweeps < 1:
            raise ValueError("max_sweeps must be >= 1")
        if self.convergence_tol <= 0:
            raise ValueError("convergence_tol must be positive")


@dataclass(frozen=True, eq=False)
class OptimizationResult:
    value: float
    settings: MeasurementSettings
    sweeps_used: int
    starts_converged: int
    best_start_index: int
    # objective after the random start and after every sweep, one array per start
    history: list = field(default_factory=list, repr=False)

    def as_dict(self):
        return {"value": self.value, "settings": self.settings.as_dict(),
                "sweeps_used": self.sweeps_used, "starts_converged": self.starts_converged,
                "best_start_index": self.best_start_index}


@dataclass(frozen=True)
class DiscrepancyReport:
    analytic_value: float
    numeric_value: float
    gap: float
    case_id: str
    flag: str

    def as_dict(self):
        return {"analytic_value": self.analytic_value, "numeric_value": self.numeric_value,
                "gap": self.gap, "case_id": self.case_id, "flag": self.flag}


def _tensor(rho_or_t):
    if isinstance(rho_or_t, DensityMatrix):
        return decompose(rho_or_t).t
    t = np.asarray(rho_or_t, dtype=float)
    if t.shape != (3, 3, 3):
        raise ValueError(f"expected a 3x3x3 correlation tensor, got shape {t.shape}")
    return t


def _spin(v):
    return np.einsum("i,ixy->xy", v, _SIGMA3)


def mermin_operator(s):
    a1, a2, a3, b1, b2, b3 = (_spin(v) for v in s.as_array())
    return kron3(a1, a2, a3) - kron3(a1, b2, b3) - kron3(b1, a2, b3) - kron3(b1, b2, a3)


def expectation_trace(rho, s):
    val = np.trace(mermin_operator(s) @ rho.m)
    if abs(val.imag) > TOL.expectation_imag:
        raise RuntimeError(f"Tr(B rho) has imaginary part {val.imag:.3e}")
    return float(val.real)


def _objective(t, v):
    """Mermin expectation for settings ``v`` of shape (..., 6, 3)."""
    a1, a2, a3, b1, b2, b3 = (v[..., k, :] for k in range(6))

    def corr(x, y, z):
        return np.einsum("ijk,...i,...j,...k->...", t, x, y, z)

    return corr(a1, a2, a3) - corr(a1, b2, b3) - corr(b1, a2, b3) - corr(b1, b2, a3)


def expectation_tensor(t, s):
    return float(_objective(_tensor(t), s.as_array()))


def _linear_form(t, v, k):
    """Coefficient vector g of the objective viewed as g . v[k]."""
    a1, a2, a3, b1, b2, b3 = (v[..., j, :] for j in range(6))
    on1 = lambda x, y: np.einsum("ijk,...j,...k->...i", t, x, y)
    on2 = lambda x, y: np.einsum("ijk,...i,...k->...j", t, x, y)
    on3 = lambda x, y: np.einsum("ijk,...i,...j->...k", t, x, y)
    if k == 0:
        return on1(a2, a3) - on1(b2, b3)
    if k == 3:
        return -on1(a2, b3) - on1(b2, a3)
    if k == 1:
        return on2(a1, a3) - on2(b1, b3)
    if k == 4:
        return -on2(a1, b3) - on2(b1, a3)
    if k == 2:
        return on3(a1, a2) - on3(b1, b2)
    return -on3(a1, b2) - on3(b1, a2)


def _respond(t, v, k):
    """In-place best response for vector ``k`` on a batch of settings."""
    g = _linear_form(t, v, k)
    norm = np.linalg.norm(g, axis=-1)
    ok = norm > TOL.gradient_floor
    v[ok, k, :] = g[ok] / norm[ok, None]


def best_response(t, s, which):
    """Unit vector maximising the objective over ``which`` with the rest fixed.

    Keeps the current vector when the linear form vanishes (|g| <= 1e-14).
    """
    k = _INDEX[which]
    v = s.as_array()
    g = _linear_form(_tensor(t), v, k)
    norm = np.linalg.norm(g)
    if norm <= TOL.gradient_floor:
        return v[k].copy()
    return g / norm


def random_settings(rng, count=1):
    v = rng.standard_normal((count, 6, 3))
    return v / np.linalg.norm(v, axis=-1, keepdims=True)


def seesaw(t, start, cfg=OptimizerConfig()):
    """Run the seesaw from a batch of starts of shape (S, 6, 3).

    Returns ``(final_settings, values, sweeps, converged, history)``.
    """
    v = np.array(start, dtype=float)
    n = v.shape[0]
    value = _objective(t, v)
    history = [[float(x)] for x in value]
    sweeps = np.zeros(n, dtype=int)
    converged = np.zeros(n, dtype=bool)
    active = np.ones(n, dtype=bool)
    for _ in range(cfg.max_sweeps):
        if not active.any():
            break
        idx = np.flatnonzero(active)
        sub = v[idx]
        for k in range(6):
            _respond(t, sub, k)
        v[idx] = sub
        new = _objective(t, sub)
        gain = new - value[idx]
        value[idx] = new
        sweeps[idx] += 1
        for j, x in zip(idx, new):
            history[j].append(float(x))
        done = gain < cfg.convergence_tol
        converged[idx[done]] = True
        active[idx[done]] = False
    return v, value, sweeps, converged, [np.array(h) for h in history]


def numeric_max(rho, cfg=OptimizerConfig()):
    """Multi-start seesaw lower bound on max over settings of <B_M>.

    Start ``i`` draws its six directions from ``stream(cfg.seed, i)``, so the
    result is reproducible and independent of evaluation order.
    """
    t = _tensor(rho)
    start = np.concatenate([random_settings(stream(cfg.seed, i)) for i in range(cfg.starts)])
    v, values, sweeps, converged, history = seesaw(t, start, cfg)

    # flipping a1 and b1 negates every term, turning the worst start into a candidate
    flipped = v.copy()
    flipped[:, 0] *= -1
    flipped[:, 3] *= -1
    both = np.concatenate([values, -values])
    best = int(np.argmax(both))
    start_index = best % cfg.starts
    settings = (v if best < cfg.starts else flipped)[start_index]
    ms = MeasurementSettings.from_array(settings)
    return OptimizationResult(
        value=expectation_tensor(t, ms),
        settings=ms,
        sweeps_used=int(sweeps[start_index]),
        starts_converged=int(converged.sum()),
        best_start_index=start_index,
        history=history,
    )


def classify_gap(gap, report_tol=TOL.report):
    if abs(gap) <= report_tol:
        return "consistent"
    return "analytic_exceeds_numeric" if gap > 0 else "numeric_exceeds_analytic"


def discrepancy(rho, cfg=OptimizerConfig(), report_tol=TOL.report, optimum=None):
    """Compare the analytic value with the seesaw value; never raises on disagreement.

    Pass a precomputed ``optimum`` to avoid running the search twice.
    """
    _, _, verdict = analyze(rho)
    if optimum is None:
        optimum = numeric_max(rho, cfg)
    gap = verdict.value - optimum.value
    return DiscrepancyReport(analytic_value=verdict.value, numeric_value=optimum.value,
                             gap=gap, case_id=verdict.case_id, flag=classify_gap(gap, report_tol))


def stationarity_residual(t, s):
    """Largest objective change from replacing any one vector by its best response."""
    t = _tensor(t)
    base = expectation_tensor(t, s)
    worst = 0.0
    for name in VECTORS:
        moved = s.replace(name, best_response(t, s, name))
        worst = max(worst, abs(expectation_tensor(t, moved) - base))
    return worst
