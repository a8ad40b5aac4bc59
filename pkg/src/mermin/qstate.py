"""Three-qubit states: pure states, validated density matrices, mixtures,
local unitaries, seeded random sampling and the JSON file format.
"""
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .config import TOL
from .linalg import herm_eigvals, is_unitary, kron3

DIM = 8


class InvalidStateError(ValueError):
    """Raised when a matrix fails one of the density-matrix invariants.

    ``invariant`` names the failed check: ``dimension``, ``finite``,
    ``hermitian``, ``unit-trace``, ``positive-semidefinite`` or
    ``normalization``.
    """

    def __init__(self, invariant, detail):
        self.invariant = invariant
        super().__init__(f"{invariant} invariant violated: {detail}")


def stream(seed, index=0):
    """Deterministic generator for item ``index`` under master ``seed``.

    Philox is counter-based, so every (seed, index) pair owns an independent
    stream and the result does not depend on scheduling or platform.
    """
    mask = (1 << 64) - 1
    return np.random.Generator(np.random.Philox(key=[int(index) & mask, int(seed) & mask]))


def derive_seed(seed, index, salt=1):
    """Integer seed for row ``index`` that does not collide with ``stream(seed, index)``."""
    seq = np.random.SeedSequence([int(seed) & ((1 << 64) - 1), int(index), salt])
    return int(seq.generate_state(1, dtype=np.uint64)[0])


@dataclass(frozen=True, eq=False)
class PureState:
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (DIM,):
            raise InvalidStateError("dimension", f"expected {DIM} amplitudes, got {amps.size}")
        if not np.all(np.isfinite(amps)):
            raise InvalidStateError("finite", "amplitudes contain NaN or Inf")
        norm2 = float(np.vdot(amps, amps).real)
        if abs(norm2 - 1.0) > TOL.norm:
            raise InvalidStateError("normalization", f"sum |c_k|^2 = {norm2!r}")
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def from_unnormalized(cls, amps):
        amps = np.asarray(amps, dtype=complex)
        return cls(amps / np.linalg.norm(amps))


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Validated 8x8 density matrix (Hermitian, unit trace, PSD)."""

    m: np.ndarray
    eigenvalues: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        m = np.array(self.m, dtype=complex)
        if m.shape != (DIM, DIM):
            raise InvalidStateError("dimension", f"expected {DIM}x{DIM}, got {m.shape}")
        if not np.all(np.isfinite(m)):
            raise InvalidStateError("finite", "entries contain NaN or Inf")
        herm_dev = float(np.max(np.abs(m - m.conj().T)))
        if herm_dev > TOL.hermitian:
            raise InvalidStateError("hermitian", f"max |rho - rho^H| = {herm_dev:.3e}")
        tr = np.trace(m).real
        if abs(tr - 1.0) > TOL.trace:
            raise InvalidStateError("unit-trace", f"trace = {tr!r}")
        evals = herm_eigvals(m)
        if evals[0] < -TOL.psd:
            raise InvalidStateError("positive-semidefinite", f"min eigenvalue = {evals[0]:.3e}")
        m.flags.writeable = False
        evals.flags.writeable = False
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "eigenvalues", evals)

    def purity(self):
        return float(np.trace(self.m @ self.m).real)


def ket(bits):
    """Computational basis state, e.g. ``ket('010')``."""
    if len(bits) != 3 or set(bits) - {"0", "1"}:
        raise ValueError(f"expected three bits, got {bits!r}")
    amps = np.zeros(DIM, dtype=complex)
    amps[int(bits, 2)] = 1.0
    return PureState(amps)


def pure_to_density(psi):
    amps = psi.amplitudes if isinstance(psi, PureState) else PureState(psi).amplitudes
    return DensityMatrix(np.outer(amps, amps.conj()))


def mix(components):
    """Convex combination of ``(weight, DensityMatrix)`` pairs."""
    if not components:
        raise ValueError("mix needs at least one component")
    weights = np.array([w for w, _ in components], dtype=float)
    if np.any(weights < 0):
        raise ValueError(f"negative mixture weight in {weights.tolist()}")
    total = weights.sum()
    if abs(total - 1.0) > TOL.norm:
        raise ValueError(f"mixture weights sum to {total!r}, expected 1")
    m = sum(w * rho.m for w, rho in components)
    return DensityMatrix(m)


def apply_local_unitary(rho, u1, u2, u3):
    for k, u in enumerate((u1, u2, u3), start=1):
        if np.shape(u) != (2, 2) or not is_unitary(u):
            raise ValueError(f"local factor U{k} is not a 2x2 unitary")
    u = kron3(u1, u2, u3)
    return DensityMatrix(u @ rho.m @ u.conj().T)


def random_haar_pure(seed, index=0):
    """Haar-random pure state: normalised vector of complex Gaussians."""
    rng = stream(seed, index)
    return _haar_vector(rng)


def _haar_vector(rng):
    z = rng.standard_normal(DIM) + 1j * rng.standard_normal(DIM)
    return PureState(z / np.linalg.norm(z))


def random_mixed(seed, rank, index=0):
    """Random state sum_k w_k |psi_k><psi_k| with ``rank`` Haar components.

    Weights are a uniform draw from the probability simplex.
    """
    if not 1 <= int(rank) <= DIM or int(rank) != rank:
        raise ValueError(f"rank must be an integer in 1..{DIM}, got {rank!r}")
    rng = stream(seed, index)
    weights = rng.dirichlet(np.ones(int(rank)))
    m = np.zeros((DIM, DIM), dtype=complex)
    for w in weights:
        a = _haar_vector(rng).amplitudes
        m += w * np.outer(a, a.conj())
    # the simplex draw sums to 1 only up to rounding
    return DensityMatrix(m / np.trace(m).real)


def random_unitary(rng, dim=2):
    """Haar-random unitary via QR of a complex Gaussian matrix."""
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


# -- JSON file format --------------------------------------------------------

def density_to_json(rho):
    entries = [[[float(z.real), float(z.imag)] for z in row] for row in rho.m]
    return {"dim": DIM, "entries": entries}


def density_from_json(doc):
    """Parse ``{"dim": 8, "entries": [[[re, im] x 8] x 8]}``."""
    if not isinstance(doc, dict) or "entries" not in doc:
        raise InvalidStateError("dimension", "document must be an object with 'entries'")
    if doc.get("dim") != DIM:
        raise InvalidStateError("dimension", f"dim must be {DIM}, got {doc.get('dim')!r}")
    try:
        arr = np.array(doc["entries"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise InvalidStateError("dimension", f"entries are not a numeric grid ({exc})") from None
    if arr.shape != (DIM, DIM, 2):
        raise InvalidStateError("dimension", f"entries must have shape (8, 8, 2), got {arr.shape}")
    return DensityMatrix(arr[..., 0] + 1j * arr[..., 1])


def load_density(path):
    with open(path) as fh:
        doc = json.load(fh)
    return density_from_json(doc)


def save_density(rho, path):
    Path(path).write_text(json.dumps(density_to_json(rho)))
