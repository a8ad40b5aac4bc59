"""Pauli (Bloch) decomposition of a three-qubit density matrix.

    rho = 1/8 sum_{a,b,c in {I,x,y,z}} coef[a,b,c] sigma_a (x) sigma_b (x) sigma_c

with ``coef[0,0,0] = 1``. The local vectors, full pairwise correlation
matrices and the three-body tensor ``t[i][j][k] = Tr(rho s_i s_j s_k)`` are
read off ``coef``.
"""
from dataclasses import dataclass

import numpy as np

from .config import TOL
from .linalg import pauli_stack
from .qstate import DIM, DensityMatrix, InvalidStateError

_SIGMA = pauli_stack()


@dataclass(frozen=True, eq=False)
class BlochDecomposition:
    l: np.ndarray
    m: np.ndarray
    n: np.ndarray
    c12: np.ndarray
    c13: np.ndarray
    c23: np.ndarray
    t: np.ndarray

    def coefficients(self):
        """The full 4x4x4 coefficient array (index 0 is the identity)."""
        coef = np.zeros((4, 4, 4))
        coef[0, 0, 0] = 1.0
        coef[1:, 0, 0] = self.l
        coef[0, 1:, 0] = self.m
        coef[0, 0, 1:] = self.n
        coef[1:, 1:, 0] = self.c12
        coef[1:, 0, 1:] = self.c13
        coef[0, 1:, 1:] = self.c23
        coef[1:, 1:, 1:] = self.t
        return coef

    @classmethod
    def from_coefficients(cls, coef):
        coef = np.asarray(coef, dtype=float)
        return cls(
            l=coef[1:, 0, 0].copy(), m=coef[0, 1:, 0].copy(), n=coef[0, 0, 1:].copy(),
            c12=coef[1:, 1:, 0].copy(), c13=coef[1:, 0, 1:].copy(), c23=coef[0, 1:, 1:].copy(),
            t=coef[1:, 1:, 1:].copy(),
        )

    def scaled(self, s):
        """Copy with the three-body tensor multiplied by ``s``."""
        return BlochDecomposition(self.l, self.m, self.n, self.c12, self.c13, self.c23, s * self.t)

    def as_dict(self):
        return {k: getattr(self, k).tolist() for k in ("l", "m", "n", "c12", "c13", "c23", "t")}


@dataclass(frozen=True, eq=False)
class CorrelationSlices:
    """``tx[j][k] = t[x][k][j]``: rows step the third-qubit axis, columns the second."""

    tx: np.ndarray
    ty: np.ndarray
    tz: np.ndarray

    def __iter__(self):
        return iter((self.tx, self.ty, self.tz))

    def grams(self):
        """The symmetric matrices T^T T for each axis."""
        out = []
        for s in self:
            g = s.T @ s
            out.append((g + g.T) / 2)
        return out


def _matrix(rho):
    return rho.m if isinstance(rho, DensityMatrix) else np.asarray(rho, dtype=complex)


def decompose(rho):
    m = _matrix(rho)
    if m.shape != (DIM, DIM):
        raise InvalidStateError("dimension", f"expected 8x8, got {m.shape}")
    # r[i, j, k, x, y, z] = <ijk| rho |xyz>;  Tr(rho A(x)B(x)C) = sum rho[ijk,xyz] A[x,i] B[y,j] C[z,k]
    r = m.reshape(2, 2, 2, 2, 2, 2)
    coef = np.einsum("ijkxyz,axi,byj,czk->abc", r, _SIGMA, _SIGMA, _SIGMA)
    imag = float(np.max(np.abs(coef.imag)))
    if imag > TOL.bloch_imag:
        raise InvalidStateError("hermitian", f"Pauli coefficient with imaginary part {imag:.3e}")
    coef = coef.real
    _check_range(coef)
    return BlochDecomposition.from_coefficients(coef)


def _check_range(coef):
    worst = float(np.max(np.abs(coef)))
    if worst > 1.0 + TOL.bloch_range:
        raise ValueError(f"Bloch coefficient {worst!r} outside [-1, 1]")


def reconstruct_matrix(b):
    """``1/8 sum coef[a,b,c] sigma_a (x) sigma_b (x) sigma_c`` without validation."""
    coef = b.coefficients()
    _check_range(coef)
    ops = np.einsum("abc,axi,byj,czk->xyzijk", coef, _SIGMA, _SIGMA, _SIGMA)
    return ops.reshape(DIM, DIM) / 8.0


def reconstruct(b):
    """Rebuild a validated :class:`DensityMatrix`; PSD failures raise."""
    return DensityMatrix(reconstruct_matrix(b))


def slices(b):
    t = b.t
    return CorrelationSlices(tx=t[0].T.copy(), ty=t[1].T.copy(), tz=t[2].T.copy())
