"""Small dense linear algebra: Pauli matrices, three-fold Kronecker products
and cyclic Jacobi eigensolvers for Hermitian and real symmetric matrices.

Matrices are plain numpy arrays. The qubit ordering is fixed with qubit 1 as
the most significant bit, so basis index ``4*i1 + 2*i2 + i3``.
"""
import math

import numpy as np

from .config import TOL

_PAULI = {
    "i": np.array([[1, 0], [0, 1]], dtype=complex),
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}
_ALIASES = {"identity": "i", "id": "i", 0: "i", 1: "x", 2: "y", 3: "z"}

AXES = ("x", "y", "z")


def pauli(axis):
    """Return a fresh copy of the Pauli matrix for ``axis``.

    ``axis`` is one of ``'x'``, ``'y'``, ``'z'`` or ``'identity'`` (also
    ``'i'``); integers 0-3 select I, X, Y, Z.
    """
    key = _ALIASES.get(axis, axis)
    if isinstance(key, str):
        key = key.lower()
    try:
        return _PAULI[key].copy()
    except KeyError:
        raise ValueError(f"unknown Pauli axis {axis!r}") from None


def pauli_stack():
    """Array of shape (4, 2, 2) holding I, X, Y, Z in that order."""
    return np.stack([_PAULI[k] for k in "ixyz"])


def kron3(a, b, c):
    """Kronecker product ``a (x) b (x) c`` of three 2x2 matrices."""
    mats = [np.asarray(m) for m in (a, b, c)]
    for m in mats:
        if m.shape != (2, 2):
            raise ValueError(f"kron3 expects 2x2 operands, got shape {m.shape}")
    return np.kron(np.kron(mats[0], mats[1]), mats[2])


def _check_square(m):
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def _jacobi(a, want_vectors):
    """Cyclic Jacobi diagonalisation of a Hermitian (or real symmetric) matrix.

    Works on a copy. Each rotation first strips the phase of the pivot
    ``a[p, q]`` and then applies the classical real rotation, i.e. the unitary

        U = [[c, s*w], [-s*conj(w), c]]   on rows/cols (p, q),

    with ``w = a[p, q] / |a[p, q]|``. Returns ``(diag, V)`` where ``V`` holds
    the eigenvectors as columns (``None`` if not requested).
    """
    a = np.array(a, dtype=complex if np.iscomplexobj(a) else float)
    n = a.shape[0]
    v = np.eye(n, dtype=a.dtype) if want_vectors else None
    scale = np.linalg.norm(a)
    if scale == 0.0:
        return np.zeros(n), v
    # work at unit Frobenius norm; pivots below 1e-30 cannot reach the stopping target
    a /= scale
    target = TOL.jacobi_rel

    for _ in range(TOL.jacobi_max_sweeps):
        if np.linalg.norm(a - np.diag(np.diag(a))) <= target:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r < 1e-30:
                    continue
                w = apq / r
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * r)
                if abs(tau) > 1e150:
                    t = 0.5 / tau
                else:
                    t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                sw = s * w
                swc = np.conj(sw)

                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - swc * col_q
                a[:, q] = sw * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - sw * row_q
                a[q, :] = swc * row_p + c * row_q
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

                if v is not None:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp - swc * vq
                    v[:, q] = sw * vp + c * vq

    return np.diag(a).real * scale, v


def herm_eigvals(m, tol=TOL.hermitian):
    """Eigenvalues of a Hermitian matrix in ascending order (cyclic Jacobi)."""
    m = _check_square(m)
    dev = np.max(np.abs(m - m.conj().T)) if m.size else 0.0
    if dev > tol:
        raise ValueError(f"matrix is not Hermitian (max |M - M^H| = {dev:.3e})")
    vals, _ = _jacobi((m + m.conj().T) / 2, want_vectors=False)
    return np.sort(vals)


def sym_eig3(m, tol=TOL.symmetric):
    """Eigen-decomposition of a real symmetric 3x3 matrix.

    Returns ``(vals, vecs)`` with eigenvalues in descending order and the
    matching orthonormal eigenvectors as the columns of ``vecs``.
    """
    m = np.asarray(m, dtype=float)
    if m.shape != (3, 3):
        raise ValueError(f"sym_eig3 expects a 3x3 matrix, got shape {m.shape}")
    _check_square(m)
    dev = np.max(np.abs(m - m.T))
    if dev > tol:
        raise ValueError(f"matrix is not symmetric (max |M - M^T| = {dev:.3e})")
    vals, vecs = _jacobi((m + m.T) / 2, want_vectors=True)
    # stable sort keeps the fixed sweep order deterministic on ties
    order = np.argsort(-vals, kind="stable")
    return vals[order], vecs[:, order]


def is_unitary(u, tol=TOL.unitary):
    u = np.asarray(u)
    return u.ndim == 2 and u.shape[0] == u.shape[1] and bool(
        np.max(np.abs(u.conj().T @ u - np.eye(u.shape[0]))) <= tol
    )
