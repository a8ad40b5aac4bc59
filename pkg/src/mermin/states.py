"""Named three-qubit families and their published closed-form eigenvalues.

Families (``param`` in [0, 1] where it applies):

* ``gghz``      alpha|000> + beta|111>, beta = sqrt(1 - alpha^2)
* ``ghz``       (|000> + |111>)/sqrt(2)
* ``w``         (|001> + |010> + |100>)/sqrt(3)
* ``wsup``      sqrt(1-p)|W> + sqrt(p)|000>
* ``ghzw_mix``  p|GHZ><GHZ| + (1-p)|W><W|
* ``file``      density matrix read from the JSON format in :mod:`.qstate`
"""
from dataclasses import dataclass
from math import sqrt
from typing import Optional

import numpy as np

from .linalg import kron3, pauli
from .qstate import PureState, ket, load_density, mix, pure_to_density

FAMILIES = ("gghz", "ghz", "w", "wsup", "ghzw_mix", "file")
PARAMETRIC = ("gghz", "wsup", "ghzw_mix")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    param: Optional[float] = None
    path: Optional[str] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {', '.join(FAMILIES)}")
        if self.family in PARAMETRIC:
            if self.param is None:
                raise ValueError(f"family {self.family!r} needs a parameter")
            if not 0.0 <= self.param <= 1.0:
                raise ValueError(f"parameter {self.param!r} outside [0, 1] for {self.family!r}")
        if self.family == "file" and not self.path:
            raise ValueError("family 'file' needs a path")


def ghz_vector():
    return PureState.from_unnormalized([1, 0, 0, 0, 0, 0, 0, 1])


def w_vector():
    return PureState.from_unnormalized([0, 1, 1, 0, 1, 0, 0, 0])


def gghz_vector(alpha):
    beta = sqrt(max(1.0 - alpha * alpha, 0.0))
    amps = np.zeros(8, dtype=complex)
    amps[0], amps[7] = alpha, beta
    return PureState(amps)


def wsup_vector(p):
    amps = sqrt(1.0 - p) * w_vector().amplitudes + sqrt(p) * ket("000").amplitudes
    return PureState(amps)


def gghz_pauli_expansion(alpha):
    """Pauli expansion of alpha|000> + beta|111> built term by term.

    Includes the ``(alpha^2 - beta^2) Z(x)Z(x)Z`` term, which is needed for the
    expansion to equal the pure-state projector unless alpha = beta.
    """
    beta = sqrt(max(1.0 - alpha * alpha, 0.0))
    i, x, y, z = (pauli(a) for a in ("i", "x", "y", "z"))
    diff = alpha * alpha - beta * beta
    m = (kron3(i, i, i) + kron3(i, z, z) + kron3(z, i, z) + kron3(z, z, i)
         + diff * (kron3(z, i, i) + kron3(i, z, i) + kron3(i, i, z))
         + diff * kron3(z, z, z)
         + 2 * alpha * beta * (kron3(x, x, x) - kron3(x, y, y) - kron3(y, x, y) - kron3(y, y, x)))
    return m / 8


def build(spec):
    f, p = spec.family, spec.param
    if f == "gghz":
        rho = pure_to_density(gghz_vector(p))
        if np.max(np.abs(rho.m - gghz_pauli_expansion(p))) > 1e-12:
            raise RuntimeError("generalized GHZ projector disagrees with its Pauli expansion")
        return rho
    if f == "ghz":
        return pure_to_density(ghz_vector())
    if f == "w":
        return pure_to_density(w_vector())
    if f == "wsup":
        return pure_to_density(wsup_vector(p))
    if f == "ghzw_mix":
        return mix([(p, pure_to_density(ghz_vector())), (1.0 - p, pure_to_density(w_vector()))])
    return load_density(spec.path)


def fixture_lambdas(spec):
    """Published closed forms for the largest eigenvalues (x, y, z).

    These are regression oracles only; the gghz z-value is the published 0,
    which holds for the actual state only at alpha = 1/sqrt(2).
    """
    f, p = spec.family, spec.param
    if f == "gghz":
        a2 = p * p
        lam = 4.0 * a2 * (1.0 - a2)
        return lam, lam, 0.0
    if f == "wsup":
        lx = (1 - p) * (4 / 9 + 2 / 9 * p + 2 / 9 * sqrt(max(12 * p - 3 * p * p, 0.0)))
        ly = 4 / 9 * (1 - p) ** 2
        lz = (sqrt(256 * p**4 - 640 * p**3 + 672 * p**2 - 232 * p + 25) / 18
              + 13 / 18 + 8 / 9 * p * p - 10 / 9 * p)
        return lx, ly, lz
    if f == "ghzw_mix":
        lx = 4 / 9 - 8 / 9 * p + 17 / 18 * p * p + sqrt(25 * p**4 - 32 * p**3 + 16 * p**2) / 6
        ly = 4 / 9 - 8 / 9 * p + 13 / 9 * p * p
        lz = (1 - p) ** 2
        return lx, ly, lz
    raise ValueError(f"no closed-form fixture for family {f!r}")
