import hashlib
import json

import numpy as np
import pytest

from mermin.linalg import pauli
from mermin.qstate import (DensityMatrix, InvalidStateError, PureState, apply_local_unitary,
                           density_from_json, density_to_json, derive_seed, ket, load_density, mix,
                           pure_to_density, random_haar_pure, random_mixed, random_unitary,
                           save_density, stream)
from mermin.states import ghz_vector, w_vector


def test_pure_state_normalization():
    with pytest.raises(InvalidStateError) as exc:
        PureState([1, 1, 0, 0, 0, 0, 0, 0])
    assert exc.value.invariant == "normalization"
    with pytest.raises(InvalidStateError):
        PureState([1, 0, 0])


def test_pure_to_density_basis():
    rho = pure_to_density(ket("000"))
    expected = np.zeros((8, 8))
    expected[0, 0] = 1
    assert np.array_equal(rho.m, expected)


def test_pure_to_density_ghz_corners(ghz):
    expected = np.zeros((8, 8))
    expected[np.ix_([0, 7], [0, 7])] = 0.5
    assert np.max(np.abs(ghz.m - expected)) < 1e-15
    assert abs(ghz.eigenvalues[-1] - 1) < 1e-10
    assert np.max(np.abs(ghz.eigenvalues[:-1])) < 1e-10


def test_pure_to_density_w_block(w_state):
    block = np.ix_([1, 2, 4], [1, 2, 4])
    assert np.allclose(w_state.m[block], 1 / 3)
    assert abs(np.abs(w_state.m).sum() - 3) < 1e-12


@pytest.mark.parametrize("bad, invariant", [
    (np.eye(4) / 4, "dimension"),
    (np.full((8, 8), np.nan), "finite"),
    (np.triu(np.ones((8, 8))) / 8, "hermitian"),
    (0.9 * np.eye(8) / 8, "unit-trace"),
    (np.diag([1.5, -0.5, 0, 0, 0, 0, 0, 0]), "positive-semidefinite"),
])
def test_density_invariants(bad, invariant):
    with pytest.raises(InvalidStateError) as exc:
        DensityMatrix(bad)
    assert exc.value.invariant == invariant
    assert invariant in str(exc.value)


def test_density_is_read_only(ghz):
    with pytest.raises(ValueError):
        ghz.m[0, 0] = 0


def test_mix_single_component(ghz):
    assert np.array_equal(mix([(1.0, ghz)]).m, ghz.m)


def test_mix_example3(ghz, w_state):
    rho = mix([(0.5, ghz), (0.5, w_state)])
    g, w = ghz_vector().amplitudes, w_vector().amplitudes
    expected = 0.5 * np.outer(g, g.conj()) + 0.5 * np.outer(w, w.conj())
    assert np.max(np.abs(rho.m - expected)) < 1e-15


@pytest.mark.parametrize("weights", [(0.3, 0.8), (-0.1, 1.1)])
def test_mix_rejects_bad_weights(ghz, weights):
    with pytest.raises(ValueError):
        mix([(w, ghz) for w in weights])


def test_local_unitary_identity(ghz):
    i = np.eye(2)
    assert np.allclose(apply_local_unitary(ghz, i, i, i).m, ghz.m)


def test_local_unitary_flip_first_qubit():
    rho = apply_local_unitary(pure_to_density(ket("000")), pauli("x"), np.eye(2), np.eye(2))
    assert np.allclose(rho.m, pure_to_density(ket("100")).m)


def test_local_unitary_preserves_spectrum(ghz):
    rng = stream(11)
    for _ in range(10):
        us = [random_unitary(rng) for _ in range(3)]
        out = apply_local_unitary(ghz, *us)
        assert abs(np.trace(out.m).real - 1) < 1e-10
        assert np.max(np.abs(out.eigenvalues - ghz.eigenvalues)) < 1e-9


def test_local_unitary_rejects_non_unitary(ghz):
    with pytest.raises(ValueError):
        apply_local_unitary(ghz, 2 * np.eye(2), np.eye(2), np.eye(2))


def test_haar_determinism_and_norm():
    a, b = random_haar_pure(3), random_haar_pure(3)
    assert np.array_equal(a.amplitudes, b.amplitudes)
    assert abs(np.linalg.norm(a.amplitudes) - 1) < 1e-12
    diff = np.abs(random_haar_pure(0).amplitudes - random_haar_pure(1).amplitudes)
    assert diff.max() > 1e-6


def test_streams_are_distinct():
    draws = {stream(5, i).random() for i in range(50)}
    assert len(draws) == 50
    assert stream(5, 3).random() != stream(3, 5).random()
    assert derive_seed(1, 2) != derive_seed(1, 3)


def test_random_mixed_rank_one_is_pure():
    assert abs(random_mixed(4, 1).purity() - 1) < 1e-10


def test_random_mixed_full_rank_psd():
    for seed in range(5):
        assert random_mixed(seed, 8).eigenvalues[0] >= -1e-10


def test_random_mixed_reproducible_hash():
    digest = lambda: hashlib.sha256(random_mixed(7, 2).m.tobytes()).hexdigest()
    assert digest() == digest()


@pytest.mark.parametrize("rank", [0, 9, 2.5])
def test_random_mixed_rank_range(rank):
    with pytest.raises(ValueError):
        random_mixed(0, rank)


def test_json_roundtrip(tmp_path):
    rho = random_mixed(9, 3)
    path = tmp_path / "rho.json"
    save_density(rho, path)
    assert np.array_equal(load_density(path).m, rho.m)
    doc = density_to_json(rho)
    assert doc["dim"] == 8 and len(doc["entries"]) == 8


@pytest.mark.parametrize("doc", [
    {"dim": 4, "entries": []},
    {"dim": 8},
    {"dim": 8, "entries": [[[0, 0]] * 8] * 7},
    [1, 2, 3],
])
def test_json_structure_errors(doc):
    with pytest.raises(InvalidStateError):
        density_from_json(doc)


def test_json_unit_trace_error(tmp_path):
    entries = [[[0.9 / 8 if i == j else 0.0, 0.0] for j in range(8)] for i in range(8)]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"dim": 8, "entries": entries}))
    with pytest.raises(InvalidStateError) as exc:
        load_density(path)
    assert exc.value.invariant == "unit-trace"
