"""Smoke tests for the compiled extension module."""

import math

import pytest

try:
    import _spinq as sq
except ImportError:  # installed-package layout
    import spinq as sq

SQRT38 = math.sqrt(3.0 / 8.0)

MID = [[0, 0, 0], [0, 1, 0], [0, 0, 0]]  # |1,0><1,0|
MIXED = [[1 / 3, 0, 0], [0, 1 / 3, 0], [0, 0, 1 / 3]]


def test_schema_version():
    assert isinstance(sq.schema_version, str)
    assert sq.schema_version


def test_f_quantumness_endpoints():
    assert sq.f_quantumness(-1.0) == pytest.approx(SQRT38, abs=1e-12)
    assert sq.f_quantumness(0.0) == pytest.approx(0.0, abs=1e-12)
    assert sq.f_quantumness(-0.5) == pytest.approx(
        0.30618621784789726, abs=1e-12
    )


def test_min_bloch_eig_and_classicality():
    assert sq.min_bloch_eig(MID) == pytest.approx(-1.0, abs=1e-12)
    assert not sq.is_classical(MID)
    assert sq.is_classical(MIXED)
    assert sq.min_bloch_eig(MIXED) == pytest.approx(1 / 3, abs=1e-12)


def test_quantumness_report():
    rep = sq.quantumness(MID)
    assert rep["method"] == "analytic_pure"
    assert rep["value"] == pytest.approx(SQRT38, abs=1e-10)
    assert rep["lambda_min"] == pytest.approx(-1.0, abs=1e-12)
    assert rep["converged"]

    rep0 = sq.quantumness(MIXED)
    assert rep0["method"] == "classical_zero"
    assert rep0["value"] == 0.0


def test_quantumness_qp_on_mixed_state():
    rho = sq.random_hs_density(seed=11, index=3)
    rep = sq.quantumness(rho, atoms=256, refine_rounds=1, seed=1)
    lam = sq.min_bloch_eig(rho)
    if lam < -1e-9:
        assert rep["method"] == "qp"
        assert rep["value"] >= rep["lower_bound"] - 1e-6
        assert rep["value"] <= sq.f_quantumness(lam) + 1e-3
        weights = [a["weight"] for a in rep["decomposition"]]
        assert sum(weights) == pytest.approx(1.0, abs=1e-9)
    else:
        assert rep["value"] == 0.0


def test_entanglement_correspondence():
    assert sq.negativity(MID) == pytest.approx(0.5, abs=1e-12)
    assert sq.concurrence(MID) == pytest.approx(1.0, abs=1e-10)
    assert sq.negativity(MIXED) == pytest.approx(0.0, abs=1e-12)
    assert sq.concurrence(MIXED) == pytest.approx(0.0, abs=1e-8)


def test_coherent_states_are_classical():
    amps = sq.coherent_amplitudes(0.7, 1.3)
    assert sum(abs(a) ** 2 for a in amps) == pytest.approx(1.0, abs=1e-12)
    rho = [[amps[i] * amps[j].conjugate() for j in range(3)] for i in range(3)]
    assert sq.is_classical(rho)
    assert abs(sq.min_bloch_eig(rho)) < 1e-12


def test_ccs_of_pure():
    out = sq.ccs_of_pure([0, 1, 0])
    weights = [a["weight"] for a in out["atoms"]]
    assert sum(weights) == pytest.approx(1.0, abs=1e-12)
    W = out["W"]
    assert len(W) == 4 and all(len(row) == 4 for row in W)
    assert W[0][0] == pytest.approx(1.0, abs=1e-12)
    assert W[1][1] + W[2][2] + W[3][3] == pytest.approx(1.0, abs=1e-10)


def test_bloch_matrix_shape_and_trace():
    X = sq.bloch_matrix(MID)
    assert X[0][0] == pytest.approx(1.0, abs=1e-12)
    assert X[1][1] + X[2][2] + X[3][3] == pytest.approx(1.0, abs=1e-12)
    for i in range(4):
        for j in range(4):
            assert X[i][j] == pytest.approx(X[j][i], abs=1e-12)


def test_lower_bound_and_ell():
    assert sq.lower_bound(-1.0) == pytest.approx(1 / math.sqrt(3), abs=1e-12)
    with pytest.raises(ValueError):
        sq.lower_bound(0.1)
    assert sq.ell(-0.25) == pytest.approx(0.032929616520535074, abs=1e-10)
    with pytest.raises(ValueError):
        sq.ell(-0.6)
