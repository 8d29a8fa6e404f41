"""Smoke tests for the python bindings, cross-checked against numpy."""

import math

import numpy as np
import pytest

import deficit_lab as dl


def to_numpy(rho):
    return np.array(rho.matrix(), dtype=complex)


def numpy_entropy(m):
    ev = np.linalg.eigvalsh(m)
    ev = ev[ev > 1e-15]
    return float(-(ev * np.log2(ev)).sum())


def bell():
    r = math.sqrt(0.5)
    return dl.pure_state(2, 2, [r, 0, 0, r])


def test_entropy_against_numpy():
    rho = dl.build_sw99_state()
    assert dl.entropy(rho) == pytest.approx(numpy_entropy(to_numpy(rho)), abs=1e-10)


def test_partial_trace_against_numpy():
    rho = dl.build_knr01_state()
    m = to_numpy(rho).reshape(3, 2, 3, 2)
    np.testing.assert_allclose(
        np.array(dl.partial_trace(rho, "A").matrix()), np.einsum("ikjk->ij", m), atol=1e-12
    )
    np.testing.assert_allclose(
        np.array(dl.partial_trace(rho, "B").matrix()), np.einsum("kikj->ij", m), atol=1e-12
    )


def test_bell_quantities():
    rho = bell()
    assert dl.mutual_information(rho) == pytest.approx(2.0, abs=1e-9)
    assert dl.i_go(rho) == pytest.approx(2.0, abs=1e-9)
    assert dl.i_lo(rho) == pytest.approx(0.0, abs=1e-9)
    q = dl.evaluate_measurement(rho, dl.ProjectiveMeasurement.computational(2))
    assert q.c_hv == pytest.approx(1.0, abs=1e-9)
    assert q.delta_cl == pytest.approx(1.0, abs=1e-9)
    assert q.deficit_q == pytest.approx(1.0, abs=1e-9)


def test_measurement_identity_random():
    rng = np.random.default_rng(12)
    for _ in range(10):
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        m = g @ g.conj().T
        m /= np.trace(m).real
        rho = dl.DensityMatrix(2, 2, [[complex(z) for z in row] for row in m])
        q = dl.evaluate_measurement(rho, dl.ProjectiveMeasurement.qubit(1.1, 0.3))
        assert q.deficit_q + q.delta_cl == pytest.approx(dl.mutual_information(rho), abs=1e-9)
        assert q.delta_cl <= q.c_hv + 1e-10


def test_sw99_frozen_values():
    rho = dl.build_sw99_state()
    q = dl.evaluate_measurement(rho, dl.ProjectiveMeasurement.computational(2))
    assert q.c_hv == pytest.approx(0.467595125810, abs=1e-9)
    eig = dl.ProjectiveMeasurement.eigenbasis(dl.partial_trace(rho, "A"))
    assert dl.evaluate_measurement(rho, eig).c_hv == pytest.approx(0.324521020437, abs=1e-9)


def test_knr01_negative_deficit():
    rho = dl.build_knr01_state()
    q = dl.evaluate_measurement(rho, dl.ProjectiveMeasurement.computational(3))
    assert q.c_hv == pytest.approx(0.324990192695, abs=1e-9)
    assert q.delta_cl < 0


def test_optimizer_bell():
    result = dl.maximize(bell(), objective="chv", starts=6)
    assert result.value == pytest.approx(1.0, abs=1e-6)
    # re-evaluation at the reported measurement reproduces the value
    q = dl.evaluate_measurement(bell(), result.measurement)
    assert q.c_hv == pytest.approx(result.value, abs=1e-10)


def test_dephasing_increases_delta_cl_on_sw99():
    rho = dl.build_sw99_state()
    dephased = dl.dephase_alice(rho, dl.ProjectiveMeasurement.computational(2))
    before = dl.maximize(rho, objective="dcl", starts=6).value
    after = dl.maximize(dephased, objective="dcl", starts=6).value
    assert after > before  # a local operation increased the classical deficit


def test_chi_scan():
    assert dl.orthogonal_chi_scan() == pytest.approx(0.45662139949914, abs=1e-9)
