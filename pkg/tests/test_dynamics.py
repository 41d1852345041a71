import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from susy_entangle.dynamics import (
    EvolvedState,
    ProductStateSpec,
    amplitude_phase_convention,
    evolve,
    evolve_amplitudes,
)
from susy_entangle.errors import ParameterError
from susy_entangle.hamiltonian import HamiltonianParams
from susy_entangle.spectrum import assemble_spectrum

S12 = math.sqrt(12)
S7 = 4 * math.sqrt(7)


def run(n, l, g, t, omega=0.0):
    params = HamiltonianParams(omega, g, n)
    return evolve(ProductStateSpec(n, l), assemble_spectrum(params), params, t)


def test_n3_quarter_period():
    st_ = run(3, 0, 1.0, math.pi / 2 / S12)
    np.testing.assert_allclose(st_.amplitudes, [0, -1j], atol=1e-15)
    assert st_.fock_labels() == [(3, 0), (1, 2)]


@pytest.mark.parametrize("n, l", [(1, 0), (1, 1), (3, 2), (5, 3), (9, 4), (9, 9)])
def test_identity_at_t0(n, l):
    a = run(n, l, 1.7, 0.0).amplitudes
    expected = np.zeros(len(a))
    expected[l // 2] = 1
    np.testing.assert_allclose(a, expected, atol=1e-15)


def test_n5_half_period():
    a = run(5, 0, 1.0, math.pi / S7).amplitudes
    np.testing.assert_allclose(a, [2 / 7, 0, -3 * math.sqrt(5) / 7], atol=1e-14)


def test_parity_ladder_labels():
    s = run(5, 3, 1.0, 0.3)
    assert s.parity == 1
    assert s.fock_labels() == [(4, 1), (2, 3), (0, 5)]


def test_mismatched_sector_rejected():
    params = HamiltonianParams(0.0, 1.0, 5)
    with pytest.raises(ParameterError):
        evolve(ProductStateSpec(3, 0), assemble_spectrum(params), params, 0.1)
    with pytest.raises(ParameterError):
        ProductStateSpec(3, 4)


@pytest.mark.parametrize("amps, expected", [
    ([0, -1j], [0, 1]),
    ([1, 0, 0], [1, 0, 0]),
])
def test_phase_convention_examples(amps, expected):
    s = EvolvedState(0.0, 2 * len(amps) - 1, 0, 0, np.array(amps, dtype=complex))
    np.testing.assert_allclose(amplitude_phase_convention(s).amplitudes, expected, atol=1e-15)


def test_phase_convention_removes_global_phase():
    base = np.array([2 / 7, 0, -3 * math.sqrt(5) / 7], dtype=complex)
    s = EvolvedState(0.0, 5, 0, 0, base * np.exp(0.83j))
    np.testing.assert_allclose(amplitude_phase_convention(s).amplitudes, base, atol=1e-15)


unitarity_draws = st.tuples(
    st.integers(0, 10).map(lambda k: 2 * k + 1),
    st.floats(0, 1),
    st.floats(-5, 5).filter(lambda g: abs(g) > 1e-3),
    st.floats(0, 1),
)


@settings(max_examples=1000, deadline=None)
@given(unitarity_draws)
def test_unitarity(draw):
    n, lfrac, g, tfrac = draw
    l = min(int(lfrac * (n + 1)), n)
    t = tfrac * 50 / abs(g)
    a = run(n, l, g, t).amplitudes
    assert abs(np.sum(np.abs(a) ** 2) - 1) <= 1e-12


@settings(max_examples=100, deadline=None)
@given(n=st.integers(0, 10).map(lambda k: 2 * k + 1), g=st.floats(0.1, 5), gt=st.floats(0, 30))
def test_depends_only_on_gt(n, g, gt):
    l = n // 2
    a = np.abs(run(n, l, g, gt / g).amplitudes)
    b = np.abs(run(n, l, 1.0, gt).amplitudes)
    np.testing.assert_allclose(a, b, atol=1e-12)


def test_n3_recurrence():
    a = run(3, 0, 0.8, math.pi / (S12 * 0.8)).amplitudes
    assert abs(a[0]) == pytest.approx(1.0, abs=1e-14)


@pytest.mark.parametrize("n", [3, 7, 21])
def test_g_zero_frozen(n):
    params = HamiltonianParams(0.9, 0.0, n)
    amps = evolve_amplitudes(ProductStateSpec(n, 2), assemble_spectrum(params), params, np.linspace(0, 40, 9))
    assert np.all(np.abs(amps) == np.abs(amps[0]))


@pytest.mark.parametrize("l", [0, 1])
def test_n1_phase_only(l):
    for t in (0.0, 0.37, 12.5):
        a = run(1, l, 2.3, t).amplitudes
        assert len(a) == 1 and abs(a[0]) == pytest.approx(1.0, abs=1e-15)


def test_omega_never_observable():
    a = run(9, 0, 1.0, 0.77, omega=0.0).amplitudes
    b = run(9, 0, 1.0, 0.77, omega=13.0).amplitudes
    np.testing.assert_array_equal(a, b)
