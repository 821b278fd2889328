#!/usr/bin/env python3
"""
Two-level RWA model: weak-field criterion, Hamiltonian and Rabi dynamics
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from core.errors import DomainError, InputError
from core.linalg import is_hermitian, is_unitary, make_pauli
from core.propagation import evolve_amplitudes, propagate_piecewise, sample_times
from core.two_level import (
    check_weak_field,
    detuning,
    dipole_coupling,
    population_inversion,
    propagate2,
    rabi_upper_population,
    rwa_hamiltonian,
    step_propagator,
)
from models.atom import DriveField, TwoLevelAtom
from models.states import Spinor2State

finite = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False, allow_infinity=False)


def resonant_setup(omega_rabi=1.0, delta=0.0):
    atom = TwoLevelAtom(mu=omega_rabi, gamma=1.0, omega_a=0.0)
    field = DriveField(E0=1.0, omega0=delta)
    return atom, field


class TestWeakField:
    def test_ratio_examples(self):
        report = check_weak_field(TwoLevelAtom(mu=1.0, gamma=10.0), DriveField(E0=1.0))
        assert report.ratio == pytest.approx(0.1)
        assert report.within_weak_field

        report = check_weak_field(TwoLevelAtom(mu=2.0, gamma=1.0), DriveField(E0=1.0))
        assert report.ratio == pytest.approx(2.0)
        assert not report.within_weak_field

    def test_boundary_is_outside(self):
        report = check_weak_field(TwoLevelAtom(mu=1.0, gamma=1.0), DriveField(E0=1.0))
        assert report.ratio == 1.0
        assert not report.within_weak_field

    def test_zero_gamma_rejected_by_atom(self):
        with pytest.raises(DomainError):
            TwoLevelAtom(mu=1.0, gamma=0.0)

    def test_non_positive_hbar_is_a_domain_error(self):
        with pytest.raises(DomainError):
            check_weak_field(TwoLevelAtom(mu=1.0, gamma=1.0), DriveField(E0=1.0), hbar=0.0)

    def test_hbar_enters_the_ratio(self):
        report = check_weak_field(TwoLevelAtom(mu=1.0, gamma=1.0), DriveField(E0=1.0), hbar=4.0)
        assert report.ratio == pytest.approx(0.25)


class TestHamiltonian:
    def test_zero_drive_on_resonance_is_zero(self):
        atom = TwoLevelAtom(mu=0.0, gamma=1.0)
        np.testing.assert_array_equal(rwa_hamiltonian(atom, DriveField(E0=0.0)), np.zeros((2, 2)))

    def test_pure_drive_is_minus_sigma_x(self):
        atom = TwoLevelAtom(mu=2.0, gamma=1.0)
        np.testing.assert_allclose(rwa_hamiltonian(atom, DriveField(E0=1.0)), -make_pauli("x"), atol=1e-15)

    def test_detuning_convention(self):
        atom = TwoLevelAtom(mu=1.0, gamma=1.0, omega_a=2.0)
        assert detuning(atom, DriveField(E0=1.0, omega0=5.0)) == 3.0

    @settings(max_examples=100, deadline=None)
    @given(finite, st.floats(min_value=0.0, max_value=5.0), finite, finite)
    def test_hermitian_and_traceless(self, mu, E0, omega_a, omega0):
        atom = TwoLevelAtom(mu=mu, gamma=1.0, omega_a=omega_a)
        H = rwa_hamiltonian(atom, DriveField(E0=E0, omega0=omega0))
        assert is_hermitian(H, tol=1e-14)
        assert abs(np.trace(H)) < 1e-14

    def test_dipole_coupling_along_z(self):
        np.testing.assert_allclose(dipole_coupling(0.5, [0.0, 0.0, 2.0]), -make_pauli("z"), atol=1e-15)


class TestPropagation:
    def test_zero_hamiltonian_keeps_state(self):
        state = Spinor2State([1.0, 1.0j])
        traj = propagate2(state, np.zeros((2, 2)), 5.0, 0.5)
        for row in traj.states:
            np.testing.assert_allclose(row, state.amplitudes, atol=1e-15)

    def test_resonant_rabi_oracle(self):
        atom, field = resonant_setup()
        H = rwa_hamiltonian(atom, field)
        duration = 20.0 * math.pi
        traj = propagate2(Spinor2State.ground(), H, duration, duration / 99)
        assert len(traj) == 100
        expected = rabi_upper_population(traj.times, 1.0)
        np.testing.assert_allclose(traj.populations[:, 1], np.sin(traj.times / 2.0) ** 2, atol=1e-9)
        np.testing.assert_allclose(traj.populations[:, 1], expected, atol=1e-9)

    def test_pi_pulse_inverts(self):
        atom, field = resonant_setup()
        traj = propagate2(Spinor2State.ground(), rwa_hamiltonian(atom, field), math.pi, math.pi / 10)
        assert traj.times[-1] == pytest.approx(math.pi)
        assert traj.populations[-1, 1] == pytest.approx(1.0, abs=1e-9)

    def test_pi_pulse_returns_excited_atom_to_ground(self):
        atom, field = resonant_setup()
        start = Spinor2State.excited()
        np.testing.assert_array_equal(start.populations, [0.0, 1.0])
        traj = propagate2(start, rwa_hamiltonian(atom, field), math.pi, math.pi / 10)
        assert traj.populations[-1, 0] == pytest.approx(1.0, abs=1e-9)

    def test_detuned_peak_is_half(self):
        atom, field = resonant_setup(omega_rabi=1.0, delta=1.0)
        peak_time = math.pi / math.sqrt(2.0)
        traj = propagate2(Spinor2State.ground(), rwa_hamiltonian(atom, field), peak_time, peak_time / 50)
        assert traj.populations[-1, 1] == pytest.approx(0.5, abs=1e-9)
        assert np.max(traj.populations[:, 1]) <= 0.5 + 1e-12
        np.testing.assert_allclose(traj.populations[:, 1], rabi_upper_population(traj.times, 1.0, 1.0), atol=1e-9)

    def test_norm_over_ten_thousand_steps(self):
        atom, field = resonant_setup(omega_rabi=1.3, delta=0.4)
        traj = propagate2(Spinor2State([0.6, 0.8j]), rwa_hamiltonian(atom, field), 100.0, 0.01)
        assert len(traj) >= 10001
        assert traj.max_norm_drift < 1e-10

    def test_step_propagator_is_unitary(self):
        atom, field = resonant_setup(omega_rabi=0.7, delta=-0.3)
        assert is_unitary(step_propagator(rwa_hamiltonian(atom, field), 0.37))

    def test_nonpositive_dt_rejected(self):
        with pytest.raises(InputError):
            propagate2(Spinor2State.ground(), np.zeros((2, 2)), 1.0, 0.0)
        with pytest.raises(InputError):
            step_propagator(np.zeros((2, 2)), -0.1)

    def test_partial_final_step_lands_on_duration(self):
        times = sample_times(1.0, 0.3)
        np.testing.assert_allclose(times, [0.0, 0.3, 0.6, 0.9, 1.0], atol=1e-15)

    @settings(max_examples=50, deadline=None)
    @given(finite, finite, finite, finite)
    def test_evolution_is_linear(self, a_re, a_im, b_re, b_im):
        atom, field = resonant_setup(omega_rabi=0.9, delta=0.2)
        H = rwa_hamiltonian(atom, field)
        times = np.linspace(0.0, 3.0, 7)
        psi, phi = np.array([1.0, 0.0]), np.array([0.3, 0.4j])
        a, b = complex(a_re, a_im), complex(b_re, b_im)
        combined = evolve_amplitudes(H, a * psi + b * phi, times)
        separate = a * evolve_amplitudes(H, psi, times) + b * evolve_amplitudes(H, phi, times)
        np.testing.assert_allclose(combined, separate, atol=1e-12)

    def test_piecewise_matches_single_segment(self):
        atom, field = resonant_setup()
        H = rwa_hamiltonian(atom, field)
        whole = propagate2(Spinor2State.ground(), H, 2.0, 0.5)
        pieces = propagate_piecewise(Spinor2State.ground(), [(H, 1.0), (H, 1.0)], 0.5)
        np.testing.assert_allclose(pieces.times, whole.times, atol=1e-15)
        np.testing.assert_allclose(pieces.states, whole.states, atol=1e-12)


def test_population_inversion():
    assert population_inversion(TwoLevelAtom(mu=1.0, gamma=1.0, rho1=0.25, rho2=0.75)) == pytest.approx(0.5)


def test_fractional_populations_must_sum_to_one_or_less():
    with pytest.raises(DomainError):
        TwoLevelAtom(mu=1.0, gamma=1.0, rho1=0.8, rho2=0.8)
