"""Exact-exponential time stepping for constant (or piecewise-constant) Hamiltonians."""

from typing import Iterable, Tuple, Type

import numpy as np

from core.errors import InputError
from core.linalg import adjoint, hermitian_eigensystem
from models.states import SpinorState, Trajectory


def sample_times(duration: float, dt: float) -> np.ndarray:
    """0, dt, 2dt, ... up to duration; a shorter final step lands exactly on duration."""
    if dt <= 0:
        raise InputError(f"dt must be positive, got {dt}")
    if duration < 0:
        raise InputError(f"duration must be non-negative, got {duration}")
    n_steps = int(np.floor(duration / dt + 1e-9))
    times = dt * np.arange(n_steps + 1, dtype=float)
    if duration - times[-1] > 1e-12 * max(1.0, duration):
        times = np.append(times, duration)
    return times


def evolve_amplitudes(H, psi0: np.ndarray, times: np.ndarray, hbar: float = 1.0) -> np.ndarray:
    """Rows exp(-i H t / hbar) psi0 for every t, with no renormalization."""
    if hbar <= 0:
        raise InputError("hbar must be positive")
    eigenvalues, eigenvectors = hermitian_eigensystem(H)
    coefficients = adjoint(eigenvectors) @ np.asarray(psi0, dtype=np.complex128)
    phases = np.exp(-1j * np.outer(eigenvalues, times) / hbar)
    return (eigenvectors @ (coefficients[:, None] * phases)).T


def propagate(state: SpinorState, H, duration: float, dt: float, hbar: float = 1.0) -> Trajectory:
    H = np.asarray(H, dtype=np.complex128)
    if H.shape != (state.dimension, state.dimension):
        raise InputError(f"Hamiltonian shape {H.shape} does not match a {state.dimension}-component state")
    times = sample_times(duration, dt)
    return Trajectory(times=times, states=evolve_amplitudes(H, state.amplitudes, times, hbar))


def propagate_piecewise(
    state: SpinorState,
    segments: Iterable[Tuple[np.ndarray, float]],
    dt: float,
    hbar: float = 1.0,
) -> Trajectory:
    """Chain constant-Hamiltonian segments; each segment starts where the last ended."""
    state_cls: Type[SpinorState] = type(state)
    all_times, all_states = [np.array([0.0])], [state.amplitudes[None, :]]
    t0, current = 0.0, state
    for H, duration in segments:
        piece = propagate(current, H, duration, dt, hbar)
        all_times.append(t0 + piece.times[1:])
        all_states.append(piece.states[1:])
        t0 += duration
        current = state_cls(piece.states[-1])
    return Trajectory(times=np.concatenate(all_times), states=np.concatenate(all_states))
