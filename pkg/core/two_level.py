"""Standard semiclassical two-level atom in the rotating frame.

The detuning convention is Delta = omega0 - omega_a everywhere in the toolkit,
and the drive couples through sigma_x (linear polarization along the dipole).
"""

import logging

import numpy as np

from core.errors import DomainError, InputError
from core.linalg import make_pauli, unitary_propagator
from core.propagation import propagate
from models.atom import DriveField, TwoLevelAtom, ValidityReport
from models.states import Spinor2State, Trajectory

logger = logging.getLogger(__name__)


def check_weak_field(atom: TwoLevelAtom, field: DriveField, hbar: float = 1.0) -> ValidityReport:
    """Evaluate mu E0 / (hbar Gamma); within the weak-field regime only if strictly < 1."""
    if hbar <= 0:
        raise DomainError("hbar must be positive")
    ratio = atom.mu * field.E0 / (hbar * atom.gamma)
    report = ValidityReport(ratio=float(ratio), within_weak_field=bool(ratio < 1.0))
    if not report.within_weak_field:
        logger.debug("Weak-field criterion violated: ratio %.6g >= 1", ratio)
    return report


def detuning(atom: TwoLevelAtom, field: DriveField) -> float:
    return field.omega0 - atom.omega_a


def rabi_frequency(atom: TwoLevelAtom, field: DriveField, hbar: float = 1.0) -> float:
    if hbar <= 0:
        raise DomainError("hbar must be positive")
    return atom.mu * field.E0 / hbar


def rwa_hamiltonian(atom: TwoLevelAtom, field: DriveField, hbar: float = 1.0) -> np.ndarray:
    """H = -(hbar Delta / 2) sigma_z - (hbar Omega / 2) sigma_x."""
    delta = detuning(atom, field)
    omega_rabi = rabi_frequency(atom, field, hbar)
    return -(hbar * delta / 2.0) * make_pauli("z") - (hbar * omega_rabi / 2.0) * make_pauli("x")


def dipole_coupling(mu: float, Evec) -> np.ndarray:
    """Pauli-form perturbation V = -mu (sigma . E) for a real field vector."""
    E = np.asarray(Evec, dtype=float)
    if E.shape != (3,):
        raise InputError("Field must be a real 3-vector")
    return -mu * (E[0] * make_pauli("x") + E[1] * make_pauli("y") + E[2] * make_pauli("z"))


def propagate2(
    state: Spinor2State,
    H,
    duration: float,
    dt: float,
    hbar: float = 1.0,
) -> Trajectory:
    return propagate(state, H, duration, dt, hbar)


def step_propagator(H, dt: float, hbar: float = 1.0) -> np.ndarray:
    if dt <= 0:
        raise InputError(f"dt must be positive, got {dt}")
    return unitary_propagator(H, dt, hbar)


def rabi_upper_population(t, omega_rabi: float, delta: float = 0.0) -> np.ndarray:
    """Closed-form P2(t) from the ground state: (Omega^2/W^2) sin^2(W t / 2), W^2 = Omega^2 + Delta^2."""
    w = np.hypot(omega_rabi, delta)
    if w == 0:
        return np.zeros_like(np.asarray(t, dtype=float))
    return (omega_rabi / w) ** 2 * np.sin(w * np.asarray(t, dtype=float) / 2.0) ** 2


def population_inversion(atom: TwoLevelAtom) -> float:
    return atom.inversion
