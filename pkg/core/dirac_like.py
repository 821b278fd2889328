"""Four-component Dirac-like dynamics for a two-level atom in a static field.

The equation of motion is taken as

    i hbar dPsi/dt = [ c (alpha . p) - mu (alpha . E) + beta1 hbar omega ] Psi

with the singular beta1 = diag(1, 0, -1, 0) used verbatim. Components 2 and 4
carry no physical label and are reported as raw populations.
"""

import logging
from typing import Dict, List, Sequence

import numpy as np

from core.errors import InputError
from core.linalg import (
    ALGEBRA_TOL,
    Axis,
    adjoint,
    dot_alpha,
    hermitian_eigensystem,
    identity,
    make_alpha,
    make_beta1,
    make_dirac_beta,
    make_pauli,
    max_residual,
)
from core.propagation import propagate
from models.atom import DiracLikeParams, ParityAuditReport
from models.states import PlaneWaveMode, Spinor4State, Trajectory

logger = logging.getLogger(__name__)

# components (1, 3) in the one-based labelling of the printed spinor
EMBEDDED_COMPONENTS = (0, 2)


def diraclike_hamiltonian(params: DiracLikeParams) -> np.ndarray:
    H = (
        params.c * dot_alpha(params.p)
        - params.mu * dot_alpha(params.Efield)
        + params.hbar * params.omega * make_beta1()
    )
    # numerically Hermitian already; symmetrize away any rounding asymmetry
    return 0.5 * (H + adjoint(H))


def propagate4(
    state: Spinor4State,
    H,
    duration: float,
    dt: float,
    hbar: float = 1.0,
) -> Trajectory:
    return propagate(state, H, duration, dt, hbar)


def plane_wave_modes(params: DiracLikeParams) -> List[PlaneWaveMode]:
    """Eigenmodes of the Hamiltonian with the momentum operator replaced by the number p."""
    H = diraclike_hamiltonian(params)
    energies, vectors = hermitian_eigensystem(H)
    modes = []
    for energy, column in zip(energies, vectors.T):
        residual = float(np.linalg.norm(H @ column - energy * column))
        if residual >= 1e-10:
            raise InputError(f"Eigenmode residual {residual:.3e} above tolerance")
        modes.append(PlaneWaveMode(energy=float(energy), amplitude=Spinor4State(column)))
    return modes


def plane_wave_solution(
    modes: Sequence[PlaneWaveMode],
    coefficients: Sequence[complex],
    t: float,
    rvec,
    params: DiracLikeParams,
) -> np.ndarray:
    """Psi(t, r) = sum_k c_k u_k exp(-i eps_k t / hbar) exp(+i p.r / hbar)."""
    if len(coefficients) != len(modes):
        raise InputError("One coefficient per mode is required")
    r = np.asarray(rvec, dtype=float)
    spatial = np.exp(1j * float(np.dot(params.p, r)) / params.hbar)
    psi = np.zeros(4, dtype=np.complex128)
    for coefficient, mode in zip(coefficients, modes):
        psi += coefficient * mode.amplitude.amplitudes * np.exp(-1j * mode.energy * t / params.hbar)
    return psi * spatial


def embed_two_level(H) -> np.ndarray:
    """2x2 block of a Dirac-like Hamiltonian on components (1, 3)."""
    H = np.asarray(H, dtype=np.complex128)
    if H.shape != (4, 4):
        raise InputError("Expected a 4x4 Hamiltonian")
    idx = np.array(EMBEDDED_COMPONENTS)
    return H[np.ix_(idx, idx)]


def parity_audit() -> ParityAuditReport:
    """Check by explicit products how each coupling behaves under spatial inversion.

    E and p are polar, so a coupling built from them is a true scalar only if the
    matrix vector also flips sign under the parity representation. The Dirac
    beta does that for alpha. On the two-level space the parity representations
    compatible with sigma as an axial vector are +-I, which leave sigma unchanged.
    """
    beta = make_dirac_beta()
    beta_inv = np.linalg.inv(beta)
    residuals: Dict[str, float] = {}
    alpha_is_polar: Dict[str, bool] = {}

    for axis in Axis:
        alpha = make_alpha(axis)
        flip_residual = max_residual(beta @ alpha @ beta_inv, -alpha)
        residuals[f"beta_alpha_{axis.value}_beta"] = flip_residual
        alpha_is_polar[axis.value] = flip_residual < ALGEBRA_TOL

    candidates = {"+I": identity(2), "-I": -identity(2)}
    sigma_has_compensator = False
    for label, P in candidates.items():
        P_inv = np.linalg.inv(P)
        flips_all = True
        for axis in Axis:
            sigma = make_pauli(axis)
            transformed = P @ sigma @ P_inv
            residuals[f"P{label}_sigma_{axis.value}_unchanged"] = max_residual(transformed, sigma)
            if max_residual(transformed, -sigma) >= ALGEBRA_TOL:
                flips_all = False
        sigma_has_compensator = sigma_has_compensator or flips_all

    # E polar, B axial; the operator vector contributes its own parity sign
    alpha_sign = -1 if all(alpha_is_polar.values()) else +1
    sigma_sign = -1 if sigma_has_compensator else +1
    coupling_parity = {
        "alpha.E": _character(alpha_sign * -1),
        "sigma.E": _character(sigma_sign * -1),
        "sigma.B": _character(sigma_sign * +1),
    }

    report = ParityAuditReport(
        alpha_is_polar=alpha_is_polar,
        sigma_has_compensator=sigma_has_compensator,
        max_residual=max(residuals.values()),
        residuals=residuals,
        coupling_parity=coupling_parity,
    )
    logger.debug("Parity audit: %s", report.to_dict())
    return report


def _character(sign: int) -> str:
    return "scalar" if sign > 0 else "pseudoscalar"
