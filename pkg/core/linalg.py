"""Operator matrices and the small dense linear algebra the rest of the toolkit uses.

Only 2x2 (Pauli / two-level) and 4x4 (Dirac-like) operators occur, so every
helper here checks for those two sizes and rejects anything else.

Conventions
-----------
* Matrices are ``numpy.ndarray`` of dtype ``complex128``, row-major, dense.
* 3-vectors (fields, dipoles, wavevectors) are ``complex128`` arrays of shape (3,).
* Every constructor returns a fresh array, so callers may mutate results freely.
"""

import logging
from enum import Enum
from typing import Tuple, Union

import numpy as np
from scipy import linalg as sla

from core.errors import InputError

logger = logging.getLogger(__name__)

ALGEBRA_TOL = 1e-12
RECON_TOL = 1e-10

SUPPORTED_DIMENSIONS = (2, 4)


class Axis(Enum):
    X = "x"
    Y = "y"
    Z = "z"


AxisLike = Union[Axis, str]

_PAULI = {
    Axis.X: ((0, 1), (1, 0)),
    Axis.Y: ((0, -1j), (1j, 0)),
    Axis.Z: ((1, 0), (0, -1)),
}


def as_axis(axis: AxisLike) -> Axis:
    """Accept an ``Axis`` or one of 'x', 'y', 'z'."""
    if isinstance(axis, Axis):
        return axis
    try:
        return Axis(str(axis).lower())
    except ValueError:
        raise InputError(f"Unknown axis {axis!r}; expected one of x, y, z") from None


def as_matrix(M) -> np.ndarray:
    """Validate a square 2x2 or 4x4 operator and return it as complex128."""
    M = np.asarray(M, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] not in SUPPORTED_DIMENSIONS:
        raise InputError(f"Expected a 2x2 or 4x4 matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise InputError("Matrix has non-finite entries")
    return M


def as_vector3(v) -> np.ndarray:
    v = np.asarray(v, dtype=np.complex128)
    if v.shape != (3,):
        raise InputError(f"Expected a 3-vector, got shape {v.shape}")
    return v


def vector_norm_squared(v) -> float:
    """dot(v, conj(v)); real and non-negative by construction."""
    v = as_vector3(v)
    return float(np.real(np.vdot(v, v)))


def adjoint(M) -> np.ndarray:
    return np.conj(np.asarray(M, dtype=np.complex128)).T


def identity(n: int) -> np.ndarray:
    if n not in SUPPORTED_DIMENSIONS:
        raise InputError(f"Unsupported dimension {n}")
    return np.eye(n, dtype=np.complex128)


def anticommutator(A, B) -> np.ndarray:
    return A @ B + B @ A


def max_residual(A, B) -> float:
    """Largest elementwise |A - B|."""
    return float(np.max(np.abs(np.asarray(A) - np.asarray(B))))


def is_hermitian(M, tol: float = ALGEBRA_TOL) -> bool:
    M = np.asarray(M, dtype=np.complex128)
    return max_residual(M, adjoint(M)) < tol


def is_unitary(U, tol: float = ALGEBRA_TOL) -> bool:
    U = np.asarray(U, dtype=np.complex128)
    return max_residual(adjoint(U) @ U, np.eye(U.shape[0])) < tol


# ----------------------------------------------------------------------
# Operator constructors
# ----------------------------------------------------------------------
def make_pauli(axis: AxisLike) -> np.ndarray:
    """Pauli matrix for the given axis, exactly as printed."""
    return np.array(_PAULI[as_axis(axis)], dtype=np.complex128)


def make_alpha(axis: AxisLike) -> np.ndarray:
    """Dirac-like alpha component: block matrix [[0, sigma], [sigma, 0]]."""
    sigma = make_pauli(axis)
    zero = np.zeros((2, 2), dtype=np.complex128)
    return np.block([[zero, sigma], [sigma, zero]])


def make_alpha_vector() -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    return make_alpha(Axis.X), make_alpha(Axis.Y), make_alpha(Axis.Z)


def make_beta1() -> np.ndarray:
    """The singular diag(1, 0, -1, 0) used in place of the Dirac beta."""
    return np.diag([1.0, 0.0, -1.0, 0.0]).astype(np.complex128)


def make_dirac_beta() -> np.ndarray:
    """Standard Dirac parity operator diag(1, 1, -1, -1)."""
    return np.diag([1.0, 1.0, -1.0, -1.0]).astype(np.complex128)


def dot_alpha(vec) -> np.ndarray:
    """alpha . v for a real 3-vector v."""
    v = np.asarray(vec, dtype=float)
    if v.shape != (3,):
        raise InputError(f"Expected a real 3-vector, got shape {v.shape}")
    ax, ay, az = make_alpha_vector()
    return v[0] * ax + v[1] * ay + v[2] * az


# ----------------------------------------------------------------------
# Spectral helpers
# ----------------------------------------------------------------------
def hermitian_eigensystem(M) -> Tuple[np.ndarray, np.ndarray]:
    """Real eigenvalues (ascending) and a unitary eigenvector matrix (columns).

    Raises InputError when M is not Hermitian within ALGEBRA_TOL.
    """
    M = as_matrix(M)
    if not is_hermitian(M):
        raise InputError("Eigendecomposition requested for a non-Hermitian matrix")
    eigenvalues, eigenvectors = np.linalg.eigh(M)
    recon = eigenvectors @ np.diag(eigenvalues) @ adjoint(eigenvectors)
    if max_residual(recon, M) > RECON_TOL * max(1.0, float(np.max(np.abs(M)))):
        raise InputError("Eigendecomposition reconstruction residual above tolerance")
    return eigenvalues, eigenvectors


def is_normal(M, tol: float = RECON_TOL) -> bool:
    M = np.asarray(M, dtype=np.complex128)
    scale = max(1.0, float(np.max(np.abs(M))) ** 2)
    return max_residual(M @ adjoint(M), adjoint(M) @ M) < tol * scale


def matrix_exponential(M) -> np.ndarray:
    """exp(M) for a 2x2 or 4x4 matrix.

    Normal matrices go through a complex Schur form, which is diagonal with a
    unitary basis for them; anything else falls back to scipy's
    scaling-and-squaring ``expm``.
    """
    M = as_matrix(M)
    if is_normal(M):
        T, Z = sla.schur(M, output="complex")
        off_diagonal = T - np.diag(np.diag(T))
        if np.max(np.abs(off_diagonal), initial=0.0) < RECON_TOL * max(1.0, float(np.max(np.abs(T)))):
            return Z @ np.diag(np.exp(np.diag(T))) @ adjoint(Z)
    logger.debug("Non-normal matrix, using scaling-and-squaring expm")
    return sla.expm(M)


def unitary_propagator(H, t: float, hbar: float = 1.0) -> np.ndarray:
    """exp(-i H t / hbar) for Hermitian H, built from its eigensystem."""
    if hbar <= 0:
        raise InputError("hbar must be positive")
    eigenvalues, eigenvectors = hermitian_eigensystem(H)
    phases = np.exp(-1j * eigenvalues * t / hbar)
    return eigenvectors @ np.diag(phases) @ adjoint(eigenvectors)
