"""Classical driven dipoles: induced moment, retarded field, pair energy and its
orientation average.

Formulas are Gaussian-style as printed (no vacuum permittivity factors); the
module performs no unit conversion.
"""

import logging
from typing import Sequence, Tuple

import numpy as np

from core.errors import InputError, SingularityError
from core.linalg import as_vector3
from models.pair import AverageEstimate, DipoleMoment, PairGeometry

logger = logging.getLogger(__name__)

MIN_MC_SAMPLES = 1000
RNG_ALGORITHM = "PCG64"


def _moment(d) -> np.ndarray:
    if isinstance(d, DipoleMoment):
        return d.d
    return as_vector3(d)


def _radial_terms(k: float, r: float) -> Tuple[complex, complex]:
    """(k^2/r + ik/r^2 - 1/r^3, k^2/r + 3ik/r^2 - 3/r^3)"""
    transverse = k ** 2 / r + 1j * k / r ** 2 - 1.0 / r ** 3
    longitudinal = k ** 2 / r + 3j * k / r ** 2 - 3.0 / r ** 3
    return transverse, longitudinal


def induced_dipole(xi: float, E) -> np.ndarray:
    return xi * as_vector3(E)


def dipole_field(d, geom: PairGeometry) -> np.ndarray:
    """Retarded field of dipole d at the position of the second atom."""
    r = geom.r
    if r == 0:
        raise SingularityError("Dipole field is singular at r = 0")
    dvec = _moment(d)
    e_r = geom.unit
    transverse, longitudinal = _radial_terms(geom.k, r)
    field = dvec * transverse - e_r * np.dot(e_r, dvec) * longitudinal
    return field * np.exp(1j * geom.k * r)


def pair_energy(d1, d2, geom: PairGeometry) -> complex:
    """U' = -d2 . E_d(d1), written out in closed form."""
    r = geom.r
    if r == 0:
        raise SingularityError("Pair energy is singular at r = 0")
    v1, v2 = _moment(d1), _moment(d2)
    e_r = geom.unit
    transverse, longitudinal = _radial_terms(geom.k, r)
    bracket = np.dot(v2, v1) * transverse - np.dot(e_r, v2) * np.dot(e_r, v1) * longitudinal
    return complex(-bracket * np.exp(1j * geom.k * r))


def averaged_pair_energy(dmag: float, r: float, k: float, correlated: bool = True) -> complex:
    """Orientation average of the pair energy.

    Correlated (common direction): <(e_r . d)^2> = d^2/3 cancels the r^-2 and
    r^-3 terms, leaving -(2 d^2 k^2 / 3r) e^{ikr}. Independent directions
    average to exactly zero.
    """
    if r <= 0:
        raise InputError(f"r must be positive, got {r}")
    if not correlated:
        return 0j
    return complex(-(2.0 * dmag ** 2 * k ** 2) / (3.0 * r) * np.exp(1j * k * r))


def averaged_pair_energy_printed(dmag: float, r: float, k: float) -> float:
    """Phase-stripped form -(2 d^2 k^2) / (3r)."""
    if r <= 0:
        raise InputError(f"r must be positive, got {r}")
    return -(2.0 * dmag ** 2 * k ** 2) / (3.0 * r)


def phased_average(dmag: float, geom: PairGeometry) -> float:
    r = geom.r
    if r == 0:
        raise InputError("Phased average undefined at r = 0")
    return averaged_pair_energy_printed(dmag, r, geom.k) * float(np.cos(geom.k_dot_r))


def sample_unit_vectors(n: int, rng: np.random.Generator) -> np.ndarray:
    """Area-uniform directions: cos(theta) uniform on [-1, 1], phi uniform on [0, 2 pi)."""
    cos_theta = rng.uniform(-1.0, 1.0, size=n)
    phi = rng.uniform(0.0, 2.0 * np.pi, size=n)
    sin_theta = np.sqrt(1.0 - cos_theta ** 2)
    return np.column_stack((sin_theta * np.cos(phi), sin_theta * np.sin(phi), cos_theta))


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def mc_orientation_average(
    dmag: float,
    geom: PairGeometry,
    n_samples: int,
    seed: int,
    correlated: bool = True,
) -> AverageEstimate:
    """Brute-force average of the pair energy over random dipole orientations.

    Sequential and vectorized, so a fixed seed reproduces the estimate bit for bit.
    """
    if n_samples < MIN_MC_SAMPLES:
        raise InputError(f"n_samples must be at least {MIN_MC_SAMPLES}, got {n_samples}")
    r = geom.r
    if r == 0:
        raise SingularityError("Pair energy is singular at r = 0")

    rng = make_rng(seed)
    u1 = sample_unit_vectors(n_samples, rng)
    u2 = u1 if correlated else sample_unit_vectors(n_samples, rng)

    e_r = geom.unit
    transverse, longitudinal = _radial_terms(geom.k, r)
    d_dot_d2 = dmag ** 2 * np.einsum("ij,ij->i", u1, u2)
    proj = dmag ** 2 * (u1 @ e_r) * (u2 @ e_r)
    values = -(d_dot_d2 * transverse - proj * longitudinal) * np.exp(1j * geom.k * r)

    estimate = AverageEstimate(
        mean=complex(np.mean(values)),
        stderr_re=float(np.std(values.real, ddof=1) / np.sqrt(n_samples)),
        stderr_im=float(np.std(values.imag, ddof=1) / np.sqrt(n_samples)),
        n_samples=int(n_samples),
        seed=int(seed),
        algorithm=RNG_ALGORITHM,
        correlated=correlated,
    )
    logger.debug("MC orientation average at r=%g: %s", r, estimate.to_dict())
    return estimate


def fit_radial_coefficients(
    estimates: Sequence[AverageEstimate],
    radii: Sequence[float],
    k: float,
) -> Tuple[np.ndarray, np.ndarray]:
    """Solve mean_j e^{-ikr_j} = c1/r_j + c2/r_j^2 + c3/r_j^3 at three radii.

    Returns (coefficients, sigma). sigma bounds the error of both the real and
    imaginary part of each coefficient, propagated from the per-radius standard
    errors assuming independent estimates.
    """
    if len(estimates) != 3 or len(radii) != 3:
        raise InputError("Exactly three radii are required for the 1/r, 1/r^2, 1/r^3 fit")
    radii = np.asarray(radii, dtype=float)
    if np.any(radii <= 0) or len(set(radii.tolist())) != 3:
        raise InputError("Radii must be positive and distinct")
    basis = np.column_stack((1.0 / radii, 1.0 / radii ** 2, 1.0 / radii ** 3))
    rhs = np.array([e.mean for e in estimates]) * np.exp(-1j * k * radii)
    inverse = np.linalg.inv(basis)
    coefficients = inverse @ rhs

    # the e^{-ikr} rotation mixes real and imaginary errors; |dz| bounds both
    sigma_rot = np.array([e.stderr for e in estimates])
    sigma = np.sqrt((inverse ** 2) @ sigma_rot ** 2)
    return coefficients, sigma


def radiation_term(d, geom: PairGeometry) -> np.ndarray:
    """Far-zone part d k^2 e^{ikr} / r of the transverse field (no longitudinal piece)."""
    r = geom.r
    if r == 0:
        raise SingularityError("Radiation term is singular at r = 0")
    dvec = _moment(d)
    e_r = geom.unit
    transverse_d = dvec - e_r * np.dot(e_r, dvec)
    return transverse_d * geom.k ** 2 / r * np.exp(1j * geom.k * r)
