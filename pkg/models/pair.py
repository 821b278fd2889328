from dataclasses import dataclass, field
from typing import Dict, Any, Optional, Tuple

import numpy as np

from core.errors import DomainError, InputError
from models.atom import DriveField, TwoLevelAtom, ValidityReport

KVEC_REL_TOL = 1e-12


@dataclass(frozen=True)
class DipoleMoment:
    d: np.ndarray

    def __post_init__(self):
        d = np.array(self.d, dtype=np.complex128).reshape(-1)
        if d.shape != (3,) or not np.all(np.isfinite(d)):
            raise InputError("Dipole moment must be a finite 3-vector")
        d.setflags(write=False)
        object.__setattr__(self, 'd', d)


@dataclass(frozen=True)
class PairGeometry:
    """Separation r of the second atom from the first, plus the drive wavevector.

    ``k`` is the scalar wavenumber entering the retarded field; ``kvec`` is the
    drive direction used only in the cos(k.r) phase factor.
    """
    rvec: np.ndarray
    k: float
    kvec: np.ndarray

    def __post_init__(self):
        rvec = np.array(self.rvec, dtype=float).reshape(-1)
        kvec = np.array(self.kvec, dtype=float).reshape(-1)
        if rvec.shape != (3,) or kvec.shape != (3,):
            raise InputError("rvec and kvec must be real 3-vectors")
        if not (np.all(np.isfinite(rvec)) and np.all(np.isfinite(kvec)) and np.isfinite(self.k)):
            raise InputError("Geometry must be finite")
        if self.k < 0:
            raise InputError("Wavenumber k must be non-negative")
        knorm = float(np.linalg.norm(kvec))
        if abs(knorm - self.k) > KVEC_REL_TOL * max(1.0, self.k):
            raise InputError(f"|kvec| = {knorm} does not match k = {self.k}")
        rvec.setflags(write=False)
        kvec.setflags(write=False)
        object.__setattr__(self, 'rvec', rvec)
        object.__setattr__(self, 'kvec', kvec)
        object.__setattr__(self, 'k', float(self.k))

    @classmethod
    def from_vectors(cls, rvec, kvec) -> "PairGeometry":
        return cls(rvec=rvec, k=float(np.linalg.norm(np.asarray(kvec, dtype=float))), kvec=kvec)

    @classmethod
    def collinear(cls, r: float, k: float, direction=(0.0, 0.0, 1.0)) -> "PairGeometry":
        """Separation along ``direction`` with the drive propagating the same way."""
        unit = np.asarray(direction, dtype=float)
        unit = unit / np.linalg.norm(unit)
        return cls(rvec=r * unit, k=k, kvec=k * unit)

    @property
    def r(self) -> float:
        return float(np.linalg.norm(self.rvec))

    @property
    def unit(self) -> np.ndarray:
        r = self.r
        if r == 0:
            raise InputError("Direction undefined at zero separation")
        return self.rvec / r

    @property
    def kr(self) -> float:
        """Product of magnitudes k |r|."""
        return self.k * self.r

    @property
    def k_dot_r(self) -> float:
        """Vector product k.r used by the phase factor."""
        return float(np.dot(self.kvec, self.rvec))

    def to_dict(self) -> Dict[str, Any]:
        return {'rvec': self.rvec.tolist(), 'k': self.k, 'kvec': self.kvec.tolist()}


@dataclass(frozen=True)
class AverageEstimate:
    """Monte-Carlo mean with componentwise standard errors"""
    mean: complex
    stderr_re: float
    stderr_im: float
    n_samples: int
    seed: int
    algorithm: str = "PCG64"
    correlated: bool = True

    @property
    def stderr(self) -> float:
        return float(np.hypot(self.stderr_re, self.stderr_im))

    def deviation_in_sigmas(self, reference: complex) -> Tuple[float, float]:
        """|mean - reference| per component, in units of that component's stderr."""
        def sig(diff: float, err: float) -> float:
            if err == 0:
                return 0.0 if diff == 0 else float('inf')
            return abs(diff) / err
        return (
            sig(self.mean.real - reference.real, self.stderr_re),
            sig(self.mean.imag - reference.imag, self.stderr_im),
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'mean_re': self.mean.real,
            'mean_im': self.mean.imag,
            'stderr_re': self.stderr_re,
            'stderr_im': self.stderr_im,
            'n_samples': self.n_samples,
            'seed': self.seed,
            'algorithm': self.algorithm,
            'correlated': self.correlated,
        }


@dataclass(frozen=True)
class DrivenPairParams:
    mu: float
    I0: float
    beta_pop: float
    gamma1: float
    gamma2: float
    delta1: float = 0.0
    delta2: float = 0.0

    def __post_init__(self):
        if self.gamma1 <= 0 or self.gamma2 <= 0:
            raise DomainError("Damping constants gamma1, gamma2 must be positive")

    @classmethod
    def from_atoms(cls, first: TwoLevelAtom, second: TwoLevelAtom, field: DriveField) -> "DrivenPairParams":
        """Pair parameters for two atoms in one drive; the inversion is taken from the first atom."""
        return cls(
            mu=first.mu,
            I0=field.intensity,
            beta_pop=first.inversion,
            gamma1=first.gamma,
            gamma2=second.gamma,
            # Delta_i = omega0 - omega_i
            delta1=field.omega0 - first.omega_a,
            delta2=field.omega0 - second.omega_a,
        )

    def to_dict(self) -> Dict[str, Any]:
        return {
            'mu': self.mu,
            'I0': self.I0,
            'beta_pop': self.beta_pop,
            'gamma1': self.gamma1,
            'gamma2': self.gamma2,
            'delta1': self.delta1,
            'delta2': self.delta2,
        }


@dataclass(frozen=True)
class FrequencyCoefficients:
    a: float
    b: float

    @property
    def phase(self) -> float:
        """atan2(b, a), the angle with a = R cos(phase), b = R sin(phase)."""
        return float(np.arctan2(self.b, self.a))

    def to_dict(self) -> Dict[str, Any]:
        return {'a': self.a, 'b': self.b}


@dataclass(frozen=True)
class ExchangeReport:
    """Photon-exchange range versus wavelength"""
    k_medium: float
    wavelength: float
    mean_range: float
    k_required: float
    exchange_feasible: bool
    reference_threshold_per_cm: float = 100.0
    k_medium_per_cm: Optional[float] = None
    meets_reference_threshold: Optional[bool] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'k_medium': self.k_medium,
            'wavelength': self.wavelength,
            'mean_range': self.mean_range,
            'k_required': self.k_required,
            'exchange_feasible': self.exchange_feasible,
            'reference_threshold_per_cm': self.reference_threshold_per_cm,
            'k_medium_per_cm': self.k_medium_per_cm,
            'meets_reference_threshold': self.meets_reference_threshold,
        }


@dataclass(frozen=True)
class RegimeReport:
    weak_field: ValidityReport
    exchange: ExchangeReport
    intensity_at_r: float
    notes: Dict[str, str] = field(default_factory=dict)

    @property
    def exchange_feasible(self) -> bool:
        return self.exchange.exchange_feasible

    @property
    def k_required(self) -> float:
        return self.exchange.k_required

    def to_dict(self) -> Dict[str, Any]:
        return {
            'weak_field': self.weak_field.to_dict(),
            'exchange': self.exchange.to_dict(),
            'exchange_feasible': self.exchange_feasible,
            'k_required': self.k_required,
            'intensity_at_r': self.intensity_at_r,
            'notes': dict(self.notes),
        }
