from dataclasses import dataclass, field
from typing import Dict, Any, Tuple

import numpy as np

from core.errors import DomainError, InputError

_UNIT_TOL = 1e-12


def _real3(value, name: str) -> Tuple[float, float, float]:
    arr = np.asarray(value, dtype=float)
    if arr.shape != (3,) or not np.all(np.isfinite(arr)):
        raise InputError(f"{name} must be a finite real 3-vector")
    return tuple(float(x) for x in arr)


@dataclass(frozen=True)
class TwoLevelAtom:
    """Transition parameters of a single two-level atom"""
    mu: float
    gamma: float
    omega_a: float = 0.0
    rho1: float = 1.0
    rho2: float = 0.0
    xi: float = 0.0
    populations_are_fractions: bool = True

    def __post_init__(self):
        if self.gamma <= 0:
            raise DomainError(f"gamma must be positive, got {self.gamma}")
        if self.rho1 < 0 or self.rho2 < 0:
            raise DomainError("Level populations must be non-negative")
        if self.populations_are_fractions and self.rho1 + self.rho2 > 1 + _UNIT_TOL:
            raise DomainError("Fractional populations must satisfy rho1 + rho2 <= 1")

    @property
    def inversion(self) -> float:
        """rho2 - rho1, the population inversion"""
        return self.rho2 - self.rho1

    def to_dict(self) -> Dict[str, Any]:
        return {
            'mu': self.mu,
            'gamma': self.gamma,
            'omega_a': self.omega_a,
            'rho1': self.rho1,
            'rho2': self.rho2,
            'xi': self.xi,
        }


@dataclass(frozen=True)
class DriveField:
    """Classical monochromatic drive"""
    E0: float
    omega0: float = 0.0
    polarization: Tuple[float, float, float] = (0.0, 0.0, 1.0)
    kvec: Tuple[float, float, float] = (0.0, 0.0, 0.0)
    intensity: float = 0.0

    def __post_init__(self):
        if self.E0 < 0:
            raise DomainError("Field amplitude E0 must be non-negative")
        if self.intensity < 0:
            raise DomainError("Intensity I0 must be non-negative")
        polarization = _real3(self.polarization, "polarization")
        if abs(np.linalg.norm(polarization) - 1.0) > _UNIT_TOL:
            raise DomainError("polarization must be a unit vector")
        object.__setattr__(self, 'polarization', polarization)
        object.__setattr__(self, 'kvec', _real3(self.kvec, "kvec"))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'E0': self.E0,
            'omega0': self.omega0,
            'polarization': list(self.polarization),
            'kvec': list(self.kvec),
            'intensity': self.intensity,
        }


@dataclass(frozen=True)
class ValidityReport:
    """Outcome of the weak-field criterion mu E / (hbar Gamma) < 1"""
    ratio: float
    within_weak_field: bool

    def to_dict(self) -> Dict[str, Any]:
        return {'ratio': self.ratio, 'within_weak_field': self.within_weak_field}


@dataclass(frozen=True)
class DiracLikeParams:
    p: Tuple[float, float, float] = (0.0, 0.0, 0.0)
    omega: float = 0.0
    mu: float = 0.0
    Efield: Tuple[float, float, float] = (0.0, 0.0, 0.0)
    c: float = 1.0
    hbar: float = 1.0

    def __post_init__(self):
        if self.c <= 0:
            raise DomainError("c must be positive")
        if self.hbar <= 0:
            raise DomainError("hbar must be positive")
        object.__setattr__(self, 'p', _real3(self.p, "p"))
        object.__setattr__(self, 'Efield', _real3(self.Efield, "Efield"))

    def to_dict(self) -> Dict[str, Any]:
        return {
            'p': list(self.p),
            'omega': self.omega,
            'mu': self.mu,
            'Efield': list(self.Efield),
            'c': self.c,
            'hbar': self.hbar,
        }


@dataclass(frozen=True)
class ParityAuditReport:
    alpha_is_polar: Dict[str, bool]
    sigma_has_compensator: bool
    max_residual: float
    residuals: Dict[str, float] = field(default_factory=dict)
    coupling_parity: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        # alpha.E must be a scalar while no candidate makes sigma.E one
        return all(self.alpha_is_polar.values()) and not self.sigma_has_compensator

    def to_dict(self) -> Dict[str, Any]:
        return {
            'alpha_is_polar': dict(self.alpha_is_polar),
            'sigma_has_compensator': self.sigma_has_compensator,
            'max_residual': self.max_residual,
            'residuals': dict(self.residuals),
            'coupling_parity': dict(self.coupling_parity),
        }
