from dataclasses import dataclass
from typing import Dict, Any, ClassVar

import numpy as np

from core.errors import InputError

NORM_TOL = 1e-10


@dataclass(frozen=True)
class SpinorState:
    """Unit-norm complex amplitude vector of fixed dimension"""
    amplitudes: np.ndarray
    dimension: ClassVar[int] = 0

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.shape != (self.dimension,):
            raise InputError(f"{type(self).__name__} needs {self.dimension} amplitudes, got {amps.size}")
        if not np.all(np.isfinite(amps)):
            raise InputError("State amplitudes must be finite")
        norm = np.linalg.norm(amps)
        if norm == 0:
            raise InputError("State vector has zero norm")
        amps = amps / norm
        amps.setflags(write=False)
        object.__setattr__(self, 'amplitudes', amps)

    @classmethod
    def basis(cls, index: int) -> "SpinorState":
        amps = np.zeros(cls.dimension, dtype=np.complex128)
        amps[index] = 1.0
        return cls(amps)

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    @property
    def populations(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def to_dict(self) -> Dict[str, Any]:
        return {
            'amplitudes': [[float(a.real), float(a.imag)] for a in self.amplitudes],
        }


@dataclass(frozen=True)
class Spinor2State(SpinorState):
    """Two-component state, ground level first"""
    dimension: ClassVar[int] = 2

    @classmethod
    def ground(cls) -> "Spinor2State":
        return cls.basis(0)

    @classmethod
    def excited(cls) -> "Spinor2State":
        return cls.basis(1)


@dataclass(frozen=True)
class Spinor4State(SpinorState):
    dimension: ClassVar[int] = 4


@dataclass(frozen=True)
class Trajectory:
    """Sampled time evolution: one row per sample time"""
    times: np.ndarray
    states: np.ndarray

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        states = np.asarray(self.states, dtype=np.complex128)
        if states.ndim != 2 or states.shape[0] != times.shape[0]:
            raise InputError("Trajectory needs one state row per sample time")
        times.setflags(write=False)
        states.setflags(write=False)
        object.__setattr__(self, 'times', times)
        object.__setattr__(self, 'states', states)

    @property
    def populations(self) -> np.ndarray:
        return np.abs(self.states) ** 2

    @property
    def norms(self) -> np.ndarray:
        return np.sqrt(np.sum(self.populations, axis=1))

    @property
    def max_norm_drift(self) -> float:
        return float(np.max(np.abs(self.norms - 1.0)))

    def __len__(self) -> int:
        return int(self.times.shape[0])


@dataclass(frozen=True)
class PlaneWaveMode:
    """One eigenmode (energy, amplitude) of the Dirac-like Hamiltonian"""
    energy: float
    amplitude: Spinor4State

    def to_dict(self) -> Dict[str, Any]:
        return {'energy': self.energy, **self.amplitude.to_dict()}
