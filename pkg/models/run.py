from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from core.errors import ConfigError, InputError


class Command(Enum):
    SWEEP = "sweep"
    DYNAMICS = "dynamics"
    AUDIT = "audit"
    REGIME = "regime"


class ModelKind(Enum):
    PAIR_RAW = "pair_raw"            # unaveraged pair energy
    PAIR_AVERAGED = "pair_averaged"  # orientation average with cos(k.r) phase
    DRIVEN = "driven"                # laser-driven potential law
    BLOCH2 = "bloch2"                # RWA two-component dynamics
    DIRAC4 = "dirac4"                # Dirac-like four-component dynamics

    @property
    def is_potential(self) -> bool:
        return self in (ModelKind.PAIR_RAW, ModelKind.PAIR_AVERAGED, ModelKind.DRIVEN)

    @property
    def is_dynamics(self) -> bool:
        return self in (ModelKind.BLOCH2, ModelKind.DIRAC4)


class Spacing(Enum):
    LINEAR = "linear"
    LOG = "log"


@dataclass
class GridSpec:
    r_min: float = 0.1
    r_max: float = 10.0
    n_points: int = 100
    spacing: Spacing = Spacing.LINEAR

    def validate(self):
        if self.r_min <= 0:
            raise ConfigError(f"must be positive, got {self.r_min} (grid may not reach r = 0)", "grid.r_min")
        if self.n_points < 2:
            raise ConfigError(f"must be at least 2, got {self.n_points}", "grid.n_points")
        if self.r_max <= self.r_min:
            raise ConfigError(f"must exceed r_min = {self.r_min}, got {self.r_max}", "grid.r_max")

    def points(self) -> np.ndarray:
        if self.spacing == Spacing.LOG:
            return np.geomspace(self.r_min, self.r_max, self.n_points)
        return np.linspace(self.r_min, self.r_max, self.n_points)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'r_min': self.r_min,
            'r_max': self.r_max,
            'n_points': self.n_points,
            'spacing': self.spacing.value,
        }


@dataclass
class TimeSpec:
    duration: float = 10.0
    dt: float = 0.01

    def validate(self):
        if self.dt <= 0:
            raise ConfigError(f"must be positive, got {self.dt}", "time.dt")
        if self.duration < 0:
            raise ConfigError(f"must be non-negative, got {self.duration}", "time.duration")

    def to_dict(self) -> Dict[str, Any]:
        return {'duration': self.duration, 'dt': self.dt}


@dataclass
class MonteCarloSpec:
    n_samples: int = 200_000
    seed: int = 12345
    correlated: bool = True

    def validate(self):
        if self.n_samples < 1000:
            raise ConfigError(f"must be at least 1000, got {self.n_samples}", "mc.n_samples")
        if self.seed < 0:
            raise ConfigError(f"must be non-negative, got {self.seed}", "mc.seed")

    def to_dict(self) -> Dict[str, Any]:
        return {'n_samples': self.n_samples, 'seed': self.seed, 'correlated': self.correlated}


@dataclass
class RunConfig:
    command: Command
    model: Optional[ModelKind] = None
    params: Dict[str, Any] = field(default_factory=dict)
    grid: GridSpec = field(default_factory=GridSpec)
    time: TimeSpec = field(default_factory=TimeSpec)
    mc: MonteCarloSpec = field(default_factory=MonteCarloSpec)
    output: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            'command': self.command.value,
            'model': self.model.value if self.model else None,
            'params': self.params,
            'grid': self.grid.to_dict(),
            'time': self.time.to_dict(),
            'mc': self.mc.to_dict(),
            'output': self.output,
        }


def format_number(value: float) -> str:
    """17 significant digits, enough to round-trip a double."""
    return f"{float(value):.16e}"


@dataclass
class CsvTable:
    header: List[str]
    rows: List[List[float]] = field(default_factory=list)
    comments: List[str] = field(default_factory=list)

    def add_row(self, values: Sequence[float]):
        if len(values) != len(self.header):
            raise InputError(f"Row has {len(values)} columns, header has {len(self.header)}")
        self.rows.append([float(v) for v in values])

    def column(self, name: str) -> np.ndarray:
        index = self.header.index(name)
        return np.array([row[index] for row in self.rows])

    def to_text(self) -> str:
        lines = [f"# {comment}" for comment in self.comments]
        lines.append(",".join(self.header))
        lines.extend(",".join(format_number(v) for v in row) for row in self.rows)
        return "\n".join(lines) + "\n"
