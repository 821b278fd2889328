"""Time evolution runs for the two-component RWA and four-component Dirac-like models."""

import logging

import numpy as np

from core.dirac_like import diraclike_hamiltonian, propagate4
from core.errors import InputError, NumericFailure
from core.two_level import propagate2, rwa_hamiltonian
from models.atom import DiracLikeParams, DriveField, TwoLevelAtom
from models.run import CsvTable, ModelKind, RunConfig
from models.states import NORM_TOL, Spinor2State, Spinor4State, Trajectory
from services.sweep_service import header_comment

logger = logging.getLogger(__name__)


class DynamicsService:
    def __init__(self, config: RunConfig):
        if config.model is None or not config.model.is_dynamics:
            raise InputError("Dynamics requires model bloch2 or dirac4")
        self.config = config
        self.params = config.params

    def _initial_amplitudes(self) -> np.ndarray:
        return np.array([complex(re, im) for re, im in self.params['initial']])

    def trajectory(self) -> Trajectory:
        p, time = self.params, self.config.time
        if self.config.model == ModelKind.BLOCH2:
            atom = TwoLevelAtom(mu=p['mu'], gamma=p['gamma'], omega_a=p['omega_a'])
            field = DriveField(E0=p['E0'], omega0=p['omega0'])
            H = rwa_hamiltonian(atom, field, p['hbar'])
            state = Spinor2State(self._initial_amplitudes())
            return propagate2(state, H, time.duration, time.dt, p['hbar'])

        params = DiracLikeParams(
            p=p['p'], omega=p['omega'], mu=p['mu'], Efield=p['Efield'], c=p['c'], hbar=p['hbar']
        )
        state = Spinor4State(self._initial_amplitudes())
        return propagate4(state, diraclike_hamiltonian(params), time.duration, time.dt, p['hbar'])

    def run(self) -> CsvTable:
        trajectory = self.trajectory()
        n_components = trajectory.states.shape[1]
        logger.info(
            "Propagated %s: %d samples, max norm drift %.3e",
            self.config.model.value, len(trajectory), trajectory.max_norm_drift,
        )
        if trajectory.max_norm_drift > NORM_TOL:
            raise NumericFailure(f"Norm drift {trajectory.max_norm_drift:.3e} exceeds {NORM_TOL}")

        header = ['t'] + [f"P{i + 1}" for i in range(n_components)] + ['norm']
        table = CsvTable(header=header, comments=[header_comment(self.config)])
        populations, norms = trajectory.populations, trajectory.norms
        for i, t in enumerate(trajectory.times):
            table.add_row([t, *populations[i], norms[i]])
        return table
