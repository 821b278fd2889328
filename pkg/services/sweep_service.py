"""Potential curves over an r grid for the pair and driven models."""

import json
import logging
from typing import Callable, List

import numpy as np

from core import __version__
from core.dipole import pair_energy, phased_average
from core.driven import driven_potential, exponent_argument, frequency_coefficients
from core.errors import InputError, NumericFailure
from models.pair import DrivenPairParams, PairGeometry
from models.run import CsvTable, ModelKind, RunConfig

logger = logging.getLogger(__name__)


def header_comment(config: RunConfig) -> str:
    """One-line provenance record: model, full parameter set and toolkit version."""
    return " ".join([
        f"model={config.model.value if config.model else config.command.value}",
        f"params={json.dumps(config.params, sort_keys=True)}",
        f"version={__version__}",
    ])


class SweepService:
    """Evaluates one potential model at every grid radius"""

    def __init__(self, config: RunConfig):
        if config.model is None or not config.model.is_potential:
            raise InputError("Sweep requires a potential model")
        self.config = config
        self.params = config.params
        direction = np.asarray(self.params['direction'], dtype=float)
        norm = np.linalg.norm(direction)
        if norm == 0:
            raise InputError("params.direction must be non-zero")
        self.direction = direction / norm
        self.kvec = np.asarray(self.params['kvec'], dtype=float)

    def geometry(self, r: float) -> PairGeometry:
        return PairGeometry.from_vectors(r * self.direction, self.kvec)

    def run(self) -> CsvTable:
        model = self.config.model
        radii = self.config.grid.points()
        logger.info("Sweeping %s over %d radii in [%g, %g]", model.value, len(radii), radii[0], radii[-1])

        header = ['r', 'U_re', 'U_im']
        if model == ModelKind.DRIVEN:
            header += ['a', 'b', 'exponent_arg']
        table = CsvTable(header=header, comments=[header_comment(self.config)])

        row_builder = self._row_builder(model)
        for r in radii:
            table.add_row(row_builder(float(r)))

        potentials = np.concatenate([table.column('U_re'), table.column('U_im')])
        if not np.all(np.isfinite(potentials)):
            raise NumericFailure(f"Non-finite potential in {model.value} sweep")
        return table

    def _row_builder(self, model: ModelKind) -> Callable[[float], List[float]]:
        if model == ModelKind.PAIR_RAW:
            d1, d2 = self.params['d1'], self.params['d2']

            def raw_row(r: float) -> List[float]:
                U = pair_energy(d1, d2, self.geometry(r))
                return [r, U.real, U.imag]
            return raw_row

        if model == ModelKind.PAIR_AVERAGED:
            dmag = self.params['dmag']

            def averaged_row(r: float) -> List[float]:
                return [r, phased_average(dmag, self.geometry(r)), 0.0]
            return averaged_row

        pair = DrivenPairParams(
            mu=self.params['mu'],
            I0=self.params['I0'],
            beta_pop=self.params['beta_pop'],
            gamma1=self.params['gamma1'],
            gamma2=self.params['gamma2'],
            delta1=self.params['delta1'],
            delta2=self.params['delta2'],
        )
        coeffs = frequency_coefficients(pair)

        def driven_row(r: float) -> List[float]:
            geom = self.geometry(r)
            U = driven_potential(pair, geom)
            return [r, U, 0.0, coeffs.a, coeffs.b, exponent_argument(coeffs, geom.kr)]
        return driven_row
