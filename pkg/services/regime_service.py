import logging
import math
from typing import Any, Dict

from core import __version__
from core.driven import regime_report
from core.errors import NumericFailure
from models.atom import DriveField, TwoLevelAtom
from models.run import RunConfig

logger = logging.getLogger(__name__)


class RegimeService:
    """Weak-field, attenuation and photon-exchange feasibility for one parameter set"""

    def __init__(self, config: RunConfig):
        self.config = config
        self.params = config.params

    def run(self) -> Dict[str, Any]:
        p = self.params
        atom = TwoLevelAtom(mu=p['mu'], gamma=p['gamma'])
        field = DriveField(E0=p['E0'], intensity=p['intensity'])
        report = regime_report(
            atom,
            field,
            k_medium=p['k_medium'],
            wavelength=p['wavelength'],
            r=p['r'],
            hbar=p['hbar'],
            unit_in_cm=p['unit_in_cm'],
        )
        if not math.isfinite(report.intensity_at_r):
            raise NumericFailure(
                f"Intensity at r = {p['r']} is not finite (gain exponent {-p['k_medium'] * p['r']:.6g})"
            )
        logger.info(
            "Regime: weak field %s, exchange feasible %s",
            report.weak_field.within_weak_field, report.exchange_feasible,
        )
        return {'version': __version__, 'params': dict(p), 'report': report.to_dict()}
