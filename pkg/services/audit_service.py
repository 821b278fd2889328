"""Cross-checks of the toolkit against its own oracles.

Each check returns an ``AuditCheck``; the report text is a pure function of the
configuration, so a fixed seed gives an identical report.
"""

import logging
import math
from dataclasses import dataclass
from typing import List

import numpy as np

from core import __version__
from core import dirac_like, linalg
from core.dipole import averaged_pair_energy, make_rng, mc_orientation_average
from core.driven import driven_potential, driven_potential_naive, frequency_coefficients
from models.pair import DrivenPairParams, PairGeometry
from models.run import RunConfig

logger = logging.getLogger(__name__)

AGREEMENT_TOL = 1e-10
# keep sampled points clear of both tangent poles
POLE_MARGIN = 0.05


@dataclass(frozen=True)
class AuditCheck:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


@dataclass(frozen=True)
class AuditResult:
    checks: List[AuditCheck]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def report(self) -> str:
        lines = [f"audit report (toolkit {__version__})"]
        lines += [check.line() for check in self.checks]
        n_passed = sum(check.passed for check in self.checks)
        lines.append(f"summary: {n_passed}/{len(self.checks)} checks passed")
        return "\n".join(lines) + "\n"


class AuditService:
    def __init__(self, config: RunConfig):
        self.config = config
        self.params = config.params

    def run(self) -> AuditResult:
        checks = [
            self.check_operator_algebra(),
            self.check_parity(),
            self.check_orientation_average(),
            self.check_driven_agreement(),
        ]
        result = AuditResult(checks=checks)
        for check in checks:
            log = logger.info if check.passed else logger.error
            log("%s", check.line())
        return result

    def check_operator_algebra(self) -> AuditCheck:
        residual = 0.0
        axes = list(linalg.Axis)
        eye2, eye4 = linalg.identity(2), linalg.identity(4)
        for i, a in enumerate(axes):
            for j, b in enumerate(axes):
                expected = eye2 if i == j else np.zeros((2, 2), dtype=complex)
                for c_index, c in enumerate(axes):
                    epsilon = _levi_civita(i, j, c_index)
                    if epsilon:
                        expected = expected + 1j * epsilon * linalg.make_pauli(c)
                residual = max(residual, linalg.max_residual(linalg.make_pauli(a) @ linalg.make_pauli(b), expected))
                clifford = linalg.anticommutator(dirac_like.make_alpha(a), dirac_like.make_alpha(b))
                residual = max(residual, linalg.max_residual(clifford, 2 * eye4 if i == j else 0 * eye4))
        beta1 = linalg.make_beta1()
        residual = max(residual, linalg.max_residual(beta1 @ beta1, np.diag([1, 0, 1, 0])))
        residual = max(residual, abs(np.linalg.det(beta1)))
        return AuditCheck(
            name="operator algebra",
            passed=residual < 1e-14,
            detail=f"Pauli products, alpha anticommutators, beta1^2, det(beta1): max residual {residual:.3e}",
        )

    def check_parity(self) -> AuditCheck:
        report = dirac_like.parity_audit()
        polar = ",".join(axis for axis, ok in report.alpha_is_polar.items() if ok) or "none"
        couplings = " ".join(f"{name}={kind}" for name, kind in report.coupling_parity.items())
        return AuditCheck(
            name="parity",
            passed=report.passed,
            detail=(
                f"alpha polar on [{polar}], sigma compensator={str(report.sigma_has_compensator).lower()}, "
                f"{couplings}, max residual {report.max_residual:.3e}"
            ),
        )

    def check_orientation_average(self) -> AuditCheck:
        dmag, r, k = self.params['dmag'], self.params['r'], self.params['k']
        mc = self.config.mc
        geom = PairGeometry.collinear(r, k)
        estimate = mc_orientation_average(dmag, geom, mc.n_samples, mc.seed, correlated=mc.correlated)
        expected = averaged_pair_energy(dmag, r, k, correlated=mc.correlated)
        sig_re, sig_im = estimate.deviation_in_sigmas(expected)
        limit = self.params['mc_sigmas']
        return AuditCheck(
            name="orientation average",
            passed=sig_re <= limit and sig_im <= limit,
            detail=(
                f"mean={estimate.mean.real:.9e}{estimate.mean.imag:+.9e}j "
                f"closed form={expected.real:.9e}{expected.imag:+.9e}j "
                f"deviation=({sig_re:.2f}, {sig_im:.2f}) sigma, limit {limit:g} "
                f"(n={estimate.n_samples}, seed={estimate.seed}, {estimate.algorithm})"
            ),
        )

    def check_driven_agreement(self) -> AuditCheck:
        n_points = self.params['driven_points']
        rng = make_rng(self.params['driven_seed'])
        worst = 0.0
        evaluated = 0
        while evaluated < n_points:
            pair = DrivenPairParams(
                mu=rng.uniform(0.5, 2.0),
                I0=rng.uniform(0.5, 2.0),
                beta_pop=rng.uniform(-1.0, 1.0),
                gamma1=rng.uniform(0.1, 2.0),
                gamma2=rng.uniform(0.1, 2.0),
                delta1=rng.uniform(-2.0, 2.0),
                delta2=rng.uniform(-2.0, 2.0),
            )
            kr = rng.uniform(0.05, 3.0)
            phase = frequency_coefficients(pair).phase
            if abs(math.cos(kr)) < POLE_MARGIN or abs(math.cos(phase - kr)) < POLE_MARGIN:
                continue
            geom = PairGeometry.collinear(kr, 1.0)
            stable = driven_potential(pair, geom)
            naive = driven_potential_naive(pair, geom)
            scale = max(abs(stable), abs(naive))
            if scale > 0:
                worst = max(worst, abs(stable - naive) / scale)
            evaluated += 1
        return AuditCheck(
            name="driven stable/naive agreement",
            passed=worst < AGREEMENT_TOL,
            detail=f"max relative difference {worst:.3e} over {n_points} pole-free points",
        )


def _levi_civita(i: int, j: int, k: int) -> int:
    return (i - j) * (j - k) * (k - i) // 2
