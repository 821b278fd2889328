"""Laser-driven interatomic potential and the medium/regime checks around it.

The printed potential carries exp{-kr |(b - a tan kr) / (a + b tan kr)|}. With
a = R cos(phi), b = R sin(phi) that ratio is tan(phi - kr), so
``driven_potential`` evaluates the exponent without the spurious poles of
tan(kr). Near phi - kr = pi/2 (mod pi) the exponential underflows and the
potential is taken as 0. ``driven_potential_naive`` keeps the literal form and
exists only to cross-check the stable one.
"""

import logging
import math
from typing import Optional

import numpy as np

from core.errors import DomainError, InputError, PoleProximityError
from core.two_level import check_weak_field
from models.atom import DriveField, TwoLevelAtom
from models.pair import (
    DrivenPairParams,
    ExchangeReport,
    FrequencyCoefficients,
    PairGeometry,
    RegimeReport,
)

logger = logging.getLogger(__name__)

EPS_POLE = 1e-8
REFERENCE_THRESHOLD_PER_CM = 100.0


def frequency_coefficients(p: DrivenPairParams) -> FrequencyCoefficients:
    g1, g2, d1, d2 = p.gamma1, p.gamma2, p.delta1, p.delta2
    if g1 <= 0 or g2 <= 0:
        raise DomainError("Damping constants must be positive")
    # ratios against hypot() norms keep large damping or detuning from overflowing
    h2 = math.hypot(g2, d2)
    c2, s2 = g2 / h2, d2 / h2
    a = g1 * c2 * c2
    gsum = g1 + g2
    h12 = math.hypot(gsum, d1 - d2)
    b = g1 * c2 * s2 + (gsum / h12) * ((gsum / h12) * d1 + (g1 / h12) * (d1 - d2))
    return FrequencyCoefficients(a=float(a), b=float(b))


def prefactor(p: DrivenPairParams, r: float) -> float:
    """-pi mu^2 I0 beta / (12 r (Gamma1^2 + Delta1^2))"""
    lorentz1 = math.hypot(p.gamma1, p.delta1)
    return -math.pi * p.mu * p.mu * p.I0 * p.beta_pop / (12.0 * r * lorentz1 * lorentz1)


def exponent_argument(coeffs: FrequencyCoefficients, kr: float) -> float:
    """kr |tan(phi - kr)|, the magnitude in the decaying exponential."""
    tangent = math.tan(coeffs.phase - kr)
    if not math.isfinite(tangent):
        return math.inf
    return kr * abs(tangent)


def driven_potential(p: DrivenPairParams, geom: PairGeometry) -> float:
    r = geom.r
    if r == 0:
        raise InputError("Driven potential undefined at r = 0")
    coeffs = frequency_coefficients(p)
    kr = geom.kr
    oscillation = coeffs.a * math.cos(kr) + coeffs.b * math.sin(kr)
    argument = exponent_argument(coeffs, kr)
    # exp underflows to exactly 0 close to the pole; that is the limit value
    envelope = math.exp(-argument) if math.isfinite(argument) else 0.0
    if envelope == 0.0:
        return 0.0
    return prefactor(p, r) * oscillation * envelope * math.cos(geom.k_dot_r)


def driven_potential_naive(p: DrivenPairParams, geom: PairGeometry, eps_pole: float = EPS_POLE) -> float:
    r = geom.r
    if r == 0:
        raise InputError("Driven potential undefined at r = 0")
    coeffs = frequency_coefficients(p)
    kr = geom.kr
    # distance of kr from pi/2 (mod pi)
    pole_distance = abs(math.remainder(kr - math.pi / 2.0, math.pi))
    if pole_distance <= eps_pole:
        raise PoleProximityError(f"kr = {kr!r} is within {eps_pole} of a tan(kr) pole")
    tangent = math.tan(kr)
    denominator = coeffs.a + coeffs.b * tangent
    if abs(denominator) <= eps_pole:
        raise PoleProximityError(f"|a + b tan(kr)| = {abs(denominator):.3e} below {eps_pole}")
    ratio = (coeffs.b - coeffs.a * tangent) / denominator
    envelope = math.exp(-kr * abs(ratio))
    oscillation = coeffs.a * math.cos(kr) + coeffs.b * math.sin(kr)
    return prefactor(p, r) * oscillation * envelope * math.cos(geom.k_dot_r)


def symmetric_resonant_potential(mu: float, I0: float, beta_pop: float, gamma: float, geom: PairGeometry) -> float:
    """Closed form at Gamma1 = Gamma2 = Gamma, Delta1 = Delta2 = 0 (a = Gamma, b = 0)."""
    r, kr = geom.r, geom.kr
    if r == 0:
        raise InputError("Driven potential undefined at r = 0")
    tangent = math.tan(kr)
    if not math.isfinite(tangent):
        return 0.0
    envelope = math.exp(-kr * abs(tangent))
    return (
        -math.pi * mu * mu * I0 * beta_pop / (12.0 * r * gamma)
        * math.cos(kr) * envelope * math.cos(geom.k_dot_r)
    )


def attenuate(I0: float, k_medium: float, r: float) -> float:
    """I0 exp(-k r); negative k describes a gain medium."""
    if r < 0:
        raise InputError(f"r must be non-negative, got {r}")
    try:
        return I0 * math.exp(-k_medium * r)
    except OverflowError:
        # strong gain: the intensity grows without bound
        return math.copysign(math.inf, I0) if I0 else 0.0


def exchange_feasibility(k_medium: float, wavelength: float, unit_in_cm: Optional[float] = None) -> ExchangeReport:
    """A resonant photon travels 1/k on average; exchange within a wavelength needs k lambda > 1.

    ``unit_in_cm`` is the length unit expressed in centimetres. When given, the
    report also compares k against the 100 cm^-1 optical reference threshold.
    """
    if wavelength <= 0:
        raise InputError(f"wavelength must be positive, got {wavelength}")
    if k_medium <= 0:
        mean_range, feasible = math.inf, False
    else:
        mean_range = 1.0 / k_medium
        feasible = k_medium * wavelength > 1.0

    k_per_cm = meets = None
    if unit_in_cm is not None:
        if unit_in_cm <= 0:
            raise InputError("unit_in_cm must be positive")
        k_per_cm = k_medium / unit_in_cm
        meets = k_per_cm > REFERENCE_THRESHOLD_PER_CM

    return ExchangeReport(
        k_medium=k_medium,
        wavelength=wavelength,
        mean_range=mean_range,
        k_required=1.0 / wavelength,
        exchange_feasible=feasible,
        reference_threshold_per_cm=REFERENCE_THRESHOLD_PER_CM,
        k_medium_per_cm=k_per_cm,
        meets_reference_threshold=meets,
    )


def regime_report(
    atom: TwoLevelAtom,
    field: DriveField,
    k_medium: float,
    wavelength: float,
    r: float,
    hbar: float = 1.0,
    unit_in_cm: Optional[float] = None,
) -> RegimeReport:
    weak = check_weak_field(atom, field, hbar)
    exchange = exchange_feasibility(k_medium, wavelength, unit_in_cm)
    notes = {}
    if unit_in_cm is not None:
        notes['wavelength_threshold_per_cm'] = repr(1.0 / (wavelength * unit_in_cm))
        notes['reference_threshold_per_cm'] = repr(REFERENCE_THRESHOLD_PER_CM)
    return RegimeReport(
        weak_field=weak,
        exchange=exchange,
        intensity_at_r=attenuate(field.intensity, k_medium, r),
        notes=notes,
    )


def envelope_power(radii, values) -> float:
    """Least-squares slope of log|U| against log r."""
    radii = np.asarray(radii, dtype=float)
    values = np.abs(np.asarray(values, dtype=float))
    mask = values > 0
    if mask.sum() < 2:
        raise InputError("Need at least two non-zero values to fit an envelope power")
    slope, _ = np.polyfit(np.log(radii[mask]), np.log(values[mask]), 1)
    return float(slope)
