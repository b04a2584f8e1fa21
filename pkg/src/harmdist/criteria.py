"""Executable univalence-criterion predicates.

Each criterion reduces to a disc supremum (or infimum) computed by the
norms engine and is reported as a verdict with a signed margin: positive
margin means the criterion holds with that much slack.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .analytic import AnalyticMap
from .errors import ParameterError
from .harmonic import HarmonicMap, as_harmonic
from .norms import (
    DEFAULT_GRID,
    DEFAULT_R_MAX,
    becker_harmonic_norm,
    harmonic_schwarzian_norm,
    omega_inf_norm,
    pre_schwarzian_norm,
    schwarzian_norm,
    sup_weighted,
)
from .operators import pre_schwarzian

# Conservative default for the (non-constructive) harmonic Nehari threshold.
DEFAULT_NEHARI_EPSILON = 0.1

# Boundary cases sit exactly on their thresholds; sup estimates carry a few
# ulps of float noise, which must not flip a verdict.
MARGIN_TOL = 1e-12


@dataclass(frozen=True)
class CriterionVerdict:
    criterion: str
    holds: bool
    margin: float
    witness: complex
    parameters: dict = field(default_factory=dict)


def _verdict(name, margin, witness, **params) -> CriterionVerdict:
    return CriterionVerdict(
        name, margin >= -MARGIN_TOL, float(margin), witness, dict(params)
    )


def becker_analytic(
    phi: AnalyticMap,
    variant: str = "paper",
    r_max: float = DEFAULT_R_MAX,
    grid=DEFAULT_GRID,
) -> CriterionVerdict:
    """sup (1-|z|^2)|P phi| <= 1 ("paper") or with a |z| factor ("classical")."""
    if variant not in ("paper", "classical"):
        raise ParameterError(f"unknown becker variant {variant!r}")
    est = pre_schwarzian_norm(phi, with_z=(variant == "classical"), r_max=r_max, grid=grid)
    return _verdict(
        f"becker_analytic[{variant}]", 1.0 - est.value, est.argmax_point,
        variant=variant, supremum=est.value, r_max=r_max,
    )


def becker_harmonic(
    f, r_max: float = DEFAULT_R_MAX, grid=DEFAULT_GRID
) -> CriterionVerdict:
    """Harmonic Becker criterion: the combined functional stays <= 1."""
    f = as_harmonic(f)
    est = becker_harmonic_norm(f, r_max=r_max, grid=grid)
    return _verdict(
        "becker_harmonic", 1.0 - est.value, est.argmax_point,
        supremum=est.value, r_max=r_max,
    )


def nehari_analytic(
    phi: AnalyticMap, t: float = 1.0, r_max: float = DEFAULT_R_MAX, grid=DEFAULT_GRID
) -> CriterionVerdict:
    """||S phi|| <= 2t for t in [0, 1]."""
    if not 0.0 <= t <= 1.0:
        raise ParameterError("t must lie in [0, 1]")
    est = schwarzian_norm(phi, r_max=r_max, grid=grid)
    return _verdict(
        "nehari_analytic", 2.0 * t - est.value, est.argmax_point,
        t=t, supremum=est.value, r_max=r_max,
    )


def nehari_harmonic(
    f,
    epsilon: float = DEFAULT_NEHARI_EPSILON,
    r_max: float = DEFAULT_R_MAX,
    grid=DEFAULT_GRID,
) -> CriterionVerdict:
    """||S_f|| <= epsilon; epsilon is caller-supplied (it is non-constructive)."""
    if epsilon <= 0.0:
        raise ParameterError("epsilon must be positive")
    f = as_harmonic(f)
    est = harmonic_schwarzian_norm(f, r_max=r_max, grid=grid)
    return _verdict(
        "nehari_harmonic", epsilon - est.value, est.argmax_point,
        epsilon=epsilon, supremum=est.value, r_max=r_max,
    )


def convexity_check(
    h: AnalyticMap, r_max: float = DEFAULT_R_MAX, grid=DEFAULT_GRID
) -> CriterionVerdict:
    """inf Re(1 + z h''/h') >= 0, the classical convexity characterization."""

    def neg(z):
        z = np.asarray(z, dtype=complex)
        return -np.real(1.0 + z * pre_schwarzian(h, z))

    est = sup_weighted(neg, "convexity", r_max, grid)
    infimum = -est.value
    return _verdict(
        "convexity", infimum, est.argmax_point, infimum=infimum, r_max=r_max
    )


def theorem_d_harmonic(
    f, c: float = 1.0, r_max: float = DEFAULT_R_MAX, grid=DEFAULT_GRID
) -> CriterionVerdict:
    """||omega||_inf < 1/c for h(D) a c-linearly connected domain."""
    if c < 1.0:
        raise ParameterError("linear-connectivity constant c must be >= 1")
    f = as_harmonic(f)
    est = omega_inf_norm(f, r_max=r_max, grid=grid)
    return _verdict(
        "theorem_d", 1.0 / c - est.value, est.argmax_point,
        c=c, omega_inf=est.value, r_max=est.r_max,
    )
