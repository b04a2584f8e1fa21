"""Pointwise evaluators for the two-point distortion inequalities.

Each evaluator returns a PairBound with the lower and/or upper bound on
|f(a) - f(b)| at a pair (a, b), given the pointwise scale factors

    R   = (1-|z|^2)(|h'| - |g'|),
    Q   = (1-|z|^2)(|h'| + |g'|),
    R_h = (1-|z|^2)|h'|,

and the hyperbolic distance d = d(a, b).  Evaluators are vectorized: a
and b may be complex arrays, in which case lower/upper are arrays.

Validity of each bound is gated elsewhere (verifier harness) on the
verdict of its hypothesis criterion; the evaluators themselves only check
parameter ranges.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .disk import hyperbolic, pseudo_hyperbolic
from .errors import NotSensePreservingError, ParameterError
from .harmonic import HarmonicMap, as_harmonic
from .operators import distortion_quantities


@dataclass(frozen=True)
class PairBound:
    """Lower/upper bound values for |f(a)-f(b)| at one pair (or pair arrays)."""

    bound_name: str
    lower: object = None  # float or ndarray, or None when the bound is one-sided
    upper: object = None
    hypothesis: str | None = None
    parameters: dict = field(default_factory=dict)


def _rq(f, a, b):
    f = as_harmonic(f)
    Ra, Qa, Rha = distortion_quantities(f, np.asarray(a, complex))
    Rb, Qb, Rhb = distortion_quantities(f, np.asarray(b, complex))
    return (Ra, Qa, Rha), (Rb, Qb, Rhb)


def _out(x):
    x = np.asarray(x, dtype=float)
    return x if x.ndim else float(x)


def blatter_lower(f, a, b) -> PairBound:
    """lower^2 = sinh^2(2d) (R(a)^2 + R(b)^2) / (8 cosh(4d))."""
    d = np.asarray(hyperbolic(a, b))
    (Ra, _, _), (Rb, _, _) = _rq(f, a, b)
    lo = np.sqrt(np.sinh(2 * d) ** 2 * (Ra**2 + Rb**2) / (8.0 * np.cosh(4 * d)))
    return PairBound("blatter", lower=_out(lo), hypothesis="univalent")


def kim_minda_convex_lower(
    f, a, b, p: float = 2.0, omega_inf: float | None = None
) -> PairBound:
    """Convex-map lower bound, parametrized by p > 1.

    lower = (1 - ||omega||) sinh(d)/(2 cosh(pd)^{1/p}) (R_h(a)^p + R_h(b)^p)^{1/p}

    For an analytic map (omega = 0, R_h = R) this is the conformal convex
    two-point bound verbatim.  The naive harmonic transcription -- same
    formula on R = (1 - |z|^2)(|h'| - |g'|) without the (1 - ||omega||)
    prefactor -- is false: near the origin R ~ R_h while |f(a) - f(b)| can
    shrink to (1 - ||omega||)|h(a) - h(b)| (observed violations at p = 1.1
    on a sheared half-plane map).  The corrected form follows from
    |f(a)-f(b)| >= (1 - ||omega||)|h(a)-h(b)|: pulling the straight segment
    [h(a), h(b)] back through the convex map h gives a path gamma with
    int_gamma |h'| |dz| = |h(a)-h(b)|, so |g(a)-g(b)| <= ||omega|| |h(a)-h(b)|.
    """
    if p <= 1.0:
        raise ParameterError("kim_minda_convex_lower requires p > 1")
    f = as_harmonic(f)
    if omega_inf is None:
        from .norms import omega_inf_norm

        omega_inf = omega_inf_norm(f).value
    if omega_inf >= 1.0:
        raise NotSensePreservingError("kim_minda_convex_lower requires ||omega|| < 1")
    d = np.asarray(hyperbolic(a, b))
    (_, _, Rha), (_, _, Rhb) = _rq(f, a, b)
    lo = (
        (1.0 - omega_inf)
        * np.sinh(d) / (2.0 * np.cosh(p * d) ** (1.0 / p))
        * (Rha**p + Rhb**p) ** (1.0 / p)
    )
    return PairBound(
        "kim_minda_convex", lower=_out(lo), hypothesis="convexity",
        parameters={"p": p, "omega_inf": omega_inf},
    )


def chuaqui_pommerenke_lower(phi, a, b) -> PairBound:
    """lower = d(a,b) sqrt(R(a) R(b)) under ||S phi|| <= 2."""
    d = np.asarray(hyperbolic(a, b))
    (Ra, _, _), (Rb, _, _) = _rq(phi, a, b)
    lo = d * np.sqrt(Ra * Rb)
    return PairBound("chuaqui_pommerenke", lower=_out(lo), hypothesis="nehari_analytic")


def mmm_upper(phi, a, b, t: float = 1.0) -> PairBound:
    """upper = sqrt(R(a)R(b)/(1+t)) sinh(sqrt(1+t) d) under ||S phi|| <= 2t."""
    if not 0.0 <= t <= 1.0:
        raise ParameterError("mmm_upper requires t in [0, 1]")
    d = np.asarray(hyperbolic(a, b))
    (Ra, _, _), (Rb, _, _) = _rq(phi, a, b)
    up = np.sqrt(Ra * Rb / (1.0 + t)) * np.sinh(np.sqrt(1.0 + t) * d)
    return PairBound(
        "mmm", upper=_out(up), hypothesis="nehari_analytic", parameters={"t": t}
    )


def dhk_bounds(f, a, b, alpha: float = 2.0, strict: bool = True) -> PairBound:
    """Growth sandwich for normalized univalent harmonic maps of order alpha.

    lower = (1/(2a))(1 - e^{-2ad}) max(R(a), R(b))
    upper = (1/(2a))(e^{2ad} - 1) min(Q(a), Q(b))

    ``strict=False`` admits alpha in (0, 1) for detector-sensitivity runs
    that deliberately violate the hypothesis.
    """
    if alpha < 1.0 and strict:
        raise ParameterError("dhk_bounds requires alpha >= 1")
    if alpha <= 0.0:
        raise ParameterError("dhk_bounds requires alpha > 0")
    d = np.asarray(hyperbolic(a, b))
    (Ra, Qa, _), (Rb, Qb, _) = _rq(f, a, b)
    lo = (1.0 - np.exp(-2.0 * alpha * d)) / (2.0 * alpha) * np.maximum(Ra, Rb)
    up = (np.exp(2.0 * alpha * d) - 1.0) / (2.0 * alpha) * np.minimum(Qa, Qb)
    return PairBound(
        "dhk", lower=_out(lo), upper=_out(up),
        hypothesis="normalized", parameters={"alpha": alpha},
    )


def becker_analytic_bounds(phi, a, b) -> PairBound:
    """Sandwich (1 -/+ e^{-/+3d})/3 sqrt(R(a)R(b)) under the paper Becker hypothesis."""
    d = np.asarray(hyperbolic(a, b))
    (Ra, _, _), (Rb, _, _) = _rq(phi, a, b)
    s = np.sqrt(Ra * Rb)
    lo = (1.0 - np.exp(-3.0 * d)) / 3.0 * s
    up = (np.exp(3.0 * d) - 1.0) / 3.0 * s
    return PairBound(
        "becker_analytic", lower=_out(lo), upper=_out(up), hypothesis="becker_analytic"
    )


def becker_harmonic_bounds(f, a, b) -> PairBound:
    """Harmonic Becker sandwich: R-side lower, Q-side upper."""
    d = np.asarray(hyperbolic(a, b))
    (Ra, Qa, _), (Rb, Qb, _) = _rq(f, a, b)
    lo = (1.0 - np.exp(-3.0 * d)) / 3.0 * np.sqrt(Ra * Rb)
    up = (np.exp(3.0 * d) - 1.0) / 3.0 * np.sqrt(Qa * Qb)
    return PairBound(
        "becker_harmonic", lower=_out(lo), upper=_out(up), hypothesis="becker_harmonic"
    )


def nehari_harmonic_bounds(f, a, b, epsilon: float = 0.1) -> PairBound:
    """lower = d sqrt(R R); upper = sqrt(Q Q / 2) sinh(sqrt(2) d)."""
    d = np.asarray(hyperbolic(a, b))
    (Ra, Qa, _), (Rb, Qb, _) = _rq(f, a, b)
    lo = d * np.sqrt(Ra * Rb)
    up = np.sqrt(Qa * Qb / 2.0) * np.sinh(np.sqrt(2.0) * d)
    return PairBound(
        "nehari_harmonic", lower=_out(lo), upper=_out(up),
        hypothesis="nehari_harmonic", parameters={"epsilon": epsilon},
    )


def convex_h_bounds(f, a, b, omega_inf: float | None = None) -> PairBound:
    """Two-point sandwich for f = h + conj(g) with h convex.

    lower = (1 - ||omega||) rho (R_h(a)+R_h(b))/2   (p -> 1 convex bound)
    upper = (1 + ||omega||) rho/(1-rho) (R_h(a)+R_h(b))/2

    The upper-bound distance factor is rho/(1-rho) = (e^{2d}-1)/2, the
    order-1 growth factor of the convex family: the plain rho factor is
    already violated by the identity map (rho(R_h(a)+R_h(b))/2 < |a-b|
    whenever |a| != |b|), so it cannot serve as an upper bound.
    """
    f = as_harmonic(f)
    if omega_inf is None:
        from .norms import omega_inf_norm

        omega_inf = omega_inf_norm(f).value
    if omega_inf >= 1.0:
        raise NotSensePreservingError("convex_h_bounds requires ||omega|| < 1")
    rho = np.asarray(pseudo_hyperbolic(a, b))
    (_, _, Rha), (_, _, Rhb) = _rq(f, a, b)
    mean = (Rha + Rhb) / 2.0
    lo = (1.0 - omega_inf) * rho * mean
    up = (1.0 + omega_inf) * rho / (1.0 - rho) * mean
    return PairBound(
        "convex_h", lower=_out(lo), upper=_out(up),
        hypothesis="convexity", parameters={"omega_inf": omega_inf},
    )


def linconn_bounds(
    f, a, b, c: float = 1.0, beta: float = 2.0, omega_inf: float | None = None
) -> PairBound:
    """(1 -/+ c||omega||) (1/(2b))(1 - e^{-2bd} / e^{2bd} - 1) sqrt(R_h R_h).

    The upper-bound exponential is read as (e^{2 beta d} - 1), consistent
    with the lower bound and the growth formula.
    """
    if c < 1.0:
        raise ParameterError("linconn_bounds requires c >= 1")
    if not 1.0 <= beta <= 2.0:
        raise ParameterError("linconn_bounds requires beta in [1, 2]")
    f = as_harmonic(f)
    if omega_inf is None:
        from .norms import omega_inf_norm

        omega_inf = omega_inf_norm(f).value
    if c * omega_inf >= 1.0:
        raise ParameterError("linconn_bounds hypothesis violated: c ||omega|| >= 1")
    d = np.asarray(hyperbolic(a, b))
    (_, _, Rha), (_, _, Rhb) = _rq(f, a, b)
    s = np.sqrt(Rha * Rhb)
    lo = (1.0 - c * omega_inf) * (1.0 - np.exp(-2.0 * beta * d)) / (2.0 * beta) * s
    up = (1.0 + c * omega_inf) * (np.exp(2.0 * beta * d) - 1.0) / (2.0 * beta) * s
    return PairBound(
        "linconn", lower=_out(lo), upper=_out(up), hypothesis="theorem_d",
        parameters={"c": c, "beta": beta, "omega_inf": omega_inf},
    )


def corollary_bounds(f, a, b, beta_lambda: float = 2.0) -> PairBound:
    """Growth sandwich via the shears phi = h + lambda g of order <= beta_lambda.

    lower = (1/(2bl))(1 - e^{-2bl d}) sqrt(R(a)R(b))
    upper = (1/(2bl))(e^{2bl d} - 1) sqrt(Q(a)Q(b))

    For the right unimodular lambda, |f(a)-f(b)| = |phi(a)-phi(b)|, and
    R <= (1-|z|^2)|phi'| <= Q pointwise, so the harmonic R feeds the lower
    bound and Q the upper (R on the upper side fails numerically).
    """
    if not 1.0 <= beta_lambda <= 2.0:
        raise ParameterError("corollary_bounds requires beta_lambda in [1, 2]")
    d = np.asarray(hyperbolic(a, b))
    (Ra, Qa, _), (Rb, Qb, _) = _rq(f, a, b)
    bl = beta_lambda
    lo = (1.0 - np.exp(-2.0 * bl * d)) / (2.0 * bl) * np.sqrt(Ra * Rb)
    up = (np.exp(2.0 * bl * d) - 1.0) / (2.0 * bl) * np.sqrt(Qa * Qb)
    return PairBound(
        "corollary", lower=_out(lo), upper=_out(up), hypothesis="theorem_d",
        parameters={"beta_lambda": bl},
    )


def mobius_exact(f: HarmonicMap, a, b):
    """Exact identity |f(a)-f(b)| = sqrt(R_h(a)R_h(b)) sinh(d) |1 + conj(alpha) lambda|.

    Requires f = h + conj(alpha h) with h Mobius; lambda is the unimodular
    phase conj(h(a)-h(b))/(h(a)-h(b)).  Returns 0 at a = b (by continuity;
    lambda is undefined there).
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    h = f.h
    alpha = complex(f.omega_derivs(0.0, 0)[0])
    d = np.asarray(hyperbolic(a, b))
    (_, _, Rha), (_, _, Rhb) = _rq(f, a, b)
    dh = np.asarray(h(a) - h(b))
    coincident = np.abs(dh) < 1e-300
    lam = np.conj(dh) / np.where(coincident, 1.0, dh)
    val = np.sqrt(Rha * Rhb) * np.sinh(d) * np.abs(1.0 + np.conj(alpha) * lam)
    val = np.where(coincident, 0.0, val)
    return _out(val)


def growth_sandwich(phi, z, alpha: float = 2.0):
    """Growth bounds (1/(2a))(((1+-r)/(1-+r))^a -/+ 1) for |phi(z)|, r = |z|."""
    if alpha < 1.0:
        raise ParameterError("growth_sandwich requires alpha >= 1")
    r = np.abs(np.asarray(z, dtype=complex))
    lo = (1.0 - ((1.0 - r) / (1.0 + r)) ** alpha) / (2.0 * alpha)
    up = (((1.0 + r) / (1.0 - r)) ** alpha - 1.0) / (2.0 * alpha)
    return _out(lo), _out(up)
