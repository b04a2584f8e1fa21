"""Planar harmonic mappings f = h + conj(g).

The dilatation omega = g'/h' and its first two derivatives are always
derived from the exact derivatives of h and g by quotient-rule formulas,
so every downstream operator sees a single consistent object even when g
is a truncated series.
"""

from __future__ import annotations

import numpy as np

from . import series as ts
from .analytic import (
    Affine,
    AnalyticMap,
    HalfPlane,
    Identity,
    Mobius,
    Monomial,
    SeriesMap,
    ZERO,
)
from .disk import require_in_disk
from .errors import NotSensePreservingError, ParameterError

# A point counts as degenerate when 1 - |omega|^2 falls below this; the
# operators genuinely blow up there, so we refuse rather than clamp.
SENSE_TOL = 1e-12


class HarmonicMap:
    """f = h + conj(g) with h, g analytic; sense-preserving where evaluated."""

    def __init__(self, h: AnalyticMap, g: AnalyticMap, name: str | None = None):
        self.h = h
        self.g = g
        self.name = name or f"{h.name}+conj({g.name})"
        self.reliable_radius = min(h.reliable_radius, g.reliable_radius)
        h0, h1 = h.derivs(0.0, 1)[:2]
        g0 = g.derivs(0.0, 0)[0]
        self.normalized = (
            abs(h0) < 1e-12 and abs(g0) < 1e-12 and abs(h1 - 1.0) < 1e-12
        )

    @property
    def is_analytic(self) -> bool:
        return self.g is ZERO

    def __call__(self, z):
        return self.h(z) + np.conj(self.g(z))

    def omega_derivs(self, z, order: int = 2):
        """(omega, omega', omega'') from exact h, g derivatives.

        omega   = g'/h'
        omega'  = g''/h' - g' h''/h'^2
        omega'' = g'''/h' - (2 g'' h'' + g' h''')/h'^2 + 2 g' h''^2/h'^3
        """
        hv = self.h.derivs(z, order + 1)
        gv = self.g.derivs(z, order + 1)
        h1 = hv[1]
        w = gv[1] / h1
        out = [w]
        if order >= 1:
            out.append(gv[2] / h1 - gv[1] * hv[2] / h1**2)
        if order >= 2:
            out.append(
                gv[3] / h1
                - (2.0 * gv[2] * hv[2] + gv[1] * hv[3]) / h1**2
                + 2.0 * gv[1] * hv[2] ** 2 / h1**3
            )
        return tuple(out)

    def check_sense_preserving(self, z):
        w = self.omega_derivs(z, 0)[0]
        if np.any(1.0 - np.abs(w) ** 2 < SENSE_TOL):
            raise NotSensePreservingError(
                f"{self.name}: |omega| >= 1 - {SENSE_TOL} at a queried point"
            )


def jacobian(f: HarmonicMap, z):
    """J_f = |h'|^2 - |g'|^2; raises when not positive."""
    require_in_disk(z)
    h1 = f.h.derivs(z, 1)[1]
    g1 = f.g.derivs(z, 1)[1]
    J = np.abs(h1) ** 2 - np.abs(g1) ** 2
    if np.any(J <= 0.0):
        raise NotSensePreservingError(f"{f.name}: Jacobian <= 0 at a queried point")
    return J if np.ndim(J) else float(J)


def analytic_as_harmonic(phi: AnalyticMap) -> HarmonicMap:
    """Wrap an analytic map as a harmonic map with g = 0."""
    return HarmonicMap(phi, ZERO, name=phi.name)


def as_harmonic(f) -> HarmonicMap:
    return f if isinstance(f, HarmonicMap) else analytic_as_harmonic(f)


def from_h_and_omega(
    h: AnalyticMap, omega: AnalyticMap, order: int = 120
) -> HarmonicMap:
    """Shear construction: g' = omega h', g(0) = 0, as a truncated series.

    The resulting map is sense-preserving by construction provided
    |omega| < 1 on the sampled disc; omega attaining modulus >= 1 there is
    rejected.
    """
    _reject_large_omega(omega)
    h1 = ts.differentiate(h.taylor(order + 1))
    w = omega.taylor(order)
    g = SeriesMap(ts.integrate(ts.multiply(w, h1)), name=f"int({omega.name}*{h.name}')")
    f = HarmonicMap(h, g, name=f"shear({h.name},{omega.name})")
    f.input_omega = omega  # kept for round-trip checks only
    return f


def harmonic_mobius(h: AnalyticMap, alpha: complex) -> HarmonicMap:
    """f = h + alpha conj(h) with h a Mobius catalog entry; S_f vanishes."""
    if not isinstance(h, (Identity, Mobius, HalfPlane)):
        raise ParameterError("harmonic_mobius requires a Mobius-type catalog entry")
    if abs(alpha) >= 1.0:
        raise NotSensePreservingError("harmonic_mobius requires |alpha| < 1")
    alpha = complex(alpha)
    g = Affine(h, alpha, name=f"{alpha}*{h.name}") if alpha != 0 else ZERO
    return HarmonicMap(h, g, name=f"harmonic-mobius({h.name},{alpha})")


def affine_transform(f: HarmonicMap, a: complex) -> HarmonicMap:
    """f + a conj(f) = (h + a g) + conj(g + conj(a) h); P and S are invariant."""
    if abs(a) >= 1.0:
        raise NotSensePreservingError("affine parameter must satisfy |a| < 1")
    from .analytic import LinearCombo

    a = complex(a)
    h2 = LinearCombo([(1.0, f.h), (a, f.g)])
    g2 = LinearCombo([(1.0, f.g), (np.conj(a), f.h)])
    return HarmonicMap(h2, g2, name=f"affine({f.name},{a})")


def shear_phi_lambda(f: HarmonicMap, lam: complex) -> AnalyticMap:
    """The analytic family phi_lambda = h + lambda g."""
    from .analytic import LinearCombo

    if f.g is ZERO or lam == 0:
        return f.h
    return LinearCombo([(1.0, f.h), (complex(lam), f.g)], name=f"phi_lambda({lam})")


def _reject_large_omega(omega: AnalyticMap, r: float = 0.999):
    rr = min(r, omega.reliable_radius)
    th = np.linspace(0.0, 2.0 * np.pi, 64, endpoint=False)
    rad = np.linspace(0.0, rr, 17)
    z = np.outer(rad, np.exp(1j * th)).ravel()
    if np.any(np.abs(omega(z)) >= 1.0 - SENSE_TOL):
        raise NotSensePreservingError(
            f"{omega.name}: |omega| >= 1 on the sample grid"
        )


def halfplane_shear_g(coef: complex) -> AnalyticMap:
    """Closed form of int c z/(1-z)^2 dz = c (1/(1-z) + log(1-z) - 1).

    This is g for the shear of the half-plane map with omega = c z, kept in
    closed form so the map is evaluable on the whole open disc.
    """

    class _G(AnalyticMap):
        name = f"halfplane-shear-g({coef})"

        def derivs(self, z, order: int = 3):
            z = self._check(z)
            w = 1.0 - z
            out = [coef * (1.0 / w + np.log(w) - 1.0)]
            if order >= 1:
                out.append(coef * z / w**2)
            if order >= 2:
                out.append(coef * (1.0 + z) / w**3)
            if order >= 3:
                out.append(coef * 2.0 * (2.0 + z) / w**4)
            return tuple(out)

        def taylor(self, order: int = 40) -> ts.TaylorSeries:
            n = np.arange(order + 1, dtype=float)
            c = np.zeros(order + 1, dtype=complex)
            c[2:] = coef * (n[2:] - 1.0) / n[2:]
            return ts.TaylorSeries(c, ts.reliable_radius_from_coeffs(c))

    return _G()


def shear_linear(h: AnalyticMap, coef: complex) -> HarmonicMap:
    """Shear of a catalog h with omega = coef * z, using exact closed-form g."""
    if isinstance(h, Identity):
        g = Monomial(coef / 2.0, 2)
    elif isinstance(h, HalfPlane):
        g = halfplane_shear_g(coef)
    else:
        return from_h_and_omega(h, Monomial(coef, 1))
    return HarmonicMap(h, g, name=f"shear({h.name},{coef}z)")
