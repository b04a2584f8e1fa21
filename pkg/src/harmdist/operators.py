"""Pre-Schwarzian / Schwarzian derivatives and pointwise distortion quantities.

Analytic:  P phi = phi''/phi',  S phi = (P phi)' - (P phi)^2 / 2.
Harmonic:  P_f = Ph - conj(w) w' / (1 - |w|^2),
           S_f = Sh + [conj(w)/(1-|w|^2)] (w' h''/h' - w'')
                 - (3/2) (w' conj(w)/(1-|w|^2))^2,
with w = g'/h'.  For g = 0 the harmonic operators reduce exactly to the
analytic ones (the correction terms vanish identically).

The harmonic Schwarzian is computed from the closed formula, never by
differentiating P_f numerically; the finite-difference route exists only
as a test oracle.
"""

from __future__ import annotations

import numpy as np

from .analytic import AnalyticMap, DERIV_SINGULAR_TOL
from .disk import require_in_disk
from .errors import DomainError, SingularError
from .harmonic import SENSE_TOL, HarmonicMap, as_harmonic


def _nonzero_deriv(d1, name: str):
    if np.any(np.abs(d1) < DERIV_SINGULAR_TOL):
        raise SingularError(f"{name}: vanishing first derivative at a queried point")


def pre_schwarzian(phi: AnalyticMap, z):
    """P phi(z) = phi''(z) / phi'(z)."""
    _, d1, d2 = phi.derivs(z, 2)
    _nonzero_deriv(d1, phi.name)
    out = d2 / d1
    return out if np.ndim(out) else complex(out)


def schwarzian(phi: AnalyticMap, z):
    """S phi(z) = phi'''/phi' - (3/2)(phi''/phi')^2."""
    out = _schwarzian_value(phi, z)
    return out if np.ndim(out) else complex(out)


def _schwarzian_value(phi: AnalyticMap, z):
    exact = getattr(phi, "schwarzian_exact", lambda _z: None)(z)
    if exact is not None:
        return exact
    _, d1, d2, d3 = phi.derivs(z, 3)
    _nonzero_deriv(d1, phi.name)
    p = d2 / d1
    return d3 / d1 - 1.5 * p * p


def _omega_factor(f: HarmonicMap, z, order: int):
    ws = f.omega_derivs(z, order)
    denom = 1.0 - np.abs(ws[0]) ** 2
    if np.any(denom < SENSE_TOL):
        raise SingularError(f"{f.name}: 1 - |omega|^2 < {SENSE_TOL}; operator blows up")
    return ws, denom


def harmonic_pre_schwarzian(f, z):
    """P_f(z) = h''/h' - conj(omega) omega' / (1 - |omega|^2)."""
    f = as_harmonic(f)
    _, h1, h2 = f.h.derivs(z, 2)
    _nonzero_deriv(h1, f.h.name)
    (w, w1), denom = _omega_factor(f, z, 1)
    out = h2 / h1 - np.conj(w) * w1 / denom
    return out if np.ndim(out) else complex(out)


def harmonic_schwarzian(f, z):
    """Closed-form harmonic Schwarzian S_f(z)."""
    f = as_harmonic(f)
    _, h1, h2 = f.h.derivs(z, 2)
    _nonzero_deriv(h1, f.h.name)
    (w, w1, w2), denom = _omega_factor(f, z, 2)
    ph = h2 / h1
    sh = _schwarzian_value(f.h, z)
    cw = np.conj(w) / denom
    out = sh + cw * (w1 * ph - w2) - 1.5 * (w1 * cw) ** 2
    return out if np.ndim(out) else complex(out)


def omega_star_at(omega, z):
    """Schwarz-Pick quantity |omega'|(1 - |z|^2)/(1 - |omega|^2) <= 1.

    ``omega`` may be an AnalyticMap (the dilatation itself) or a
    HarmonicMap, in which case its dilatation is used.
    """
    require_in_disk(z)
    z = np.asarray(z, dtype=complex)
    if isinstance(omega, HarmonicMap):
        (w, w1), denom = _omega_factor(omega, z, 1)
    else:
        w, w1 = omega.derivs(z, 1)[:2]
        denom = 1.0 - np.abs(w) ** 2
        if np.any(denom <= 0.0):
            raise DomainError(f"{omega.name}: |omega| >= 1 at a queried point")
    out = np.abs(w1) * (1.0 - np.abs(z) ** 2) / denom
    return out if np.ndim(out) else float(out)


def distortion_quantities(f, z):
    """(R, Q, R_h) at z.

    R   = (1 - |z|^2)(|h'| - |g'|)   minimal stretch
    Q   = (1 - |z|^2)(|h'| + |g'|)   maximal stretch
    R_h = (1 - |z|^2)|h'|            analytic-part scale

    For analytic input R = Q = R_h = R_phi.
    """
    f = as_harmonic(f)
    require_in_disk(z)
    z = np.asarray(z, dtype=complex)
    h1 = f.h.derivs(z, 1)[1]
    g1 = f.g.derivs(z, 1)[1]
    f.check_sense_preserving(z)
    w2 = 1.0 - np.abs(z) ** 2
    ah, ag = np.abs(h1), np.abs(g1)
    R, Q, Rh = w2 * (ah - ag), w2 * (ah + ag), w2 * ah
    if np.ndim(R):
        return R, Q, Rh
    return float(R), float(Q), float(Rh)
