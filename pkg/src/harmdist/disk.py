"""Hyperbolic geometry of the unit disc.

Pseudo-hyperbolic and hyperbolic distances plus the disc automorphisms
sigma_a(z) = (z + a) / (1 + conj(a) z).  All functions accept complex
scalars or numpy arrays and are pure.
"""

from __future__ import annotations

import warnings

import numpy as np

from .errors import DomainError

# Points this close to the boundary are accepted but flagged; distances are
# computed in log form so they stay finite in floating point.
BOUNDARY_FLAG_TOL = 1e-12


def require_in_disk(*points, name: str = "point") -> None:
    """Validate that every argument lies in the open unit disc."""
    for p in points:
        mod = np.abs(np.asarray(p, dtype=complex))
        if np.any(mod >= 1.0):
            raise DomainError(f"{name} outside the open unit disc (|z| >= 1)")
        if np.any(mod >= 1.0 - BOUNDARY_FLAG_TOL):
            warnings.warn(
                f"{name} within {BOUNDARY_FLAG_TOL} of the unit circle; "
                "hyperbolic quantities may be inaccurate",
                stacklevel=2,
            )


def pseudo_hyperbolic(a, b):
    """rho(a, b) = |(a - b) / (1 - conj(a) b)|, in [0, 1)."""
    require_in_disk(a, b)
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    out = np.abs((a - b) / (1.0 - np.conj(a) * b))
    return out if out.ndim else float(out)


def hyperbolic(a, b):
    """d(a, b) = arctanh(rho(a, b)) = (1/2) log((1 + rho) / (1 - rho))."""
    rho = np.asarray(pseudo_hyperbolic(a, b))
    out = 0.5 * (np.log1p(rho) - np.log1p(-rho))
    return out if out.ndim else float(out)


def automorphism(a, z):
    """sigma_a(z) = (z + a) / (1 + conj(a) z); maps the disc onto itself, 0 -> a."""
    require_in_disk(a, z)
    a = np.asarray(a, dtype=complex)
    z = np.asarray(z, dtype=complex)
    out = (z + a) / (1.0 + np.conj(a) * z)
    return out if out.ndim else complex(out)
