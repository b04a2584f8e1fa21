"""Built-in mapping catalog with known properties.

Known values cited in the listing come from classical closed forms (each
is reproduced by the norms module's fixtures): the Koebe function has
Schwarzian norm 6 and order 2, the half-plane and log maps are convex
with order 1, and the log map sits on the Nehari boundary with Schwarzian
norm 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .analytic import ExpMap, HalfPlane, Identity, Koebe, LogMap
from .errors import ConfigError
from .harmonic import HarmonicMap, analytic_as_harmonic, harmonic_mobius, shear_linear


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    factory: Callable[[], HarmonicMap]
    convex: bool | None = None
    schwarzian_norm: float | None = None
    order: float | None = None
    univalent: bool = True
    notes: str = ""
    provenance: dict = field(default_factory=dict)


CATALOG: dict[str, CatalogEntry] = {}


def _register(entry: CatalogEntry):
    CATALOG[entry.name] = entry


_register(CatalogEntry(
    "identity", lambda: analytic_as_harmonic(Identity()),
    convex=True, schwarzian_norm=0.0, order=1.0,
    notes="f(z) = z",
    provenance={"schwarzian_norm": "S(id) = 0 identically",
                "order": "integrand |conj z| -> 1"},
))
_register(CatalogEntry(
    "halfplane", lambda: analytic_as_harmonic(HalfPlane()),
    convex=True, schwarzian_norm=2.0, order=1.0,
    notes="z / (1 - z), convex half-plane image",
    provenance={"convex": "image is a half-plane",
                "order": "(1 - r^2)/(1 - r) - r = 1 on the real axis"},
))
_register(CatalogEntry(
    "koebe", lambda: analytic_as_harmonic(Koebe()),
    convex=False, schwarzian_norm=6.0, order=2.0,
    notes="z / (1 - z)^2, extremal for growth and order",
    provenance={"schwarzian_norm": "S(k) = -6/(1 - z^2)^2",
                "order": "order of the full univalent family",
                "convex": "slit-plane image; convexity check finds Re < 0"},
))
_register(CatalogEntry(
    "exp", lambda: analytic_as_harmonic(ExpMap(1.0)),
    convex=None, order=1.5, univalent=True,
    notes="e^z - 1; pre-Schwarzian is constant 1, Becker margin 0",
    provenance={"order": "<= 3/2 from the Becker hypothesis"},
))
_register(CatalogEntry(
    "logtype", lambda: analytic_as_harmonic(LogMap()),
    convex=True, schwarzian_norm=2.0, order=1.0,
    notes="(1/2) log((1+z)/(1-z)); Nehari boundary case",
    provenance={"schwarzian_norm": "S = 2/(1 - z^2)^2, norm 2 on the real axis"},
))

# Harmonic entries used throughout the verification suites.
_register(CatalogEntry(
    "shear-identity-0.3z", lambda: shear_linear(Identity(), 0.3),
    convex=True, notes="h = z, omega = 0.3 z, g = 0.15 z^2",
))
_register(CatalogEntry(
    "shear-identity-0.4z", lambda: shear_linear(Identity(), 0.4),
    convex=True, notes="h = z, omega = 0.4 z, g = 0.2 z^2",
))
_register(CatalogEntry(
    "shear-halfplane-0.4z", lambda: shear_linear(HalfPlane(), 0.4),
    convex=True, notes="h = z/(1-z), omega = 0.4 z (closed-form g)",
))
_register(CatalogEntry(
    "harmonic-mobius-identity-0.3",
    lambda: harmonic_mobius(Identity(), 0.3),
    schwarzian_norm=0.0, notes="f = z + 0.3 conj(z); S_f = 0",
    provenance={"schwarzian_norm": "harmonic Mobius maps have S_f = 0"},
))
_register(CatalogEntry(
    "harmonic-mobius-halfplane-0.3",
    lambda: harmonic_mobius(HalfPlane(), 0.3),
    schwarzian_norm=0.0, notes="f = h + 0.3 conj(h), h = z/(1-z); S_f = 0",
    provenance={"schwarzian_norm": "harmonic Mobius maps have S_f = 0"},
))


def get_map(name: str) -> HarmonicMap:
    if name not in CATALOG:
        raise ConfigError(
            f"unknown catalog map {name!r}; available: {', '.join(sorted(CATALOG))}"
        )
    return CATALOG[name].factory()


def listing() -> list[dict]:
    out = []
    for name in sorted(CATALOG):
        e = CATALOG[name]
        out.append(dict(
            name=e.name, convex=e.convex, schwarzian_norm=e.schwarzian_norm,
            order=e.order, univalent=e.univalent, notes=e.notes,
            provenance=e.provenance,
        ))
    return out
