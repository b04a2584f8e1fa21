"""Truncated Taylor series with complex coefficients.

The computational stand-in for analytic functions: a finite coefficient
vector c_0..c_N together with a ``reliable_radius`` up to which the
truncation error is certified small (~1e-12 against the represented
function).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import polynomial as P

from .errors import PrecisionError, SingularError

# Shrink factor applied to the reliable radius after composing with a disc
# automorphism: composition moves mass toward the boundary of the operand's
# certified region.
COMPOSE_RADIUS_FACTOR = 0.7

_TAIL_TARGET = 1e-12


def reliable_radius_from_coeffs(coeffs: np.ndarray, cap: float = 0.95) -> float:
    """Radius where the last coefficients contribute below the tail target.

    A series whose trailing coefficients vanish is (numerically) a
    polynomial and is reliable on the whole disc.
    """
    n = len(coeffs) - 1
    tail = np.abs(coeffs[-5:]) if n >= 5 else np.abs(coeffs)
    m = float(tail.max(initial=0.0))
    if m < 1e-13:
        return 1.0
    r = float((_TAIL_TARGET / m) ** (1.0 / max(n, 1)))
    return min(cap, max(r, 0.05))


@dataclass(frozen=True)
class TaylorSeries:
    """Coefficients c_0..c_N and the radius where truncation is certified."""

    coefficients: np.ndarray
    reliable_radius: float = 0.95

    def __post_init__(self):
        c = np.atleast_1d(np.asarray(self.coefficients, dtype=complex))
        if c.ndim != 1 or len(c) < 2:
            c = np.concatenate([c.ravel(), np.zeros(max(0, 2 - c.size), complex)])
        object.__setattr__(self, "coefficients", c)
        if not 0.0 < self.reliable_radius <= 1.0:
            raise ValueError("reliable_radius must lie in (0, 1]")

    @property
    def truncation_order(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        if np.any(np.abs(z) > self.reliable_radius + 1e-15):
            raise PrecisionError(
                f"evaluation at |z| beyond reliable radius {self.reliable_radius:g}"
            )
        out = P.polyval(z, self.coefficients)
        return out if np.ndim(out) else complex(out)

    def truncated(self, order: int) -> "TaylorSeries":
        c = self.coefficients[: order + 1]
        return TaylorSeries(c, self.reliable_radius)


def _common(a: TaylorSeries, b: TaylorSeries) -> tuple[int, float]:
    return (
        max(a.truncation_order, b.truncation_order),
        min(a.reliable_radius, b.reliable_radius),
    )


def add(a: TaylorSeries, b: TaylorSeries) -> TaylorSeries:
    n, r = _common(a, b)
    ca = np.pad(a.coefficients, (0, n + 1 - len(a.coefficients)))
    cb = np.pad(b.coefficients, (0, n + 1 - len(b.coefficients)))
    return TaylorSeries(ca + cb, r)


def multiply(a: TaylorSeries, b: TaylorSeries) -> TaylorSeries:
    n, r = _common(a, b)
    c = P.polymul(a.coefficients, b.coefficients)[: n + 1]
    return TaylorSeries(c, r)


def reciprocal(a: TaylorSeries) -> TaylorSeries:
    """Power-series inverse 1/a, truncated at the operand's order."""
    c = a.coefficients
    if abs(c[0]) < 1e-14:
        raise SingularError("reciprocal of a series with vanishing constant term")
    n = a.truncation_order
    b = np.zeros(n + 1, dtype=complex)
    b[0] = 1.0 / c[0]
    for k in range(1, n + 1):
        top = min(k, len(c) - 1)
        b[k] = -np.dot(c[1 : top + 1], b[k - 1 :: -1][:top]) / c[0]
    return TaylorSeries(b, a.reliable_radius)


def differentiate(a: TaylorSeries) -> TaylorSeries:
    return TaylorSeries(P.polyder(a.coefficients), a.reliable_radius)


def integrate(a: TaylorSeries) -> TaylorSeries:
    """Antiderivative with value 0 at the origin."""
    return TaylorSeries(P.polyint(a.coefficients), a.reliable_radius)


def compose(outer: TaylorSeries, inner: TaylorSeries) -> TaylorSeries:
    """Polynomial composition outer(inner(z)), truncated at the common order."""
    n, r = _common(outer, inner)
    co = outer.coefficients
    acc = np.array([co[-1]], dtype=complex)
    for k in range(len(co) - 2, -1, -1):
        acc = P.polymul(acc, inner.coefficients)[: n + 1]
        acc = P.polyadd(acc, [co[k]])
    acc = np.pad(acc, (0, max(0, n + 1 - len(acc))))
    return TaylorSeries(acc[: n + 1], r)


def automorphism_series(a: complex, order: int) -> TaylorSeries:
    """Taylor coefficients of sigma_a(z) = (z + a) / (1 + conj(a) z)."""
    ab = np.conj(a)
    n = np.arange(order + 1)
    c = (1.0 - abs(a) ** 2) * (-ab) ** np.maximum(n - 1, 0)
    c[0] = a
    if order >= 1:
        c[1] = 1.0 - abs(a) ** 2
    return TaylorSeries(c, 0.95)


def compose_with_automorphism(s: TaylorSeries, a: complex) -> TaylorSeries:
    """s(sigma_a(z)); reliable radius shrinks by COMPOSE_RADIUS_FACTOR."""
    sig = automorphism_series(a, s.truncation_order)
    out = compose(s, sig)
    return TaylorSeries(
        out.coefficients, COMPOSE_RADIUS_FACTOR * min(s.reliable_radius, 0.95)
    )
