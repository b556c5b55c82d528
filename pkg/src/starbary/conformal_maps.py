"""Conformal point shifts that cluster nodes near a front.

Radially a tangent (Bayliss-Turkel type) map of [0, 2] onto itself; angularly a
Moebius-type diffeomorphism of the circle.  Both are real-analytic, so shifted
interpolants keep their exponential convergence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bary_core import TWO_PI
from .errors import DomainError, InvalidArgumentError


@dataclass(frozen=True)
class RadialShift:
    """g1(x) = beta + tan(lam * (x - mu)) / alpha, calibrated so g1(0)=0, g1(2)=2.

    ``alpha`` is the density (larger clusters more tightly), ``beta`` the
    radius on [0, 2] around which nodes cluster.
    """

    alpha: float
    beta: float
    lam: float = field(init=False)
    mu: float = field(init=False)

    def __post_init__(self):
        alpha, beta = float(self.alpha), float(self.beta)
        if not alpha > 0 or not math.isfinite(alpha):
            raise InvalidArgumentError(f"alpha must be > 0, got {alpha}")
        if not 0.0 < beta < 2.0:
            raise InvalidArgumentError(f"beta must lie in (0, 2), got {beta}")
        lo = math.atan(alpha * (0.0 - beta))
        hi = math.atan(alpha * (2.0 - beta))
        lam = (hi - lo) / 2.0
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "beta", beta)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", -lo / lam)

    def __call__(self, x):
        return apply_radial(self, x)

    def derivative(self, x):
        x = np.asarray(x, dtype=float)
        return self.lam / (self.alpha * np.cos(self.lam * (x - self.mu)) ** 2)


@dataclass(frozen=True)
class AngularShift:
    """g2(theta) = theta - 2 arg(1 + eta exp(i (theta - phi_bar))) (mod 2pi).

    Fixes ``phi_bar`` and ``phi_bar + pi``; the derivative at ``phi_bar`` is
    (1 - eta)/(1 + eta), so ``eta`` in [0, 1) sets the clustering strength.
    """

    phi_bar: float
    eta: float

    def __post_init__(self):
        eta = float(self.eta)
        if not 0.0 <= eta < 1.0:
            raise InvalidArgumentError(f"eta must lie in [0, 1), got {eta}")
        phi = float(self.phi_bar) % TWO_PI
        if phi >= TWO_PI:
            phi = 0.0
        object.__setattr__(self, "eta", eta)
        object.__setattr__(self, "phi_bar", phi)

    def __call__(self, theta):
        return apply_angular(self, theta)

    def lift(self, theta):
        """Continuous, unreduced image of ``theta`` (monotone on the real line)."""
        theta = np.asarray(theta, dtype=float)
        psi = theta - self.phi_bar
        return theta - 2.0 * np.arctan2(self.eta * np.sin(psi),
                                        1.0 + self.eta * np.cos(psi))

    def derivative(self, theta):
        psi = np.asarray(theta, dtype=float) - self.phi_bar
        e = self.eta
        return (1.0 - e * e) / (1.0 + 2.0 * e * np.cos(psi) + e * e)

    def literal(self, theta):
        """The closed-form map exactly as printed (debug/comparison only).

        -i log((e^{i phi} + eta e^{i theta}) / (1 + e^{i phi} eta e^{-i theta}));
        it is not a bijection of the circle.
        """
        theta = np.asarray(theta, dtype=float)
        ep = np.exp(1j * self.phi_bar)
        z = (ep + self.eta * np.exp(1j * theta)) / (1.0 + ep * self.eta * np.exp(-1j * theta))
        return np.real(-1j * np.log(z)) % TWO_PI


def make_radial_shift(beta: float, alpha: float) -> RadialShift:
    return RadialShift(alpha=alpha, beta=beta)


def make_angular_shift(phi_bar: float, eta: float) -> AngularShift:
    return AngularShift(phi_bar=phi_bar, eta=eta)


def apply_radial(rs: RadialShift, x):
    """Map radial coordinates in [0, 2] through g1, clamped to [0, 2]."""
    xa = np.asarray(x, dtype=float)
    if np.any(xa < 0.0) or np.any(xa > 2.0) or np.any(np.isnan(xa)):
        raise DomainError("radial coordinate outside [0, 2]")
    y = rs.beta + np.tan(rs.lam * (xa - rs.mu)) / rs.alpha
    # endpoints are fixed by construction; near tan's pole (large alpha) the
    # formula can overshoot [0, 2] by a few 1e-14, which the clamp removes
    y = np.where(xa == 0.0, 0.0, np.where(xa == 2.0, 2.0, y))
    y = np.clip(y, 0.0, 2.0)
    return float(y) if np.ndim(x) == 0 else y


def apply_angular(ashift: AngularShift, theta):
    """Map angles through g2; result reduced to [0, 2pi)."""
    y = np.remainder(ashift.lift(theta), TWO_PI)
    y = np.where(y >= TWO_PI, 0.0, y)
    return float(y) if np.ndim(theta) == 0 else y
