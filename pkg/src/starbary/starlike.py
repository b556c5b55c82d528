"""Interpolation on domains that are starlike with respect to the origin.

A domain is given by its boundary radius rho(theta) > 0.  The map
S(xi, phi) = (2 xi / rho(phi), phi) carries it onto the disk of radius 2, so
the interpolation nodes are the homothetic images of the boundary intersected
with rays, and the interpolant is the disk interpolant composed with S.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .bary_core import TWO_PI, PeriodicNodeSet, eval_trig_1d, reduce_angle
from .conformal_maps import AngularShift, RadialShift
from .disk_tensor import (
    ANGULAR_TOL,
    DiskInterpolant,
    TensorGrid,
    _check_samples,
    eval_grid,
    lebesgue_function_2d,
    make_grid,
)
from .errors import (
    DomainError,
    InvalidArgumentError,
    InvalidBoundaryError,
    NotStarlikeError,
    OutsideDomainError,
)

log = logging.getLogger(__name__)

SCAN_POINTS = 4096
BOUNDARY_SLACK = 1e-12


class SmoothnessWarning(UserWarning):
    """The boundary radius looks non-smooth; convergence will suffer."""


@dataclass(frozen=True, eq=False)
class StarlikeDomain:
    """Domain {(xi, phi): xi <= rho(phi)}.

    ``rho`` must accept numpy arrays.  ``smoother`` is set when rho was built
    from boundary samples (the trigonometric interpolant through them).
    """

    rho: Callable
    rho_min: float = field(default=float("nan"))
    rho_max: float = field(default=float("nan"))
    smoother: tuple | None = None

    def radius(self, theta):
        return np.asarray(self.rho(np.asarray(theta, dtype=float)), dtype=float)


def _validate(rho, smoother=None) -> StarlikeDomain:
    theta = np.arange(SCAN_POINTS) * (TWO_PI / SCAN_POINTS)
    with np.errstate(all="ignore"):
        vals = np.broadcast_to(np.asarray(rho(theta), dtype=float), theta.shape)
        shifted = np.broadcast_to(np.asarray(rho(theta + TWO_PI), dtype=float), theta.shape)
    if not np.all(np.isfinite(vals)):
        raise InvalidBoundaryError("boundary radius is not finite everywhere")
    if np.any(vals <= 0.0):
        k = int(np.argmax(vals <= 0.0))
        raise NotStarlikeError(
            f"rho({theta[k]:.6g}) = {vals[k]:.6g} <= 0: domain is not starlike "
            "with respect to the origin")
    if np.max(np.abs(shifted - vals)) > 1e-9 * max(1.0, float(vals.max())):
        raise InvalidBoundaryError("boundary radius is not 2pi-periodic")
    _smoothness_check(vals)
    return StarlikeDomain(rho, float(vals.min()), float(vals.max()), smoother)


def _smoothness_check(vals):
    h = TWO_PI / vals.size
    d2 = np.abs(np.roll(vals, -1) - 2.0 * vals + np.roll(vals, 1))
    mean = d2.mean()
    # a kink shows up as an O(1) slope change across a single scan step
    slope_jump = d2.max() / h
    if (mean > 0 and d2.max() > 1e3 * mean) or slope_jump > 0.25 * vals.max():
        warnings.warn("boundary radius appears non-smooth; the transplanted "
                      "interpolant may converge slowly or not at all",
                      SmoothnessWarning, stacklevel=3)


def domain_from_function(rho: Callable) -> StarlikeDomain:
    return _validate(rho)


def domain_from_samples(thetas, rhos) -> StarlikeDomain:
    """Domain whose radius interpolates boundary samples trigonometrically.

    Uses the barycentric trigonometric formula with weights (-1)^k at the
    given angles, which for equispaced angles is the balanced trigonometric
    polynomial.
    """
    thetas = np.asarray(thetas, dtype=float).ravel()
    rhos = np.asarray(rhos, dtype=float).ravel()
    if thetas.size != rhos.size:
        raise InvalidArgumentError("thetas and rhos differ in length")
    if thetas.size < 3:
        raise InvalidArgumentError("at least three boundary samples are required")
    if np.any(rhos <= 0) or not np.all(np.isfinite(rhos)):
        raise InvalidArgumentError("boundary samples must be positive")
    if thetas[0] < 0 or thetas[-1] >= TWO_PI or np.any(np.diff(thetas) <= 0):
        raise InvalidArgumentError("sample angles must increase strictly in [0, 2pi)")
    n = thetas.size
    pns = PeriodicNodeSet(thetas, np.where(np.arange(n) % 2 == 0, 1.0, -1.0))
    samples = rhos.copy()
    samples.setflags(write=False)

    def rho(theta):
        return eval_trig_1d(pns, samples, theta)

    return _validate(rho, smoother=(pns, samples))


def read_boundary_file(path):
    """Read a two-column ``theta rho`` text file ('#' starts a comment)."""
    data = np.loadtxt(path, comments="#", ndmin=2)
    if data.shape[1] != 2:
        raise InvalidArgumentError(f"{path}: expected two columns, found {data.shape[1]}")
    return data[:, 0], data[:, 1]


def domain_from_file(path) -> StarlikeDomain:
    return domain_from_samples(*read_boundary_file(path))


# -- the transplant map --------------------------------------------------------

def map_S(domain: StarlikeDomain, xi, phi):
    """(xi, phi) in the domain -> (r, theta) on the radius-2 disk."""
    xi = np.asarray(xi, dtype=float)
    theta = reduce_angle(np.asarray(phi, dtype=float))
    rho = domain.radius(theta)
    if np.any(xi < 0) or np.any(xi > rho * (1.0 + BOUNDARY_SLACK)):
        raise OutsideDomainError("point lies outside the domain")
    r = np.clip(2.0 * xi / rho, 0.0, 2.0)
    if r.ndim == 0:
        return float(r), float(theta)
    return r, np.broadcast_to(theta, r.shape)


def map_S_inv(domain: StarlikeDomain, r, theta):
    r = np.asarray(r, dtype=float)
    if np.any(r < 0) or np.any(r > 2) or np.any(np.isnan(r)):
        raise DomainError("radial coordinate outside [0, 2]")
    theta = np.asarray(theta, dtype=float)
    xi = r * domain.radius(theta) / 2.0
    if xi.ndim == 0:
        return float(xi), float(theta)
    return xi, np.broadcast_to(theta, xi.shape)


def _to_polar(x, y):
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return np.hypot(x, y), reduce_angle(np.arctan2(y, x))


def contains(domain: StarlikeDomain, x, y):
    """True where (x, y) lies in the closed domain (relative slack 1e-12)."""
    xi, phi = _to_polar(x, y)
    inside = xi <= domain.radius(phi) * (1.0 + BOUNDARY_SLACK)
    return bool(inside) if inside.ndim == 0 else inside


# -- transplanted interpolant -------------------------------------------------

@dataclass(frozen=True, eq=False)
class DomainInterpolant:
    domain: StarlikeDomain
    disk: DiskInterpolant
    rshift: RadialShift | None = None
    ashift: AngularShift | None = None

    @property
    def grid(self) -> TensorGrid:
        return self.disk.grid

    def __call__(self, x, y):
        return eval_domain(self, x, y)

    def nodes_cartesian(self):
        """Cartesian coordinates (X, Y) of the homothetic grid, shape (n1+1, n2)."""
        xi, phi = self.nodes_polar()
        return xi * np.cos(phi), xi * np.sin(phi)

    def nodes_polar(self):
        g = self.grid
        phi = g.angular.nodes[None, :]
        xi = g.radial.nodes[:, None] * self.domain.radius(g.angular.nodes)[None, :] / 2.0
        return xi, np.broadcast_to(phi, xi.shape)


def build_domain_interpolant(domain: StarlikeDomain, n1: int, n2: int, f,
                             rshift: RadialShift | None = None,
                             ashift: AngularShift | None = None,
                             vectorized: bool = True) -> DomainInterpolant:
    """Sample the Cartesian function ``f(x, y)`` on the homothetic grid.

    Node (i, j) sits at polar (y_i rho(phi_j) / 2, phi_j), where y_i and phi_j
    are the shifted radial and angular nodes.
    """
    grid = make_grid(n1, n2, rshift, ashift)
    rho_j = domain.radius(grid.angular.nodes)
    xi = grid.radial.nodes[:, None] * rho_j[None, :] / 2.0
    phi = np.broadcast_to(grid.angular.nodes[None, :], xi.shape)
    X, Y = xi * np.cos(phi), xi * np.sin(phi)
    values = np.empty(xi.shape)
    center = grid.radial.nodes == 0.0
    rows = np.nonzero(~center)[0]
    if vectorized:
        values[rows] = np.broadcast_to(np.asarray(f(X[rows], Y[rows]), dtype=float),
                                       X[rows].shape)
    else:
        for i in rows:
            for j in range(xi.shape[1]):
                values[i, j] = f(float(X[i, j]), float(Y[i, j]))
    if center.any():
        values[center] = float(f(0.0, 0.0))
    _check_samples(values)
    disk = DiskInterpolant(grid.with_values(values))
    return DomainInterpolant(domain, disk, rshift, ashift)


def _snap_to_nodes(angular: PeriodicNodeSet, phi):
    """Replace angles that collide with an angular node by the node itself.

    The kernel already treats such angles as the node; snapping also makes
    rho(phi) exact there, so Cartesian node coordinates hit the radial node.
    """
    phi = np.asarray(phi, dtype=float)
    nodes = angular.nodes
    k = np.searchsorted(nodes, phi)
    out = phi
    for cand in (np.remainder(k - 1, nodes.size), np.remainder(k, nodes.size)):
        hit = np.abs(np.sin(0.5 * (phi - nodes[cand]))) <= ANGULAR_TOL
        if np.any(hit):
            out = np.where(hit, nodes[cand], out)
    return out


def eval_domain(di: DomainInterpolant, x, y, backend=None):
    """Evaluate at Cartesian points inside the domain; no extrapolation."""
    xi, phi = _to_polar(x, y)
    phi = _snap_to_nodes(di.grid.angular, phi)
    rho = di.domain.radius(phi)
    if np.any(xi > rho * (1.0 + BOUNDARY_SLACK)) or np.any(np.isnan(xi)):
        raise OutsideDomainError("evaluation point outside the domain")
    r = np.clip(2.0 * xi / rho, 0.0, 2.0)
    return eval_grid(di.grid, r, phi, backend=backend)


def eval_domain_polar(di: DomainInterpolant, xi, phi, backend=None):
    """Evaluate at domain polar coordinates (xi, phi)."""
    r, theta = map_S(di.domain, xi, phi)
    return eval_grid(di.grid, r, theta, backend=backend)


def domain_lebesgue_estimate(di: DomainInterpolant, m1=None, m2=None) -> float:
    """Lebesgue constant estimated by scanning the domain itself.

    The disk sample lattice is mapped into the domain by S^-1 and every point
    is pushed back through the Cartesian evaluation path before the Lebesgue
    function is evaluated.
    """
    from .disk_tensor import _interval_samples

    g = di.grid
    m1 = 8 * (g.n1 + 1) if m1 is None else int(m1)
    m2 = 8 * g.n2 if m2 is None else int(m2)
    rs = _interval_samples(g.radial.nodes, 0.0, 2.0, m1)
    ts = _interval_samples(g.angular.nodes, 0.0, TWO_PI, m2, periodic=True)
    R, T = np.meshgrid(rs, ts, indexing="ij")
    xi, phi = map_S_inv(di.domain, R, T)
    X, Y = xi * np.cos(phi), xi * np.sin(phi)
    pxi, pphi = _to_polar(X, Y)
    r = np.clip(2.0 * pxi / di.domain.radius(pphi), 0.0, 2.0)
    return float(np.max(lebesgue_function_2d(g, r, pphi)))
