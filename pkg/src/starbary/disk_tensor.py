"""Tensor-product rational interpolant on the disk of radius 2.

Polar coordinates identify the disk with the box [0, 2] x [0, 2pi).  The
interpolant combines the radial Chebyshev-type kernel with the angular
trigonometric kernel; shifted grids are evaluated directly at the physical
node positions, so no map has to be inverted at evaluation time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .bary_core import (
    EPS,
    TWO_PI,
    NodeSet1D,
    PeriodicNodeSet,
    chebyshev_nodes,
    equispaced_nodes,
    reduce_angle,
)
from .conformal_maps import AngularShift, RadialShift, apply_radial
from .errors import DomainError, InvalidArgumentError, SamplingError

ANGULAR_TOL = 4.0 * EPS


@dataclass(frozen=True, eq=False)
class TensorGrid:
    """Physical radial/angular nodes and the (n1+1) x n2 sample matrix.

    Row ``i`` holds the samples on the circle of radius ``radial.nodes[i]``,
    column ``j`` those on the ray at angle ``angular.nodes[j]``.
    """

    radial: NodeSet1D
    angular: PeriodicNodeSet
    values: np.ndarray

    def __post_init__(self):
        v = np.ascontiguousarray(self.values, dtype=float)
        if v.shape != (len(self.radial), len(self.angular)):
            raise InvalidArgumentError(
                f"value matrix has shape {v.shape}, expected "
                f"{(len(self.radial), len(self.angular))}")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def n1(self) -> int:
        return len(self.radial) - 1

    @property
    def n2(self) -> int:
        return len(self.angular)

    def with_values(self, values) -> "TensorGrid":
        return TensorGrid(self.radial, self.angular, values)


def shifted_radial_nodes(n1: int, rshift: RadialShift | None = None) -> NodeSet1D:
    base = chebyshev_nodes(n1, (0.0, 2.0))
    if rshift is None:
        return base
    return NodeSet1D(apply_radial(rshift, base.nodes), base.weights, (0.0, 2.0))


def shifted_angular_nodes(n2: int, ashift: AngularShift | None = None) -> PeriodicNodeSet:
    base = equispaced_nodes(n2)
    if ashift is None or ashift.eta == 0.0:
        return base
    return PeriodicNodeSet.from_lift(ashift.lift(base.nodes))


def make_grid(n1: int, n2: int, rshift=None, ashift=None) -> TensorGrid:
    """Node layout without samples (values zero)."""
    _check_sizes(n1, n2)
    radial = shifted_radial_nodes(n1, rshift)
    angular = shifted_angular_nodes(n2, ashift)
    return TensorGrid(radial, angular, np.zeros((n1 + 1, n2)))


def _check_sizes(n1, n2):
    if int(n1) != n1 or n1 < 2:
        raise InvalidArgumentError(f"n1 must be an integer >= 2, got {n1!r}")
    if int(n2) != n2 or n2 < 3:
        raise InvalidArgumentError(f"n2 must be an integer >= 3, got {n2!r}")


def _check_samples(values):
    bad = np.argwhere(~np.isfinite(values))
    if bad.size:
        i, j = map(int, bad[0])
        raise SamplingError(f"non-finite sample {values[i, j]!r} at node ({i}, {j})", (i, j))


def sample_polar(f, radii, angles, vectorized=True):
    """Sample ``f(r, theta)`` on the tensor grid, broadcasting the origin row.

    At r = 0 every angle names the same point, so ``f`` is called once there.
    """
    n1p, n2 = radii.size, angles.size
    values = np.empty((n1p, n2))
    center = radii == 0.0
    rows = np.nonzero(~center)[0]
    if vectorized:
        R, T = np.meshgrid(radii[rows], angles, indexing="ij")
        values[rows] = np.broadcast_to(np.asarray(f(R, T), dtype=float), R.shape)
    else:
        for i in rows:
            for j in range(n2):
                values[i, j] = f(float(radii[i]), float(angles[j]))
    if center.any():
        values[center] = float(f(0.0, float(angles[0])))
    return values


@dataclass(frozen=True, eq=False)
class DiskInterpolant:
    grid: TensorGrid

    def __call__(self, r, theta):
        return eval_disk(self, r, theta)

    @property
    def values(self):
        return self.grid.values


def build_disk_interpolant(n1: int, n2: int, f, rshift: RadialShift | None = None,
                           ashift: AngularShift | None = None,
                           vectorized: bool = True) -> DiskInterpolant:
    """Sample ``f(r, theta)`` at the (possibly shifted) tensor grid.

    With ``vectorized=True`` ``f`` receives 2-D arrays; otherwise it is called
    once per node, sequentially.
    """
    grid = make_grid(n1, n2, rshift, ashift)
    values = sample_polar(f, grid.radial.nodes, grid.angular.nodes, vectorized)
    _check_samples(values)
    return DiskInterpolant(grid.with_values(values))


def _polar_points(r, theta):
    t_arr = np.asarray(theta, dtype=float)
    shape = np.broadcast(np.asarray(r), t_arr).shape
    r_arr = np.ascontiguousarray(np.broadcast_to(np.asarray(r, dtype=float), shape).ravel())
    t_arr = np.ascontiguousarray(reduce_angle(np.broadcast_to(t_arr, shape).ravel()))
    return r_arr, t_arr, shape


def eval_grid(grid: TensorGrid, r, theta, values=None, backend=None):
    """Evaluate the tensor interpolant with sample matrix ``values`` (default: grid's)."""
    r_arr, t_arr, shape = _polar_points(r, theta)
    if np.any(r_arr < 0.0) or np.any(r_arr > 2.0) or np.any(np.isnan(r_arr)):
        raise DomainError("radial coordinate outside [0, 2]")
    v = grid.values if values is None else np.ascontiguousarray(values, dtype=float)
    mod = kernels if backend is None else kernels.get_backend(backend)
    out = mod.disk_eval(grid.radial.nodes, grid.radial.weights,
                        grid.angular.nodes, grid.angular.weights, grid.angular.odd,
                        v, r_arr, t_arr, grid.radial.collision_tol, ANGULAR_TOL)
    # the center is one point: a constant origin row is its exact value
    if grid.radial.nodes[0] == 0.0 and np.all(v[0] == v[0, 0]):
        out[r_arr <= grid.radial.collision_tol] = v[0, 0]
    return float(out[0]) if shape == () else out.reshape(shape)


def eval_disk(di: DiskInterpolant, r, theta, backend=None):
    """Value of the disk interpolant at polar ``(r, theta)``; arrays broadcast."""
    return eval_grid(di.grid, r, theta, backend=backend)


# -- Lebesgue constant -------------------------------------------------------

def _interval_samples(nodes, lo, hi, m, periodic=False):
    """Sample points strictly between consecutive nodes, about ``m`` in total.

    Each gap gets an odd number of equally spaced interior points so its
    midpoint is always included.
    """
    pts = np.concatenate([nodes, [nodes[0] + (hi - lo)]]) if periodic else nodes
    gaps = pts.size - 1
    k = max(3, math.ceil(m / max(gaps, 1)))
    k += (k + 1) % 2
    frac = np.arange(1, k + 1) / (k + 1)
    left, right = pts[:-1], pts[1:]
    samples = (left[:, None] + (right - left)[:, None] * frac[None, :]).ravel()
    if not periodic:
        return samples
    return np.remainder(samples, hi - lo)


def radial_lebesgue_function(radial: NodeSet1D, x):
    x = np.asarray(x, dtype=float)
    with np.errstate(divide="ignore", invalid="ignore"):
        k = radial.weights[None, :] / (x[:, None] - radial.nodes[None, :])
        lf = np.abs(k).sum(axis=1) / np.abs(k.sum(axis=1))
    hit = np.isclose(x[:, None], radial.nodes[None, :], rtol=0, atol=radial.collision_tol).any(axis=1)
    return np.where(hit, 1.0, lf)


def angular_lebesgue_function(angular: PeriodicNodeSet, theta):
    theta = np.asarray(theta, dtype=float)
    h = 0.5 * (theta[:, None] - angular.nodes[None, :])
    s = np.sin(h)
    with np.errstate(divide="ignore", invalid="ignore"):
        k = angular.weights / s if angular.odd else angular.weights * np.cos(h) / s
        lf = np.abs(k).sum(axis=1) / np.abs(k.sum(axis=1))
    hit = (np.abs(s) <= ANGULAR_TOL).any(axis=1)
    return np.where(hit, 1.0, lf)


def lebesgue_estimate(grid: TensorGrid, m1: int | None = None, m2: int | None = None,
                      full_scan: bool = False) -> float:
    """Estimate of the Lebesgue constant of the tensor interpolant.

    By default the product of the two one-dimensional maxima.  ``full_scan``
    instead takes the maximum of the 2-D Lebesgue function over the lattice
    of all sample pairs (for cross-validation; same value up to rounding).
    """
    m1 = 8 * (grid.n1 + 1) if m1 is None else int(m1)
    m2 = 8 * grid.n2 if m2 is None else int(m2)
    rs = _interval_samples(grid.radial.nodes, 0.0, 2.0, m1)
    ts = _interval_samples(grid.angular.nodes, 0.0, TWO_PI, m2, periodic=True)
    lr = radial_lebesgue_function(grid.radial, rs)
    lt = angular_lebesgue_function(grid.angular, ts)
    if full_scan:
        return float(np.max(np.multiply.outer(lr, lt)))
    return float(lr.max() * lt.max())


def lebesgue_function_2d(grid: TensorGrid, r, theta):
    """Sum of absolute tensor basis values at the given polar points."""
    r = np.asarray(r, dtype=float).ravel()
    theta = reduce_angle(np.asarray(theta, dtype=float).ravel())
    out = np.empty(r.size)
    step = 4096
    for lo in range(0, r.size, step):
        sl = slice(lo, lo + step)
        out[sl] = (radial_lebesgue_function(grid.radial, r[sl])
                   * angular_lebesgue_function(grid.angular, theta[sl]))
    return out
