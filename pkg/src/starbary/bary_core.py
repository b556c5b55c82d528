"""One-dimensional barycentric kernels.

Two families of nodes are supported: Chebyshev points of the second kind on an
interval (algebraic, used radially) and equispaced points on the circle
(trigonometric, used angularly).  Conformally shifted images of either family
reuse the same weights, which turns the polynomial interpolants into linear
rational ones without touching the evaluation code.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import DomainError, InvalidArgumentError

EPS = float(np.finfo(float).eps)
TWO_PI = 2.0 * math.pi


class CstKind(enum.Enum):
    """Angular kernel: cosecant for an odd node count, cotangent for even."""

    COSECANT = "csc"
    COTANGENT = "cot"

    @classmethod
    def for_count(cls, n: int) -> "CstKind":
        return cls.COSECANT if n % 2 else cls.COTANGENT


def _frozen(a) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=float)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class NodeSet1D:
    """Interval nodes with their barycentric weights.

    The endpoint halving of the Chebyshev weights is stored in ``weights``, so
    evaluation treats every node set the same way.
    """

    nodes: np.ndarray
    weights: np.ndarray
    interval: tuple[float, float] = (0.0, 2.0)

    def __post_init__(self):
        nodes = _frozen(self.nodes)
        weights = _frozen(self.weights)
        a, b = map(float, self.interval)
        if nodes.ndim != 1 or nodes.shape != weights.shape:
            raise InvalidArgumentError("nodes and weights must be 1-D of equal length")
        if not a < b:
            raise InvalidArgumentError(f"empty interval ({a}, {b})")
        if np.any(np.diff(nodes) <= 0):
            raise InvalidArgumentError("nodes must be strictly increasing")
        if nodes.size and (nodes[0] < a or nodes[-1] > b):
            raise InvalidArgumentError("nodes must lie in the interval")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "interval", (a, b))

    def __len__(self):
        return self.nodes.size

    @property
    def collision_tol(self) -> float:
        a, b = self.interval
        return 4.0 * EPS * max(abs(a), abs(b))


@dataclass(frozen=True, eq=False)
class PeriodicNodeSet:
    """Nodes on [0, 2pi) with sign weights for the trigonometric kernel.

    For equispaced nodes the weights are simply (-1)^j.  Shifted node sets keep
    the sign of their computational index, with an extra flip for nodes that
    were wrapped into [0, 2pi) when the kernel is the (anti-periodic) cosecant.
    """

    nodes: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        nodes = _frozen(self.nodes)
        weights = _frozen(self.weights)
        if nodes.ndim != 1 or nodes.shape != weights.shape:
            raise InvalidArgumentError("nodes and weights must be 1-D of equal length")
        if nodes.size < 2:
            raise InvalidArgumentError("at least two angular nodes are required")
        if nodes[0] < 0 or nodes[-1] >= TWO_PI or np.any(np.diff(nodes) <= 0):
            raise InvalidArgumentError("nodes must be strictly increasing in [0, 2pi)")
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weights", weights)

    def __len__(self):
        return self.nodes.size

    @property
    def n(self) -> int:
        return self.nodes.size

    @property
    def cst_kind(self) -> CstKind:
        return CstKind.for_count(self.n)

    @property
    def odd(self) -> bool:
        return self.n % 2 == 1

    @classmethod
    def from_lift(cls, lifted) -> "PeriodicNodeSet":
        """Build from the images of equispaced nodes under a circle map lift.

        ``lifted[j]`` is the (unreduced) image of the j-th equispaced node; the
        sequence must be strictly increasing with total span below 2pi.
        """
        lifted = np.asarray(lifted, dtype=float)
        n = lifted.size
        turns = np.floor(lifted / TWO_PI)
        reduced = lifted - turns * TWO_PI
        # reduction can round up onto 2pi; that is one more turn
        over = reduced >= TWO_PI
        reduced[over] -= TWO_PI
        turns[over] += 1
        signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
        if n % 2:
            signs = signs * np.where(turns.astype(np.int64) % 2 == 0, 1.0, -1.0)
        order = np.argsort(reduced, kind="stable")
        return cls(reduced[order], signs[order])


@dataclass(frozen=True)
class EtaWeights:
    eta: np.ndarray


def chebyshev_nodes(n1: int, interval=(0.0, 2.0)) -> NodeSet1D:
    """Chebyshev points of the second kind ``-cos(i pi / n1)`` mapped to the interval.

    Weights are ``(-1)^i delta_i`` with delta halved at both ends.
    """
    if int(n1) != n1 or n1 < 1:
        raise InvalidArgumentError(f"n1 must be a positive integer, got {n1!r}")
    n1 = int(n1)
    a, b = map(float, interval)
    if not a < b:
        raise InvalidArgumentError(f"empty interval ({a}, {b})")
    i = np.arange(n1 + 1)
    # sin form is symmetric and exact at the center: -cos(t) = sin(t - pi/2)
    t = np.sin(math.pi * (2 * i - n1) / (2 * n1))
    nodes = a + (b - a) * (t + 1.0) / 2.0
    nodes[0], nodes[-1] = a, b
    weights = np.where(i % 2 == 0, 1.0, -1.0)
    weights[0] *= 0.5
    weights[-1] *= 0.5
    return NodeSet1D(nodes, weights, (a, b))


def radial_eta_weights(nodes, has0: bool | None = None, has2: bool | None = None) -> EtaWeights:
    """Multipliers eta_i for general radial node sets in [0, 2].

    The four cases cover whether 0 and/or 2 belong to the node set; when both
    are present every eta_i equals one.  Flags default to membership tests.
    """
    x = np.asarray(nodes.nodes if isinstance(nodes, NodeSet1D) else nodes, dtype=float)
    if np.any((x < 0) | (x > 2)):
        raise InvalidArgumentError("radial nodes must lie in [0, 2]")
    if has0 is None:
        has0 = bool(np.any(x == 0.0))
    if has2 is None:
        has2 = bool(np.any(x == 2.0))
    u = (x - 1.0) ** 2
    if has0 and has2:
        eta = np.ones_like(x)
    elif not has0 and not has2:
        eta = np.sqrt(1.0 - u)
    elif has2:
        eta = np.sqrt((1.0 + u) / 2.0)
    else:
        eta = np.sqrt((1.0 - u) / 2.0)
    return EtaWeights(_frozen(eta))


def _as_points(x):
    arr = np.ascontiguousarray(np.atleast_1d(np.asarray(x, dtype=float)).ravel())
    return arr, np.ndim(x) == 0, np.shape(x)


def eval_rational_1d(ns: NodeSet1D, values, x):
    """Evaluate the barycentric interpolant with node set ``ns`` at ``x``.

    ``x`` may be a scalar or an array; points within the collision tolerance of
    a node return the stored datum exactly.
    """
    values = np.ascontiguousarray(values, dtype=float)
    if values.shape != ns.nodes.shape:
        raise InvalidArgumentError(
            f"expected {ns.nodes.size} values, got {values.size}")
    pts, scalar, shape = _as_points(x)
    a, b = ns.interval
    if np.any(pts < a) or np.any(pts > b) or np.any(np.isnan(pts)):
        raise DomainError(f"evaluation point outside [{a}, {b}]")
    out = kernels.bary_eval(ns.nodes, ns.weights, values, pts, ns.collision_tol)
    return float(out[0]) if scalar else out.reshape(shape)


def equispaced_nodes(n2: int) -> PeriodicNodeSet:
    if int(n2) != n2 or n2 < 2:
        raise InvalidArgumentError(f"n2 must be an integer >= 2, got {n2!r}")
    n2 = int(n2)
    j = np.arange(n2)
    return PeriodicNodeSet(TWO_PI * j / n2, np.where(j % 2 == 0, 1.0, -1.0))


class NodeCollision(ArithmeticError):
    """Raised by :func:`cst` when its argument sits on a kernel pole."""


def cst(u: float, kind: CstKind) -> float:
    s = math.sin(u)
    if abs(s) <= 4.0 * EPS:
        raise NodeCollision(u)
    if kind is CstKind.COSECANT:
        return 1.0 / s
    return math.cos(u) / s


def reduce_angle(theta):
    t = np.remainder(theta, TWO_PI)
    return np.where(t >= TWO_PI, 0.0, t)


def eval_trig_1d(pns: PeriodicNodeSet, values, theta):
    """Evaluate the trigonometric barycentric interpolant at ``theta`` (mod 2pi)."""
    values = np.ascontiguousarray(values, dtype=float)
    if values.shape != pns.nodes.shape:
        raise InvalidArgumentError(
            f"expected {pns.nodes.size} values, got {values.size}")
    pts, scalar, shape = _as_points(theta)
    pts = np.ascontiguousarray(reduce_angle(pts))
    out = kernels.trig_eval(pns.nodes, pns.weights, values, pns.odd, pts, 4.0 * EPS)
    return float(out[0]) if scalar else out.reshape(shape)
