"""Built-in test domains and functions, error measurement and convergence tables."""

from __future__ import annotations

import csv
import io
import json
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy import special

from .bary_core import TWO_PI
from .conformal_maps import AngularShift, RadialShift
from .errors import EmptyGridError, InvalidArgumentError
from .starlike import (
    StarlikeDomain,
    build_domain_interpolant,
    contains,
    domain_from_function,
    domain_from_samples,
    eval_domain,
)

SMOOTHING_SAMPLES = 64
FRONT = (-0.6, 0.6)  # as printed; the tables use the reflection (0.6, -0.6)
TABLE_FRONT = (0.6, -0.6)
F2_EPSILON = 100.0
SHIFT_ALPHA = 2.8
SHIFT_ETA = 0.65


def erf(x):
    """Error function; scalars in, float out; arrays elementwise."""
    if np.ndim(x) == 0:
        return math.erf(float(x))
    return special.erf(np.asarray(x, dtype=float))


def f1(x, y):
    return 3.0 * np.exp(-np.square(x) + y + 1.0) + 3.0


_F2_SCALE = math.sqrt(F2_EPSILON / 2.0)
_F2_NORM = math.erf(_F2_SCALE)


def f2(x, y):
    """Function with a steep front at (-0.6, 0.6)."""
    u = np.asarray(x, dtype=float) + 0.6
    v = np.asarray(y, dtype=float) - 0.6
    return (40.0 * erf(_F2_SCALE * u) / _F2_NORM
            * np.exp(-30.0 * u * u) * np.exp(-60.0 * v * v))


def f2_tables(x, y):
    """The front function placed as in the published tables.

    Same profile as :func:`f2`, reflected through the origin: the front sits at
    (0.6, -0.6), polar (0.6 sqrt 2, 7 pi / 4).
    """
    return f2(-np.asarray(x, dtype=float), -np.asarray(y, dtype=float))


def constant(c):
    def f(x, y):
        return np.full(np.broadcast(np.asarray(x), np.asarray(y)).shape, float(c))
    return f


@dataclass(frozen=True)
class NamedFunction:
    name: str
    func: object
    front: tuple[float, float] | None = None

    def __call__(self, x, y):
        return self.func(x, y)


FUNCTIONS = {
    "f1": NamedFunction("f1", f1),
    "f2": NamedFunction("f2", f2_tables, TABLE_FRONT),
    "f2_literal": NamedFunction("f2_literal", f2, FRONT),
}


def get_function(name: str) -> NamedFunction:
    try:
        return FUNCTIONS[name]
    except KeyError:
        raise InvalidArgumentError(
            f"unknown function {name!r}; valid names: {', '.join(FUNCTIONS)}") from None


def rho_limacon(t):
    return 1.5 + 1.2 * np.cos(t)


def rho_butterfly1(t):
    return 1.0 - np.cos(t) * np.sin(3.0 * t)


def rho_butterfly2(t):
    return (7.5 - np.sin(t) + 4.0 * np.sin(3.0 * t) - np.sin(7.0 * t)
            + 3.0 * np.cos(2.0 * t))


def rho_asterisk(t):
    return np.sin(10.0 * t) + 2.2


def rho_square(t):
    """Polar radius of the square [-1, 1]^2 (has corners)."""
    t = np.asarray(t, dtype=float)
    with np.errstate(divide="ignore"):
        return np.minimum(1.0 / np.abs(np.cos(t)), 1.0 / np.abs(np.sin(t)))


@dataclass(frozen=True)
class BuiltinDomain:
    name: str
    domain: StarlikeDomain
    rect: tuple[float, float, float, float]  # xmin, xmax, ymin, ymax

    @property
    def rho(self):
        return self.domain.rho


_BUILTIN_SPECS = {
    "limacon": (rho_limacon, (-1.0, 3.0, -2.0, 2.0)),
    "butterfly1": (rho_butterfly1, (-2.0, 2.0, -2.0, 2.0)),
    "butterfly2": (rho_butterfly2, (-13.0, 13.0, -10.0, 10.0)),
    "asterisk": (rho_asterisk, (-4.0, 4.0, -4.0, 4.0)),
    "square": (rho_square, (-2.0, 2.0, -2.0, 2.0)),
    "square_smoothed": (None, (-2.0, 2.0, -2.0, 2.0)),
}
BUILTIN_NAMES = tuple(_BUILTIN_SPECS)
_cache: dict[str, BuiltinDomain] = {}


def builtin_domain(name: str) -> BuiltinDomain:
    if name not in _BUILTIN_SPECS:
        raise InvalidArgumentError(
            f"unknown domain {name!r}; valid names: {', '.join(BUILTIN_NAMES)}")
    if name in _cache:
        return _cache[name]
    rho, rect = _BUILTIN_SPECS[name]
    if name == "square_smoothed":
        t = np.arange(SMOOTHING_SAMPLES) * (TWO_PI / SMOOTHING_SAMPLES)
        dom = domain_from_samples(t, rho_square(t))
    elif name == "square":
        import warnings
        from .starlike import SmoothnessWarning

        with warnings.catch_warnings():
            # the corners are the point of this domain
            warnings.simplefilter("ignore", SmoothnessWarning)
            dom = domain_from_function(rho)
    else:
        dom = domain_from_function(rho)
    bd = BuiltinDomain(name, dom, rect)
    _cache[name] = bd
    return bd


def front_shifts(domain: StarlikeDomain, front=TABLE_FRONT, alpha=SHIFT_ALPHA,
                 eta=SHIFT_ETA, phi_bar=None):
    """Shifts clustering nodes at a Cartesian front location.

    The angular center is the polar angle of the front unless ``phi_bar`` is
    given; the radial center is the front's disk radius 2 |front| / rho(phi_bar),
    capped just inside (0, 2) for fronts near or beyond the boundary.
    """
    fx, fy = front
    if phi_bar is None:
        phi_bar = math.atan2(fy, fx) % TWO_PI
    beta = 2.0 * math.hypot(fx, fy) / float(domain.radius(phi_bar))
    beta = min(max(beta, 1e-3), 2.0 - 1e-3)
    return RadialShift(alpha=alpha, beta=beta), AngularShift(phi_bar=phi_bar, eta=eta)


@dataclass
class ErrorReport:
    n1: int
    n2: int
    max_abs_error: float
    points_evaluated: int
    elapsed: float
    domain: str = ""
    function: str = ""
    shifted: bool = False
    shift: dict = field(default_factory=dict)

    @property
    def finite(self) -> bool:
        return math.isfinite(self.max_abs_error)


def evaluation_lattice(rect, m=170):
    """m x m lattice over the rectangle, corners included."""
    x0, x1, y0, y1 = rect
    X, Y = np.meshgrid(np.linspace(x0, x1, m), np.linspace(y0, y1, m), indexing="xy")
    return X.ravel(), Y.ravel()


def _workers():
    """Worker threads for error grids: all cores, capped by STARBARY_WORKERS."""
    n = os.cpu_count() or 1
    cap = os.environ.get("STARBARY_WORKERS")
    if cap:
        try:
            n = min(n, max(1, int(cap)))
        except ValueError:
            pass
    return n


def _max_error(di, f, x, y, workers):
    def block(sl):
        with np.errstate(all="ignore"):
            approx = eval_domain(di, x[sl], y[sl])
            exact = np.asarray(f(x[sl], y[sl]), dtype=float)
            err = np.abs(approx - exact)
        if not np.all(np.isfinite(err)):
            return math.inf
        return float(err.max()) if err.size else 0.0

    if workers <= 1:
        return block(slice(None))
    size = math.ceil(x.size / workers)
    slices = [slice(k, k + size) for k in range(0, x.size, size)]
    with ThreadPoolExecutor(workers) as pool:
        return max(pool.map(block, slices))


def error_on_grid(di, f, rect, m: int = 170, workers: int | None = None) -> ErrorReport:
    """Maximum |f - I[f]| over the lattice points inside the domain."""
    t0 = time.perf_counter()
    x, y = evaluation_lattice(rect, m)
    inside = contains(di.domain, x, y)
    x, y = x[inside], y[inside]
    if x.size == 0:
        raise EmptyGridError("no evaluation lattice point lies inside the domain")
    err = _max_error(di, f, x, y, _workers() if workers is None else workers)
    g = di.grid
    shift = {}
    if di.rshift is not None:
        shift.update(alpha=di.rshift.alpha, beta=di.rshift.beta)
    if di.ashift is not None:
        shift.update(eta=di.ashift.eta, phi=di.ashift.phi_bar)
    return ErrorReport(g.n1, g.n2, err, int(x.size), time.perf_counter() - t0,
                       shifted=bool(shift), shift=shift)


def convergence_table(domain, f, sizes, rshift=None, ashift=None, *, domain_name="",
                      function_name="", rect=None, m=170):
    """One ErrorReport per (n1, n2), in order."""
    if isinstance(domain, str):
        bd = builtin_domain(domain)
        domain_name = domain_name or bd.name
        rect = bd.rect if rect is None else rect
        domain = bd.domain
    if isinstance(f, str):
        function_name = function_name or f
        f = get_function(f)
    if rect is None:
        raise InvalidArgumentError("an evaluation rectangle is required")
    sizes = list(sizes)
    if not sizes:
        raise InvalidArgumentError("at least one grid size is required")
    reports = []
    for n1, n2 in sizes:
        t0 = time.perf_counter()
        di = build_domain_interpolant(domain, n1, n2, f, rshift, ashift)
        rep = error_on_grid(di, f, rect, m)
        rep.elapsed = time.perf_counter() - t0
        rep.domain, rep.function = domain_name, function_name
        reports.append(rep)
    return reports


CSV_HEADER = ["n1", "n2", "domain", "function", "shifted", "max_abs_error",
              "points", "elapsed_s"]


def _fmt_error(e):
    return f"{e:.9e}" if math.isfinite(e) else "Inf"


def table_csv(reports, timings=True) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in reports:
        w.writerow([r.n1, r.n2, r.domain, r.function, str(r.shifted).lower(),
                    _fmt_error(r.max_abs_error), r.points_evaluated,
                    f"{r.elapsed:.3f}" if timings else ""])
    return buf.getvalue()


def table_json(reports, timings=True) -> str:
    rows = []
    for r in reports:
        d = asdict(r)
        d["max_abs_error"] = _fmt_error(r.max_abs_error)
        if not timings:
            d.pop("elapsed")
        rows.append(d)
    return json.dumps(rows, indent=2, sort_keys=True) + "\n"
