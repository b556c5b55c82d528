"""Compare the compiled and numpy evaluation backends.

Times 1D Chebyshev, 1D trigonometric and 2D disk evaluation on the same
random points with both backends and prints the speedup.  Run with

    python benchmarks/bench_kernels.py --points 20000 --repeat 5
"""

import argparse
import sys
import time

import numpy as np

from starbary import kernels
from starbary.bary_core import EPS, TWO_PI, chebyshev_nodes, equispaced_nodes
from starbary.disk_tensor import build_disk_interpolant, eval_disk


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def cases(points, n1, n2, seed=0):
    rng = np.random.default_rng(seed)
    r = rng.uniform(0, 2, points)
    t = rng.uniform(0, TWO_PI, points)
    rad, ang = chebyshev_nodes(n1), equispaced_nodes(n2)
    rv, av = rng.standard_normal(n1 + 1), rng.standard_normal(n2)
    di = build_disk_interpolant(n1, n2, lambda a, b: np.exp(a * np.cos(b)))
    return {
        "chebyshev_1d": lambda be: kernels.get_backend(be).bary_eval(
            rad.nodes, rad.weights, rv, r, rad.collision_tol),
        "trig_1d": lambda be: kernels.get_backend(be).trig_eval(
            ang.nodes, ang.weights, av, ang.odd, t, 4.0 * EPS),
        "disk_2d": lambda be: eval_disk(di, r, t, backend=be),
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--points", type=int, default=20_000)
    p.add_argument("--n1", type=int, default=40)
    p.add_argument("--n2", type=int, default=120)
    p.add_argument("--repeat", type=int, default=5)
    args = p.parse_args(argv)

    try:
        kernels.get_backend("cython")
        backends = ["cython", "numpy"]
    except ImportError:
        print("compiled kernels not built; timing numpy only", file=sys.stderr)
        backends = ["numpy"]

    print(f"{'kernel':<14}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name, fn in cases(args.points, args.n1, args.n2).items():
        out = {b: fn(b) for b in backends}
        if len(backends) == 2:
            diff = np.max(np.abs(out["cython"] - out["numpy"]))
            assert diff <= 1e-12, f"{name}: backends disagree by {diff:.2e}"
        times = {b: _best(lambda: fn(b), args.repeat) for b in backends}
        line = f"{name:<14}" + "".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends)
        if len(backends) == 2:
            line += f"{times['numpy'] / times['cython']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
