import math

import numpy as np
import pytest

from starbary import kernels
from starbary.bary_core import TWO_PI, chebyshev_nodes, equispaced_nodes
from starbary.conformal_maps import AngularShift, RadialShift
from starbary.disk_tensor import (
    build_disk_interpolant,
    eval_disk,
    eval_grid,
    lebesgue_estimate,
    lebesgue_function_2d,
    make_grid,
)
from starbary.errors import DomainError, InvalidArgumentError, SamplingError

from oracles import separable_disk

FIG2 = (RadialShift(2.8, 0.75), AngularShift(math.pi / 3, 0.65))


def smooth(r, t):
    return np.exp(0.3 * r * np.cos(t)) + r * r * np.sin(2 * t)


def test_figure1_grid():
    g = make_grid(7, 15)
    np.testing.assert_allclose(g.radial.nodes, 1 - np.cos(np.arange(8) * math.pi / 7), atol=1e-15)
    np.testing.assert_allclose(g.angular.nodes, TWO_PI * np.arange(15) / 15)
    assert g.values.shape == (8, 15)


def test_figure2_grid():
    g = make_grid(7, 15, *FIG2)
    rs, ash = FIG2
    np.testing.assert_allclose(g.radial.nodes, rs(chebyshev_nodes(7).nodes))
    np.testing.assert_allclose(np.sort(g.angular.nodes), np.sort(ash(equispaced_nodes(15).nodes)))
    assert g.radial.nodes[0] == 0.0 and g.radial.nodes[-1] == 2.0


@pytest.mark.parametrize("n1,n2", [(1, 8), (4, 2), (2.5, 8)])
def test_grid_sizes(n1, n2):
    with pytest.raises(InvalidArgumentError):
        make_grid(n1, n2)


def test_constant_samples():
    di = build_disk_interpolant(5, 9, lambda r, t: np.ones_like(r))
    assert np.all(di.values == 1.0)


def test_origin_broadcast():
    di = build_disk_interpolant(6, 10, lambda r, t: r * np.cos(t) + 2.0)
    assert np.all(di.values[0] == 2.0)


def test_sequential_sampling_matches():
    f = lambda r, t: math.exp(r) * math.cos(t) if np.isscalar(r) else np.exp(r) * np.cos(t)
    a = build_disk_interpolant(5, 7, f)
    b = build_disk_interpolant(5, 7, f, vectorized=False)
    np.testing.assert_array_equal(a.values, b.values)


def test_sampling_error_index():
    def f(r, t):
        out = np.ones_like(r)
        if out.ndim == 2:
            out[2, 3] = np.nan
        return out

    with pytest.raises(SamplingError) as exc:
        build_disk_interpolant(4, 6, f)
    # row 0 (origin) is sampled separately, so array row 2 is grid row 3
    assert exc.value.index == (3, 3)


@pytest.mark.parametrize("shift", [False, True])
@pytest.mark.parametrize("n1,n2", [(2, 3), (7, 15), (10, 30), (40, 120)])
def test_node_exactness(n1, n2, shift):
    di = build_disk_interpolant(n1, n2, smooth, *(FIG2 if shift else (None, None)))
    g = di.grid
    R, T = np.meshgrid(g.radial.nodes, g.angular.nodes, indexing="ij")
    np.testing.assert_array_equal(eval_disk(di, R, T), di.values)


@pytest.mark.parametrize("shift", [False, True])
def test_constant_reproduction(shift):
    rng = np.random.default_rng(2)
    di = build_disk_interpolant(16, 33, lambda r, t: np.full(np.shape(r), 7.25),
                                *(FIG2 if shift else (None, None)))
    v = eval_disk(di, rng.uniform(0, 2, 10_000), rng.uniform(-7, 14, 10_000))
    assert np.max(np.abs(v - 7.25)) <= 1e-13


def test_separable_oracle_example():
    di = build_disk_interpolant(4, 4, lambda r, t: r * np.cos(t))
    ref = separable_disk(di.grid.radial.nodes, di.values, 1.3, 2.1)
    assert eval_disk(di, 1.3, 2.1) == pytest.approx(ref, abs=1e-12)
    assert ref == pytest.approx(1.3 * math.cos(2.1), abs=1e-14)


@pytest.mark.parametrize("n1,n2", [(3, 5), (8, 16), (10, 15)])
def test_separability(n1, n2):
    rng = np.random.default_rng(n1 * n2)
    di = build_disk_interpolant(n1, n2, smooth)
    vals = rng.standard_normal(di.values.shape)
    g = di.grid
    for r, t in zip(rng.uniform(0, 2, 40), rng.uniform(0, TWO_PI, 40)):
        ref = separable_disk(g.radial.nodes, vals, r, t)
        assert eval_grid(g, r, t, values=vals) == pytest.approx(ref, abs=1e-12)


def test_one_dimensional_fallbacks():
    di = build_disk_interpolant(8, 12, smooth)
    g = di.grid
    rng = np.random.default_rng(3)
    t = rng.uniform(0, TWO_PI, 20)
    # on a node circle the radial kernel is a unit vector
    from starbary.bary_core import eval_trig_1d, eval_rational_1d
    np.testing.assert_array_equal(eval_disk(di, g.radial.nodes[3], t),
                                  eval_trig_1d(g.angular, di.values[3], t))
    r = rng.uniform(0, 2, 20)
    np.testing.assert_allclose(eval_disk(di, r, g.angular.nodes[5]),
                               eval_rational_1d(g.radial, di.values[:, 5], r), rtol=0, atol=1e-15)


def test_rotation_equivariance():
    n1, n2 = 9, 18
    h = TWO_PI / n2
    a = build_disk_interpolant(n1, n2, smooth)
    b = build_disk_interpolant(n1, n2, lambda r, t: smooth(r, t - h))
    np.testing.assert_allclose(b.values[1:], np.roll(a.values, 1, axis=1)[1:], atol=1e-15)
    rng = np.random.default_rng(4)
    r, t = rng.uniform(0, 2, 500), rng.uniform(0, TWO_PI, 500)
    np.testing.assert_allclose(eval_disk(b, r, t), eval_disk(a, r, t - h), rtol=0, atol=1e-12)


def test_eval_domain_errors():
    di = build_disk_interpolant(4, 6, smooth)
    for r in (-1e-9, 2.0 + 1e-12, float("nan")):
        with pytest.raises(DomainError):
            eval_disk(di, r, 0.0)


def test_eval_shapes():
    di = build_disk_interpolant(4, 6, smooth)
    assert isinstance(eval_disk(di, 0.5, 1.0), float)
    assert eval_disk(di, np.ones((2, 3)), 0.3).shape == (2, 3)
    assert di(np.array([0.5]), np.array([1.0])).shape == (1,)


def test_convergence_smooth():
    rng = np.random.default_rng(6)
    r, t = rng.uniform(0, 2, 2000), rng.uniform(0, TWO_PI, 2000)
    errs = []
    for n1, n2 in [(3, 6), (5, 10), (8, 16), (24, 48)]:
        di = build_disk_interpolant(n1, n2, smooth)
        errs.append(np.max(np.abs(eval_disk(di, r, t) - smooth(r, t))))
    assert errs[0] > errs[1] > errs[2] and errs[3] < 1e-14


# -- backends -------------------------------------------------------------------------

@pytest.mark.skipif(kernels.BACKEND != "cython", reason="compiled kernels not built")
@pytest.mark.parametrize("shift", [False, True])
def test_backends_agree(shift):
    rng = np.random.default_rng(8)
    di = build_disk_interpolant(20, 41, smooth, *(FIG2 if shift else (None, None)))
    g = di.grid
    r = np.concatenate([rng.uniform(0, 2, 3000), g.radial.nodes[[0, 4, 20]]])
    t = np.concatenate([rng.uniform(0, TWO_PI, 3000), g.angular.nodes[[0, 7, 40]]])
    a = eval_disk(di, r, t, backend="cython")
    b = eval_disk(di, r, t, backend="numpy")
    np.testing.assert_allclose(a, b, rtol=1e-13, atol=1e-14)
    R, T = np.meshgrid(g.radial.nodes, g.angular.nodes, indexing="ij")
    np.testing.assert_array_equal(eval_disk(di, R, T, backend="numpy"), di.values)


def test_unknown_backend():
    with pytest.raises(ValueError):
        kernels.get_backend("fortran")


# -- Lebesgue -------------------------------------------------------------------------

def test_lebesgue_two_point_radial():
    from starbary.disk_tensor import radial_lebesgue_function
    ns = chebyshev_nodes(1)
    x = np.linspace(0, 2, 1001)
    assert np.max(radial_lebesgue_function(ns, x)) <= 1 + 1e-10


def test_lebesgue_bound_16_32():
    lam = lebesgue_estimate(make_grid(16, 32))
    assert 1 < lam <= 10 * math.log(16) * math.log(32)


def test_lebesgue_full_scan_agrees():
    for shifts in ((None, None), FIG2):
        g = make_grid(12, 20, *shifts)
        a = lebesgue_estimate(g)
        b = lebesgue_estimate(g, full_scan=True)
        assert a == pytest.approx(b, rel=1e-12)


# regression values of the estimator at (n, 2n), first recorded run
LEBESGUE_REF = {16: 7.432308788184231, 32: 10.039623110773721,
                64: 13.032567054408212, 128: 16.413841268309653}


def test_lebesgue_doubling_growth():
    vals = {n: lebesgue_estimate(make_grid(n, 2 * n)) for n in LEBESGUE_REF}
    for n, ref in LEBESGUE_REF.items():
        assert vals[n] == pytest.approx(ref, rel=1e-12)
    for n in (16, 32, 64):
        # growth per doubling stays below the log(n1) log(n2) ratio
        loglog = math.log(2 * n) * math.log(4 * n) / (math.log(n) * math.log(2 * n))
        assert vals[2 * n] / vals[n] <= loglog


def test_lebesgue_dense_scan_close():
    # the product shortcut agrees with a dense random scan from below
    g = make_grid(10, 16)
    rng = np.random.default_rng(9)
    dense = np.max(lebesgue_function_2d(g, rng.uniform(0, 2, 50_000), rng.uniform(0, TWO_PI, 50_000)))
    est = lebesgue_estimate(g, 20_000, 40_000)
    assert dense <= est * (1 + 1e-9)
    assert dense >= 0.9 * est
    # the default lattice is within 1e-3 of the fine one
    assert lebesgue_estimate(g) == pytest.approx(est, rel=1e-3)


@pytest.mark.parametrize("shift", [False, True])
def test_perturbation_bounded_by_lebesgue(shift):
    rng = np.random.default_rng(10)
    di = build_disk_interpolant(16, 32, smooth, *(FIG2 if shift else (None, None)))
    g = di.grid
    e = rng.uniform(-1, 1, g.values.shape)
    e *= 1e-6 / np.max(np.abs(e))
    r = np.linspace(0, 2, 50)
    t = np.linspace(0, TWO_PI, 50, endpoint=False)
    R, T = np.meshgrid(r, t, indexing="ij")
    diff = np.abs(eval_grid(g, R, T) - eval_grid(g, R, T, values=g.values + e))
    assert np.max(diff) <= lebesgue_estimate(g) * 1e-6 * (1 + 1e-6)
