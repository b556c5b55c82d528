"""Pure numpy implementation of the evaluation kernels.

Same signatures and the same floating-point operation order as the compiled
module ``_kernels``; vectorized over evaluation points instead of looping.
"""

import numpy as np

_CHUNK = 2048


def _two_sum_acc(s, c, t):
    snew = s + t
    bb = snew - s
    c += (s - (snew - bb)) + (t - bb)
    return snew, c


_SPLITTER = 134217729.0  # 2^27 + 1


def _split(x):
    t = _SPLITTER * x
    hi = t - (t - x)
    return hi, x - hi


def _dot_acc(s, c, x, y):
    """Accumulate x*y with an error-free product (Veltkamp split, no fma)."""
    p = x * y
    xh, xl = _split(x)
    yh, yl = _split(y)
    e = ((xh * yh - p) + xh * yl + xl * yh) + xl * yl
    s, c = _two_sum_acc(s, c, p)
    return s, c + e


def _compensated_dot(kern, values):
    """Sum of kern[..., k] * values[k] over k, compensated, in index order."""
    s = np.zeros(kern.shape[:-1])
    c = np.zeros(kern.shape[:-1])
    for k in range(kern.shape[-1]):
        s, c = _dot_acc(s, c, kern[..., k], values[k])
    return s + c


def _compensated_rows(terms):
    """Compensated sum of ``terms`` along the last axis, in index order."""
    s = np.zeros(terms.shape[:-1])
    c = np.zeros(terms.shape[:-1])
    for k in range(terms.shape[-1]):
        s, c = _two_sum_acc(s, c, terms[..., k])
    return s + c


def _first_hit(mask):
    hit = mask.any(axis=1)
    idx = np.where(hit, mask.argmax(axis=1), -1)
    return idx


def radial_kernel(nodes, weights, x, tol):
    """Kernel matrix w_i/(x-x_i), one row per point; unit rows on collision."""
    d = x[:, None] - nodes[None, :]
    hit = _first_hit(np.abs(d) <= tol)
    with np.errstate(divide="ignore", invalid="ignore"):
        a = weights[None, :] / d
    rows = np.nonzero(hit >= 0)[0]
    a[rows] = 0.0
    a[rows, hit[rows]] = 1.0
    return a, hit


def angular_kernel(nodes, weights, odd, theta, tol):
    h = 0.5 * (theta[:, None] - nodes[None, :])
    s = np.sin(h)
    hit = _first_hit(np.abs(s) <= tol)
    with np.errstate(divide="ignore", invalid="ignore"):
        if odd:
            b = weights[None, :] / s
        else:
            b = weights[None, :] * np.cos(h) / s
    rows = np.nonzero(hit >= 0)[0]
    b[rows] = 0.0
    b[rows, hit[rows]] = 1.0
    return b, hit


def _quotient(kern, hit, values):
    num = _compensated_dot(kern, values)
    den = _compensated_rows(kern)
    out = num / den
    rows = hit >= 0
    out[rows] = values[hit[rows]]
    return out


def bary_eval(nodes, weights, values, x, tol):
    out = np.empty(x.shape[0])
    for lo in range(0, x.shape[0], _CHUNK):
        xs = x[lo:lo + _CHUNK]
        a, hit = radial_kernel(nodes, weights, xs, tol)
        out[lo:lo + _CHUNK] = _quotient(a, hit, values)
    return out


def trig_eval(nodes, weights, values, odd, theta, tol):
    out = np.empty(theta.shape[0])
    for lo in range(0, theta.shape[0], _CHUNK):
        ts = theta[lo:lo + _CHUNK]
        b, hit = angular_kernel(nodes, weights, odd, ts, tol)
        out[lo:lo + _CHUNK] = _quotient(b, hit, values)
    return out


def disk_eval(rnodes, rweights, anodes, aweights, odd, values, r, theta,
              rtol, atol):
    out = np.empty(r.shape[0])
    for lo in range(0, r.shape[0], _CHUNK):
        sl = slice(lo, lo + _CHUNK)
        a, hr = radial_kernel(rnodes, rweights, r[sl], rtol)
        b, ha = angular_kernel(anodes, aweights, odd, theta[sl], atol)
        # inner sums over the angular index for every (point, row)
        rs = np.zeros(a.shape)
        rc = np.zeros(a.shape)
        for j in range(values.shape[1]):
            rs, rc = _dot_acc(rs, rc, b[:, j, None], values[None, :, j])
        ns = np.zeros(a.shape[0])
        nc = np.zeros(a.shape[0])
        for i in range(values.shape[0]):
            ns, nc = _dot_acc(ns, nc, a[:, i], rs[:, i])
            nc = nc + a[:, i] * rc[:, i]
        num = ns + nc
        den = _compensated_rows(a) * _compensated_rows(b)
        res = num / den
        both = (hr >= 0) & (ha >= 0)
        res[both] = values[hr[both], ha[both]]
        out[sl] = res
    return out
