"""Independent reference implementations used by the tests.

None of these share code with the package: Lagrange form in extended
precision, an FFT-based balanced trigonometric interpolant, and a Taylor
series for erf with an explicit remainder bound.
"""

import math

import mpmath
import numpy as np

mpmath.mp.dps = 40


def lagrange(nodes, values, x):
    """Lagrange-form polynomial interpolant, evaluated in 40-digit arithmetic."""
    xs = [mpmath.mpf(float(t)) for t in nodes]
    fs = [mpmath.mpf(float(v)) for v in values]
    out = []
    for p in np.atleast_1d(np.asarray(x, dtype=float)):
        p = mpmath.mpf(float(p))
        total = mpmath.mpf(0)
        for i, xi in enumerate(xs):
            term = fs[i]
            for j, xj in enumerate(xs):
                if j != i:
                    term *= (p - xj) / (xi - xj)
            total += term
        out.append(float(total))
    return np.array(out) if np.ndim(x) else out[0]


def balanced_trig(values, theta):
    """Balanced trigonometric interpolant through equispaced samples.

    Coefficients from the FFT; for even n the Nyquist mode enters as a
    cosine only, which keeps the interpolant real and unique.
    """
    f = np.asarray(values, dtype=float)
    n = f.size
    c = np.fft.fft(f) / n
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    out = np.full(theta.shape, c[0].real)
    top = (n - 1) // 2
    for k in range(1, top + 1):
        out += 2.0 * (c[k] * np.exp(1j * k * theta)).real
    if n % 2 == 0:
        out += c[n // 2].real * np.cos(n // 2 * theta)
    return out


def separable_disk(rnodes, values, r, theta):
    """Angular trig oracle along each circle, then radial Lagrange oracle."""
    rows = np.array([balanced_trig(row, theta)[0] for row in values])
    return lagrange(rnodes, rows, r)


def erf_taylor(x):
    """erf by its Maclaurin series, summed until the alternating tail is < 1e-35."""
    x = mpmath.mpf(x)
    total, n = mpmath.mpf(0), 0
    x2 = x * x
    power = x
    fact = mpmath.mpf(1)
    while True:
        term = power / (fact * (2 * n + 1))
        total += term if n % 2 == 0 else -term
        # beyond n > x^2 the terms decrease, so the next one bounds the tail
        if n > x2 and abs(term) < mpmath.mpf("1e-35"):
            break
        n += 1
        power *= x2
        fact *= n
    return float(2 * total / mpmath.sqrt(mpmath.pi))


def ulps(a, b):
    """Distance between two floats in units of the larger one's spacing."""
    a, b = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    scale = np.spacing(np.maximum(np.abs(a), np.abs(b)))
    return np.abs(a - b) / scale


def chebyshev_reference(n1, a=0.0, b=2.0):
    return [a + (b - a) * (1 - math.cos(i * math.pi / n1)) / 2 for i in range(n1 + 1)]
