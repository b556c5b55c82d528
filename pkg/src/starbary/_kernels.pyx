# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled evaluation kernels.

Every routine mirrors the numpy implementation in ``_fallback.py`` operation by
operation, so the two backends agree up to the last bits of ``sin``/``cos``.
Must not be compiled with -ffast-math: the compensated sums rely on strict
IEEE evaluation order.
"""

import numpy as np
cimport numpy as cnp
from libc.math cimport sin, cos, fabs

cnp.import_array()


cdef double SPLITTER = 134217729.0  # 2^27 + 1


cdef inline void _two_sum_acc(double t, double *s, double *c) noexcept nogil:
    cdef double snew = s[0] + t
    cdef double bb = snew - s[0]
    c[0] += (s[0] - (snew - bb)) + (t - bb)
    s[0] = snew


cdef inline void _dot_acc(double x, double y, double *s, double *c) noexcept nogil:
    """Accumulate x*y with an error-free product (Veltkamp split, no fma)."""
    cdef double p = x * y
    cdef double t = SPLITTER * x
    cdef double xh = t - (t - x)
    cdef double xl = x - xh
    t = SPLITTER * y
    cdef double yh = t - (t - y)
    cdef double yl = y - yh
    cdef double e = ((xh * yh - p) + xh * yl + xl * yh) + xl * yl
    _two_sum_acc(p, s, c)
    c[0] += e


cdef int _radial_kernel(const double[::1] nodes, const double[::1] weights,
                        double x, double tol, double[::1] a) noexcept nogil:
    """Fill ``a`` with w_i/(x-x_i); on collision a unit vector. Returns hit or -1."""
    cdef Py_ssize_t i, q, n = nodes.shape[0]
    cdef double d
    for i in range(n):
        d = x - nodes[i]
        if fabs(d) <= tol:
            for q in range(n):
                a[q] = 0.0
            a[i] = 1.0
            return <int>i
        a[i] = weights[i] / d
    return -1


cdef int _angular_kernel(const double[::1] nodes, const double[::1] weights,
                         bint odd, double theta, double tol,
                         double[::1] b) noexcept nogil:
    cdef Py_ssize_t j, q, n = nodes.shape[0]
    cdef double h, s
    for j in range(n):
        h = 0.5 * (theta - nodes[j])
        s = sin(h)
        if fabs(s) <= tol:
            for q in range(n):
                b[q] = 0.0
            b[j] = 1.0
            return <int>j
        if odd:
            b[j] = weights[j] / s
        else:
            b[j] = weights[j] * cos(h) / s
    return -1


cdef double _quotient(const double[::1] kern, const double[::1] values) noexcept nogil:
    cdef Py_ssize_t i, n = kern.shape[0]
    cdef double ns = 0.0, nc = 0.0, ds = 0.0, dc = 0.0
    for i in range(n):
        _dot_acc(kern[i], values[i], &ns, &nc)
        _two_sum_acc(kern[i], &ds, &dc)
    return (ns + nc) / (ds + dc)


def bary_eval(const double[::1] nodes, const double[::1] weights,
              const double[::1] values, const double[::1] x, double tol):
    cdef Py_ssize_t k, m = x.shape[0]
    cdef int hit
    out = np.empty(m)
    cdef double[::1] o = out
    cdef double[::1] a = np.empty(nodes.shape[0])
    with nogil:
        for k in range(m):
            hit = _radial_kernel(nodes, weights, x[k], tol, a)
            if hit >= 0:
                o[k] = values[hit]
            else:
                o[k] = _quotient(a, values)
    return out


def trig_eval(const double[::1] nodes, const double[::1] weights,
              const double[::1] values, bint odd, const double[::1] theta,
              double tol):
    cdef Py_ssize_t k, m = theta.shape[0]
    cdef int hit
    out = np.empty(m)
    cdef double[::1] o = out
    cdef double[::1] b = np.empty(nodes.shape[0])
    with nogil:
        for k in range(m):
            hit = _angular_kernel(nodes, weights, odd, theta[k], tol, b)
            if hit >= 0:
                o[k] = values[hit]
            else:
                o[k] = _quotient(b, values)
    return out


cdef inline double _split_hi(double x) noexcept nogil:
    cdef double t = SPLITTER * x
    return t - (t - x)


def disk_eval(const double[::1] rnodes, const double[::1] rweights,
              const double[::1] anodes, const double[::1] aweights, bint odd,
              const double[:, ::1] values, const double[::1] r,
              const double[::1] theta, double rtol, double atol):
    cdef Py_ssize_t k, i, j, m = r.shape[0]
    cdef Py_ssize_t n1 = rnodes.shape[0], n2 = anodes.shape[0]
    cdef int hr, ha
    cdef double rs, rc, ns, nc, das, dac, dbs, dbc, p, e, bb, snew
    out = np.empty(m)
    cdef double[::1] o = out
    cdef double[::1] a = np.empty(n1)
    cdef double[::1] b = np.empty(n2)
    cdef double[::1] bh = np.empty(n2)
    cdef double[::1] bl = np.empty(n2)
    cdef double[:, ::1] vh = np.empty((n1, n2))
    cdef double[:, ::1] vl = np.empty((n1, n2))
    with nogil:
        # split the samples once; per point only the kernel is split
        for i in range(n1):
            for j in range(n2):
                vh[i, j] = _split_hi(values[i, j])
                vl[i, j] = values[i, j] - vh[i, j]
        for k in range(m):
            hr = _radial_kernel(rnodes, rweights, r[k], rtol, a)
            ha = _angular_kernel(anodes, aweights, odd, theta[k], atol, b)
            if hr >= 0 and ha >= 0:
                o[k] = values[hr, ha]
                continue
            for j in range(n2):
                bh[j] = _split_hi(b[j])
                bl[j] = b[j] - bh[j]
            ns = 0.0
            nc = 0.0
            for i in range(n1):
                if a[i] == 0.0:
                    continue
                rs = 0.0
                rc = 0.0
                for j in range(n2):
                    # inlined _dot_acc(b[j], values[i, j], &rs, &rc)
                    p = b[j] * values[i, j]
                    e = ((bh[j] * vh[i, j] - p) + bh[j] * vl[i, j]
                         + bl[j] * vh[i, j]) + bl[j] * vl[i, j]
                    snew = rs + p
                    bb = snew - rs
                    rc += ((rs - (snew - bb)) + (p - bb)) + e
                    rs = snew
                _dot_acc(a[i], rs, &ns, &nc)
                nc += a[i] * rc
            das = 0.0
            dac = 0.0
            for i in range(n1):
                _two_sum_acc(a[i], &das, &dac)
            dbs = 0.0
            dbc = 0.0
            for j in range(n2):
                _two_sum_acc(b[j], &dbs, &dbc)
            o[k] = (ns + nc) / ((das + dac) * (dbs + dbc))
    return out
