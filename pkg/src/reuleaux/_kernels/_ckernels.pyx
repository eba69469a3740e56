# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled grid kernels; same signatures as ``_pykernels``."""

import numpy as np
cimport numpy as cnp
from libc.math cimport cos, sin, fmod, INFINITY

cnp.import_array()

cdef double TWO_PI = 6.283185307179586


def trig_series(theta, ks, ca, cb):
    cdef const double[::1] t = np.ascontiguousarray(theta, dtype=np.float64)
    cdef const double[::1] k = np.ascontiguousarray(ks, dtype=np.float64)
    cdef const double[::1] a = np.ascontiguousarray(ca, dtype=np.float64)
    cdef const double[::1] b = np.ascontiguousarray(cb, dtype=np.float64)
    cdef Py_ssize_t n = t.shape[0], nk = k.shape[0], i, j, kk, kmax
    out = np.zeros(n, dtype=np.float64)
    cdef double[::1] o = out
    cdef double acc, x, c1, s1, ck, sk, tmp
    if nk == 0:
        return out
    kmax = <Py_ssize_t>k[nk - 1]
    if kmax > 4 * nk + 16:
        # sparse high harmonics: direct evaluation is cheaper than the recurrence
        for i in range(n):
            acc = 0.0
            for j in range(nk):
                x = k[j] * t[i]
                acc += a[j] * cos(x) + b[j] * sin(x)
            o[i] = acc
        return out
    for i in range(n):
        # (cos kt, sin kt) by repeated rotation through t; drift is O(k) ulps
        c1 = cos(t[i])
        s1 = sin(t[i])
        ck = 1.0
        sk = 0.0
        kk = 0
        acc = 0.0
        for j in range(nk):
            while kk < <Py_ssize_t>k[j]:
                tmp = ck * c1 - sk * s1
                sk = sk * c1 + ck * s1
                ck = tmp
                kk += 1
            acc += a[j] * ck + b[j] * sk
        o[i] = acc
    return out


cdef inline Py_ssize_t _locate(double th, const double[::1] br) nogil:
    cdef Py_ssize_t lo = 0, hi = br.shape[0] - 1, mid
    cdef double t = fmod(th - br[0], TWO_PI)
    if t < 0.0:
        t += TWO_PI
    t += br[0]
    # largest lo with br[lo] <= t, clipped to the last piece
    while hi - lo > 1:
        mid = (lo + hi) >> 1
        if br[mid] <= t:
            lo = mid
        else:
            hi = mid
    return lo


def piece_index(theta, breaks):
    cdef const double[::1] t = np.ascontiguousarray(theta, dtype=np.float64)
    cdef const double[::1] br = np.ascontiguousarray(breaks, dtype=np.float64)
    cdef Py_ssize_t n = t.shape[0], i
    out = np.empty(n, dtype=np.intp)
    cdef Py_ssize_t[::1] o = out
    for i in range(n):
        o[i] = _locate(t[i], br)
    return out


def piecewise_eval(theta, breaks, is_arc, px, py, int deriv):
    cdef const double[::1] t = np.ascontiguousarray(theta, dtype=np.float64)
    cdef const double[::1] br = np.ascontiguousarray(breaks, dtype=np.float64)
    cdef const cnp.uint8_t[::1] arc = np.ascontiguousarray(is_arc, dtype=np.uint8)
    cdef const double[::1] x = np.ascontiguousarray(px, dtype=np.float64)
    cdef const double[::1] y = np.ascontiguousarray(py, dtype=np.float64)
    cdef Py_ssize_t n = t.shape[0], i, p
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] o = out
    for i in range(n):
        p = _locate(t[i], br)
        if deriv == 2:
            o[i] = 1.0 if arc[p] else 0.0
        elif deriv == 0:
            o[i] = (1.0 if arc[p] else 0.0) + x[p] * cos(t[i]) + y[p] * sin(t[i])
        else:
            o[i] = -x[p] * sin(t[i]) + y[p] * cos(t[i])
    return out


def kallay_min_slack(h, int half_width):
    cdef const double[::1] hh = np.ascontiguousarray(h, dtype=np.float64)
    cdef Py_ssize_t m = hh.shape[0], j
    # wrap-padded copy so the inner loop needs no modulo
    pad = np.take(np.asarray(hh), np.arange(-half_width, m + half_width), mode="wrap")
    cdef const double[::1] hp = pad
    cdef int s
    cdef double dt = TWO_PI / m, c, v
    cdef double best = INFINITY
    cdef Py_ssize_t best_j = 0
    cdef int best_s = 0
    for s in range(-half_width, half_width + 1):
        c = 2.0 * cos(s * dt)
        for j in range(m):
            v = hp[j + half_width + s] + hp[j + half_width - s] - c * hp[j + half_width]
            if v < best:
                best = v
                best_j = j
                best_s = s
    return best, best_j, best_s
