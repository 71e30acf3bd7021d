# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled hot kernels: Hessenberg characteristic polynomial and an
Aberth-Ehrlich simultaneous root solver.

Contracts match _fallback exactly; the dispatcher in __init__ picks
whichever is importable.
"""

import numpy as np

from libc.math cimport fabs, sqrt, cos, sin, pow, M_PI

name = "compiled"


def charpoly(a):
    """Ascending monic coefficients of det(tI - a) for a real square matrix."""
    cdef double[:, ::1] h = np.array(a, dtype=np.float64, order="C")
    cdef Py_ssize_t n = h.shape[0]
    if n == 0:
        return np.array([1.0])
    _hessenberg(h, n)

    # p_j(t) = (t - h[j,j]) p_{j-1}(t) - sum_i h[i,j] (prod subdiag) p_{i-1}(t)
    cdef double[:, ::1] polys = np.zeros((n + 1, n + 1))
    polys[0, 0] = 1.0
    cdef Py_ssize_t j, i, k
    cdef double prod, hij
    for j in range(1, n + 1):
        for k in range(j):
            polys[j, k + 1] += polys[j - 1, k]
            polys[j, k] -= h[j - 1, j - 1] * polys[j - 1, k]
        prod = 1.0
        for i in range(j - 1, 0, -1):
            prod *= h[i, i - 1]
            hij = h[i - 1, j - 1] * prod
            for k in range(i):
                polys[j, k] -= hij * polys[i - 1, k]
    return np.asarray(polys[n, :]).copy()


cdef void _hessenberg(double[:, ::1] h, Py_ssize_t n) noexcept:
    """In-place Householder reduction to upper Hessenberg form."""
    cdef Py_ssize_t k, i, j
    cdef double norm, alpha, scale, dot
    cdef double[::1] v = np.zeros(n)
    for k in range(n - 2):
        scale = 0.0
        for i in range(k + 1, n):
            scale += fabs(h[i, k])
        if scale == 0.0:
            continue
        norm = 0.0
        for i in range(k + 1, n):
            v[i] = h[i, k] / scale
            norm += v[i] * v[i]
        norm = sqrt(norm)
        if norm == 0.0:
            continue
        alpha = -norm if v[k + 1] >= 0.0 else norm
        v[k + 1] -= alpha
        norm = 0.0
        for i in range(k + 1, n):
            norm += v[i] * v[i]
        if norm == 0.0:
            continue
        # H <- (I - 2vv'/v'v) H (I - 2vv'/v'v)
        for j in range(k, n):
            dot = 0.0
            for i in range(k + 1, n):
                dot += v[i] * h[i, j]
            dot = 2.0 * dot / norm
            for i in range(k + 1, n):
                h[i, j] -= dot * v[i]
        for i in range(n):
            dot = 0.0
            for j in range(k + 1, n):
                dot += h[i, j] * v[j]
            dot = 2.0 * dot / norm
            for j in range(k + 1, n):
                h[i, j] -= dot * v[j]
        for i in range(k + 2, n):
            h[i, k] = 0.0


def roots(c, int max_iter=400):
    """All complex roots of the ascending real-coefficient polynomial c.

    Aberth-Ehrlich iteration from a staggered circle of initial guesses;
    a root is frozen once its residual reaches the round-off floor of the
    Horner evaluation.
    """
    cdef double[::1] a = np.ascontiguousarray(c, dtype=np.float64)
    cdef Py_ssize_t n = a.shape[0] - 1
    cdef Py_ssize_t i, j, it
    if n < 1:
        return np.zeros(0, dtype=np.complex128)

    cdef double an = a[n]
    cdef double[::1] w = np.zeros(n + 1)
    for i in range(n + 1):
        w[i] = a[i] / an
    cdef double[::1] d = np.zeros(n)
    for i in range(n):
        d[i] = (i + 1) * w[i + 1]

    cdef double rmax = 0.0
    for i in range(n):
        if fabs(w[i]) > rmax:
            rmax = fabs(w[i])
    rmax += 1.0
    cdef double rad = pow(fabs(w[0]), 1.0 / n) if w[0] != 0.0 else 0.5
    if rad < 1e-3:
        rad = 1e-3
    if rad > rmax:
        rad = rmax

    z_arr = np.empty(n, dtype=np.complex128)
    cdef double complex[::1] z = z_arr
    cdef double ang
    for i in range(n):
        ang = 2.0 * M_PI * i / n + 0.4
        z[i] = rad * (cos(ang) + 1j * sin(ang))

    done_arr = np.zeros(n, dtype=np.uint8)
    cdef unsigned char[::1] done = done_arr
    cdef double complex p, dp, s, corr, zi
    cdef double b, az, eps = 2.220446049250313e-16
    cdef double maxcorr
    cdef Py_ssize_t ndone
    for it in range(max_iter):
        ndone = 0
        maxcorr = 0.0
        for i in range(n):
            if done[i]:
                ndone += 1
                continue
            zi = z[i]
            az = abs(zi)
            p = w[n]
            b = fabs(w[n])
            for j in range(n - 1, -1, -1):
                p = p * zi + w[j]
                b = b * az + fabs(w[j])
            if abs(p) <= 8.0 * eps * b:
                done[i] = 1
                ndone += 1
                continue
            dp = d[n - 1]
            for j in range(n - 2, -1, -1):
                dp = dp * zi + d[j]
            if dp == 0:
                dp = eps
            s = 0
            for j in range(n):
                if j != i:
                    if zi == z[j]:
                        zi = zi + 1e-12 * (1.0 + az)
                    s = s + 1.0 / (zi - z[j])
            corr = (p / dp) / (1.0 - (p / dp) * s)
            z[i] = zi - corr
            if abs(corr) > maxcorr * (1.0 + abs(z[i])):
                maxcorr = abs(corr) / (1.0 + abs(z[i]))
        if ndone == n or maxcorr <= 1e-15:
            break
    return z_arr
