# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled batch kernels; same surface as maxplus._kernels_py.

Operates on C-contiguous float64 arrays via typed memoryviews; no numpy
C API so the build only needs a C compiler.
"""

import numpy as np


def lower_coeffs(gens, u, Z):
    """T[k, i] = min_j (Z[k, j] - gens[i, j]) / u[j]."""
    cdef const double[:, ::1] g = np.ascontiguousarray(gens, dtype=np.float64)
    cdef const double[::1] w = np.ascontiguousarray(u, dtype=np.float64)
    cdef const double[:, ::1] z = np.ascontiguousarray(Z, dtype=np.float64)
    cdef Py_ssize_t m = g.shape[0], n = g.shape[1], k = z.shape[0]
    out = np.empty((k, m), dtype=np.float64)
    cdef double[:, ::1] t = out
    cdef Py_ssize_t a, i, j
    cdef double v, best
    with nogil:
        for a in range(k):
            for i in range(m):
                best = (z[a, 0] - g[i, 0]) / w[0]
                for j in range(1, n):
                    v = (z[a, j] - g[i, j]) / w[j]
                    if v < best:
                        best = v
                t[a, i] = best
    return out


def join_comb(gens, u, C):
    """J[k, j] = max_i (gens[i, j] + C[k, i] * u[j])."""
    cdef const double[:, ::1] g = np.ascontiguousarray(gens, dtype=np.float64)
    cdef const double[::1] w = np.ascontiguousarray(u, dtype=np.float64)
    cdef const double[:, ::1] c = np.ascontiguousarray(C, dtype=np.float64)
    cdef Py_ssize_t m = g.shape[0], n = g.shape[1], k = c.shape[0]
    out = np.empty((k, n), dtype=np.float64)
    cdef double[:, ::1] jn = out
    cdef Py_ssize_t a, i, j
    cdef double v, best
    with nogil:
        for a in range(k):
            for j in range(n):
                best = g[0, j] + c[a, 0] * w[j]
                for i in range(1, m):
                    v = g[i, j] + c[a, i] * w[j]
                    if v > best:
                        best = v
                jn[a, j] = best
    return out


def pairwise_dist(u, A, B, metric):
    """D[a, b] = distance between A[a] and B[b] under metric "u" or "hu"."""
    if metric not in ("u", "hu"):
        raise ValueError(f"unknown metric {metric!r}")
    cdef int code = 0 if metric == "u" else 1
    cdef const double[::1] w = np.ascontiguousarray(u, dtype=np.float64)
    cdef const double[:, ::1] xa = np.ascontiguousarray(A, dtype=np.float64)
    cdef const double[:, ::1] xb = np.ascontiguousarray(B, dtype=np.float64)
    cdef Py_ssize_t ka = xa.shape[0], kb = xb.shape[0], n = w.shape[0]
    out = np.empty((ka, kb), dtype=np.float64)
    cdef double[:, ::1] d = out
    cdef Py_ssize_t a, b, j
    cdef double v, up, dn
    with nogil:
        for a in range(ka):
            for b in range(kb):
                up = 0.0
                dn = 0.0
                for j in range(n):
                    v = (xa[a, j] - xb[b, j]) / w[j]
                    if v > up:
                        up = v
                    if -v > dn:
                        dn = -v
                if code == 0:
                    d[a, b] = up if up > dn else dn
                else:
                    d[a, b] = up + dn
    return out
