"""Numpy implementations of the batch kernels.

This module mirrors the compiled extension ``maxplus._kernels`` exactly;
``maxplus.backend`` picks whichever is importable.  All arrays are C-contiguous
float64.  Shapes: ``gens`` is (m, n), ``u`` is (n,), query blocks ``Z`` and
coefficient blocks ``C`` are 2-D with one row per query.

Large inputs are processed in chunks so the (k, m, n) broadcast temporaries
stay below ~three hundred MB.
"""

import numpy as np

_CHUNK_ELEMS = 8_000_000


def _chunks(total, per_row):
    step = max(1, _CHUNK_ELEMS // max(1, per_row))
    for lo in range(0, total, step):
        yield lo, min(total, lo + step)


def lower_coeffs(gens, u, Z):
    """T[k, i] = min_j (Z[k, j] - gens[i, j]) / u[j].

    The largest coefficient t with gens[i] + t*u below Z[k] coordinatewise.
    """
    gens = np.ascontiguousarray(gens, dtype=float)
    u = np.ascontiguousarray(u, dtype=float)
    Z = np.ascontiguousarray(Z, dtype=float)
    k, (m, n) = Z.shape[0], gens.shape
    out = np.empty((k, m))
    for lo, hi in _chunks(k, m * n):
        out[lo:hi] = ((Z[lo:hi, None, :] - gens[None, :, :]) / u).min(axis=2)
    return out


def join_comb(gens, u, C):
    """J[k, j] = max_i (gens[i, j] + C[k, i] * u[j])."""
    gens = np.ascontiguousarray(gens, dtype=float)
    u = np.ascontiguousarray(u, dtype=float)
    C = np.ascontiguousarray(C, dtype=float)
    k, (m, n) = C.shape[0], gens.shape
    out = np.empty((k, n))
    for lo, hi in _chunks(k, m * n):
        out[lo:hi] = (gens[None, :, :] + C[lo:hi, :, None] * u).max(axis=1)
    return out


def pairwise_dist(u, A, B, metric):
    """D[a, b] = distance between A[a] and B[b] under ``metric`` ("u" or "hu").

    "u" is the weighted sup distance max_j |d_j|/u_j; "hu" is
    max(0, max_j d_j/u_j) + max(0, max_j -d_j/u_j) with d = A[a] - B[b].
    """
    if metric not in ("u", "hu"):
        raise ValueError(f"unknown metric {metric!r}")
    u = np.ascontiguousarray(u, dtype=float)
    A = np.ascontiguousarray(A, dtype=float)
    B = np.ascontiguousarray(B, dtype=float)
    ka, kb = A.shape[0], B.shape[0]
    n = u.shape[0]
    out = np.empty((ka, kb))
    for lo, hi in _chunks(ka, kb * n):
        diff = (A[lo:hi, None, :] - B[None, :, :]) / u
        if metric == "u":
            out[lo:hi] = np.abs(diff).max(axis=2)
        else:
            hi_part = np.maximum(diff.max(axis=2), 0.0)
            lo_part = np.maximum(-diff.min(axis=2), 0.0)
            out[lo:hi] = hi_part + lo_part
    return out
