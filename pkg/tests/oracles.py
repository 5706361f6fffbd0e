"""Independent brute-force oracles.

Plain-numpy implementations that never call into the package, used to
compute and corroborate expected values: grid scans for the unit
coefficients, exhaustive coefficient-grid hulls for membership, and dense
parameter scans along segments.
"""

import numpy as np


def hu_dist(u, a, b):
    s = (np.asarray(a, float) - np.asarray(b, float)) / u
    return max(s.max(), 0.0) + max(-s.min(), 0.0)


def grid_upper(u, x, step=1e-4, pad=12.0):
    """Smallest grid value t with x <= t*u coordinatewise."""
    ts = np.arange(-pad, pad + step, step)
    ok = np.all(np.asarray(x)[None, :] <= ts[:, None] * u[None, :] + 1e-12, axis=1)
    return float(ts[ok].min())


def grid_lower(u, x, step=1e-4, pad=12.0):
    """Largest grid value t with t*u <= x coordinatewise."""
    ts = np.arange(-pad, pad + step, step)
    ok = np.all(ts[:, None] * u[None, :] <= np.asarray(x)[None, :] + 1e-12, axis=1)
    return float(ts[ok].max())


def grid_hull_joins(gens, u, step=0.05):
    """Every point max_i (g_i + t_i*u) with t_i on the grid {0, -step, ...}
    down to the generator-set diameter, subject to max_i t_i = 0."""
    gens = np.asarray(gens, float)
    u = np.asarray(u, float)
    m = gens.shape[0]
    diam = 0.0
    for i in range(m):
        for j in range(m):
            diam = max(diam, hu_dist(u, gens[i], gens[j]))
    grid = -np.arange(0.0, diam + step, step)
    mesh = np.stack(np.meshgrid(*[grid] * m, indexing="ij"), axis=-1).reshape(-1, m)
    mesh = mesh[mesh.max(axis=1) == 0.0]
    return (gens[None, :, :] + mesh[:, :, None] * u[None, None, :]).max(axis=1)


def nearest_in_cloud(u, cloud, z):
    """Min weighted-sup distance from z to a finite point set."""
    diff = np.abs(np.asarray(cloud, float) - np.asarray(z, float)) / u
    return float(diff.max(axis=1).min())


def segment_points(u, x1, x2, steps=2001):
    """Dense sample of both branch formulas of the two-point hull."""
    x1 = np.asarray(x1, float)
    x2 = np.asarray(x2, float)
    u = np.asarray(u, float)
    reach = hu_dist(u, x1, x2) + 1.0
    ts = np.linspace(-reach, 0.0, steps)[:, None]
    branch1 = np.maximum(x1[None, :], x2[None, :] + ts * u[None, :])
    branch2 = np.maximum(x1[None, :] + ts * u[None, :], x2[None, :])
    return np.vstack([branch1, branch2])


def segment_scan_contains(u, x1, x2, z, steps=4001):
    """Min sup-distance from z to the dense segment sample."""
    return nearest_in_cloud(u, segment_points(u, x1, x2, steps), z)


def segment_scan_mindist(u, x1, x2, target, steps=4001):
    """Min max-plus distance from the target to the dense segment sample."""
    pts = segment_points(u, x1, x2, steps)
    s = (np.asarray(target, float)[None, :] - pts) / u
    d = np.maximum(s.max(axis=1), 0.0) + np.maximum(-s.min(axis=1), 0.0)
    return float(d.min())
