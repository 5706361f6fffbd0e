"""Kernel backend selection.

The hot batch kernels exist twice: a Cython extension (``maxplus._kernels``)
and a numpy fallback (``maxplus._kernels_py``) with identical semantics.  The
compiled one is preferred when importable; everything downstream goes through
the module-level names exported here.  ``get_backend``/``available_backends``
exist so tests and the benchmark can exercise both implementations explicitly.
"""

from . import _kernels_py

try:
    from . import _kernels as _active

    HAVE_COMPILED = True
except ImportError:
    _active = _kernels_py
    HAVE_COMPILED = False

BACKEND_NAME = "compiled" if HAVE_COMPILED else "python"

lower_coeffs = _active.lower_coeffs
join_comb = _active.join_comb
pairwise_dist = _active.pairwise_dist


def available_backends():
    names = ["python"]
    if HAVE_COMPILED:
        names.insert(0, "compiled")
    return names


def get_backend(name):
    """Return the kernel module for ``name`` ("compiled" or "python")."""
    if name == "python":
        return _kernels_py
    if name == "compiled":
        if not HAVE_COMPILED:
            raise ValueError("compiled kernel backend is not available")
        from . import _kernels

        return _kernels
    raise ValueError(f"unknown backend {name!r}")
