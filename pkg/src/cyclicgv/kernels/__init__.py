"""Backend dispatch for the packed-word bit kernels.

Two interchangeable backends exist: a numba-compiled one and a pure-numpy
one. Selection is by the CYCLICGV_BACKEND environment variable:

* unset or ``auto`` -- numba if importable, else numpy;
* ``numba`` / ``numpy`` -- force that backend (import errors propagate).

The choice affects speed only: both backends are tested to agree bit for
bit, so every artifact the library produces is identical under either.
``benchmarks/bench_kernels.py`` compares their throughput.
"""

from __future__ import annotations

import os
import warnings

_ENV_VAR = "CYCLICGV_BACKEND"
_active = None


def _load(name: str):
    if name == "numpy":
        from . import numpy_backend
        return numpy_backend
    if name == "numba":
        from . import numba_backend
        return numba_backend
    raise ValueError(f"unknown kernel backend {name!r} (use 'numba' or 'numpy')")


def get_backend(name: str):
    """Load a backend module by name, bypassing the environment selection."""
    return _load(name)


def active():
    """The process-wide backend, resolved once from CYCLICGV_BACKEND."""
    global _active
    if _active is None:
        requested = os.environ.get(_ENV_VAR, "auto").strip().lower() or "auto"
        if requested == "auto":
            try:
                _active = _load("numba")
            except ImportError:
                warnings.warn("numba unavailable; falling back to numpy kernels")
                _active = _load("numpy")
        else:
            _active = _load(requested)
    return _active


def backend_name() -> str:
    return active().BACKEND_NAME


def auto_min_counts(values, n):
    return active().auto_min_counts(values, n)


def strict_min_counts(values, n):
    return active().strict_min_counts(values, n)


def min_cyc_counts(x, pool, n):
    import numpy as np

    return active().min_cyc_counts(np.uint64(x), pool, n)


def min_cyc_counts_to_set(queries, members, n):
    return active().min_cyc_counts_to_set(queries, members, n)


def closest_pair_counts(reps, n):
    return active().closest_pair_counts(reps, n)


def canonical_rotations(values, n):
    return active().canonical_rotations(values, n)


def philox_words(seed, start, count, n):
    import numpy as np

    # uint64 scalars keep large seeds typed correctly under numba dispatch
    return active().philox_words(np.uint64(seed), np.uint64(start), count, n)
