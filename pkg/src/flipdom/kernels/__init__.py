"""Kernel backend selection.

The hot inner loops (domination closures, greedy removal, greedy maximal
independent subsets, girth) live in twin modules: `_numba` (jitted) and
`_numpy` (pure fallback).  The environment variable ``FLIPDOM_KERNELS``
picks the backend:

    FLIPDOM_KERNELS=numba   require the jitted kernels (error if unavailable)
    FLIPDOM_KERNELS=numpy   force the pure-numpy fallback
    unset / auto            numba when importable, else numpy

``bench/bench_kernels.py`` compares the two backends directly.
"""

import os

_choice = os.environ.get("FLIPDOM_KERNELS", "auto").strip().lower()
if _choice not in ("auto", "numba", "numpy"):
    raise RuntimeError(
        f"FLIPDOM_KERNELS must be 'numba', 'numpy' or unset, got {_choice!r}"
    )

if _choice == "numpy":
    from flipdom.kernels import _numpy as _impl
else:
    try:
        from flipdom.kernels import _numba as _impl
    except ImportError:
        if _choice == "numba":
            raise
        from flipdom.kernels import _numpy as _impl

backend_name = _impl.BACKEND

cover_counts = _impl.cover_counts
is_dominating = _impl.is_dominating
induced_edge_count = _impl.induced_edge_count
greedy_removal = _impl.greedy_removal
greedy_independent = _impl.greedy_independent
private_closed_mask = _impl.private_closed_mask
is_minimal_dominating = _impl.is_minimal_dominating
mis_successor = _impl.mis_successor
girth = _impl.girth
