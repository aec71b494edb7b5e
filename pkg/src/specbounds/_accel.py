"""JIT switch for the hot kernels.

Set ``SPECBOUNDS_DISABLE_NUMBA=1`` to run every kernel as plain Python/numpy.
The flag is read once at import time.
"""
import os

_FALSEY = {"", "0", "false", "no", "off"}

DISABLED = os.environ.get("SPECBOUNDS_DISABLE_NUMBA", "").strip().lower() not in _FALSEY

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and not DISABLED


def kernel(fn):
    """Compile ``fn`` with ``numba.njit`` unless the pure path is selected.

    The undecorated function stays reachable as ``.py_func`` either way so the
    benchmark can time both paths in one process.
    """
    if USE_NUMBA:
        return numba.njit(cache=True)(fn)
    fn.py_func = fn
    return fn
