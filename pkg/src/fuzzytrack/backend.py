"""Grid-kernel backend selection, fixed at import time.

The compiled Cython kernel is preferred when the extension was built;
otherwise the pure numpy kernel is used.  Set FUZZYTRACK_PURE=1 to force the
fallback (used by the benchmark and by tests exercising both paths).
"""

import os

from . import _kernel_py

if os.environ.get("FUZZYTRACK_PURE"):
    _impl = _kernel_py
else:
    try:
        from . import _kernel as _impl
    except ImportError:
        _impl = _kernel_py

BACKEND = _impl.BACKEND_NAME

aggregate = _impl.aggregate
centroid_sums = _impl.centroid_sums
centroid_sums_many = _impl.centroid_sums_many


def backend_name() -> str:
    """Name of the kernel in use: "cython" or "python"."""
    return BACKEND
