"""Backend selection for the brute-force enumeration kernels.

Prefers the compiled extension (``invbargraph._speedups``) and falls back to
the pure-Python implementation.  Set ``INVBARGRAPH_PURE=1`` to force the
fallback, e.g. for benchmarking or debugging.
"""

from __future__ import annotations

import os

from invbargraph import _kernel_py

if os.environ.get("INVBARGRAPH_PURE") == "1":
    _impl = _kernel_py
    BACKEND = "python"
else:
    try:
        from invbargraph import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernel_py
        BACKEND = "python"

MAX_N = _kernel_py.MAX_N

area_sper_counts = _impl.area_sper_counts
lda_counts = _impl.lda_counts
