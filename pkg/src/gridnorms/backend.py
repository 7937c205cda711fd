"""Kernel backend selection.

The shift-scan kernels exist twice: a Cython extension and a pure-Python
twin with identical results.  The compiled module is preferred when it
imported cleanly; set GRIDNORMS_KERNELS=python (or =cython) to force a
choice, e.g. for benchmarking.
"""

from __future__ import annotations

import os

from . import _kernels_py

_forced = os.environ.get("GRIDNORMS_KERNELS", "").strip().lower()

if _forced == "python":
    _impl = _kernels_py
    _name = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        _name = "cython"
    except ImportError:
        if _forced == "cython":
            raise ImportError(
                "GRIDNORMS_KERNELS=cython but the compiled kernels are not available"
            ) from None
        _impl = _kernels_py
        _name = "python"

rows_shift_diff_table = _impl.rows_shift_diff_table
shift_diff_table_1d = _impl.shift_diff_table_1d
shift_diff_table_2d = _impl.shift_diff_table_2d


def kernel_backend() -> str:
    """Name of the active kernel implementation: 'cython' or 'python'."""
    return _name
