"""Pure-Python twins of the compiled shift-scan kernels.

Same signatures and same results as ``gridnorms._kernels``.  The shift
tables are pure max-reductions, so the two implementations agree
bit-for-bit; only speed differs.  Selection happens in
:mod:`gridnorms.backend`.
"""

from __future__ import annotations

import numpy as np


def rows_shift_diff_table(a: np.ndarray) -> np.ndarray:
    """Per-row sup of |row(x + k*dx) - row(x)| under zero extension.

    Parameters
    ----------
    a : ndarray, shape (nrows, ncols)
        One grid row per line; each row is read as a cell-constant
        function that vanishes outside its window.

    Returns
    -------
    ndarray, shape (nrows, ncols + 2)
        Entry [r, k] is the sup for shift k cells.  Column 0 is zero;
        columns ncols and ncols + 1 equal the row sup norm (every cell
        pairs against the zero extension from that shift on).
    """
    a = np.ascontiguousarray(a, dtype=np.float64)
    nr, nc = a.shape
    out = np.zeros((nr, nc + 2))
    ab = np.abs(a)
    rowmax = ab.max(axis=1)
    # head[:, k-1] = max |a[:, :k]|, tail[:, k-1] = max |a[:, nc-k:]|
    head = np.maximum.accumulate(ab, axis=1)
    tail = np.maximum.accumulate(ab[:, ::-1], axis=1)
    for k in range(1, nc):
        d = np.abs(a[:, k:] - a[:, :-k]).max(axis=1)
        np.maximum(d, head[:, k - 1], out=d)
        np.maximum(d, tail[:, k - 1], out=d)
        out[:, k] = d
    out[:, nc] = rowmax
    out[:, nc + 1] = rowmax
    return out


def shift_diff_table_1d(values: np.ndarray) -> np.ndarray:
    """Shift table of a single 1D grid function (see rows_shift_diff_table)."""
    return rows_shift_diff_table(np.asarray(values, dtype=np.float64).reshape(1, -1))[0]


def shift_diff_table_2d(a: np.ndarray, kmax: int) -> np.ndarray:
    """Sup of |f(x + kx*dx, y + ky*dx) - f(x, y)| for shifts up to kmax cells.

    Zero extension outside the window; entry [ky, kx] covers the single
    shift vector (kx, ky) cells, not the sup over smaller shifts.
    """
    a = np.ascontiguousarray(a, dtype=np.float64)
    nr, nc = a.shape
    kmax = int(kmax)
    out = np.zeros((kmax + 1, kmax + 1))
    ab = np.abs(a)
    row_abs = ab.max(axis=1)
    col_abs = ab.max(axis=0)
    # band[k] = max abs over the first/last k rows (columns)
    pre_r = np.concatenate(([0.0], np.maximum.accumulate(row_abs)))
    suf_r = np.concatenate(([0.0], np.maximum.accumulate(row_abs[::-1])))
    pre_c = np.concatenate(([0.0], np.maximum.accumulate(col_abs)))
    suf_c = np.concatenate(([0.0], np.maximum.accumulate(col_abs[::-1])))
    for ky in range(kmax + 1):
        ry = min(ky, nr)
        for kx in range(kmax + 1):
            if ky == 0 and kx == 0:
                continue
            rx = min(kx, nc)
            border = max(pre_r[ry], suf_r[ry], pre_c[rx], suf_c[rx])
            if ky < nr and kx < nc:
                d = np.abs(a[ky:, kx:] - a[: nr - ky, : nc - kx])
                interior = d.max() if d.size else 0.0
            else:
                interior = 0.0
            out[ky, kx] = max(interior, border)
    return out
