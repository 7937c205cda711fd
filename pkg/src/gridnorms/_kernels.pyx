# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled shift-scan kernels.

These are the hot inner loops of the package: worst-case O(n^2) per grid
line for the Lipschitz shift tables and O(kmax^2 * n^2) for the 2D
modulus table.  ``gridnorms._kernels_py`` holds the pure-Python twins
with identical semantics.
"""

import numpy as np


def rows_shift_diff_table(a):
    """Per-row sup of |row(x + k*dx) - row(x)| under zero extension.

    Returns an (nrows, ncols + 2) table; column 0 is zero and columns
    ncols, ncols + 1 hold the row sup norm.
    """
    cdef const double[:, ::1] v = np.ascontiguousarray(a, dtype=np.float64)
    cdef Py_ssize_t nr = v.shape[0], nc = v.shape[1]
    out = np.zeros((nr, nc + 2))
    cdef double[:, ::1] o = out
    cdef Py_ssize_t r, k, i
    cdef double m, d, rowmax
    for r in range(nr):
        rowmax = 0.0
        for i in range(nc):
            d = v[r, i]
            if d < 0.0:
                d = -d
            if d > rowmax:
                rowmax = d
        for k in range(1, nc):
            m = 0.0
            for i in range(nc - k):
                d = v[r, i + k] - v[r, i]
                if d < 0.0:
                    d = -d
                if d > m:
                    m = d
            # cells whose shifted partner falls outside the window pair
            # against zero: the first k and the last k cells
            for i in range(k):
                d = v[r, i]
                if d < 0.0:
                    d = -d
                if d > m:
                    m = d
                d = v[r, nc - 1 - i]
                if d < 0.0:
                    d = -d
                if d > m:
                    m = d
            o[r, k] = m
        o[r, nc] = rowmax
        o[r, nc + 1] = rowmax
    return out


def shift_diff_table_1d(values):
    """Shift table of a single 1D grid function (see rows_shift_diff_table)."""
    arr = np.ascontiguousarray(values, dtype=np.float64).reshape(1, -1)
    return rows_shift_diff_table(arr)[0]


def shift_diff_table_2d(a, kmax):
    """Sup of |f(x + kx*dx, y + ky*dx) - f(x, y)| for shifts up to kmax cells."""
    cdef const double[:, ::1] v = np.ascontiguousarray(a, dtype=np.float64)
    cdef Py_ssize_t nr = v.shape[0], nc = v.shape[1]
    cdef Py_ssize_t km = int(kmax)
    out = np.zeros((km + 1, km + 1))
    cdef double[:, ::1] o = out
    pre_r_np = np.zeros(nr + 1)
    suf_r_np = np.zeros(nr + 1)
    pre_c_np = np.zeros(nc + 1)
    suf_c_np = np.zeros(nc + 1)
    cdef double[::1] pre_r = pre_r_np, suf_r = suf_r_np
    cdef double[::1] pre_c = pre_c_np, suf_c = suf_c_np
    cdef Py_ssize_t i, j, ky, kx, ry, rx
    cdef double d, m, border
    for i in range(nr):
        m = 0.0
        for j in range(nc):
            d = v[i, j]
            if d < 0.0:
                d = -d
            if d > m:
                m = d
        pre_r[i + 1] = m if m > pre_r[i] else pre_r[i]
    for i in range(nr - 1, -1, -1):
        m = 0.0
        for j in range(nc):
            d = v[i, j]
            if d < 0.0:
                d = -d
            if d > m:
                m = d
        suf_r[nr - i] = m if m > suf_r[nr - i - 1] else suf_r[nr - i - 1]
    for j in range(nc):
        m = 0.0
        for i in range(nr):
            d = v[i, j]
            if d < 0.0:
                d = -d
            if d > m:
                m = d
        pre_c[j + 1] = m if m > pre_c[j] else pre_c[j]
    for j in range(nc - 1, -1, -1):
        m = 0.0
        for i in range(nr):
            d = v[i, j]
            if d < 0.0:
                d = -d
            if d > m:
                m = d
        suf_c[nc - j] = m if m > suf_c[nc - j - 1] else suf_c[nc - j - 1]
    for ky in range(km + 1):
        ry = ky if ky < nr else nr
        for kx in range(km + 1):
            if ky == 0 and kx == 0:
                continue
            rx = kx if kx < nc else nc
            border = pre_r[ry]
            if suf_r[ry] > border:
                border = suf_r[ry]
            if pre_c[rx] > border:
                border = pre_c[rx]
            if suf_c[rx] > border:
                border = suf_c[rx]
            m = border
            if ky < nr and kx < nc:
                for i in range(nr - ky):
                    for j in range(nc - kx):
                        d = v[i + ky, j + kx] - v[i, j]
                        if d < 0.0:
                            d = -d
                        if d > m:
                            m = d
            o[ky, kx] = m
    return out
