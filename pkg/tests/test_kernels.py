"""Shift-table kernels: brute-force agreement and backend parity.

Both backends are pure max-reductions over identical float sets, so the
compiled and pure-Python kernels must agree bitwise, not approximately.
"""

import numpy as np
import pytest

from gridnorms import _kernels_py as pk
from gridnorms.backend import kernel_backend

from helpers import brute_shift_sup


def brute_shift2(a, kx, ky):
    nr, nc = a.shape
    best = 0.0
    for i in range(-ky, nr):
        for j in range(-kx, nc):
            v0 = a[i, j] if 0 <= i < nr and 0 <= j < nc else 0.0
            i2, j2 = i + ky, j + kx
            v1 = a[i2, j2] if 0 <= i2 < nr and 0 <= j2 < nc else 0.0
            best = max(best, abs(v1 - v0))
    return best


def test_backend_name():
    assert kernel_backend() in ("cython", "python")


def test_table_1d_structure(rng):
    for _ in range(20):
        n = int(rng.integers(1, 15))
        v = rng.normal(size=n) * rng.uniform(0.1, 5.0)
        table = pk.shift_diff_table_1d(v)
        assert table.shape == (n + 2,)
        assert table[0] == 0.0
        assert table[n] == table[n + 1] == np.abs(v).max()
        for k in range(1, n + 2):
            assert table[k] == brute_shift_sup(v, k), (n, k)


def test_rows_table_is_stacked_1d(rng):
    a = rng.normal(size=(6, 9))
    table = pk.rows_shift_diff_table(a)
    assert table.shape == (6, 11)
    for r in range(6):
        assert np.array_equal(table[r], pk.shift_diff_table_1d(a[r]))


def test_table_2d_matches_brute(rng):
    for _ in range(10):
        nr = int(rng.integers(1, 8))
        nc = int(rng.integers(1, 10))
        a = rng.normal(size=(nr, nc))
        a[rng.random(size=a.shape) < 0.2] = 0.0
        kmax = max(nr, nc) + 1
        table = pk.shift_diff_table_2d(a, kmax)
        assert table.shape == (kmax + 1, kmax + 1)
        assert table[0, 0] == 0.0
        for ky in range(kmax + 1):
            for kx in range(kmax + 1):
                if ky == kx == 0:
                    continue
                assert table[ky, kx] == brute_shift2(a, kx, ky), (nr, nc, kx, ky)


def test_table_2d_single_cell():
    table = pk.shift_diff_table_2d(np.array([[-2.5]]), 2)
    assert table[0, 0] == 0.0
    assert np.all(table.ravel()[1:] == 2.5)


def test_backend_parity(rng):
    ck = pytest.importorskip("gridnorms._kernels")
    for _ in range(15):
        nr = int(rng.integers(1, 12))
        nc = int(rng.integers(1, 12))
        a = rng.normal(size=(nr, nc)) * rng.uniform(0.01, 100.0)
        cases = [a, np.asfortranarray(a)]
        if nr >= 3 and nc >= 3:
            cases.append(a[::2, ::2])  # non-contiguous view
        frozen = a.copy()
        frozen.setflags(write=False)
        cases.append(frozen)
        for arr in cases:
            assert np.array_equal(
                ck.rows_shift_diff_table(arr), pk.rows_shift_diff_table(arr)
            )
            kmax = max(arr.shape) + 1
            assert np.array_equal(
                ck.shift_diff_table_2d(arr, kmax), pk.shift_diff_table_2d(arr, kmax)
            )
        assert np.array_equal(ck.shift_diff_table_1d(a[0]), pk.shift_diff_table_1d(a[0]))
