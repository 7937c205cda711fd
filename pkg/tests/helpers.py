"""Shared corpora and brute-force oracles.

Every oracle here is written as plain loops against the definitions, so
the package implementations are checked against independent code paths,
not against themselves.
"""

import numpy as np

from gridnorms import SampledFunction1D, SampledFunction2D


def random_profile_arrays(rng, max_pieces=12):
    k = int(rng.integers(1, max_pieces + 1))
    vals = np.sort(rng.uniform(0.05, 5.0, size=k))[::-1]
    # force strict decrease
    vals = vals + np.linspace(k * 1e-3, 0.0, k)
    meas = rng.uniform(0.05, 2.0, size=k)
    return vals.copy(), meas


def random_grid_1d(rng, max_n=32, allow_zero_rows=True):
    n = int(rng.integers(1, max_n + 1))
    v = rng.normal(size=n) * float(rng.uniform(0.1, 3.0))
    if allow_zero_rows and rng.random() < 0.3:
        v[rng.random(n) < 0.4] = 0.0
    return SampledFunction1D(
        float(rng.uniform(-2.0, 2.0)), float(rng.uniform(0.05, 0.7)), v
    )


def random_grid_2d(rng, max_n=16, square=False, spacing=None):
    nr = int(rng.integers(1, max_n + 1))
    nc = nr if square else int(rng.integers(1, max_n + 1))
    v = rng.normal(size=(nr, nc)) * float(rng.uniform(0.1, 3.0))
    if rng.random() < 0.3:
        v[rng.random((nr, nc)) < 0.3] = 0.0
    sp = spacing if spacing is not None else float(rng.uniform(0.05, 0.5))
    return SampledFunction2D(
        float(rng.uniform(-2.0, 2.0)), float(rng.uniform(-2.0, 2.0)), sp, v
    )


def structured_grid_2d(rng, n, spacing=None):
    """Noise plus a smooth hump plus occasional zero bands; the corpus
    style used by the acceptance runs."""
    sp = spacing if spacing is not None else float(rng.uniform(0.05, 0.5))
    vals = rng.normal(size=(n, n)) * float(rng.uniform(0.1, 3.0))
    if rng.random() < 0.5:
        i0 = int(rng.integers(0, n // 2))
        vals[i0 : i0 + n // 4, :] = 0.0
    x = np.linspace(-1.0, 1.0, n)
    vals += np.exp(-(x[None, :] ** 2 + x[:, None] ** 2) * float(rng.uniform(1, 5))) * float(
        rng.uniform(0, 4)
    )
    return SampledFunction2D(
        float(rng.uniform(-1.0, 1.0)), float(rng.uniform(-1.0, 1.0)), sp, vals
    )


def mixture_grid(rng, w, sp, bumps=3):
    """Random positive Gaussian mixture sampled at cell centers on
    [-w, w)^2; resampling the same rng seed at a finer sp gives the
    refinement of the same underlying function."""
    n = round(2 * w / sp)
    c = -w + (np.arange(n) + 0.5) * sp
    x, y = np.meshgrid(c, c, indexing="xy")
    vals = np.zeros((n, n))
    for _ in range(bumps):
        cx, cy = rng.uniform(-w / 3, w / 3, 2)
        s = rng.uniform(0.4, 1.2)
        a = rng.uniform(0.5, 2.0)
        vals += a * np.exp(-((x - cx) ** 2 + (y - cy) ** 2) / s**2)
    return SampledFunction2D(-w, -w, sp, vals)


def brute_rearrange_pairs(values, cell):
    """Sorted-descending distinct |values| with multiplicity * cell."""
    flat = np.abs(np.asarray(values, dtype=float)).ravel()
    flat = flat[flat > 0.0]
    out = []
    for v in sorted(set(flat.tolist()), reverse=True):
        out.append((v, cell * int(np.sum(flat == v))))
    return out


def brute_star(pairs, t):
    """Right-continuous f*(t) from (value, measure) pairs."""
    acc = 0.0
    for v, m in pairs:
        acc += m
        if t < acc:
            return v
    return 0.0


def brute_lp(f, p):
    cell = f.spacing if f.values.ndim == 1 else f.spacing**2
    return (np.sum(np.abs(f.values) ** p) * cell) ** (1.0 / p)


def brute_lorentz_p1(pairs, p):
    """integral t^{1/p-1} f*(t) dt = sum v * p * (b^{1/p} - a^{1/p})."""
    total, a = 0.0, 0.0
    for v, m in pairs:
        b = a + m
        total += v * p * (b ** (1.0 / p) - a ** (1.0 / p))
        a = b
    return total


def brute_shift_sup(v, k):
    """sup |f(x + k*spacing) - f(x)| for a cell-constant 1D function
    under zero extension, by scanning every cell either endpoint hits."""
    n = len(v)
    m = 0.0
    for i in range(-k, n):
        a = v[i] if 0 <= i < n else 0.0
        b = v[i + k] if 0 <= i + k < n else 0.0
        m = max(m, abs(b - a))
    return m


def brute_lip(phi, alpha):
    v = np.asarray(phi.values, dtype=float)
    n = len(v)
    best, wit = 0.0, phi.spacing
    for k in range(1, n + 2):
        val = brute_shift_sup(v, k) / (k * phi.spacing) ** alpha
        if val > best:
            best, wit = val, k * phi.spacing
    return best, wit


def brute_modulus_1d(phi, t):
    v = np.asarray(phi.values, dtype=float)
    kmax = int(np.floor(t / phi.spacing + 1e-9))
    m = 0.0
    for k in range(1, min(kmax, len(v) + 1) + 1):
        m = max(m, brute_shift_sup(v, k))
    return m


def brute_modulus_2d(f, delta):
    v = np.asarray(f.values, dtype=float)
    nr, nc = v.shape
    kmax = int(np.floor(delta / f.spacing + 1e-9))
    kmax = min(kmax, max(nr, nc))
    m = 0.0
    for ky in range(kmax + 1):
        for kx in range(kmax + 1):
            if ky == 0 and kx == 0:
                continue
            for i in range(-ky, nr):
                for j in range(-kx, nc):
                    a = v[i, j] if (0 <= i < nr and 0 <= j < nc) else 0.0
                    ii, jj = i + ky, j + kx
                    b = v[ii, jj] if (0 <= ii < nr and 0 <= jj < nc) else 0.0
                    m = max(m, abs(b - a))
    return m


def brute_steklov_values(v, m):
    """Mean over the m x m block of cells above and to the right of each
    corner of the union window (zero extension)."""
    nr, nc = v.shape
    out = np.zeros((nr + m, nc + m))
    for r in range(nr + m):
        for c in range(nc + m):
            s = 0.0
            for a in range(m):
                for b in range(m):
                    i, j = r - m + a, c - m + b
                    if 0 <= i < nr and 0 <= j < nc:
                        s += v[i, j]
            out[r, c] = s / (m * m)
    return out


def brute_u_p(f, p):
    """Mixed norm oracle: per-axis Lip-(1/p) norm profiles, rearranged by
    brute force, integrated against t^{1/p-1}, summed over axes."""
    alpha = 1.0 / p
    total = 0.0
    for vals in (f.values, f.values.T):
        norms = []
        for row in vals:
            phi = SampledFunction1D(0.0, f.spacing, row.copy())
            sem, _ = brute_lip(phi, alpha)
            norms.append(sem + float(np.max(np.abs(row))))
        pairs = brute_rearrange_pairs(np.array(norms), f.spacing)
        total += brute_lorentz_p1(pairs, p)
    return total
