"""Independent reference computations used to freeze expected values.

Nothing here calls the solvers in :mod:`varlp.norms` or the convolution in
:mod:`varlp.algebra`; each routine is a separate route to the same number
(closed forms, exhaustive grids, explicit triple loops).
"""
from __future__ import annotations

import itertools
import math

import numpy as np


def golden_ratio() -> float:
    # positive root of t^2 - t - 1 = 0
    return (1.0 + math.sqrt(1.0 + 4.0)) / 2.0


def single_atom_amemiya(c: float, p: float) -> float:
    """min over k > 0 of k + c k^{1-p} for c > 0, p > 1."""
    k = ((p - 1.0) * c) ** (1.0 / p)
    return k + c * k ** (1.0 - p)


def identity_norm_closed_form(n: int, q: float) -> float:
    # modular of (n chi_e)/t on the 1/n grid: (1/n)(n/t)^q = 1
    return n ** (1.0 - 1.0 / q) if math.isfinite(q) else float(n)


def _sum_modular_batch(G: np.ndarray, w: np.ndarray, pc: np.ndarray) -> np.ndarray:
    """SUM-form modular of each row of G (rows are candidate g >= 0)."""
    fin = np.isfinite(pc)
    out = np.zeros(G.shape[0])
    for i in range(G.shape[1]):
        if fin[i]:
            out += w[i] * G[:, i] ** pc[i]
    if (~fin).any():
        out += G[:, ~fin].max(axis=1)
    return out


def associate_grid(a, w, pc, levels: int = 30, points: int = 41) -> float:
    """Brute-force sup of sum w a g over g >= 0 with SUM-modular_{pc}(g) <= 1.

    All but one coordinate are gridded and the remaining one is pushed to the
    constraint boundary by bisection. The grid is re-centred on the best point
    and its width halved, ``levels`` times. A sharp ridge can pull the grid
    maximum away from the optimum when the wrong coordinate is solved for, so
    every choice of boundary coordinate is tried and the best value kept.
    """
    a = np.abs(np.asarray(a, float))
    w = np.asarray(w, float)
    pc = np.asarray(pc, float)
    if a.size == 1:
        cap = (1.0 / w[0]) ** (1.0 / pc[0]) if np.isfinite(pc[0]) else 1.0
        return float(w[0] * a[0] * cap)
    best = -np.inf
    for last in range(a.size):
        order = [i for i in range(a.size) if i != last] + [last]
        best = max(best, _grid_zoom(a[order], w[order], pc[order], levels, points))
    return best


def _grid_zoom(a, w, pc, levels, points):
    m = a.size
    fin = np.isfinite(pc)
    cap = np.where(fin, (1.0 / w) ** (1.0 / np.where(fin, pc, 1.0)), 1.0)
    lo = np.zeros(m - 1)
    hi = cap[:-1].copy()
    best_val, best_pt = -np.inf, None
    for _ in range(levels):
        axes = [np.linspace(lo[i], hi[i], points) for i in range(m - 1)]
        rest = np.array(list(itertools.product(*axes))) if m > 2 else axes[0][:, None]
        last_lo = np.zeros(rest.shape[0])
        last_hi = np.full(rest.shape[0], cap[-1])
        ok = _sum_modular_batch(np.hstack([rest, last_lo[:, None]]), w, pc) <= 1.0
        for _ in range(60):
            mid = 0.5 * (last_lo + last_hi)
            feas = _sum_modular_batch(np.hstack([rest, mid[:, None]]), w, pc) <= 1.0
            last_lo = np.where(feas, mid, last_lo)
            last_hi = np.where(feas, last_hi, mid)
        G = np.hstack([rest, last_lo[:, None]])
        vals = np.where(ok, G @ (w * a), -np.inf)
        k = int(np.argmax(vals))
        if vals[k] > best_val:
            best_val, best_pt = float(vals[k]), rest[k]
        half = (hi - lo) / 4
        lo = np.maximum(best_pt - half, 0.0)
        hi = np.minimum(best_pt + half, cap[:-1])
    return best_val


def cauchy_schwarz_associate(a, w) -> float:
    a = np.asarray(a, float)
    return float(np.sqrt(np.sum(np.asarray(w) * a * a)))


def convolve_triple_loop(f, g, mul, inv, w):
    """(f*g)(x) = sum_y w(y) f(y) g(y^{-1} x), by explicit loops."""
    n = len(f)
    out = [0.0] * n
    for x in range(n):
        s = 0.0
        for y in range(n):
            s += w[y] * f[y] * g[mul[inv[y]][x]]
        out[x] = s
    return np.array(out)


def circulant_determinant(c) -> complex:
    # eigenvalues of a circulant are the DFT of its first column
    c = np.asarray(c, float)
    n = c.size
    k = np.arange(n)
    lam = [sum(c[j] * np.exp(-2j * np.pi * j * m / n) for j in range(n)) for m in k]
    return complex(np.prod(lam))


def two_atom_luxemburg(a, b, p1, p2, w1=1.0, w2=1.0, iters=200) -> float:
    """Norm of (a, b) for finite exponents by plain bisection on t."""
    a, b = abs(a), abs(b)
    if a == 0 and b == 0:
        return 0.0
    lo, hi = 0.0, 1.0
    while w1 * (a / hi) ** p1 + w2 * (b / hi) ** p2 > 1:
        hi *= 2
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        if w1 * (a / mid) ** p1 + w2 * (b / mid) ** p2 <= 1:
            hi = mid
        else:
            lo = mid
    return hi


def embedding_directions(p1: float, p2: float, step: float = 1e-3):
    """Extremal ||f||_{p(.)}/||f||_{p_-} and ||f||_{p(.)}/||f||_{p_+} over
    directions (cos th, sin th), th in [0, pi/2], on two counting atoms."""
    pm, pp = min(p1, p2), max(p1, p2)
    c1, c2 = math.inf, 0.0
    for th in np.arange(0.0, math.pi / 2 + step / 2, step):
        a, b = math.cos(th), math.sin(th)
        n = two_atom_luxemburg(a, b, p1, p2, iters=100)
        c1 = min(c1, n / (a ** pm + b ** pm) ** (1 / pm))
        c2 = max(c2, n / (a ** pp + b ** pp) ** (1 / pp))
    return c1, c2
