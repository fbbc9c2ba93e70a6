"""Variable exponents p: H -> [1, inf].

The value infinity is stored as ``np.inf`` and every formula that touches an
exponent branches on ``np.isinf`` explicitly; it is never replaced by a large
finite power. On a finite carrier with strictly positive weights the
essential inf/sup are plain min/max.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .group import MeasuredGroup


class ExponentError(ValueError):
    pass


@dataclass(frozen=True)
class Exponent:
    values: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.values, dtype=float)
        if v.ndim != 1 or v.size == 0:
            raise ExponentError("exponent must be a non-empty 1-d array")
        if np.any(np.isnan(v)) or np.any(v < 1):
            raise ExponentError("exponent values must lie in [1, inf]")
        v = v.copy()
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    def __len__(self):
        return self.values.size

    @property
    def infinite(self) -> np.ndarray:
        return np.isinf(self.values)

    @property
    def finite_part(self) -> np.ndarray:
        """Boolean mask of F_p = {x : p(x) < inf}."""
        return ~self.infinite

    @property
    def p_minus(self) -> float:
        return float(self.values.min())

    @property
    def p_plus(self) -> float:
        return float(self.values.max())

    @property
    def bounded(self) -> bool:
        return not bool(self.infinite.any())

    def is_constant(self) -> bool:
        return bool(np.all(self.values == self.values[0]))

    def __eq__(self, other):
        return isinstance(other, Exponent) and np.array_equal(self.values, other.values)

    def __hash__(self):
        return hash(self.values.tobytes())

    def __repr__(self):
        return f"Exponent({self.values.tolist()})"


def constant(q: float, n: int) -> Exponent:
    return Exponent(np.full(n, float(q)))


def conjugate(p: Exponent) -> Exponent:
    """Pointwise p' = p/(p-1), with 1 <-> inf.

    The result remembers its source, so ``conjugate(conjugate(p))`` returns
    ``p`` bit for bit instead of a float round trip.
    """
    cached = p.__dict__.get("_conjugate")
    if cached is not None:
        return cached
    v = p.values
    out = np.empty_like(v)
    one = v == 1
    inf = np.isinf(v)
    mid = ~(one | inf)
    out[one] = np.inf
    out[inf] = 1.0
    out[mid] = v[mid] / (v[mid] - 1.0)
    q = Exponent(out)
    object.__setattr__(q, "_conjugate", p)
    object.__setattr__(p, "_conjugate", q)
    return q


def sample_exponent(group: MeasuredGroup, lo: float, hi: float,
                    infinite_fraction: float = 0.0, seed=None) -> Exponent:
    """Uniform finite values on [lo, hi]; ``round(frac * n)`` random atoms set to inf."""
    if lo < 1:
        raise ExponentError("lower end of the exponent range must be >= 1")
    if hi < lo:
        raise ExponentError("need hi >= lo")
    if not 0 <= infinite_fraction <= 1:
        raise ExponentError("infinite_fraction must be in [0, 1]")
    rng = np.random.default_rng(seed)
    n = group.n
    v = rng.uniform(lo, hi, size=n) if hi > lo else np.full(n, float(lo))
    k = int(round(infinite_fraction * n))
    if k:
        v[rng.choice(n, size=k, replace=False)] = np.inf
    return Exponent(v)


def is_translation_invariant_exponent(p: Exponent, group: MeasuredGroup) -> bool:
    # p(xy) = p(y) for all x, y
    v = p.values
    return bool(np.all(v[group.mul] == v[None, :]))


def reciprocal(p: Exponent) -> np.ndarray:
    """1/p with 1/inf = 0."""
    v = p.values
    return np.where(np.isinf(v), 0.0, 1.0 / v)


def from_reciprocal(r: np.ndarray) -> Exponent:
    r = np.asarray(r, dtype=float)
    return Exponent(np.where(r == 0, np.inf, 1.0 / np.where(r == 0, 1.0, r)))
