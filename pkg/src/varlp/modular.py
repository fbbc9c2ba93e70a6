"""The three modular functionals on a finite measured group.

For an exponent p with finite part F = {p < inf}:

* ``SUM``:      sum_F w |f|^p  +  max_{F^c} |f|
* ``MAX``:      max(sum_F w |f|^p,  max_{F^c} |f|)
* ``MUSIELAK``: sum_H w T(|f|, p),  T(t, inf) = inf if t > 1 else 0

Empty maxima are 0, and 0^q = 0 for every q including q = inf.
"""
from __future__ import annotations

from enum import Enum
from typing import Callable

import numpy as np

from .exponent import Exponent
from .group import MeasuredGroup


class ModularKind(str, Enum):
    SUM = "sum"
    MAX = "max"
    MUSIELAK = "musielak"


def as_function(f, group: MeasuredGroup | None = None) -> np.ndarray:
    """Validate a function on the carrier: 1-d, finite entries, right length."""
    arr = np.asarray(f)
    if not np.iscomplexobj(arr):
        arr = arr.astype(float)
    if arr.ndim != 1:
        raise ValueError("functions are 1-d arrays indexed by group element")
    if not np.all(np.isfinite(arr)):
        raise ValueError("function values must be finite")
    if group is not None and arr.size != group.n:
        raise ValueError(f"function has {arr.size} values, group has {group.n} elements")
    return arr


def _parts(a: np.ndarray, p: Exponent, w: np.ndarray) -> tuple[float, float]:
    fin = p.finite_part
    with np.errstate(over="ignore"):
        integral = float(np.sum(w[fin] * np.power(a[fin], p.values[fin])))
    sup = float(a[~fin].max()) if (~fin).any() else 0.0
    return integral, sup


def modular(f, p: Exponent, group: MeasuredGroup, kind: ModularKind = ModularKind.SUM) -> float:
    a = np.abs(as_function(f, group))
    if a.size != len(p):
        raise ValueError("function and exponent sizes differ")
    kind = ModularKind(kind)
    w = group.weights
    integral, sup = _parts(a, p, w)
    if kind is ModularKind.SUM:
        return integral + sup
    if kind is ModularKind.MAX:
        return max(integral, sup)
    if sup > 1.0:
        return float("inf")
    return integral


def all_modulars(f, p: Exponent, group: MeasuredGroup) -> dict[str, float]:
    return {k.value: modular(f, p, group, k) for k in ModularKind}


def modular_of_quotient(f, t: float, p: Exponent, group: MeasuredGroup,
                        kind: ModularKind = ModularKind.SUM) -> float:
    if not t > 0:
        raise ValueError("t must be positive")
    return modular(np.abs(as_function(f, group)) / t, p, group, kind)


def quotient_evaluator(f, p: Exponent, group: MeasuredGroup,
                       kind: ModularKind = ModularKind.SUM) -> Callable[[float], float]:
    """Return ``t -> modular(f / t)`` with the per-atom logs precomputed.

    Agrees with :func:`modular_of_quotient` to rounding; used by the norm
    solvers, which call it dozens of times per solve.
    """
    a = np.abs(as_function(f, group))
    kind = ModularKind(kind)
    fin = p.finite_part
    live = fin & (a > 0)
    q = p.values[live]
    c = np.log(group.weights[live]) + q * np.log(a[live])
    sup = float(a[~fin].max()) if (~fin).any() else 0.0

    def rho(t: float) -> float:
        with np.errstate(over="ignore"):
            integral = float(np.sum(np.exp(c - q * np.log(t)))) if q.size else 0.0
        s = sup / t
        if kind is ModularKind.SUM:
            return integral + s
        if kind is ModularKind.MAX:
            return max(integral, s)
        return float("inf") if s > 1.0 else integral

    return rho
