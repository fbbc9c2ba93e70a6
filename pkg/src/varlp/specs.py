"""Parsing of the inline descriptors and text files accepted by the CLI.

Groups:     ``cyclic:N[:w=W]``, ``circle:N``, ``dihedral:N``, ``symmetric:K``,
            ``klein``, ``product:SPEC*SPEC[*...]``, ``file:PATH`` (JSON).
Exponents:  ``const:Q``, ``random:lo,hi,frac,seed``, ``values:a,b,...``, ``file:PATH``.
Functions:  ``cos:K`` (K-th harmonic on the grid), ``random:SEED``, ``ones``,
            ``delta:X``, ``values:a,b,...``, ``file:PATH`` or a bare path.
Weights and values accept fractions such as ``1/256``.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import reduce
from pathlib import Path

import numpy as np

from .exponent import Exponent, constant, sample_exponent
from .group import (MeasuredGroup, build_cyclic, build_dihedral, build_product,
                    build_symmetric)


class SpecError(ValueError):
    pass


def _number(tok: str) -> float:
    tok = tok.strip()
    if tok.lower() in ("inf", "+inf", "infinity", "∞"):
        return math.inf
    try:
        return float(Fraction(tok))
    except (ValueError, ZeroDivisionError):
        try:
            return float(tok)
        except ValueError:
            raise SpecError(f"not a number: {tok!r}") from None


def _int(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise SpecError(f"not an integer: {tok!r}") from None


def parse_group(spec: str) -> MeasuredGroup:
    spec = spec.strip()
    kind, _, rest = spec.partition(":")
    kind = kind.lower()
    if kind == "file":
        return group_from_file(rest)
    if kind == "product":
        parts = [s for s in rest.split("*") if s]
        if len(parts) < 2:
            raise SpecError("product needs at least two factors: product:A*B")
        return reduce(build_product, (parse_group(p) for p in parts))
    if kind == "klein":
        return build_product(build_cyclic(2), build_cyclic(2))
    fields = rest.split(":") if rest else []
    params = [f for f in fields if "=" not in f]
    opts = dict(f.split("=", 1) for f in fields if "=" in f)
    try:
        if kind == "cyclic":
            return build_cyclic(_int(params[0]), _number(opts.get("w", "1")))
        if kind == "circle":
            n = _int(params[0])
            return build_cyclic(n, 1.0 / n)
        if kind == "dihedral":
            return build_dihedral(_int(params[0]))
        if kind == "symmetric":
            return build_symmetric(_int(params[0]))
    except IndexError:
        raise SpecError(f"missing size in group spec {spec!r}") from None
    raise SpecError(f"unknown group kind {kind!r}")


def group_from_dict(d: dict) -> MeasuredGroup:
    kind = d.get("kind")
    if kind == "product":
        return reduce(build_product, (group_from_dict(x) for x in d["factors"]))
    if kind == "cyclic":
        return build_cyclic(int(d["n"]), _number(str(d.get("atom_weight", 1))))
    if kind == "dihedral":
        return build_dihedral(int(d["n"]))
    if kind == "symmetric":
        return build_symmetric(int(d.get("k", d.get("n"))))
    raise SpecError(f"unknown group kind {kind!r}")


def group_from_file(path: str) -> MeasuredGroup:
    with open(path) as fh:
        return group_from_dict(json.load(fh))


def read_values(path: str) -> list[float]:
    text = Path(path).read_text()
    return [_number(t) for t in text.split() if t.strip()]


def parse_exponent(spec: str, group: MeasuredGroup) -> Exponent:
    kind, _, rest = spec.strip().partition(":")
    kind = kind.lower()
    if kind == "const":
        return constant(_number(rest), group.n)
    if kind == "random":
        toks = rest.split(",")
        if len(toks) != 4:
            raise SpecError("random exponent spec is random:lo,hi,frac,seed")
        lo, hi, frac = (_number(t) for t in toks[:3])
        return sample_exponent(group, lo, hi, frac, _int(toks[3]))
    if kind == "values":
        vals = [_number(t) for t in rest.split(",")]
    elif kind == "file":
        vals = read_values(rest)
    else:
        raise SpecError(f"unknown exponent spec {spec!r}")
    if len(vals) != group.n:
        raise SpecError(f"exponent has {len(vals)} entries, group has {group.n}")
    return Exponent(np.array(vals))


def parse_function(spec: str, group: MeasuredGroup) -> np.ndarray:
    kind, sep, rest = spec.strip().partition(":")
    kind = kind.lower()
    n = group.n
    if kind == "cos":
        k = _int(rest) if rest else 1
        return np.cos(2 * np.pi * k * np.arange(n) / n)
    if kind == "random":
        return np.random.default_rng(_int(rest or "0")).standard_normal(n)
    if kind == "ones":
        return np.ones(n)
    if kind == "delta":
        f = np.zeros(n)
        f[_int(rest)] = 1.0
        return f
    if kind == "values":
        vals = [_number(t) for t in rest.split(",")]
    elif kind == "file":
        vals = read_values(rest)
    elif not sep or Path(spec).suffix:
        vals = read_values(spec)
    else:
        raise SpecError(f"unknown function spec {spec!r}")
    if len(vals) != n:
        raise SpecError(f"function has {len(vals)} values, group has {n}")
    arr = np.array(vals)
    if not np.all(np.isfinite(arr)):
        raise SpecError("function values must be finite")
    return arr
