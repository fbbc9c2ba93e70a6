"""Finite measured groups: multiplication tables plus left Haar weights.

Elements are identified by index ``0..n-1``. Two families of carriers are
provided: discrete groups with counting measure and uniform grids on the
circle, which are cyclic groups whose atoms all weigh ``1/n``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

MAX_ORDER = 4096
EXHAUSTIVE_ASSOC_ORDER = 64


class GroupError(ValueError):
    pass


@dataclass(frozen=True)
class GroupTable:
    mul: np.ndarray
    inv: np.ndarray
    e: int

    @property
    def n(self) -> int:
        return int(self.mul.shape[0])


@dataclass(frozen=True)
class MeasuredGroup:
    table: GroupTable
    weights: np.ndarray
    labels: tuple[str, ...] | None = None
    name: str = ""

    def __post_init__(self):
        # freeze the arrays so instances can be shared between workers
        for arr in (self.table.mul, self.table.inv, self.weights):
            arr.setflags(write=False)

    @property
    def n(self) -> int:
        return self.table.n

    @property
    def mul(self) -> np.ndarray:
        return self.table.mul

    @property
    def inv(self) -> np.ndarray:
        return self.table.inv

    @property
    def e(self) -> int:
        return self.table.e

    @property
    def total_mass(self) -> float:
        return float(np.sum(self.weights))

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def is_counting(self) -> bool:
        return bool(np.all(self.weights == 1.0))


def _make(mul, e, weights, labels=None, name="") -> MeasuredGroup:
    mul = np.asarray(mul, dtype=np.int64)
    n = mul.shape[0]
    if n > MAX_ORDER:
        raise GroupError(f"group order {n} exceeds cap {MAX_ORDER}")
    inv = np.empty(n, dtype=np.int64)
    rows, cols = np.nonzero(mul == e)
    inv[rows] = cols
    weights = np.asarray(weights, dtype=float)
    if weights.shape != (n,):
        raise GroupError("one weight per element required")
    if np.any(~(weights > 0)):
        raise GroupError("Haar weights must be strictly positive")
    return MeasuredGroup(GroupTable(mul, inv, int(e)), weights,
                         tuple(labels) if labels is not None else None, name)


def build_cyclic(n: int, atom_weight: float = 1.0) -> MeasuredGroup:
    """Z_n with uniform weights; ``atom_weight=1/n`` models the circle."""
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    if not atom_weight > 0:
        raise GroupError("atom weight must be positive")
    a = np.arange(n)
    mul = (a[:, None] + a[None, :]) % n
    name = f"cyclic:{n}" if atom_weight == 1.0 else f"cyclic:{n}:w={atom_weight!r}"
    return _make(mul, 0, np.full(n, float(atom_weight)), [str(i) for i in a], name)


def build_circle(n: int) -> MeasuredGroup:
    return build_cyclic(n, 1.0 / n)


def build_dihedral(n: int) -> MeasuredGroup:
    """Symmetries of the n-gon, order 2n, element ``r^k s^b`` at index ``b*n + k``."""
    if n < 1:
        raise GroupError("dihedral group needs n >= 1")
    if 2 * n > MAX_ORDER:
        raise GroupError(f"group order {2 * n} exceeds cap {MAX_ORDER}")
    idx = np.arange(2 * n)
    k, b = idx % n, idx // n
    k1, b1 = k[:, None], b[:, None]
    k2, b2 = k[None, :], b[None, :]
    # s r^k = r^{-k} s
    kk = np.where(b1 == 0, k1 + k2, k1 - k2) % n
    bb = (b1 + b2) % 2
    mul = bb * n + kk
    labels = [("r^%d" % kk_) + ("s" if bb_ else "") for bb_, kk_ in zip(b, k)]
    return _make(mul, 0, np.ones(2 * n), labels, f"dihedral:{n}")


def build_symmetric(k: int) -> MeasuredGroup:
    """S_k for k <= 4; composition is ``(a*b)(i) = a(b(i))``."""
    if not 1 <= k <= 4:
        raise GroupError("symmetric groups are limited to k <= 4")
    perms = list(itertools.permutations(range(k)))
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    mul = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(perms):
        for j, b in enumerate(perms):
            mul[i, j] = index[tuple(a[b[t]] for t in range(k))]
    labels = ["".join(str(x) for x in p) for p in perms]
    return _make(mul, index[tuple(range(k))], np.ones(n), labels, f"symmetric:{k}")


def build_product(G: MeasuredGroup, K: MeasuredGroup) -> MeasuredGroup:
    """Direct product; the pair (g, k) sits at index ``g * K.n + k``."""
    n = G.n * K.n
    if n > MAX_ORDER:
        raise GroupError(f"group order {n} exceeds cap {MAX_ORDER}")
    g = np.arange(n) // K.n
    k = np.arange(n) % K.n
    mul = G.mul[g[:, None], g[None, :]] * K.n + K.mul[k[:, None], k[None, :]]
    weights = G.weights[g] * K.weights[k]
    gl = G.labels or tuple(map(str, range(G.n)))
    kl = K.labels or tuple(map(str, range(K.n)))
    labels = [f"({gl[a]},{kl[b]})" for a, b in zip(g, k)]
    return _make(mul, G.e * K.n + K.e, weights, labels, f"product({G.name},{K.name})")


def from_table(mul, weights, e: int | None = None, name: str = "custom") -> MeasuredGroup:
    """Wrap a user table without checking it; run :func:`validate` afterwards."""
    mul = np.asarray(mul, dtype=np.int64)
    n = mul.shape[0]
    if e is None:
        e = next((i for i in range(n) if np.array_equal(mul[i], np.arange(n))), 0)
    inv = np.zeros(n, dtype=np.int64)
    for a in range(n):
        hits = np.nonzero(mul[a] == e)[0]
        inv[a] = hits[0] if hits.size else -1
    return MeasuredGroup(GroupTable(mul, inv, int(e)), np.asarray(weights, dtype=float), None, name)


@dataclass
class Violation:
    axiom: str
    witness: tuple

    def __str__(self):
        return f"{self.axiom} violated at {self.witness}"


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        # truthy when something is wrong, so ``if validate(G): ...`` reads naturally
        return bool(self.violations)

    def __len__(self):
        return len(self.violations)


def validate(group: MeasuredGroup, seed: int = 0, samples: int = 200_000) -> ValidationReport:
    """Check the group axioms and left invariance of the weights.

    Associativity is checked exhaustively up to order 64 and on random
    triples above that. Each failed axiom contributes one witness.
    """
    rep = ValidationReport()
    mul, inv, e, w = group.mul, group.inv, group.e, group.weights
    n = mul.shape[0]
    if mul.shape != (n, n) or mul.min() < 0 or mul.max() >= n:
        rep.violations.append(Violation("closure", (int(mul.min()), int(mul.max()))))
        return rep
    a = np.arange(n)

    bad = np.nonzero((mul[e] != a) | (mul[:, e] != a))[0]
    if bad.size:
        x = int(bad[0])
        rep.violations.append(Violation("identity", (e, x, int(mul[e, x]))))

    okinv = (inv >= 0) & (inv < n)
    bad = np.nonzero(~okinv | (mul[a, np.clip(inv, 0, n - 1)] != e))[0]
    if bad.size:
        rep.violations.append(Violation("inverse", (int(bad[0]), int(inv[bad[0]]))))

    if n <= EXHAUSTIVE_ASSOC_ORDER:
        lhs = mul[mul[:, :, None], a[None, None, :]]
        rhs = mul[a[:, None, None], mul[None, :, :]]
        bad = np.argwhere(lhs != rhs)
    else:
        rng = np.random.default_rng(seed)
        t = rng.integers(0, n, size=(samples, 3))
        lhs = mul[mul[t[:, 0], t[:, 1]], t[:, 2]]
        rhs = mul[t[:, 0], mul[t[:, 1], t[:, 2]]]
        bad = t[lhs != rhs]
    if len(bad):
        rep.violations.append(Violation("associativity", tuple(int(v) for v in bad[0])))

    for g in range(n):
        row = mul[g]
        if np.unique(row).size != n:
            rep.violations.append(Violation("left translation is a bijection", (g,)))
            break
        moved = np.nonzero(w[row] != w)[0]
        if moved.size:
            s = int(moved[0])
            rep.violations.append(Violation(
                "left invariance of weights", (g, s, float(w[s]), float(w[row[s]]))))
            break
    if np.any(~(w > 0)):
        rep.violations.append(Violation("positive weights", (int(np.argmin(w)),)))
    return rep
