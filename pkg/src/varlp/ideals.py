"""Finite-dimensional check that closed left ideals are exactly the
left-translation-invariant subspaces (and the right-sided analogue).

Subspaces are stored by a basis orthonormal for the weighted inner product
<f, g> = sum w f conj(g). Membership is decided by projection residuals; a
nonzero residual direction plays the role of a separating functional.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .algebra import convolve, delta, right_translate, translate
from .exponent import Exponent
from .group import MeasuredGroup
from .modular import as_function

RANK_TOL = 1e-10
IDEAL_TOL = 1e-8


@dataclass(frozen=True)
class Subspace:
    basis: np.ndarray  # (dim, n), rows orthonormal in the weighted product
    n: int
    rank_tol: float = RANK_TOL

    @property
    def dim(self) -> int:
        return int(self.basis.shape[0])


def inner(f, g, group: MeasuredGroup) -> complex:
    return np.sum(group.weights * f * np.conj(g))


def wnorm(f, group: MeasuredGroup) -> float:
    return float(np.sqrt(np.sum(group.weights * np.abs(f) ** 2)))


def subspace_from_spanners(vectors, group: MeasuredGroup, rank_tol: float = RANK_TOL) -> Subspace:
    """Orthonormal basis of span(vectors) via SVD of the weight-scaled matrix.

    Singular values below ``rank_tol`` times the largest are dropped. An
    all-zero input gives the zero subspace.
    """
    V = np.array([as_function(v, group) for v in vectors])
    if V.size == 0:
        raise ValueError("need at least one spanning vector")
    s_w = np.sqrt(group.weights)
    A = (V * s_w).T  # columns are scaled spanners
    U, S, _ = np.linalg.svd(A, full_matrices=False)
    if S.size == 0 or S[0] == 0:
        return Subspace(np.zeros((0, group.n), dtype=A.dtype), group.n, rank_tol)
    keep = S > rank_tol * S[0]
    basis = (U[:, keep] / s_w[:, None]).T
    return Subspace(basis, group.n, rank_tol)


def zero_subspace(group: MeasuredGroup) -> Subspace:
    return Subspace(np.zeros((0, group.n)), group.n)


def whole_space(group: MeasuredGroup) -> Subspace:
    return subspace_from_spanners(np.eye(group.n), group)


def project(f, M: Subspace, group: MeasuredGroup) -> tuple[np.ndarray, float]:
    f = as_function(f, group)
    if M.dim == 0:
        return np.zeros_like(f), wnorm(f, group)
    coeffs = (M.basis.conj() * group.weights) @ f
    in_m = coeffs @ M.basis
    if not np.iscomplexobj(f) and not np.iscomplexobj(M.basis):
        in_m = np.real(in_m)
    return in_m, wnorm(f - in_m, group)


@dataclass
class Verdict:
    holds: bool
    witness: tuple | None = None  # (element, basis index, residual)


def _scan(M: Subspace, group: MeasuredGroup, op, tol: float) -> Verdict:
    for x in range(group.n):
        for i, b in enumerate(M.basis):
            v = op(b, x)
            scale = max(wnorm(v, group), 1.0)
            _, res = project(v, M, group)
            if res > tol * scale:
                return Verdict(False, (x, i, res))
    return Verdict(True)


def is_translation_invariant(M: Subspace, group: MeasuredGroup, tol: float = IDEAL_TOL,
                             side: str = "left") -> Verdict:
    """L_x(M) <= M for all x (``side="right"``: R_x(M) <= M)."""
    op = (lambda b, x: translate(b, x, group)) if side == "left" else \
        (lambda b, x: right_translate(b, x, group))
    return _scan(M, group, op, tol)


def is_left_ideal(M: Subspace, group: MeasuredGroup, mode: str = "exhaustive", trials: int = 64,
                  seed=0, tol: float = IDEAL_TOL) -> Verdict:
    """g * m in M for all g and m in M.

    ``exhaustive`` tests every point mass against every basis vector, which
    suffices by bilinearity; ``randomized`` samples (g, m) pairs instead.
    """
    if mode == "exhaustive":
        return _scan(M, group, lambda b, x: convolve(delta(x, group), b, group), tol)
    return _random_scan(M, group, trials, seed, tol, left=True)


def is_right_ideal(M: Subspace, group: MeasuredGroup, mode: str = "exhaustive", trials: int = 64,
                   seed=0, tol: float = IDEAL_TOL) -> Verdict:
    if mode == "exhaustive":
        return _scan(M, group, lambda b, x: convolve(b, delta(x, group), group), tol)
    return _random_scan(M, group, trials, seed, tol, left=False)


def _random_scan(M, group, trials, seed, tol, left):
    if M.dim == 0:
        return Verdict(True)
    rng = np.random.default_rng(seed)
    for t in range(trials):
        j = rng.standard_normal(group.n)
        c = rng.standard_normal(M.dim)
        i = c @ M.basis
        v = convolve(j, i, group) if left else convolve(i, j, group)
        _, res = project(v, M, group)
        if res > tol * max(wnorm(v, group), 1.0):
            return Verdict(False, (t, -1, res))
    return Verdict(True)


def separating_functional_gap(M: Subspace, group: MeasuredGroup, seed=0) -> float:
    """Check Psi(j * i) = sum_y w(y) j(y) Psi(L_y i) for a random Psi vanishing on M.

    Psi(xi) = sum w xi phi with phi orthogonal (conjugated) to M. Returns the
    absolute discrepancy between the two sides.
    """
    rng = np.random.default_rng(seed)
    phi = rng.standard_normal(group.n)
    in_m, _ = project(phi, M, group)
    phi = np.conj(phi - in_m)

    def psi(xi):
        return np.sum(group.weights * xi * phi)

    j = rng.standard_normal(group.n)
    c = rng.standard_normal(max(M.dim, 1))
    i = c[:M.dim] @ M.basis if M.dim else rng.standard_normal(group.n)
    lhs = psi(convolve(j, i, group))
    rhs = sum(group.weights[y] * j[y] * psi(translate(i, y, group)) for y in range(group.n))
    return float(abs(lhs - rhs))


def translate_span(fs, group: MeasuredGroup, side: str = "left") -> Subspace:
    op = translate if side == "left" else right_translate
    return subspace_from_spanners([op(f, x, group) for f in fs for x in range(group.n)], group)


@dataclass
class IdealInstance:
    origin: str
    dim: int
    side: str
    invariant: bool
    ideal: bool
    witness_invariant: tuple | None
    witness_ideal: tuple | None

    @property
    def consistent(self) -> bool:
        return self.invariant == self.ideal


@dataclass
class IdealTheoremReport:
    group: str
    instances: list[IdealInstance] = field(default_factory=list)

    @property
    def violations(self) -> list[IdealInstance]:
        return [r for r in self.instances if not r.consistent]

    def count(self, side: str, invariant: bool) -> int:
        return sum(1 for r in self.instances if r.side == side and r.invariant == invariant)


def generate_subspaces(group: MeasuredGroup, trials: int, rng, side: str = "left"):
    """Yield (origin, Subspace) in three flavours: translate spans, random
    spans, and random spans plus one translate of a member."""
    n = group.n
    op = translate if side == "left" else right_translate
    for t in range(trials):
        flavour = t % 3
        if flavour == 0:
            k = int(rng.integers(1, 3))
            fs = [rng.standard_normal(n) for _ in range(k)]
            if rng.random() < 0.5:
                fs = [_invariant_seed(group, rng, side)]
            yield "translate-span", translate_span(fs, group, side)
        elif flavour == 1:
            k = int(rng.integers(1, n + 1))
            yield "random-span", subspace_from_spanners([rng.standard_normal(n) for _ in range(k)], group)
        else:
            k = int(rng.integers(1, max(2, n // 2) + 1))
            vs = [rng.standard_normal(n) for _ in range(k)]
            vs.append(op(vs[0], int(rng.integers(n)), group))
            yield "random-plus-translate", subspace_from_spanners(vs, group)


def _invariant_seed(group, rng, side):
    """A function constant on cosets of a small subgroup, so its translate
    span is a proper invariant subspace."""
    n = group.n
    x = int(rng.integers(n))
    # cyclic subgroup generated by x
    sub = [group.e]
    cur = x
    while cur != group.e:
        sub.append(cur)
        cur = int(group.mul[cur, x])
    f = np.zeros(n)
    base = rng.standard_normal(n)
    for y in range(n):
        # left translates preserve functions constant on cosets yH, right ones on Hy
        members = [int(group.mul[y, s]) for s in sub] if side == "left" else \
            [int(group.mul[s, y]) for s in sub]
        f[y] = base[min(members)]
    return f


def ideal_theorem_check(group: MeasuredGroup, p: Exponent | None = None, trials: int = 100,
                        seed=0, tol: float = IDEAL_TOL) -> IdealTheoremReport:
    """Compare translation invariance with the ideal property on generated subspaces.

    The exponent does not enter: in finite dimension every norm induces the
    same topology, so the equivalence is norm-independent. It is accepted
    for interface symmetry.
    """
    rng = np.random.default_rng(seed)
    rep = IdealTheoremReport(group.name)
    for side in ("left", "right"):
        ideal_fn = is_left_ideal if side == "left" else is_right_ideal
        for origin, M in generate_subspaces(group, trials, rng, side):
            inv = is_translation_invariant(M, group, tol, side)
            idl = ideal_fn(M, group, tol=tol)
            rep.instances.append(IdealInstance(origin, M.dim, side, inv.holds, idl.holds,
                                               inv.witness, idl.witness))
    return rep
