"""Convolution algebra of a finite measured group.

Translations, convolution, approximate identities built from normalized
indicators of shrinking neighbourhoods, identity detection, and the
submultiplicativity probe.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .exponent import Exponent, is_translation_invariant_exponent
from .group import MeasuredGroup
from .modular import ModularKind, as_function, modular
from .norms import DEFAULT_TOL, l1_embedding_constant, luxemburg_norm


def translate(f, x: int, group: MeasuredGroup) -> np.ndarray:
    """Left translate (L_x f)(y) = f(x^{-1} y)."""
    f = as_function(f, group)
    return f[group.mul[group.inv[x]]]


def right_translate(f, x: int, group: MeasuredGroup) -> np.ndarray:
    """Right translate (R_x f)(y) = f(y x)."""
    f = as_function(f, group)
    return f[group.mul[:, x]]


def delta(x: int, group: MeasuredGroup) -> np.ndarray:
    d = np.zeros(group.n)
    d[x] = 1.0
    return d


def is_standard_cyclic(group: MeasuredGroup) -> bool:
    n = group.n
    a = np.arange(n)
    return (group.e == 0 and np.all(group.weights == group.weights[0])
            and np.array_equal(group.mul[1 % n], (a + 1) % n)
            and np.array_equal(group.mul, (a[:, None] + a[None, :]) % n))


def convolve(f, g, group: MeasuredGroup, fast: bool = False) -> np.ndarray:
    """(f * g)(x) = sum_y w(y) f(y) g(y^{-1} x).

    The direct O(n^2) sum is the reference. ``fast=True`` uses the FFT on
    standard cyclic groups with uniform weights and falls back otherwise.
    """
    f = as_function(f, group)
    g = as_function(g, group)
    if fast and is_standard_cyclic(group):
        out = np.fft.ifft(np.fft.fft(f) * np.fft.fft(g)) * group.weights[0]
        if not (np.iscomplexobj(f) or np.iscomplexobj(g)):
            out = out.real
        return out
    return (group.weights * f) @ g[group.mul[group.inv]]


@dataclass(frozen=True)
class NeighborhoodChain:
    """Nested neighbourhoods U_1 >= U_2 >= ... of the identity, as index masks."""
    sets: tuple

    def __post_init__(self):
        if not self.sets:
            raise ValueError("empty neighbourhood chain")
        masks = tuple(np.asarray(s, dtype=bool) for s in self.sets)
        for m in masks:
            if not m.any():
                raise ValueError("neighbourhoods must be nonempty")
        for big, small in zip(masks, masks[1:]):
            if np.any(small & ~big):
                raise ValueError("neighbourhood chain is not nested")
        object.__setattr__(self, "sets", masks)

    def check(self, group: MeasuredGroup):
        for m in self.sets:
            if m.size != group.n or not m[group.e]:
                raise ValueError("every neighbourhood must contain the identity")

    def __len__(self):
        return len(self.sets)

    def sizes(self) -> list[int]:
        return [int(m.sum()) for m in self.sets]


def arc(group: MeasuredGroup, atoms: int) -> np.ndarray:
    """Symmetric arc of ``atoms`` (odd) grid points around 0 on a cyclic grid."""
    if atoms < 1 or atoms % 2 == 0:
        raise ValueError("arcs have an odd number of atoms (2m+1)")
    n = group.n
    if atoms > n:
        raise ValueError("arc longer than the circle")
    m = atoms // 2
    mask = np.zeros(n, dtype=bool)
    mask[np.arange(-m, m + 1) % n] = True
    return mask


def circle_chain(group: MeasuredGroup, counts=(65, 33, 17, 9, 5, 3, 1)) -> NeighborhoodChain:
    chain = NeighborhoodChain(tuple(arc(group, c) for c in counts))
    chain.check(group)
    return chain


def approximate_identity_family(group: MeasuredGroup, chain: NeighborhoodChain) -> list[np.ndarray]:
    """xi_U = chi_U / mu(U) for each U in the chain."""
    chain.check(group)
    out = []
    for m in chain.sets:
        mass = float(np.sum(group.weights[m]))
        out.append(np.where(m, 1.0 / mass, 0.0))
    return out


@dataclass
class ApproxIdentityReport:
    sizes: list[int]
    errors: list[float]
    averaged_lhs: list[float]
    averaged_rhs: list[float]
    bound_ok: list[bool]

    @property
    def strictly_decreasing(self) -> bool:
        return all(b < a for a, b in zip(self.errors, self.errors[1:]))

    @property
    def nonincreasing(self) -> bool:
        return all(b <= a for a, b in zip(self.errors, self.errors[1:]))


def approximate_identity_convergence(f, p: Exponent, group: MeasuredGroup, chain: NeighborhoodChain,
                                     kind: ModularKind = ModularKind.SUM,
                                     tol: float = DEFAULT_TOL) -> ApproxIdentityReport:
    """Errors ||xi_U * f - f|| along the chain, plus the averaging bound.

    The bound checked at each U is
    modular(xi_U * f - f) <= max_{t in U} modular(L_t f - f) + band,
    the convexity step that drives the convergence argument.
    """
    f = as_function(f, group)
    xis = approximate_identity_family(group, chain)
    band = 10 * tol
    shift_mod = np.array([modular(translate(f, t, group) - f, p, group, kind) for t in range(group.n)])
    rep = ApproxIdentityReport(chain.sizes(), [], [], [], [])
    for xi, m in zip(xis, chain.sets):
        diff = convolve(xi, f, group) - f
        rep.errors.append(luxemburg_norm(diff, p, group, kind, tol).value)
        lhs = modular(diff, p, group, kind)
        rhs = float(shift_mod[m].max())
        rep.averaged_lhs.append(lhs)
        rep.averaged_rhs.append(rhs)
        rep.bound_ok.append(bool(lhs <= rhs + band * max(1.0, rhs)))
    return rep


@dataclass
class InvarianceReport:
    deviation: float
    worst_element: int
    invariant_exponent: bool
    passed: bool


def translation_invariance_probe(f, p: Exponent, group: MeasuredGroup,
                                 kind: ModularKind = ModularKind.SUM,
                                 tol: float = DEFAULT_TOL) -> InvarianceReport:
    """max_x | ||L_x f|| - ||f|| | / ||f||.

    Only asserted (``passed``) for translation-invariant exponents; for any
    other exponent the deviation is reported and ``passed`` is True.
    """
    f = as_function(f, group)
    base = luxemburg_norm(f, p, group, kind, tol).value
    inv_p = is_translation_invariant_exponent(p, group)
    if base == 0:
        return InvarianceReport(0.0, group.e, inv_p, True)
    devs = [abs(luxemburg_norm(translate(f, x, group), p, group, kind, tol).value - base) / base
            for x in range(group.n)]
    worst = int(np.argmax(devs))
    dev = float(devs[worst])
    return InvarianceReport(dev, worst, inv_p, (dev <= 10 * tol) if inv_p else True)


@dataclass
class ContinuityTable:
    shifts: list[int]
    angles: list[float]
    modulus: list[float]

    @property
    def nondecreasing(self) -> bool:
        return all(b >= a for a, b in zip(self.modulus, self.modulus[1:]))


def translation_continuity_probe(f, p: Exponent, group: MeasuredGroup,
                                 kind: ModularKind = ModularKind.SUM, max_shift: int | None = None,
                                 tol: float = DEFAULT_TOL) -> ContinuityTable:
    """delta -> max_{|x| <= delta} ||L_x f - f|| on a cyclic grid (delta in atoms)."""
    if not is_standard_cyclic(group):
        raise ValueError("continuity probe needs a cyclic grid")
    f = as_function(f, group)
    n = group.n
    if max_shift is None:
        max_shift = min(n // 2, 16)
    per_shift = {}
    for s in range(-max_shift, max_shift + 1):
        per_shift[s] = luxemburg_norm(translate(f, s % n, group) - f, p, group, kind, tol).value
    table = ContinuityTable([], [], [])
    running = 0.0
    for d in range(max_shift + 1):
        running = max(running, per_shift[d], per_shift[-d])
        table.shifts.append(d)
        table.angles.append(2 * np.pi * d / n)
        table.modulus.append(running)
    return table


@dataclass
class IdentityCertificate:
    h: np.ndarray
    residual: float
    passed: bool
    norm: float


def find_identity(group: MeasuredGroup, p: Exponent, kind: ModularKind = ModularKind.SUM,
                  tol: float = DEFAULT_TOL) -> IdentityCertificate:
    """Candidate h = chi_e / w(e), certified against every point mass.

    The point masses span the space, so a passing certificate proves h is
    a two-sided identity of the finite algebra.
    """
    h = delta(group.e, group) / group.weights[group.e]
    worst = 0.0
    for x in range(group.n):
        d = delta(x, group)
        for prod in (convolve(h, d, group), convolve(d, h, group)):
            worst = max(worst, luxemburg_norm(prod - d, p, group, kind, tol).value)
    norm = luxemburg_norm(h, p, group, kind, tol).value
    return IdentityCertificate(h, worst, worst <= 10 * tol, norm)


@dataclass
class SubmultReport:
    c_hat: float
    k: float
    trials: int
    chain_holds: int
    worst_chain_ratio: float
    ratios: list[float] = field(default_factory=list, repr=False)

    @property
    def chain_ok(self) -> bool:
        return self.chain_holds == self.trials


def _random_function(rng, n: int) -> np.ndarray:
    f = rng.standard_normal(n) * np.exp(rng.uniform(-1.5, 1.5, size=n))
    if rng.random() < 0.3:
        f = np.abs(f)
    if rng.random() < 0.2:
        f[rng.random(n) < 0.5] = 0.0
    if not f.any():
        f[rng.integers(n)] = 1.0
    return f


def submultiplicativity_report(p: Exponent, group: MeasuredGroup, kind: ModularKind = ModularKind.SUM,
                               trials: int = 100, seed=0, tol: float = DEFAULT_TOL) -> SubmultReport:
    """Empirical constant C_hat = max ||f*g|| / (||f|| ||g||) and the chain
    ||f*g|| <= k ||f|| max_y ||L_y g||, with k the L^1 embedding constant."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = np.random.default_rng(seed)
    k = l1_embedding_constant(p, group, trials=32, seed=seed, kind=kind, tol=tol)
    inv_p = is_translation_invariant_exponent(p, group)
    band = 10 * tol
    rep = SubmultReport(0.0, k, trials, 0, 0.0)
    for _ in range(trials):
        f = _random_function(rng, group.n)
        g = _random_function(rng, group.n)
        nf = luxemburg_norm(f, p, group, kind, tol).value
        ng = luxemburg_norm(g, p, group, kind, tol).value
        nfg = luxemburg_norm(convolve(f, g, group), p, group, kind, tol).value
        if inv_p:
            max_shift = ng
        else:
            max_shift = max(luxemburg_norm(translate(g, y, group), p, group, kind, tol).value
                            for y in range(group.n))
        ratio = nfg / (nf * ng)
        rep.ratios.append(ratio)
        rep.c_hat = max(rep.c_hat, ratio)
        bound = k * nf * max_shift
        rep.worst_chain_ratio = max(rep.worst_chain_ratio, nfg / bound)
        if nfg <= bound * (1 + band):
            rep.chain_holds += 1
    return rep
