import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from strategies import groups
from varlp import oracles
from varlp.algebra import (NeighborhoodChain, approximate_identity_convergence,
                           approximate_identity_family, arc, circle_chain, convolve, delta,
                           find_identity, is_standard_cyclic, right_translate,
                           submultiplicativity_report, translate, translation_continuity_probe,
                           translation_invariance_probe)
from varlp.exponent import Exponent, constant
from varlp.group import build_circle, build_cyclic, build_symmetric
from varlp.specs import parse_group

small = st.sampled_from(["cyclic:4", "symmetric:3", "dihedral:4", "klein", "circle:6"]).map(parse_group)


def _rand(seed, n):
    return np.random.default_rng(seed).standard_normal(n)


def test_convolution_matches_triple_loop(s3):
    f, g = _rand(1, 6), _rand(2, 6)
    ref = oracles.convolve_triple_loop(f, g, s3.mul.tolist(), s3.inv.tolist(), s3.weights.tolist())
    assert np.allclose(convolve(f, g, s3), ref, atol=1e-13)


def test_circulant_determinant_oracle():
    # det of the convolution operator g -> f * g on Z_n is prod of DFT values
    G = build_cyclic(5)
    f = np.array([1.0, 2.0, 0.5, -1.0, 0.3])
    M = np.column_stack([convolve(f, delta(j, G), G) for j in range(5)])
    assert np.linalg.det(M) == pytest.approx(oracles.circulant_determinant(f).real, rel=1e-10)


@pytest.mark.parametrize("spec", ["cyclic:4", "symmetric:3"])
def test_associativity(spec):
    G = parse_group(spec)
    f, g, h = _rand(3, G.n), _rand(4, G.n), _rand(5, G.n)
    lhs = convolve(convolve(f, g, G), h, G)
    rhs = convolve(f, convolve(g, h, G), G)
    assert np.max(np.abs(lhs - rhs)) <= 1e-10


@given(small, st.integers(0, 2 ** 31))
def test_delta_identity(G, seed):
    f = _rand(seed, G.n)
    e = delta(G.e, G) / G.weights[G.e]
    assert np.max(np.abs(convolve(e, f, G) - f)) <= 1e-12
    assert np.max(np.abs(convolve(f, e, G) - f)) <= 1e-12


@given(small, st.integers(0, 2 ** 31))
def test_left_equivariance(G, seed):
    f, g = _rand(seed, G.n), _rand(seed + 1, G.n)
    fg = convolve(f, g, G)
    for x in range(G.n):
        assert np.max(np.abs(translate(fg, x, G) - convolve(translate(f, x, G), g, G))) <= 1e-12


def test_commutativity_on_abelian_and_witness_on_s3(s3):
    G = parse_group("klein")
    f, g = _rand(6, 4), _rand(7, 4)
    assert np.allclose(convolve(f, g, G), convolve(g, f, G), atol=1e-13)
    # point masses at two non-commuting transpositions
    pairs = [(a, b) for a, b in itertools.product(range(6), repeat=2) if s3.mul[a, b] != s3.mul[b, a]]
    a, b = pairs[0]
    da, db = delta(a, s3), delta(b, s3)
    assert np.max(np.abs(convolve(da, db, s3) - convolve(db, da, s3))) >= 1.0


def test_translation_is_group_action(s3):
    f = _rand(8, 6)
    for x, y in itertools.product(range(6), repeat=2):
        assert np.array_equal(translate(translate(f, y, s3), x, s3), translate(f, int(s3.mul[x, y]), s3))


def test_right_translate_commutes_with_left(s3):
    f = _rand(9, 6)
    assert np.array_equal(right_translate(translate(f, 1, s3), 2, s3),
                          translate(right_translate(f, 2, s3), 1, s3))


def test_fft_path():
    G = build_circle(32)
    f, g = _rand(10, 32), _rand(11, 32)
    assert is_standard_cyclic(G)
    assert np.allclose(convolve(f, g, G, fast=True), convolve(f, g, G), atol=1e-13)
    S = build_symmetric(3)
    assert not is_standard_cyclic(S)
    assert np.allclose(convolve(f[:6], g[:6], S, fast=True), convolve(f[:6], g[:6], S))


def test_chain_validation():
    G = build_circle(16)
    with pytest.raises(ValueError):
        arc(G, 4)
    with pytest.raises(ValueError):
        NeighborhoodChain((arc(G, 3), arc(G, 5)))
    chain = circle_chain(G, (9, 5, 1))
    assert chain.sizes() == [9, 5, 1]
    fam = approximate_identity_family(G, chain)
    for xi in fam:
        assert np.sum(G.weights * xi) == pytest.approx(1.0)


def test_approximate_identity_on_circle():
    G = build_circle(256)
    f = np.cos(2 * np.pi * np.arange(256) / 256)
    rep = approximate_identity_convergence(f, constant(2, 256), G, circle_chain(G))
    assert rep.strictly_decreasing
    assert rep.errors[-1] <= 1e-12
    assert all(rep.bound_ok)


def test_identity_norm_closed_form():
    for n in (16, 64):
        G = build_circle(n)
        cert = find_identity(G, constant(3, n))
        assert cert.passed
        assert cert.norm == pytest.approx(oracles.identity_norm_closed_form(n, 3), rel=1e-9)


def test_identity_on_counting_group(s3):
    cert = find_identity(s3, Exponent(np.array([1.0, 2, 3, 4, 5, np.inf])))
    assert cert.passed
    assert cert.norm == pytest.approx(1.0)


def test_translation_probe_constant_vs_variable():
    G = build_cyclic(6)
    rep = translation_invariance_probe(_rand(12, 6), constant(2.5, 6), G)
    assert rep.invariant_exponent and rep.passed and rep.deviation <= 1e-9
    z2 = build_cyclic(2)
    rep = translation_invariance_probe([2.0, 1.0], Exponent(np.array([1.0, 2.0])), z2)
    # norms (1 + sqrt 2) and (1 + sqrt 17)/2
    a, b = 1 + math.sqrt(2), (1 + math.sqrt(17)) / 2
    assert rep.deviation == pytest.approx(abs(a - b) / a, rel=1e-8)
    assert not rep.invariant_exponent


def test_continuity_table():
    G = build_circle(64)
    tab = translation_continuity_probe(np.sin(2 * np.pi * np.arange(64) / 64), constant(2, 64), G, max_shift=8)
    assert tab.modulus[0] == 0
    assert tab.nondecreasing
    with pytest.raises(ValueError):
        translation_continuity_probe(np.ones(6), constant(2, 6), build_symmetric(3))


def test_submult_young_counting():
    G = build_cyclic(4)
    rep = submultiplicativity_report(constant(1, 4), G, trials=40, seed=3)
    assert rep.c_hat <= 1 + 1e-9
    assert rep.chain_ok
    assert rep.k == pytest.approx(1.0)


def test_submult_chain_variable_exponent(s3):
    p = Exponent(np.array([1.0, 1.5, 2.0, 3.0, 4.0, np.inf]))
    rep = submultiplicativity_report(p, s3, trials=40, seed=5)
    assert math.isfinite(rep.c_hat)
    assert rep.chain_ok
