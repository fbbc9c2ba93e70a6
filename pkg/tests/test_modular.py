import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from strategies import group_exponent_function
from varlp.exponent import Exponent, constant
from varlp.group import build_cyclic
from varlp.modular import (ModularKind, all_modulars, as_function, modular, modular_of_quotient,
                           quotient_evaluator)

SUM, MAX, MUS = ModularKind.SUM, ModularKind.MAX, ModularKind.MUSIELAK


def test_mixed_values(z2):
    p = Exponent(np.array([2.0, np.inf]))
    f = np.array([3.0, 0.5])
    assert modular(f, p, z2, SUM) == 9.5
    assert modular(f, p, z2, MAX) == 9.0
    assert modular(f, p, z2, MUS) == 9.0
    assert math.isinf(modular([3.0, 1.5], p, z2, MUS))


def test_musielak_threshold_inclusive(z2):
    p = Exponent(np.array([2.0, np.inf]))
    assert modular([0.0, 1.0], p, z2, MUS) == 0.0


def test_weighted():
    G = build_cyclic(4, 0.25)
    assert modular(np.full(4, 2.0), constant(2, 4), G) == pytest.approx(4.0)


def test_all_modulars_keys(z2):
    out = all_modulars([1, 1], constant(1, 2), z2)
    assert set(out) == {"sum", "max", "musielak"}


def test_quotient_rejects_nonpositive(z2):
    with pytest.raises(ValueError):
        modular_of_quotient([1, 1], 0.0, constant(2, 2), z2)


def test_as_function_checks(z2):
    with pytest.raises(ValueError):
        as_function([1, 2, 3], z2)
    with pytest.raises(ValueError):
        as_function([1, np.nan], z2)
    with pytest.raises(ValueError):
        as_function(np.ones((2, 2)))


@given(group_exponent_function(), st.floats(0.05, 20))
def test_quotient_evaluator_matches(gpf, t):
    G, p, f = gpf
    for kind in ModularKind:
        fast = quotient_evaluator(f, p, G, kind)(t)
        slow = modular_of_quotient(f, t, p, G, kind)
        if math.isinf(slow):
            assert math.isinf(fast)
        else:
            assert fast == pytest.approx(slow, rel=1e-10, abs=1e-300)


@given(group_exponent_function(), st.floats(0, 1))
def test_convexity(gpf, lam):
    G, p, f = gpf
    g = np.roll(f, 1) * 0.5
    for kind in (SUM, MAX):
        lhs = modular(lam * f + (1 - lam) * g, p, G, kind)
        rhs = lam * modular(f, p, G, kind) + (1 - lam) * modular(g, p, G, kind)
        assert lhs <= rhs * (1 + 1e-12) + 1e-12


@given(group_exponent_function())
def test_max_le_sum_le_twice_max(gpf):
    G, p, f = gpf
    s, m = modular(f, p, G, SUM), modular(f, p, G, MAX)
    assert m <= s <= 2 * m * (1 + 1e-15)


@given(group_exponent_function(nonzero=False))
def test_even_and_zero(gpf):
    G, p, f = gpf
    for kind in ModularKind:
        assert modular(-f, p, G, kind) == modular(f, p, G, kind)
        assert modular(np.zeros(G.n), p, G, kind) == 0.0
