import numpy as np
import pytest

from varlp.group import (GroupError, build_circle, build_cyclic, build_dihedral, build_product,
                         build_symmetric, from_table, validate)
from varlp.specs import parse_group

BUILDERS = [build_cyclic(1), build_cyclic(7), build_circle(16), build_dihedral(4), build_dihedral(5),
            build_symmetric(3), build_symmetric(4), build_product(build_cyclic(2), build_cyclic(2)),
            build_product(build_symmetric(3), build_cyclic(3))]


@pytest.mark.parametrize("G", BUILDERS, ids=lambda G: G.name)
def test_builders_validate(G):
    rep = validate(G)
    assert rep.ok, [str(v) for v in rep.violations]


@pytest.mark.parametrize("G,n", [(build_dihedral(4), 8), (build_symmetric(4), 24), (build_circle(16), 16)])
def test_orders(G, n):
    assert G.n == n


def test_abelian_flags():
    assert build_cyclic(5).is_abelian()
    assert parse_group("klein").is_abelian()
    assert not build_symmetric(3).is_abelian()
    assert not build_dihedral(4).is_abelian()


def test_circle_weights():
    G = build_circle(256)
    assert np.allclose(G.weights, 1 / 256)
    assert G.total_mass == pytest.approx(1.0)
    assert not G.is_counting()
    assert build_cyclic(3).is_counting()


def test_broken_inverse_has_witness():
    bad = from_table(np.array([[0, 1], [1, 1]]), np.ones(2))
    rep = validate(bad)
    assert not rep.ok
    assert rep
    assert any(v.axiom == "inverse" for v in rep.violations)


def test_nonassociative_table_detected():
    # a Latin square with identity 0 that is not a group table
    mul = np.array([[0, 1, 2, 3, 4],
                    [1, 0, 3, 4, 2],
                    [2, 4, 0, 1, 3],
                    [3, 2, 4, 0, 1],
                    [4, 3, 1, 2, 0]])
    rep = validate(from_table(mul, np.ones(5)))
    axioms = {v.axiom for v in rep.violations}
    assert "associativity" in axioms
    wit = next(v.witness for v in rep.violations if v.axiom == "associativity")
    a, b, c = wit
    assert mul[mul[a, b], c] != mul[a, mul[b, c]]


def test_non_invariant_weights_witness():
    G = build_cyclic(3)
    bad = from_table(G.mul, np.array([1.0, 2.0, 1.0]))
    rep = validate(bad)
    v = next(v for v in rep.violations if v.axiom == "left invariance of weights")
    g, s, w_s, w_moved = v.witness
    assert w_s != w_moved


def test_nonpositive_weight():
    rep = validate(from_table(build_cyclic(2).mul, np.array([1.0, 0.0])))
    assert any(v.axiom == "positive weights" for v in rep.violations)


def test_arrays_read_only():
    G = build_cyclic(4)
    with pytest.raises(ValueError):
        G.mul[0, 0] = 3
    with pytest.raises(ValueError):
        G.weights[0] = 2.0


def test_bad_orders():
    with pytest.raises(GroupError):
        build_cyclic(0)
    with pytest.raises(GroupError):
        build_symmetric(5)


def test_inverse_table(s3):
    a = np.arange(s3.n)
    assert np.all(s3.mul[a, s3.inv] == s3.e)
    assert np.all(s3.mul[s3.inv, a] == s3.e)
