"""The independent membership oracle and its agreement with reduction."""

import pytest

from injres.ring import BivarPoly, parse_poly
from injres.gfrac import (GeneralizedFraction, reduce_h2,
                          h2_canonical_fraction)
from injres.oracle import local_membership, cech_equal
from injres import samples


P = lambda t: parse_poly(t)


def GF(num, *dens):
    return GeneralizedFraction(P(num), [(P(b), e) for b, e in dens])


def test_local_membership_basics():
    assert local_membership(P("Z^2"), [P("Z"), P("W")])
    assert local_membership(P("Z*W + W^2"), [P("W")])
    assert not local_membership(P("Z"), [P("Z^2"), P("W")])
    # unit multiples: (1+Z)W lies in (W)
    assert local_membership(P("W + Z*W"), [P("W")])
    # membership that needs the local ring, not the polynomial ring
    assert local_membership(P("W"), [P("W + Z*W")])


def test_cech_equal_detects_known_identities():
    # [Z / Z^2, W] = [1 / Z, W]
    assert cech_equal(GF("Z", ("Z", 2), ("W", 1)), GF("1", ("Z", 1), ("W", 1)))
    # [W / Z, W^2] = [1 / Z, W]
    assert cech_equal(GF("W", ("Z", 1), ("W", 2)), GF("1", ("Z", 1), ("W", 1)))
    # vanishing: numerator in the denominator ideal
    assert cech_equal(GF("Z^2", ("Z", 2), ("W", 1)), GF("0", ("Z", 1), ("W", 1)))


def test_cech_equal_detects_inequality():
    assert not cech_equal(GF("1", ("Z", 1), ("W", 1)),
                          GF("1", ("Z", 2), ("W", 1)))
    assert not cech_equal(GF("1", ("Z", 1), ("W", 1)),
                          GF("0", ("Z", 1), ("W", 1)))


def test_cech_equal_swaps_slots_when_needed():
    # comparing against a fraction with the axis order flipped negates it
    assert cech_equal(GF("-1", ("W", 1), ("Z", 1)), GF("1", ("Z", 1), ("W", 1)))


def test_reduction_agrees_with_oracle_seeded():
    rng = samples.rng_from_seed(2024)
    for _ in range(60):
        num, d1, d2 = samples.random_h2_instance(rng)
        can = reduce_h2(num, d1, d2)
        gf = GeneralizedFraction(num, [d1, d2])
        assert cech_equal(gf, h2_canonical_fraction(can))
