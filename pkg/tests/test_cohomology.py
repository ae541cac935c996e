"""Local cohomology, Ext, and the Yoneda algebra of self-extensions."""

import pytest

from injres.ring import BivarPoly, RationalFunction, parse_poly, QQ
from injres.hulls import omega, omega_zw
from injres.resolution import PrimeIndex, ChainElement, delta, iota0
from injres.cohomology import (local_cohomology, ext_power_of_max, ext_self,
                               normal_iso, yoneda_rep, yoneda_lift_stage,
                               yoneda_product, yoneda_presentation_check,
                               bass_numbers, BadIdeal, UnsupportedIndex)
from injres import samples


P = lambda t: parse_poly(t)


def test_ext_power_of_max_dimensions():
    for n in range(1, 7):
        basis = ext_power_of_max(n)
        assert 2 * len(basis) == n * (n + 1)
        assert all(s <= 0 and t <= 0 and s + t + n > 0 for s, t in basis)


def test_ext_self_reports():
    for i in range(0, 8):
        rep = ext_self(i, truncation=5)
        assert rep.passed, rep.render()
    dims = [ext_self(i, truncation=5).data.get("dim") for i in range(8)]
    assert dims[2:] == [1, 0, 1, 0, 1, 0]


def test_ext_self_rejects_negative_index():
    with pytest.raises(UnsupportedIndex):
        ext_self(-1)


def test_normal_iso_values():
    cls, (gz, gw) = normal_iso(P("Z^2 - W"))
    assert gz == P("Z^3 - Z*W")
    assert gw == P("Z^2*W - W^2")


def test_yoneda_product_table():
    cases = {
        (2, 2): (4, -1), (2, 4): (6, -1), (4, 2): (6, -1),
        (4, 4): (8, -1), (2, 6): (8, -1),
    }
    for (i, j), (idx, coeff) in cases.items():
        got = yoneda_product(i, j)
        assert got.index == idx and got.coeff == coeff, (i, j)
    for i, j in [(1, 1), (1, 2), (2, 1)]:
        assert yoneda_product(i, j).is_zero()
    for k in (1, 2, 4):
        left = yoneda_product(0, k)
        right = yoneda_product(k, 0)
        assert left.index == k and left.coeff == 1
        assert right.index == k and right.coeff == 1


def test_yoneda_presentation():
    rep = yoneda_presentation_check(truncation=6)
    assert rep.passed, rep.render()


def test_yoneda_reps_are_cocycles():
    for i in (0, 1, 2, 4, 6):
        assert delta(yoneda_rep(i)).is_zero(), i


def test_lift_stages_commute_with_the_differential():
    rng = samples.rng_from_seed(42)
    stages = [(1, 0), (2, 0), (2, 1), (2, 2), (4, 0), (4, 1), (4, 2)]
    for j, k in stages:
        for _ in range(4):
            ch = samples.random_chain(rng, k)
            dl = delta(yoneda_lift_stage(j, k, ch))
            ld = yoneda_lift_stage(j, k + 1, delta(ch))
            assert (dl - ld).is_zero(), (j, k)


def test_lift_stage_zero_restricts_to_the_representative():
    # stage 0 applied to the augmentation cocycle recovers e_j
    one = iota0(P("1"), QQ)
    for j in (2, 4):
        lifted = yoneda_lift_stage(j, 0, one)
        assert (lifted - yoneda_rep(j)).is_zero() or \
            (lifted + yoneda_rep(j)).is_zero()


def test_local_cohomology_height2():
    rep = local_cohomology([P("Z"), P("W")], truncation=6)
    assert rep.passed, rep.render()
    assert rep.data.get("height") == 2


def test_local_cohomology_height0():
    rep = local_cohomology([], truncation=6)
    assert rep.passed, rep.render()


def test_local_cohomology_height1():
    for gens in ([P("Z")], [P("W")], [P("Z+W")]):
        rep = local_cohomology(gens, truncation=6)
        assert rep.passed, rep.render()
        assert rep.data.get("height") == 1


def test_local_cohomology_unit_ideal():
    rep = local_cohomology([P("1+Z")], truncation=6)
    assert rep.passed, rep.render()


def test_local_cohomology_unverifiable_radical():
    with pytest.raises(BadIdeal):
        local_cohomology([P("Z^3 + W^5 + Z*W^4")], truncation=6)


def test_bass_number_table():
    table = bass_numbers(max_degree=6)
    assert table["p = (X,Y)"] == [1, 1, 0, 0, 0, 0, 0]
    assert table["height-one primes (X,Y,f)"] == [0, 1, 1, 0, 0, 0, 0]
    assert table["m = (X,Y,Z,W)"] == [0, 0, 1, 2, 2, 2, 2]
