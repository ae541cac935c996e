"""The 15-dimensional test module, its dual, and its Ext dimensions."""

import pytest

from injres.ring import parse_poly, QQ, Field
from injres.resolution import PrimeIndex
from injres import linalg
from injres.dhm import (DHMModule, DHMHom, dhm_module, dhm_hom_space,
                        dhm_dual_basis, dhm_min_generators, dhm_ext,
                        InvariantViolation, TruncationTooSmall,
                        BASIS, W_NAMES)


P = lambda t: parse_poly(t)


def test_module_invariants_hold():
    mod = dhm_module()
    assert mod.dim() == 15


def test_module_action_samples():
    mod = dhm_module()
    assert mod.act("X", "w1") == {"v1": QQ.one}
    assert mod.act("W", "w6") == {"u5": QQ.one}
    assert mod.act("Z", "w6") == {"u3": QQ.one, "v4": QQ.one}
    assert mod.act("Y", "v3") == {}
    # the six surviving degree-two actions
    assert mod.act("X", mod.act("X", "w1")) == {"u1": QQ.one}
    assert mod.act("X", mod.act("Z", "w4")) == {"u2": QQ.one}
    assert mod.act("Z", mod.act("Z", "w5")) == {"u1": QQ.one}


def test_cube_of_maximal_ideal_kills_module():
    mod = dhm_module()
    for b in BASIS:
        for x in "XYZW":
            for y in "XYZW":
                for z in "XYZW":
                    assert mod.act(x, mod.act(y, mod.act(z, b))) == {}


def test_dual_basis_members_are_homs_and_independent():
    named = dhm_dual_basis()
    assert len(named) == 15
    red = linalg.Reducer()
    for name, h in named.items():
        assert h.is_hom()
        assert red.add(h.coords(), label=name) is None
    assert red.rank == 15


def test_hom_space_at_the_maximal_prime():
    dim, homs = dhm_hom_space(PrimeIndex.maximal(), truncation=3)
    assert dim == 15
    dim2, _ = dhm_hom_space(PrimeIndex.maximal(), truncation=4)
    assert dim2 == 15  # stable across truncations


@pytest.mark.parametrize("ftext", ["Z", "W", "Z+W", "W-Z^2"])
def test_hom_space_vanishes_at_height_one(ftext):
    if ftext == "Z":
        prime = PrimeIndex.prime_z()
    elif ftext == "W":
        prime = PrimeIndex.prime_w()
    else:
        prime = PrimeIndex.irr(P(ftext))
    for T in (3, 4):
        dim, homs = dhm_hom_space(prime, truncation=T)
        assert dim == 0 and homs == []


def test_truncation_guard():
    with pytest.raises(TruncationTooSmall):
        dhm_hom_space(PrimeIndex.maximal(), truncation=1)


def test_minimal_generators():
    info = dhm_min_generators()
    assert info["dim"] == 15
    assert info["m_span"] == 10
    assert info["min_generators"] == 5
    assert set(info["generators"]) == {"phi14", "phi25", "phi36",
                                       "phi135", "phi246"}


def test_ext_dimensions():
    assert [dhm_ext(i) for i in range(8)] == [0, 0, 6, 7, 0, 0, 0, 0]


def test_ext2_kernel_is_spanned_by_the_elementary_homs():
    # the kernel of Phi -> (X Phi, Y Phi) is exactly phi1..phi6
    named = dhm_dual_basis()
    red = linalg.Reducer()
    for i in range(1, 7):
        h = named[f"phi{i}"]
        assert h.mult("X").is_zero() and h.mult("Y").is_zero()
        red.add(h.coords())
    assert red.rank == 6
    assert not named["phi13"].mult("X").is_zero()


def test_hom_values_respect_annihilators():
    # every hom value on a u-generator lies in the socle of the hull
    named = dhm_dual_basis()
    from injres.hulls import is_socle
    for h in named.values():
        for u in ("u1", "u2", "u3", "u4", "u5"):
            v = h.value(u)
            if not v.is_zero():
                assert is_socle(v)


def test_modular_coefficients():
    F5 = Field(5)
    assert [dhm_ext(i, F5) for i in range(8)] == [0, 0, 6, 7, 0, 0, 0, 0]
    info = dhm_min_generators(F5)
    assert info["min_generators"] == 5
