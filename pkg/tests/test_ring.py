"""Base arithmetic: polynomials, rational functions, resultants, expansions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from injres.ring import (BivarPoly, QuadPoly, RationalFunction, LocalFraction,
                         Field, QQ, exact_divide, divides, f_adic_valuation,
                         bivar_gcd, normalize_monic, resultant_bezout,
                         truncate, series_inverse_truncated, adic_expand,
                         verify_irreducible, parse_poly, format_poly,
                         NotDivisible)


P = lambda t: parse_poly(t)


def small_polys():
    coeff = st.integers(-4, 4)
    exps = st.tuples(st.integers(0, 3), st.integers(0, 3))
    term = st.tuples(exps, coeff)
    return st.lists(term, min_size=0, max_size=4).map(
        lambda ts: sum((BivarPoly.mono(e, c) for e, c in ts),
                       BivarPoly.zero()))


@settings(max_examples=60, deadline=None)
@given(small_polys(), small_polys(), small_polys())
def test_ring_axioms(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a + (b + c) == (a + b) + c


@settings(max_examples=40, deadline=None)
@given(small_polys(), small_polys())
def test_exact_division_roundtrip(a, b):
    if b.is_zero():
        return
    assert exact_divide(a * b, b) == a
    assert divides(b, a * b)


def test_divides_negative_case():
    assert not divides(P("Z+W"), P("Z^2+W"))
    with pytest.raises(NotDivisible):
        exact_divide(P("Z^2+W"), P("Z+W"))


def test_parse_format_roundtrip():
    for text in ["Z", "W^3", "Z+W", "-Z^2+W", "1/2*Z*W - 3", "Z^2*W^2 + 7"]:
        p = P(text)
        assert parse_poly(format_poly(p)) == p


def test_quad_poly_and_hypersurface_projection():
    q = parse_poly("X*W - Y*Z", QuadPoly)
    with pytest.raises(ValueError):
        q.as_bivar()
    zw = parse_poly("Z*W", QuadPoly)
    assert zw.as_bivar() == P("Z*W")


def test_field_modular():
    F5 = Field(5)
    assert F5.of(7) == F5.of(2)
    assert F5.of(Fraction(1, 2)) == F5.of(3)
    with pytest.raises(ValueError):
        Field(2)
    with pytest.raises(ValueError):
        Field(6)


def test_f_adic_valuation():
    f = P("Z+W")
    assert f_adic_valuation(f ** 3 * P("Z"), f) == 3
    assert f_adic_valuation(P("W"), f) == 0


def test_bivar_gcd_and_monic_normalization():
    g = bivar_gcd(P("Z^2-W^2"), P("Z^2+2*Z*W+W^2"))
    assert normalize_monic(g) == normalize_monic(P("Z+W"))
    assert normalize_monic(P("3*W - 3*Z^2")) == P("W - Z^2")


def test_resultant_bezout_certificate():
    for fa, fb, var in [("Z+W", "W^2", "W"), ("W-Z^2", "Z^3", "Z"),
                        ("Z+W^2", "Z^2", "W")]:
        r, a, b = resultant_bezout(P(fa), P(fb), var)
        assert a * P(fa) + b * P(fb) == r
        other = "Z" if var == "W" else "W"
        assert r.order_in(var) == 0 or r == r  # univariate in the other var
        assert all(e == 0 for (ez, ew), c in r.terms.items()
                   for e in ([ew] if var == "W" else [ez]))


def test_series_inverse_truncated():
    q = P("1 + Z + W^2")
    inv = series_inverse_truncated(q, 4, 4)
    assert truncate(q * inv, 4, 4) == P("1")


def test_adic_expansion_reconstructs():
    phi = RationalFunction(P("1"), P("W + Z*W^2"))
    exp = adic_expand(phi, "Z", 3)
    # partial sums: phi - sum c_m Z^m has Z-order > 3
    acc = RationalFunction(P("0"), P("1"))
    for m in sorted(exp):
        cm = exp[m]  # univariate in W
        acc = acc + cm * RationalFunction(
            BivarPoly.mono((max(m, 0), 0), 1),
            BivarPoly.mono((max(-m, 0), 0), 1))
    diff = phi - acc
    assert diff.num.is_zero() or diff.num.order_in("Z") > 3


def test_irreducibility_checks():
    from injres.ring import VERIFIED, REDUCIBLE
    assert verify_irreducible(P("Z+W")) == VERIFIED
    assert verify_irreducible(P("W-Z^2")) == VERIFIED
    assert verify_irreducible(P("Z+W^2")) == VERIFIED
    assert verify_irreducible(P("Z^2-W^2")) == REDUCIBLE


def test_local_fraction_requires_unit_denominator():
    LocalFraction(P("Z"), P("1+W"))
    with pytest.raises(Exception):
        LocalFraction(P("Z"), P("W"))
