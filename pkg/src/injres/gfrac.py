"""Generalized fractions over the localized polynomial rings in Z and W.

A generalized fraction [w / x1^i1, ..., xn^in] represents an element of top
local cohomology supported at (x1, ..., xn).  It obeys three laws:

  linearity       [a1*w1 + a2*w2 / x] = a1*[w1 / x] + a2*[w2 / x]
  transformation  [w / x] = [det(r)*w / x'] whenever x' = r*x entrywise
  vanishing       [w / x1, ..., xn] = 0  iff  (x1...xn)^s * w lies in
                  (x1^{s+1}, ..., xn^{s+1}) for some s >= 0

A fraction with any exponent <= 0 is zero.  This module reduces H^2 and H^4
classes to their unique canonical coefficients, decides H^1 classes by
valuations, and constructs explicit rewritings of [1 / W^t, Z^s] over a
denominator pair (W^t, f^l) for irreducible f.
"""

from .ring import (BivarPoly, LocalFraction, RationalFunction, QQ,
                   bivar_gcd, exact_divide, divides, f_adic_valuation,
                   normalize_monic, resultant_bezout, series_inverse_truncated,
                   truncate, DegenerateResultant, NotDivisible)


class NotSystemOfParameters(Exception):
    pass


class MatrixMismatch(Exception):
    pass


class BadDenominator(Exception):
    pass


class NotApplicable(Exception):
    pass


class GeneralizedFraction:
    """Raw representation: numerator over an ordered list of powered
    denominators.  numerator is a BivarPoly, QuadPoly or LocalFraction."""

    def __init__(self, numerator, denominators):
        self.numerator = numerator
        self.denominators = [(b, int(e)) for b, e in denominators]

    def trivially_zero(self):
        return any(e <= 0 for _, e in self.denominators)

    def num_den(self):
        """Split the numerator into (polynomial, unit polynomial)."""
        n = self.numerator
        if isinstance(n, LocalFraction):
            return n.num, n.den
        return n, type(n).const(1, n.field)

    def __repr__(self):
        dens = ", ".join(f"{b!r}^{e}" for b, e in self.denominators)
        return f"[{self.numerator!r} / {dens}]"


class _CanonicalMap:
    """Shared behaviour of finitely-supported coefficient maps."""

    def __init__(self, coeffs=None):
        self.coeffs = {k: c for k, c in (coeffs or {}).items() if c}

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        t = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = t.get(k, 0) + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return type(self)(t)

    def __neg__(self):
        return type(self)({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return type(self)({k: v * c for k, v in self.coeffs.items()})

    def __eq__(self, other):
        return type(self) is type(other) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c!r}*{k}" for k, c in sorted(self.coeffs.items()))


class H2Canonical(_CanonicalMap):
    """Coefficients c_{ij} of sum c_{ij} [1 / Z^i, W^j], i,j >= 1."""


class H4Canonical(_CanonicalMap):
    """Coefficients a_{ijkl} of sum a_{ijkl} [1 / Z^i, W^j, X^k, Y^l]."""


class H1Class:
    """The class of g/(h*f^s) in k[Z,W]_(f)[1/f] / k[Z,W]_(f).

    Zero iff the f-adic valuation of g is at least s.  Representatives are
    normalized by stripping f-powers from g.
    """

    def __init__(self, f, g, h, s):
        f = normalize_monic(f)
        if divides(f, h):
            raise BadDenominator("denominator divisible by f")
        v = f_adic_valuation(g, f)
        if v is None or v >= s:
            g, s = BivarPoly.zero(f.field), 0
            h = BivarPoly.const(1, f.field)
        elif v > 0:
            g = exact_divide(g, f ** v)
            s -= v
        self.f, self.g, self.h, self.s = f, g, h, s

    def is_zero(self):
        return self.g.is_zero()

    def scale(self, num, den=None, fpow=0):
        """Multiply by (num/den) * f^fpow, den not divisible by f."""
        if den is None:
            den = BivarPoly.const(1, self.f.field)
        return H1Class(self.f, self.g * num, self.h * den, self.s - fpow)

    def __add__(self, other):
        assert self.f == other.f
        m = max(self.s, other.s)
        g = (self.g * other.h * self.f ** (m - self.s)
             + other.g * self.h * self.f ** (m - other.s))
        return H1Class(self.f, g, self.h * other.h, m)

    def __neg__(self):
        return H1Class(self.f, -self.g, self.h, self.s)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, H1Class) or self.f != other.f:
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        # classes have no canonical representative; hash only the prime
        return hash(("H1Class", self.f))

    def __repr__(self):
        if self.is_zero():
            return "0"
        return f"[{self.g!r} / ({self.h!r})*({self.f!r})^{self.s}]"


def h1_class(g, h, f, s):
    return H1Class(f, g, h, s)


def h1_is_zero(c):
    return c.is_zero()


def _unit_part_z(r):
    """Split a polynomial in Z alone as Z^a * w with w(0) != 0."""
    a = r.order_in("Z")
    return a, r.shift((-a, 0))


def _unit_part_w(r):
    b = r.order_in("W")
    return b, r.shift((0, -b))


def reduce_h2(num, d1, d2):
    """Canonical coefficients of [num / d1, d2] in H^2_(Z,W).

    num is a BivarPoly or a LocalFraction at the origin; d1, d2 are
    (base, exponent) pairs whose bases vanish at the origin and, after
    removing a unit gcd, form a system of parameters.
    """
    g1, e1 = d1
    g2, e2 = d2
    if e1 <= 0 or e2 <= 0:
        return H2Canonical()
    if isinstance(num, BivarPoly):
        num = LocalFraction(num)
    npoly, nden = num.num, num.den
    if npoly.is_zero():
        return H2Canonical()

    g = bivar_gcd(g1, g2)
    if not g.is_constant():
        if not g.at_origin():
            raise NotSystemOfParameters("denominators share a factor at the origin")
        # the gcd is a unit of the local ring; divide it out of the pair and
        # push the compensating unit into the numerator's denominator
        g1, g2 = exact_divide(g1, g), exact_divide(g2, g)
        nden = nden * g ** (e1 + e2)

    F1, F2 = g1 ** e1, g2 ** e2
    try:
        rz, a1, b1 = resultant_bezout(F1, F2, "W")
        rw, a2, b2 = resultant_bezout(F1, F2, "Z")
    except DegenerateResultant as exc:
        raise NotSystemOfParameters(str(exc)) from None
    alpha, wz = _unit_part_z(rz)
    beta, ww = _unit_part_w(rw)
    if alpha <= 0 or beta <= 0:
        raise NotSystemOfParameters("a denominator is a unit at the origin")

    # (Z^alpha, W^beta) = r * (F1, F2) with r = [[a1, b1], [a2, b2]] / units
    det = a1 * b2 - b1 * a2
    unit_den = nden * wz * ww
    inv = series_inverse_truncated(unit_den, alpha, beta)
    n = truncate(npoly * det * inv, alpha, beta)
    out = {}
    for (c, d), coef in n.terms.items():
        k = (alpha - c, beta - d)
        s = out.get(k, 0) + coef
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return H2Canonical(out)


def apply_transformation(gf, matrix):
    """Transformation law: from [w / x1, x2] and a 2x2 matrix r over the
    local ring, return [det(r)*w / x1', x2'] with x_i' = sum_j r_ij x_j.

    The new denominators must come out polynomial; otherwise MatrixMismatch.
    """
    if len(gf.denominators) != 2:
        raise MatrixMismatch("only 2x2 transformations supported")
    xs = [RationalFunction(b ** e, reduce=False) for b, e in gf.denominators]

    def as_rf(v):
        if isinstance(v, RationalFunction):
            return v
        if isinstance(v, LocalFraction):
            return v.as_rational()
        if isinstance(v, BivarPoly):
            return RationalFunction(v, reduce=False)
        return RationalFunction.const(v)

    r = [[as_rf(v) for v in row] for row in matrix]
    new = []
    for i in range(2):
        xi = r[i][0] * xs[0] + r[i][1] * xs[1]
        if not xi.den.is_constant():
            raise MatrixMismatch("transformed denominator is not polynomial")
        new.append(exact_divide(xi.num, xi.den))
    det = r[0][0] * r[1][1] - r[0][1] * r[1][0]
    npoly, nden = gf.num_den()
    num = det * RationalFunction(npoly, nden, reduce=False)
    if num.den.at_origin():
        numerator = LocalFraction(num.num, num.den)
    else:
        raise MatrixMismatch("matrix entries not in the local ring at the origin")
    return GeneralizedFraction(numerator, [(new[0], 1), (new[1], 1)])


def split_zw(f):
    """Write f = f0*Z^u + f1*W^v with f0 in k[Z], f0(0) != 0, u,v > 0,
    and f1 not divisible by W.  Requires f in (Z,W), f not in (W)."""
    fz = f.eval_w0()
    if fz.is_zero():
        raise NotApplicable("f is divisible by W")
    u = fz.order_in("Z")
    f0 = fz.shift((-u, 0))
    rest = f - fz
    if rest.is_zero():
        raise NotApplicable("f is a polynomial in Z alone")
    v = rest.order_in("W")
    f1 = rest.shift((0, -v))
    return f0, u, f1, v


def lemma_onto_rewrite(f, s, t):
    """Return (g, l) with [g / W^t, f^l] = [1 / W^t, Z^s] in H^2_(Z,W).

    f must be irreducible, contained in (Z,W), and not associate to W.
    Follows an induction on ceil(t/v) where f = f0*Z^u + f1*W^v.
    """
    assert s >= 1 and t >= 1
    field = f.field
    Z = BivarPoly.var("Z", field)
    if normalize_monic(f) == normalize_monic(BivarPoly.var("W", field)):
        raise NotApplicable("f = W has no such rewriting")
    if normalize_monic(f) == normalize_monic(Z):
        return BivarPoly.const(1, field), s

    f0, u, f1, v = split_zw(f)
    f0Zu = f0 * Z ** u
    W = BivarPoly.var("W", field)
    f1Wv = f1 * W ** v
    q, r = divmod(s, u)

    if t <= v:
        g = f0 ** (q + 1) * Z ** (u - r)
        return g, q + 1

    n = -(-t // v) - 1  # ceil(t/v) = n + 1 with n >= 1
    from math import comb as binom
    F = BivarPoly.zero(field)
    for i in range(n):
        F = F + f0Zu ** i * (-f1Wv) ** (n - i - 1)
    G = BivarPoly.zero(field)
    for j in range(q + 1):
        G = G + binom(q + 1, j) * (f0Zu ** (n * j)) * ((-f1Wv * F) ** (q - j))
    # sanity: the two algebraic identities behind the rewriting
    assert f * (f0Zu ** n - f1Wv * F) == f0Zu ** (n + 1) - (-f1Wv) ** (n + 1)
    assert (f0Zu ** n - f1Wv * F) ** (q + 1) == f0Zu ** (n * (q + 1)) - f1Wv * F * G

    g0, l0 = lemma_onto_rewrite(f, u * (n + 1) * (q + 1), t - v)
    g0_div = exact_divide(g0, f0 ** (n * (q + 1)))
    g = (f ** l0 * f0 ** (q + 1) * Z ** (u - r)
         + f ** (q + 1) * g0_div * Z ** (u - r) * W ** v * f1 * F * G)
    return g, l0 + q + 1


def h2_canonical_fraction(can, field=QQ):
    """A single generalized fraction equal to the canonical sum, obtained by
    amplifying every basis fraction to the common denominator (Z^I, W^J)."""
    zvar = BivarPoly.var("Z", field)
    wvar = BivarPoly.var("W", field)
    if not can.coeffs:
        return GeneralizedFraction(BivarPoly.zero(field), [(zvar, 1), (wvar, 1)])
    big_i = max(i for i, _ in can.coeffs)
    big_j = max(j for _, j in can.coeffs)
    num = BivarPoly.zero(field)
    for (i, j), c in can.coeffs.items():
        num = num + BivarPoly.mono((big_i - i, big_j - j), c, field)
    return GeneralizedFraction(num, [(zvar, big_i), (wvar, big_j)])


def h4_reduce(num, zw_denoms, x_exp, y_exp):
    """Reduce the (Z,W)-part of [num / u^i, v^j, X^x, Y^y] and attach the
    fixed X and Y indices."""
    assert x_exp >= 1 and y_exp >= 1
    h2 = reduce_h2(num, zw_denoms[0], zw_denoms[1])
    return H4Canonical({(a, b, x_exp, y_exp): c for (a, b), c in h2.coeffs.items()})
