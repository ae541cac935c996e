"""Canonical models of the injective hulls occurring in the resolution.

Five shapes of hull element:

  E0Element    sums  sum_n Omega^n_0(phi_n),  phi_n in k(Z,W)
  EZElement    sums  sum_n Omega^n_Z(phi_n),  phi_n stored as a truncated
               Z-adic expansion  {m <= n: c_m in k(W)}
  EWElement    the mirror image (W-adic, coefficients in k(Z))
  EfElement    sums  sum_n Omega^n_f(phi_n),  phi_n an H1Class at the
               irreducible f (f not associate to Z or W)
  EZWElement   finitely many coordinates (n, s, t) -> k on the basis
               Omega^n(Z^s W^t), subject to n >= max(0, s, t, s+t)

The A = k[X,Y,Z,W]/(XW-YZ)-action is monomial-generated: Z and W multiply
the argument, X sends Omega^n(phi) to Omega^{n-1}(phi/W), Y to
Omega^{n-1}(phi/Z); on EZW coordinates X^a Y^b Z^c W^d moves (n,s,t) to
(n-a-b, s+c-b, t+d-a).  Laurent division operators extend the same index
arithmetic to negative powers without being inverse to multiplication.
"""

from fractions import Fraction

from .ring import (BivarPoly, QuadPoly, RationalFunction, LocalFraction, QQ,
                   Fp, adic_expand, exact_divide, f_adic_valuation,
                   normalize_monic, series_inverse_truncated, truncate)
from .gfrac import H1Class, H2Canonical, H4Canonical, BadDenominator


class BadLocus(Exception):
    pass


class NotInEZW(Exception):
    pass


def _rf_monomial(cz, cw, field):
    """Z^cz * W^cw as a rational function, exponents of either sign."""
    num = BivarPoly.mono((max(cz, 0), max(cw, 0)), 1, field)
    den = BivarPoly.mono((max(-cz, 0), max(-cw, 0)), 1, field)
    return RationalFunction(num, den, reduce=False)


def _is_univar(rf, name):
    other = "W" if name == "Z" else "Z"
    return rf.num.degree_in(other) <= 0 and rf.den.degree_in(other) <= 0


class HullElement:
    """Common behaviour: exact linear structure over the coefficient field."""

    def __sub__(self, other):
        return self + (-other)

    def __bool__(self):
        return not self.is_zero()


class E0Element(HullElement):
    """sum_n Omega^n_0(phi_n).  Optionally carries the set of irreducible
    factors of the phi_n denominators (needed for d0 support discovery)."""

    def __init__(self, parts, field=QQ, factors=None):
        self.field = field
        self.parts = {n: p for n, p in parts.items() if not p.is_zero()}
        self.factors = None if factors is None else frozenset(factors)

    @classmethod
    def zero(cls, field=QQ):
        return cls({}, field, factors=frozenset())

    def is_zero(self):
        return not self.parts

    def _merge_factors(self, other):
        if self.factors is None or other.factors is None:
            return None
        return self.factors | other.factors

    def __add__(self, other):
        parts = dict(self.parts)
        for n, p in other.parts.items():
            s = parts.get(n, RationalFunction.const(0, self.field)) + p
            if s.is_zero():
                parts.pop(n, None)
            else:
                parts[n] = s
        return E0Element(parts, self.field, self._merge_factors(other))

    def __neg__(self):
        return E0Element({n: -p for n, p in self.parts.items()},
                         self.field, self.factors)

    def scale(self, c):
        return E0Element({n: p * c for n, p in self.parts.items()},
                         self.field, self.factors)

    def mul_arg(self, rf, extra_factors=()):
        """Multiply every argument by a rational function."""
        f = None if self.factors is None else self.factors | frozenset(extra_factors)
        return E0Element({n: p * rf for n, p in self.parts.items()}, self.field, f)

    def monomial_act(self, a, b, c, d):
        out = {}
        for n, phi in self.parts.items():
            if n - a - b < 0:
                continue
            out[n - a - b] = out.get(n - a - b, RationalFunction.const(0, self.field)) \
                + phi * _rf_monomial(c - b, d - a, self.field)
        return E0Element(out, self.field, self.factors)

    def __eq__(self, other):
        if not isinstance(other, E0Element):
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        if self.is_zero():
            return "0"
        return " + ".join(f"Omega[0; {n}]({p!r})" for n, p in sorted(self.parts.items()))


class _AxisElement(HullElement):
    """Shared core of EZElement and EWElement.  parts: n -> {m: coefficient},
    coefficients univariate rational in the other variable, m <= n."""

    AXIS = None  # "Z" or "W"

    def __init__(self, parts, field=QQ):
        self.field = field
        clean = {}
        for n, cm in parts.items():
            keep = {m: c for m, c in cm.items() if m <= n and not c.is_zero()}
            if keep:
                clean[n] = keep
        self.parts = clean

    @classmethod
    def zero(cls, field=QQ):
        return cls({}, field)

    @classmethod
    def from_argument(cls, n, phi, field=QQ):
        """Omega^n_axis(phi): truncated adic expansion of the argument."""
        if isinstance(phi, BivarPoly):
            phi = RationalFunction(phi, reduce=False)
        return cls({n: adic_expand(phi, cls.AXIS, n)}, field)

    def is_zero(self):
        return not self.parts

    def __add__(self, other):
        parts = {n: dict(cm) for n, cm in self.parts.items()}
        for n, cm in other.parts.items():
            tgt = parts.setdefault(n, {})
            for m, c in cm.items():
                s = tgt.get(m, RationalFunction.const(0, self.field)) + c
                if s.is_zero():
                    tgt.pop(m, None)
                else:
                    tgt[m] = s
        return type(self)(parts, self.field)

    def __neg__(self):
        return type(self)({n: {m: -c for m, c in cm.items()}
                           for n, cm in self.parts.items()}, self.field)

    def scale(self, c):
        return type(self)({n: {m: v * c for m, v in cm.items()}
                           for n, cm in self.parts.items()}, self.field)

    def representative(self, n):
        """The stored truncation of part n as a rational function."""
        axis_i = 0 if self.AXIS == "Z" else 1
        acc = RationalFunction.const(0, self.field)
        for m, c in self.parts.get(n, {}).items():
            sh = [0, 0]
            sh[axis_i] = m
            acc = acc + c * _rf_monomial(sh[0], sh[1], self.field)
        return acc

    def mul_arg(self, rf):
        """Multiply every argument by a rational function and re-expand."""
        out = type(self).zero(self.field)
        for n in self.parts:
            out = out + type(self).from_argument(n, self.representative(n) * rf,
                                                 self.field)
        return out

    def monomial_act(self, a, b, c, d):
        # argument gains Z^(c-b) W^(d-a); along the axis this shifts the
        # expansion index, across it the coefficients pick up the power
        if self.AXIS == "Z":
            shift, coef_pow = c - b, d - a
        else:
            shift, coef_pow = d - a, c - b
        out = {}
        for n, cm in self.parts.items():
            if n - a - b < 0:
                continue
            tgt = out.setdefault(n - a - b, {})
            for m, v in cm.items():
                mm = m + shift
                if mm > n - a - b:
                    continue
                w = v * self._coef_monomial(coef_pow)
                s = tgt.get(mm, RationalFunction.const(0, self.field)) + w
                if s.is_zero():
                    tgt.pop(mm, None)
                else:
                    tgt[mm] = s
        return type(self)(out, self.field)

    def _coef_monomial(self, e):
        if self.AXIS == "Z":
            return _rf_monomial(0, e, self.field)
        return _rf_monomial(e, 0, self.field)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for n, cm in sorted(self.parts.items()):
            inner = " + ".join(f"({c!r})*{self.AXIS}^{m}" for m, c in sorted(cm.items()))
            bits.append(f"Omega[{self.AXIS}; {n}]({inner})")
        return " + ".join(bits)


class EZElement(_AxisElement):
    AXIS = "Z"


class EWElement(_AxisElement):
    AXIS = "W"


class EfElement(HullElement):
    """sum_n Omega^n_f(phi_n) at an irreducible f with Z, W not in (f)."""

    def __init__(self, f, parts, field=QQ):
        self.f = normalize_monic(f)
        self.field = field
        self.parts = {n: p for n, p in parts.items() if not p.is_zero()}

    @classmethod
    def zero(cls, f, field=QQ):
        return cls(f, {}, field)

    @classmethod
    def from_argument(cls, f, n, phi, field=QQ):
        if isinstance(phi, BivarPoly):
            phi = RationalFunction(phi, reduce=False)
        f = normalize_monic(f)
        s = f_adic_valuation(phi.den, f)
        h = exact_divide(phi.den, f ** s) if s else phi.den
        return cls(f, {n: H1Class(f, phi.num, h, s)}, field)

    def is_zero(self):
        return not self.parts

    def _check(self, other):
        if self.f != other.f:
            raise BadLocus("elements at different primes")

    def __add__(self, other):
        self._check(other)
        parts = dict(self.parts)
        for n, p in other.parts.items():
            if n in parts:
                s = parts[n] + p
                if s.is_zero():
                    del parts[n]
                else:
                    parts[n] = s
            else:
                parts[n] = p
        return EfElement(self.f, parts, self.field)

    def __neg__(self):
        return EfElement(self.f, {n: -p for n, p in self.parts.items()}, self.field)

    def scale(self, c):
        one = BivarPoly.const(1, self.field)
        return EfElement(self.f, {n: p.scale(one * c) for n, p in self.parts.items()},
                         self.field)

    def mul_arg(self, rf):
        num, den = rf.num, rf.den
        v = f_adic_valuation(den, self.f)
        if v:
            den = exact_divide(den, self.f ** v)
        return EfElement(self.f,
                         {n: p.scale(num, den, -v) for n, p in self.parts.items()},
                         self.field)

    def monomial_act(self, a, b, c, d):
        out = {}
        num = BivarPoly.mono((c, d), 1, self.field)
        den = BivarPoly.mono((b, a), 1, self.field)  # /W^a /Z^b
        for n, p in self.parts.items():
            if n - a - b < 0:
                continue
            q = p.scale(num, den)
            if n - a - b in out:
                q = out[n - a - b] + q
            if not q.is_zero():
                out[n - a - b] = q
            else:
                out.pop(n - a - b, None)
        return EfElement(self.f, out, self.field)

    def __eq__(self, other):
        if not isinstance(other, EfElement):
            return NotImplemented
        self._check(other)
        return (self - other).is_zero()

    def __repr__(self):
        if self.is_zero():
            return "0"
        return " + ".join(f"Omega[{self.f!r}; {n}]({p!r})"
                          for n, p in sorted(self.parts.items()))


def _valid_index(n, s, t):
    return n >= max(0, s, t, s + t)


class EZWElement(HullElement):
    """Coordinates on the basis Omega^n(Z^s W^t), n >= max(0, s, t, s+t)."""

    def __init__(self, coeffs=None, field=QQ):
        self.field = field
        self.coeffs = {}
        for (n, s, t), c in (coeffs or {}).items():
            if not _valid_index(n, s, t):
                raise NotInEZW(f"illegal index {(n, s, t)}")
            if c:
                self.coeffs[(n, s, t)] = c

    @classmethod
    def zero(cls, field=QQ):
        return cls({}, field)

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        c = dict(self.coeffs)
        for k, v in other.coeffs.items():
            s = c.get(k, self.field.zero) + v
            if s:
                c[k] = s
            else:
                c.pop(k, None)
        return EZWElement(c, self.field)

    def __neg__(self):
        return EZWElement({k: -v for k, v in self.coeffs.items()}, self.field)

    def scale(self, c):
        return EZWElement({k: v * c for k, v in self.coeffs.items()}, self.field)

    def monomial_act(self, a, b, c, d):
        out = {}
        for (n, s, t), v in self.coeffs.items():
            k = (n - a - b, s + c - b, t + d - a)
            if not _valid_index(*k):
                continue
            u = out.get(k, self.field.zero) + v
            if u:
                out[k] = u
            else:
                out.pop(k, None)
        return EZWElement(out, self.field)

    def __eq__(self, other):
        if not isinstance(other, EZWElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        if self.is_zero():
            return "0"
        return " + ".join(f"{v!r}*Omega^{n}(Z^{s} W^{t})"
                          for (n, s, t), v in sorted(self.coeffs.items()))


def omega_zw(n, s, t, field=QQ, c=1):
    """Omega^n(Z^s W^t); the zero element when the index is out of range."""
    if not _valid_index(n, s, t):
        return EZWElement.zero(field)
    return EZWElement({(n, s, t): field.of(c)}, field)


def omega(prime, n, argument, field=QQ, factors=None):
    """Dispatch to the hull constructor for the given prime.

    prime: "0", "Z", "W", an irreducible BivarPoly, or "ZW".  For "ZW" the
    argument is a pair (u, v) with u, v >= 1 denoting the basis fraction
    [1/Z^u, W^v], or an H2Canonical combination of such.
    """
    assert n >= 0
    if isinstance(prime, str) and prime == "ZW":
        if isinstance(argument, H2Canonical):
            out = EZWElement.zero(field)
            for (u, v), c in argument.coeffs.items():
                out = out + omega_zw(n, -u, -v, field, c)
            return out
        u, v = argument
        if u < 1 or v < 1:
            raise BadLocus("basis fraction needs positive exponents")
        return omega_zw(n, -u, -v, field)
    if isinstance(argument, BivarPoly):
        argument = RationalFunction(argument, reduce=False)
    if isinstance(prime, str):
        if prime == "0":
            if argument.is_zero():
                return E0Element.zero(field)
            return E0Element({n: argument}, field, factors)
        if prime == "Z":
            return EZElement.from_argument(n, argument, field)
        if prime == "W":
            return EWElement.from_argument(n, argument, field)
    if isinstance(prime, BivarPoly):
        f = normalize_monic(prime)
        for ax in ("Z", "W"):
            if f == normalize_monic(BivarPoly.var(ax, field)):
                raise BadLocus("use the axis constructors for Z and W")
        if f.at_origin() or f.is_constant():
            raise BadLocus("prime must be nonconstant and vanish at the origin")
        try:
            return EfElement.from_argument(f, n, argument, field)
        except BadDenominator as exc:
            raise BadLocus(str(exc)) from None
    raise BadLocus(f"unknown prime {prime!r}")


def act(r, e):
    """The A-module action of a polynomial r in X, Y, Z, W."""
    if isinstance(r, BivarPoly):
        r = r.to_quad()
    if not isinstance(r, QuadPoly):
        r = QuadPoly.const(e.field.of(r), e.field)
    out = None
    for (a, b, c, d), coef in r.terms.items():
        term = e.monomial_act(a, b, c, d).scale(coef)
        out = term if out is None else out + term
    if out is None:
        return _zero_like(e)
    return out


def act_series(phi, e):
    """Action of phi in k[Z,W] localized at the origin on an EZWElement.

    phi is a LocalFraction (or RationalFunction with unit denominator); the
    series expansion is truncated per the index constraint: Z^c W^d moves
    Omega^n(Z^s W^t) out of range once c + d > n - s - t.
    """
    if isinstance(phi, LocalFraction):
        num, den = phi.num, phi.den
    else:
        num, den = phi.num, phi.den
    if not den.at_origin():
        raise BadLocus("denominator vanishes at the origin")
    if e.is_zero() or num.is_zero():
        return EZWElement.zero(e.field)
    bound = max(n - s - t for (n, s, t) in e.coeffs) + 1
    series = truncate(num * series_inverse_truncated(den, bound, bound),
                      bound, bound)
    return act(series, e)


def _zero_like(e):
    if isinstance(e, E0Element):
        return E0Element.zero(e.field)
    if isinstance(e, _AxisElement):
        return type(e).zero(e.field)
    if isinstance(e, EfElement):
        return EfElement.zero(e.f, e.field)
    return EZWElement.zero(e.field)


def laurent_op(i, j, k, l, e):
    """The operator X^i Y^j Z^k W^l on EZW coordinates, any signs:
    Omega^n(Z^s W^t) -> Omega^{n-i-j}(Z^{s+k-j} W^{t+l-i}), zero where
    invalid.  Not inverse to multiplication."""
    assert isinstance(e, EZWElement)
    out = {}
    for (n, s, t), v in e.coeffs.items():
        key = (n - i - j, s + k - j, t + l - i)
        if not _valid_index(*key):
            continue
        u = out.get(key, e.field.zero) + v
        if u:
            out[key] = u
        else:
            out.pop(key, None)
    return EZWElement(out, e.field)


def socle_project(e):
    """The n = 0 graded part."""
    if isinstance(e, E0Element):
        return E0Element({n: p for n, p in e.parts.items() if n == 0},
                         e.field, e.factors)
    if isinstance(e, _AxisElement):
        return type(e)({n: cm for n, cm in e.parts.items() if n == 0}, e.field)
    if isinstance(e, EfElement):
        return EfElement(e.f, {n: p for n, p in e.parts.items() if n == 0}, e.field)
    return EZWElement({k: v for k, v in e.coeffs.items() if k[0] == 0}, e.field)


def is_socle(e):
    """True iff X.e = Y.e = 0; checked against the graded criterion."""
    by_act = e.monomial_act(1, 0, 0, 0).is_zero() and \
        e.monomial_act(0, 1, 0, 0).is_zero()
    by_grade = (socle_project(e) - e).is_zero()
    assert by_act == by_grade, "socle criteria disagree"
    return by_act


# --- EZW <-> H4 canonical coordinates ---------------------------------------

def _expand_basis(n, s, t):
    """Indices (i, j, k, l) of eq-style expansion of Omega^n(Z^s W^t):
    [1/Z^{n+1-i-s}, W^{i+1-t}, X^{i+1}, Y^{n+1-i}] over valid i."""
    for i in range(max(0, t), min(n, n - s) + 1):
        yield (n + 1 - i - s, i + 1 - t, i + 1, n + 1 - i)


def ezw_to_h4(e):
    out = {}
    for (n, s, t), v in e.coeffs.items():
        for key in _expand_basis(n, s, t):
            u = out.get(key, e.field.zero) + v
            if u:
                out[key] = u
            else:
                out.pop(key, None)
    return H4Canonical(out)


def h4_to_ezw(c, field=QQ):
    """Invert ezw_to_h4; raises NotInEZW when c is not in the image."""
    zero = field.zero
    # relation check a_{i(j+1)(k+1)l} = a_{(i+1)jk(l+1)}
    for (i, j, k, l), v in c.coeffs.items():
        if j >= 2 and k >= 2:
            w = c.coeffs.get((i + 1, j - 1, k - 1, l + 1), zero)
            if v != w:
                raise NotInEZW("coefficient relation fails")
    cands = {}
    for (i, j, k, l), v in c.coeffs.items():
        if k == 1:
            # family t <= 0, witness at i_w = 0
            n, s, t = l - 1, l - i, 1 - j
            if t > 0:
                continue
        elif j == 1 and k >= 2:
            # family t > 0, witness at i_w = t
            t = k - 1
            n = l + k - 2
            s = n + 1 - (k - 1) - i
        else:
            continue
        if not _valid_index(n, s, t):
            raise NotInEZW(f"witness index {(n, s, t)} out of range")
        cands[(n, s, t)] = v
    e = EZWElement(cands, field)
    if ezw_to_h4(e) != c:
        raise NotInEZW("re-expansion does not match the input")
    return e


# --- cross-check embedding for the Z-axis hull -------------------------------

def ez_to_h3(e):
    """Map an EZElement to H3 canonical coordinates (zi, j, k) -> k(W),
    denoting sum phi * [1/Z^zi, (XW)^j, Y^k].  Equality of EZElements must
    agree with equality of these coordinate maps."""
    out = {}
    for n, cm in e.parts.items():
        for m, c in cm.items():
            for i in range(0, min(n, n - m) + 1):
                key = (n + 1 - i - m, i + 1, n + 1 - i)
                s = out.get(key, RationalFunction.const(0, e.field)) + c
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
    return out
