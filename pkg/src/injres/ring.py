"""Exact coefficient arithmetic: fields, sparse polynomials in Z,W and X,Y,Z,W,
localized fractions, resultants with Bezout witnesses, truncated series
inversion and adic expansion.

Coefficients are exact rationals by default, or elements of a prime field
F_p with p > 3.  Characteristic 2 is rejected because derived test vectors
divide by 2.
"""

from fractions import Fraction


class NotDivisible(Exception):
    pass


class NotUnit(Exception):
    pass


class DegenerateResultant(Exception):
    pass


class Fp:
    """An element of the prime field F_p."""

    __slots__ = ("v", "p")

    def __init__(self, v, p):
        self.v = v % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError("mixed characteristics")
            return other
        if isinstance(other, int):
            return Fp(other, self.p)
        if isinstance(other, Fraction):
            return Fp(other.numerator, self.p) / Fp(other.denominator, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else Fp(self.v + o.v, self.p)

    __radd__ = __add__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def __sub__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else Fp(self.v - o.v, self.p)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._lift(other)
        return o if o is NotImplemented else Fp(self.v * o.v, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o.v == 0:
            raise ZeroDivisionError
        return Fp(self.v * pow(o.v, -1, self.p), self.p)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, e):
        return Fp(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        o = self._lift(other)
        return o is not NotImplemented and self.v == o.v

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"


class Field:
    """Coefficient field descriptor: char 0 (exact rationals) or a prime p."""

    def __init__(self, char=0):
        if char:
            if char == 2:
                raise ValueError("characteristic 2 not supported")
            if char < 2 or any(char % q == 0 for q in range(2, int(char ** 0.5) + 1)):
                raise ValueError(f"{char} is not prime")
        self.char = char

    def of(self, x):
        if self.char == 0:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            if isinstance(x, str):
                return Fraction(x)
            raise TypeError(f"cannot coerce {x!r} into Q")
        if isinstance(x, Fp):
            if x.p != self.char:
                raise ValueError("mixed characteristics")
            return x
        if isinstance(x, int):
            return Fp(x, self.char)
        if isinstance(x, Fraction):
            return Fp(x.numerator, self.char) / Fp(x.denominator, self.char)
        if isinstance(x, str):
            return self.of(Fraction(x))
        raise TypeError(f"cannot coerce {x!r} into F_{self.char}")

    @property
    def zero(self):
        return self.of(0)

    @property
    def one(self):
        return self.of(1)

    def __eq__(self, other):
        return isinstance(other, Field) and self.char == other.char

    def __hash__(self):
        return hash(("Field", self.char))

    def __repr__(self):
        return "QQ" if self.char == 0 else f"GF({self.char})"


QQ = Field(0)


class Poly:
    """Sparse polynomial: dict mapping exponent tuples to nonzero coefficients.

    Subclasses fix the variable names.  Arithmetic is exact; zero
    coefficients are never stored.
    """

    VARS = ()

    def __init__(self, terms=None, field=QQ):
        self.field = field
        vals = {}
        for k, c in (terms or {}).items():
            c = c if isinstance(c, Fp) and field.char else field.of(c)
            if c:
                vals[tuple(k)] = c
        self.terms = vals

    @classmethod
    def zero(cls, field=QQ):
        return cls({}, field)

    @classmethod
    def const(cls, c, field=QQ):
        return cls({(0,) * len(cls.VARS): c}, field)

    @classmethod
    def mono(cls, exps, c=1, field=QQ):
        return cls({tuple(exps): c}, field)

    @classmethod
    def var(cls, name, field=QQ):
        i = cls.VARS.index(name)
        e = [0] * len(cls.VARS)
        e[i] = 1
        return cls({tuple(e): 1}, field)

    def is_zero(self):
        return not self.terms

    def at_origin(self):
        return self.terms.get((0,) * len(self.VARS), self.field.zero)

    def is_constant(self):
        return all(all(e == 0 for e in k) for k in self.terms)

    def total_degree(self):
        return max((sum(k) for k in self.terms), default=-1)

    def degree_in(self, name):
        i = self.VARS.index(name)
        return max((k[i] for k in self.terms), default=-1)

    def order_total(self):
        """Smallest total degree of a term; -1 on the zero poly."""
        return min((sum(k) for k in self.terms), default=-1)

    def order_in(self, name):
        """Smallest exponent of the variable appearing; -1 on the zero poly."""
        i = self.VARS.index(name)
        return min((k[i] for k in self.terms), default=-1)

    def coeffs_in(self, name):
        """View as a polynomial in one variable: exponent -> same-class poly
        with that variable's exponent zeroed."""
        i = self.VARS.index(name)
        out = {}
        for k, c in self.terms.items():
            rest = list(k)
            e = rest[i]
            rest[i] = 0
            out.setdefault(e, {})[tuple(rest)] = c
        return {e: type(self)(t, self.field) for e, t in out.items()}

    def _coerce(self, other):
        if isinstance(other, Poly):
            if type(other) is not type(self):
                raise TypeError("mixed polynomial rings")
            return other
        return type(self).const(self.field.of(other), self.field)

    def __add__(self, other):
        o = self._coerce(other)
        t = dict(self.terms)
        for k, c in o.terms.items():
            s = t.get(k, self.field.zero) + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return type(self)(t, self.field)

    __radd__ = __add__

    def __neg__(self):
        return type(self)({k: -c for k, c in self.terms.items()}, self.field)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Fp)):
            c0 = self.field.of(other) if isinstance(other, int) else other
            return type(self)({k: c * c0 for k, c in self.terms.items()}, self.field)
        o = self._coerce(other)
        t = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in o.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                s = t.get(k, self.field.zero) + c1 * c2
                if s:
                    t[k] = s
                else:
                    t.pop(k, None)
        return type(self)(t, self.field)

    __rmul__ = __mul__

    def __pow__(self, e):
        assert isinstance(e, int) and e >= 0
        out = type(self).const(1, self.field)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((type(self).__name__, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return format_poly(self)

    def shift(self, deltas):
        """Multiply by a (Laurent) monomial; all resulting exponents must be >= 0."""
        t = {}
        for k, c in self.terms.items():
            nk = tuple(a + d for a, d in zip(k, deltas))
            if any(e < 0 for e in nk):
                raise NotDivisible(f"{self!r} not divisible by the monomial shift")
            t[nk] = c
        return type(self)(t, self.field)


class BivarPoly(Poly):
    VARS = ("Z", "W")

    def to_quad(self):
        return QuadPoly({(0, 0, z, w): c for (z, w), c in self.terms.items()}, self.field)

    def eval_w0(self):
        """Set W = 0."""
        return BivarPoly({(z, 0): c for (z, w), c in self.terms.items() if w == 0},
                         self.field)

    def eval_z0(self):
        return BivarPoly({(0, w): c for (z, w), c in self.terms.items() if z == 0},
                         self.field)


class QuadPoly(Poly):
    VARS = ("X", "Y", "Z", "W")

    def as_bivar(self):
        if any(k[0] or k[1] for k in self.terms):
            raise ValueError("polynomial involves X or Y")
        return BivarPoly({(k[2], k[3]): c for k, c in self.terms.items()}, self.field)


def exact_divide(g, f):
    """Return q with g = q*f, or raise NotDivisible.  f must be nonzero."""
    if f.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    cls = type(g)
    q = {}
    rem = g
    lt_f = max(f.terms)
    cf = f.terms[lt_f]
    while rem.terms:
        lt = max(rem.terms)
        d = tuple(a - b for a, b in zip(lt, lt_f))
        if any(e < 0 for e in d):
            raise NotDivisible(f"{f!r} does not divide {g!r}")
        c = rem.terms[lt] / cf
        q[d] = c
        rem = rem - cls.mono(d, c, g.field) * f
    return cls(q, g.field)


def divides(f, g):
    try:
        exact_divide(g, f)
        return True
    except NotDivisible:
        return False


def f_adic_valuation(g, f):
    """Largest s with f^s | g; None (infinity) iff g = 0."""
    if g.is_zero():
        return None
    s = 0
    while True:
        try:
            g = exact_divide(g, f)
            s += 1
        except NotDivisible:
            return s


# --- univariate and bivariate gcd -----------------------------------------

def _univar_divmod(a, b, name):
    """Division with remainder for polynomials univariate in `name`."""
    cls = type(a)
    i = cls.VARS.index(name)
    db = b.degree_in(name)
    lb = b.coeffs_in(name)[db].at_origin()
    q = cls.zero(a.field)
    r = a
    while not r.is_zero() and r.degree_in(name) >= db:
        dr = r.degree_in(name)
        lr = r.coeffs_in(name)[dr].at_origin()
        e = [0] * len(cls.VARS)
        e[i] = dr - db
        t = cls.mono(tuple(e), lr / lb, a.field)
        q = q + t
        r = r - t * b
    return q, r


def univar_gcd(a, b, name):
    """Monic gcd of two polynomials univariate in `name`."""
    while not b.is_zero():
        a, b = b, _univar_divmod(a, b, name)[1]
    if a.is_zero():
        return a
    lc = a.coeffs_in(name)[a.degree_in(name)].at_origin()
    return a * (a.field.one / lc)


def content_in(p, name):
    """Gcd of the coefficients of p viewed as a polynomial in `name`
    (a polynomial in the remaining variable; bivariate input only)."""
    other = next(v for v in p.VARS if v != name)
    g = type(p).zero(p.field)
    for c in p.coeffs_in(name).values():
        g = univar_gcd(g, c, other)
        if g.is_constant() and not g.is_zero():
            break
    return g


def bivar_gcd(a, b):
    """Gcd of two bivariate polynomials, normalized monic in lex order W > Z."""
    if a.is_zero():
        return normalize_monic(b)
    if b.is_zero():
        return normalize_monic(a)
    if a.degree_in("W") == 0 and b.degree_in("W") == 0:
        return univar_gcd(a, b, "Z")
    ca, cb = content_in(a, "W"), content_in(b, "W")
    pa = exact_divide(a, ca) if not ca.is_zero() else a
    pb = exact_divide(b, cb) if not cb.is_zero() else b
    # primitive-part Euclid over k(Z)[W] by clearing denominators each step
    x, y = pa, pb
    while not y.is_zero() and y.degree_in("W") > 0:
        dx, dy = x.degree_in("W"), y.degree_in("W")
        if dx < dy:
            x, y = y, x
            continue
        ly = y.coeffs_in("W")[dy]
        r = x * ly ** (dx - dy + 1)
        q, r = _pseudo_rem(r, y, "W")
        x, y = y, r
    if not y.is_zero():
        g = type(a).const(1, a.field)  # primitive parts are coprime in k(Z)[W]
    else:
        cx = content_in(x, "W")
        g = exact_divide(x, cx)
    g = g * univar_gcd(ca, cb, "Z")
    return normalize_monic(g)


def _pseudo_rem(a, b, name):
    """Plain division of a by b in `name`; leading coeff of b must divide along
    the way (caller pre-multiplied to make this so)."""
    cls = type(a)
    i = cls.VARS.index(name)
    db = b.degree_in(name)
    lb = b.coeffs_in(name)[db]
    q = cls.zero(a.field)
    r = a
    while not r.is_zero() and r.degree_in(name) >= db:
        dr = r.degree_in(name)
        lr = r.coeffs_in(name)[dr]
        fac = exact_divide(lr, lb)
        e = [0] * len(cls.VARS)
        e[i] = dr - db
        t = fac.shift(tuple(e))
        q = q + t
        r = r - t * b
    return q, r


def normalize_monic(p):
    """Scale so the lex-leading coefficient (W > Z) is 1."""
    if p.is_zero():
        return p
    lead = max(p.terms, key=lambda k: (k[1], k[0]))
    return p * (p.field.one / p.terms[lead])


# --- rational functions ----------------------------------------------------

class RationalFunction:
    """A quotient of bivariate polynomials, gcd-reduced on construction."""

    def __init__(self, num, den=None, reduce=True):
        if den is None:
            den = BivarPoly.const(1, num.field)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if reduce and not num.is_zero():
            g = bivar_gcd(num, den)
            if not g.is_constant():
                num = exact_divide(num, g)
                den = exact_divide(den, g)
        if num.is_zero():
            den = BivarPoly.const(1, num.field)
        self.num = num
        self.den = den

    @classmethod
    def const(cls, c, field=QQ):
        return cls(BivarPoly.const(c, field))

    def is_zero(self):
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, BivarPoly):
            return RationalFunction(other, reduce=False)
        if isinstance(other, (int, Fraction, Fp)):
            return RationalFunction.const(self.num.field.of(other)
                                          if isinstance(other, int) else other,
                                          self.num.field)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        o = self._coerce(other)
        return self + (-o)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o.is_zero():
            raise ZeroDivisionError
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self):
        n, d = self.num, self.den
        lead = max(d.terms, key=lambda k: (k[1], k[0]))
        c = d.terms[lead]
        n = n * (n.field.one / c)
        d = d * (d.field.one / c)
        return hash((frozenset(n.terms.items()), frozenset(d.terms.items())))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.den.is_constant():
            return repr(self.num) if self.den == 1 else f"({self.num!r})/({self.den!r})"
        return f"({self.num!r})/({self.den!r})"


# --- localized fractions ---------------------------------------------------

class LocalFraction:
    """num/den with den outside the prime of the locus.

    locus is "zero", "origin" (the prime (Z,W)), or ("principal", f).
    """

    def __init__(self, num, den=None, locus="origin"):
        if den is None:
            den = BivarPoly.const(1, num.field)
        if locus == "origin":
            if not den.at_origin():
                raise ValueError("denominator vanishes at the origin")
        elif locus == "zero":
            if den.is_zero():
                raise ValueError("zero denominator")
        elif isinstance(locus, tuple) and locus[0] == "principal":
            if divides(locus[1], den):
                raise ValueError("denominator inside the principal prime")
        else:
            raise ValueError(f"unknown locus {locus!r}")
        self.num = num
        self.den = den
        self.locus = locus

    def as_rational(self):
        return RationalFunction(self.num, self.den)

    def __repr__(self):
        return f"LocalFraction({self.num!r}, {self.den!r}, {self.locus!r})"


class FactoredDenominator:
    """unit * prod(factor^multiplicity); factors are irreducible, vanish at the
    origin, pairwise non-associate, and normalized monic (lex W > Z)."""

    def __init__(self, unit, factors):
        if not unit.at_origin():
            raise ValueError("unit part vanishes at the origin")
        seen = []
        for f, m in factors:
            if f.at_origin() or f.is_constant():
                raise ValueError("factor must be nonconstant and vanish at the origin")
            nf = normalize_monic(f)
            if any(nf == g for g in seen):
                raise ValueError("repeated factor; merge multiplicities")
            seen.append(nf)
        self.unit = unit
        self.factors = [(normalize_monic(f), m) for f, m in factors]

    def expand(self):
        p = self.unit
        for f, m in self.factors:
            p = p * f ** m
        return p


# --- resultants with Bezout witnesses -------------------------------------

def _rf_poly_divmod(a, b):
    """Divmod for dense lists of RationalFunction coefficients (index = degree)."""
    a = list(a)
    q = [None] * max(1, len(a) - len(b) + 1)
    field = b[-1].num.field
    zero = RationalFunction.const(0, field)
    for i in range(len(q)):
        q[i] = zero
    while len(a) >= len(b):
        while a and a[-1].is_zero():
            a.pop()
        if len(a) < len(b):
            break
        c = a[-1] / b[-1]
        d = len(a) - len(b)
        q[d] = q[d] + c
        for i, bc in enumerate(b):
            a[d + i] = a[d + i] - c * bc
        a.pop()
    while a and a[-1].is_zero():
        a.pop()
    return q, a


def resultant_bezout(u, v, eliminate):
    """Eliminate one variable from the pair (u, v).

    Returns (r, a, b) with r = a*u + b*v, r a nonzero polynomial in the
    remaining variable alone.  Raises DegenerateResultant when u and v share
    a factor involving the eliminated variable.
    """
    if u.is_zero() or v.is_zero():
        raise DegenerateResultant("zero input")
    field = u.field
    one = BivarPoly.const(1, field)
    if u.degree_in(eliminate) <= 0:
        return u, one, BivarPoly.zero(field)
    if v.degree_in(eliminate) <= 0:
        return v, BivarPoly.zero(field), one

    def to_list(p):
        cs = p.coeffs_in(eliminate)
        out = [RationalFunction.const(0, field)] * (max(cs) + 1)
        for e, c in cs.items():
            out[e] = RationalFunction(c, reduce=False)
        return out

    r0, r1 = to_list(u), to_list(v)
    zero = RationalFunction.const(0, field)
    one_rf = RationalFunction.const(1, field)
    s0, s1 = [one_rf], [zero]
    t0, t1 = [zero], [one_rf]

    def sub_mul(x, q, y):
        # x - q*y as coefficient lists
        out = list(x) + [zero] * max(0, len(q) + len(y) - 1 - len(x))
        for i, qc in enumerate(q):
            if qc.is_zero():
                continue
            for j, yc in enumerate(y):
                out[i + j] = out[i + j] - qc * yc
        while out and out[-1].is_zero():
            out.pop()
        return out or [zero]

    while len(r1) > 1 and not all(c.is_zero() for c in r1):
        q, rem = _rf_poly_divmod(r0, r1)
        rem = rem or [zero]
        r0, r1 = r1, rem
        s0, s1 = s1, sub_mul(s0, q, s1)
        t0, t1 = t1, sub_mul(t0, q, t1)

    if all(c.is_zero() for c in r1):
        raise DegenerateResultant("common factor in the eliminated variable")
    if len(r1) > 1:
        raise DegenerateResultant("elimination did not terminate")

    r_rf, a_list, b_list = r1[0], s1, t1
    # clear denominators: multiply the identity r = a*u + b*v through by D
    dens = [r_rf.den] + [c.den for c in a_list] + [c.den for c in b_list]
    D = BivarPoly.const(1, field)
    for d in dens:
        g = bivar_gcd(D, d)
        D = D * exact_divide(d, g) if not g.is_constant() else D * d

    def clear(c):
        return c.num * exact_divide(D, c.den)

    r = clear(r_rf)
    elim_i = BivarPoly.VARS.index(eliminate)

    def assemble(lst):
        p = BivarPoly.zero(field)
        for e, c in enumerate(lst):
            sh = [0, 0]
            sh[elim_i] = e
            p = p + clear(c).shift(tuple(sh))
        return p

    a, b = assemble(a_list), assemble(b_list)
    assert a * u + b * v == r
    assert r.degree_in(eliminate) == 0 and not r.is_zero()
    return r, a, b


# --- truncated series ------------------------------------------------------

def truncate(p, boundZ, boundW):
    """Drop monomials with Z-degree >= boundZ or W-degree >= boundW."""
    if isinstance(p, QuadPoly):
        return QuadPoly({k: c for k, c in p.terms.items()
                         if k[2] < boundZ and k[3] < boundW}, p.field)
    return BivarPoly({k: c for k, c in p.terms.items()
                      if k[0] < boundZ and k[1] < boundW}, p.field)


def series_inverse_truncated(q, boundZ, boundW):
    """p with p*q = 1 modulo monomials Z^a W^b, a >= boundZ or b >= boundW."""
    c0 = q.at_origin()
    if not c0:
        raise NotUnit("constant term is zero")
    inv0 = q.field.one / c0
    r = truncate(BivarPoly.const(1, q.field) - q * inv0, boundZ, boundW)
    out = BivarPoly.const(1, q.field)
    term = BivarPoly.const(1, q.field)
    for _ in range(boundZ + boundW - 1):
        term = truncate(term * r, boundZ, boundW)
        if term.is_zero():
            break
        out = out + term
    return out * inv0


def adic_expand(phi, variable, order):
    """Expand a rational function adically in Z (or W).

    Returns {m: c_m} with c_m a nonzero RationalFunction in the other
    variable and phi = sum c_m * var^m modulo var^(order+1) locally.
    """
    if isinstance(phi, BivarPoly):
        phi = RationalFunction(phi, reduce=False)
    if phi.is_zero():
        return {}
    num, den = phi.num, phi.den
    vn = num.order_in(variable)
    vd = den.order_in(variable)
    i = BivarPoly.VARS.index(variable)
    sh = [0, 0]
    sh[i] = -vn
    num = num.shift(tuple(sh))
    sh[i] = -vd
    den = den.shift(tuple(sh))
    offset = vn - vd
    n_cs = num.coeffs_in(variable)
    d_cs = den.coeffs_in(variable)
    d0 = RationalFunction(d_cs[0], reduce=False)
    out = {}
    cs = {}
    for k in range(0, order - offset + 1):
        acc = RationalFunction(n_cs.get(k, BivarPoly.zero(num.field)), reduce=False)
        for j in range(k):
            if j in cs and (k - j) in d_cs:
                acc = acc - cs[j] * d_cs[k - j]
        c = acc / d0
        cs[k] = c
        if not c.is_zero():
            out[k + offset] = c
    return out


# --- irreducibility --------------------------------------------------------

VERIFIED = "verified"
UNVERIFIED = "unverified"
REDUCIBLE = "reducible"


def _poly_sqrt_univar(p, name):
    """Exact square root of a univariate polynomial, or None."""
    if p.is_zero():
        return type(p).zero(p.field)
    d = p.degree_in(name)
    if d % 2:
        return None
    cs = p.coeffs_in(name)
    lc = cs[d].at_origin()
    # leading coefficient must be a square in the field
    if p.field.char == 0:
        from math import isqrt
        if lc < 0:
            return None
        a, b = lc.numerator, lc.denominator
        ra, rb = isqrt(a), isqrt(b)
        if ra * ra != a or rb * rb != b:
            return None
        lroot = Fraction(ra, rb)
    else:
        pp = p.field.char
        if pow(lc.v, (pp - 1) // 2, pp) != 1 and lc.v % pp != 0:
            return None
        lroot = Fp(pow(lc.v, (pp + 1) // 4, pp), pp) if pp % 4 == 3 else None
        if lroot is None or lroot * lroot != lc:
            lroot = next((Fp(t, pp) for t in range(pp) if (t * t) % pp == lc.v), None)
            if lroot is None:
                return None
    cls = type(p)
    i = cls.VARS.index(name)

    def mono(e, c):
        ex = [0] * len(cls.VARS)
        ex[i] = e
        return cls.mono(tuple(ex), c, p.field)

    root = mono(d // 2, lroot)
    rem = p - root * root
    for e in range(d // 2 - 1, -1, -1):
        if rem.is_zero():
            break
        ce = rem.coeffs_in(name).get(e + d // 2)
        c = (ce.at_origin() if ce else p.field.zero) / (2 * lroot)
        t = mono(e, c)
        rem = rem - t * (2 * root + t)
        root = root + t
    return root if (root * root == p) else None


def verify_irreducible(f, effort_bound=1000):
    """Best-effort irreducibility check for a nonconstant bivariate polynomial.

    Handles: linear polynomials; polynomials of degree 1 in one variable
    (primitive check); quadratics in one variable (discriminant square test,
    char != 2); univariate polynomials vanishing at the origin.  Otherwise
    returns UNVERIFIED once the effort bound is exhausted.
    """
    if f.is_constant():
        raise ValueError("constant input")
    if f.total_degree() == 1:
        return VERIFIED
    for name in ("W", "Z"):
        other = "Z" if name == "W" else "W"
        if f.degree_in(name) == 0:
            # univariate in the other variable
            if f.at_origin() == 0 and f.degree_in(other) >= 2:
                return REDUCIBLE  # divisible by the variable, plus more
            if f.degree_in(other) == 1:
                return VERIFIED
            return UNVERIFIED
    for name in ("W", "Z"):
        dn = f.degree_in(name)
        if dn in (1, 2):
            cont = content_in(f, name)
            if not cont.is_constant():
                return REDUCIBLE
            if dn == 1:
                return VERIFIED
            cs = f.coeffs_in(name)
            a = cs.get(2, BivarPoly.zero(f.field))
            b = cs.get(1, BivarPoly.zero(f.field))
            c = cs.get(0, BivarPoly.zero(f.field))
            disc = b * b - 4 * a * c
            other = "Z" if name == "W" else "W"
            if disc.is_zero():
                return REDUCIBLE
            root = _poly_sqrt_univar(disc, other)
            return REDUCIBLE if root is not None else VERIFIED
    return UNVERIFIED


# --- text grammar ----------------------------------------------------------

def format_poly(p):
    """Deterministic text form: terms c*X^a*Y^b*Z^c*W^d joined by + and -."""
    if not p.terms:
        return "0"
    names = p.VARS
    keys = sorted(p.terms, reverse=True)
    parts = []
    for k in keys:
        c = p.terms[k]
        cval = c if isinstance(c, Fraction) else Fraction(c.v)
        neg = cval < 0
        mag = -cval if neg else cval
        factors = []
        if mag != 1 or all(e == 0 for e in k):
            factors.append(str(mag))
        for name, e in zip(names, k):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        term = "*".join(factors)
        if not parts:
            parts.append(("-" if neg else "") + term)
        else:
            parts.append((" - " if neg else " + ") + term)
    return "".join(parts)


def parse_poly(text, cls=BivarPoly, field=QQ):
    """Parse the term grammar c*X^a*Y^b*Z^c*W^d (+/- separated)."""
    import re

    text = text.replace("−", "-").strip()
    if text in ("0", ""):
        return cls.zero(field)
    tokens = re.findall(r"[+-]|[^+-]+", text)
    sign = 1
    result = cls.zero(field)
    i = 0
    while i < len(tokens):
        tok = tokens[i].strip()
        if tok == "+":
            i += 1
            continue
        if tok == "-":
            sign = -sign
            i += 1
            continue
        coeff = Fraction(1)
        exps = [0] * len(cls.VARS)
        j = 0
        factors = tok.split("*")
        # a trailing '/' (rational coefficient split across '-'? not possible) --
        for fac in factors:
            fac = fac.strip()
            if not fac:
                raise ValueError(f"bad term {tok!r}")
            if fac[0].isdigit() or fac[0] == ".":
                coeff *= Fraction(fac)
            elif "/" in fac:
                coeff *= Fraction(fac)
            else:
                m = re.fullmatch(r"([A-Za-z])(?:\^(\d+))?", fac)
                if not m:
                    raise ValueError(f"bad factor {fac!r} in {text!r}")
                name, e = m.group(1), int(m.group(2) or 1)
                if name not in cls.VARS:
                    raise ValueError(f"unknown variable {name!r}")
                exps[cls.VARS.index(name)] += e
            j += 1
        result = result + cls.mono(tuple(exps), field.of(coeff * sign), field)
        sign = 1
        i += 1
    return result
