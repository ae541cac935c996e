"""The minimal injective resolution of A/p over A = k[X,Y,Z,W]_m/(XW-YZ),
p = (X,Y).

Terms (one slot per height-one prime over p, then a pair of copies of the
hull at the maximal ideal):

  degree 0:  E(0)
  degree 1:  E(0) + sum_f E(f) + E(Z) + E(W)
  degree 2:  sum_f E(f) + E(Z) + E(W) + E(Z,W)
  degree n>=3:  E(Z,W)^2

The differentials are assembled from d0 (argument-preserving), d1 (a
case-by-case reduction into E(Z,W) coordinates) and the companion maps
pi0, pi11, pi12 which precompose with argument multiplications.
"""

from .ring import (BivarPoly, QuadPoly, RationalFunction, LocalFraction, QQ,
                   normalize_monic, resultant_bezout, exact_divide,
                   f_adic_valuation)
from .gfrac import (H2Canonical, H4Canonical, H1Class, reduce_h2,
                    lemma_onto_rewrite, NotApplicable)
from .hulls import (E0Element, EZElement, EWElement, EfElement, EZWElement,
                    act, act_series, omega, omega_zw, h4_to_ezw, BadLocus)


class DegreeMismatch(Exception):
    pass


class UnfactoredDenominator(Exception):
    pass


def _quad_mono(a, b, c, d, field=QQ):
    return QuadPoly.mono((a, b, c, d), 1, field)


class PrimeIndex:
    """Slot label of a resolution term: Zero, PrimeZ, PrimeW, Irr(f) for an
    irreducible f not associate to Z or W, or Maximal(copy)."""

    __slots__ = ("kind", "f", "copy")

    def __init__(self, kind, f=None, copy=0):
        assert kind in ("zero", "Z", "W", "irr", "max")
        self.kind = kind
        self.f = normalize_monic(f) if kind == "irr" else None
        self.copy = copy if kind == "max" else 0

    @classmethod
    def zero(cls):
        return cls("zero")

    @classmethod
    def prime_z(cls):
        return cls("Z")

    @classmethod
    def prime_w(cls):
        return cls("W")

    @classmethod
    def irr(cls, f):
        return cls("irr", f=f)

    @classmethod
    def maximal(cls, copy=0):
        assert copy in (0, 1)
        return cls("max", copy=copy)

    def _key(self):
        fk = None
        if self.f is not None:
            fk = tuple(sorted((e, str(c)) for e, c in self.f.terms.items()))
        return (self.kind, fk, self.copy)

    def __eq__(self, other):
        return isinstance(other, PrimeIndex) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __lt__(self, other):
        return self._key() < other._key()

    def __repr__(self):
        if self.kind == "irr":
            return f"Irr({self.f!r})"
        if self.kind == "max":
            return f"Maximal({self.copy})"
        return {"zero": "Zero", "Z": "PrimeZ", "W": "PrimeW"}[self.kind]


_LEGAL = {0: {"zero"}, 1: {"zero", "Z", "W", "irr"}, 2: {"Z", "W", "irr", "max"}}


def legal_kinds(degree):
    return _LEGAL.get(degree, {"max"})


class ChainElement:
    """An element of the degree-n term: finitely many nonzero slots."""

    def __init__(self, degree, components=None, field=QQ):
        assert degree >= 0
        self.degree = degree
        self.field = field
        self.components = {}
        for idx, el in (components or {}).items():
            if idx.kind not in legal_kinds(degree):
                raise DegreeMismatch(f"slot {idx!r} illegal in degree {degree}")
            if idx.kind == "max" and degree == 2 and idx.copy != 0:
                raise DegreeMismatch("degree 2 has a single maximal slot")
            if not el.is_zero():
                self.components[idx] = el

    @classmethod
    def zero(cls, degree, field=QQ):
        return cls(degree, {}, field)

    def is_zero(self):
        return not self.components

    def component(self, idx):
        return self.components.get(idx)

    def __add__(self, other):
        if self.degree != other.degree:
            raise DegreeMismatch("cannot add across degrees")
        comps = dict(self.components)
        for idx, el in other.components.items():
            comps[idx] = comps[idx] + el if idx in comps else el
        return ChainElement(self.degree, comps, self.field)

    def __neg__(self):
        return ChainElement(self.degree,
                            {i: -e for i, e in self.components.items()}, self.field)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return ChainElement(self.degree,
                            {i: e.scale(c) for i, e in self.components.items()},
                            self.field)

    def __eq__(self, other):
        if not isinstance(other, ChainElement) or self.degree != other.degree:
            return NotImplemented
        return (self - other).is_zero()

    def __repr__(self):
        if self.is_zero():
            return f"0 (degree {self.degree})"
        bits = [f"{i!r}: {e!r}" for i, e in sorted(self.components.items(),
                                                   key=lambda kv: kv[0])]
        return "{" + ", ".join(bits) + f"}} (degree {self.degree})"


def _support_primes(e0):
    """Irreducible origin-vanishing denominator factors, Z/W excluded."""
    if e0.factors is None:
        raise UnfactoredDenominator(
            "support discovery needs the denominator factor set")
    zn = normalize_monic(BivarPoly.var("Z", e0.field))
    wn = normalize_monic(BivarPoly.var("W", e0.field))
    out = []
    for f in e0.factors:
        nf = normalize_monic(f)
        if nf.is_constant() or nf.at_origin():
            continue
        if nf == zn or nf == wn:
            continue
        if not any(nf == g for g in out):
            out.append(nf)
    return sorted(out, key=lambda p: sorted((e, str(c)) for e, c in p.terms.items()))


def _map_parts(e0, prime, shift_rf=None):
    """Apply Omega at the given prime to every argument of an E0Element,
    optionally multiplying arguments by shift_rf first."""
    out = None
    for n, phi in e0.parts.items():
        if shift_rf is not None:
            phi = phi * shift_rf
        term = omega(prime, n, phi, e0.field)
        out = term if out is None else out + term
    if out is not None:
        return out
    if isinstance(prime, BivarPoly):
        return EfElement.zero(prime, e0.field)
    return {"Z": EZElement, "W": EWElement}[prime].zero(e0.field)


def _inv_z(field):
    return RationalFunction(BivarPoly.const(1, field), BivarPoly.var("Z", field),
                            reduce=False)


def _inv_w(field):
    return RationalFunction(BivarPoly.const(1, field), BivarPoly.var("W", field),
                            reduce=False)


def d0(e0):
    """E(0) -> sum_f E(f) + E(Z) + E(W), argument-preserving on each slot."""
    comps = {
        PrimeIndex.prime_z(): _map_parts(e0, "Z"),
        PrimeIndex.prime_w(): _map_parts(e0, "W"),
    }
    for f in _support_primes(e0):
        comps[PrimeIndex.irr(f)] = _map_parts(e0, f)
    return ChainElement(1, comps, e0.field)


def _d1_axis(el, axis):
    """d1 on E(Z) (axis="Z", sign -1) or E(W) (axis="W", sign +1)."""
    field = el.field
    out = EZWElement.zero(field)
    for n, cm in el.parts.items():
        for m, c in cm.items():
            # c is univariate in the off-axis variable: split off its pole
            other = "W" if axis == "Z" else "Z"
            w = max(c.den.order_in(other), 0)
            h0 = c.den.shift((0, -w) if axis == "Z" else (-w, 0))
            base = omega_zw(n, m, -w, field) if axis == "Z" \
                else omega_zw(n, -w, m, field)
            term = act_series(LocalFraction(c.num, h0), base)
            out = out + (-term if axis == "Z" else term)
    return out


def _d1_irr(el):
    """d1 on E(f): slotwise reduction against the pair
    (h * W^{i+1} * Z^{n+1-i}, f^s), reassembled through H4 coordinates."""
    field = el.field
    Z = BivarPoly.var("Z", field)
    W = BivarPoly.var("W", field)
    h4 = H4Canonical()
    for n, cls in el.parts.items():
        if cls.is_zero():
            continue
        g, h, f, s = cls.g, cls.h, cls.f, cls.s
        for i in range(n + 1):
            d1base = h * W ** (i + 1) * Z ** (n + 1 - i)
            h2 = reduce_h2(g, (d1base, 1), (f, s))
            h4 = h4 + H4Canonical({(zi, wj, i + 1, n + 1 - i): c
                                   for (zi, wj), c in h2.coeffs.items()})
    return h4_to_ezw(h4, field)


def d1_f(prime, el):
    """The component of d1 at one height-one prime; lands in EZW coordinates."""
    if prime.kind == "Z":
        return _d1_axis(el, "Z")
    if prime.kind == "W":
        return _d1_axis(el, "W")
    if prime.kind == "irr":
        return _d1_irr(el)
    raise DegreeMismatch(f"d1 undefined at slot {prime!r}")


def d1(chain_f_components):
    """Sum of d1_f over the E(f)-slots of a dict {PrimeIndex: element}."""
    out = None
    field = QQ
    for idx, el in chain_f_components.items():
        if idx.kind in ("zero", "max"):
            continue
        term = d1_f(idx, el)
        field = term.field
        out = term if out is None else out + term
    return out if out is not None else EZWElement.zero(field)


def pi0(e0):
    """E(0) -> sum_f E(f): d0_f on irreducible slots, d0_Z(arg/Z),
    d0_W(arg/W) on the axis slots.  Lands in degree 2."""
    field = e0.field
    comps = {
        PrimeIndex.prime_z(): _map_parts(e0, "Z", _inv_z(field)),
        PrimeIndex.prime_w(): _map_parts(e0, "W", _inv_w(field)),
    }
    for f in _support_primes(e0):
        comps[PrimeIndex.irr(f)] = _map_parts(e0, f)
    return ChainElement(2, comps, field)


def pi11_pi12(prime, el):
    """The two socle-level companions of d1 at one prime: returns the pair
    (pi11 component, pi12 component) in EZW coordinates."""
    field = el.field
    zrf = RationalFunction(BivarPoly.var("Z", field), BivarPoly.var("W", field),
                           reduce=False)
    if prime.kind == "Z":
        return (d1_f(prime, el.mul_arg(zrf)), d1_f(prime, el))
    if prime.kind == "W":
        wrf = RationalFunction(BivarPoly.var("W", field),
                               BivarPoly.var("Z", field), reduce=False)
        return (d1_f(prime, el), d1_f(prime, el.mul_arg(wrf)))
    if prime.kind == "irr":
        return (d1_f(prime, el.mul_arg(_inv_w(field))),
                d1_f(prime, el.mul_arg(_inv_z(field))))
    raise DegreeMismatch(f"pi maps undefined at slot {prime!r}")


def _f_triangle(prime, field):
    """The multiplier f^triangle: Y for Z, X for W, XW otherwise."""
    if prime.kind == "Z":
        return _quad_mono(0, 1, 0, 0, field)
    if prime.kind == "W":
        return _quad_mono(1, 0, 0, 0, field)
    return _quad_mono(1, 0, 0, 1, field)


def delta(chain):
    """The differential of the resolution."""
    field = chain.field
    n = chain.degree
    if n == 0:
        psi0 = chain.component(PrimeIndex.zero()) or E0Element.zero(field)
        out = d0(psi0) if not psi0.is_zero() else ChainElement.zero(1, field)
        zw = act(_quad_mono(1, 0, 0, 1, field), psi0)
        return out + ChainElement(1, {PrimeIndex.zero(): zw}, field)
    if n == 1:
        psi0 = chain.component(PrimeIndex.zero())
        comps = {}
        mx = EZWElement.zero(field)
        for idx, el in chain.components.items():
            if idx.kind == "zero":
                continue
            mx = mx + d1_f(idx, el)
            neg = act(_f_triangle(idx, field), el)
            comps[idx] = comps[idx] + (-neg) if idx in comps else -neg
        out = ChainElement(2, comps, field) + \
            ChainElement(2, {PrimeIndex.maximal(0): mx}, field)
        if psi0 is not None and not psi0.is_zero():
            out = out + pi0(psi0)
        return out
    if n == 2:
        psi_m = chain.component(PrimeIndex.maximal(0)) or EZWElement.zero(field)
        X = _quad_mono(1, 0, 0, 0, field)
        Y = _quad_mono(0, 1, 0, 0, field)
        top = act(X, psi_m)
        bot = act(Y, psi_m)
        for idx, el in chain.components.items():
            if idx.kind == "max":
                continue
            p11, p12 = pi11_pi12(idx, el)
            top = top + p11
            bot = bot + p12
        return ChainElement(3, {PrimeIndex.maximal(0): top,
                                PrimeIndex.maximal(1): bot}, field)
    p1 = chain.component(PrimeIndex.maximal(0)) or EZWElement.zero(field)
    p2 = chain.component(PrimeIndex.maximal(1)) or EZWElement.zero(field)
    X = _quad_mono(1, 0, 0, 0, field)
    Y = _quad_mono(0, 1, 0, 0, field)
    Zq = _quad_mono(0, 0, 1, 0, field)
    Wq = _quad_mono(0, 0, 0, 1, field)
    if n % 2 == 1:
        top = act(Wq, p1) + (-act(Zq, p2))
        bot = (-act(Y, p1)) + act(X, p2)
    else:
        top = act(X, p1) + act(Zq, p2)
        bot = act(Y, p1) + act(Wq, p2)
    return ChainElement(n + 1, {PrimeIndex.maximal(0): top,
                                PrimeIndex.maximal(1): bot}, field)


def iota0(g, field=QQ):
    """The augmentation A/p -> E(0): g maps to Omega^0_0(ZW*g); g is a
    fraction over k[Z,W] with denominator invertible at the origin."""
    if isinstance(g, BivarPoly):
        g = LocalFraction(g)
    if isinstance(g, RationalFunction):
        g = LocalFraction(g.num, g.den)
    zw = RationalFunction(BivarPoly.mono((1, 1), 1, field), reduce=False)
    phi = g.as_rational() * zw
    return ChainElement(0, {PrimeIndex.zero():
                            omega("0", 0, phi, field, factors=frozenset())}, field)


def surjectivity_witness(prime, s, t, field=QQ):
    """An element w at the given height-one prime with
    d1_f(w) = Omega^0(Z^s W^t); requires s, t <= 0.  The postcondition is
    verified before returning."""
    if s > 0 or t > 0:
        raise BadLocus("only socle targets with s, t <= 0 are hit this way")
    target = omega_zw(0, s, t, field)
    mono = RationalFunction(
        BivarPoly.mono((max(s, 0), max(t, 0)), 1, field),
        BivarPoly.mono((max(-s, 0), max(-t, 0)), 1, field), reduce=False)
    if prime.kind == "Z":
        w = -omega("Z", 0, mono, field)
    elif prime.kind == "W":
        w = omega("W", 0, mono, field)
    elif prime.kind == "irr":
        g, ell = lemma_onto_rewrite(prime.f, 1 - s, 1 - t)
        num = -(g * BivarPoly.var("Z", field))
        den = BivarPoly.mono((0, -t), 1, field)
        w = EfElement(prime.f, {0: H1Class(prime.f, num, den, ell)}, field)
    else:
        raise DegreeMismatch(f"no witness at slot {prime!r}")
    got = d1_f(prime, w)
    assert got == target, f"witness failed: {got!r} != {target!r}"
    return w


def _f_pure_rep(cls):
    """A rational function equal to the H1Class whose denominator involves
    no origin-vanishing irreducible besides f itself and an axis variable:
    replace 1/h by a/r modulo f^s with r univariate (Bezout)."""
    if cls.is_zero():
        return RationalFunction.const(0, cls.f.field)
    if cls.h.is_constant():
        return RationalFunction(cls.g, cls.h * cls.f ** cls.s)
    fs = cls.f ** cls.s
    try:
        r, a, _ = resultant_bezout(cls.h, fs, "W")
    except Exception:
        r, a, _ = resultant_bezout(cls.h, fs, "Z")
    return RationalFunction(cls.g * a, r * fs)


def d0_preimage(chain):
    """Invert d0 on a socle element of degree 1 killed by d1.

    Follows the partial-fraction shape of the exactness proof: peel the
    irreducible slots with their own representatives, then the Z slot, and
    what remains on the W slot must have coefficients of positive Z-order.
    Raises ValueError when the input is not in the kernel.
    """
    field = chain.field
    if chain.degree != 1 or chain.component(PrimeIndex.zero()) is not None:
        raise DegreeMismatch("expects a degree-1 element with no E(0) slot")
    phi = RationalFunction.const(0, field)
    factors = set()
    rem = chain
    for idx in sorted(chain.components):
        if idx.kind != "irr":
            continue
        el = rem.component(idx)
        if el is None:
            continue
        piece = RationalFunction.const(0, field)
        for n, cls in el.parts.items():
            if n != 0:
                raise ValueError("not a socle element")
            piece = piece + _f_pure_rep(cls)
        factors.add(idx.f)
        phi = phi + piece
        rem = rem - d0(omega("0", 0, piece, field, factors={idx.f}))
    ez = rem.component(PrimeIndex.prime_z())
    if ez is not None:
        piece = ez.representative(0)
        phi = phi + piece
        rem = rem - d0(omega("0", 0, piece, field, factors=frozenset()))
    ew = rem.component(PrimeIndex.prime_w())
    if ew is not None:
        piece = ew.representative(0)
        phi = phi + piece
        rem = rem - d0(omega("0", 0, piece, field, factors=frozenset()))
    if not rem.is_zero():
        raise ValueError("element is not in the image of d0")
    pre = omega("0", 0, phi, field, factors=frozenset(factors))
    assert d0(pre) == chain
    return pre
