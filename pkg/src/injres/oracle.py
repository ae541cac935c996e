"""Brute-force verification of generalized-fraction identities.

Deliberately algorithm-disjoint from the reduction pipeline: no resultants,
no series inversion.  Equality of fractions is decided through the Cech
presentation: a fraction vanishes iff (x1...xn)^s * w lies in
(x1^{s+1}, ..., xn^{s+1}) locally for some s >= 0.

Membership in the localization at the origin is decided two ways:

* a truncated-quotient method: t lies in I*k[[vars]] iff t lies in I + m^d
  for every d, and once m^D is contained in I + m^{D+1} Nakayama gives
  m^D contained in I, making the level-(D+1) test an exact decision.  This
  is complete whenever I is primary to the maximal ideal (every use through
  cech_equal, whose ideals are powers of a system of parameters);

* a bounded certificate search u*t = sum p_i g_i with u a unit, sound for
  "true" and a semi-decision for "false", used as a fallback for ideals
  that are not primary to the origin.
"""

from .ring import BivarPoly, QuadPoly, LocalFraction, bivar_gcd


class BoundExceeded(Exception):
    pass


class _Span:
    """Row-reduced span of sparse vectors keyed by monomial tuples."""

    def __init__(self):
        self.rows = {}

    @staticmethod
    def _lead(vec):
        return max(vec, key=lambda k: (sum(k), k))

    def reduce(self, vec):
        vec = dict(vec)
        while vec:
            lead = self._lead(vec)
            row = self.rows.get(lead)
            if row is None:
                return vec
            c = vec[lead]
            for k, v in row.items():
                s = vec.get(k, 0) - c * v
                if s:
                    vec[k] = s
                else:
                    vec.pop(k, None)
        return vec

    def add(self, vec):
        """Reduce and insert; returns True if the span grew."""
        vec = self.reduce(vec)
        if not vec:
            return False
        lead = self._lead(vec)
        c = vec[lead]
        self.rows[lead] = {k: v / c for k, v in vec.items()}
        return True

    def contains(self, vec):
        return not self.reduce(vec)


def _monomials(nvars, maxdeg):
    def rec(nv, d):
        if nv == 1:
            for e in range(d + 1):
                yield (e,)
            return
        for e in range(d + 1):
            for rest in rec(nv - 1, d - e):
                yield (e,) + rest
    return rec(nvars, maxdeg)


def _trunc_total(p, maxdeg):
    return {k: c for k, c in p.terms.items() if sum(k) <= maxdeg}


def local_membership(target, gens, bound=None, allow_unit=True):
    """Does u * target lie in (gens) for some unit u at the origin?

    Exact decision when (gens) is primary to the origin; otherwise sound
    for True and bounded for False.
    """
    if target.is_zero():
        return True
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return False
    nvars = len(target.VARS)
    if bound is None:
        bound = 2 * max([target.total_degree()] +
                        [g.total_degree() for g in gens]) + 4

    # stage 1: truncated-quotient decision, valid when stabilization occurs
    start = max(g.total_degree() for g in gens)
    for D in range(start, bound + 1):
        span = _Span()
        for g in gens:
            dg = g.total_degree()
            for m in _monomials(nvars, max(0, D - g.order_total())):
                prod = _trunc_total(g.shift(m), D)
                if prod:
                    span.add(prod)
        one = target.field.one
        stable = all(not span.reduce({m: one})
                     for m in _monomials(nvars, D) if sum(m) == D)
        if stable:
            return span.contains(_trunc_total(target, D))

    if not allow_unit:
        return False
    # stage 2: bounded certificate search (no truncation)
    span = _Span()
    for g in gens:
        for m in _monomials(nvars, bound):
            span.add(dict(g.shift(m).terms))
    for m in _monomials(nvars, bound):
        if sum(m) == 0:
            continue
        span.add(dict(target.shift(m).terms))
    return span.contains(dict(target.terms))


def _num_unit(fr):
    n = fr.numerator
    if isinstance(n, LocalFraction):
        return n.num, n.den
    return n, type(n).const(1, n.field)


def cech_equal(a, b, bound=None, max_s=3):
    """Decide equality of two generalized fractions via the Cech presentation.

    Supports the two-denominator case over k[Z,W] localized at the origin and
    the four-denominator case over k[X,Y,Z,W] with X- and Y-power slots in
    positions 3 and 4.  Slot products across the two fractions must be
    coprime (up to an automatic slot swap of b); callers arrange this.
    """
    if len(a.denominators) != len(b.denominators):
        raise ValueError("mismatched denominator counts")
    if len(a.denominators) == 2:
        return _cech_equal_h2(a, b, bound, max_s)
    if len(a.denominators) == 4:
        return _cech_equal_h4(a, b, bound, max_s)
    raise ValueError("unsupported denominator count")


def _zero_adjust(fr, nslots):
    """Replace non-positive exponents: the fraction is zero; normalize to a
    zero numerator over harmless denominators."""
    if fr.trivially_zero():
        field = fr.denominators[0][0].field
        cls = type(fr.denominators[0][0])
        num = cls.zero(field)
        return type(fr)(num, [(b, max(e, 1)) for b, e in fr.denominators])
    return fr


def _cech_equal_h2(a, b, bound, max_s):
    from .gfrac import GeneralizedFraction
    a, b = _zero_adjust(a, 2), _zero_adjust(b, 2)
    (ga1, ea1), (ga2, ea2) = a.denominators
    na, ua = _num_unit(a)
    nb, ub = _num_unit(b)

    def difference(bden):
        (gb1, eb1), (gb2, eb2) = bden
        d1 = ga1 ** ea1 * gb1 ** eb1
        d2 = ga2 ** ea2 * gb2 ** eb2
        if not bivar_gcd(d1, d2).is_constant():
            return None
        t = (na * ub * gb1 ** eb1 * gb2 ** eb2
             - nb * ua * ga1 ** ea1 * ga2 ** ea2)
        return t, d1, d2

    got = difference(b.denominators)
    if got is None:
        # try the swapped slots of b, which negates b
        nb = -nb
        got = difference([b.denominators[1], b.denominators[0]])
        if got is None:
            raise ValueError("cannot arrange coprime denominator slots")
    t, d1, d2 = got
    if t.is_zero():
        return True
    for s in range(max_s + 1):
        tt = t * (d1 * d2) ** s
        if local_membership(tt, [d1 ** (s + 1), d2 ** (s + 1)], bound):
            return True
    return False


def _cech_equal_h4(a, b, bound, max_s):
    a, b = _zero_adjust(a, 4), _zero_adjust(b, 4)

    def unpack(fr):
        (g1, e1), (g2, e2), (x, ex), (y, ey) = fr.denominators
        for base, name in ((x, "X"), (y, "Y")):
            if not (len(base.terms) == 1 and base.degree_in(name) == 1
                    and base.total_degree() == 1):
                raise ValueError("slots 3 and 4 must be X and Y")
        n, u = _num_unit(fr)
        return n, u, g1 ** e1, g2 ** e2, ex, ey

    na, ua, A1, A2, xa, ya = unpack(a)
    nb, ub, B1, B2, xb, yb = unpack(b)
    J, K = max(xa, xb), max(ya, yb)
    X = QuadPoly.var("X", na.field)
    Y = QuadPoly.var("Y", na.field)

    def lift(p):
        return p.to_quad() if isinstance(p, BivarPoly) else p

    d1 = A1 * B1
    d2 = A2 * B2
    if not bivar_gcd(d1, d2).is_constant():
        raise ValueError("cannot arrange coprime denominator slots")
    ta = lift(na) * lift(ub) * lift(B1 * B2) * X ** (J - xa) * Y ** (K - ya)
    tb = lift(nb) * lift(ua) * lift(A1 * A2) * X ** (J - xb) * Y ** (K - yb)
    t = ta - tb
    if t.is_zero():
        return True
    d1q, d2q = lift(d1), lift(d2)
    for s in range(max_s + 1):
        tt = t * (d1q * d2q) ** s * X ** s * Y ** s
        ok = True
        for (ex, ey), comp in _xy_components(tt).items():
            if ex >= J + s or ey >= K + s:
                continue
            if not local_membership(comp, [d1 ** (s + 1), d2 ** (s + 1)], bound):
                ok = False
                break
        if ok:
            return True
    return False


def _xy_components(p):
    """Split a QuadPoly into BivarPoly coefficients of X^a Y^b."""
    out = {}
    for (x, y, z, w), c in p.terms.items():
        out.setdefault((x, y), {})[(z, w)] = c
    return {k: BivarPoly(t, p.field) for k, t in out.items()}
