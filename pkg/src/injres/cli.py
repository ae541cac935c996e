"""Command-line verification surface.

Subcommands run the computational suites and emit deterministic reports
(text or JSON); the exit code is 0 exactly when every check in scope
passed.  All randomness is driven by --seed, which is echoed in the report
header, so reports are byte-identical across runs with the same flags.
"""

import argparse
import json
import re
import sys

from .ring import (BivarPoly, LocalFraction, QQ, Field, parse_poly,
                   format_poly)
from .gfrac import (GeneralizedFraction, reduce_h2, h4_reduce,
                    h2_canonical_fraction, lemma_onto_rewrite)
from .oracle import cech_equal
from .hulls import act, is_socle, socle_project, omega_zw
from .resolution import (PrimeIndex, delta, d0, d1_f, d0_preimage,
                         surjectivity_witness, iota0)
from .cohomology import (CohomologyReport, local_cohomology,
                         ext_power_of_max, ext_self, yoneda_product,
                         yoneda_presentation_check, bass_numbers)
from . import dhm as dhm_mod
from . import samples

SCHEMA = "injres-report/1"


class UsageError(Exception):
    pass


def _parse_field(text):
    if text in ("Q", "q", "0", "rationals"):
        return QQ
    try:
        p = int(text)
    except ValueError:
        raise UsageError(f"bad field {text!r}") from None
    try:
        return Field(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _split_top(text, sep):
    """Split on sep at parenthesis depth 0."""
    out, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur))
    return out


def _structural_slash(text, last=False):
    """Index of the fraction bar: a top-level '/' not between two digits
    (those belong to rational coefficients)."""
    found = -1
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0:
            left = text[:i].rstrip()
            right = text[i + 1:].lstrip()
            if left[-1:].isdigit() and right[:1].isdigit():
                continue
            found = i
            if not last:
                return i
    return found


def _parse_denominator(entry, field):
    """A powered denominator: '(poly)^k', or a plain poly (a pure power of a
    single variable is split into base and exponent)."""
    entry = entry.strip()
    m = re.fullmatch(r"([XY])(?:\^(\d+))?", entry)
    if m:
        # the X and Y slots of a four-denominator fraction
        return m.group(1), int(m.group(2) or 1)
    m = re.fullmatch(r"\((.*)\)\s*\^\s*(\d+)", entry)
    if m:
        return parse_poly(m.group(1), BivarPoly, field), int(m.group(2))
    p = parse_poly(entry, BivarPoly, field)
    if len(p.terms) == 1:
        ((a, b),) = p.terms.keys()
        c = next(iter(p.terms.values()))
        if c == field.one and a and not b:
            return BivarPoly.var("Z", field), a
        if c == field.one and b and not a:
            return BivarPoly.var("W", field), b
    return p, 1


def parse_gfrac(text, field=QQ):
    """Parse '[ num / den1, den2 (, ...) ]' into (numerator, denominators).

    The numerator may itself be poly/poly (a fraction of polynomials); the
    X and Y slots of a four-denominator fraction are given as X^k, Y^l.
    """
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise UsageError("generalized fraction must be bracketed")
    body = text[1:-1]
    cut = _structural_slash(body, last=True)
    if cut < 0:
        raise UsageError("missing '/' in generalized fraction")
    num_text = body[:cut].strip()
    rest = body[cut + 1:]
    ncut = _structural_slash(num_text)
    if ncut >= 0:
        num = LocalFraction(parse_poly(num_text[:ncut], BivarPoly, field),
                            parse_poly(num_text[ncut + 1:], BivarPoly, field))
    else:
        num = parse_poly(num_text, BivarPoly, field)
    entries = [e for e in _split_top(rest, ",") if e.strip()]
    if len(entries) < 2:
        raise UsageError("need at least two denominators")
    dens = [_parse_denominator(e, field) for e in entries]
    return num, dens


def _format_coeff(c):
    return str(c)


def _canonical_lines(can):
    return [f"{key}: {_format_coeff(c)}"
            for key, c in sorted(can.coeffs.items())]


# --- suites -------------------------------------------------------------------

def suite_reduce(expr, field):
    rep = CohomologyReport(f"reduce {expr}")
    num, dens = parse_gfrac(expr, field)
    if len(dens) == 2:
        if any(isinstance(b, str) for b, _ in dens):
            raise UsageError("two-denominator fractions take Z,W-polynomials")
        can = reduce_h2(num, dens[0], dens[1])
        gf = GeneralizedFraction(num, dens)
        agreed = cech_equal(gf, h2_canonical_fraction(can, field))
        rep.add("oracle", "independent membership check", agreed)
    elif len(dens) == 4:
        for pos, name in ((2, "X"), (3, "Y")):
            if dens[pos][0] != name:
                raise UsageError(f"slot {pos + 1} must be a power of {name}")
        for pos in (0, 1):
            if isinstance(dens[pos][0], str):
                raise UsageError("slots 1 and 2 must be Z,W-polynomials")
        can = h4_reduce(num, dens[:2], dens[2][1], dens[3][1])
    else:
        raise UsageError("two or four denominators required")
    if can.is_zero():
        rep.add("canonical", "0")
    else:
        for line in _canonical_lines(can):
            rep.add("canonical", line)
    rep.data["coeffs"] = {str(k): str(v) for k, v in sorted(can.coeffs.items())}
    return [rep]


def suite_oracle(field, seed, count):
    rep = CohomologyReport("reduction vs independent oracle",
                           {"samples": count})
    rng = samples.rng_from_seed(seed)
    bad = 0
    for _ in range(count):
        num, d1_, d2_ = samples.random_h2_instance(rng, field)
        can = reduce_h2(num, d1_, d2_)
        gf = GeneralizedFraction(num, [d1_, d2_])
        if not cech_equal(gf, h2_canonical_fraction(can, field)):
            bad += 1
    rep.add("agreement", f"{count - bad}/{count} instances", bad == 0)
    return [rep]


def suite_resolution(field, seed, count):
    out = []
    rng = samples.rng_from_seed(seed)

    rep = CohomologyReport("differential squares to zero",
                           {"samples per degree": count})
    for deg in range(0, 7):
        bad = sum(1 for _ in range(count)
                  if not delta(delta(samples.random_chain(rng, deg, field))).is_zero())
        rep.add(f"degree {deg}", f"{count - bad}/{count} samples", bad == 0)
    out.append(rep)

    rep = CohomologyReport("socle law: X e = Y e = 0 iff e is its own "
                           "socle projection", {"samples per hull": count})
    primes = [PrimeIndex.zero(), PrimeIndex.prime_z(), PrimeIndex.prime_w(),
              PrimeIndex.irr(samples.irr_pool(field)[0]),
              PrimeIndex.maximal()]
    for p in primes:
        bad = 0
        for _ in range(count):
            e = samples.random_hull_element(rng, p, field)
            by_act = act(_xq(field), e).is_zero() and \
                act(_yq(field), e).is_zero()
            if by_act != (e == socle_project(e)):
                bad += 1
            if is_socle(e) != by_act:
                bad += 1
        rep.add(f"hull at {p.kind}", f"{count - bad}/{count} samples", bad == 0)
    out.append(rep)

    rep = CohomologyReport("first-row surjectivity witnesses")
    targets = [PrimeIndex.prime_z(), PrimeIndex.prime_w(),
               PrimeIndex.irr(samples.irr_pool(field)[0])]
    for p in targets:
        ok = True
        for s in range(-3, 1):
            for t in range(-3, 1):
                w = surjectivity_witness(p, s, t, field)
                ok = ok and (d1_f(p, w) == omega_zw(0, s, t, field))
        rep.add(f"prime {p.kind}", "all s,t in [-3,0]", ok)
    out.append(rep)

    rep = CohomologyReport("socle-row exactness spot checks",
                           {"samples": count})
    bad = 0
    for _ in range(count):
        e = iota0(samples.random_poly(rng, field), field)
        img = d0(e.component(PrimeIndex.zero()))
        pre = d0_preimage(img)
        if not (d0(pre) - img).is_zero():
            bad += 1
    rep.add("d0 preimages", f"{count - bad}/{count} samples", bad == 0)
    out.append(rep)
    return out


def _xq(field):
    from .ring import QuadPoly
    return QuadPoly.mono((1, 0, 0, 0), 1, field)


def _yq(field):
    from .ring import QuadPoly
    return QuadPoly.mono((0, 1, 0, 0), 1, field)


def suite_lc(ideal_text, field, trunc):
    if ideal_text.strip() in ("0", ""):
        gens = []
    else:
        gens = [parse_poly(t, BivarPoly, field)
                for t in _split_top(ideal_text, ",")]
    return [local_cohomology(gens, truncation=trunc, field=field)]


def suite_ext_power(n, field):
    rep = CohomologyReport(f"Ext^2(A/m^{n}, A/p)")
    basis = ext_power_of_max(n, field)
    rep.add("dimension", f"{len(basis)} = {n}({n}+1)/2",
            2 * len(basis) == n * (n + 1))
    rep.add("basis", " ".join(f"Omega^0(Z^{s} W^{t})" for s, t in basis))
    rep.data["dim"] = len(basis)
    return [rep]


def suite_ext_self(indices, field, trunc):
    return [ext_self(i, truncation=trunc, field=field) for i in indices]


def suite_yoneda(field, trunc):
    rep = CohomologyReport("Yoneda products")
    expected = {
        (0, 1): (1, 1), (1, 0): (1, 1), (0, 2): (2, 1), (2, 0): (2, 1),
        (1, 1): (None, 0), (1, 2): (None, 0), (2, 1): (None, 0),
        (2, 2): (4, -1), (2, 4): (6, -1), (4, 2): (6, -1),
        (4, 4): (8, -1), (2, 6): (8, -1),
    }
    for (i, j), (idx, coeff) in sorted(expected.items()):
        got = yoneda_product(i, j, field)
        if coeff == 0:
            ok = got.is_zero()
            rep.add(f"e_{i} x e_{j}", "0", ok)
        else:
            ok = (not got.is_zero()) and got.index == idx and got.coeff == coeff
            sign = "-" if coeff < 0 else ""
            rep.add(f"e_{i} x e_{j}", f"{sign}e_{idx}", ok)
    return [rep, yoneda_presentation_check(truncation=trunc, field=field)]


def suite_dhm(field, trunc, max_i=7, what=("ext", "dual", "hom")):
    out = []
    if "ext" in what:
        rep = CohomologyReport("Ext^i(M, A/p) dimensions")
        dims = [dhm_mod.dhm_ext(i, field) for i in range(max_i + 1)]
        want = [0, 0, 6, 7] + [0] * max(0, max_i - 3)
        rep.add("dims", ",".join(str(d) for d in dims), dims == want[:max_i + 1])
        rep.data["dims"] = dims
        out.append(rep)
    if "dual" in what:
        rep = CohomologyReport("dual module M' = Hom(M, E(Z,W))")
        named = dhm_mod.dhm_dual_basis(field)
        mod = dhm_mod.dhm_module(field)
        for name in sorted(named):
            rep.add(name, "hom conditions", named[name].is_hom(mod))
        info = dhm_mod.dhm_min_generators(field)
        rep.add("dimension", info["dim"], info["dim"] == 15)
        rep.add("minimal generators",
                f"{info['min_generators']} ({' '.join(info['generators'])})",
                info["min_generators"] == 5)
        out.append(rep)
    if "hom" in what:
        rep = CohomologyReport("Hom(M, E(q)) at height-one primes",
                               {"truncations": [trunc, trunc + 1]})
        targets = [PrimeIndex.prime_z(), PrimeIndex.prime_w()] + \
            [PrimeIndex.irr(f) for f in samples.irr_pool(field)]
        for p in targets:
            label = p.kind if p.kind != "irr" else f"irr {format_poly(p.f)}"
            dims = [dhm_mod.dhm_hom_space(p, truncation=T, field=field)[0]
                    for T in (trunc, trunc + 1)]
            rep.add(label, f"dims {dims[0]}, {dims[1]}", dims == [0, 0])
        d, _ = dhm_mod.dhm_hom_space(PrimeIndex.maximal(), truncation=trunc,
                                     field=field)
        rep.add("maximal", f"dim {d}", d == 15)
        out.append(rep)
    return out


def suite_bass():
    rep = CohomologyReport("Bass numbers read off the resolution terms")
    table = bass_numbers()
    want = {"p = (X,Y)": (1, 1, 0, 0, 0, 0, 0),
            "height-one primes (X,Y,f)": (0, 1, 1, 0, 0, 0, 0),
            "m = (X,Y,Z,W)": (0, 0, 1, 2, 2, 2, 2)}
    for name in sorted(table):
        seq = tuple(table[name])
        w = want.get(name)
        rep.add(f"mu at {name}", ",".join(str(x) for x in seq),
                w is not None and seq == w[:len(seq)])
    return [rep]


def suite_onto_rewrite(field):
    rep = CohomologyReport("onto-rewrite lemma")
    for text in ("Z+W", "Z+W^2", "W-Z^2"):
        f = parse_poly(text, BivarPoly, field)
        ok = True
        for s in range(1, 5):
            for t in range(1, 5):
                g, ell = lemma_onto_rewrite(f, s, t)
                lhs = reduce_h2(g, (BivarPoly.var("W", field), t), (f, ell))
                rhs = reduce_h2(BivarPoly.const(1, field),
                                (BivarPoly.var("W", field), t),
                                (BivarPoly.var("Z", field), s))
                ok = ok and lhs == rhs
        rep.add(text, "all 1 <= s,t <= 4", ok)
    return [rep]


# --- driver -------------------------------------------------------------------

def _emit(reports, cfg, fmt, stream):
    passed = all(r.passed for r in reports)
    if fmt == "json":
        doc = {"schema": SCHEMA, "config": cfg, "passed": passed,
               "reports": [{"title": r.title, "passed": r.passed,
                            "data": _jsonable(r.data),
                            "lines": [{"label": la, "detail": de, "ok": ok}
                                      for la, de, ok in r.lines]}
                           for r in reports]}
        stream.write(json.dumps(doc, indent=2, sort_keys=True) + "\n")
    else:
        head = " ".join(f"{k}={v}" for k, v in cfg.items())
        stream.write(f"# injres report ({head})\n")
        for r in reports:
            stream.write(r.render() + "\n")
        stream.write("PASS\n" if passed else "FAIL\n")
    return 0 if passed else 1


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (int, bool, str)) or x is None:
        return x
    return str(x)


def build_parser():
    ap = argparse.ArgumentParser(
        prog="injres",
        description="exact verification suites for the injective resolution "
                    "of A/p over A = k[X,Y,Z,W]_(X,Y,Z,W)/(XW-YZ)")
    ap.add_argument("--field", default="Q",
                    help="Q (default) or an odd prime p")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--trunc", type=int, default=8,
                    help="coordinate-box truncation bound")
    ap.add_argument("--samples", type=int, default=None,
                    help="sample count for randomized suites")
    ap.add_argument("--format", dest="fmt", choices=("text", "json"),
                    default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="canonicalize a generalized fraction")
    p.add_argument("expr")

    sub.add_parser("resolution-check",
                   help="differential, socle, witness and exactness suites")

    p = sub.add_parser("lc", help="local cohomology at I0 + (X,Y)")
    p.add_argument("--ideal", required=True,
                   help="comma-separated generators of I0, or 0")

    p = sub.add_parser("ext-power", help="Ext^2(A/m^n, A/p)")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("ext-self", help="Ext^i(A/p, A/p)")
    p.add_argument("--i", type=int, default=None)
    p.add_argument("--max-i", type=int, default=7)

    p = sub.add_parser("yoneda", help="Yoneda products and presentation")
    p.add_argument("--table", action="store_true")

    p = sub.add_parser("dhm", help="the 15-dimensional test module")
    p.add_argument("--ext", action="store_true")
    p.add_argument("--dual", action="store_true")
    p.add_argument("--hom", action="store_true")
    p.add_argument("--max-i", type=int, default=7)

    sub.add_parser("verify-all", help="every suite at reduced sample counts")
    return ap


def run_command(argv, stream=None):
    stream = stream or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        field = _parse_field(args.field)
        cfg = {"field": args.field, "seed": args.seed, "trunc": args.trunc,
               "samples": args.samples, "command": args.command}
        n = args.samples
        if args.command == "reduce":
            reports = suite_reduce(args.expr, field)
        elif args.command == "resolution-check":
            reports = suite_resolution(field, args.seed, n or 25)
        elif args.command == "lc":
            reports = suite_lc(args.ideal, field, args.trunc)
        elif args.command == "ext-power":
            reports = suite_ext_power(args.n, field)
        elif args.command == "ext-self":
            idx = [args.i] if args.i is not None else list(range(args.max_i + 1))
            reports = suite_ext_self(idx, field, args.trunc)
        elif args.command == "yoneda":
            reports = suite_yoneda(field, args.trunc)
        elif args.command == "dhm":
            what = tuple(w for w, on in
                         (("ext", args.ext), ("dual", args.dual),
                          ("hom", args.hom)) if on) or ("ext", "dual", "hom")
            reports = suite_dhm(field, min(args.trunc, 4), args.max_i, what)
        elif args.command == "verify-all":
            reports = []
            reports += suite_oracle(field, args.seed, n or 50)
            reports += suite_resolution(field, args.seed, n or 10)
            for ideal in ("Z,W", "0", "Z"):
                reports += suite_lc(ideal, field, args.trunc)
            for k in range(1, 6):
                reports += suite_ext_power(k, field)
            reports += suite_ext_self(range(8), field, min(args.trunc, 5))
            reports += suite_yoneda(field, min(args.trunc, 6))
            reports += suite_dhm(field, 3, 7)
            reports += suite_bass()
            reports += suite_onto_rewrite(field)
        else:  # pragma: no cover
            raise UsageError(args.command)
    except UsageError as exc:
        stream.write(f"error: {exc}\n")
        return 2
    return _emit(reports, cfg, args.fmt, stream)


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
