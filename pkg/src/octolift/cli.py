"""Command-line front end: JSON coefficient tables in and out, one subcommand
per verification pipeline, machine-readable JSON reports.

Table file format (exact data only, no floats):

    {"kind": "halfintegral" | "siegel" | "quaternionic",
     "weight": <int>,
     "entries": [{"key": <key>, "re": "p/q", "im": "p/q"}, ...]}

where <key> is an integer n (halfintegral), a triple [a, b, c] (siegel), or a
pair of 2x2 integer matrices (quaternionic).  Values are Gaussian rationals
with numerator/denominator strings parsed exactly.  Numeric results
(whittaker, poincare) are written as CSV with 17 significant digits.

Report format, emitted as JSON on standard output by every subcommand:

    {"command": ..., "status": "pass" | "fail" | "error",
     "details": [...], "seed": ..., "timings": {"total_s": ...}}

Exit code 0 on pass, 1 on fail, 2 on usage or data errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from fractions import Fraction
from math import exp, gcd, isqrt, pi
from typing import Dict, List, Optional, Tuple

from .coset import (GramTriple, IndexPair, breve, gram, hnf_right_cosets,
                    is_strongly_primitive, mat2, pair_act, reduce_gram)
from .lifts import (HalfIntegralTable, InsufficientTableError, QuatTable,
                    SiegelTable, classical_maass_check, classical_maass_lift,
                    dirichlet_factor_check, fj_extract, fj_pair,
                    maass_membership, reduced_triples, spezialschar_keys,
                    theta_star_table)
from .octonion import Octonion, conj, norm, oct_mul, trilinear
from .quadspace import GaussRational, bracket, cartan_theta
from . import triality
from . import orbits
from . import whittaker


class TableError(Exception):
    """A table file failed to parse; the message is the diagnostic."""


# --- exact value / key codecs ---------------------------------------------------

def _parse_rational(s, where: str) -> Fraction:
    if not isinstance(s, str):
        raise TableError(f"{where}: rational values must be strings, "
                         f"got {type(s).__name__}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise TableError(f"{where}: bad rational string {s!r} ({e})")


def _parse_gauss(entry: dict, where: str) -> GaussRational:
    return GaussRational(_parse_rational(entry.get("re", "0"), where),
                         _parse_rational(entry.get("im", "0"), where))


def _gauss_fields(v: GaussRational) -> Dict[str, str]:
    return {"re": str(v.re), "im": str(v.im)}


def _parse_int(x, where: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise TableError(f"{where}: expected an integer, got {x!r}")
    return x


def _parse_mat2(x, where: str):
    if (not isinstance(x, list) or len(x) != 2
            or any(not isinstance(r, list) or len(r) != 2 for r in x)):
        raise TableError(f"{where}: expected a 2x2 integer matrix, got {x!r}")
    return mat2(*(_parse_int(e, where) for row in x for e in row))


def _parse_key(kind: str, key, where: str):
    if kind == "halfintegral":
        return _parse_int(key, where)
    if kind == "siegel":
        if not isinstance(key, list) or len(key) != 3:
            raise TableError(f"{where}: expected a triple [a, b, c]")
        return GramTriple(*(_parse_int(e, where) for e in key))
    if not isinstance(key, list) or len(key) != 2:
        raise TableError(f"{where}: expected a pair of 2x2 matrices")
    return (_parse_mat2(key[0], where), _parse_mat2(key[1], where))


def _key_json(kind: str, key):
    if kind == "halfintegral":
        return key
    if kind == "siegel":
        return [key.a, key.b, key.c]
    return [[list(row) for row in m] for m in key]


def _key_sort(kind: str):
    if kind == "siegel":
        return lambda t: (t.a, t.b, t.c)
    return lambda k: k


KINDS = ("halfintegral", "siegel", "quaternionic")


def parse_table(data):
    """JSON object -> HalfIntegralTable / SiegelTable / QuatTable."""
    if not isinstance(data, dict):
        raise TableError("table file must be a JSON object")
    kind = data.get("kind")
    if kind not in KINDS:
        raise TableError(f"kind must be one of {KINDS}, got {kind!r}")
    weight = _parse_int(data.get("weight"), "weight")
    raw = data.get("entries")
    if not isinstance(raw, list):
        raise TableError("entries must be a list")
    entries = {}
    for i, entry in enumerate(raw):
        where = f"entries[{i}]"
        if not isinstance(entry, dict) or "key" not in entry:
            raise TableError(f"{where}: each entry needs a 'key'")
        key = _parse_key(kind, entry["key"], where)
        if key in entries:
            raise TableError(f"{where}: duplicate key {entry['key']!r}")
        entries[key] = _parse_gauss(entry, where)
    try:
        if kind == "halfintegral":
            return HalfIntegralTable(weight, entries)
        if kind == "siegel":
            return SiegelTable(weight, entries)
        return QuatTable(weight, entries)
    except ValueError as e:
        raise TableError(f"invalid table: {e}")


def serialize_table(table) -> dict:
    """Table object -> JSON object; keys are emitted in sorted order so the
    output is deterministic and parse(serialize(t)) == t."""
    if isinstance(table, HalfIntegralTable):
        kind = "halfintegral"
    elif isinstance(table, SiegelTable):
        kind = "siegel"
    elif isinstance(table, QuatTable):
        kind = "quaternionic"
    else:
        raise TypeError(f"not a table: {table!r}")
    entries = []
    for key in sorted(table.entries, key=_key_sort(kind)):
        row = {"key": _key_json(kind, key)}
        row.update(_gauss_fields(table.entries[key]))
        entries.append(row)
    return {"kind": kind, "weight": table.weight, "entries": entries}


def load_table(path: str):
    try:
        with open(path) as f:
            data = json.load(f)
    except OSError as e:
        raise TableError(f"cannot read {path}: {e}")
    except json.JSONDecodeError as e:
        raise TableError(f"{path}: invalid JSON: {e}")
    return parse_table(data)


def write_table(table, path: str) -> None:
    with open(path, "w") as f:
        json.dump(serialize_table(table), f, indent=1)
        f.write("\n")


# --- synthetic tables ------------------------------------------------------------

def _random_gauss(rng: random.Random) -> GaussRational:
    return GaussRational(Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
                         Fraction(rng.randint(-9, 9), rng.randint(1, 4)))


def synth_table(kind: str, seed: int, bound: int, weight: int = 10):
    """Deterministic pseudo-random table honoring the kind's support rule:
    halfintegral keys n <= bound with n = 0, 3 mod 4; siegel keys the reduced
    positive definite triples of discriminant <= bound; quaternionic keys the
    standard strongly-primitive family with det S <= bound."""
    rng = random.Random(seed)
    entries = {}
    if kind == "halfintegral":
        for n in range(bound + 1):
            if n % 4 in (0, 3):
                entries[n] = _random_gauss(rng)
        return HalfIntegralTable(weight, entries)
    if kind == "siegel":
        for t in sorted(reduced_triples(bound),
                        key=lambda t: (t.a, t.b, t.c)):
            entries[t] = _random_gauss(rng)
        return SiegelTable(weight, entries)
    if kind == "quaternionic":
        for lam in spezialschar_keys(bound):
            entries[lam] = _random_gauss(rng)
        return QuatTable(weight, entries)
    raise TableError(f"kind must be one of {KINDS}, got {kind!r}")


# --- numeric CSV output ----------------------------------------------------------

def _g17(x: float) -> str:
    return format(x, ".17g")


def write_csv(path: str, header: List[str], rows: List[List[float]]) -> None:
    with open(path, "w") as f:
        f.write(",".join(header) + "\n")
        for row in rows:
            f.write(",".join(_g17(x) if isinstance(x, float) else str(x)
                             for x in row) + "\n")


# --- subcommand bodies -----------------------------------------------------------
# Each returns (status, details); raised TableError / ValueError /
# InsufficientTableError become status "error" with exit code 2.

def _random_octonion(rng: random.Random) -> Octonion:
    # plain-int coordinates: exact and much faster than Fractions
    return Octonion(rng.randint(-5, 5),
                    tuple(rng.randint(-5, 5) for _ in range(3)),
                    tuple(rng.randint(-5, 5) for _ in range(3)),
                    rng.randint(-5, 5))


def cmd_oct_check(args):
    rng = random.Random(args.seed)
    for i in range(args.bound):
        x, y, z = (_random_octonion(rng) for _ in range(3))
        if norm(oct_mul(x, y)) != norm(x) * norm(y):
            return "fail", [f"norm multiplicativity fails at case {i}: "
                            f"x={x}, y={y}"]
        if conj(oct_mul(x, y)) != oct_mul(conj(y), conj(x)):
            return "fail", [f"conjugation anti-homomorphism fails at case "
                            f"{i}: x={x}, y={y}"]
        t = trilinear(x, y, z)
        if t != trilinear(y, z, x) or t != trilinear(z, x, y):
            return "fail", [f"trilinear cyclic symmetry fails at case {i}: "
                            f"x={x}, y={y}, z={z}"]
    return "pass", [f"{args.bound} random exact cases verified for norm "
                    "multiplicativity, conjugation anti-homomorphism, "
                    "trilinear cyclic symmetry"]


def _biv_eq(X, Y) -> bool:
    return (X - Y).is_zero()


def cmd_triality_verify(args):
    details = []
    basis = triality.ge_basis()
    imgs = [triality.phi_iso(X) for X in basis]
    for X, Y in zip(basis, imgs):
        if triality.phi_inv(Y) != X:
            return "fail", [f"phi_inv(phi_iso(X)) != X at basis element {X}"]
    details.append(f"phi bijective on the {len(basis)}-element basis")
    for i, X in enumerate(basis):
        for j, Y in enumerate(basis):
            lhs = triality.phi_iso(triality.ge_bracket(X, Y))
            if not _biv_eq(lhs, bracket(imgs[i], imgs[j])):
                return "fail", [f"phi fails to preserve the bracket at basis "
                                f"pair ({i}, {j})"]
    details.append(f"phi preserves the bracket on all {len(basis)}x"
                   f"{len(basis)} basis pairs")
    for X, Y in zip(basis, imgs):
        if not _biv_eq(triality.phi_iso(triality.ge_cartan(X)),
                       cartan_theta(Y)):
            return "fail", [f"phi does not intertwine the Cartan involutions "
                            f"at basis element {X}"]
    details.append("phi intertwines the Cartan involutions on the basis")
    for k, triple in enumerate(triality.standard_triples()):
        if not triality.verify_triality_triple(*triple):
            return "fail", [f"standard triality triple {k} fails"]
    details.append("all 6 standard triality triples verified")
    rng = random.Random(args.seed)
    for i in range(args.bound):
        u, v = _random_octonion(rng), _random_octonion(rng)
        if not triality.verify_triality_triple(
                *triality.prop_mult_triple(u, v)):
            return "fail", [f"multiplication triple fails at case {i}: "
                            f"u={u}, v={v}"]
    details.append(f"{args.bound} random multiplication triples verified")
    for i in range(args.bound):
        a, b, c = (rng.randint(-9, 9) for _ in range(3))
        wc = triality.BhargavaCube.make(-c, (0, 0, b), (1, a, 1), 0)
        want = triality.BhargavaCube.make(-c, (0, b, 0), (a, 1, 1), 0)
        if triality.s3_act_cube((3, 1, 2), wc) != want:
            return "fail", [f"cube transformation fails at (a,b,c)="
                            f"({a},{b},{c})"]
    details.append(f"{args.bound} random cube transformations verified")
    return "pass", details


def cmd_lift(args):
    c = load_table(args.infile)
    if not isinstance(c, HalfIntegralTable):
        raise TableError("lift needs a halfintegral input table")
    F = classical_maass_lift(c, args.weight, args.bound)
    rep = classical_maass_check(F)
    write_table(F, args.out)
    status = "pass" if rep.ok else "fail"
    return status, [rep.detail, f"wrote {args.out} "
                    f"({len(F.entries)} keys, weight {F.weight})"]


def cmd_theta_star(args):
    F = load_table(args.infile)
    if not isinstance(F, SiegelTable):
        raise TableError("theta-star needs a siegel input table")
    phi = theta_star_table(F, args.bound)
    write_table(phi, args.out)
    return "pass", [f"wrote {args.out} ({len(phi.entries)} keys, "
                    f"weight {phi.weight})"]


def cmd_maass_check(args):
    phi = load_table(args.infile)
    if not isinstance(phi, QuatTable):
        raise TableError("maass-check needs a quaternionic input table")
    rep = maass_membership(phi)
    return ("pass" if rep.ok else "fail"), [rep.detail]


def cmd_fj(args):
    phi = load_table(args.infile)
    if not isinstance(phi, QuatTable):
        raise TableError("fj needs a quaternionic input table")
    entries = {}
    for lam in phi.entries:
        t = gram(lam)
        if lam == fj_pair(t):
            entries[reduce_gram(t)] = fj_extract(phi, t)
    if not entries:
        raise TableError("no Fourier-Jacobi keys "
                         "([[a,0],[b,1]], [[0,-1],[c,0]]) in the table")
    out = SiegelTable(phi.weight, entries)
    write_table(out, args.out)
    return "pass", [f"wrote {args.out} ({len(entries)} extracted "
                    "coefficients)"]


def cmd_dirichlet(args):
    table = load_table(args.infile)
    if isinstance(table, SiegelTable):
        # Choose strongly primitive pairs over the smallest reduced triples,
        # then tabulate the quaternionic lift on exactly the orbit lam . g
        # (|det g| <= bound) the truncated series needs.
        triples = sorted(reduced_triples(8), key=lambda t: (t.disc(), t.a,
                                                            t.b, t.c))
        lams = list(dict.fromkeys(   # breve(t) = fj_pair(t) when a = 1
            f(t) for t in triples for f in (breve, fj_pair)))
        if args.seed is not None:
            random.Random(args.seed).shuffle(lams)
        lams = lams[:args.count]
        extra = [pair_act(lam, g) for lam in lams
                 for n in range(1, args.bound + 1)
                 for g in hnf_right_cosets(n)]
        phi = theta_star_table(table, 1, extra_pairs=extra)
    elif isinstance(table, QuatTable):
        phi = table
        lams = [lam for lam in sorted(phi.entries)
                if is_strongly_primitive(lam)]
        if not lams:
            raise TableError("no strongly primitive keys in the table")
        if args.seed is not None:
            random.Random(args.seed).shuffle(lams)
        lams = lams[:args.count]
    else:
        raise TableError("dirichlet needs a siegel or quaternionic table")
    details = []
    for lam in lams:
        rep = dirichlet_factor_check(phi, lam, args.bound)
        if not rep.ok:
            return "fail", [f"lambda={lam}: {rep.detail}"]
        details.append(f"lambda={lam}: {rep.detail}")
    return "pass", details


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    for p in range(2, isqrt(n) + 1):
        if n % (p * p) == 0:
            return False
    return True


def _random_isometry(lat, rng: random.Random):
    """A pseudo-random element of SO(L)(Z): a short product of Levi, Siegel,
    opposite and swap generators with small entries."""
    n = lat.n
    g = orbits.LatticeIsometry.identity(lat)
    for _ in range(6):
        kind = rng.randrange(4)
        if kind == 0:
            A = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            i, j = rng.sample(range(n), 2)
            A[i][j] = rng.randint(-2, 2)
            g = orbits.levi_isometry(lat, A).compose(g)
        elif kind == 3:
            i, j = rng.sample(range(1, n + 1), 2)
            g = orbits.swap_isometry(lat, i, j).compose(g)
        else:
            B = [[0] * n for _ in range(n)]
            i, j = rng.sample(range(n), 2)
            k = rng.randint(-2, 2)
            B[i][j], B[j][i] = k, -k
            make = (orbits.siegel_unipotent if kind == 1
                    else orbits.opposite_unipotent)
            g = make(lat, B).compose(g)
    return g


def cmd_reduce(args):
    rng = random.Random(args.seed)
    lat = orbits.SplitLattice(4)
    bv = lat.basis_vector
    for i in range(args.count):
        while True:
            a = rng.randint(1, args.bound)
            c = rng.randint(a, args.bound)
            b = rng.choice(range(1, 2 * isqrt(a * c), 2))  # odd, b^2 < 4ac
            if b * b < 4 * a * c and _is_squarefree(b * b - 4 * a * c):
                break
        T1 = tuple(a * p + q for p, q in zip(bv(1), bv(-1)))
        T2 = tuple(b * p + c * q + s
                   for p, q, s in zip(bv(1), bv(2), bv(-2)))
        g = _random_isometry(lat, rng)
        w1, w2 = g.apply(T1), g.apply(T2)
        h, t = orbits.reduce_pair(w1, w2)
        if t != GramTriple(a, b, c):
            return "fail", [f"case {i}: canonical form {t} does not match "
                            f"the source triple ({a},{b},{c})"]
        if h.apply(w1) != T1 or h.apply(w2) != T2:
            return "fail", [f"case {i}: reduction of the transported pair "
                            f"missed the canonical representatives"]
    return "pass", [f"{args.count} random pairs reduced to canonical form "
                    f"(triples up to bound {args.bound}, odd squarefree "
                    "discriminant)"]


def cmd_whittaker(args):
    details = []
    rows = []
    worst_sv = 0.0
    for v in range(-22, 23):
        for X in (0.1, 0.5, 1.0, 2.0, 5.0, 10.0):
            closed = pi * exp(-X) * (1j ** v) / 2
            got = whittaker.s_v_sum(v, X)
            err = abs(got - closed) / abs(closed)
            worst_sv = max(worst_sv, err)
    if worst_sv >= args.tol:
        return "fail", [f"Bessel-sum identity: worst relative error "
                        f"{worst_sv:.3e} >= tol {args.tol:.3e}"]
    details.append(f"Bessel-sum identity verified for |v| <= 22, "
                   f"worst relative error {worst_sv:.3e}")
    ell = args.weight
    T = (0.2, -0.9, -1.1, -0.2)
    worst = 0.0
    for t in (0.7, 1.3):
        for theta in (0.0, 0.6):
            u = whittaker.boost_u(theta)
            num, closed = whittaker.archimedean_integral_check(T, t, u, ell)
            for v in range(-ell, ell + 1):
                cn, cc = num.component(v), closed.component(v)
                err = abs(cn - cc) / max(abs(cc), 1e-300)
                worst = max(worst, err)
                rows.append([v, t, theta, cn.real, cn.imag,
                             cc.real, cc.imag])
            if worst >= args.tol:
                return "fail", [f"integral vs closed form: relative error "
                                f"{worst:.3e} >= tol {args.tol:.3e} at "
                                f"t={t}, theta={theta}"]
    details.append(f"Whittaker integral matches the closed form at weight "
                   f"{ell} on a 2x2 grid, worst relative error {worst:.3e}")
    if args.out:
        write_csv(args.out,
                  ["v", "t", "theta", "num_re", "num_im", "closed_re",
                   "closed_im"], rows)
        details.append(f"wrote {args.out}")
    return "pass", details


def cmd_poincare(args):
    import numpy as np
    a, b, c = args.key
    t = GramTriple(a, b, c)
    comps, tail = whittaker.q_poincare(t, args.weight, np.eye(8),
                                       args.bound)
    rows = [[v, comps[v + args.weight].real, comps[v + args.weight].imag]
            for v in range(-args.weight, args.weight + 1)]
    details = [f"Fourier coefficient at ({a},{b},{c}), weight {args.weight},"
               f" radius {args.bound}; tail bound {_g17(tail)}"]
    if args.out:
        write_csv(args.out, ["v", "re", "im"], rows)
        details.append(f"wrote {args.out}")
    else:
        details.append({"components": [[r[0], _g17(r[1]), _g17(r[2])]
                                       for r in rows]})
    return "pass", details


def cmd_synth(args):
    table = synth_table(args.kind, args.seed, args.bound, args.weight)
    write_table(table, args.out)
    return "pass", [f"wrote {args.out} ({len(table.entries)} keys, kind "
                    f"{args.kind}, seed {args.seed}, bound {args.bound})"]


# --- argument parsing and report emission ------------------------------------------

def _triple(s: str) -> Tuple[int, int, int]:
    parts = s.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("expected a,b,c")
    return tuple(int(p) for p in parts)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="octolift",
        description="Exact and numeric verification pipelines for the "
                    "octonionic lift package.")
    p.add_argument("--threads", type=int, default=1,
                   help="worker pool size (reserved; pipelines are "
                        "deterministic either way)")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("oct-check", cmd_oct_check, "octonion arithmetic identities "
             "on random exact cases")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--bound", type=int, default=1000,
                    help="number of random cases")

    sp = add("triality-verify", cmd_triality_verify,
             "isomorphism, Cartan, triality-triple and cube suite")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--bound", type=int, default=100,
                    help="number of random triples/cubes")

    sp = add("lift", cmd_lift, "classical genus-2 lift of a halfintegral "
             "table")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--weight", type=int, required=True)
    sp.add_argument("--bound", type=int, required=True,
                    help="discriminant bound")
    sp.add_argument("--out", required=True)

    sp = add("theta-star", cmd_theta_star, "tabulate the quaternionic lift "
             "of a siegel table")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--bound", type=int, required=True, help="det bound")
    sp.add_argument("--out", required=True)

    sp = add("maass-check", cmd_maass_check, "coefficient membership "
             "conditions on a quaternionic table")
    sp.add_argument("--in", dest="infile", required=True)

    sp = add("fj", cmd_fj, "extract Fourier-Jacobi coefficients from a "
             "quaternionic table")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--out", required=True)

    sp = add("dirichlet", cmd_dirichlet, "Dirichlet-series factorization "
             "check on a quaternionic table")
    sp.add_argument("--in", dest="infile", required=True)
    sp.add_argument("--bound", type=int, default=12,
                    help="series truncation")
    sp.add_argument("--count", type=int, default=5,
                    help="number of strongly primitive keys to test")
    sp.add_argument("--seed", type=int, default=None,
                    help="shuffle key choice (default: first keys)")

    sp = add("reduce", cmd_reduce, "canonical-form reduction of random "
             "vector pairs in the split rank-8 lattice")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=25)
    sp.add_argument("--bound", type=int, default=6,
                    help="entry bound for the random Gram triples")

    sp = add("whittaker", cmd_whittaker, "Bessel-sum identity and "
             "archimedean integral vs closed form")
    sp.add_argument("--weight", type=int, default=4)
    sp.add_argument("--tol", type=float, default=1e-6)
    sp.add_argument("--out", default=None, help="CSV output path")

    sp = add("poincare", cmd_poincare, "Fourier coefficient of the "
             "vector-valued series by lattice-point summation")
    sp.add_argument("--key", type=_triple, default=(1, 0, 1),
                    help="Gram triple a,b,c")
    sp.add_argument("--weight", type=int, default=16)
    sp.add_argument("--bound", type=int, default=1,
                    help="summation radius")
    sp.add_argument("--out", default=None, help="CSV output path")

    sp = add("synth", cmd_synth, "deterministic synthetic coefficient "
             "table")
    sp.add_argument("--kind", choices=KINDS, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--bound", type=int, default=36)
    sp.add_argument("--weight", type=int, default=10)
    sp.add_argument("--out", required=True)

    return p


def emit(report: dict, stream=None) -> None:
    json.dump(report, stream or sys.stdout, indent=1, default=str)
    (stream or sys.stdout).write("\n")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.monotonic()
    seed = getattr(args, "seed", None)
    try:
        status, details = args.fn(args)
    except (TableError, InsufficientTableError, ValueError, OSError) as e:
        status, details = "error", [f"{type(e).__name__}: {e}"]
    emit({"command": args.command, "status": status, "details": details,
          "seed": seed,
          "timings": {"total_s": round(time.monotonic() - start, 6)}})
    return {"pass": 0, "fail": 1}.get(status, 2)


if __name__ == "__main__":
    sys.exit(main())
