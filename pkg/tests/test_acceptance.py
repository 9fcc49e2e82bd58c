"""Acceptance gate: thirteen end-to-end criteria, one test (and one printed
pass/fail line) each.  Run with `pytest -v tests/test_acceptance.py`."""

import random
import time
from fractions import Fraction
from itertools import product
from math import exp, gcd, isqrt, pi

import numpy as np

from octolift.coset import (GramTriple, breve, gram, hnf_left_cosets,
                            hnf_right_cosets, is_strongly_primitive,
                            mat2, mat2_det, pair_act)
from octolift.lifts import (HalfIntegralTable, SiegelTable,
                            classical_maass_check, classical_maass_lift,
                            dirichlet_factor_check, fj_extract, fj_pair,
                            maass_membership, reduced_triples,
                            theta_star_table)
from octolift.octonion import Octonion, conj, norm, oct_mul, trilinear
from octolift.orbits import (LatticeIsometry, SplitLattice, levi_isometry,
                             opposite_unipotent, reduce_pair,
                             siegel_unipotent, swap_isometry)
from octolift.quadspace import GaussRational, bracket, cartan_theta
from octolift.triality import (BhargavaCube, ge_basis, ge_bracket, ge_cartan,
                               phi_inv, phi_iso, prop_mult_triple,
                               s3_act_cube, standard_triples,
                               verify_triality_triple)
from octolift.whittaker import (archimedean_integral_check, beta_fn,
                                boost_u, pairing22, positivity_oracle,
                                s_v_sum, LeviPoint, Y0, Y1)


def _report(num, ok, desc, extra=""):
    line = f"criterion {num:2d} [{'PASS' if ok else 'FAIL'}] {desc}"
    if extra:
        line += f" ({extra})"
    print(line)
    assert ok, line


def _rand_oct(rng):
    # plain-int coordinates: exact and much faster than Fractions
    return Octonion(rng.randint(-5, 5),
                    tuple(rng.randint(-5, 5) for _ in range(3)),
                    tuple(rng.randint(-5, 5) for _ in range(3)),
                    rng.randint(-5, 5))


def _rand_gauss(rng):
    return GaussRational(Fraction(rng.randint(-9, 9), rng.randint(1, 3)),
                         Fraction(rng.randint(-9, 9), rng.randint(1, 3)))


def _rand_half_table(rng, bound, weight):
    return HalfIntegralTable(weight, {n: _rand_gauss(rng)
                                      for n in range(bound + 1)
                                      if n % 4 in (0, 3)})


def _rand_siegel_table(rng, discbound, weight):
    return SiegelTable(weight,
                       {t: _rand_gauss(rng)
                        for t in sorted(reduced_triples(discbound),
                                        key=lambda t: (t.a, t.b, t.c))})


def test_criterion_01_octonion_suite():
    rng = random.Random(101)
    start = time.perf_counter()
    ok = True
    for _ in range(1000):
        x, y, z = _rand_oct(rng), _rand_oct(rng), _rand_oct(rng)
        if norm(oct_mul(x, y)) != norm(x) * norm(y):
            ok = False
            break
        if conj(oct_mul(x, y)) != oct_mul(conj(y), conj(x)):
            ok = False
            break
        t = trilinear(x, y, z)
        if t != trilinear(y, z, x) or t != trilinear(z, x, y):
            ok = False
            break
    elapsed = time.perf_counter() - start
    _report(1, ok and elapsed < 1.0,
            "octonion identities, 1000 random exact cases each",
            f"{elapsed:.2f}s")


def test_criterion_02_isomorphism_suite():
    start = time.perf_counter()
    basis = ge_basis()
    imgs = [phi_iso(X) for X in basis]
    ok = all(phi_inv(Y) == X for X, Y in zip(basis, imgs))
    for i in range(len(basis)):
        for j in range(len(basis)):
            d = (phi_iso(ge_bracket(basis[i], basis[j]))
                 - bracket(imgs[i], imgs[j]))
            if not d.is_zero():
                ok = False
    ok = ok and all(
        (phi_iso(ge_cartan(X)) - cartan_theta(Y)).is_zero()
        for X, Y in zip(basis, imgs))
    ok = ok and all(verify_triality_triple(*t) for t in standard_triples())
    rng = random.Random(102)
    for _ in range(100):
        u, v = _rand_oct(rng), _rand_oct(rng)
        if not verify_triality_triple(*prop_mult_triple(u, v)):
            ok = False
            break
    elapsed = time.perf_counter() - start
    _report(2, ok and elapsed < 5.0,
            "bracket-preserving bijection, Cartan intertwining, "
            "triality triples", f"{elapsed:.2f}s")


def test_criterion_03_cube_transposition():
    rng = random.Random(103)
    ok = True
    for _ in range(100):
        a, b, c = (rng.randint(-9, 9) for _ in range(3))
        wc = BhargavaCube.make(-c, (0, 0, b), (1, a, 1), 0)
        want = BhargavaCube.make(-c, (0, b, 0), (a, 1, 1), 0)
        if s3_act_cube((3, 1, 2), wc) != want:
            ok = False
            break
    _report(3, ok, "cube transposition on the distinguished family, "
            "100 random cases, exact")


def test_criterion_04_coset_count():
    def sigma1(n):
        return sum(d for d in range(1, n + 1) if n % d == 0)
    ok = all(len(hnf_left_cosets(n)) == sigma1(n) for n in range(1, 201))
    _report(4, ok, "coset representative count equals sigma_1(n), n <= 200")


def test_criterion_05_membership():
    start = time.perf_counter()
    ok = True
    for i in range(20):
        rng = random.Random(500 + i)
        ell = (2, 4, 16)[i % 3]
        F = _rand_siegel_table(rng, 4 * 36, ell)
        phi = theta_star_table(F, 36)
        if not maass_membership(phi):
            ok = False
            break
    elapsed = time.perf_counter() - start
    _report(5, ok and elapsed < 30.0,
            "lifted tables satisfy the membership conditions, 20 random "
            "tables", f"{elapsed:.2f}s")


def test_criterion_06_fourier_jacobi_round_trip():
    ok = True
    for i in range(5):
        rng = random.Random(600 + i)
        ell = (2, 4, 16)[i % 3]
        F = _rand_siegel_table(rng, 4 * 20, ell)
        phi = theta_star_table(F, 20)
        for t in reduced_triples(4 * 20):
            if fj_pair(t) in phi.entries:
                if fj_extract(phi, t) != F.a(t):
                    ok = False
                    break
    _report(6, ok, "Fourier-Jacobi extraction inverts the lift on every "
            "covered key, exact")


def test_criterion_07_dirichlet_factorization():
    start = time.perf_counter()
    rng = random.Random(700)
    lams = [breve(GramTriple(*t)) for t in
            ((1, 1, 1), (1, 0, 1), (1, 1, 2), (1, 0, 2), (1, 1, 3))]
    bound = 12
    maxdisc = max(gram(lam).disc() for lam in lams) * bound * bound
    F = _rand_siegel_table(rng, maxdisc, 4)
    ok = True
    for lam in lams:
        assert is_strongly_primitive(lam)
        extra = [pair_act(lam, g) for n in range(1, bound + 1)
                 for g in hnf_right_cosets(n)]
        phi = theta_star_table(F, 1, extra_pairs=extra)
        if not dirichlet_factor_check(phi, lam, bound):
            ok = False
            break
    elapsed = time.perf_counter() - start
    _report(7, ok, "Dirichlet series factorization to n = 12 for 5 strongly "
            "primitive index pairs, exact", f"{elapsed:.2f}s")


def test_criterion_08_classical_lift():
    ok = True
    for i in range(20):
        rng = random.Random(800 + i)
        ell = rng.choice((4, 6, 8, 10, 12))
        c = _rand_half_table(rng, 200, ell)
        F = classical_maass_lift(c, ell, 200)
        if not classical_maass_check(F):
            ok = False
            break
    _report(8, ok, "classical lift output satisfies the coefficient "
            "relation, 20 random tables, discriminant bound 200")


def test_criterion_09_bessel_sum_identity():
    start = time.perf_counter()
    worst = 0.0
    for v in range(-22, 23):
        for X in (0.1, 0.5, 1.0, 2.0, 5.0, 10.0):
            want = pi * exp(-X) * (1j ** v) / 2
            worst = max(worst, abs(s_v_sum(v, X) - want) / abs(want))
    elapsed = time.perf_counter() - start
    _report(9, worst < 1e-10 and elapsed < 1.0,
            "finite K-Bessel sum equals pi e^{-X} i^v / 2, |v| <= 22",
            f"max rel err {worst:.2e}, {elapsed:.2f}s")


def test_criterion_10_whittaker_integral():
    start = time.perf_counter()
    T = (0.2, -0.9, -1.1, -0.2)
    worst = 0.0
    for ell in (4, 6):
        for t in (0.7, 1.0, 1.5):
            for theta in (0.0, 0.6, 1.1):
                num, closed = archimedean_integral_check(
                    T, t, boost_u(theta), ell)
                for v in range(-ell, ell + 1):
                    err = (abs(num.component(v) - closed.component(v))
                           / abs(closed.component(v)))
                    worst = max(worst, err)
    elapsed = time.perf_counter() - start
    _report(10, worst < 1e-6 and elapsed < 60.0,
            "Whittaker integral quadrature matches the closed form on a "
            "3x3x2 grid", f"max rel err {worst:.2e}, {elapsed:.2f}s")


def test_criterion_11_beta_closed_form():
    worst = 0.0
    points = 0
    for T in (np.array([0.2, -0.9, -1.1, -0.2]),
              np.array([-0.5, -1.2, -0.8, 0.5])):
        for t in (0.5, 0.9, 1.4, 2.1, 3.0):
            for s in (-2.0, -0.5, 0.0, 0.8, 1.7):
                for theta in (0.0, 0.5, -0.9, 1.3):
                    u = boost_u(theta)
                    w = t * pairing22(T, u @ Y1).real
                    m = np.array([[1.0, s * t], [0.0, t]])
                    got = beta_fn(Y0, T, LeviPoint(m, u))
                    want = complex(-2.0 * s * t, 2.0 - w)
                    worst = max(worst, abs(got - want))
                    points += 1
    _report(11, worst < 1e-12 and points == 200,
            "beta closed form matches its definition on a 200-point grid",
            f"max abs err {worst:.2e}")


def _is_squarefree(n):
    n = abs(n)
    return all(n % (p * p) for p in range(2, isqrt(n) + 1))


def _random_isometry(rng, lat):
    n = lat.n
    g = LatticeIsometry.identity(lat)
    for _ in range(6):
        kind = rng.randrange(4)
        if kind == 0:
            A = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            i, j = rng.sample(range(n), 2)
            A[i][j] = rng.randint(-2, 2)
            g = levi_isometry(lat, A).compose(g)
        elif kind == 3:
            i, j = rng.sample(range(1, n + 1), 2)
            g = swap_isometry(lat, i, j).compose(g)
        else:
            B = [[0] * n for _ in range(n)]
            i, j = rng.sample(range(n), 2)
            k = rng.randint(-2, 2)
            B[i][j], B[j][i] = k, -k
            make = siegel_unipotent if kind == 1 else opposite_unipotent
            g = make(lat, B).compose(g)
    return g


def test_criterion_12_pair_reduction():
    rng = random.Random(112)
    lat = SplitLattice(4)
    bv = lat.basis_vector
    ok = True
    slowest = 0.0
    for _ in range(200):
        while True:
            a = rng.randint(1, 6)
            c = rng.randint(a, 6)
            b = rng.choice(range(1, 2 * isqrt(a * c), 2))
            if b * b < 4 * a * c and _is_squarefree(b * b - 4 * a * c):
                break
        T1 = tuple(a * p + q for p, q in zip(bv(1), bv(-1)))
        T2 = tuple(b * p + c * q + s
                   for p, q, s in zip(bv(1), bv(2), bv(-2)))
        g = _random_isometry(rng, lat)
        w1, w2 = g.apply(T1), g.apply(T2)
        start = time.perf_counter()
        h, t = reduce_pair(w1, w2)
        slowest = max(slowest, time.perf_counter() - start)
        if (t != GramTriple(a, b, c) or h.apply(w1) != T1
                or h.apply(w2) != T2):
            ok = False
            break
    _report(12, ok and slowest < 0.050,
            "pair reduction reaches the canonical form, 200 random "
            "instances", f"slowest {slowest * 1000:.1f}ms")


def test_criterion_13_positivity_oracle():
    start = time.perf_counter()
    rng = random.Random(113)

    def rand_mat():
        return mat2(*(rng.randint(-3, 3) for _ in range(4)))

    ok = True
    counts = {"positive": 0, "swapped": 0}
    done = 0
    while done < 50:
        lam = (rand_mat(), rand_mat())
        if not gram(lam).is_positive_definite():
            continue
        res = positivity_oracle(lam)
        if res not in counts:
            ok = False
            break
        counts[res] += 1
        done += 1
    indefinite = 0
    while ok and indefinite < 20:
        lam = (rand_mat(), rand_mat())
        if gram(lam).is_positive_definite():
            continue
        if positivity_oracle(lam) != "degenerate":
            ok = False
            break
        indefinite += 1
    ok = ok and counts["positive"] > 0 and counts["swapped"] > 0
    elapsed = time.perf_counter() - start
    _report(13, ok, "exactly one ordering positive for 50 definite pairs; "
            "20 indefinite pairs degenerate",
            f"{counts}, {elapsed:.1f}s")
