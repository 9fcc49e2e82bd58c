"""The exceptional-algebra isomorphism, triality triples, S3 action, cubes."""

import random
from itertools import permutations

import pytest

from octolift.octonion import Octonion
from octolift.quadspace import bracket, cartan_theta
from octolift.triality import (BhargavaCube, cube_pairing, cube_to_pair,
                               ge_basis, ge_bracket, ge_cartan, pair_to_cube,
                               phi_inv, phi_iso, prop_mult_triple,
                               s3_act_cube, s3_act_triple, standard_triples,
                               verify_triality_triple)

PERMS = list(permutations((1, 2, 3)))


def _rand_oct(rng):
    return Octonion.make(rng.randint(-4, 4),
                         tuple(rng.randint(-4, 4) for _ in range(3)),
                         tuple(rng.randint(-4, 4) for _ in range(3)),
                         rng.randint(-4, 4))


def test_phi_bijective_on_basis():
    for X in ge_basis():
        assert phi_inv(phi_iso(X)) == X


def test_phi_preserves_bracket_sample():
    basis = ge_basis()
    imgs = [phi_iso(X) for X in basis]
    rng = random.Random(1)
    for _ in range(60):
        i, j = rng.randrange(len(basis)), rng.randrange(len(basis))
        got = phi_iso(ge_bracket(basis[i], basis[j]))
        assert (got - bracket(imgs[i], imgs[j])).is_zero()


def test_phi_intertwines_cartan():
    for X in ge_basis():
        lhs = phi_iso(ge_cartan(X))
        assert (lhs - cartan_theta(phi_iso(X))).is_zero()


def test_standard_triples_verify():
    triples = standard_triples()
    assert len(triples) == 6
    for triple in triples:
        assert verify_triality_triple(*triple)


def test_standard_triple_fails_when_perturbed():
    X1, X2, X3 = standard_triples()[0]
    assert not verify_triality_triple(X1.scale(2), X2, X3)


def test_verify_handles_non_integer_scalars():
    # joint rescaling preserves the defining identity; half-integer entries
    # exercise the general exact evaluation path
    from fractions import Fraction
    half = Fraction(1, 2)
    X1, X2, X3 = standard_triples()[0]
    assert verify_triality_triple(X1.scale(half), X2.scale(half),
                                  X3.scale(half))
    assert not verify_triality_triple(X1.scale(half), X2, X3)


def test_multiplication_triples_random():
    rng = random.Random(2)
    for _ in range(25):
        u, v = _rand_oct(rng), _rand_oct(rng)
        assert verify_triality_triple(*prop_mult_triple(u, v))


def test_triality_triples_cyclic():
    # the defining identity is invariant under cyclic rotation of the triple
    for X1, X2, X3 in standard_triples():
        assert verify_triality_triple(X2, X3, X1)
        assert verify_triality_triple(X3, X1, X2)


def test_s3_action_preserves_triality_triples():
    for p in PERMS:
        for triple in standard_triples()[:2]:
            assert verify_triality_triple(*s3_act_triple(p, triple))


def test_cube_pair_round_trip():
    rng = random.Random(3)
    for _ in range(50):
        wc = BhargavaCube.make(rng.randint(-5, 5),
                               tuple(rng.randint(-5, 5) for _ in range(3)),
                               tuple(rng.randint(-5, 5) for _ in range(3)),
                               rng.randint(-5, 5))
        assert pair_to_cube(*cube_to_pair(wc)) == wc
        T1, T2 = cube_to_pair(wc)
        assert cube_to_pair(pair_to_cube(T1, T2)) == (T1, T2)


def test_s3_act_cube_is_a_group_action():
    rng = random.Random(4)
    wc = BhargavaCube.make(rng.randint(-5, 5),
                           tuple(rng.randint(-5, 5) for _ in range(3)),
                           tuple(rng.randint(-5, 5) for _ in range(3)),
                           rng.randint(-5, 5))
    assert s3_act_cube((1, 2, 3), wc) == wc
    for p in PERMS:
        for q in PERMS:
            pq = tuple(p[q[i] - 1] for i in range(3))  # composition p o q
            assert (s3_act_cube(p, s3_act_cube(q, wc))
                    == s3_act_cube(pq, wc))


def test_cube_pairing_antisymmetric_and_s3_invariant():
    rng = random.Random(6)
    mk = lambda: BhargavaCube.make(
        rng.randint(-5, 5), tuple(rng.randint(-5, 5) for _ in range(3)),
        tuple(rng.randint(-5, 5) for _ in range(3)), rng.randint(-5, 5))
    for _ in range(20):
        w1, w2 = mk(), mk()
        assert cube_pairing(w1, w2) == -cube_pairing(w2, w1)
        for p in PERMS:
            assert (cube_pairing(s3_act_cube(p, w1), s3_act_cube(p, w2))
                    == cube_pairing(w1, w2))


def test_cube_transposition_on_distinguished_family():
    rng = random.Random(7)
    for _ in range(30):
        a, b, c = (rng.randint(-9, 9) for _ in range(3))
        wc = BhargavaCube.make(-c, (0, 0, b), (1, a, 1), 0)
        want = BhargavaCube.make(-c, (0, b, 0), (a, 1, 1), 0)
        assert s3_act_cube((3, 1, 2), wc) == want


def test_bad_permutation_rejected():
    wc = BhargavaCube.make(1, (0, 0, 0), (0, 0, 0), 1)
    with pytest.raises(ValueError):
        s3_act_cube((1, 1, 2), wc)
