"""Split quadratic space, bivector Lie algebra, and the su(2) projection."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from octolift.quadspace import (DIM, E_PLUS, E_PRIME, F_PLUS, F_PRIME,
                                GZERO, H_PLUS, H_PRIME, GaussRational,
                                Sym2Element, basis_vector, biv_act,
                                biv_matrix, bracket, cartan_theta, gvec,
                                matrix_to_bivector, pairing, pr_K, qval,
                                sym2_power, trace_form, vadd, vscale, wedge)

coords = st.tuples(*([st.integers(-5, 5)] * DIM)).map(gvec)
bivectors = st.builds(wedge, coords, coords)


def _zero(X):
    return X.is_zero()


def test_gram_is_antidiagonal():
    for i in range(DIM):
        assert qval(basis_vector(i)) == GZERO
        for j in range(DIM):
            want = 1 if i + j == DIM - 1 else 0
            assert pairing(basis_vector(i), basis_vector(j)) == want


@given(coords, coords)
def test_polarization(u, w):
    assert pairing(u, w) == qval(vadd(u, w)) - qval(u) - qval(w)


@given(coords, coords)
def test_wedge_antisymmetric(u, w):
    assert _zero(wedge(u, w) + wedge(w, u))
    assert _zero(wedge(u, u))


def test_biv_act_basis_conventions():
    b = basis_vector
    # (b1 ^ b-1) acts as -1 on b1 ...
    assert biv_act(wedge(b(0), b(7)), b(0)) == vscale(-1, b(0))
    # ... and (b1 ^ b2) sends b-2 to -b1
    assert biv_act(wedge(b(0), b(1)), b(6)) == vscale(-1, b(0))


@given(bivectors, coords, coords)
@settings(max_examples=100)
def test_biv_act_infinitesimal_isometry(X, u, w):
    assert (pairing(biv_act(X, u), w) + pairing(u, biv_act(X, w))) == GZERO


@given(bivectors, bivectors, coords)
@settings(max_examples=100)
def test_bracket_is_commutator(X, Y, u):
    lhs = biv_act(bracket(X, Y), u)
    rhs = tuple(a - b for a, b in zip(biv_act(X, biv_act(Y, u)),
                                      biv_act(Y, biv_act(X, u))))
    assert lhs == rhs


@given(bivectors, bivectors, bivectors)
@settings(max_examples=50)
def test_jacobi_identity(X, Y, Z):
    total = (bracket(bracket(X, Y), Z) + bracket(bracket(Y, Z), X)
             + bracket(bracket(Z, X), Y))
    assert _zero(total)


def test_matrix_round_trip():
    rng = random.Random(5)
    for _ in range(20):
        u = gvec(tuple(rng.randint(-4, 4) for _ in range(DIM)))
        w = gvec(tuple(rng.randint(-4, 4) for _ in range(DIM)))
        X = wedge(u, w)
        assert _zero(matrix_to_bivector(biv_matrix(X)) - X)


def test_matrix_to_bivector_rejects_non_skew():
    A = [[GZERO] * DIM for _ in range(DIM)]
    A[0][0] = GaussRational.make(1)  # not skew w.r.t. the split form
    with pytest.raises(ValueError):
        matrix_to_bivector(A)


@given(bivectors, bivectors)
@settings(max_examples=50)
def test_cartan_theta_involutive_automorphism(X, Y):
    assert _zero(cartan_theta(cartan_theta(X)) - X)
    assert _zero(cartan_theta(bracket(X, Y))
                 - bracket(cartan_theta(X), cartan_theta(Y)))


def test_su2_triples():
    for e, h, f in ((E_PLUS, H_PLUS, F_PLUS), (E_PRIME, H_PRIME, F_PRIME)):
        assert _zero(bracket(f, e) - h)
        assert _zero(bracket(h, f) - f.scale(2))
        assert _zero(bracket(h, e) + e.scale(2))
    # the two su(2)'s commute
    for a in (E_PLUS, H_PLUS, F_PLUS):
        for b in (E_PRIME, H_PRIME, F_PRIME):
            assert _zero(bracket(a, b))


@given(bivectors, bivectors)
@settings(max_examples=50)
def test_trace_form_symmetric_invariant(X, Y):
    assert trace_form(X, Y) == trace_form(Y, X)


def test_pr_k_on_the_su2_itself():
    assert pr_K(E_PLUS) == Sym2Element.make(-1, 0, 0)
    assert pr_K(H_PLUS) == Sym2Element.make(0, 2, 0)
    assert pr_K(F_PLUS) == Sym2Element.make(0, 0, 1)
    # the commuting su(2) is trace-orthogonal, hence projects to zero
    for b in (E_PRIME, H_PRIME, F_PRIME):
        assert pr_K(b) == Sym2Element.make(0, 0, 0)


@given(bivectors, bivectors)
@settings(max_examples=50)
def test_pr_k_linear(X, Y):
    s = pr_K(X + Y)
    t = pr_K(X) + pr_K(Y)
    assert (s.c_xx, s.c_xy, s.c_yy) == (t.c_xx, t.c_xy, t.c_yy)


def test_sym2_power_against_direct_expansion():
    s = Sym2Element.make(Fraction(2), Fraction(-1, 2), Fraction(3))
    for ell in (1, 2, 3, 5):
        got = sym2_power(s, ell)
        # multiply out (c_yy + c_xy T + c_xx T^2)^ell with T tracking x/y
        poly = [Fraction(1)]
        base = [Fraction(3), Fraction(-1, 2), Fraction(2)]
        for _ in range(ell):
            new = [Fraction(0)] * (len(poly) + 2)
            for i, a in enumerate(poly):
                for j, b in enumerate(base):
                    new[i + j] += a * b
            poly = new
        assert len(got) == 2 * ell + 1
        assert list(got) == poly
