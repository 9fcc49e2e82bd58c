"""The split 8-dimensional quadratic space V in the b-basis, the Lie algebra
wedge^2 V acting on V, its bracket and Cartan involution, and the exact
projection pr_K onto the distinguished su(2).

Scalars are Gaussian rationals.  Coordinates are stored in the order
(b1, b2, b3, b4, b-4, b-3, b-2, b-1); the Gram matrix is the anti-diagonal
identity, i.e. (index i, index 7-i) pair to 1.

The vectors u1, u2, v1, v2 of the compact su(2) construction each carry a
factor 1/sqrt(2); every element built from them here (e+, h+, f+, ...) only
uses products of pairs of such vectors, so all sqrt(2)'s are multiplied out
and scalars stay Gaussian rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Dict, Sequence, Tuple


@dataclass(frozen=True)
class GaussRational:
    re: Fraction
    im: Fraction

    @staticmethod
    def make(re=0, im=0) -> "GaussRational":
        return GaussRational(Fraction(re), Fraction(im))

    def __add__(self, other):
        other = _coerce(other)
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        return GaussRational(self.re * other.re - self.im * other.im,
                             self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussRational")
        return self * GaussRational(other.re / n, -other.im / n)

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def conj(self) -> "GaussRational":
        return GaussRational(self.re, -self.im)

    def __complex__(self):
        return complex(self.re, self.im)

    def __repr__(self):
        return f"GaussRational({self.re}, {self.im})"


def _coerce(x) -> GaussRational:
    if isinstance(x, GaussRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussRational(Fraction(x), Fraction(0))
    raise TypeError(f"cannot coerce {x!r} to GaussRational")


GZERO = GaussRational.make(0)
GONE = GaussRational.make(1)
GI = GaussRational.make(0, 1)

DIM = 8
# b-basis labels in storage order.
B_LABELS = ("b1", "b2", "b3", "b4", "b-4", "b-3", "b-2", "b-1")
# wedge basis index pairs i<j, fixed total order.
PAIR_INDEX: Dict[Tuple[int, int], int] = {
    p: k for k, p in enumerate(combinations(range(DIM), 2))
}
PAIRS = tuple(combinations(range(DIM), 2))


def gvec(coords: Sequence) -> Tuple[GaussRational, ...]:
    """Coerce an 8-sequence to a Vector8 (tuple of GaussRationals)."""
    if len(coords) != DIM:
        raise ValueError("Vector8 needs 8 coordinates")
    return tuple(_coerce(c) for c in coords)


def basis_vector(i: int) -> Tuple[GaussRational, ...]:
    return tuple(GONE if j == i else GZERO for j in range(DIM))


def vadd(u, w):
    return tuple(a + b for a, b in zip(u, w))


def vsub(u, w):
    return tuple(a - b for a, b in zip(u, w))


def vscale(c, u):
    c = _coerce(c)
    return tuple(c * a for a in u)


def pairing(u, w) -> GaussRational:
    """Polarized bilinear form: (b_i, b_{-j}) = delta_ij."""
    return sum((_coerce(a) * _coerce(w[7 - i]) for i, a in enumerate(u)),
               GZERO)


def qval(u) -> GaussRational:
    """q(u) = sum over the four hyperbolic pairs."""
    return sum((_coerce(u[i]) * _coerce(u[7 - i]) for i in range(4)), GZERO)


@dataclass(frozen=True)
class Bivector:
    """Element of wedge^2 V: 28 Gaussian-rational coefficients on b_i ^ b_j,
    i < j in storage order."""
    coeffs: Tuple[GaussRational, ...]

    @staticmethod
    def zero() -> "Bivector":
        return Bivector(tuple(GZERO for _ in PAIRS))

    @staticmethod
    def from_dict(d: Dict[Tuple[int, int], object]) -> "Bivector":
        c = [GZERO] * len(PAIRS)
        for (i, j), val in d.items():
            val = _coerce(val)
            if i == j:
                continue
            if i > j:
                i, j, val = j, i, -val
            c[PAIR_INDEX[(i, j)]] = c[PAIR_INDEX[(i, j)]] + val
        return Bivector(tuple(c))

    def __add__(self, other: "Bivector") -> "Bivector":
        return Bivector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Bivector") -> "Bivector":
        return Bivector(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "Bivector":
        return Bivector(tuple(-a for a in self.coeffs))

    def scale(self, c) -> "Bivector":
        c = _coerce(c)
        return Bivector(tuple(c * a for a in self.coeffs))

    def is_zero(self) -> bool:
        return not any(self.coeffs)


def wedge(u, w) -> Bivector:
    """u ^ w for Vector8's u, w."""
    d = {}
    for i in range(DIM):
        if not _coerce(u[i]):
            continue
        for j in range(DIM):
            if i == j or not _coerce(w[j]):
                continue
            d[(i, j)] = d.get((i, j), GZERO) + _coerce(u[i]) * _coerce(w[j])
    return Bivector.from_dict(d)


def biv_act(X: Bivector, w) -> Tuple[GaussRational, ...]:
    """(u ^ v) . x = (u, x) v - (v, x) u, extended bilinearly.

    For a basis bivector b_i ^ b_j this sends x to (b_i,x) b_j - (b_j,x) b_i,
    i.e. picks up the coordinates x_{7-i} and x_{7-j}.  (This is the sign
    that makes the 28 e/eps wedge images of the cubic-structure generators a
    Lie algebra homomorphism; the opposite sign would make it an
    anti-homomorphism throughout.)
    """
    out = [GZERO] * DIM
    for k, (i, j) in enumerate(PAIRS):
        c = X.coeffs[k]
        if not c:
            continue
        out[j] = out[j] + c * _coerce(w[7 - i])
        out[i] = out[i] - c * _coerce(w[7 - j])
    return tuple(out)


def biv_sparse(X: Bivector) -> Dict[Tuple[int, int], GaussRational]:
    """Sparse {(row, col): entry} action matrix of biv_act(X, .).

    The basis bivector b_i ^ b_j contributes +c at (j, 7-i) and -c at
    (i, 7-j)."""
    A: Dict[Tuple[int, int], GaussRational] = {}
    for k, (i, j) in enumerate(PAIRS):
        c = X.coeffs[k]
        if not c:
            continue
        A[(j, 7 - i)] = A.get((j, 7 - i), GZERO) + c
        A[(i, 7 - j)] = A.get((i, 7 - j), GZERO) - c
    return {k: v for k, v in A.items() if v}


def biv_matrix(X: Bivector):
    """Dense 8x8 matrix of biv_act(X, .)."""
    A = biv_sparse(X)
    return [[A.get((r, c), GZERO) for c in range(DIM)] for r in range(DIM)]


def _sparse_to_bivector(A: Dict[Tuple[int, int], GaussRational]) -> Bivector:
    d = {}
    for (i, j) in PAIRS:
        v = A.get((j, 7 - i))
        if v is not None:
            d[(i, j)] = v
    X = Bivector.from_dict(d)
    if biv_sparse(X) != {k: v for k, v in A.items() if v}:
        raise ValueError("matrix is not skew with respect to the form")
    return X


def matrix_to_bivector(A) -> Bivector:
    """Inverse of biv_matrix.  Raises if A is not skew w.r.t. the form
    (i.e. not in the image of wedge^2 V)."""
    sp = {}
    for r in range(DIM):
        for c in range(DIM):
            v = _coerce(A[r][c])
            if v:
                sp[(r, c)] = v
    return _sparse_to_bivector(sp)


def bracket(X: Bivector, Y: Bivector) -> Bivector:
    """Lie bracket: the unique bivector acting as the commutator
    [act(X), act(Y)] in the 8-dim representation."""
    AX, AY = biv_sparse(X), biv_sparse(Y)
    C: Dict[Tuple[int, int], GaussRational] = {}
    for (r, k), a in AX.items():
        for (k2, c), b in AY.items():
            if k == k2:
                C[(r, c)] = C.get((r, c), GZERO) + a * b
    for (r, k), a in AY.items():
        for (k2, c), b in AX.items():
            if k == k2:
                C[(r, c)] = C.get((r, c), GZERO) - a * b
    return _sparse_to_bivector({k: v for k, v in C.items() if v})


def cartan_theta(X: Bivector) -> Bivector:
    """Cartan involution induced by iota: b_j <-> b_{-j} on all eight
    indices (storage index k <-> 7-k)."""
    d = {}
    for k, (i, j) in enumerate(PAIRS):
        c = X.coeffs[k]
        if not c:
            continue
        d[(7 - i, 7 - j)] = d.get((7 - i, 7 - j), GZERO) + c
    return Bivector.from_dict(d)


# --- the distinguished su(2) -------------------------------------------------
# u1 = (b1 + b-1)/sqrt2, u2 = (b2 + b-2)/sqrt2,
# v1 = (b3 + b-3)/sqrt2, v2 = (b4 + b-4)/sqrt2.
# sqrt2's are cleared pairwise: each generator below is a sum of wedges of two
# such vectors, contributing a global 1/2.
_U1 = gvec((1, 0, 0, 0, 0, 0, 0, 1))
_U2 = gvec((0, 1, 0, 0, 0, 0, 1, 0))
_V1 = gvec((0, 0, 1, 0, 0, 1, 0, 0))
_V2 = gvec((0, 0, 0, 1, 1, 0, 0, 0))


def _su2_triple(v2sign: int):
    v2 = _V2 if v2sign > 0 else vscale(-1, _V2)
    half = GaussRational.make(Fraction(1, 2))
    quarter = GaussRational.make(Fraction(1, 4))
    a = vsub(_U1, vscale(GI, _U2))         # u1 - i u2 (times sqrt2)
    b = vsub(_V1, vscale(GI, v2))          # v1 - i v2 (times sqrt2)
    ac = vadd(_U1, vscale(GI, _U2))
    bc = vadd(_V1, vscale(GI, v2))
    e = wedge(a, b).scale(quarter)         # 1/2 (u1-iu2)^(v1-iv2)
    f = wedge(ac, bc).scale(quarter).scale(-1)
    h = (wedge(_U1, _U2) + wedge(_V1, v2)).scale(half).scale(GI)
    return e, h, f


E_PLUS, H_PLUS, F_PLUS = _su2_triple(+1)
E_PRIME, H_PRIME, F_PRIME = _su2_triple(-1)


def trace_form(X: Bivector, Y: Bivector) -> GaussRational:
    """B(X, Y) = tr(act(X) act(Y)) in the 8-dim representation."""
    AX, AY = biv_sparse(X), biv_sparse(Y)
    return sum((a * AY[(k, r)] for (r, k), a in AX.items() if (k, r) in AY),
               GZERO)


@dataclass(frozen=True)
class Sym2Element:
    """Element c_xx x^2 + c_xy xy + c_yy y^2 of Sym^2(V2)."""
    c_xx: GaussRational
    c_xy: GaussRational
    c_yy: GaussRational

    @staticmethod
    def make(c_xx=0, c_xy=0, c_yy=0) -> "Sym2Element":
        return Sym2Element(_coerce(c_xx), _coerce(c_xy), _coerce(c_yy))

    def __add__(self, other):
        return Sym2Element(self.c_xx + other.c_xx, self.c_xy + other.c_xy,
                           self.c_yy + other.c_yy)

    def __sub__(self, other):
        return Sym2Element(self.c_xx - other.c_xx, self.c_xy - other.c_xy,
                           self.c_yy - other.c_yy)


# Gram matrix of the trace form on span{e+, h+, f+}, precomputed lazily.
_SU2_BASIS = (E_PLUS, H_PLUS, F_PLUS)
_SU2_GRAM = None


def _su2_gram():
    global _SU2_GRAM
    if _SU2_GRAM is None:
        _SU2_GRAM = [[trace_form(a, b) for b in _SU2_BASIS]
                     for a in _SU2_BASIS]
    return _SU2_GRAM


def _solve3(G, rhs):
    """Solve the 3x3 Gaussian-rational system G c = rhs by Cramer's rule."""
    def det3(M):
        return (M[0][0] * (M[1][1] * M[2][2] - M[1][2] * M[2][1])
                - M[0][1] * (M[1][0] * M[2][2] - M[1][2] * M[2][0])
                + M[0][2] * (M[1][0] * M[2][1] - M[1][1] * M[2][0]))
    D = det3(G)
    out = []
    for k in range(3):
        Mk = [[rhs[r] if c == k else G[r][c] for c in range(3)]
              for r in range(3)]
        out.append(det3(Mk) / D)
    return out


def pr_K(X: Bivector) -> Sym2Element:
    """Orthogonal projection (w.r.t. the trace form) onto span{e+,h+,f+},
    written in the x^2, xy, y^2 coordinates via e+ = -x^2, h+ = 2xy,
    f+ = y^2."""
    rhs = [trace_form(X, b) for b in _SU2_BASIS]
    ce, ch, cf = _solve3(_su2_gram(), rhs)
    # e+ -> -x^2, h+ -> 2xy, f+ -> y^2
    return Sym2Element(-ce, ch + ch, cf)


def sym2_power(s: Sym2Element, ell: int):
    """(c_xx x^2 + c_xy xy + c_yy y^2)^ell expanded as the 2*ell+1
    coefficients of x^(ell+v) y^(ell-v), v = -ell..ell (listed v ascending)."""
    if ell < 1:
        raise ValueError("ell must be >= 1")
    # poly[k] = coefficient of x^k y^(2m-k) after m factors
    poly = [s.c_yy, s.c_xy, s.c_xx]
    for _ in range(ell - 1):
        new = [GZERO] * (len(poly) + 2)
        for k, c in enumerate(poly):
            if not c:
                continue
            new[k] = new[k] + c * s.c_yy
            new[k + 1] = new[k + 1] + c * s.c_xy
            new[k + 2] = new[k + 2] + c * s.c_xx
        poly = new
    return tuple(poly)
