"""Integer 2x2 matrix machinery: Hermite-normal-form coset representatives
for GL2(Z)\\M2(Z), Smith-divisor primitivity tests, Gram matrices of index
pairs, canonical strongly primitive representatives, and divisor-coset
enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Tuple

Mat2Z = Tuple[Tuple[int, int], Tuple[int, int]]
IndexPair = Tuple[Mat2Z, Mat2Z]


def mat2(a, b, c, d) -> Mat2Z:
    return ((int(a), int(b)), (int(c), int(d)))


MAT2_ZERO = mat2(0, 0, 0, 0)
MAT2_ID = mat2(1, 0, 0, 1)


def mat2_det(m: Mat2Z) -> int:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def mat2_add(m: Mat2Z, n: Mat2Z) -> Mat2Z:
    return tuple(tuple(a + b for a, b in zip(rm, rn))
                 for rm, rn in zip(m, n))


def mat2_mul(m: Mat2Z, n: Mat2Z) -> Mat2Z:
    return tuple(tuple(sum(m[i][k] * n[k][j] for k in range(2))
                       for j in range(2)) for i in range(2))


def mat2_scale(c: int, m: Mat2Z) -> Mat2Z:
    return tuple(tuple(c * e for e in row) for row in m)


def mat2_transpose(m: Mat2Z) -> Mat2Z:
    return ((m[0][0], m[1][0]), (m[0][1], m[1][1]))


def mat2_adjugate(m: Mat2Z) -> Mat2Z:
    return ((m[1][1], -m[0][1]), (-m[1][0], m[0][0]))


def pair_bilinear(T1: Mat2Z, T2: Mat2Z) -> int:
    """(T1, T2) for the quadratic form q = det on M2:
    det(T1+T2) - det T1 - det T2."""
    return mat2_det(mat2_add(T1, T2)) - mat2_det(T1) - mat2_det(T2)


@dataclass(frozen=True)
class GramTriple:
    """The half-integral symmetric matrix [[a, b/2], [b/2, c]]."""
    a: int
    b: int
    c: int

    @staticmethod
    def make(a, b, c) -> "GramTriple":
        return GramTriple(int(a), int(b), int(c))

    def matrix(self):
        h = Fraction(self.b, 2)
        return ((Fraction(self.a), h), (h, Fraction(self.c)))

    def disc(self) -> int:
        """4ac - b^2 (positive for positive definite triples)."""
        return 4 * self.a * self.c - self.b * self.b

    def is_positive_definite(self) -> bool:
        return self.a > 0 and self.disc() > 0


def reduce_gram(t: GramTriple) -> GramTriple:
    """GL2(Z)-reduction of a positive semidefinite triple to the canonical
    representative with 0 <= b <= a <= c.  Raises for indefinite or negative
    input."""
    a, b, c = t.a, t.b, t.c
    if 4 * a * c - b * b < 0 or a < 0 or c < 0:
        raise ValueError("reduce_gram needs a positive semidefinite triple")
    while True:
        if a > c:
            a, c, b = c, a, -b
        if a == 0:
            return GramTriple(0, 0, c)   # disc >= 0 forces b == 0
        r = b % (2 * a)
        if r > a:
            r -= 2 * a
        k = (r - b) // (2 * a)
        c = a * k * k + b * k + c
        b = r
        if a <= c:
            return GramTriple(a, abs(b), c)


def gram(lam: IndexPair) -> GramTriple:
    """S(lambda) = 1/2 [[(T1,T1), (T1,T2)], [(T1,T2), (T2,T2)]] recorded as
    the triple (det T1, (T1,T2), det T2)."""
    T1, T2 = lam
    return GramTriple(mat2_det(T1), pair_bilinear(T1, T2), mat2_det(T2))


def hnf_left_cosets(n: int) -> List[Mat2Z]:
    """Representatives [[a, b], [0, d]], ad = n, a,d > 0, 0 <= b < d of
    GL2(Z)\\{r in M2(Z): |det r| = n}.  (Negative determinants are absorbed
    by diag(1,-1) on the left.)"""
    if n < 1:
        raise ValueError("n must be a positive integer")
    out = []
    for a in range(1, n + 1):
        if n % a:
            continue
        d = n // a
        for b in range(d):
            out.append(mat2(a, b, 0, d))
    return out


def hnf_right_cosets(n: int) -> List[Mat2Z]:
    """Representatives of {r in M2(Z): |det r| = n}/GL2(Z): the transposes
    of the left-coset representatives."""
    return [mat2_transpose(m) for m in hnf_left_cosets(n)]


def _smith_divisors_4x2(rows) -> Tuple[int, int]:
    """Elementary divisors (d1, d1*d2 hidden) of a 4x2 integer matrix:
    returns (d1, d2) with d1 | d2; d1 = gcd of entries, d1*d2 = gcd of all
    2x2 minors."""
    g1 = 0
    for row in rows:
        for e in row:
            g1 = gcd(g1, e)
    g2 = 0
    for i in range(4):
        for j in range(i + 1, 4):
            minor = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0]
            g2 = gcd(g2, minor)
    if g1 == 0:
        return (0, 0)
    if g2 == 0:
        return (g1, 0)
    return (g1, g2 // g1)


def _stack(lam: IndexPair):
    """The 4x2 matrix whose columns are the vectorized T1 and T2.  The pair
    action lam . g corresponds to right multiplication of this matrix by g,
    which is what makes its Smith divisors detect divisibility."""
    T1, T2 = lam
    return tuple((T1[i][j], T2[i][j]) for i in range(2) for j in range(2))


def smith_divisors(lam: IndexPair) -> Tuple[int, int]:
    """Smith elementary divisors (d1, d2), d1 | d2, of the 4x2 matrix with
    columns vec(T1), vec(T2) (d2 = 0 if rank < 2)."""
    return _smith_divisors_4x2(_stack(lam))


def is_strongly_primitive(lam: IndexPair) -> bool:
    """True iff the only r in GL2(Q) cap M2(Z) with lam r^{-1} still integral
    are units: equivalently both Smith divisors of the 4x2 matrix with
    columns vec(T1), vec(T2) are 1."""
    if lam[0] == MAT2_ZERO and lam[1] == MAT2_ZERO:
        raise ValueError("strong primitivity is undefined for the zero pair")
    return smith_divisors(lam) == (1, 1)


def breve(t: GramTriple) -> IndexPair:
    """A canonical strongly primitive pair with gram equal to t exactly:
    T1 = [[1,0],[b,a]], T2 = [[0,-1],[c,0]]."""
    lam = (mat2(1, 0, t.b, t.a), mat2(0, -1, t.c, 0))
    assert gram(lam) == t
    return lam


def pair_act(lam: IndexPair, g: Mat2Z) -> IndexPair:
    """lam . g: the pair (T1, T2) viewed as a row vector of matrices, so
    lam . g = (g11 T1 + g21 T2, g12 T1 + g22 T2).  Satisfies
    gram(lam . g) = g^t gram(lam) g."""
    T1, T2 = lam
    return (mat2_add(mat2_scale(g[0][0], T1), mat2_scale(g[1][0], T2)),
            mat2_add(mat2_scale(g[0][1], T1), mat2_scale(g[1][1], T2)))


def _apply_rinv(lam: IndexPair, r: Mat2Z):
    """lam . r^{-1} if integral, else None."""
    n = mat2_det(r)
    adj = mat2_adjugate(r)
    out = pair_act(lam, adj)
    if any(e % n for T in out for row in T for e in row):
        return None
    return tuple(tuple(tuple(e // n for e in row) for row in T) for T in out)


def divisor_cosets(lam: IndexPair) -> List[Tuple[Mat2Z, IndexPair]]:
    """All pairs (r, lam.r^{-1}) where r runs over HNF representatives of the
    left GL2(Z)-cosets of {r in GL2(Q) cap M2(Z): lam r^{-1} integral}.

    Every admissible r is integral with |det r| dividing d2^2, where d2 is
    the larger Smith divisor of the vec-column matrix, so the enumeration
    over HNF representatives of those determinants is complete."""
    if lam[0] == MAT2_ZERO and lam[1] == MAT2_ZERO:
        raise ValueError("divisor cosets are undefined for the zero pair")
    d1, d2 = smith_divisors(lam)
    if d2 == 0:
        # rank-1 stacked matrix: r can be scaled arbitrarily along the kernel
        # direction without losing integrality.
        raise ValueError("divisor cosets are infinite for rank-deficient "
                         "pairs")
    bound = d2 * d2
    out = []
    for n in range(1, bound + 1):
        if bound % n:
            continue
        for r in hnf_left_cosets(n):
            mu = _apply_rinv(lam, r)
            if mu is not None:
                out.append((r, mu))
    return out
