"""Constructive orbit reduction on the split integral lattice Z^{2n}.

Vectors are integer tuples of length 2n in the coordinate order
(b_1, ..., b_n, b_{-n}, ..., b_{-1}), so the bilinear pairing is the
antidiagonal form (u, w) = sum_k u[k] w[2n-1-k] and the quadratic form is
q(v) = sum_i x_i y_i where x_i is the b_i coefficient and y_i the b_{-i}
coefficient.  For n = 4 this matches the eight-dimensional coordinate order
used by quadspace.to_vector8.

Everything is exact integer arithmetic.  Each reduction returns a
LatticeIsometry whose constructor re-checks g^t J g = J and det g = +1, and
each public reduction re-verifies its own postcondition before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Sequence, Tuple

from .coset import GramTriple

VectorZ = Tuple[int, ...]


def _xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, p, q) with p*a + q*b = g = gcd(a, b) >= 0."""
    old_r, r = a, b
    old_p, p = 1, 0
    old_q, q = 0, 1
    while r:
        quo = old_r // r
        old_r, r = r, old_r - quo * r
        old_p, p = p, old_p - quo * p
        old_q, q = q, old_q - quo * q
    if old_r < 0:
        old_r, old_p, old_q = -old_r, -old_p, -old_q
    return old_r, old_p, old_q


def _content(v: Sequence[int]) -> int:
    g = 0
    for e in v:
        g = gcd(g, e)
    return g


@dataclass(frozen=True)
class SplitLattice:
    """The split (hyperbolic) lattice of rank 2n, n >= 3."""
    n: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("half-rank must be at least 3")

    @property
    def rank(self) -> int:
        return 2 * self.n

    def gram_matrix(self) -> Tuple[Tuple[int, ...], ...]:
        r = self.rank
        return tuple(tuple(1 if i + j == r - 1 else 0 for j in range(r))
                     for i in range(r))

    def basis_vector(self, i: int) -> VectorZ:
        """b_i for 1 <= i <= n, b_i for -n <= i <= -1."""
        r = self.rank
        if 1 <= i <= self.n:
            k = i - 1
        elif -self.n <= i <= -1:
            k = r + i          # b_{-j} sits at index 2n - j
        else:
            raise ValueError("basis index out of range")
        return tuple(1 if t == k else 0 for t in range(r))

    def pairing(self, u: Sequence[int], w: Sequence[int]) -> int:
        r = self.rank
        return sum(u[k] * w[r - 1 - k] for k in range(r))

    def qval(self, v: Sequence[int]) -> int:
        r = self.rank
        return sum(v[i] * v[r - 1 - i] for i in range(self.n))

    def split_xy(self, v: Sequence[int]) -> Tuple[List[int], List[int]]:
        """(x, y) in natural index order: x[i-1] = coeff of b_i,
        y[i-1] = coeff of b_{-i}."""
        r = self.rank
        x = [v[i] for i in range(self.n)]
        y = [v[r - 1 - i] for i in range(self.n)]
        return x, y

    def join_xy(self, x: Sequence[int], y: Sequence[int]) -> VectorZ:
        return tuple(list(x) + [y[self.n - 1 - t] for t in range(self.n)])


def _det_int(m) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    a = [list(row) for row in m]
    r = len(a)
    sign = 1
    prev = 1
    for k in range(r - 1):
        if a[k][k] == 0:
            for i in range(k + 1, r):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, r):
            for j in range(k + 1, r):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[r - 1][r - 1]


def _inv_transpose_int(m) -> Tuple[Tuple[int, ...], ...]:
    """(M^{-1})^t for a unimodular integer matrix, exact."""
    r = len(m)
    a = [[Fraction(m[i][j]) for j in range(r)] +
         [Fraction(1 if j == i else 0) for j in range(r)] for i in range(r)]
    for col in range(r):
        piv = next(i for i in range(col, r) if a[i][col])
        a[col], a[piv] = a[piv], a[col]
        f = a[col][col]
        a[col] = [e / f for e in a[col]]
        for i in range(r):
            if i != col and a[i][col]:
                g = a[i][col]
                a[i] = [e - g * p for e, p in zip(a[i], a[col])]
    inv = [[a[i][r + j] for j in range(r)] for i in range(r)]
    out = tuple(tuple(int(inv[j][i]) for j in range(r)) for i in range(r))
    for i in range(r):
        for j in range(r):
            if inv[j][i] != out[i][j]:
                raise ValueError("matrix is not unimodular")
    return out


class LatticeIsometry:
    """An element of SO(L)(Z): integer matrix with g^t J g = J, det g = +1."""

    def __init__(self, lattice: SplitLattice, matrix):
        self.lattice = lattice
        self.matrix = tuple(tuple(int(e) for e in row) for row in matrix)
        r = lattice.rank
        if len(self.matrix) != r or any(len(row) != r for row in self.matrix):
            raise ValueError("matrix size does not match the lattice rank")
        J = lattice.gram_matrix()
        for i in range(r):
            for j in range(r):
                s = sum(self.matrix[k][i] * self.matrix[r - 1 - k][j]
                        for k in range(r))
                if s != J[i][j]:
                    raise ValueError("matrix does not preserve the form")
        if _det_int(self.matrix) != 1:
            raise ValueError("determinant must be +1")

    @staticmethod
    def identity(lattice: SplitLattice) -> "LatticeIsometry":
        r = lattice.rank
        return LatticeIsometry(
            lattice, tuple(tuple(1 if i == j else 0 for j in range(r))
                           for i in range(r)))

    def apply(self, v: Sequence[int]) -> VectorZ:
        return tuple(sum(row[j] * v[j] for j in range(len(v)))
                     for row in self.matrix)

    def compose(self, other: "LatticeIsometry") -> "LatticeIsometry":
        """self o other (apply other first)."""
        r = self.lattice.rank
        m = tuple(tuple(sum(self.matrix[i][k] * other.matrix[k][j]
                            for k in range(r)) for j in range(r))
                  for i in range(r))
        return LatticeIsometry(self.lattice, m)

    def inverse(self) -> "LatticeIsometry":
        # g^{-1} = J^{-1} g^t J; with the antidiagonal form this is the
        # antitranspose m[i][j] -> m[r-1-j][r-1-i].
        r = self.lattice.rank
        m = tuple(tuple(self.matrix[r - 1 - j][r - 1 - i] for j in range(r))
                  for i in range(r))
        return LatticeIsometry(self.lattice, m)

    def __eq__(self, other):
        return (isinstance(other, LatticeIsometry)
                and self.lattice == other.lattice
                and self.matrix == other.matrix)

    def __hash__(self):
        return hash((self.lattice, self.matrix))


def _from_xy_action(lattice: SplitLattice, act) -> LatticeIsometry:
    """Build an isometry from a map (x, y) -> (x', y') in natural order."""
    r = lattice.rank
    cols = []
    for k in range(r):
        e = [1 if t == k else 0 for t in range(r)]
        x, y = lattice.split_xy(e)
        nx, ny = act(x, y)
        cols.append(lattice.join_xy(nx, ny))
    m = tuple(tuple(cols[j][i] for j in range(r)) for i in range(r))
    return LatticeIsometry(lattice, m)


def levi_isometry(lattice: SplitLattice, A) -> LatticeIsometry:
    """g_A in the Levi of the Siegel parabolic: x -> A x, y -> (A^{-1})^t y.
    A may have determinant -1; det g_A = +1 regardless."""
    n = lattice.n
    At_inv = _inv_transpose_int(A)

    def act(x, y):
        nx = [sum(A[i][j] * x[j] for j in range(n)) for i in range(n)]
        ny = [sum(At_inv[i][j] * y[j] for j in range(n)) for i in range(n)]
        return nx, ny

    return _from_xy_action(lattice, act)


def levi_dual(lattice: SplitLattice, M) -> LatticeIsometry:
    """The Levi element acting on the y-block by M (so A = (M^{-1})^t)."""
    return levi_isometry(lattice, _inv_transpose_int(M))


def siegel_unipotent(lattice: SplitLattice, B) -> LatticeIsometry:
    """u_B: x -> x + B y, y -> y, with B skew-symmetric."""
    n = lattice.n
    for i in range(n):
        for j in range(n):
            if B[i][j] != -B[j][i]:
                raise ValueError("B must be skew-symmetric")

    def act(x, y):
        nx = [x[i] + sum(B[i][j] * y[j] for j in range(n)) for i in range(n)]
        return nx, list(y)

    return _from_xy_action(lattice, act)


def opposite_unipotent(lattice: SplitLattice, C) -> LatticeIsometry:
    """u_C in the radical opposite the Siegel parabolic:
    x -> x, y -> y + C x, with C skew-symmetric."""
    n = lattice.n
    for i in range(n):
        for j in range(n):
            if C[i][j] != -C[j][i]:
                raise ValueError("C must be skew-symmetric")

    def act(x, y):
        ny = [y[i] + sum(C[i][j] * x[j] for j in range(n)) for i in range(n)]
        return list(x), ny

    return _from_xy_action(lattice, act)


def swap_isometry(lattice: SplitLattice, i: int, j: int) -> LatticeIsometry:
    """Exchange b_i <-> b_{-i} and b_j <-> b_{-j} (i != j); det = +1."""
    if i == j:
        raise ValueError("need two distinct indices to keep det = +1")

    def act(x, y):
        nx, ny = list(x), list(y)
        for k in (i, j):
            nx[k - 1], ny[k - 1] = ny[k - 1], nx[k - 1]
        return nx, ny

    return _from_xy_action(lattice, act)


def embed_isometry(lattice: SplitLattice, sub: LatticeIsometry,
                   offset: int) -> LatticeIsometry:
    """Extend an isometry of span(b_{k+1},...,b_{-(k+1)}) (k = offset) by the
    identity on b_1,...,b_k, b_{-k},...,b_{-1}.  In the storage order the
    sublattice occupies the contiguous middle slice."""
    r = lattice.rank
    rs = sub.lattice.rank
    if rs + 2 * offset != r:
        raise ValueError("sublattice rank does not match the offset")
    m = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    for i in range(rs):
        for j in range(rs):
            m[offset + i][offset + j] = sub.matrix[i][j]
    return LatticeIsometry(lattice, m)


def _rows_to_std(cols: Sequence[Sequence[int]], n: int):
    """An M in GL_n(Z) with M c_j = gcd-pivot e_j for each given column c_j;
    returns (M, pivots).  Row operations only, so det M = +-1."""
    k = len(cols)
    work = [list(c) for c in zip(*[list(c) for c in cols])]  # n rows, k cols
    M = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    pivots = []
    for j in range(k):
        for i in range(j + 1, n):
            if work[i][j] == 0:
                continue
            g, p, q = _xgcd(work[j][j], work[i][j])
            s, t = -(work[i][j] // g), work[j][j] // g
            M[j], M[i] = ([p * a + q * b for a, b in zip(M[j], M[i])],
                          [s * a + t * b for a, b in zip(M[j], M[i])])
            work[j], work[i] = ([p * a + q * b
                                 for a, b in zip(work[j], work[i])],
                                [s * a + t * b
                                 for a, b in zip(work[j], work[i])])
        if work[j][j] < 0:
            M[j] = [-a for a in M[j]]
            work[j] = [-a for a in work[j]]
        pivots.append(work[j][j])
        for i in range(j):
            c = work[i][j]
            if work[j][j] and c % work[j][j] == 0:
                f = c // work[j][j]
                M[i] = [a - f * b for a, b in zip(M[i], M[j])]
                work[i] = [a - f * b for a, b in zip(work[i], work[j])]
    return tuple(tuple(row) for row in M), pivots


def _std_transform(cols, n: int):
    """M in GL_n(Z) with M c_j = e_j; raises ValueError if the columns are
    not a primitive system (some pivot != 1)."""
    M, pivots = _rows_to_std(cols, n)
    if any(p != 1 for p in pivots):
        raise ValueError("columns do not form a primitive system")
    return M


def wedge_pair(x1: Sequence[int], x2: Sequence[int],
               y1: Sequence[int], y2: Sequence[int]) -> int:
    """(x1 ^ x2, y1 ^ y2) = (x1,y2)(x2,y1) - (x1,y1)(x2,y2)."""
    lat = SplitLattice(len(x1) // 2)
    return (lat.pairing(x1, y2) * lat.pairing(x2, y1)
            - lat.pairing(x1, y1) * lat.pairing(x2, y2))


def gram_of_pair(T1: Sequence[int], T2: Sequence[int]) -> GramTriple:
    """S(T1, T2) recorded as the triple (q(T1), (T1,T2), q(T2))."""
    lat = SplitLattice(len(T1) // 2)
    return GramTriple(lat.qval(T1), lat.pairing(T1, T2), lat.qval(T2))


def _check_postcondition(ok: bool, what: str):
    if not ok:
        raise AssertionError("reduction postcondition failed: " + what)


def reduce_primitive_vector(v: Sequence[int]) -> Tuple[LatticeIsometry, int]:
    """Some g in SO(L)(Z) with g v = a b_1 + b_{-1}, a = q(v); v primitive."""
    lat = SplitLattice(len(v) // 2)
    n = lat.n
    v = tuple(int(e) for e in v)
    if _content(v) != 1:
        raise ValueError("not primitive")
    a = lat.qval(v)
    if v == lat.join_xy([a] + [0] * (n - 1), [1] + [0] * (n - 1)):
        return LatticeIsometry.identity(lat), a

    g = LatticeIsometry.identity(lat)

    def push(step):
        nonlocal g
        g = step.compose(g)
        return g.apply(v)

    x, y = lat.split_xy(v)
    if any(x):
        # Levi: x -> (d, 0, ..., 0), d = content(x) > 0.
        M, piv = _rows_to_std([x], n)
        w = push(levi_isometry(lat, M))
        x, y = lat.split_xy(w)
        d = x[0]
        # GL_{n-1} fixing b_1, b_{-1}: y tail -> (e, 0, ..., 0).
        if any(y[1:]):
            M1, _ = _rows_to_std([y[1:]], n - 1)
            N = [[1] + [0] * (n - 1)] + \
                [[0] + list(M1[i]) for i in range(n - 1)]
            w = push(levi_dual(lat, N))
            x, y = lat.split_xy(w)
        # Opposite unipotent: y_3 += d makes y = (y_1, e, d, 0, ...), which
        # is primitive because gcd(d, y_1, e) = content(v) = 1.
        C = [[0] * n for _ in range(n)]
        C[2][0], C[0][2] = 1, -1
        w = push(opposite_unipotent(lat, C))
        x, y = lat.split_xy(w)
    # Now y is primitive: Levi sends it to e_1.
    M = _std_transform([y], n)
    w = push(levi_dual(lat, M))
    x, y = lat.split_xy(w)
    # Siegel unipotent clears x_2, ..., x_n (y = e_1, so x_i += B_i1).
    B = [[0] * n for _ in range(n)]
    for i in range(1, n):
        B[i][0], B[0][i] = -x[i], x[i]
    w = push(siegel_unipotent(lat, B))

    target = lat.join_xy([a] + [0] * (n - 1), [1] + [0] * (n - 1))
    _check_postcondition(w == target, "g v != a b_1 + b_{-1}")
    return g, a


def find_complementary_plane(T1: Sequence[int],
                             T2: Sequence[int]) -> Tuple[VectorZ, VectorZ]:
    """(u1, u2) spanning an isotropic plane with (T1 ^ T2, u1 ^ u2) = 1.
    Requires n >= 4 and D = -4 det S(T1, T2) odd (squarefree in practice;
    the construction raises 'hypothesis violated' when its coprimality
    consequence fails)."""
    lat = SplitLattice(len(T1) // 2)
    n = lat.n
    if n < 4:
        raise ValueError("the complementary-plane construction needs n >= 4")
    T1 = tuple(int(e) for e in T1)
    T2 = tuple(int(e) for e in T2)
    t = gram_of_pair(T1, T2)
    D = -t.disc()  # b^2 - 4ac = -4 det S
    if D % 2 == 0:
        raise ValueError("hypothesis violated: D = -4 det S must be odd")
    # D odd squarefree forces T1 primitive (a common divisor k gives k^2 | D).
    g1, a = reduce_primitive_vector(T1)
    w2 = g1.apply(T2)
    x, y = lat.split_xy(w2)
    r, s = x[0], y[0]
    # Reduce the component of T2 in span(b_2, ..., b_{-2}) to m(beta b_2 +
    # b_{-2}) with the stabilizer of b_1, b_{-1} (a copy of the n-1 problem).
    tail = list(x[1:]) + [w2[k] for k in range(n, 2 * n - 1)]
    g = g1
    if any(tail):
        m = _content(tail)
        w0 = tuple(e // m for e in tail)
        h, beta = reduce_primitive_vector(w0)
        g = embed_isometry(lat, h, 1).compose(g)
    else:
        m, beta = 0, 0
    alpha = a * s - r
    gg, p, q = _xgcd(alpha, -m)
    if gg != 1:
        raise ValueError("hypothesis violated: gcd(a s - r, m) != 1, "
                         "so D is not odd and squarefree")
    xx, yy = p, q            # alpha*xx - m*yy = 1
    b = lat.basis_vector
    u1 = tuple(p1 + p3 for p1, p3 in zip(b(1), b(3)))
    u2 = tuple(xx * e1 + yy * e2 - xx * e3
               for e1, e2, e3 in zip(b(-1), b(2), b(-3)))
    ginv = g.inverse()
    u1, u2 = ginv.apply(u1), ginv.apply(u2)
    _check_postcondition(
        lat.qval(u1) == 0 and lat.qval(u2) == 0
        and lat.pairing(u1, u2) == 0, "plane is not isotropic")
    _check_postcondition(wedge_pair(T1, T2, u1, u2) == 1,
                         "(T1 ^ T2, u1 ^ u2) != 1")
    return u1, u2


def _wedge_primitive(u1: Sequence[int], u2: Sequence[int]) -> bool:
    r = len(u1)
    g = 0
    for i in range(r):
        for j in range(i + 1, r):
            g = gcd(g, u1[i] * u2[j] - u1[j] * u2[i])
    return g == 1


def reduce_isotropic_plane(u1: Sequence[int],
                           u2: Sequence[int]) -> LatticeIsometry:
    """Some g in SO(L)(Z) with g u1 = b_1, g u2 = b_2, for an isotropic pair
    whose wedge is primitive in the second exterior power of L."""
    lat = SplitLattice(len(u1) // 2)
    n = lat.n
    u1 = tuple(int(e) for e in u1)
    u2 = tuple(int(e) for e in u2)
    if (lat.qval(u1) or lat.qval(u2) or lat.pairing(u1, u2)):
        raise ValueError("the span of u1, u2 must be isotropic")
    if not _wedge_primitive(u1, u2):
        raise ValueError("not primitive wedge")
    b = lat.basis_vector
    if u1 == b(1) and u2 == b(2):
        return LatticeIsometry.identity(lat)

    # Step 1: u1 is primitive and isotropic, so it reduces to b_{-1}; the
    # swap (b_1 <-> b_{-1}, b_2 <-> b_{-2}) then puts it at b_1.
    g1, a1 = reduce_primitive_vector(u1)
    g = swap_isometry(lat, 1, 2).compose(g1)
    w2 = g.apply(u2)
    # (u1, u2) = 0 means w2 has no b_{-1} component; its b_1 component is
    # irrelevant to the wedge, and the middle part is primitive isotropic.
    x, y = lat.split_xy(w2)
    c = x[0]
    mid = list(x[1:]) + [w2[k] for k in range(n, 2 * n - 1)]
    # Step 2: reduce the middle part to b_{-2} inside span(b_2,...,b_{-2}),
    # then swap (b_2 <-> b_{-2}, b_3 <-> b_{-3}) to place it at b_2.
    h, a2 = reduce_primitive_vector(mid)
    g = embed_isometry(lat, h, 1).compose(g)
    g = swap_isometry(lat, 2, 3).compose(g)
    # Step 3: a Levi element with A = [[1, -c], [0, 1]] (+ identity) clears
    # the leftover b_1 coefficient of u2 while fixing b_1.
    A = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    A[0][1] = -c
    g = levi_isometry(lat, A).compose(g)

    _check_postcondition(g.apply(u1) == b(1) and g.apply(u2) == b(2),
                         "g u1 != b_1 or g u2 != b_2")
    return g


def reduce_pair(T1: Sequence[int], T2: Sequence[int]
                ) -> Tuple[LatticeIsometry, GramTriple]:
    """Some g in SO(L)(Z) with g T1 = a b_1 + b_{-1} and
    g T2 = b b_1 + c b_2 + b_{-2}, where (a, b, c) records S(T1, T2).
    Requires n >= 4 and -4 det S odd and squarefree; since the canonical
    form depends only on S, this realizes transitivity on X_T."""
    lat = SplitLattice(len(T1) // 2)
    n = lat.n
    T1 = tuple(int(e) for e in T1)
    T2 = tuple(int(e) for e in T2)
    t = gram_of_pair(T1, T2)
    b = lat.basis_vector
    target1 = tuple(t.a * p + q for p, q in zip(b(1), b(-1)))
    target2 = tuple(t.b * p + t.c * q + s
                    for p, q, s in zip(b(1), b(2), b(-2)))
    if T1 == target1 and T2 == target2:
        return LatticeIsometry.identity(lat), t

    u1, u2 = find_complementary_plane(T1, T2)
    g = reduce_isotropic_plane(u1, u2)
    w1, w2 = g.apply(T1), g.apply(T2)
    # Now (w1 ^ w2, b_1 ^ b_2) = 1, i.e. the (b_{-1}, b_{-2}) minor of the
    # y-parts is a unit, so (y1, y2) extends to a basis: a Levi element
    # moves the y-parts to exactly (b_{-1}, b_{-2}).
    _, y1 = lat.split_xy(w1)
    _, y2 = lat.split_xy(w2)
    M = _std_transform([y1, y2], n)
    g = levi_dual(lat, M).compose(g)
    w1, w2 = g.apply(T1), g.apply(T2)
    x1, _ = lat.split_xy(w1)
    x2, _ = lat.split_xy(w2)
    # Siegel unipotent: with y-parts (e_1, e_2), the Gram entries pin the
    # surviving coefficients (x1[0] = a, x2[1] = c, x1[1] + x2[0] = b) and a
    # skew B clears everything else.
    B = [[0] * n for _ in range(n)]
    B[1][0], B[0][1] = -x1[1], x1[1]
    for i in range(2, n):
        B[i][0], B[0][i] = -x1[i], x1[i]
        B[i][1], B[1][i] = -x2[i], x2[i]
    g = siegel_unipotent(lat, B).compose(g)

    _check_postcondition(g.apply(T1) == target1 and g.apply(T2) == target2,
                         "pair did not reach the canonical form")
    return g, t
