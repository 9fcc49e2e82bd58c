"""The coefficient engine: classical genus-2 Maass lift and relations, the
quaternionic theta* lift on Fourier coefficients, Spezialschar membership,
Fourier-Jacobi extraction, and the Dirichlet-series factorization.

All coefficient tables are ingested data (synthetic or user-supplied); the
identities verified here are exact combinatorial statements about the lift
formulas, so synthetic Gaussian-rational tables give full coverage.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt
from typing import Dict, Iterable, List, Optional, Tuple

from .coset import (GramTriple, IndexPair, Mat2Z, MAT2_ID, breve,
                    divisor_cosets, gram, hnf_right_cosets,
                    is_strongly_primitive, mat2_det, mat2_scale, pair_act,
                    reduce_gram)
from .quadspace import GaussRational, GZERO, _coerce


class InsufficientTableError(Exception):
    """A check or lift needed a coefficient the table does not contain.
    Raised instead of silently substituting zero, so identity checks can
    never pass vacuously."""


@dataclass(frozen=True)
class Report:
    ok: bool
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _divisors(n: int) -> List[int]:
    n = abs(n)
    out = [d for d in range(1, isqrt(n) + 1) if n % d == 0]
    return sorted(set(out + [n // d for d in out]))


@dataclass(frozen=True)
class HalfIntegralTable:
    """Coefficients c(n) of a weight ell - 1/2 form in the plus space:
    c(n) = 0 unless n = 0 or 3 mod 4 (such n are simply absent)."""
    weight: int
    entries: Dict[int, GaussRational] = field(default_factory=dict)

    def __post_init__(self):
        for n in self.entries:
            if n < 0 or n % 4 not in (0, 3):
                raise ValueError(f"c({n}) must vanish (n != 0, 3 mod 4)")

    def c(self, n: int) -> GaussRational:
        if n % 4 not in (0, 3) or n < 0:
            return GZERO
        if n not in self.entries:
            raise InsufficientTableError(f"c({n}) not in table")
        return self.entries[n]


@dataclass(frozen=True)
class SiegelTable:
    """Genus-2 coefficients a_F(T) keyed by GL2(Z)-reduced positive
    (semi)definite triples; lookups canonicalize via reduction.  Even weight
    is assumed throughout (so a_F(u^t T u) = a_F(T) for all u in GL2(Z))."""
    weight: int
    entries: Dict[GramTriple, GaussRational] = field(default_factory=dict)
    cuspidal: bool = True

    def __post_init__(self):
        if self.weight % 2:
            raise ValueError("weight must be even")
        for t in self.entries:
            if reduce_gram(t) != t:
                raise ValueError(f"key {t} is not reduced")
            if self.cuspidal and not t.is_positive_definite():
                raise ValueError("cuspidal table keys must be pos. definite")

    def a(self, t: GramTriple) -> GaussRational:
        key = reduce_gram(t)
        if self.cuspidal and not key.is_positive_definite():
            return GZERO
        if key not in self.entries:
            raise InsufficientTableError(f"a_F({key}) not in table")
        return self.entries[key]


@dataclass(frozen=True)
class QuatTable:
    """Quaternionic coefficients a_phi(lambda) keyed by exact index pairs;
    every key has positive definite Gram matrix (cuspidal support)."""
    weight: int
    entries: Dict[IndexPair, GaussRational] = field(default_factory=dict)

    def __post_init__(self):
        for lam in self.entries:
            if not gram(lam).is_positive_definite():
                raise ValueError(f"key {lam} has non-positive-definite gram")

    def a(self, lam: IndexPair) -> GaussRational:
        if lam not in self.entries:
            raise InsufficientTableError(f"a_phi({lam}) not in table")
        return self.entries[lam]


@dataclass(frozen=True)
class DirichletPoly:
    """Truncated Dirichlet series: coefficient of n^-s for n <= bound."""
    coeffs: Dict[int, GaussRational]
    bound: int

    def __getitem__(self, n: int) -> GaussRational:
        return self.coeffs.get(n, GZERO)

    def convolve(self, other: "DirichletPoly") -> "DirichletPoly":
        bound = min(self.bound, other.bound)
        out: Dict[int, GaussRational] = {}
        for n in range(1, bound + 1):
            s = GZERO
            for d in _divisors(n):
                s = s + self[d] * other[n // d]
            if s:
                out[n] = s
        return DirichletPoly(out, bound)


# --- classical genus-2 Maass lift (Sec. 2 machinery) --------------------------

def reduced_triples(discbound: int, include_singular: bool = False):
    """All reduced triples 0 <= b <= a <= c with 0 < 4ac - b^2 <= discbound
    (plus the singular ones with disc 0 when requested)."""
    out = []
    if include_singular:
        cmax = discbound  # conventional cap for singular keys
        out.extend(GramTriple(0, 0, c) for c in range(cmax + 1))
    a = 1
    while 4 * a * a - a * a <= discbound:
        for b in range(a + 1):
            c = a
            while 4 * a * c - b * b <= discbound:
                if 4 * a * c - b * b > 0:
                    out.append(GramTriple(a, b, c))
                c += 1
        a += 1
    return out


def classical_maass_lift(c: HalfIntegralTable, ell: int,
                         bound: int) -> SiegelTable:
    """A_F(a,b,c) = sum_{d | gcd(a,b,c)} d^(ell-1) c((4ac-b^2)/d^2) on all
    reduced positive definite triples of discriminant <= bound."""
    if ell % 2:
        raise ValueError("weight must be even")
    entries = {}
    for t in reduced_triples(bound):
        g = gcd(gcd(t.a, t.b), t.c)
        val = GZERO
        for d in _divisors(g):
            val = val + d ** (ell - 1) * c.c(t.disc() // (d * d))
        entries[t] = val
    return SiegelTable(ell, entries)


def classical_maass_check(F: SiegelTable) -> Report:
    """Verify a_F(a,b,c) = sum_{d | gcd(a,b,c)} d^(ell-1) a_F(ac/d^2, b/d, 1)
    for every key of the table."""
    ell = F.weight
    for t in sorted(F.entries, key=lambda t: (t.disc(), t.a, t.b, t.c)):
        g = gcd(gcd(t.a, t.b), t.c)
        rhs = GZERO
        for d in _divisors(g):
            rhs = rhs + d ** (ell - 1) * F.a(
                GramTriple(t.a * t.c // (d * d), t.b // d, 1))
        if rhs != F.entries[t]:
            return Report(False, f"relation fails at {t}")
    return Report(True, f"{len(F.entries)} keys verified")


def jacobi_coeffs(c: HalfIntegralTable, nmax: int):
    """Fourier-Jacobi expansion coefficients of the index-1 Jacobi form:
    (n, r) -> c(4n - r^2) for 4n - r^2 >= 0, n <= nmax."""
    out = {}
    for n in range(nmax + 1):
        r = 0
        while r * r <= 4 * n:
            val = c.c(4 * n - r * r)
            out[(n, r)] = val
            if r:
                out[(n, -r)] = val
            r += 1
    return out


# --- the quaternionic theta* lift ---------------------------------------------

def theta_star(F: SiegelTable, lam: IndexPair) -> GaussRational:
    """a_{theta*(F)}(lambda) = sum over divisor cosets (r, mu) of
    |det r|^(ell-1) conj(a_F(S(mu))), where S(mu) = t(r^-1) S(lambda) r^-1."""
    if not gram(lam).is_positive_definite():
        raise ValueError("theta_star needs positive definite gram(lambda)")
    ell = F.weight
    out = GZERO
    for r, mu in divisor_cosets(lam):
        out = out + abs(mat2_det(r)) ** (ell - 1) * F.a(gram(mu)).conj()
    return out


def _closure_keys(pairs: Iterable[IndexPair]):
    """The given pairs together with breve(gram(mu)) for every divisor
    reduction mu of each pair (what membership checks will look up)."""
    keys = set()
    for lam in pairs:
        keys.add(lam)
        for _r, mu in divisor_cosets(lam):
            keys.add(breve(gram(mu)))
    return keys


def spezialschar_keys(detbound: int,
                      extra_pairs: Iterable[IndexPair] = ()) -> List[IndexPair]:
    """The standard key family for a theta* coefficient table: for every
    reduced positive definite t with det [[a,b/2],[b/2,c]] <= detbound
    (i.e. disc <= 4*detbound), the canonical strongly primitive pairs
    breve(t) and ([[a,0],[b,1]], [[0,-1],[c,0]]), together with the
    imprimitive multiples d*breve(t0) that stay within the bound, any extra
    pairs requested, and the breve-closure needed by membership checks."""
    discbound = 4 * detbound
    base = []
    for t in reduced_triples(discbound):
        base.append(breve(t))
        base.append((((t.a, 0), (t.b, 1)), ((0, -1), (t.c, 0))))
        d = 2
        while d ** 4 * t.disc() <= discbound:   # gram(d*lam) = d^2 gram(lam)
            base.append((mat2_scale(d, breve(t)[0]),
                         mat2_scale(d, breve(t)[1])))
            d += 1
    base.extend(extra_pairs)
    return sorted(_closure_keys(base))


def theta_star_table(F: SiegelTable, detbound: int,
                     extra_pairs: Iterable[IndexPair] = ()) -> QuatTable:
    """Tabulate theta_star over spezialschar_keys(detbound, extra_pairs)."""
    entries = {}
    for lam in spezialschar_keys(detbound, extra_pairs):
        entries[lam] = theta_star(F, lam)
    return QuatTable(F.weight, entries)


# --- Maass Spezialschar membership --------------------------------------------

def a_prim(phi: QuatTable, lam: IndexPair) -> GaussRational:
    """a_phi^prim(lambda) = a_phi(breve(S(lambda))); well defined for tables
    satisfying membership condition (i)."""
    return phi.a(breve(gram(lam)))


def maass_membership(phi: QuatTable) -> Report:
    """Check the two Spezialschar coefficient conditions on every table key:
    (i) strongly primitive keys with equal gram carry equal coefficients;
    (ii) a_phi(lambda) = sum over divisor cosets (r, mu) of
         |det r|^(ell-1) a_phi^prim(mu).
    Also cross-checks (ii) against the equivalent single combined condition
    a_phi(lambda) = sum |det r|^(ell-1) a_phi(breve(S(mu)))."""
    ell = phi.weight
    by_gram: Dict[GramTriple, List[IndexPair]] = {}
    for lam in phi.entries:
        if is_strongly_primitive(lam):
            by_gram.setdefault(gram(lam), []).append(lam)
    for t, lams in by_gram.items():
        vals = {phi.entries[lam] for lam in lams}
        if len(vals) > 1:
            return Report(False, f"condition (i) fails at gram {t}")
    for lam in phi.entries:
        rhs = GZERO
        single = GZERO
        for r, mu in divisor_cosets(lam):
            w = abs(mat2_det(r)) ** (ell - 1)
            rhs = rhs + w * a_prim(phi, mu)
            single = single + w * phi.a(breve(gram(mu)))
        if rhs != single:
            return Report(False, f"combined-condition mismatch at {lam}")
        if rhs != phi.entries[lam]:
            return Report(False, f"condition (ii) fails at {lam}")
    return Report(True, f"{len(phi.entries)} keys verified")


# --- Fourier-Jacobi extraction -------------------------------------------------

def fj_pair(t: GramTriple) -> IndexPair:
    """The strongly primitive pair ([[a,0],[b,1]], [[0,-1],[c,0]]) with gram
    equal to t."""
    lam = (((t.a, 0), (t.b, 1)), ((0, -1), (t.c, 0)))
    assert gram(lam) == t
    return lam


def fj_extract(phi: QuatTable, t: GramTriple) -> GaussRational:
    """b_phi([a,b,c]) = conj(a_phi(([[a,0],[b,1]], [[0,-1],[c,0]])))."""
    return phi.a(fj_pair(t)).conj()


# --- Dirichlet series -----------------------------------------------------------

def _s_coprime(n: int, s_primes) -> bool:
    return all(n % p for p in s_primes)


def dirichlet_series(phi: QuatTable, lam: IndexPair, bound: int,
                     s_primes: Iterable[int] = ()) -> DirichletPoly:
    """D_phi(T1,T2) truncated at n <= bound: the n^-s coefficient is
    sum_{g right cosets, |det g| = n, n coprime to S}
    a_phi(lambda . g) / n^(ell-1)."""
    if not is_strongly_primitive(lam):
        raise ValueError("dirichlet_series needs a strongly primitive pair")
    s_primes = tuple(s_primes)
    ell = phi.weight
    coeffs: Dict[int, GaussRational] = {}
    for n in range(1, bound + 1):
        if not _s_coprime(n, s_primes):
            continue
        s = GZERO
        for g in hnf_right_cosets(n):
            s = s + phi.a(pair_act(lam, g))
        if s:
            coeffs[n] = s / _coerce(n ** (ell - 1))
    return DirichletPoly(coeffs, bound)


def _zeta_sigma_factor(bound: int, s_primes) -> DirichletPoly:
    """sum_{r in GL2(Z)\\M2^S(Z)} |det r|^-s truncated: coefficient sigma_1(n)
    for S-coprime n."""
    coeffs = {}
    for n in range(1, bound + 1):
        if _s_coprime(n, s_primes):
            coeffs[n] = _coerce(sum(_divisors(n)))
    return DirichletPoly(coeffs, bound)


def primitive_dirichlet_series(phi: QuatTable, lam: IndexPair, bound: int,
                               s_primes: Iterable[int] = ()) -> DirichletPoly:
    """The primitive-coefficient factor:
    n^-s coefficient = sum_{g, |det g| = n coprime to S}
    a_phi^prim(lambda . g) / n^(ell-1)."""
    s_primes = tuple(s_primes)
    ell = phi.weight
    coeffs: Dict[int, GaussRational] = {}
    for n in range(1, bound + 1):
        if not _s_coprime(n, s_primes):
            continue
        s = GZERO
        for g in hnf_right_cosets(n):
            s = s + a_prim(phi, pair_act(lam, g))
        if s:
            coeffs[n] = s / _coerce(n ** (ell - 1))
    return DirichletPoly(coeffs, bound)


def dirichlet_factor_check(phi: QuatTable, lam: IndexPair, bound: int,
                           s_primes: Iterable[int] = ()) -> Report:
    """Verify, coefficient by coefficient up to n <= bound, that
    D_phi = (sum_r |det r|^-s) * (sum_g a_phi^prim(lambda.g)/|det g|^(s+ell-1))
    as truncated Dirichlet series.  Also confirms the coset-divisor
    S-coprimality property that underlies the rearrangement: for S-coprime
    |det g|, every divisor coset r of lambda.g has S-coprime |det r| and
    |det(g r^-1)|."""
    s_primes = tuple(s_primes)
    lhs = dirichlet_series(phi, lam, bound, s_primes)
    rhs = _zeta_sigma_factor(bound, s_primes).convolve(
        primitive_dirichlet_series(phi, lam, bound, s_primes))
    for n in range(1, bound + 1):
        if _s_coprime(n, s_primes):
            for g in hnf_right_cosets(n):
                for r, mu in divisor_cosets(pair_act(lam, g)):
                    d = abs(mat2_det(r))
                    if n % d or not (_s_coprime(d, s_primes)
                                     and _s_coprime(n // d, s_primes)):
                        return Report(False,
                                      f"S-coprimality fails at n={n}, r={r}")
    for n in range(1, bound + 1):
        if lhs[n] != rhs[n]:
            return Report(False, f"factorization fails at n={n}")
    return Report(True, f"verified to n={bound}")
