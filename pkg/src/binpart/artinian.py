"""Binomials in Artinian quotients of Laurent rings.

For an ideal K with finite-dimensional quotient, multiplication by the
variables gives commuting invertible rational matrices M_1..M_m, and
y^e - lambda lies in K exactly when prod M_i^{e_i} is the scalar
lambda.  The lattice of such exponents is computed in two exact-plus-
numeric layers:

* the unipotent obstruction is exact: writing M_i = S_i U_i with S_i
  the semisimple Jordan-Chevalley summand and U_i unipotent (all
  commuting), prod M^e is scalar iff prod S^e is scalar and
  sum e_i log U_i = 0, an integer kernel computation;
* relations among the semisimple parts are discovered numerically from
  the joint eigenvalue tuples (logarithms + LLL integer relation
  search, doubling precision until the verified lattice is stable),
  and every candidate is verified exactly by rational matrix powers.

Soundness is therefore unconditional; only completeness of "no more
relations" is heuristic, which the completeness flag records.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import mpmath as mp

from . import intlat
from .config import CERTIFIED, DEFAULT_CONFIG, EXHAUSTED, HEURISTIC, PipelineConfig
from .groebner import (
    IdealHandle,
    is_unit_ideal,
    krull_dimension,
    normal_form,
    reduced_gb,
    saturate_by_variables,
)
from .poly import LaurentPoly
from .ratlin import (
    charpoly,
    poly_trim,
    q_commute,
    q_det,
    q_identity,
    q_inverse,
    q_is_zero,
    q_mul,
    q_pow,
    q_scalar_of,
    semisimple_part,
    squarefree_part,
    unipotent_log,
)

_CANDIDATE_CAP = 1 << 16


@dataclass(frozen=True)
class QuotientBasis:
    """Standard monomials of the Artinian quotient, ascending, 1 first."""

    standard_monomials: tuple[tuple[int, ...], ...]
    ell: int


@dataclass(frozen=True)
class MulMatrices:
    """Commuting invertible multiplication matrices, checked exactly."""

    mats: tuple
    dets: tuple

    @classmethod
    def build(cls, mats) -> "MulMatrices":
        mats = tuple(tuple(tuple(Fraction(x) for x in row) for row in M) for M in mats)
        dense = [[list(row) for row in M] for M in mats]
        dets = []
        for M in dense:
            d = q_det(M)
            if d == 0:
                raise ValueError(
                    "multiplication matrix is singular: the ideal was not "
                    "saturated (a variable is a zerodivisor on the quotient)"
                )
            dets.append(d)
        for i in range(len(dense)):
            for j in range(i + 1, len(dense)):
                if not q_commute(dense[i], dense[j]):
                    raise ValueError("multiplication matrices do not commute")
        return cls(mats, tuple(dets))

    def dense(self):
        return [[list(row) for row in M] for M in self.mats]

    @property
    def count(self) -> int:
        return len(self.mats)

    @property
    def size(self) -> int:
        return len(self.mats[0]) if self.mats else 1


@dataclass(frozen=True)
class ScalarRelationLattice:
    """Exponents e with prod M_i^{e_i} scalar, with the scalar per basis row.

    ``basis`` rows are in Hermite normal form; ``lambdas[i]`` is the
    exact scalar of the corresponding product, so the value on any
    lattice member follows multiplicatively.
    """

    basis: tuple[tuple[int, ...], ...]
    lambdas: tuple[Fraction, ...]
    completeness: str

    @property
    def rank(self) -> int:
        return len(self.basis)

    def lambda_of(self, e) -> Fraction | None:
        """Character value on a lattice member; None if e is outside."""
        coords = intlat.solve_in_lattice([list(r) for r in self.basis], list(e))
        if coords is None:
            return None
        out = Fraction(1)
        for c, lam in zip(coords, self.lambdas):
            out *= lam ** c
        return out


# -- quotient bases and multiplication matrices ------------------------------


def quotient_basis(K: IdealHandle) -> QuotientBasis:
    """Standard monomials of the saturated polynomial representative.

    Requires the quotient (after saturating by the variable product) to
    be a finite-dimensional vector space.
    """
    Ks = saturate_by_variables(K)
    if is_unit_ideal(Ks):
        raise ValueError("unit ideal: the quotient is zero")
    if krull_dimension(Ks) != 0:
        raise ValueError("ideal is not Artinian over the torus")
    gb = reduced_gb(Ks)
    leads = [g.terms[0][0] for g in gb]
    n = Ks.ring.nvars
    zero = (0,) * n
    seen = {zero}
    queue = [zero]
    standard = []
    while queue:
        exp = queue.pop()
        if any(all(l[i] <= exp[i] for i in range(n)) for l in leads):
            continue
        standard.append(exp)
        for i in range(n):
            nxt = exp[:i] + (exp[i] + 1,) + exp[i + 1:]
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    standard.sort(key=lambda e: (sum(e),) + tuple(-x for x in reversed(e[1:])))
    return QuotientBasis(tuple(standard), len(standard))


def multiplication_matrices(K: IdealHandle, B: QuotientBasis) -> MulMatrices:
    """Matrices of multiplication by each variable on the quotient basis."""
    Ks = saturate_by_variables(K)
    n = Ks.ring.nvars
    index = {e: k for k, e in enumerate(B.standard_monomials)}
    mats = []
    for i in range(n):
        M = [[Fraction(0)] * B.ell for _ in range(B.ell)]
        for k, e in enumerate(B.standard_monomials):
            shifted = e[:i] + (e[i] + 1,) + e[i + 1:]
            nf = normal_form(LaurentPoly.monomial(Ks.ring, shifted), Ks)
            for exp, c in nf.terms:
                row = index.get(exp)
                if row is None:
                    raise AssertionError("normal form left the standard monomials")
                M[row][k] = c
        mats.append(M)
    return MulMatrices.build(mats)


# -- numeric discovery of semisimple relations --------------------------------


def _fraction_to_mpf(x: Fraction):
    return mp.mpf(x.numerator) / mp.mpf(x.denominator)


def _mp_matrix(M):
    return mp.matrix([[_fraction_to_mpf(x) for x in row] for row in M])


def _mp_trace(A):
    return mp.fsum(A[i, i] for i in range(A.rows))


def _eigenvalue_points(S, rng: random.Random, minpolys):
    """Joint eigenvalue tuples of the commuting semisimple matrices.

    Draws a random combination Sc = sum c_i S_i and isolates the roots
    mu_j of its exact squarefree characteristic polynomial.  Traces of
    the powers satisfy

        tr(S_i Sc^k) = sum_j (mult_j p_{j,i}) mu_j^k,

    so one Vandermonde solve per matrix recovers the eigenvalue tuples
    (and the multiplicities, from S_i = identity).  Retries with fresh
    coefficients when the combination fails to separate the points
    (detected through the minimal-polynomial residuals).
    """
    m = len(S)
    ell = len(S[0])
    tol = mp.mpf(2) ** (-mp.mp.prec // 4)
    for _ in range(10):
        c = [rng.randint(-999, 999) for _ in range(m)]
        Sc = [[sum(c[i] * S[i][a][b] for i in range(m)) for b in range(ell)]
              for a in range(ell)]
        g = squarefree_part(charpoly(Sc))
        r = len(g) - 1
        if r == 0:
            continue
        den = 1
        for x in g:
            den = lcm(den, x.denominator)
        coeffs = [int(x * den) for x in reversed(g)]
        try:
            roots = mp.polyroots(coeffs, maxsteps=200, extraprec=mp.mp.prec)
        except mp.libmp.libhyper.NoConvergence:
            continue
        sep = min((abs(a - b) for a in roots for b in roots if a is not b),
                  default=mp.mpf(1))
        if r > 1 and sep < mp.mpf(2) ** (-mp.mp.prec // 2):
            continue
        Sc_mp = _mp_matrix(Sc)
        S_mp = [_mp_matrix(Si) for Si in S]
        powers = [mp.eye(ell)]
        for _ in range(r - 1):
            powers.append(powers[-1] * Sc_mp)
        vand = mp.matrix([[roots[j] ** k for j in range(r)] for k in range(r)])
        rhs_mult = mp.matrix([_mp_trace(powers[k]) for k in range(r)])
        try:
            mults = mp.lu_solve(vand, rhs_mult)
        except ZeroDivisionError:
            continue
        if any(abs(mults[j] - mp.nint(mp.re(mults[j]))) > mp.mpf("0.25")
               or mp.re(mults[j]) < mp.mpf("0.5") for j in range(r)):
            continue
        weighted = []
        for i in range(m):
            rhs = mp.matrix([
                mp.fsum(S_mp[i][a, t] * powers[k][t, a]
                        for a in range(ell) for t in range(ell))
                for k in range(r)
            ])
            weighted.append(mp.lu_solve(vand, rhs))
        points = []
        ok = True
        for j in range(r):
            pt = tuple(weighted[i][j] / mults[j] for i in range(m))
            for i in range(m):
                val = mp.polyval([_fraction_to_mpf(x) for x in reversed(minpolys[i])],
                                 pt[i])
                if abs(val) > tol:
                    ok = False
                    break
            if not ok:
                break
            points.append(pt)
        if ok:
            return points
    return None


def _relation_candidates(S, config: PipelineConfig, rng: random.Random, minpolys):
    """LLL-based integer relation candidates among eigenvalue logarithms."""
    m = len(S)
    points = _eigenvalue_points(S, rng, minpolys)
    if points is None or len(points) <= 1:
        return set()
    r = len(points)
    base = points[0]
    logs = []
    close = mp.mpf(2) ** (-mp.mp.prec // 4)
    for j in range(1, r):
        row = [mp.log(points[j][i] / base[i]) for i in range(m)]
        # a conjugate point row (same real parts, negated imaginary
        # parts) imposes the same relations; skip the duplicate
        dup = False
        for prev in logs:
            if all(abs(mp.re(a) - mp.re(b)) < close
                   and abs(mp.im(a) + mp.im(b)) < close
                   for a, b in zip(row, prev)):
                dup = True
                break
        if not dup:
            logs.append(row)
    r = len(logs) + 1
    scale_bits = config.lll_scale_bits * max(
        1, mp.mp.prec // config.precision_start_bits
    )
    C = mp.mpf(2) ** scale_bits
    two_pi = 2 * mp.pi
    nvars = m + (r - 1)
    rows = []
    for i in range(m):
        row = [0] * nvars
        row[i] = 1
        for j in range(r - 1):
            row.append(int(mp.nint(C * mp.re(logs[j][i]))))
            row.append(int(mp.nint(C * mp.im(logs[j][i]))))
        rows.append(row)
    for j in range(r - 1):
        row = [0] * nvars
        row[m + j] = 1
        for t in range(r - 1):
            row.append(0)
            row.append(int(mp.nint(C * two_pi)) if t == j else 0)
        rows.append(row)
    reduced = intlat.lll(rows, config.discovery_delta)
    threshold = 1 << (scale_bits // 2)
    out = set()
    for row in reduced:
        e = row[:m]
        residual = row[nvars:]
        if not any(e):
            continue
        if any(abs(x) > threshold for x in residual):
            continue
        if any(abs(x) > _CANDIDATE_CAP for x in e):
            continue
        out.add(tuple(e))
    return out


def _verify_scalar(mats, e) -> Fraction | None:
    P = q_identity(len(mats[0]))
    for M, k in zip(mats, e):
        if k:
            P = q_mul(P, q_pow(M, k))
    return q_scalar_of(P)


def _semisimple_relation_lattice(S, config: PipelineConfig):
    """Verified relation lattice of the semisimple parts, with flag."""
    rng = random.Random(config.seed ^ 0x5EED)
    minpolys = [squarefree_part(charpoly(Si)) for Si in S]
    verified: set[tuple[int, ...]] = set()
    prev = None
    prec = config.precision_start_bits
    flag = EXHAUSTED
    while prec <= config.precision_max_bits:
        with mp.workprec(prec):
            candidates = _relation_candidates(S, config, rng, minpolys)
        for e in candidates:
            if e not in verified and _verify_scalar(S, e) is not None:
                verified.add(e)
        basis = intlat.hnf_basis([list(e) for e in verified]) if verified else []
        if prev is not None and basis == prev:
            flag = HEURISTIC
            break
        prev = basis
        prec *= 2
    return (prev if prev is not None else []), flag


# -- public operations ---------------------------------------------------------


def scalar_relation_lattice(
    mm: MulMatrices, config: PipelineConfig = DEFAULT_CONFIG
) -> ScalarRelationLattice:
    """Basis of {e : prod M_i^{e_i} is a nonzero rational scalar}.

    Every basis vector is certified by an exact matrix-product check;
    the completeness flag distinguishes the fully exact case (all
    semisimple parts scalar, e.g. a single point with multiplicity)
    from numerically discovered spectra.
    """
    m = mm.count
    if m == 0:
        return ScalarRelationLattice((), (), CERTIFIED)
    mats = mm.dense()
    S = [semisimple_part(M) for M in mats]
    logs = [unipotent_log(q_mul(q_inverse(Si), Mi)) for Si, Mi in zip(S, mats)]
    ell = mm.size
    if all(q_is_zero(L) for L in logs):
        nil = intlat.identity(m)
    else:
        A = [[logs[i][a][b] for i in range(m)]
             for a in range(ell) for b in range(ell)]
        nil = intlat.kernel_lattice(A)
    if all(q_scalar_of(Si) is not None for Si in S):
        ss, flag = intlat.identity(m), CERTIFIED
    else:
        ss, flag = _semisimple_relation_lattice(S, config)
    E = intlat.lattice_intersection(ss, nil)
    basis = []
    lambdas = []
    for e in E:
        lam = _verify_scalar(mats, e)
        if lam is None:
            raise AssertionError("relation lattice produced a non-scalar product")
        basis.append(tuple(e))
        lambdas.append(lam)
    return ScalarRelationLattice(tuple(basis), tuple(lambdas), flag)


def radical_binomial_lattice(
    mm: MulMatrices, config: PipelineConfig = DEFAULT_CONFIG
) -> ScalarRelationLattice:
    """Exponents e with y^e - lambda in the radical of the ideal.

    prod M_i^{e_i} has a single eigenvalue exactly when the product of
    the semisimple parts is scalar, so this is the relation lattice of
    the S_i.  Each reported vector is additionally certified by the
    characteristic polynomial check char(prod M^e) = (t - lambda)^ell.
    """
    m = mm.count
    if m == 0:
        return ScalarRelationLattice((), (), CERTIFIED)
    mats = mm.dense()
    S = [semisimple_part(M) for M in mats]
    res = scalar_relation_lattice(MulMatrices.build(S), config)
    ell = mm.size
    for e, lam in zip(res.basis, res.lambdas):
        P = q_identity(ell)
        for M, k in zip(mats, e):
            if k:
                P = q_mul(P, q_pow(M, k))
        chi = poly_trim(charpoly(P))
        expected = [Fraction(0)] * (ell + 1)
        comb = 1
        for i in range(ell + 1):
            expected[ell - i] = comb * (-lam) ** i
            comb = comb * (ell - i) // (i + 1)
        if chi != poly_trim(expected):
            raise AssertionError("radical relation failed the single-eigenvalue check")
    return res
