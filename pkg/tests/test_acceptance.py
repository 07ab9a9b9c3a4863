"""Acceptance suite: one test per criterion, exact tolerances, with a
pass/fail line printed for each (run with ``pytest -v -s`` to see them).

Soundness is certified everywhere (normal-form-zero checks); negative
binomial answers are heuristic-complete by design and are cross-checked
here against the exact brute-force oracle.
"""

import random
import time
from fractions import Fraction

from binpart import (
    HEURISTIC,
    TRIVIAL,
    UNIT_LAURENT,
    IdealHandle,
    LaurentPoly,
    MonomialOrder,
    Ring,
    binomial_part_laurent,
    brute_force_binomials,
    contains_binomial,
    contains_monomial,
    in_tropical_variety,
    intlat,
    normal_form,
    reduced_gb,
    saturate_by_variables,
    tropical_span,
)
from binpart.intlat import _gso

from conftest import character_value, ideal, random_ideal, random_lattice_ideal


def report(criterion: str, ok: bool, detail: str = ""):
    marker = "PASS" if ok else "FAIL"
    print(f"acceptance {criterion}: {marker}" + (f" ({detail})" if detail else ""))
    assert ok, f"{criterion}: {detail}"


def test_criterion_1_cyclotomic():
    start = time.monotonic()
    I = ideal("x", "x^2+x+1")
    answer, witness, _ = contains_binomial(I)
    elapsed = time.monotonic() - start
    ok = (answer is True and str(witness) == "x^3 - 1"
          and normal_form(witness, I).is_zero() and elapsed < 1.0)
    report("1 cyclotomic decide", ok, f"{elapsed:.2f}s witness={witness}")


def test_criterion_2_deep_binomials():
    ok = True
    detail = []
    for n in (3, 4, 5):
        start = time.monotonic()
        I = ideal("xyz", "(x-z)^2", f"{n}*x - y - {n-1}*z")
        res = binomial_part_laurent(I)
        direction = (n, -1, 1 - n)
        ok &= res.rank == 1
        ok &= res.lattice_basis[0] in (direction, tuple(-x for x in direction))
        ok &= res.lambdas == (Fraction(1),)
        below = brute_force_binomials(I, n - 1)
        ok &= below == []
        found = brute_force_binomials(I, n)
        ok &= any(b.u == (n, 0, 0) and b.v == (0, 1, n - 1) and b.lam == 1
                  for b in found)
        elapsed = time.monotonic() - start
        if n == 5:
            ok &= elapsed < 60.0
        detail.append(f"n={n}:{elapsed:.2f}s")
    report("2 deep binomials", ok, " ".join(detail))


def test_criterion_3_negatives():
    one_var = ideal("x", "(x-1)*(x-2)")
    ans1, _, res1 = contains_binomial(one_var)
    four_var = ideal("xyzw", "(x-y)*(z-w)")
    ans2, _, res2 = contains_binomial(four_var)
    ok = (ans1 is False and res1.completeness == HEURISTIC
          and ans2 is False and res2.completeness == HEURISTIC)
    ok &= brute_force_binomials(one_var, 6) == []
    ok &= brute_force_binomials(four_var, 6) == []
    report("3 negatives", ok,
           f"flags={res1.completeness},{res2.completeness}")


def test_criterion_4_unit_laurent():
    I = ideal("xy", "x-y", "x^2", "x*y", "y^2")
    res = binomial_part_laurent(I)
    answer, witness, _ = contains_binomial(I)
    ok = (res.status == UNIT_LAURENT
          and contains_monomial(I) is True
          and answer is True
          and str(witness) == "x - y"
          and normal_form(witness, I).is_zero())
    report("4 unit Laurent extension", ok, f"witness={witness}")


def test_criterion_5_lattice_round_trip():
    rng = random.Random(505)
    start = time.monotonic()
    failures = []
    for case in range(50):
        I, rows, lambdas = random_lattice_ideal(rng, max_vars=4)
        res = binomial_part_laurent(I)
        got = (intlat.hnf_basis([list(r) for r in res.lattice_basis])
               if res.lattice_basis else [])
        want = intlat.hnf_basis([list(r) for r in rows])
        if got != want:
            failures.append((case, "lattice", rows, got))
            continue
        for h in want:
            if res.lambda_of(h) != character_value(rows, lambdas, h):
                failures.append((case, "lambda", rows, h))
    elapsed = time.monotonic() - start
    ok = not failures and elapsed < 300.0
    report("5 lattice round trip", ok, f"50 cases {elapsed:.1f}s {failures[:3]}")


def test_criterion_6_oracle_equivalence():
    rng = random.Random(606)
    start = time.monotonic()
    failures = []
    for case in range(100):
        I = random_ideal(rng)
        res = binomial_part_laurent(I)
        if not all(res.certificates):
            failures.append((case, "certificate"))
            continue
        found = brute_force_binomials(I, 4)
        if res.status == UNIT_LAURENT:
            continue  # the whole Laurent ring: nothing to cross-check
        for b in found:
            w = tuple(x - y for x, y in zip(b.u, b.v))
            if res.lambda_of(w) != b.lam:
                failures.append((case, b))
    elapsed = time.monotonic() - start
    report("6 oracle equivalence", not failures,
           f"100 cases {elapsed:.1f}s {failures[:3]}")


def test_criterion_7_lattice_algebra():
    rng = random.Random(707)
    ok = True
    for _ in range(200):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        A = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        U = intlat.identity(m)
        for _ in range(3 * m):
            if m < 2:
                break
            i, j = rng.sample(range(m), 2)
            q = rng.randint(-3, 3)
            for t in range(m):
                U[i][t] += q * U[j][t]
        ok &= intlat.hnf(A)[0] == intlat.hnf(intlat.mat_mul(U, A))[0]
    delta = Fraction(3, 4)
    for _ in range(60):
        n = rng.randint(1, 5)
        while True:
            B = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            if intlat.det(B) != 0:
                break
        out = intlat.lll(B, delta)
        norms, mu = _gso(out)
        for i in range(n):
            for j in range(i):
                ok &= abs(mu[i][j]) <= Fraction(1, 2)
        for k in range(1, n):
            ok &= norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]
        ok &= intlat.hnf_basis(out) == intlat.hnf_basis(B)
    report("7 lattice algebra", ok, "200 HNF + 60 LLL cases, exact")


def test_criterion_8_groebner_confluence():
    rng = random.Random(606)
    ok = True
    for _ in range(100):
        I = random_ideal(rng)
        n = I.ring.nvars
        grev = MonomialOrder.grevlex(n)
        basis = list(reduced_gb(I, grev))
        probe = LaurentPoly.constant(I.ring, 3)
        for g in I.poly_gens:
            probe = probe + g * LaurentPoly.variable(I.ring, 0)
        reference = normal_form(probe, basis, grev) if basis else probe
        for _ in range(3):
            rng.shuffle(basis)
            ok &= (normal_form(probe, basis, grev) if basis else probe) == reference
        for f in list(I.poly_gens)[:2] + [probe]:
            verdicts = {normal_form(f, I, o).is_zero()
                        for o in (grev, MonomialOrder.lex(n))}
            ok &= len(verdicts) == 1
    report("8 Groebner confluence", ok, "100 ideals, lex vs grevlex")


def test_criterion_9_tropical_correctness():
    rng = random.Random(505)
    ok = True
    checked_rays = 0
    for _ in range(50):
        I, rows, _ = random_lattice_ideal(rng, max_vars=4)
        n = I.ring.nvars
        J = saturate_by_variables(I)
        span = tropical_span(J)
        perp = intlat.kernel_lattice(rows)
        span_kernel = (intlat.kernel_lattice([list(v) for v in span.vectors])
                       if span.vectors else intlat.identity(n))
        perp_kernel = (intlat.kernel_lattice(perp)
                       if perp else intlat.identity(n))
        ok &= span_kernel == perp_kernel
        if len(rows) == n - 1:
            from binpart import tropical_curve_rays
            rays = tropical_curve_rays(J)
            for r in rays.rays:
                checked_rays += 1
                ok &= in_tropical_variety(J, r)
    report("9 tropical correctness", ok,
           f"50 spans exact, {checked_rays} rays re-verified")
