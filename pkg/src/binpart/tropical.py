"""Tropical membership, curve rays and span computation.

The tropical variety of a Laurent ideal is the set of weights for
which the initial ideal stays proper over the torus.  For
one-dimensional ideals the rays are recovered from the Newton polygons
of all pairwise eliminations, assembled into full-dimensional
candidates and then verified one by one with the exact initial-ideal
test, so every reported ray carries an exact certificate.  The span of
the tropical variety is computed by the recursion: find one primitive
tropical vector, rotate it onto the last coordinate axis by a
unimodular monomial substitution, eliminate that coordinate, recurse.

Completeness caveat: the pairwise-projection assembly is not certified
complete in general, so any result that needed ray assembly carries
the ``heuristic-complete`` flag; ``fallback-exhausted`` marks runs
where even the bounded exhaustive search could not settle the rays.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import intlat
from .config import CERTIFIED, DEFAULT_CONFIG, EXHAUSTED, HEURISTIC, PipelineConfig, combine_flags
from .groebner import (
    IdealHandle,
    eliminate,
    initial_ideal_proper_on_torus,
    is_unit_ideal,
    krull_dimension,
    reduced_gb,
    saturate_by_variables,
)
from .poly import LaurentPoly
from .rings import Ring


class TropicalFallbackExhausted(RuntimeError):
    """Neither projection assembly nor the bounded search settled the rays."""


@dataclass(frozen=True)
class RaySet:
    """Verified primitive ray generators of a one-dimensional tropical variety."""

    rays: tuple[tuple[int, ...], ...]
    completeness: str


@dataclass(frozen=True)
class SpanBasis:
    """Integer vectors spanning span(T(I)) over Q."""

    vectors: tuple[tuple[int, ...], ...]
    completeness: str


def in_tropical_variety(I: IdealHandle, w) -> bool:
    """Exact membership of the weight vector in T(I).

    ``I`` is taken with its Laurent semantics (it is saturated by the
    product of the variables if not already).
    """
    J = saturate_by_variables(I)
    return initial_ideal_proper_on_torus(J, tuple(int(x) for x in w))


# -- Newton polygons in two variables ----------------------------------------


def _primitive2(a: int, b: int) -> tuple[int, int]:
    g = gcd(a, b)
    return (a // g, b // g)


def _convex_hull(points):
    """Monotone chain; returns the hull counterclockwise."""
    pts = sorted(set(points))
    if len(pts) == 1:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def newton_edge_normals(f: LaurentPoly) -> frozenset[tuple[int, int]]:
    """Outer primitive normals of the Newton polygon edges (max convention).

    For a segment both perpendicular directions come back; for a single
    point the set is empty.
    """
    pts = [e for e, _ in f.terms]
    if not pts:
        return frozenset()
    hull = _convex_hull(pts)
    if len(hull) == 1:
        return frozenset()
    if len(hull) == 2:
        d = (hull[1][0] - hull[0][0], hull[1][1] - hull[0][1])
        p = _primitive2(d[1], -d[0])
        return frozenset({p, (-p[0], -p[1])})
    out = set()
    for a, b in zip(hull, hull[1:] + hull[:1]):
        d = (b[0] - a[0], b[1] - a[1])
        out.add(_primitive2(d[1], -d[0]))
    return frozenset(out)


# -- ray assembly -------------------------------------------------------------


def _pair_eliminant(I: IdealHandle, i: int, j: int, max_degree: int = 40):
    """A smallest-degree nonzero element of I intersect Q[x_i, x_j].

    Found by linear algebra instead of an elimination order: normal
    forms of the monomials x_i^a x_j^b (by increasing total degree) are
    fed into an online row echelon; the first dependency gives the
    element.  Any nonzero member of the projection ideal yields a valid
    candidate superset for the projected tropical rays, so a single
    element suffices.  Returns None when no member shows up within the
    degree cap (the caller falls back to bounded search).
    """
    from .groebner import normal_form as nf

    ring = I.ring
    n = ring.nvars
    two = Ring(("u", "v"))
    pivots = []  # (lead standard monomial, vector dict, combo dict)
    monos = sorted(
        ((a, b) for a in range(max_degree + 1) for b in range(max_degree + 1)
         if 0 < a + b <= max_degree),
        key=lambda ab: (ab[0] + ab[1], ab[0]),
    )
    monos.insert(0, (0, 0))
    nf_cache: dict[tuple[int, int], dict] = {}
    for a, b in monos:
        if (a, b) == (0, 0):
            f = nf(LaurentPoly.constant(ring, 1), I)
        elif a > 0 and (a - 1, b) in nf_cache:
            prev = LaurentPoly(ring, list(nf_cache[(a - 1, b)].items()))
            f = nf(prev.shift(tuple(1 if t == i else 0 for t in range(n))), I)
        else:
            exp = tuple(a if t == i else b if t == j else 0 for t in range(n))
            f = nf(LaurentPoly.monomial(ring, exp), I)
        nf_cache[(a, b)] = dict(f.terms)
        vec = dict(f.terms)
        combo = {(a, b): Fraction(1)}
        for lead, pvec, pcombo in pivots:
            c = vec.get(lead)
            if c:
                for k, val in pvec.items():
                    nv = vec.get(k, Fraction(0)) - c * val
                    if nv:
                        vec[k] = nv
                    else:
                        vec.pop(k, None)
                for k, val in pcombo.items():
                    nv = combo.get(k, Fraction(0)) - c * val
                    if nv:
                        combo[k] = nv
                    else:
                        combo.pop(k, None)
        if not vec:
            return LaurentPoly(two, [((a2, b2), c) for (a2, b2), c in combo.items()])
        lead = max(vec)
        inv = 1 / vec[lead]
        pivots.append((lead,
                       {k: v * inv for k, v in vec.items()},
                       {k: v * inv for k, v in combo.items()}))
    return None


def _pairwise_ray_constraints(I: IdealHandle):
    """For each coordinate pair, candidate 2D rays of the projected variety.

    The projection of T(I) to coordinates (i, j) is the tropical
    variety of the projection ideal, which is contained in the edge
    normals of the Newton polygon of each of its elements.  An empty
    set forces the projection to the origin; None marks a pair where no
    member was found within the degree cap.
    """
    n = I.ring.nvars
    constraints = {}
    for i, j in itertools.combinations(range(n), 2):
        f = _pair_eliminant(I, i, j)
        constraints[(i, j)] = None if f is None else newton_edge_normals(f)
    return constraints


def _consistent(r, constraints) -> bool:
    for (i, j), R in constraints.items():
        a, b = r[i], r[j]
        if a == 0 and b == 0:
            continue
        if R is None:
            continue
        if _primitive2(a, b) not in R:
            return False
    return True


def _assemble_candidates(constraints, n: int, cap: int):
    """Candidate primitive vectors consistent with the 2D projections.

    Anchors at the first support coordinate: its pair constraints fix
    every later coordinate up to finitely many ratio choices.  Returns
    (candidates, determined) where determined=False means some branch
    was unconstrained or exceeded ``cap``.
    """
    forced_zero = set()
    for (i, j), R in constraints.items():
        if R is not None and not R:
            forced_zero.update((i, j))
    free = [i for i in range(n) if i not in forced_zero]
    candidates = set()
    determined = True
    for pos, i0 in enumerate(free):
        for sign in (1, -1):
            option_lists = []
            bad = False
            unconstrained = False
            for k in free[pos + 1:]:
                key = (i0, k) if i0 < k else (k, i0)
                R = constraints[key]
                if R is None:
                    unconstrained = True
                    break
                opts = set()
                for u in R:
                    a, b = u if i0 < k else (u[1], u[0])
                    if a != 0 and (a > 0) == (sign > 0):
                        opts.add(Fraction(b, a))
                if not opts:
                    bad = True
                    break
                option_lists.append(sorted(opts))
            if unconstrained:
                determined = False
                continue
            if bad:
                continue
            total = 1
            for opts in option_lists:
                total *= len(opts)
            if total > cap:
                determined = False
                continue
            for choice in itertools.product(*option_lists):
                vec = [Fraction(0)] * n
                vec[i0] = Fraction(sign)
                for k, q in zip(free[pos + 1:], choice):
                    vec[k] = sign * q
                den = 1
                for q in vec:
                    den = den * q.denominator // gcd(den, q.denominator)
                ints = [int(q * den) for q in vec]
                g = 0
                for x in ints:
                    g = gcd(g, x)
                r = tuple(x // g for x in ints)
                if _consistent(r, constraints):
                    candidates.add(r)
    return candidates, determined


def _fallback_candidates(constraints, n: int, bound: int):
    for vec in itertools.product(range(-bound, bound + 1), repeat=n):
        if not any(vec):
            continue
        g = 0
        for x in vec:
            g = gcd(g, x)
        if g != 1:
            continue
        if _consistent(vec, constraints):
            yield vec


def tropical_curve_rays(I: IdealHandle, config: PipelineConfig = DEFAULT_CONFIG) -> RaySet:
    """Primitive generators of the rays of a one-dimensional T(I).

    Every returned ray passes the exact initial-ideal membership test.
    Raises :class:`TropicalFallbackExhausted` when no ray can be
    certified at all.
    """
    J = saturate_by_variables(I)
    d = krull_dimension(J)
    if d != 1:
        raise ValueError(f"tropical curve expects a one-dimensional ideal, got dimension {d}")
    n = J.ring.nvars
    if n == 1:
        verified = [r for r in [(1,), (-1,)] if initial_ideal_proper_on_torus(J, r)]
        return RaySet(tuple(sorted(verified, reverse=True)), HEURISTIC)
    constraints = _pairwise_ray_constraints(J)
    candidates, determined = _assemble_candidates(constraints, n, config.assembly_cap)
    verified = {r for r in candidates if initial_ideal_proper_on_torus(J, r)}
    completeness = HEURISTIC
    if not verified or not determined:
        for r in _fallback_candidates(constraints, n, config.fallback_bound):
            if r not in verified and initial_ideal_proper_on_torus(J, r):
                verified.add(r)
        completeness = EXHAUSTED
        if not verified:
            raise TropicalFallbackExhausted(
                f"fallback bound exhausted (bound {config.fallback_bound}): "
                "no tropical ray could be certified"
            )
    return RaySet(tuple(sorted(verified, reverse=True)), completeness)


# -- primitive vector and span -------------------------------------------------


def _random_affine_form(ring: Ring, rng: random.Random, width: int) -> LaurentPoly:
    n = ring.nvars
    while True:
        coeffs = [rng.randint(-width, width) for _ in range(n + 1)]
        if any(coeffs[1:]):
            break
    terms = [((0,) * n, Fraction(coeffs[0]))]
    for i in range(n):
        if coeffs[i + 1]:
            exp = tuple(1 if j == i else 0 for j in range(n))
            terms.append((exp, Fraction(coeffs[i + 1])))
    return LaurentPoly(ring, terms)


def find_primitive_tropical_vector(
    I: IdealHandle, config: PipelineConfig = DEFAULT_CONFIG
) -> tuple[tuple[int, ...], str]:
    """A primitive vector of T(I) minus the origin, with completeness flag.

    Cuts the ideal down to a curve with random affine-linear forms
    (retrying until the dimension drops to one).  The curve only
    generates candidates; each candidate is verified by the exact
    initial-ideal test against I itself (every true curve ray lies in
    T(I), so a verified candidate always exists when the assembly was
    complete).  Deterministic for a fixed seed.
    """
    J = saturate_by_variables(I)
    if is_unit_ideal(J):
        raise ValueError("empty tropical variety: the Laurent extension is the unit ideal")
    d = krull_dimension(J)
    if d <= 0:
        raise ValueError("tropical variety of a zero-dimensional ideal is the origin")
    if d == 1:
        rays = tropical_curve_rays(J, config)
        return rays.rays[0], rays.completeness
    n = J.ring.nvars
    rng = random.Random(config.seed)
    for attempt in range(config.cut_retry_budget):
        width = 2 + attempt
        forms = [_random_affine_form(J.ring, rng, width) for _ in range(d - 1)]
        K = IdealHandle(J.ring, J.poly_gens + tuple(forms))
        Ksat = saturate_by_variables(K)
        if is_unit_ideal(Ksat) or krull_dimension(Ksat) != 1:
            continue
        constraints = _pairwise_ray_constraints(Ksat)
        candidates, determined = _assemble_candidates(constraints, n, config.assembly_cap)
        if not determined:
            candidates.update(_fallback_candidates(constraints, n, config.fallback_bound))
        for r in sorted(candidates, reverse=True):
            if initial_ideal_proper_on_torus(J, r):
                return r, HEURISTIC
    raise RuntimeError(
        f"retry budget exhausted ({config.cut_retry_budget}) while cutting down to a curve"
    )


def monomial_substitution(I: IdealHandle, M) -> IdealHandle:
    """Image of I under the coordinate change y_i = prod_j x_j^{M_ij}.

    M must be unimodular; exponents transform by (M^T)^{-1} = (M^{-1})^T.
    The result is cleared to polynomial generators (same Laurent ideal).
    """
    n = I.ring.nvars
    Minv = intlat.inverse_unimodular(M)
    B = intlat.transpose(Minv)
    ring = Ring(tuple(f"y{i+1}" for i in range(n)), laurent=True)
    gens = []
    for g in I.poly_gens:
        gens.append(LaurentPoly(ring, [(tuple(intlat.mat_vec(B, list(e))), c)
                                       for e, c in g.terms]))
    return IdealHandle(ring.as_polynomial(), gens)


def tropical_span(I: IdealHandle, config: PipelineConfig = DEFAULT_CONFIG) -> SpanBasis:
    """Basis of span(T(I)) over Q, by the rotate-and-eliminate recursion."""
    J = saturate_by_variables(I)
    if is_unit_ideal(J):
        return SpanBasis((), CERTIFIED)
    d = krull_dimension(J)
    if d == 0:
        return SpanBasis((), CERTIFIED)
    v, flag = find_primitive_tropical_vector(J, config)
    n = J.ring.nvars
    if n == 1:
        return SpanBasis((tuple(v),), flag)
    M = intlat.unimodular_extension(list(v))
    Jrot = monomial_substitution(J, M)
    Jrot_sat = saturate_by_variables(Jrot)
    sub = eliminate(Jrot_sat, tuple(range(n - 1)))
    sub.laurent_saturated = True
    inner = tropical_span(sub, config)
    Minv = intlat.inverse_unimodular(M)
    vectors = [tuple(v)]
    for u in inner.vectors:
        vectors.append(tuple(intlat.mat_vec(Minv, list(u) + [0])))
    return SpanBasis(tuple(vectors), combine_flags(flag, inner.completeness))
