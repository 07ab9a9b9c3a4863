"""Buchberger engine: reduced Groebner bases and the ideal operations
built on them (normal forms, saturation, elimination, Krull dimension,
initial-ideal properness over the torus).

All arithmetic is exact.  Polynomials enter as :class:`LaurentPoly`;
internally the reduction kernel works on integer-numerator raw forms
(see :mod:`binpart._reduce_py`).  Ideals are held by
:class:`IdealHandle`, which caches one reduced basis per monomial
order.  The cache only memoizes pure computations, so concurrent use is
at worst redundant work.
"""

from __future__ import annotations

import heapq
import itertools
from fractions import Fraction
from math import gcd, lcm

from . import _kernel as K
from .poly import LaurentPoly
from .rings import MonomialOrder, Ring


class NotSaturatedError(ValueError):
    """A contract required (I : f) = I and the input is not saturated."""


# -- conversions -----------------------------------------------------------


def poly_to_raw(f: LaurentPoly, order: MonomialOrder):
    if any(e < 0 for exp, _ in f.terms for e in exp):
        raise ValueError("Laurent exponents must be cleared before Groebner work")
    den = 1
    for _, c in f.terms:
        den = lcm(den, c.denominator)
    pairs = [(exp, int(c * den)) for exp, c in f.terms]
    terms = K.raw_from_pairs(pairs, order.rows)
    return K.normalize(den, terms)


def raw_to_poly(raw, ring: Ring) -> LaurentPoly:
    den, terms = raw
    return LaurentPoly(ring, [(e, Fraction(v, den)) for _, e, v in terms])


def raw_monic(raw):
    """Scale so the lead coefficient is 1 (denominator = lead numerator)."""
    _, terms = raw
    if not terms:
        return raw
    return K.normalize(terms[0][2], terms)


def raw_primitive(raw):
    """Content-free integer representative with positive lead.

    Basis elements only matter up to a rational scalar; stripping the
    content after every reduction keeps Buchberger's integers small.
    """
    _, terms = raw
    if not terms:
        return (1, [])
    g = 0
    for _, _, v in terms:
        g = gcd(g, v)
    if terms[0][2] < 0:
        g = -g
    if g != 1:
        terms = [(k, e, v // g) for k, e, v in terms]
    return (1, terms)


def _is_homogeneous_raw(raw) -> bool:
    _, terms = raw
    if not terms:
        return True
    d = sum(terms[0][1])
    return all(sum(e) == d for _, e, _ in terms)


# -- Buchberger ------------------------------------------------------------


def _disjoint(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _gm_update(G, leads, pairs, h_idx, rows):
    """Gebauer-Moeller pair update after appending index ``h_idx``.

    ``pairs`` maps (i, j) with i < j to the lcm exponent.  Applies the
    product criterion and the chain criterion.
    """
    lh = leads[h_idx]
    cand = [(g, K.exp_lcm(lh, leads[g])) for g in range(h_idx)]
    kept = []
    while cand:
        g1, l1 = cand.pop()
        if _disjoint(lh, leads[g1]) or (
            not any(K.divides(l2, l1) for _, l2 in cand)
            and not any(K.divides(l2, l1) for _, l2 in kept)
        ):
            kept.append((g1, l1))
    new_pairs = {}
    for (i, j), l in pairs.items():
        if (
            not K.divides(lh, l)
            or K.exp_lcm(leads[i], lh) == l
            or K.exp_lcm(leads[j], lh) == l
        ):
            new_pairs[(i, j)] = l
    for g1, l1 in kept:
        if not _disjoint(lh, leads[g1]):
            new_pairs[(g1, h_idx)] = l1
    return new_pairs


def buchberger(raws, order: MonomialOrder):
    """Groebner basis (raw form, not reduced) of the given raw polys."""
    rows = order.rows
    inputs = [raw_primitive(f) for f in raws if f[1]]
    if not order.is_global():
        if not all(_is_homogeneous_raw(f) for f in inputs):
            raise ValueError("non-global order requires homogeneous input")
    G = []
    leads = []
    pairs = {}
    for f in inputs:
        G.append(f)
        leads.append(f[1][0][1])
        pairs = _gm_update(G, leads, pairs, len(G) - 1, rows)
    heap = [(K.exp_key(l, rows), ij) for ij, l in pairs.items()]
    heapq.heapify(heap)
    while heap:
        _, ij = heapq.heappop(heap)
        if ij not in pairs:
            continue
        del pairs[ij]
        i, j = ij
        s = K.spoly(G[i], G[j], rows)
        if not s[1]:
            continue
        den, r = K.normal_form(s[0], s[1], G)
        if not r:
            continue
        G.append(raw_primitive((den, r)))
        leads.append(r[0][1])
        pairs = _gm_update(G, leads, pairs, len(G) - 1, rows)
        lk = K.exp_key(leads[-1], rows)
        for (a, b), l in pairs.items():
            if b == len(G) - 1:
                heapq.heappush(heap, (K.exp_key(l, rows), (a, b)))
    return G


def reduce_basis(G, order: MonomialOrder):
    """Minimalize and tail-reduce a Groebner basis; sorted by lead key."""
    rows = order.rows
    G = [raw_primitive(g) for g in G if g[1]]
    G.sort(key=lambda g: K.exp_key(g[1][0][1], rows))
    minimal = []
    for g in G:
        le = g[1][0][1]
        if not any(K.divides(m[1][0][1], le) for m in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        den, terms = K.normal_form(g[0], g[1], others)
        if terms:
            reduced.append((den, terms))
    reduced.sort(key=lambda g: K.exp_key(g[1][0][1], rows), reverse=True)
    return [raw_monic(g) for g in reduced]


# -- ideal handles ----------------------------------------------------------


def _clear_to_poly(f: LaurentPoly) -> LaurentPoly:
    """Multiply by the minimal monomial making all exponents nonnegative."""
    if f.is_zero():
        return LaurentPoly.zero(f.ring.as_polynomial())
    n = f.ring.nvars
    shift = tuple(max(0, -min(e[i] for e, _ in f.terms)) for i in range(n))
    return LaurentPoly(f.ring.as_polynomial(),
                       [(tuple(a + s for a, s in zip(e, shift)), c)
                        for e, c in f.terms])


class IdealHandle:
    """Generators plus a cache of reduced Groebner bases per order.

    Laurent generators are cleared to polynomials by monomial
    multiplication at construction (this leaves the Laurent extension
    unchanged; the polynomial ideal itself is only used through the
    saturation-aware operations below).
    """

    def __init__(self, ring: Ring, gens, laurent_saturated: bool | None = None):
        self.ring = ring.as_polynomial()
        gens = tuple(gens)
        for g in gens:
            if isinstance(g, LaurentPoly) and g.ring.variables != ring.variables:
                raise ValueError("generator from a different ring")
        self.gens = gens
        self.poly_gens = tuple(_clear_to_poly(g) for g in gens if not g.is_zero())
        self._gb_cache: dict[tuple, tuple] = {}
        self._sat_cache: dict[LaurentPoly, IdealHandle] = {}
        self.laurent_saturated = laurent_saturated

    @classmethod
    def from_strings(cls, ring: Ring, exprs) -> "IdealHandle":
        from .poly import parse_poly

        return cls(ring, [parse_poly(s, ring) for s in exprs])

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.gens) or "0"
        return f"<ideal ({gens}) in {self.ring!r}>"

    def _reduced_raw(self, order: MonomialOrder):
        key = order.rows
        hit = self._gb_cache.get(key)
        if hit is None:
            raws = [poly_to_raw(g, order) for g in self.poly_gens]
            basis = reduce_basis(buchberger(raws, order), order)
            polys = tuple(raw_to_poly(g, self.ring) for g in basis)
            hit = (polys, basis)
            self._gb_cache[key] = hit
        return hit


def reduced_gb(I: IdealHandle, order: MonomialOrder | None = None):
    """The unique reduced Groebner basis (monic), cached per order."""
    if order is None:
        order = MonomialOrder.grevlex(I.ring.nvars)
    return I._reduced_raw(order)[0]


def normal_form(f: LaurentPoly, I, order: MonomialOrder | None = None) -> LaurentPoly:
    """Unique remainder of ``f`` modulo the reduced basis of ``I``.

    ``I`` may be an :class:`IdealHandle` or an explicit basis (sequence
    of polynomials, assumed a Groebner basis for ``order``).
    """
    if order is None:
        n = f.ring.nvars
        order = MonomialOrder.grevlex(n)
    if isinstance(I, IdealHandle):
        reducers = I._reduced_raw(order)[1]
        ring = I.ring
    else:
        reducers = [poly_to_raw(g, order) for g in I if not g.is_zero()]
        ring = f.ring.as_polynomial()
    raw = poly_to_raw(f, order)
    if not raw[1]:
        return LaurentPoly.zero(ring)
    return raw_to_poly(K.normal_form(raw[0], raw[1], reducers), ring)


def is_unit_ideal(I: IdealHandle) -> bool:
    gb = reduced_gb(I)
    return len(gb) == 1 and gb[0].is_constant()


def is_zero_ideal(I: IdealHandle) -> bool:
    return not reduced_gb(I)


def equal_ideals(I: IdealHandle, J: IdealHandle) -> bool:
    """Exact equality via uniqueness of the reduced Groebner basis."""
    return reduced_gb(I) == reduced_gb(J)


def contains_poly(I: IdealHandle, f: LaurentPoly) -> bool:
    return normal_form(f, I).is_zero()


# -- elimination and saturation ---------------------------------------------


def eliminate(I: IdealHandle, keep: tuple[int, ...]) -> IdealHandle:
    """Generators of I intersected with Q[variables in ``keep``].

    Returns a handle in the subring of the kept variables.  For Laurent
    semantics the caller must saturate by the dropped variables first.
    """
    n = I.ring.nvars
    keep = tuple(sorted(keep))
    drop = tuple(i for i in range(n) if i not in keep)
    if not drop:
        return I
    order = MonomialOrder.block(drop, n)
    gb = reduced_gb(I, order)
    sub = I.ring.subring(keep)
    kept_polys = []
    for g in gb:
        if all(all(e[i] == 0 for i in drop) for e, _ in g.terms):
            kept_polys.append(
                LaurentPoly(sub, [(tuple(e[i] for i in keep), c) for e, c in g.terms])
            )
    return IdealHandle(sub, kept_polys)


def _lift(f: LaurentPoly, big: Ring, positions: tuple[int, ...]) -> LaurentPoly:
    """Reinterpret ``f`` in ``big`` with its variables at ``positions``."""
    n = big.nvars
    out = []
    for e, c in f.terms:
        exp = [0] * n
        for i, pos in enumerate(positions):
            exp[pos] = e[i]
        out.append((tuple(exp), c))
    return LaurentPoly(big, out)


def saturate(I: IdealHandle, f: LaurentPoly) -> IdealHandle:
    """The saturation (I : f^infinity) via t*f - 1 and elimination of t."""
    if f.is_zero():
        raise ValueError("cannot saturate by zero")
    if any(e < 0 for exp, _ in f.terms for e in exp):
        raise ValueError("saturate expects a polynomial, not a Laurent element")
    f = LaurentPoly(I.ring, f.terms)
    hit = I._sat_cache.get(f)
    if hit is not None:
        return hit
    n = I.ring.nvars
    big = I.ring.extended(I.ring.fresh_name("t"))
    positions = tuple(range(n))
    t = LaurentPoly.variable(big, n)
    gens = [_lift(g, big, positions) for g in I.poly_gens]
    gens.append(t * _lift(f, big, positions) - 1)
    J = eliminate(IdealHandle(big, gens), positions)
    out = IdealHandle(I.ring, [LaurentPoly(I.ring, g.terms) for g in J.gens])
    I._sat_cache[f] = out
    return out


def saturate_by_variables(I: IdealHandle) -> IdealHandle:
    """(I : (x_1...x_n)^infinity), one variable at a time."""
    if I.laurent_saturated:
        return I
    J = I
    for i in range(I.ring.nvars):
        J = saturate(J, LaurentPoly.variable(I.ring, i))
        if is_unit_ideal(J):
            break
    J.laurent_saturated = True
    return J


# -- dimension ---------------------------------------------------------------


def krull_dimension(I: IdealHandle) -> int:
    """Dimension of Q[x]/I; -1 for the unit ideal.

    Computed as the largest subset of variables that is independent
    modulo the leading-term ideal of the grevlex basis.
    """
    gb = reduced_gb(I)
    if len(gb) == 1 and gb[0].is_constant():
        return -1
    n = I.ring.nvars
    leads = [g.terms[0][0] for g in gb]
    supports = [frozenset(i for i in range(n) if e[i]) for e in leads]
    for size in range(n, -1, -1):
        for subset in itertools.combinations(range(n), size):
            s = set(subset)
            if not any(sup <= s for sup in supports):
                return size
    return 0


# -- initial ideals -----------------------------------------------------------


def _homogenize(I: IdealHandle):
    """Homogenize the grevlex basis with one extra last variable.

    Homogenizing a basis that is Groebner for a degree-compatible order
    yields the homogenization of the ideal itself.
    """
    gb = reduced_gb(I)
    big = I.ring.extended(I.ring.fresh_name("h"))
    out = []
    for g in gb:
        d = g.total_degree()
        out.append(LaurentPoly(big, [(e + (d - sum(e),), c) for e, c in g.terms]))
    return IdealHandle(big, out), big


def initial_forms_of_basis(I: IdealHandle, w: tuple[int, ...]):
    """Generators of the initial ideal in_w(I) (max convention)."""
    from .poly import initial_form

    n = I.ring.nvars
    if len(w) != n:
        raise ValueError("weight vector length does not match ring")
    if all(x == 0 for x in w):
        return list(reduced_gb(I))
    H, big = _homogenize(I)
    order = MonomialOrder.weight(tuple(w) + (0,), big.nvars)
    gb_h = reduced_gb(H, order)
    inis = []
    for g in gb_h:
        deh = LaurentPoly(I.ring, [(e[:-1], c) for e, c in g.terms])
        inis.append(initial_form(deh, w))
    return inis


def initial_ideal_proper_on_torus(I: IdealHandle, w) -> bool:
    """True iff in_w(I) extends to a proper ideal of the Laurent ring.

    ``I`` must be saturated with respect to the product of the
    variables for Laurent semantics.
    """
    w = tuple(int(x) for x in w)
    if len(w) != I.ring.nvars:
        raise ValueError("weight vector length does not match ring")
    gb = reduced_gb(I)
    if not gb:
        return True
    if len(gb) == 1 and gb[0].is_constant():
        return False
    inis = initial_forms_of_basis(I, w)
    J = IdealHandle(I.ring, inis)
    return not is_unit_ideal(saturate_by_variables(J))
