"""End-to-end binomial detection.

Given generators of an ideal I in Q[x_1..x_n], the pipeline passes to
the Laurent extension (saturation by the product of the variables),
reduces to an Artinian ideal through the span of the tropical variety,
computes the lattice of monomial relations of the multiplication
matrices there, and pulls the resulting binomials back.  Every emitted
generator is certified by an exact normal-form check against the
saturated ideal; the completeness flag qualifies whether the list is
provably everything (see :mod:`binpart.artinian`).

The brute-force oracle (normal forms of all monomial pairs up to a
degree) lives here too; the test-suite uses it as an independent check
of the lattice answers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import intlat
from .artinian import multiplication_matrices, quotient_basis, scalar_relation_lattice
from .config import CERTIFIED, DEFAULT_CONFIG, PipelineConfig, combine_flags
from .groebner import (
    IdealHandle,
    NotSaturatedError,
    eliminate,
    equal_ideals,
    is_unit_ideal,
    normal_form,
    reduced_gb,
    saturate_by_variables,
)
from .poly import Binomial, LaurentPoly
from .tropical import monomial_substitution, tropical_span

UNIT_LAURENT = "UNIT_LAURENT"
TRIVIAL = "TRIVIAL"
LATTICE = "LATTICE"


@dataclass(frozen=True)
class BinomialPartResult:
    """Binomial part of the Laurent extension as a partial character.

    ``lattice_basis`` rows are exponent vectors in the original
    variables, paired 1:1 with ``lambdas``; ``generators`` are the
    Laurent binomials x^c - lambda.  ``certificates`` records the
    exact normal-form-zero check of each generator (always all True;
    a failure would raise instead of reporting).
    """

    status: str
    lattice_basis: tuple[tuple[int, ...], ...]
    lambdas: tuple[Fraction, ...]
    generators: tuple[LaurentPoly, ...]
    completeness: str
    certificates: tuple[bool, ...]

    @property
    def rank(self) -> int:
        return len(self.lattice_basis)

    def lambda_of(self, e) -> Fraction | None:
        """Partial character on a member of the exponent lattice."""
        coords = intlat.solve_in_lattice([list(r) for r in self.lattice_basis], list(e))
        if coords is None:
            return None
        out = Fraction(1)
        for c, lam in zip(coords, self.lambdas):
            out *= lam ** c
        return out


def _clear_binomial(u, lam, ring) -> LaurentPoly:
    """x^u - lam as a polynomial: shift the exponents nonnegative."""
    shift = tuple(max(0, -min(x, 0)) for x in u)
    up = tuple(x + s for x, s in zip(u, shift))
    return LaurentPoly(ring.as_polynomial(), [(up, Fraction(1)), (shift, -lam)])


def binomial_part_laurent(
    I: IdealHandle, config: PipelineConfig = DEFAULT_CONFIG
) -> BinomialPartResult:
    """Generators of the binomial part of the Laurent extension of I."""
    ring = I.ring
    n = ring.nvars
    J = saturate_by_variables(I)
    if is_unit_ideal(J):
        return BinomialPartResult(UNIT_LAURENT, (), (), (), CERTIFIED, ())
    span = tropical_span(J, config)
    if len(span.vectors) == n:
        return BinomialPartResult(TRIVIAL, (), (), (), span.completeness, ())
    if span.vectors:
        B = intlat.kernel_lattice([list(v) for v in span.vectors])
    else:
        B = intlat.identity(n)
    m = len(B)
    if m == n:
        K = J
    else:
        W = intlat.unimodular_completion(B)
        rotated = saturate_by_variables(monomial_substitution(J, W))
        K = eliminate(rotated, tuple(range(m)))
        K.laurent_saturated = True
    rel = scalar_relation_lattice(multiplication_matrices(K, quotient_basis(K)), config)
    flag = combine_flags(span.completeness, rel.completeness)
    laurent_ring = ring.as_laurent()
    basis = []
    lambdas = []
    gens = []
    certs = []
    for c, lam in zip(rel.basis, rel.lambdas):
        u = tuple(sum(c[j] * B[j][i] for j in range(m)) for i in range(n))
        basis.append(u)
        lambdas.append(lam)
        gens.append(LaurentPoly(laurent_ring,
                                [(u, Fraction(1)), ((0,) * n, -lam)]))
        ok = normal_form(_clear_binomial(u, lam, ring), J).is_zero()
        if not ok:
            raise AssertionError("pipeline produced an uncertified generator")
        certs.append(ok)
    status = LATTICE if basis else TRIVIAL
    return BinomialPartResult(status, tuple(basis), tuple(lambdas), tuple(gens),
                              flag, tuple(certs))


# -- monomials ----------------------------------------------------------------


def contains_monomial(I: IdealHandle) -> bool:
    """True iff (I : (x_1...x_n)^infinity) is the unit ideal."""
    return is_unit_ideal(saturate_by_variables(I))


# -- brute-force oracle ---------------------------------------------------------


def _monomials_up_to(ring, D: int):
    """All exponent vectors of total degree <= D, canonically ordered."""
    n = ring.nvars
    out = []

    def rec(prefix, remaining):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for d in range(remaining + 1):
            rec(prefix + [d], remaining - d)

    rec([], D)
    out.sort(key=lambda e: (sum(e),) + tuple(-x for x in reversed(e[1:])), reverse=True)
    return out


def brute_force_binomials(I: IdealHandle, D: int) -> list[Binomial]:
    """All binomials x^u - lambda x^v with deg <= D and nonzero normal forms.

    Pairs whose normal forms are both zero are differences of ideal
    monomials and deliberately excluded (monomial containment is its
    own operation), matching the lattice-plus-character answers.
    """
    if D < 1:
        raise ValueError("degree bound must be at least 1")
    ring = I.ring
    monos = _monomials_up_to(ring, D)
    groups: dict[tuple, list] = {}
    for e in monos:
        nf = normal_form(LaurentPoly.monomial(ring, e), I)
        if nf.is_zero():
            continue
        lead = nf.terms[0][1]
        shape = tuple((exp, c / lead) for exp, c in nf.terms)
        groups.setdefault(shape, []).append((e, lead))
    out = []
    for members in groups.values():
        for a in range(len(members)):
            for b in range(a + 1, len(members)):
                (u, cu), (v, cv) = members[a], members[b]
                # nf(x^u)/cu == nf(x^v)/cv, so x^u - (cu/cv) x^v is in I
                out.append(Binomial(u, v, cu / cv))
    out.sort(key=lambda t: (sum(t.u) + sum(t.v), t.u, t.v))
    return out


# -- the decision operation -----------------------------------------------------


def _unit_witness(I: IdealHandle, config: PipelineConfig):
    """A certified binomial of I itself when the Laurent extension is unit.

    Escalates the degree bound; existence is guaranteed but without an
    a priori degree bound, so the cap is configurable.
    """
    ring = I.ring
    for D in range(1, config.witness_degree_cap + 1):
        monos = _monomials_up_to(ring, D)
        nfs = {e: normal_form(LaurentPoly.monomial(ring, e), I) for e in monos}
        for a in range(len(monos)):
            for b in range(a + 1, len(monos)):
                u, v = monos[a], monos[b]
                fu, fv = nfs[u], nfs[v]
                if fu.is_zero() and fv.is_zero():
                    return LaurentPoly(ring, [(u, Fraction(1)), (v, Fraction(-1))])
                if fu.is_zero() or fv.is_zero():
                    continue
                if len(fu.terms) == len(fv.terms):
                    lam = fu.terms[0][1] / fv.terms[0][1]
                    if all(eu == ev and cu == lam * cv
                           for (eu, cu), (ev, cv) in zip(fu.terms, fv.terms)):
                        return LaurentPoly(ring, [(u, Fraction(1)), (v, -lam)])
    raise RuntimeError(
        f"witness degree cap {config.witness_degree_cap} exhausted; a binomial "
        "exists in I but was not found within the bound"
    )


def contains_binomial(
    I: IdealHandle, config: PipelineConfig = DEFAULT_CONFIG
):
    """Decide binomial containment; positive answers carry a witness.

    Returns (answer, witness, result): the witness is a binomial in the
    polynomial ideal I itself with normal form zero, obtained from a
    Laurent generator by monomial clearing.  Negative answers inherit
    the completeness flag of ``result``.
    """
    res = binomial_part_laurent(I, config)
    if res.status == TRIVIAL:
        return False, None, res
    if res.status == UNIT_LAURENT:
        witness = _unit_witness(I, config)
        if not normal_form(witness, I).is_zero():
            raise AssertionError("witness failed certification")
        return True, witness, res
    u, lam = res.lattice_basis[0], res.lambdas[0]
    cleared = _clear_binomial(u, lam, I.ring)
    product = LaurentPoly.monomial(I.ring, (1,) * I.ring.nvars)
    witness = cleared
    for _ in range(config.witness_clear_cap + 1):
        if normal_form(witness, I).is_zero():
            return True, witness, res
        witness = witness * product
    raise RuntimeError(
        f"clearing cap {config.witness_clear_cap} exhausted while moving a "
        "Laurent binomial into I"
    )


def binomial_part_contract(
    I: IdealHandle, config: PipelineConfig = DEFAULT_CONFIG
) -> list[LaurentPoly]:
    """Generators of Bin(I) in the polynomial ring, for saturated I.

    Requires (I : x_1...x_n) = I, equivalently I equals its saturation;
    then Bin(I) is the contraction of the Laurent binomial part, i.e.
    the saturation of the cleared generators, returned as its reduced
    Groebner basis (a binomial basis).
    """
    Isat = saturate_by_variables(I)
    if not equal_ideals(I, Isat):
        raise NotSaturatedError(
            "(I : x_1...x_n) != I: the contraction formula is unavailable"
        )
    if is_unit_ideal(I):
        return [LaurentPoly.constant(I.ring, 1)]
    res = binomial_part_laurent(I, config)
    if not res.generators:
        return []
    cleared = [_clear_binomial(u, lam, I.ring)
               for u, lam in zip(res.lattice_basis, res.lambdas)]
    contraction = saturate_by_variables(IdealHandle(I.ring, cleared))
    return list(reduced_gb(contraction))
