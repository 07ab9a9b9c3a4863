"""Finding binomials in polynomial ideals over the rationals.

Decides whether an ideal of Q[x_1..x_n] contains a nonzero binomial
and computes generators of the binomial part of its Laurent extension,
by a tropical reduction to an Artinian quotient followed by a
commuting-matrix relation-lattice computation.  All positive answers
are certified exactly; see the README for the completeness caveat on
negative answers.
"""

from ._kernel import KERNEL_NAME, available as available_kernels, use as use_kernel
from .config import CERTIFIED, EXHAUSTED, HEURISTIC, DEFAULT_CONFIG, PipelineConfig
from .groebner import (
    IdealHandle,
    NotSaturatedError,
    eliminate,
    equal_ideals,
    initial_ideal_proper_on_torus,
    is_unit_ideal,
    krull_dimension,
    normal_form,
    reduced_gb,
    saturate,
    saturate_by_variables,
)
from .artinian import (
    MulMatrices,
    QuotientBasis,
    ScalarRelationLattice,
    multiplication_matrices,
    quotient_basis,
    radical_binomial_lattice,
    scalar_relation_lattice,
)
from .pipeline import (
    LATTICE,
    TRIVIAL,
    UNIT_LAURENT,
    BinomialPartResult,
    binomial_part_contract,
    binomial_part_laurent,
    brute_force_binomials,
    contains_binomial,
    contains_monomial,
)
from .poly import Binomial, LaurentPoly, PolyParseError, initial_form, is_binomial, parse_poly
from .rings import MonomialOrder, Ring
from .tropical import (
    RaySet,
    SpanBasis,
    TropicalFallbackExhausted,
    find_primitive_tropical_vector,
    in_tropical_variety,
    tropical_curve_rays,
    tropical_span,
)

__version__ = "0.1.0"

__all__ = [
    "Binomial",
    "BinomialPartResult",
    "CERTIFIED",
    "DEFAULT_CONFIG",
    "EXHAUSTED",
    "HEURISTIC",
    "IdealHandle",
    "KERNEL_NAME",
    "LATTICE",
    "LaurentPoly",
    "MonomialOrder",
    "MulMatrices",
    "NotSaturatedError",
    "PipelineConfig",
    "PolyParseError",
    "QuotientBasis",
    "RaySet",
    "Ring",
    "ScalarRelationLattice",
    "SpanBasis",
    "TRIVIAL",
    "TropicalFallbackExhausted",
    "UNIT_LAURENT",
    "available_kernels",
    "binomial_part_contract",
    "binomial_part_laurent",
    "brute_force_binomials",
    "contains_binomial",
    "contains_monomial",
    "eliminate",
    "equal_ideals",
    "find_primitive_tropical_vector",
    "in_tropical_variety",
    "initial_form",
    "initial_ideal_proper_on_torus",
    "is_binomial",
    "is_unit_ideal",
    "krull_dimension",
    "multiplication_matrices",
    "normal_form",
    "parse_poly",
    "quotient_basis",
    "radical_binomial_lattice",
    "reduced_gb",
    "saturate",
    "saturate_by_variables",
    "scalar_relation_lattice",
    "tropical_curve_rays",
    "tropical_span",
    "use_kernel",
]
