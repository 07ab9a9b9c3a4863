"""Tunable parameters and completeness flags shared across the pipeline."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# Completeness of a reported lattice of binomial exponents.  Soundness
# is always exact (every emitted generator is certified by a normal
# form); the flag qualifies only whether *all* binomials were found.
CERTIFIED = "certified-trivial"
HEURISTIC = "heuristic-complete"
EXHAUSTED = "fallback-exhausted"

_SEVERITY = {CERTIFIED: 0, HEURISTIC: 1, EXHAUSTED: 2}


def combine_flags(*flags: str) -> str:
    return max(flags, key=_SEVERITY.__getitem__)


@dataclass(frozen=True)
class PipelineConfig:
    """Knobs for the randomized and numeric parts of the computation.

    Identical config + identical input means identical output; all
    randomness is drawn from ``seed``.
    """

    seed: int = 0
    # exhaustive ray search bound when projections underdetermine rays
    fallback_bound: int = 10
    # retries for the random affine cuts in the curve reduction
    cut_retry_budget: int = 32
    # cap on assembled ray candidates before declaring underdetermined
    assembly_cap: int = 20000
    # degree escalation cap for a witness when the Laurent extension is unit
    witness_degree_cap: int = 8
    # cap on the monomial-clearing exponent for witnesses
    witness_clear_cap: int = 64
    # numeric discovery of matrix relations
    precision_start_bits: int = 128
    precision_max_bits: int = 4096
    lll_scale_bits: int = 20
    discovery_delta: Fraction = Fraction(99, 100)


DEFAULT_CONFIG = PipelineConfig()
