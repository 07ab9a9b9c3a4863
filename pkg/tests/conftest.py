"""Shared helpers: ideal builders and the seeded random corpora."""

import random
from fractions import Fraction

import pytest

from binpart import IdealHandle, LaurentPoly, Ring, intlat


def ideal(names, *exprs) -> IdealHandle:
    return IdealHandle.from_strings(Ring(tuple(names)), exprs)


def random_poly(ring: Ring, rng: random.Random, max_terms=4, max_degree=3):
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        while True:
            exp = tuple(rng.randint(0, max_degree) for _ in range(ring.nvars))
            if sum(exp) <= max_degree:
                break
        terms.append((exp, rng.choice([-3, -2, -1, 1, 2, 3])))
    return LaurentPoly(ring, terms)


def random_ideal(rng: random.Random, max_vars=3):
    names = ("x", "y", "z")[: rng.randint(1, max_vars)]
    ring = Ring(names)
    gens = [random_poly(ring, rng) for _ in range(rng.randint(1, 3))]
    return IdealHandle(ring, gens)


def random_lattice_ideal(rng: random.Random, max_vars=4):
    """A lattice ideal from a random rank-1 or rank-2 basis, entries <= 3.

    Returns (handle, basis rows, lambdas); the generators are the
    cleared binomials x^{b+} - lambda_b x^{b-}.
    """
    n = rng.randint(2, max_vars)
    rank = rng.choice([1, 2])
    while True:
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rank)]
        if all(any(r) for r in rows) and len(intlat.hnf_basis(rows)) == rank:
            break
    lambdas = [
        Fraction(rng.randint(1, 5), rng.randint(1, 5)) * rng.choice([1, -1])
        for _ in range(rank)
    ]
    ring = Ring(tuple("abcd"[:n]))
    gens = []
    for b, lam in zip(rows, lambdas):
        up = tuple(max(x, 0) for x in b)
        down = tuple(max(-x, 0) for x in b)
        gens.append(LaurentPoly(ring, [(up, Fraction(1)), (down, -lam)]))
    return IdealHandle(ring, gens), rows, lambdas


def character_value(rows, lambdas, e):
    """phi(e) for the partial character given on basis ``rows``."""
    coords = intlat.solve_in_lattice([list(r) for r in rows], list(e))
    if coords is None:
        return None
    out = Fraction(1)
    for c, lam in zip(coords, lambdas):
        out *= lam ** c
    return out


@pytest.fixture
def rng():
    return random.Random(20240811)
