import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from binpart import LaurentPoly, PolyParseError, Ring, initial_form, is_binomial, parse_poly

RXYZ = Ring(("x", "y", "z"))
RX = Ring(("x",))
RXY_L = Ring(("x", "y"), laurent=True)


class TestParse:
    def test_square(self):
        f = parse_poly("(x-z)^2", RXYZ)
        assert f.terms == (
            ((2, 0, 0), Fraction(1)),
            ((1, 0, 1), Fraction(-2)),
            ((0, 0, 2), Fraction(1)),
        )
        assert str(f) == "x^2 - 2*x*z + z^2"

    def test_zero(self):
        assert parse_poly("0", RXYZ).is_zero()
        assert parse_poly("x - x", RXYZ).is_zero()

    def test_laurent(self):
        f = parse_poly("x*y^-1 - 2", RXY_L)
        assert f.terms == (((1, -1), Fraction(1)), ((0, 0), Fraction(-2)))

    def test_rational_coefficient(self):
        f = parse_poly("3/2*x - 1/3", RX)
        assert f.terms == (((1,), Fraction(3, 2)), ((0,), Fraction(-1, 3)))

    def test_negative_exponent_rejected_in_polynomial_ring(self):
        with pytest.raises(PolyParseError):
            parse_poly("x^-1", Ring(("x", "y")))

    def test_unknown_variable(self):
        with pytest.raises(PolyParseError) as err:
            parse_poly("x + q", RX)
        assert err.value.position == 4

    def test_syntax_error_position(self):
        with pytest.raises(PolyParseError) as err:
            parse_poly("x + * y", RXYZ)
        assert err.value.position == 4

    def test_print_parse_fixed_point(self, rng):
        for _ in range(60):
            ring = random.Random(rng.random()).choice([RXYZ, RX, RXY_L])
            terms = []
            for _ in range(rng.randint(0, 5)):
                lo = -2 if ring.laurent else 0
                exp = tuple(rng.randint(lo, 3) for _ in range(ring.nvars))
                terms.append((exp, Fraction(rng.randint(-9, 9), rng.randint(1, 9))))
            f = LaurentPoly(ring, terms)
            assert parse_poly(str(f), ring) == f


coeffs = st.integers(-9, 9)
exps = st.tuples(st.integers(0, 3), st.integers(0, 3))


@st.composite
def polys(draw):
    ring = Ring(("x", "y"))
    n_terms = draw(st.integers(0, 4))
    terms = [(draw(exps), draw(coeffs)) for _ in range(n_terms)]
    return LaurentPoly(ring, terms)


class TestRingAxioms:
    @settings(max_examples=60, deadline=None)
    @given(polys(), polys(), polys())
    def test_associativity_commutativity_distributivity(self, f, g, h):
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h

    @settings(max_examples=30, deadline=None)
    @given(polys())
    def test_neutral_elements(self, f):
        assert f + LaurentPoly.zero(f.ring) == f
        assert f * LaurentPoly.constant(f.ring, 1) == f
        assert (f - f).is_zero()


class TestInitialForm:
    def test_unique_max(self):
        f = parse_poly("x^2+x+1", RX)
        assert initial_form(f, (1,)) == parse_poly("x^2", RX)

    def test_zero_weight_keeps_everything(self):
        ring = Ring(("x", "y"))
        f = parse_poly("x+y+1", ring)
        assert initial_form(f, (0, 0)) == f

    def test_tie(self):
        ring = Ring(("x", "y"))
        f = parse_poly("x-2*y", ring)
        assert initial_form(f, (1, 1)) == f

    def test_idempotent(self, rng):
        ring = Ring(("x", "y"))
        for _ in range(40):
            terms = [(tuple(rng.randint(0, 3) for _ in range(2)), rng.randint(-5, 5))
                     for _ in range(rng.randint(0, 5))]
            f = LaurentPoly(ring, terms)
            w = (rng.randint(-3, 3), rng.randint(-3, 3))
            once = initial_form(f, w)
            assert initial_form(once, w) == once
            assert initial_form(f, (0, 0)) == f


class TestIsBinomial:
    def test_cyclotomic_witness(self):
        b = is_binomial(parse_poly("x^3-1", RX))
        assert b is not None and (b.u, b.v, b.lam) == ((3,), (0,), 1)

    def test_three_terms(self):
        assert is_binomial(parse_poly("(x-z)^2", RXYZ)) is None

    def test_leading_normalization(self):
        ring = Ring(("x", "y"))
        b = is_binomial(parse_poly("5*x - 10*y", ring))
        assert (b.u, b.v, b.lam) == ((1, 0), (0, 1), 2)

    def test_monomial_and_zero_excluded(self):
        assert is_binomial(parse_poly("x^2", RX)) is None
        assert is_binomial(parse_poly("0", RX)) is None
