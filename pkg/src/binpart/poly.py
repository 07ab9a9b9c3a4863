"""Sparse Laurent polynomials over the rationals.

Terms are stored as a tuple of ``(exponent, coefficient)`` pairs with
exact ``Fraction`` coefficients, sorted descending under grevlex applied
to shifted exponents (exponents are translated to be componentwise
nonnegative before comparison), so equal polynomials have identical
representations and printing is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rings import Ring

Exponent = tuple[int, ...]


def _canonical_key(exp: Exponent) -> tuple:
    # grevlex key of the (shift-invariant) exponent: total degree, then
    # negated reversed entries.  Shifting all exponents by a common
    # vector changes every key by the same amount, so sorting by this
    # key equals sorting shifted exponents by grevlex.
    return (sum(exp),) + tuple(-e for e in reversed(exp[1:]))


class LaurentPoly:
    """Immutable sparse polynomial, possibly with negative exponents."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms):
        """``terms`` is any iterable of (exponent tuple, coefficient)."""
        merged: dict[Exponent, Fraction] = {}
        n = ring.nvars
        for exp, c in terms:
            exp = tuple(exp)
            if len(exp) != n:
                raise ValueError("exponent length does not match ring")
            if not ring.laurent and any(e < 0 for e in exp):
                raise ValueError(f"negative exponent {exp} in polynomial ring")
            c = Fraction(c)
            if not c:
                continue
            c = merged.get(exp, Fraction(0)) + c
            if c:
                merged[exp] = c
            else:
                merged.pop(exp, None)
        order = sorted(merged, key=_canonical_key, reverse=True)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", tuple((e, merged[e]) for e in order))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring) -> "LaurentPoly":
        return cls(ring, ())

    @classmethod
    def constant(cls, ring: Ring, c) -> "LaurentPoly":
        return cls(ring, [((0,) * ring.nvars, Fraction(c))])

    @classmethod
    def variable(cls, ring: Ring, i: int) -> "LaurentPoly":
        exp = tuple(1 if j == i else 0 for j in range(ring.nvars))
        return cls(ring, [(exp, Fraction(1))])

    @classmethod
    def monomial(cls, ring: Ring, exp: Exponent, c=1) -> "LaurentPoly":
        return cls(ring, [(tuple(exp), Fraction(c))])

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def total_degree(self) -> int:
        """Max over terms of the exponent sum; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e, _ in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.terms[0][1]

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise ValueError("mixed ring contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(self.ring, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return LaurentPoly(self.ring, list(self.terms) + list(other.terms))

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, [(e, -c) for e, c in self.terms])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return LaurentPoly(self.ring, [(e, c * v) for e, v in self.terms])
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        acc: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = tuple(a + b for a, b in zip(e1, e2))
                c = acc.get(e, Fraction(0)) + c1 * c2
                if c:
                    acc[e] = c
                else:
                    acc.pop(e, None)
        return LaurentPoly(self.ring, acc.items())

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative powers only for monomials")
            exp, c = self.terms[0]
            return LaurentPoly(self.ring, [(tuple(k * e for e in exp), c ** k)])
        result = LaurentPoly.constant(self.ring, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exp: Exponent) -> "LaurentPoly":
        """Multiply by the monomial x^exp."""
        return LaurentPoly(self.ring, [(tuple(a + b for a, b in zip(e, exp)), c)
                                       for e, c in self.terms])

    # -- comparisons / hashing ------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(self.ring, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.ring, self.terms))
            object.__setattr__(self, "_hash", h)
        return h

    # -- rendering -------------------------------------------------------

    def _term_str(self, exp: Exponent, coeff: Fraction) -> str:
        parts = []
        for name, e in zip(self.ring.variables, exp):
            if e == 0:
                continue
            parts.append(name if e == 1 else f"{name}^{e}")
        mag = abs(coeff)
        if not parts:
            return str(mag)
        if mag != 1:
            parts.insert(0, str(mag))
        return "*".join(parts)

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for i, (exp, coeff) in enumerate(self.terms):
            body = self._term_str(exp, coeff)
            if i == 0:
                out.append(body if coeff > 0 else f"-{body}")
            else:
                out.append(f" + {body}" if coeff > 0 else f" - {body}")
        return "".join(out)

    def __repr__(self):
        return f"<{self} over {self.ring!r}>"


@dataclass(frozen=True)
class Binomial:
    """A two-term polynomial x^u - lambda*x^v with lambda != 0.

    Monomials and 0 are deliberately not representable here; they are
    handled by separate monomial detection.
    """

    u: Exponent
    v: Exponent
    lam: Fraction

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError("binomial needs two distinct exponents")
        if self.lam == 0:
            raise ValueError("lambda must be nonzero")

    def as_poly(self, ring: Ring) -> LaurentPoly:
        return LaurentPoly(ring, [(self.u, Fraction(1)), (self.v, -self.lam)])

    def cleared(self, ring: Ring) -> LaurentPoly:
        """Polynomial-ring representative: shift both exponents nonnegative."""
        shift = tuple(-min(a, b, 0) for a, b in zip(self.u, self.v))
        u = tuple(a + s for a, s in zip(self.u, shift))
        v = tuple(b + s for b, s in zip(self.v, shift))
        return LaurentPoly(ring.as_polynomial(),
                           [(u, Fraction(1)), (v, -self.lam)])


def is_binomial(f: LaurentPoly):
    """Return the Binomial decomposition of ``f``, or None.

    The leading coefficient (in the canonical storage order) is
    normalized to 1, so 5x - 10y reports (u=x, v=y, lambda=2).
    """
    if len(f.terms) != 2:
        return None
    (u, cu), (v, cv) = f.terms
    return Binomial(u, v, -cv / cu)


def initial_form(f: LaurentPoly, w) -> LaurentPoly:
    """Terms of ``f`` whose weight <w, exp> is maximal (max convention)."""
    w = [Fraction(x) for x in w]
    if len(w) != f.ring.nvars:
        raise ValueError("weight vector length does not match ring")
    if f.is_zero():
        return f
    weights = [sum(wi * ei for wi, ei in zip(w, e)) for e, _ in f.terms]
    top = max(weights)
    return LaurentPoly(f.ring, [t for t, wt in zip(f.terms, weights) if wt == top])


# -- parsing -------------------------------------------------------------


class PolyParseError(ValueError):
    """Syntax or semantic error in a polynomial expression."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN_CHARS = {"+", "-", "*", "^", "/", "(", ")"}


def _tokenize(text: str):
    tokens = []  # (kind, value, position)
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _TOKEN_CHARS:
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j]), i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        raise PolyParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", None, n))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind=None):
        tok = self.tokens[self.pos]
        if kind is not None and tok[0] != kind:
            raise PolyParseError(f"expected {kind}, found {tok[1]!r}", tok[2])
        self.pos += 1
        return tok

    def parse(self) -> LaurentPoly:
        p = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise PolyParseError(f"unexpected {tok[1]!r}", tok[2])
        return p

    def expr(self) -> LaurentPoly:
        sign = 1
        while self.peek()[0] in ("+", "-"):
            if self.take()[0] == "-":
                sign = -sign
        p = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            sign = 1
            while self.peek()[0] in ("+", "-"):
                if self.take()[0] == "-":
                    sign = -sign
            p = p + self.term() * sign
        return p

    def term(self) -> LaurentPoly:
        p = self.factor()
        while self.peek()[0] == "*":
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> LaurentPoly:
        base, base_pos = self.atom()
        if self.peek()[0] != "^":
            return base
        self.take()
        sign = 1
        if self.peek()[0] == "-":
            self.take()
            sign = -1
        tok = self.take("int")
        k = sign * tok[1]
        if k < 0:
            if not self.ring.laurent and not base.is_constant():
                raise PolyParseError("negative exponent in a polynomial ring", tok[2])
            if base.is_constant():
                c = base.constant_value()
                if c == 0:
                    raise PolyParseError("zero to a negative power", tok[2])
                return LaurentPoly.constant(self.ring, c ** k)
            if not base.is_monomial():
                raise PolyParseError("negative power of a non-monomial", base_pos)
        try:
            return base ** k
        except ValueError as exc:
            raise PolyParseError(str(exc), base_pos) from None

    def atom(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            num = tok[1]
            if self.peek()[0] == "/":
                self.take()
                den_tok = self.take("int")
                if den_tok[1] == 0:
                    raise PolyParseError("division by zero", den_tok[2])
                return LaurentPoly.constant(self.ring, Fraction(num, den_tok[1])), tok[2]
            return LaurentPoly.constant(self.ring, num), tok[2]
        if tok[0] == "name":
            self.take()
            try:
                idx = self.ring.index(tok[1])
            except KeyError:
                raise PolyParseError(f"unknown variable {tok[1]!r}", tok[2]) from None
            return LaurentPoly.variable(self.ring, idx), tok[2]
        if tok[0] == "(":
            self.take()
            p = self.expr()
            self.take(")")
            return p, tok[2]
        raise PolyParseError(f"unexpected {tok[1]!r}", tok[2])


def parse_poly(text: str, ring: Ring) -> LaurentPoly:
    """Parse an expression in the ring's variables into canonical form.

    Supports + - * ^ and parentheses, integer and p/q rational
    coefficients, and negative exponents when the ring is Laurent.
    Parsing the printed form of a polynomial is the identity.
    """
    return _Parser(text, ring).parse()
