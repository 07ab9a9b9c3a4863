"""Ring contexts and monomial orders.

Every polynomial in this package lives in an explicit ring context: an
ordered tuple of variable names plus a flag telling whether negative
exponents are allowed (Laurent ring) or not (polynomial ring).

Monomial orders are represented uniformly as integer weight matrices:
``a > b`` iff the first nonzero entry of ``rows @ (a - b)`` is positive.
This covers lex, graded reverse lex, block elimination orders and
weight-refined orders with a single comparison routine, and it makes
order-specific keys cheap (the key of a product is the sum of keys).
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Ring:
    """An ordered list of variable names, optionally Laurent."""

    variables: tuple[str, ...]
    laurent: bool = False

    def __post_init__(self):
        if not self.variables:
            raise ValueError("ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("variable names must be distinct")

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def as_laurent(self) -> "Ring":
        return self if self.laurent else replace(self, laurent=True)

    def as_polynomial(self) -> "Ring":
        return self if not self.laurent else replace(self, laurent=False)

    def extended(self, name: str) -> "Ring":
        """Ring with one fresh variable appended."""
        if name in self.variables:
            raise ValueError(f"variable {name!r} already present")
        return Ring(self.variables + (name,), self.laurent)

    def fresh_name(self, stem: str = "t") -> str:
        if stem not in self.variables:
            return stem
        k = 0
        while f"{stem}{k}" in self.variables:
            k += 1
        return f"{stem}{k}"

    def subring(self, keep: tuple[int, ...]) -> "Ring":
        return Ring(tuple(self.variables[i] for i in keep), self.laurent)

    def __repr__(self):
        kind = "laurent" if self.laurent else "poly"
        return f"Ring({', '.join(self.variables)}; {kind})"


def _grevlex_rows(n: int) -> tuple[tuple[int, ...], ...]:
    rows = [tuple([1] * n)]
    for j in range(n - 1, 0, -1):
        rows.append(tuple(-1 if i == j else 0 for i in range(n)))
    return tuple(rows)


def _subset_grevlex_rows(idx: tuple[int, ...], n: int) -> tuple[tuple[int, ...], ...]:
    rows = [tuple(1 if i in idx else 0 for i in range(n))]
    for j in reversed(idx[1:]):
        rows.append(tuple(-1 if i == j else 0 for i in range(n)))
    return tuple(rows)


@dataclass(frozen=True)
class MonomialOrder:
    """A total order on monomials given by an integer weight matrix.

    ``kind`` is one of ``lex``, ``grevlex``, ``block`` (elimination) or
    ``weight`` (a weight vector refined by grevlex).  Orders with a
    non-global matrix (some variable not larger than 1) are only
    admissible on homogeneous input; the Buchberger driver checks this.
    """

    kind: str
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def lex(cls, n: int) -> "MonomialOrder":
        rows = tuple(tuple(1 if i == j else 0 for i in range(n)) for j in range(n))
        return cls("lex", rows)

    @classmethod
    def grevlex(cls, n: int) -> "MonomialOrder":
        return cls("grevlex", _grevlex_rows(n))

    @classmethod
    def block(cls, drop: tuple[int, ...], n: int) -> "MonomialOrder":
        """Eliminate the variables with indices in ``drop``."""
        drop = tuple(sorted(drop))
        keep = tuple(i for i in range(n) if i not in drop)
        rows = _subset_grevlex_rows(drop, n) if drop else ()
        if keep:
            rows = rows + _subset_grevlex_rows(keep, n)
        return cls("block", rows)

    @classmethod
    def weight(cls, w: tuple[int, ...], n: int) -> "MonomialOrder":
        """Order by the weight vector ``w``, ties broken by grevlex."""
        if len(w) != n:
            raise ValueError("weight vector length mismatch")
        return cls("weight", (tuple(w),) + _grevlex_rows(n))

    @property
    def nvars(self) -> int:
        return len(self.rows[0])

    def key(self, exp: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(sum(r[i] * exp[i] for i in range(len(exp))) for r in self.rows)

    def is_global(self) -> bool:
        """True iff every variable compares above 1 (a proper term order)."""
        n = self.nvars
        for j in range(n):
            for r in self.rows:
                if r[j] > 0:
                    break
                if r[j] < 0:
                    return False
            else:
                return False
        return True

    def cmp(self, a: tuple[int, ...], b: tuple[int, ...]) -> int:
        for r in self.rows:
            s = sum(r[i] * (a[i] - b[i]) for i in range(len(a)))
            if s > 0:
                return 1
            if s < 0:
                return -1
        return 0
