"""Dense exact-rational matrix and univariate polynomial helpers.

Matrices are lists of rows of Fractions.  Univariate polynomials are
lists of Fraction coefficients in ascending degree order with the top
coefficient nonzero (the zero polynomial is the empty list).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def q_identity(n):
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)]


def q_copy(A):
    return [row[:] for row in A]


def q_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def q_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def q_scale(A, c):
    c = Fraction(c)
    return [[c * a for a in row] for row in A]


def q_mul(A, B):
    n = len(A)
    m = len(B[0])
    k = len(B)
    Bt = list(zip(*B))
    return [[sum(ra[t] * cb[t] for t in range(k)) for cb in Bt] for ra in A]


def q_trace(A):
    return sum(A[i][i] for i in range(len(A)))


def q_is_zero(A) -> bool:
    return all(not x for row in A for x in row)


def q_scalar_of(A):
    """The scalar c with A = c*I, or None if A is not scalar."""
    n = len(A)
    c = A[0][0]
    for i in range(n):
        for j in range(n):
            if A[i][j] != (c if i == j else 0):
                return None
    return c


def q_commute(A, B) -> bool:
    return q_mul(A, B) == q_mul(B, A)


def q_inverse(A):
    """Gauss-Jordan inverse; raises ValueError on a singular matrix."""
    n = len(A)
    M = [row[:] + ident_row[:] for row, ident_row in zip(q_copy(A), q_identity(n))]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if M[i][c]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        M[r], M[piv] = M[piv], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(n):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        r += 1
    return [row[n:] for row in M]


def q_det(A):
    """Determinant by fraction-free-ish Gaussian elimination."""
    n = len(A)
    M = q_copy(A)
    sign = 1
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            sign = -sign
        out *= M[c][c]
        inv = 1 / M[c][c]
        for i in range(c + 1, n):
            if M[i][c]:
                f = M[i][c] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return sign * out


def q_pow(A, k: int):
    """A**k with exact arithmetic; negative k through the inverse."""
    n = len(A)
    if k < 0:
        return q_pow(q_inverse(A), -k)
    result = q_identity(n)
    base = q_copy(A)
    while k:
        if k & 1:
            result = q_mul(result, base)
        k >>= 1
        if k:
            base = q_mul(base, base)
    return result


# -- univariate polynomials over Q -------------------------------------------


def poly_trim(c):
    while c and not c[-1]:
        c.pop()
    return c


def poly_deriv(c):
    return poly_trim([i * c[i] for i in range(1, len(c))])


def poly_divmod(a, b):
    a = a[:]
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(a) >= len(b) and poly_trim(a):
        if not a:
            break
        f = a[-1] * inv
        shift = len(a) - len(b)
        q[shift] = f
        for i in range(len(b)):
            a[shift + i] -= f * b[i]
        poly_trim(a)
    return poly_trim(q), poly_trim(a)


def poly_gcd(a, b):
    a, b = poly_trim(a[:]), poly_trim(b[:])
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
    return a


def squarefree_part(c):
    """c / gcd(c, c'), monic."""
    g = poly_gcd(c, poly_deriv(c))
    q, r = poly_divmod(c, g)
    assert not r
    lead = q[-1]
    return [x / lead for x in q]


def poly_eval_matrix(c, A):
    n = len(A)
    out = q_scale(q_identity(n), 0)
    for coeff in reversed(c):
        out = q_mul(out, A)
        if coeff:
            for i in range(n):
                out[i][i] += coeff
    return out


def charpoly(A):
    """Characteristic polynomial det(tI - A), ascending coefficients.

    Faddeev-LeVerrier run on the denominator-cleared integer matrix
    (integer arithmetic throughout, exact divisions), rescaled at the
    end: char_A(t) = char_{dA}(d t) / d^n.
    """
    n = len(A)
    den = 1
    for row in A:
        for x in row:
            den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    B = [[int(x * den) for x in row] for row in A]
    Mk = [row[:] for row in B]
    cs = [1]  # coefficient of t^n, then t^{n-1}, ...
    ck = -sum(Mk[i][i] for i in range(n))
    cs.append(ck)
    for k in range(2, n + 1):
        for i in range(n):
            Mk[i][i] += ck
        Mkt = list(zip(*Mk))
        Mk = [[sum(r[t] * c[t] for t in range(n)) for c in Mkt] for r in B]
        ck = -sum(Mk[i][i] for i in range(n)) // k
        cs.append(ck)
    cs.reverse()
    return [Fraction(cs[i], den ** (n - i)) for i in range(n + 1)]


def semisimple_part(A):
    """The semisimple summand of the Jordan-Chevalley decomposition.

    Newton iteration S <- S - g(S) * g'(S)^{-1} with g the squarefree
    part of the characteristic polynomial; terminates exactly (the
    defect is nilpotent and the step count is logarithmic in the
    largest multiplicity).
    """
    chi = charpoly(A)
    g = squarefree_part(chi)
    gp = poly_deriv(g)
    S = q_copy(A)
    while True:
        gS = poly_eval_matrix(g, S)
        if q_is_zero(gS):
            return S
        S = q_sub(S, q_mul(gS, q_inverse(poly_eval_matrix(gp, S))))


def unipotent_log(U):
    """log of a unipotent matrix: finite series in N = U - I."""
    n = len(U)
    N = q_sub(U, q_identity(n))
    out = q_scale(q_identity(n), 0)
    term = q_identity(n)
    for k in range(1, n + 1):
        term = q_mul(term, N)
        if q_is_zero(term):
            return out
        out = q_add(out, q_scale(term, Fraction((-1) ** (k + 1), k)))
    raise ValueError("matrix is not unipotent")
