"""Exact integer and rational lattice algebra.

Row convention throughout: a lattice is given by a matrix whose *rows*
generate it.  The Hermite normal form here is row-style, upper
echelon, with positive pivots and the entries above each pivot reduced
into [0, pivot), which makes every lattice-valued result of the
package deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def identity(n: int):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A):
    return [list(col) for col in zip(*A)]


def mat_mul(A, B):
    n, m = len(A), len(B[0])
    k = len(B)
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def mat_vec(A, v):
    return [sum(r[i] * v[i] for i in range(len(v))) for r in A]


def det(A) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    n = len(A)
    M = [list(map(int, row)) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def hnf(A):
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular, H = U*A, H in upper-echelon form
    with positive pivots and entries above each pivot in [0, pivot).
    Zero rows sink to the bottom; the shape of H equals the shape of A.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    H = [list(map(int, row)) for row in A]
    U = identity(m)
    r = 0
    for c in range(n):
        while True:
            nz = [i for i in range(r, m) if H[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(H[i][c]))
            if i0 != r:
                H[r], H[i0] = H[i0], H[r]
                U[r], U[i0] = U[i0], U[r]
            done = True
            for i in range(r + 1, m):
                if H[i][c]:
                    q = H[i][c] // H[r][c]
                    for j in range(n):
                        H[i][j] -= q * H[r][j]
                    for j in range(m):
                        U[i][j] -= q * U[r][j]
                    if H[i][c]:
                        done = False
            if done:
                break
        if r < m and H[r][c] != 0:
            if H[r][c] < 0:
                H[r] = [-x for x in H[r]]
                U[r] = [-x for x in U[r]]
            for i in range(r):
                q = H[i][c] // H[r][c]
                if q:
                    for j in range(n):
                        H[i][j] -= q * H[r][j]
                    for j in range(m):
                        U[i][j] -= q * U[r][j]
            r += 1
            if r == m:
                break
    return H, U


def hnf_basis(A):
    """Canonical basis (nonzero HNF rows) of the row lattice of A."""
    if not A:
        return []
    H, _ = hnf(A)
    return [row for row in H if any(row)]


def kernel_lattice(A):
    """Basis of the saturated lattice {v integer : A v = 0}.

    ``A`` may have integer or Fraction entries; rows are cleared to
    integers first.  Returned rows are in HNF.
    """
    if not A or not len(A[0]):
        return []
    n = len(A[0])
    cleared = []
    for row in A:
        den = 1
        for x in row:
            den = lcm(den, Fraction(x).denominator)
        cleared.append([int(Fraction(x) * den) for x in row])
    T = transpose(cleared)
    H, U = hnf(T)
    basis = [U[i] for i in range(len(H)) if not any(H[i])]
    return hnf_basis(basis) if basis else []


def is_primitive(v) -> bool:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g == 1


def primitive_part(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive part")
    return [x // g for x in v]


def unimodular_extension(v):
    """A unimodular M with M v = (0, ..., 0, 1); v must be primitive."""
    v = list(map(int, v))
    if not is_primitive(v):
        raise ValueError("vector is not primitive")
    n = len(v)
    if v == [0] * (n - 1) + [1]:
        return identity(n)
    H, U = hnf([[x] for x in v])
    assert H[0][0] == 1
    return U[1:] + U[:1]


def inverse_unimodular(M):
    """Exact inverse of a unimodular integer matrix."""
    H, U = hnf(M)
    if H != identity(len(M)):
        raise ValueError("matrix is not unimodular")
    return U


def snf(A):
    """Smith normal form: (D, P, Q) with P A Q = D diagonal, divisible."""
    m = len(A)
    n = len(A[0]) if m else 0
    D = [list(map(int, row)) for row in A]
    P = identity(m)
    Q = identity(n)

    def is_diagonal():
        return all(D[i][j] == 0 for i in range(m) for j in range(n) if i != j)

    while True:
        H, U = hnf(D)
        D = H
        P = mat_mul(U, P)
        Ht, V = hnf(transpose(D))
        D = transpose(Ht)
        Q = mat_mul(Q, transpose(V))
        if not is_diagonal():
            continue
        k = min(m, n)
        fixed = True
        for i in range(k - 1):
            a, b = D[i][i], D[i + 1][i + 1]
            if b != 0 and (a == 0 or b % a != 0):
                # fold column i+1 into column i and restart
                for r in range(m):
                    D[r][i] += D[r][i + 1]
                for r in range(n):
                    Q[r][i] += Q[r][i + 1]
                fixed = False
                break
        if fixed:
            return D, P, Q


def unimodular_completion(B):
    """Extend the rows of a saturated basis B to a unimodular matrix.

    Returns W (n x n) with det +-1 whose first rows are exactly B.
    Fails if the row lattice of B is not saturated.
    """
    m = len(B)
    n = len(B[0])
    D, P, Q = snf(B)
    if any(D[i][i] != 1 for i in range(m)):
        raise ValueError("basis does not span a saturated lattice")
    Qi = inverse_unimodular(Q)
    W = [list(map(int, row)) for row in B] + Qi[m:]
    if abs(det(W)) != 1:
        raise AssertionError("unimodular completion failed")
    return W


def lattice_intersection(A, B):
    """Basis (HNF) of the intersection of two row lattices."""
    if not A or not B:
        return []
    S = [list(r) for r in A] + [list(r) for r in B]
    left_kernel = kernel_lattice(transpose(S))
    rows = []
    for w in left_kernel:
        u = w[: len(A)]
        rows.append([sum(u[i] * A[i][j] for i in range(len(A)))
                     for j in range(len(A[0]))])
    return hnf_basis(rows)


def solve_in_lattice(B, v):
    """Integer coordinates c with c B = v, or None when v is outside.

    ``B`` are basis rows of a lattice, ``v`` a vector of matching width.
    """
    if not B:
        return [] if not any(v) else None
    H, U = hnf(B)
    n = len(v)
    c = [0] * len(B)
    rem = list(map(int, v))
    pivots = []
    for i, row in enumerate(H):
        j = next((j for j in range(n) if row[j]), None)
        if j is not None:
            pivots.append((i, j))
    d = [0] * len(B)
    for i, j in pivots:
        if rem[j] % H[i][j] != 0:
            return None
        q = rem[j] // H[i][j]
        d[i] = q
        for t in range(n):
            rem[t] -= q * H[i][t]
    if any(rem):
        return None
    for i in range(len(B)):
        c[i] = sum(d[t] * U[t][i] for t in range(len(B)))
    return c


# -- LLL ---------------------------------------------------------------------


def _gso(b):
    """Exact Gram-Schmidt: returns (norms of b*, mu table)."""
    n = len(b)
    mu = [[Fraction(0)] * n for _ in range(n)]
    bstar = []
    norms = []
    for i in range(n):
        v = [Fraction(x) for x in b[i]]
        for j in range(i):
            if norms[j] == 0:
                raise ValueError("rows are not linearly independent")
            mu[i][j] = sum(Fraction(b[i][t]) * bstar[j][t]
                           for t in range(len(v))) / norms[j]
            v = [x - mu[i][j] * y for x, y in zip(v, bstar[j])]
        bstar.append(v)
        norms.append(sum(x * x for x in v))
    return norms, mu


def lll(basis, delta=Fraction(3, 4)):
    """Exact LLL reduction of the given basis rows.

    All-integer variant: the exact Gram-Schmidt data is carried as the
    integer arrays d (Gram determinants) and lam (scaled projection
    coefficients), updated incrementally, so no floating point enters
    anywhere.  The output generates the same lattice, is size-reduced
    (|mu_ij| <= 1/2) and satisfies the Lovasz condition with parameter
    ``delta``; the test-suite re-checks those conditions in rational
    arithmetic.
    """
    delta = Fraction(delta)
    if not (Fraction(1, 4) < delta <= 1):
        raise ValueError("delta must lie in (1/4, 1]")
    b = [list(map(int, row)) for row in basis]
    n = len(b)
    if n <= 1:
        return b
    p, q = delta.numerator, delta.denominator

    d = [1] * (n + 1)
    lam = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            u = sum(x * y for x, y in zip(b[i], b[j]))
            for t in range(j):
                u = (d[t + 1] * u - lam[i][t] * lam[j][t]) // d[t]
            if j < i:
                lam[i][j] = u
            else:
                if u <= 0:
                    raise ValueError("rows are not linearly independent")
                d[i + 1] = u

    def size_reduce(k, l):
        if 2 * abs(lam[k][l]) > d[l + 1]:
            r = (2 * lam[k][l] + d[l + 1]) // (2 * d[l + 1])
            b[k] = [x - r * y for x, y in zip(b[k], b[l])]
            lam[k][l] -= r * d[l + 1]
            for t in range(l):
                lam[k][t] -= r * lam[l][t]

    k = 1
    while k < n:
        size_reduce(k, k - 1)
        lk = lam[k][k - 1]
        if q * (d[k + 1] * d[k - 1] + lk * lk) >= p * d[k] * d[k]:
            for l in range(k - 2, -1, -1):
                size_reduce(k, l)
            k += 1
        else:
            b[k], b[k - 1] = b[k - 1], b[k]
            for j in range(k - 1):
                lam[k][j], lam[k - 1][j] = lam[k - 1][j], lam[k][j]
            B = (d[k - 1] * d[k + 1] + lk * lk) // d[k]
            for i in range(k + 1, n):
                t = lam[i][k]
                lam[i][k] = (d[k + 1] * lam[i][k - 1] - lk * t) // d[k]
                lam[i][k - 1] = (B * t + lk * lam[i][k]) // d[k + 1]
            d[k] = B
            k = max(k - 1, 1)
    return b
