import itertools
import random
from fractions import Fraction

import pytest

from binpart import intlat as il
from binpart.intlat import _gso


def rand_unimodular(n, rng):
    M = il.identity(n)
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        q = rng.randint(-3, 3)
        for t in range(n):
            M[i][t] += q * M[j][t]
    return M


class TestHNF:
    def test_identity_fixed_point(self):
        H, U = il.hnf([[1, 0], [0, 1]])
        assert H == [[1, 0], [0, 1]] and U == [[1, 0], [0, 1]]

    def test_spec_shape(self):
        H, U = il.hnf([[2, 0], [1, 1]])
        assert H == [[1, 1], [0, 2]]
        assert abs(il.det(U)) == 1
        assert il.mat_mul(U, [[2, 0], [1, 1]]) == H

    def test_zero_row(self):
        assert il.hnf([[0, 0]])[0] == [[0, 0]]

    def test_unique_under_unimodular(self, rng):
        for _ in range(200):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            A = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
            W = rand_unimodular(m, rng)
            assert il.hnf(A)[0] == il.hnf(il.mat_mul(W, A))[0]

    def test_pivot_normalization(self, rng):
        for _ in range(60):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            A = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
            H, U = il.hnf(A)
            assert il.mat_mul(U, A) == H
            assert abs(il.det(U)) == 1
            pivots = []
            for row in H:
                nz = [j for j, x in enumerate(row) if x]
                if nz:
                    pivots.append((nz[0], row[nz[0]]))
            cols = [c for c, _ in pivots]
            assert cols == sorted(cols)
            for idx, (c, p) in enumerate(pivots):
                assert p > 0
                for above in range(idx):
                    assert 0 <= H[above][c] < p


class TestKernelLattice:
    def test_sum_zero(self):
        assert il.kernel_lattice([[1, 1]]) == [[1, -1]]

    def test_trivial(self):
        assert il.kernel_lattice([[1, 0], [0, 1]]) == []

    def test_full(self):
        assert il.kernel_lattice([[0, 0]]) == [[1, 0], [0, 1]]

    def test_rational_entries(self):
        K = il.kernel_lattice([[Fraction(1, 2), Fraction(1, 3)]])
        assert K == [[2, -3]]

    def test_saturation_against_brute_force(self, rng):
        for _ in range(50):
            m, n = rng.randint(1, 3), rng.randint(1, 4)
            A = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(m)]
            K = il.kernel_lattice(A)
            for v in itertools.product(range(-3, 4), repeat=n):
                if any(v) and all(sum(r[j] * v[j] for j in range(n)) == 0 for r in A):
                    assert il.solve_in_lattice(K, list(v)) is not None


class TestUnimodularExtension:
    def test_unit_vector(self):
        assert il.unimodular_extension([0, 0, 1]) == il.identity(3)

    def test_ones(self):
        M = il.unimodular_extension([1, 1])
        assert il.mat_vec(M, [1, 1]) == [0, 1]
        assert abs(il.det(M)) == 1

    def test_non_primitive_rejected(self):
        with pytest.raises(ValueError):
            il.unimodular_extension([2, 2])

    def test_random(self, rng):
        for _ in range(60):
            n = rng.randint(1, 5)
            v = [rng.randint(-8, 8) for _ in range(n)]
            if not any(v):
                continue
            v = il.primitive_part(v)
            M = il.unimodular_extension(v)
            assert il.mat_vec(M, v) == [0] * (n - 1) + [1]
            assert abs(il.det(M)) == 1


class TestLLL:
    def test_identity(self):
        assert il.lll(il.identity(3)) == il.identity(3)

    def test_short_first_vector(self):
        out = il.lll([[1, 0], [4, 1]])
        assert min(sum(x * x for x in r) for r in out) <= 2
        assert il.hnf_basis(out) == il.hnf_basis([[1, 0], [4, 1]])

    def test_finds_short_difference(self):
        out = il.lll([[201, 0], [200, 1]])
        assert [1, -1] in out or [-1, 1] in out

    def test_exact_conditions_and_lattice(self, rng):
        delta = Fraction(3, 4)
        for _ in range(40):
            n = rng.randint(1, 5)
            while True:
                B = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
                if il.det(B) != 0:
                    break
            out = il.lll(B, delta)
            norms, mu = _gso(out)
            for i in range(n):
                for j in range(i):
                    assert abs(mu[i][j]) <= Fraction(1, 2)
            for k in range(1, n):
                assert norms[k] >= (delta - mu[k][k - 1] ** 2) * norms[k - 1]
            assert il.hnf_basis(out) == il.hnf_basis(B)

    def test_delta_range(self):
        with pytest.raises(ValueError):
            il.lll([[1, 0], [0, 1]], Fraction(1, 4))


class TestSmithAndCompletion:
    def test_snf_random(self, rng):
        for _ in range(80):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            A = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
            D, P, Q = il.snf(A)
            assert il.mat_mul(il.mat_mul(P, A), Q) == D
            assert abs(il.det(P)) == 1 and abs(il.det(Q)) == 1
            diag = [D[i][i] for i in range(min(m, n))]
            for i in range(len(diag) - 1):
                if diag[i + 1]:
                    assert diag[i] != 0 and diag[i + 1] % diag[i] == 0

    def test_completion_keeps_rows(self, rng):
        for _ in range(60):
            n = rng.randint(2, 5)
            m = rng.randint(1, n - 1)
            A = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(m)]
            B = il.kernel_lattice(A)  # saturated by construction
            if not B or len(B) == n:
                continue
            W = il.unimodular_completion(B)
            assert W[: len(B)] == [list(r) for r in B]
            assert abs(il.det(W)) == 1

    def test_completion_rejects_non_saturated(self):
        with pytest.raises(ValueError):
            il.unimodular_completion([[2, 0]])


class TestIntersection:
    def test_brute_force_agreement(self, rng):
        for _ in range(40):
            n = rng.randint(2, 3)
            A = il.hnf_basis([[rng.randint(-2, 2) for _ in range(n)]
                              for _ in range(rng.randint(1, 2))])
            B = il.hnf_basis([[rng.randint(-2, 2) for _ in range(n)]
                              for _ in range(rng.randint(1, 2))])
            if not A or not B:
                continue
            C = il.lattice_intersection(A, B)
            for v in itertools.product(range(-4, 5), repeat=n):
                in_a = il.solve_in_lattice(A, list(v)) is not None
                in_b = il.solve_in_lattice(B, list(v)) is not None
                in_c = (il.solve_in_lattice(C, list(v)) is not None) if C else not any(v)
                assert (in_a and in_b) == in_c
