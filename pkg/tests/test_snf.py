import itertools
import random

import pytest

from tetk.snf import (kernel_lattice_mod, quotient_divisors, smith_normal_form,
                      solve_mod)


def mat_mul(X, Y):
    return [[sum(X[i][k] * Y[k][j] for k in range(len(Y)))
             for j in range(len(Y[0]))] for i in range(len(X))]


def test_snf_diagonalizes_and_divides():
    rnd = random.Random(5)
    for _ in range(150):
        r, c = rnd.randint(1, 6), rnd.randint(1, 6)
        A = [[rnd.randint(-6, 6) for _ in range(c)] for _ in range(r)]
        diag, U, V, Vinv = smith_normal_form(A)
        P = mat_mul(mat_mul(U, A), V)
        for i in range(r):
            for j in range(c):
                expected = diag[i] if i == j and i < len(diag) else 0
                assert P[i][j] == expected
        for i in range(len(diag) - 1):
            if diag[i]:
                assert diag[i + 1] % diag[i] == 0
            else:
                assert diag[i + 1] == 0
        eye = mat_mul(V, Vinv)
        assert all(eye[i][j] == (i == j) for i in range(c) for j in range(c))


def test_solve_mod_roundtrip():
    rnd = random.Random(9)
    for _ in range(200):
        r, c = rnd.randint(1, 5), rnd.randint(1, 5)
        m = rnd.choice([2, 3, 4, 6, 8, 12])
        A = [[rnd.randint(-4, 4) for _ in range(c)] for _ in range(r)]
        x0 = [rnd.randrange(m) for _ in range(c)]
        b = [sum(A[i][j] * x0[j] for j in range(c)) % m for i in range(r)]
        x = solve_mod(A, b, m)
        assert x is not None
        for i in range(r):
            assert sum(A[i][j] * x[j] for j in range(c)) % m == b[i]


def test_solve_mod_detects_unsolvable():
    # 2x = 1 (mod 4) has no solution
    assert solve_mod([[2]], [1], 4) is None


@pytest.mark.parametrize("m", [2, 4, 6])
def test_kernel_lattice_matches_enumeration(m):
    rnd = random.Random(m)
    for _ in range(30):
        r, c = rnd.randint(1, 3), rnd.randint(1, 3)
        A = [[rnd.randint(-3, 3) for _ in range(c)] for _ in range(r)]
        gens = kernel_lattice_mod(A, m)
        spanned = set()
        for coeffs in itertools.product(range(m), repeat=len(gens)):
            v = tuple(sum(coeffs[k] * gens[k][j] for k in range(len(gens))) % m
                      for j in range(c))
            spanned.add(v)
        brute = {x for x in itertools.product(range(m), repeat=c)
                 if all(sum(A[i][j] * x[j] for j in range(c)) % m == 0
                        for i in range(r))}
        assert spanned == brute


def test_quotient_divisors_simple_cases():
    # Z^2 / <2e1, 3e2> = Z/6 in invariant-factor form
    gens = [[1, 0], [0, 1]]
    rels = [[2, 0], [0, 3]]
    assert sorted(quotient_divisors(gens, rels)) == [6]
    # Z / <4> and a redundant relation
    assert quotient_divisors([[1]], [[4], [8]]) == [4]
    # Z^2 / <2e1, 2e2> stays [2, 2]
    assert sorted(quotient_divisors(gens, [[2, 0], [0, 2]])) == [2, 2]
