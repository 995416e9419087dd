"""Exact integer matrix routines: Smith normal form and solving A x = b (mod m).

Matrices are lists of lists of Python ints, so nothing ever overflows.  Sizes
stay at desk scale (a few hundred rows), which keeps the classical pivoting
algorithm comfortably fast.
"""

from __future__ import annotations

from math import gcd


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def _swap_rows(A, i, j):
    A[i], A[j] = A[j], A[i]


def _swap_cols(A, i, j):
    for row in A:
        row[i], row[j] = row[j], row[i]


def _add_row(A, dst, src, q):
    # row[dst] += q * row[src]
    rd, rs = A[dst], A[src]
    for k in range(len(rd)):
        rd[k] += q * rs[k]


def _add_col(A, dst, src, q):
    for row in A:
        row[dst] += q * row[src]


def smith_normal_form(A):
    """Diagonalize A over the integers.

    Returns (diag, U, V, Vinv) with U * A * V diagonal, U and V unimodular,
    V * Vinv = I.  ``diag`` is the list of diagonal entries (nonnegative,
    each dividing the next).
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    M = [list(map(int, row)) for row in A]
    U = identity_matrix(rows)
    V = identity_matrix(cols)
    Vinv = identity_matrix(cols)

    def col_op_add(dst, src, q):
        # M <- M * E where E adds q*col_src to col_dst; Vinv <- E^-1 * Vinv.
        _add_col(M, dst, src, q)
        _add_col(V, dst, src, q)
        _add_row(Vinv, src, dst, -q)

    def col_op_swap(i, j):
        _swap_cols(M, i, j)
        _swap_cols(V, i, j)
        _swap_rows(Vinv, i, j)

    def col_op_negate(i):
        for row in M:
            row[i] = -row[i]
        for row in V:
            row[i] = -row[i]
        for k in range(cols):
            Vinv[i][k] = -Vinv[i][k]

    t = 0
    while t < min(rows, cols):
        # Pick the pivot with smallest nonzero magnitude in the submatrix.
        piv = None
        best = None
        for i in range(t, rows):
            Mi = M[i]
            for j in range(t, cols):
                a = Mi[j]
                if a != 0 and (best is None or abs(a) < best):
                    best = abs(a)
                    piv = (i, j)
                    if best == 1:
                        break
            if best == 1:
                break
        if piv is None:
            break
        i, j = piv
        if i != t:
            _swap_rows(M, t, i)
            _swap_rows(U, t, i)
        if j != t:
            col_op_swap(t, j)

        # Sweep until the pivot divides (and clears) its row and column.
        while True:
            p = M[t][t]
            dirty = False
            for i in range(t + 1, rows):
                a = M[i][t]
                if a:
                    q = a // p
                    _add_row(M, i, t, -q)
                    _add_row(U, i, t, -q)
                    if M[i][t]:
                        # remainder smaller than pivot: promote it
                        _swap_rows(M, t, i)
                        _swap_rows(U, t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, cols):
                a = M[t][j]
                if a:
                    q = a // p
                    col_op_add(j, t, -q)
                    if M[t][j]:
                        col_op_swap(t, j)
                        dirty = True
                        break
            if not dirty:
                break
        if M[t][t] < 0:
            col_op_negate(t)
        t += 1

    # Enforce the divisibility chain d_i | d_{i+1} via the 2x2 gcd/lcm trick.
    r = t
    changed = True
    while changed:
        changed = False
        for i in range(r - 1):
            a, b = M[i][i], M[i + 1][i + 1]
            if b % a != 0:
                col_op_add(i, i + 1, 1)  # block is now [[a, 0], [b, b]]
                while M[i + 1][i] != 0:
                    q = M[i][i] // M[i + 1][i]
                    _add_row(M, i, i + 1, -q)
                    _add_row(U, i, i + 1, -q)
                    _swap_rows(M, i, i + 1)
                    _swap_rows(U, i, i + 1)
                if M[i][i] < 0:
                    col_op_negate(i)
                while M[i][i + 1] != 0:
                    q = M[i][i + 1] // M[i][i]
                    col_op_add(i + 1, i, -q)
                if M[i + 1][i + 1] < 0:
                    col_op_negate(i + 1)
                changed = True

    diag = [M[k][k] for k in range(min(rows, cols))]
    return diag, U, V, Vinv


def solve_mod(A, b, m):
    """One solution x of A x = b (mod m), or None if there is none.

    A is a list of integer rows, b an integer vector, m >= 1.
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if rows == 0:
        return [0] * cols
    diag, U, V, _ = smith_normal_form(A)
    c = [v % m for v in mat_mul_vec(U, b)]
    y = [0] * cols
    for i in range(rows):
        d = diag[i] if i < len(diag) and i < cols else 0
        ci = c[i] if i < len(c) else 0
        if d == 0:
            if ci % m != 0:
                return None
            continue
        g = gcd(d, m)
        if ci % g != 0:
            return None
        mm = m // g
        y[i] = ((ci // g) * pow(d // g, -1, mm)) % mm if mm > 1 else 0
    x = mat_mul_vec(V, y)
    return [v % m for v in x]


def kernel_lattice_mod(A, m):
    """Generators of the lattice {x in Z^cols : A x = 0 (mod m)}.

    Returns a list of integer column vectors spanning the solution lattice
    (which always contains m Z^cols).
    """
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if rows == 0 or cols == 0:
        return [[m if i == j else 0 for i in range(cols)] for j in range(cols)] if cols else []
    diag, _, V, _ = smith_normal_form(A)
    gens = []
    for j in range(cols):
        d = diag[j] if j < len(diag) else 0
        scale = m // gcd(d, m) if d != 0 else 1
        gens.append([scale * V[i][j] for i in range(cols)])
    return gens


def quotient_divisors(gens, rels):
    """Invariant factors of (lattice spanned by gens) / (sublattice by rels).

    ``gens``: list of k column vectors in Z^n spanning a rank-k lattice L.
    ``rels``: list of column vectors in Z^n, each lying in L.
    Returns the nontrivial invariant factors (each > 1, 0 for free summands).
    """
    k = len(gens)
    if k == 0:
        return []
    n = len(gens[0])
    G = [[gens[j][i] for j in range(k)] for i in range(n)]
    diag, U, _, _ = smith_normal_form(G)
    # Coordinates of each relation w.r.t. the generator basis: solve G c = r.
    coords = []
    for r in rels:
        ur = mat_mul_vec(U, r)
        c = []
        for i in range(k):
            d = diag[i] if i < len(diag) else 0
            if d == 0:
                raise ValueError("generator matrix is not full column rank")
            if ur[i] % d != 0:
                raise ValueError("relation vector outside generated lattice")
            c.append(ur[i] // d)
        for i in range(k, n):
            if ur[i] != 0:
                raise ValueError("relation vector outside generated lattice")
        coords.append(c)
    if not coords:
        return [0] * k
    C = [[coords[j][i] for j in range(len(coords))] for i in range(k)]
    cd, _, _, _ = smith_normal_form(C)
    out = []
    for i in range(k):
        d = cd[i] if i < len(cd) else 0
        if d != 1:
            out.append(d)
    return out
