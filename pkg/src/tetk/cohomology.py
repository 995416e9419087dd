"""Brute-force groupoid cohomology with mu_m coefficients.

H^p = ker(delta_p) / im(delta_{p-1}) over Z/m, computed by integer linear
algebra on the exponent lattices: the cocycle lattice comes from a Smith
normal form of the incidence matrix of delta_p, the relation subgroup stacks
the image of delta_{p-1} with m times the identity, and the quotient's
invariant factors are read off a second Smith form.
"""

from __future__ import annotations

import numpy as np

from tetk.cochain import Cochain, incidence_matrix
from tetk.nerve import BudgetError, nerve
from tetk.snf import kernel_lattice_mod, quotient_divisors, solve_mod


def cohomology_group(groupoid, degree, modulus, budget=None):
    """Invariant factors (> 1) of H^degree(groupoid; mu_modulus).

    The trivial group is the empty list.  Raises BudgetError when the
    degree-(p+1) nerve exceeds the tuple budget.
    """
    if degree < 0:
        raise ValueError("degree must be >= 0")
    nc = nerve(groupoid)
    nc.check_budget(degree + 1, budget)
    n = nc.count(degree)
    if n == 0:
        return []
    delta_p = incidence_matrix(groupoid, degree + 1)
    cocycle_gens = kernel_lattice_mod(delta_p, modulus)

    relations = []
    if degree > 0:
        delta_prev = incidence_matrix(groupoid, degree)
        n_prev = nc.count(degree - 1)
        for j in range(n_prev):
            relations.append([delta_prev[i][j] for i in range(n)])
    for i in range(n):
        col = [0] * n
        col[i] = modulus
        relations.append(col)

    factors = [d for d in quotient_divisors(cocycle_gens, relations) if d != 1]
    if any(d == 0 for d in factors):
        raise RuntimeError("cohomology over Z/m came out with a free summand")
    return sorted(_prime_power_parts(factors))


def _prime_power_parts(invariant_factors):
    """Split invariant factors into elementary divisors (prime powers)."""
    out = []
    for d in invariant_factors:
        p = 2
        while d > 1:
            if d % p == 0:
                q = 1
                while d % p == 0:
                    q *= p
                    d //= p
                out.append(q)
            p += 1
    return out


def group_order(divisors):
    out = 1
    for d in divisors:
        out *= d
    return out


def is_coboundary(c: Cochain) -> bool:
    """Whether c = delta(b) for some cochain b of one degree lower."""
    witness = coboundary_witness(c)
    return witness is not None


def coboundary_witness(c: Cochain):
    """A cochain b with delta(b) = c, or None."""
    if c.degree == 0:
        return None if c.table.any() else Cochain.zero(c.groupoid, 0, c.modulus)
    A = incidence_matrix(c.groupoid, c.degree)
    x = solve_mod(A, [int(v) for v in c.table], c.modulus)
    if x is None:
        return None
    return Cochain(c.groupoid, c.degree - 1, c.modulus, np.array(x, dtype=np.int64))


def class_order(c: Cochain) -> int:
    """Order of a cocycle's cohomology class: least t >= 1 with t*c a coboundary."""
    m = c.modulus
    for t in range(1, m + 1):
        if m % t:
            continue
        if is_coboundary(c.scale(t)):
            return t
    raise RuntimeError("class order not found; is the input a cocycle?")
