"""Exact scalars in cyclotomic fields.

A CycSum of level M is a rational linear combination of the M-th roots of
unity, stored as a coefficient vector indexed by powers of zeta_M.  Vectors
are kept in the canonical basis 1, zeta, ..., zeta^(phi(M)-1) by reducing
modulo the M-th cyclotomic polynomial, so equality of CycSums is equality of
the complex numbers they denote.  Values of different levels are compared and
combined after embedding into the lcm level.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import lcm


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> tuple[int, ...]:
    """Coefficients of the m-th cyclotomic polynomial, lowest power first."""
    if m == 1:
        return (-1, 1)
    # x^m - 1 divided by the product of Phi_d over proper divisors d of m.
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _poly_divide_exact(num, cyclotomic_poly(d))
    return tuple(num)


def _poly_divide_exact(num, den):
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c % den[dn] != 0:
            raise ArithmeticError("non-exact polynomial division")
        q = c // den[dn]
        out[i - dn] = q
        if q:
            for k in range(dn + 1):
                num[i - dn + k] -= q * den[k]
    if any(num[:dn]):
        raise ArithmeticError("non-exact polynomial division")
    return out


def _reduce(level, coeffs):
    """Reduce a coefficient list modulo Phi_level; return a level-long tuple."""
    phi = cyclotomic_poly(level)
    deg = len(phi) - 1
    work = list(coeffs) + [Fraction(0)] * max(0, level - len(coeffs))
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            work[i] = Fraction(0)
            for k in range(deg):
                work[i - deg + k] -= c * phi[k]
    return tuple(work[:level]) if len(work) >= level else tuple(
        work + [Fraction(0)] * (level - len(work)))


def _coerce(x):
    if isinstance(x, CycSum):
        return x
    if isinstance(x, (int, Fraction)):
        return CycSum.from_rational(x)
    return NotImplemented


class CycSum:
    """An element of Q(zeta_level), exact and immutable."""

    __slots__ = ("level", "coeffs")

    def __init__(self, level, coeffs, *, _reduced=False):
        if level < 1:
            raise ValueError("level must be >= 1")
        object.__setattr__(self, "level", level)
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        if not _reduced:
            cs = _reduce(level, cs)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("CycSum is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(level=1):
        return CycSum(level, [Fraction(0)] * level, _reduced=True)

    @staticmethod
    def one(level=1):
        c = [Fraction(0)] * level
        c[0] = Fraction(1)
        return CycSum(level, c, _reduced=True)

    @staticmethod
    def from_rational(q, level=1):
        c = [Fraction(0)] * level
        c[0] = Fraction(q)
        return CycSum(level, c, _reduced=True)

    @staticmethod
    def root(modulus, exponent):
        """zeta_modulus ** exponent as an exact value."""
        e = exponent % modulus
        c = [Fraction(0)] * modulus
        c[e] = Fraction(1)
        return CycSum(modulus, c)

    # -- ring structure ----------------------------------------------------

    def _at_level(self, target):
        if target == self.level:
            return self.coeffs
        step = target // self.level
        out = [Fraction(0)] * target
        for i, c in enumerate(self.coeffs):
            if c:
                out[i * step] = c
        return _reduce(target, out)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        target = lcm(self.level, other.level)
        a = self._at_level(target)
        b = other._at_level(target)
        return CycSum(target, [x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self):
        return CycSum(self.level, [-c for c in self.coeffs], _reduced=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return CycSum(self.level, [c * q for c in self.coeffs], _reduced=True)
        if not isinstance(other, CycSum):
            return NotImplemented
        target = lcm(self.level, other.level)
        a = self._at_level(target)
        b = other._at_level(target)
        prod = [Fraction(0)] * (2 * target)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return CycSum(target, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        target = lcm(self.level, other.level)
        return self._at_level(target) == other._at_level(target)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    @property
    def is_zero(self):
        return not any(self.coeffs)

    # -- rendering ---------------------------------------------------------

    def to_complex(self) -> complex:
        z = 0j
        for i, c in enumerate(self.coeffs):
            if c:
                z += float(c) * cmath.exp(2j * cmath.pi * i / self.level)
        return z

    def approx_str(self, digits=12):
        z = self.to_complex()
        return f"{z.real:.{digits}g}{z.imag:+.{digits}g}i"

    def __repr__(self):
        if self.is_zero:
            return "CycSum(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif self.level == 1:
                terms.append(str(c))
            else:
                mono = f"z{self.level}^{i}" if i != 1 else f"z{self.level}"
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "CycSum(" + " + ".join(terms) + ")"
