"""Chebyshev polynomials T_n, their monic rescaling F_n = 2*T_n(Z/2), and
rational Dickson polynomials.

F_n is the workhorse everywhere in this package: it is monic with integer
coefficients, has only terms of degree congruent to n mod 2, and satisfies
both 2*cos(n*t) = F_n(2*cos(t)) and the three-term recurrence
F_n = Z*F_{n-1} - F_{n-2}.  T_n exists mainly so the recurrence construction
can be cross-checked against the explicit binomial formula.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .polys import RatPoly

_Z = RatPoly(0, 1)


@functools.lru_cache(maxsize=None)
def cheb_t(n: int) -> RatPoly:
    """T_n with cos(n*t) = T_n(cos t), by the recurrence T_n = 2Z*T_{n-1} - T_{n-2}."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    if n == 0:
        return RatPoly(1)
    if n == 1:
        return _Z
    return 2 * _Z * cheb_t(n - 1) - cheb_t(n - 2)


def cheb_t_closed(n: int) -> RatPoly:
    """Explicit binomial form of T_n (n >= 1), used as an independent oracle."""
    if n < 1:
        raise ValueError("closed form is stated for degree >= 1")
    terms: dict[int, Fraction] = {}
    for k in range(n // 2 + 1):
        c = Fraction((-1) ** k * n, n - k) * comb(n - k, k) * 2 ** (n - 2 * k - 1)
        terms[n - 2 * k] = c
    return RatPoly.from_dict(terms)


@functools.lru_cache(maxsize=None)
def cheb_f(n: int) -> RatPoly:
    """F_n = 2*T_n(Z/2): monic, integer coefficients, F_0 = 2, F_1 = Z."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    if n == 0:
        return RatPoly(2)
    if n == 1:
        return _Z
    return _Z * cheb_f(n - 1) - cheb_f(n - 2)


def cheb_f_closed(n: int) -> RatPoly:
    """Binomial form of F_n (n >= 1); the powers of two of T_n cancel."""
    if n < 1:
        raise ValueError("closed form is stated for degree >= 1")
    terms: dict[int, Fraction] = {}
    for k in range(n // 2 + 1):
        terms[n - 2 * k] = Fraction((-1) ** k * n, n - k) * comb(n - k, k)
    return RatPoly.from_dict(terms)


def dickson(n: int, v) -> RatPoly:
    """Dickson polynomial sqrt(v)^n * F_n(Z / sqrt(v)), always rational.

    Term-wise the radicals cancel: if F_n = sum c_k Z^(n-2k) the result is
    sum c_k v^k Z^(n-2k).  Satisfies D_n(w + v/w) = w^n + (v/w)^n.
    """
    if n < 1:
        raise ValueError("degree must be >= 1")
    v = Fraction(v)
    if v == 0:
        raise ValueError("parameter v must be nonzero")
    f = cheb_f(n)
    terms = {}
    for k in range(n // 2 + 1):
        deg = n - 2 * k
        if f[deg] != 0:
            terms[deg] = f[deg] * v**k
    return RatPoly.from_dict(terms)


@dataclass(frozen=True)
class IdentityReport:
    n_max: int
    checked: int
    failures: list[str] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return not self.failures


def check_chebyshev_identities(n_max: int) -> IdentityReport:
    """Exact check of F_{n-1}^2 = F_n*F_{n-2} - Z^2 + 4 and
    Z*F_{n-1} = F_n + F_{n-2} for every n in 2..n_max."""
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    z2 = _Z * _Z
    failures = []
    for n in range(2, n_max + 1):
        fn, fn1, fn2 = cheb_f(n), cheb_f(n - 1), cheb_f(n - 2)
        if fn1 * fn1 != fn * fn2 - z2 + 4:
            failures.append(f"square identity fails at n={n}")
        if _Z * fn1 != fn + fn2:
            failures.append(f"three-term identity fails at n={n}")
    return IdentityReport(n_max, n_max - 1, failures)
