"""Membership of quadratic irrationals in odd cyclotomic fields.

The fast test is the conductor criterion: for odd n, sqrt(r') lies in the
n-th cyclotomic field exactly when r' = 1 mod 4 and |r'| divides n.  Because
the whole Galois classification leans on it, the criterion is machine-checked
against an independent numeric oracle: sqrt(r') is assembled from quadratic
Gauss sums (plus i and sqrt(2) pieces as needed), and membership is decided
by whether every automorphism that fixes the n-th roots of unity also fixes
that number.  The oracle uses no conductor theory, only the Galois action
exponent-multiplication on roots of unity.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

from .exact import factor_completely

_ORACLE_TOL = 1e-6


def sqrt_in_cyclotomic(r_prime: int, n: int) -> bool:
    """Conductor criterion for sqrt(r') in the n-th cyclotomic field, n odd."""
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")
    if r_prime == 0:
        raise ValueError("radicand must be nonzero")
    return r_prime % 4 == 1 and n % abs(r_prime) == 0


@lru_cache(maxsize=None)
def _unit_roots(m: int) -> tuple[complex, ...]:
    return tuple(cmath.exp(2j * cmath.pi * a / m) for a in range(m))


def _legendre(a: int, q: int) -> int:
    t = pow(a, (q - 1) // 2, q)
    return -1 if t == q - 1 else t


@lru_cache(maxsize=None)
def _sqrt_factors(r_prime: int) -> tuple[tuple[tuple[int, int, int], ...], ...]:
    """sqrt(r') as a product of root-of-unity sums.

    Each factor is a tuple of (coefficient, modulus, exponent) terms; the
    represented number is the product over factors of
    sum(coeff * zeta_modulus^exponent).  Odd primes q contribute the Gauss
    sum (value sqrt(q) or i*sqrt(q)), an even radicand contributes
    zeta_8 + zeta_8^-1 = sqrt(2), and a power of i fixes the overall phase.
    """
    m = abs(r_prime)
    factors: list[tuple[tuple[int, int, int], ...]] = []
    neg_count = 0
    for q in sorted(factor_completely(m)):
        if q == 2:
            factors.append(((1, 8, 1), (1, 8, 7)))
            continue
        factors.append(tuple((_legendre(a, q), q, a) for a in range(1, q)))
        if q % 4 == 3:
            neg_count += 1
    want_i = 1 if r_prime < 0 else 0
    c = (want_i - neg_count) % 4
    if c == 1:
        factors.append(((1, 4, 1),))
    elif c == 2:
        factors.append(((-1, 1, 0),))
    elif c == 3:
        factors.append(((-1, 4, 1),))
    return tuple(factors)


def _apply_automorphism(factors, k: int) -> complex:
    """Value after the substitution zeta_m -> zeta_m^k in every term."""
    out = 1.0 + 0j
    for terms in factors:
        s = 0j
        for coeff, m, a in terms:
            s += coeff * _unit_roots(m)[a * k % m]
        out *= s
    return out


def sqrt_in_cyclotomic_oracle(r_prime: int, n: int) -> bool:
    """Numeric Gauss-sum membership oracle (independent of the criterion).

    sqrt(r') lives in the N-th cyclotomic field for N = lcm(n, 4*|r'|), and
    lies in the n-th one iff it is fixed by every automorphism zeta -> zeta^k
    with k = 1 mod n.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd and >= 3")
    if r_prime == 0:
        raise ValueError("radicand must be nonzero")
    factors = _sqrt_factors(r_prime)
    target = _apply_automorphism(factors, 1)
    if abs(target * target - r_prime) > _ORACLE_TOL * max(1, abs(r_prime)):
        raise AssertionError(f"gauss-sum assembly of sqrt({r_prime}) is off")
    big_n = math.lcm(n, 4 * abs(r_prime))
    for k in range(1, big_n, n):
        if math.gcd(k, big_n) != 1:
            continue
        if abs(_apply_automorphism(factors, k) - target) > _ORACLE_TOL:
            return False
    return True
