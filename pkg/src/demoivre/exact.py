"""Exact rational arithmetic helpers: squarefree decomposition, valuations,
integer factoring and continued-fraction reconstruction of rationals.

Rationals are plain ``fractions.Fraction`` values throughout the package;
Fraction already guarantees the reduced form with positive denominator that
every exact-equality check downstream relies on.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

DEFAULT_TRIAL_BOUND = 10**6

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or integer strings into a Fraction."""
    return Fraction(text.strip())


def format_rational(x: Fraction) -> str:
    """Render as "p/q", omitting the denominator when it is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64-bit inputs."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # These witnesses decide primality for all n < 3.3 * 10^24; witnesses
    # >= n are skipped (n that small has already passed the divisor sieve).
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if a >= n:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """Find a nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    rng = random.Random(0xD1CE ^ n)
    while True:
        c = rng.randrange(1, n)
        x = rng.randrange(0, n)
        y, d, q = x, 1, 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            q = q * abs(x - y) % n
            if q == 0:
                d = math.gcd(abs(x - y), n)
                break
            d = math.gcd(q, n)
        if 1 < d < n:
            return d


def factor_completely(n: int) -> dict[int, int]:
    """Full prime factorization of |n| (n != 0) as {prime: exponent}."""
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    # trial division with a 2,4-wheel, then rho on whatever survives
    f = 7
    step = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= n and f < 10**6:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += step[i]
        i = (i + 1) % 8
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return out


@dataclass(frozen=True)
class FactorMap:
    """Possibly partial factorization: product(p**e) * cofactor == |input|.

    The cofactor is 1 when the factorization is complete; otherwise it has no
    prime factor at or below the trial bound that produced it.
    """

    factors: dict[int, int] = field(default_factory=dict)
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1


def factor_integer(m: int, trial_bound: int = DEFAULT_TRIAL_BOUND) -> FactorMap:
    """Trial-divide |m| up to trial_bound, reporting the leftover cofactor.

    Never guesses: a composite remainder above the bound is returned as-is so
    callers can degrade to "inconclusive" instead of risking a wrong verdict.
    """
    if m == 0:
        raise ValueError("cannot factor 0")
    n = abs(m)
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        if p > trial_bound:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    step = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while f * f <= n and f <= trial_bound:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += step[i]
        i = (i + 1) % 8
    if n > 1:
        if n <= trial_bound * trial_bound or is_prime(n):
            # remainder below bound^2 with no divisor <= bound is prime
            out[n] = out.get(n, 0) + 1
            n = 1
    return FactorMap(out, n)


@dataclass(frozen=True)
class SquarefreeDecomp:
    """R = s**2 * r_prime with s a positive rational and r_prime squarefree."""

    s: Fraction
    r_prime: int


def squarefree_decompose(r: Fraction | int) -> SquarefreeDecomp:
    """Split a nonzero rational as s^2 * r' with r' a squarefree integer.

    Works on the full factorization of numerator*denominator, so the result
    is exact for any input the factoring backend can handle.
    """
    r = Fraction(r)
    if r == 0:
        raise ValueError("squarefree decomposition of 0 is undefined")
    num, den = r.numerator, r.denominator
    # r = num/den = num*den / den^2
    fac = factor_completely(num * den)
    r_prime = 1
    s_num = 1
    for p, e in fac.items():
        if e % 2 == 1:
            r_prime *= p
        s_num *= p ** (e // 2)
    if num < 0:
        r_prime = -r_prime
    s = Fraction(s_num, den)
    assert s * s * r_prime == r
    return SquarefreeDecomp(s, r_prime)


def valuation(x: Fraction | int, q: int) -> int:
    """Exponent of the prime q in the nonzero rational x (may be negative)."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("valuation of 0 is undefined")
    if q < 2 or not is_prime(q):
        raise ValueError(f"{q} is not prime")
    v = 0
    n = abs(x.numerator)
    while n % q == 0:
        n //= q
        v += 1
    d = x.denominator
    while d % q == 0:
        d //= q
        v -= 1
    return v


def rational_reconstruct(x, max_den: int, tol) -> Fraction | None:
    """Best continued-fraction convergent p/q of x with q <= max_den.

    x may be a float, Fraction, or mpmath mpf; it is converted exactly to a
    Fraction first (binary floats are dyadic rationals).  Returns None when
    the best convergent misses x by more than tol; callers are expected to
    re-verify any returned candidate exactly.
    """
    if max_den < 1:
        raise ValueError("max_den must be >= 1")
    target = _to_fraction_exact(x)
    tol = _to_fraction_exact(tol)
    best = target.limit_denominator(max_den)
    if abs(target - best) <= tol:
        return best
    return None


def _to_fraction_exact(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(x)
    # mpmath.mpf carries (sign, mantissa, exponent, bitcount)
    if hasattr(x, "_mpf_"):
        sign, man, exp, _ = x._mpf_
        if man == 0 and exp != 0:
            raise ValueError("cannot reconstruct from a non-finite value")
        frac = Fraction(man) * (Fraction(2) ** exp)
        return -frac if sign else frac
    raise TypeError(f"unsupported numeric type {type(x)!r}")
