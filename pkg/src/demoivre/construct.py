"""De Moivre problem instances and the polynomials attached to them.

An instance fixes an odd degree n >= 3 and rationals d != 0 and R not a
square; D = d^2 - R.  The De Moivre polynomial is the monic degree-n
polynomial whose zeros arise from n-th roots of d + sqrt(R) and d - sqrt(R).
Its constant term is -2*d*D^((n-1)/2): the factor 2 is forced by the general
even/odd normalization, by the n = 9 reference instance (constant -52), and by
the Filaseta family (constant +1).

The companion polynomials built here are all exactly rational because the
half-integer powers of sqrt(D) or sqrt(R) always pair up: substituting
Z/sqrt(D) into an even (resp. odd) F_m leaves only integer powers of D once
the stated prefactor is applied.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chebyshev import cheb_f, dickson
from .errors import InvalidInstanceError
from .exact import format_rational, is_prime, squarefree_decompose
from .polys import RatPoly


@dataclass(frozen=True)
class DeMoivreInstance:
    n: int
    d: Fraction
    r: Fraction
    s: Fraction
    r_prime: int
    dd: Fraction  # D = d^2 - R

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "d": format_rational(self.d),
            "R": format_rational(self.r),
            "s": format_rational(self.s),
            "rprime": self.r_prime,
            "D": format_rational(self.dd),
        }

    def __str__(self) -> str:
        return f"(n={self.n}, d={format_rational(self.d)}, R={format_rational(self.r)})"


def make_instance(n: int, d, r) -> DeMoivreInstance:
    """Validate parameters and precompute s, r', and D."""
    if n < 3 or n % 2 == 0:
        raise InvalidInstanceError(f"degree must be odd and >= 3, got {n}")
    d = Fraction(d)
    r = Fraction(r)
    if d == 0:
        raise InvalidInstanceError("d must be nonzero")
    if r == 0:
        raise InvalidInstanceError("R must be nonzero (a square is not allowed)")
    decomp = squarefree_decompose(r)
    if decomp.r_prime == 1:
        raise InvalidInstanceError(f"R = {format_rational(r)} is a square")
    dd = d * d - r
    assert dd != 0
    return DeMoivreInstance(n, d, r, decomp.s, decomp.r_prime, dd)


def de_moivre_poly(inst: DeMoivreInstance) -> RatPoly:
    """Monic degree-n polynomial dickson(n, D) - 2*d*D^((n-1)/2)."""
    n, dd = inst.n, inst.dd
    return dickson(n, dd) - RatPoly(2 * inst.d * dd ** ((n - 1) // 2))


def radical_split_poly(inst: DeMoivreInstance) -> RatPoly:
    """Degree n-1 polynomial A with {y, y'} = z^((n+1)/2) * (u/(2D) +- A(u)*sqrt(R)).

    Built as (F_{n-1}(Z/sqrt(D)) - d*Z/D) / (2R); n-1 even keeps it rational.
    At any zero u of the De Moivre polynomial, A(u) != 0.
    """
    n, d, r, dd = inst.n, inst.d, inst.r, inst.dd
    f = cheb_f(n - 1)
    terms: dict[int, Fraction] = {}
    for i in range(0, n, 2):
        if f[i] != 0:
            terms[i] = f[i] * dd ** (-(i // 2))
    terms[1] = terms.get(1, Fraction(0)) - d / dd
    return RatPoly.from_dict(terms) * (1 / (2 * r))


def split_cofactor_poly(inst: DeMoivreInstance) -> RatPoly:
    """Degree n-2 partner polynomial in the product identity below.

    Equals (sqrt(D)^(4-n) * F_{n-2}(Z/sqrt(D)) - 2d / D^((n-3)/2)) / R;
    the odd parity of F_{n-2} pairs all radical exponents.
    """
    n, d, r, dd = inst.n, inst.d, inst.r, inst.dd
    f = cheb_f(n - 2)
    terms: dict[int, Fraction] = {}
    for i in range(1, n - 1, 2):
        if f[i] != 0:
            # exponent (4 - n - i)/2 is an integer since n and i are odd
            terms[i] = f[i] * dd ** ((4 - n - i) // 2)
    terms[0] = terms.get(0, Fraction(0)) - 2 * d * dd ** (-((n - 3) // 2))
    return RatPoly.from_dict(terms) * (1 / r)


def check_split_identity(inst: DeMoivreInstance) -> bool:
    """Exact polynomial identity 4*D^2*R*A^2 == f_n * cofactor + Z^2 - 4D.

    This is the identity that lets a single zero u reproduce the radical pair
    (y, y'); it must hold for every valid instance.
    """
    a = radical_split_poly(inst)
    f = de_moivre_poly(inst)
    cof = split_cofactor_poly(inst)
    z2 = RatPoly(0, 0, 1)
    lhs = a * a * (4 * inst.dd**2 * inst.r)
    rhs = f * cof + z2 - RatPoly(4 * inst.dd)
    return lhs == rhs


def sine_transfer_poly(k: int, r) -> RatPoly:
    """Rational polynomial P_k carrying sqrt(R)*(w - 1/w) to sqrt(R)*(w^k - 1/w^k)
    for w on the unit circle, defined for odd k >= 1.

    Termwise, with F_k = sum c_j Z^(k-2j):  P_k = sum (-1)^j c_j R^(j-(k-1)/2) Z^(k-2j).
    """
    if k < 1 or k % 2 == 0:
        raise ValueError("defined for odd k >= 1 only")
    r = Fraction(r)
    if r == 0:
        raise ValueError("R must be nonzero")
    f = cheb_f(k)
    half = (k - 1) // 2
    terms: dict[int, Fraction] = {}
    for j in range(half + 1):
        deg = k - 2 * j
        if f[deg] != 0:
            terms[deg] = (-1) ** j * f[deg] * r ** (j - half)
    return RatPoly.from_dict(terms)


def family_filaseta(p: int, m: int) -> DeMoivreInstance:
    """Instance with d = -1/(2*m^((p-1)/2)) and R = (1-4*m^p)/(4*m^(p-1)).

    Then D = m and the polynomial is dickson(p, m) + 1, which is known to be
    irreducible with full Galois group of order p*(p-1).
    """
    if p < 5 or not is_prime(p):
        raise InvalidInstanceError(f"p must be a prime >= 5, got {p}")
    if m < 2:
        raise InvalidInstanceError(f"m must be an integer >= 2, got {m}")
    d = Fraction(-1, 2 * m ** ((p - 1) // 2))
    r = Fraction(1 - 4 * m**p, 4 * m ** (p - 1))
    inst = make_instance(p, d, r)
    assert inst.dd == m
    return inst


def family_bruen(p: int, d, s) -> DeMoivreInstance:
    """Instance of prime degree p = 3 mod 4 with R = -p * s^2.

    For irreducible members the Galois group has order p*(p-1)/2.
    """
    if not is_prime(p) or p % 4 != 3:
        raise InvalidInstanceError(f"p must be a prime congruent to 3 mod 4, got {p}")
    d = Fraction(d)
    s = Fraction(s)
    if d == 0 or s == 0:
        raise InvalidInstanceError("d and s must be nonzero")
    return make_instance(p, d, -p * s * s)
