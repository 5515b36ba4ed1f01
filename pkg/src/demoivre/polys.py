"""Dense univariate polynomials over the rationals.

Coefficients are stored ascending (index = degree) with the leading zero
stripped, so degree == len(coeffs) - 1 for nonzero polynomials and the zero
polynomial has an empty tuple.  All ring operations are exact.
"""

from __future__ import annotations

import math
from fractions import Fraction

from mpmath import mp

from .exact import factor_completely, format_rational
from .numeric import ComplexVal
from .quadratic import QuadElem


class RatPoly:
    __slots__ = ("coeffs",)

    def __init__(self, *coeffs):
        vals = [Fraction(c) for c in coeffs]
        while vals and vals[-1] == 0:
            vals.pop()
        self.coeffs = tuple(vals)

    @classmethod
    def from_coeffs(cls, coeffs) -> "RatPoly":
        return cls(*coeffs)

    @classmethod
    def from_dict(cls, terms: dict[int, Fraction]) -> "RatPoly":
        if not terms:
            return cls()
        out = [Fraction(0)] * (max(terms) + 1)
        for deg, c in terms.items():
            out[deg] = Fraction(c)
        return cls(*out)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "RatPoly":
        return cls(*([0] * degree + [coeff]))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __getitem__(self, deg: int) -> Fraction:
        if 0 <= deg < len(self.coeffs):
            return self.coeffs[deg]
        return Fraction(0)

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == RatPoly(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(*(self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(*(self[i] - other[i] for i in range(n)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RatPoly(*(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPoly(*(c * other for c in self.coeffs))
        if not isinstance(other, RatPoly):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RatPoly(*out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RatPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = RatPoly(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, den: "RatPoly"):
        if not isinstance(den, RatPoly):
            den = RatPoly(den)
        if den.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        q: dict[int, Fraction] = {}
        rem = list(self.coeffs)
        dd, lead = den.degree, den.coeffs[-1]
        while len(rem) - 1 >= dd and rem:
            k = len(rem) - 1 - dd
            c = rem[-1] / lead
            q[k] = c
            for i, b in enumerate(den.coeffs):
                rem[k + i] -= c * b
            while rem and rem[-1] == 0:
                rem.pop()
        return RatPoly.from_dict(q), RatPoly(*rem)

    def __floordiv__(self, den):
        return divmod(self, den)[0]

    def __mod__(self, den):
        return divmod(self, den)[1]

    def _coerce(self, other):
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly(other)
        return NotImplemented

    def compose(self, inner: "RatPoly") -> "RatPoly":
        """Substitute inner for the variable (Horner on coefficients)."""
        result = RatPoly()
        for c in reversed(self.coeffs):
            result = result * inner + RatPoly(c)
        return result

    def scale_arg(self, factor: Fraction) -> "RatPoly":
        """p(factor * Z) without a full compose."""
        f = Fraction(factor)
        return RatPoly(*(c * f**i for i, c in enumerate(self.coeffs)))

    def eval_exact(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_quad(self, x: QuadElem) -> QuadElem:
        acc = QuadElem(Fraction(0), Fraction(0), x.r_prime)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_complex(self, x: ComplexVal) -> ComplexVal:
        bits = x.precision_bits
        with mp.workprec(bits):
            acc = self.eval_mpc(x.to_mpc())
            return ComplexVal.from_mpc(acc, bits)

    def eval_mpc(self, z):
        """Horner evaluation on a raw mpmath number at the ambient precision."""
        acc = z * 0
        for c in reversed(self.coeffs):
            acc = acc * z
            acc += mp.mpf(c.numerator) / c.denominator
        return acc

    def clear_denominators(self) -> tuple["RatPoly", int]:
        """Primitive integer-coefficient multiple and the factor applied."""
        if self.is_zero:
            return self, 1
        lcm = 1
        for c in self.coeffs:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
        ints = [int(c * lcm) for c in self.coeffs]
        g = 0
        for v in ints:
            g = math.gcd(g, v)
        if g > 1:
            ints = [v // g for v in ints]
        return RatPoly(*ints), lcm

    def rational_roots(self) -> set[Fraction]:
        """All rational zeros, via divisor pairs of the primitive form."""
        if self.is_zero:
            raise ValueError("the zero polynomial has every root")
        prim, _ = self.clear_denominators()
        roots: set[Fraction] = set()
        coeffs = list(prim.coeffs)
        low = 0
        while coeffs[low] == 0:
            low += 1
        if low > 0:
            roots.add(Fraction(0))
            coeffs = coeffs[low:]
        if len(coeffs) == 1:
            return roots
        a0, an = abs(int(coeffs[0])), abs(int(coeffs[-1]))
        for p in _divisors(a0):
            for q in _divisors(an):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    if cand in roots:
                        continue
                    acc = Fraction(0)
                    for c in reversed(coeffs):
                        acc = acc * cand + c
                    if acc == 0:
                        roots.add(cand)
        return roots

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, coeffs: list[str]) -> "RatPoly":
        return cls(*(Fraction(c) for c in coeffs))

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for deg in range(self.degree, -1, -1):
            c = self[deg]
            if c == 0:
                continue
            mag = format_rational(abs(c))
            var = "" if deg == 0 else ("Z" if deg == 1 else f"Z^{deg}")
            coef = mag if (deg == 0 or abs(c) != 1) else ""
            term = coef + ("*" if coef and var else "") + var
            if not parts:
                parts.append(("-" if c < 0 else "") + term)
            else:
                parts.append((" - " if c < 0 else " + ") + term)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"RatPoly({self})"


def _divisors(n: int) -> list[int]:
    if n == 0:
        raise ValueError("0 has infinitely many divisors")
    divs = [1]
    for p, e in factor_completely(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)
