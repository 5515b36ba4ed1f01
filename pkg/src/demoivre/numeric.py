"""High-precision complex values with an explicit precision tag.

ComplexVal wraps a pair of mpmath floats together with the bit precision the
value claims.  Arithmetic between tagged values requires matching tags, so a
low-precision number can never silently contaminate a high-precision
computation.  Heavy inner loops work on raw mpmath numbers inside a single
``mp.workprec`` block and box their results at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpc, mpf

DEFAULT_PRECISION_BITS = 192


def mpf_from_fraction(x: Fraction, bits: int):
    with mp.workprec(bits):
        return mpf(x.numerator) / x.denominator


def decimal_digits(bits: int) -> int:
    return int(bits * 0.30103) + 3


@dataclass(frozen=True)
class ComplexVal:
    re: object  # mpmath.mpf
    im: object  # mpmath.mpf
    precision_bits: int

    @classmethod
    def make(cls, re, im=0, bits: int = DEFAULT_PRECISION_BITS) -> "ComplexVal":
        with mp.workprec(bits):
            if isinstance(re, Fraction):
                re = mpf(re.numerator) / re.denominator
            if isinstance(im, Fraction):
                im = mpf(im.numerator) / im.denominator
            return cls(mpf(re), mpf(im), bits)

    @classmethod
    def from_mpc(cls, z, bits: int) -> "ComplexVal":
        with mp.workprec(bits):
            z = mpc(z)
            return cls(z.real, z.imag, bits)

    def to_mpc(self):
        return mpc(self.re, self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def _coerce(self, other):
        if isinstance(other, ComplexVal):
            if other.precision_bits != self.precision_bits:
                raise ValueError(
                    f"mixed precisions: {self.precision_bits} vs {other.precision_bits}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return ComplexVal.make(Fraction(other), 0, self.precision_bits)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        with mp.workprec(self.precision_bits):
            return ComplexVal(self.re + other.re, self.im + other.im, self.precision_bits)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        with mp.workprec(self.precision_bits):
            return ComplexVal(self.re - other.re, self.im - other.im, self.precision_bits)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return ComplexVal(-self.re, -self.im, self.precision_bits)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        with mp.workprec(self.precision_bits):
            return ComplexVal(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
                self.precision_bits,
            )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        with mp.workprec(self.precision_bits):
            q = self.to_mpc() / other.to_mpc()
            return ComplexVal(q.real, q.imag, self.precision_bits)

    def conjugate(self) -> "ComplexVal":
        return ComplexVal(self.re, -self.im, self.precision_bits)

    def abs(self):
        with mp.workprec(self.precision_bits):
            return abs(self.to_mpc())

    def is_real(self, rel_tol=None) -> bool:
        """Imaginary part negligible against the value's own magnitude."""
        with mp.workprec(self.precision_bits):
            if rel_tol is None:
                rel_tol = mpf(2) ** (-(self.precision_bits // 2))
            scale = max(mpf(1), abs(self.re), abs(self.im))
            return abs(self.im) <= rel_tol * scale

    def to_json(self) -> dict:
        digits = decimal_digits(self.precision_bits)
        with mp.workprec(self.precision_bits):
            return {
                "value": [mp.nstr(self.re, digits), mp.nstr(self.im, digits)],
                "precision_bits": self.precision_bits,
            }

    @classmethod
    def from_json(cls, obj: dict) -> "ComplexVal":
        bits = int(obj["precision_bits"])
        with mp.workprec(bits):
            return cls(mpf(obj["value"][0]), mpf(obj["value"][1]), bits)

    def __str__(self) -> str:
        digits = min(decimal_digits(self.precision_bits), 20)
        with mp.workprec(self.precision_bits):
            return mp.nstr(self.to_mpc(), digits)
