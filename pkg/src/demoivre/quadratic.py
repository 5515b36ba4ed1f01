"""Arithmetic in real and imaginary quadratic fields Q(sqrt(r')).

Elements are a + b*sqrt(r_prime) with rational a, b and a fixed squarefree
integer radicand r_prime.  Elements over different radicands never combine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import format_rational


@dataclass(frozen=True)
class QuadElem:
    a: Fraction
    b: Fraction
    r_prime: int

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if self.r_prime == 0:
            raise ValueError("radicand must be a nonzero squarefree integer")

    def _check(self, other: "QuadElem") -> None:
        if self.r_prime != other.r_prime:
            raise ValueError(
                f"mixed radicands: sqrt({self.r_prime}) vs sqrt({other.r_prime})"
            )

    def _coerce(self, other) -> "QuadElem":
        if isinstance(other, QuadElem):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return QuadElem(Fraction(other), Fraction(0), self.r_prime)
        return NotImplemented

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadElem(self.a + other.a, self.b + other.b, self.r_prime)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadElem(self.a - other.a, self.b - other.b, self.r_prime)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return QuadElem(-self.a, -self.b, self.r_prime)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadElem(
            self.a * other.a + self.b * other.b * self.r_prime,
            self.a * other.b + self.b * other.a,
            self.r_prime,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int) -> "QuadElem":
        if n < 0:
            return self.inverse() ** (-n)
        result = QuadElem(Fraction(1), Fraction(0), self.r_prime)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "QuadElem":
        return QuadElem(self.a, -self.b, self.r_prime)

    def norm(self) -> Fraction:
        """a^2 - b^2 * r', i.e. the element times its conjugate."""
        return self.a * self.a - self.b * self.b * self.r_prime

    def trace(self) -> Fraction:
        return 2 * self.a

    def inverse(self) -> "QuadElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("element has norm 0")
        return QuadElem(self.a / n, -self.b / n, self.r_prime)

    def height(self) -> int:
        """Max of |numerator|, denominator over both coordinates."""
        return max(
            abs(self.a.numerator), self.a.denominator,
            abs(self.b.numerator), self.b.denominator,
        )

    def to_json(self) -> dict:
        return {
            "a": format_rational(self.a),
            "b": format_rational(self.b),
            "rprime": self.r_prime,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "QuadElem":
        return cls(Fraction(obj["a"]), Fraction(obj["b"]), int(obj["rprime"]))

    def __str__(self) -> str:
        if self.b == 0:
            return format_rational(self.a)
        b = format_rational(self.b)
        if self.a == 0:
            return f"{b}*sqrt({self.r_prime})"
        sign = "+" if self.b > 0 else "-"
        return f"{format_rational(self.a)} {sign} {format_rational(abs(self.b))}*sqrt({self.r_prime})"
