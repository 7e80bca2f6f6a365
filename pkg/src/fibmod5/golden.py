"""Exact arithmetic around the golden ratio.

Two layers:

* ``GoldenElement`` -- the ring of integers (p + q*sqrt5)/2 with p and q of
  equal parity.  Pure integer arithmetic; this is where alpha, beta and
  their powers live.
* ``Root5`` -- the field Q(sqrt5) with Fraction coordinates, used where
  denominators other than 2 show up (Chebyshev evaluation at alpha/2,
  series limits).  Mixing with ints or Fractions promotes them to a Root5
  with zero irrational part.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .sequences import fib, lucas

_SQRT5 = 5 ** 0.5


@dataclass(frozen=True)
class GoldenElement:
    """Ring element (p + q*sqrt5)/2; requires p == q (mod 2)."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if (self.p - self.q) % 2 != 0:
            raise ValueError(f"parity violated: ({self.p} + {self.q}*sqrt5)/2 is not a ring element")

    def __add__(self, other: "GoldenElement") -> "GoldenElement":
        return GoldenElement(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "GoldenElement") -> "GoldenElement":
        return GoldenElement(self.p - other.p, self.q - other.q)

    def __neg__(self) -> "GoldenElement":
        return GoldenElement(-self.p, -self.q)

    def __mul__(self, other: "GoldenElement") -> "GoldenElement":
        # (p1 p2 + 5 q1 q2) and (p1 q2 + q1 p2) are both even by parity.
        return GoldenElement(
            (self.p * other.p + 5 * self.q * other.q) // 2,
            (self.p * other.q + self.q * other.p) // 2,
        )

    def to_root5(self) -> "Root5":
        return Root5(Fraction(self.p, 2), Fraction(self.q, 2))

    def to_float(self) -> float:
        # Debug/display helper only; all verification stays exact.
        return (self.p + self.q * _SQRT5) / 2

    def __str__(self) -> str:
        return f"({self.p}{self.q:+}*sqrt5)/2"


ZERO = GoldenElement(0, 0)
ONE = GoldenElement(2, 0)
TWO = GoldenElement(4, 0)
ALPHA = GoldenElement(1, 1)
BETA = GoldenElement(1, -1)
SQRT5 = GoldenElement(0, 2)


def from_int(n: int) -> GoldenElement:
    return GoldenElement(2 * n, 0)


def power_alpha(r: int) -> GoldenElement:
    """alpha**r, exactly (L(r) + F(r)*sqrt5)/2 for any integer r."""
    return GoldenElement(lucas(r), fib(r))


def power_beta(r: int) -> GoldenElement:
    """beta**r, exactly (L(r) - F(r)*sqrt5)/2 for any integer r."""
    return GoldenElement(lucas(r), -fib(r))


def decompose(x: GoldenElement) -> tuple[Fraction, Fraction]:
    """Split into (rational part, sqrt5 coefficient) as exact fractions."""
    return Fraction(x.p, 2), Fraction(x.q, 2)


@dataclass(frozen=True)
class Root5:
    """Field element a + b*sqrt5 with rational coordinates."""

    a: Fraction
    b: Fraction

    @classmethod
    def of(cls, value: "Root5 | GoldenElement | Fraction | int") -> "Root5":
        if isinstance(value, Root5):
            return value
        if isinstance(value, GoldenElement):
            return value.to_root5()
        return cls(Fraction(value), Fraction(0))

    def __add__(self, other: "Root5 | Fraction | int") -> "Root5":
        o = Root5.of(other)
        return Root5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other: "Root5 | Fraction | int") -> "Root5":
        o = Root5.of(other)
        return Root5(self.a - o.a, self.b - o.b)

    def __rsub__(self, other: "Root5 | Fraction | int") -> "Root5":
        return Root5.of(other) - self

    def __neg__(self) -> "Root5":
        return Root5(-self.a, -self.b)

    def __mul__(self, other: "Root5 | Fraction | int") -> "Root5":
        o = Root5.of(other)
        return Root5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other: "Fraction | int") -> "Root5":
        # Rational divisors only; field inverses are never needed here.
        return Root5(self.a / other, self.b / other)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (Root5, GoldenElement, Fraction, int)):
            o = Root5.of(other)  # type: ignore[arg-type]
            return self.a == o.a and self.b == o.b
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def is_rational(self) -> bool:
        return self.b == 0

    def to_float(self) -> float:
        return float(self.a) + float(self.b) * _SQRT5

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}{'+' if self.b >= 0 else '-'}{abs(self.b)}*sqrt5"


ALPHA_F = ALPHA.to_root5()
BETA_F = BETA.to_root5()
