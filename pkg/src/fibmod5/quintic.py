"""Exact values of the trigonometric quantities at fifths of pi.

Every closed form in the identity catalog selects its arm by the residue of
the upper summation limit mod 5; the values below are the exact golden-ring
constants behind those case splits.

cos(n*pi/5) and the T_n tables take values in half the ring (alpha/2 and
friends), so they are returned as :class:`HalfGolden`: a ring numerator with
a fixed, implicit denominator of 2.  The sine ratios land in the ring itself
and are returned as plain :class:`GoldenElement` values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .golden import ALPHA, BETA, ONE, TWO, GoldenElement, Root5, from_int


def mod5(n: int) -> int:
    """Residue of n modulo 5, always in {0, 1, 2, 3, 4}."""
    return n % 5


@dataclass(frozen=True)
class HalfGolden:
    """A ring element divided by two: value = doubled / 2."""

    doubled: GoldenElement

    def to_root5(self) -> Root5:
        return self.doubled.to_root5() / 2

    def to_float(self) -> float:
        return self.doubled.to_float() / 2

    def __neg__(self) -> "HalfGolden":
        return HalfGolden(-self.doubled)

    def __str__(self) -> str:
        return f"({self.doubled})/2"


HALF_ALPHA = HalfGolden(ALPHA)
HALF_BETA = HalfGolden(BETA)
HALF_ONE = HalfGolden(TWO)


def _sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


def cos_npi5(n: int) -> HalfGolden:
    """Exact cos(n*pi/5)."""
    r = mod5(n)
    if r == 0:
        return HalfGolden(from_int(2 * _sign(n)))
    base = ALPHA if r in (1, 4) else BETA
    return HalfGolden(from_int(_sign(n - 1)) * base)


def cos_2npi5(n: int) -> HalfGolden:
    """Exact cos(2*n*pi/5)."""
    r = mod5(n)
    if r == 0:
        return HALF_ONE
    return HalfGolden(-BETA) if r in (1, 4) else HalfGolden(-ALPHA)


def sin_ratio(n: int) -> GoldenElement:
    """Exact sin(n*pi/5) / sin(pi/5)."""
    r = mod5(n)
    if r == 0:
        return from_int(0)
    s = _sign(n // 5)
    return from_int(s) if r in (1, 4) else from_int(s) * ALPHA


def sin_ratio3(n: int) -> GoldenElement:
    """Exact sin(3*n*pi/5) / sin(3*pi/5)."""
    r = mod5(n)
    if r == 0:
        return from_int(0)
    s = _sign(n // 5)
    return from_int(s) if r in (1, 4) else from_int(s) * BETA


def sin_odd_ratio(n: int) -> GoldenElement:
    """Exact sin((2n+1)*pi/5) / sin(pi/5)."""
    r = mod5(n)
    if r == 0:
        return ONE
    if r == 1:
        return ALPHA
    if r == 2:
        return from_int(0)
    if r == 3:
        return -ALPHA
    return -ONE


def cheb_t_at_minus_alpha_half(n: int) -> HalfGolden:
    """Exact T_n(-alpha/2) for n >= 0."""
    if n < 0:
        raise ValueError("n must be non-negative")
    r = mod5(n)
    if r == 0:
        return HALF_ONE
    return HalfGolden(-ALPHA) if r in (1, 4) else HalfGolden(-BETA)


def cheb_t_at_minus_beta_half(n: int) -> HalfGolden:
    """Exact T_n(-beta/2) for n >= 0; swaps alpha and beta in the table."""
    if n < 0:
        raise ValueError("n must be non-negative")
    r = mod5(n)
    if r == 0:
        return HALF_ONE
    return HalfGolden(-BETA) if r in (1, 4) else HalfGolden(-ALPHA)


def numeric_shadow(n: int) -> list[tuple[str, float, float]]:
    """Float cross-check rows (label, exact-as-float, direct trig) for one n."""
    rows = [
        ("cos_npi5", cos_npi5(n).to_float(), math.cos(n * math.pi / 5)),
        ("cos_2npi5", cos_2npi5(n).to_float(), math.cos(2 * n * math.pi / 5)),
        ("sin_ratio", sin_ratio(n).to_float(), math.sin(n * math.pi / 5) / math.sin(math.pi / 5)),
        ("sin_ratio3", sin_ratio3(n).to_float(), math.sin(3 * n * math.pi / 5) / math.sin(3 * math.pi / 5)),
        ("sin_odd_ratio", sin_odd_ratio(n).to_float(),
         math.sin((2 * n + 1) * math.pi / 5) / math.sin(math.pi / 5)),
    ]
    if n >= 0:
        rows.append(("cheb_t_at_minus_alpha_half", cheb_t_at_minus_alpha_half(n).to_float(),
                     math.cos(n * math.acos(-ALPHA.to_float() / 2))))
        rows.append(("cheb_t_at_minus_beta_half", cheb_t_at_minus_beta_half(n).to_float(),
                     math.cos(n * math.acos(-BETA.to_float() / 2))))
    return rows
