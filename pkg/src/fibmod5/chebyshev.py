"""Chebyshev polynomials of both kinds over exact scalars.

Evaluation points may be ints, Fractions, or Root5 field elements; the
recurrences are written generically and stay exact for all three.  Besides
the defining recurrences there are two independent evaluation paths (the
explicit binomial representations) and the inversion-style identities used
to derive the binomial sum families; the checks below compare paths
exactly, with no tolerance.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Union

from .golden import Root5
from .sequences import binom

ExactScalar = Union[int, Fraction, Root5]


def cheb_t(n: int, x: ExactScalar) -> ExactScalar:
    """T_n(x) by the three-term recurrence."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return x * 0 + 1
    prev, cur = x * 0 + 1, x
    for _ in range(n - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def cheb_u(n: int, x: ExactScalar) -> ExactScalar:
    """U_n(x) by the three-term recurrence."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return x * 0 + 1
    prev, cur = x * 0 + 1, 2 * x
    for _ in range(n - 1):
        prev, cur = cur, 2 * x * cur - prev
    return cur


def _powers(base: ExactScalar, top: int) -> list[ExactScalar]:
    pows: list[ExactScalar] = [base * 0 + 1]
    for _ in range(top):
        pows.append(pows[-1] * base)
    return pows


def cheb_t_explicit(n: int, x: ExactScalar) -> ExactScalar:
    """T_n(x) via the binomial sum over (x^2 - 1)^k x^(n-2k)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    w = x * x - 1
    xp = _powers(x, n)
    wp = _powers(w, n // 2)
    total = x * 0
    for k in range(n // 2 + 1):
        total = total + binom(n, 2 * k) * wp[k] * xp[n - 2 * k]
    return total


def cheb_u_explicit(n: int, x: ExactScalar) -> ExactScalar:
    """U_n(x) via the binomial sum over (x^2 - 1)^k x^(n-2k)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    w = x * x - 1
    xp = _powers(x, n)
    wp = _powers(w, n // 2)
    total = x * 0
    for k in range(n // 2 + 1):
        total = total + binom(n + 1, 2 * k + 1) * wp[k] * xp[n - 2 * k]
    return total


def krxoelz_check(n: int, x: ExactScalar, sign: str = "+") -> bool:
    """Inversion identity behind the n/(n+k)-weighted sums.

    Checks  n * sum_k (-2)^k/(n+k) * C(n+k, n-k) * (1 -/+ x)^k
    against (+/-1)^n * T_n(x), exactly.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    w = (1 - x) if sign == "+" else (1 + x)
    wp = _powers(w, n)
    total = x * 0
    for k in range(n + 1):
        coef = Fraction(n * (-2) ** k, n + k) * binom(n + k, n - k)
        total = total + coef * wp[k]
    rhs = cheb_t(n, x)
    if sign == "-" and n % 2 == 1:
        rhs = -rhs
    return total == rhs


def u_bridge_checks(n: int, x: ExactScalar) -> bool:
    """The three second-kind bridges used by the k-weighted sum families.

    * sum_k (-1)^(n-k) 2^k k/(n+k) C(n+k, n-k) (1 -/+ x)^(k-1)
      equals (-/+1)^(n-1) U_{n-1}(x)     (both sign choices);
    * sum_k (-1)^(n-k) 4^k k/(n+k) C(n+k, n-k) x^(2k-1) = U_{2n-1}(x);
    * sum_k (-1)^(n-k) 4^k C(n+k, n-k) x^(2k) = U_{2n}(x).
    """
    if n < 1:
        raise ValueError("n must be positive")
    ok = True
    for sign in ("+", "-"):
        w = (1 - x) if sign == "+" else (1 + x)
        wp = _powers(w, n - 1)
        total = x * 0
        for k in range(1, n + 1):
            coef = Fraction((-1) ** (n - k) * 2 ** k * k, n + k) * binom(n + k, n - k)
            total = total + coef * wp[k - 1]
        rhs = cheb_u(n - 1, x)
        # The (1-x) variant carries the factor (-1)^(n-1); the (1+x) one does not.
        if sign == "+" and (n - 1) % 2 == 1:
            rhs = -rhs
        ok = ok and total == rhs

    xp = _powers(x, 2 * n)
    total = x * 0
    for k in range(1, n + 1):
        coef = Fraction((-1) ** (n - k) * 4 ** k * k, n + k) * binom(n + k, n - k)
        total = total + coef * xp[2 * k - 1]
    ok = ok and total == cheb_u(2 * n - 1, x)

    total = x * 0
    for k in range(n + 1):
        coef = (-1) ** (n - k) * 4 ** k * binom(n + k, n - k)
        total = total + coef * xp[2 * k]
    ok = ok and total == cheb_u(2 * n, x)
    return ok
