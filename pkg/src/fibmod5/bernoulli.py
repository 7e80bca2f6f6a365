"""Exact Bernoulli numbers and polynomials, plus the golden-limit series.

Bernoulli machinery is exact rational arithmetic throughout.  The infinite
series (partial sums of sin(xt)/sin(t) expansions evaluated at fifths of pi)
compute their coefficients exactly and convert to high-precision floats only
at the very end, so truncation, not rounding, dominates the error.  Terms
alternate and decay factorially in the verified regime; the magnitude of the
first omitted term serves as the tail estimate.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import mpmath as mp

from .golden import ALPHA, BETA, Root5
from .sequences import binom

PRECISION_BITS = 200

_bern_lock = threading.Lock()
_bern: list[Fraction] = [Fraction(1)]


def bernoulli_number(n: int) -> Fraction:
    """B(n) under the z/(e^z - 1) convention, so B(1) = -1/2."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n >= len(_bern):
        with _bern_lock:
            while len(_bern) <= n:
                m = len(_bern)
                acc = sum(binom(m + 1, k) * _bern[k] for k in range(m))
                _bern.append(Fraction(-acc, m + 1))
    return _bern[n]


def bernoulli_poly(n: int, t: Fraction | int) -> Fraction:
    """B_n(t) for exact rational t."""
    if n < 0:
        raise ValueError("n must be non-negative")
    t = Fraction(t)
    acc = Fraction(0)
    tp = Fraction(1)
    for k in range(n + 1):
        acc += binom(n, k) * bernoulli_number(n - k) * tp
        tp *= t
    return acc


def raabe_check(n: int, a: int, x: Fraction | int) -> bool:
    """Multiplication theorem: B_n(a*x) = a^(n-1) sum_k B_n(x + k/a)."""
    if a < 1:
        raise ValueError("a must be positive")
    x = Fraction(x)
    rhs = Fraction(a) ** (n - 1) * sum(bernoulli_poly(n, x + Fraction(k, a)) for k in range(a))
    return bernoulli_poly(n, a * x) == rhs


def difference_check(n: int, t: Fraction | int) -> bool:
    """Forward difference: B_n(t+1) - B_n(t) = n * t^(n-1)."""
    if n < 1:
        raise ValueError("n must be positive")
    t = Fraction(t)
    return bernoulli_poly(n, t + 1) - bernoulli_poly(n, t) == n * t ** (n - 1)


def _to_mpf(q: Fraction) -> mp.mpf:
    return mp.mpf(q.numerator) / q.denominator


def sin_ratio_series_partial(x: Fraction | int, t_value: mp.mpf, K: int) -> mp.mpf:
    """Partial sum of the sin(xt)/sin(t) expansion in odd Bernoulli polynomials.

    Sums K terms of (-1)^k 2^(2k+1)/(2k+1)! B_{2k+1}((1+x)/2) t^(2k); the
    full series converges to sin(x*t)/sin(t) for |t| < pi.
    """
    if K < 1:
        raise ValueError("K must be at least 1")
    t_value = mp.mpf(t_value)
    if abs(t_value) >= mp.pi:
        raise ValueError("series only converges for |t| < pi")
    arg = (1 + Fraction(x)) / 2
    with mp.workprec(PRECISION_BITS):
        t2 = t_value * t_value
        tp = mp.mpf(1)
        total = mp.mpf(0)
        for k in range(K):
            c = Fraction((-1) ** k * 2 ** (2 * k + 1), math.factorial(2 * k + 1)) \
                * bernoulli_poly(2 * k + 1, arg)
            total += _to_mpf(c) * tp
            tp *= t2
        return total


# --------------------------------------------------------------------------
# series catalog

SERIES_IDS = ("last1", "last2", "series1-ber", "series1-ber2", "series2-ber", "series2-ber2")

_PI5 = "pi/5"
_3PI5 = "3*pi/5"


@dataclass(frozen=True)
class SeriesTarget:
    """A series family plus its m parameter (ignored by last1/last2)."""

    family: str
    m: int = 0

    def __post_init__(self) -> None:
        if self.family not in SERIES_IDS:
            raise ValueError(f"unknown series family: {self.family}")
        if self.m < 0:
            raise ValueError("m must be non-negative")


def series_expected(target: SeriesTarget) -> tuple[str, Root5]:
    """(symbolic tag, exact limit) claimed for the target."""
    sign = -1 if target.m % 2 else 1
    if target.family == "last1":
        # alpha/2 - 1 = -beta^2/2
        return "-beta^2/2", Root5.of(ALPHA) / 2 - 1
    if target.family == "last2":
        return "sqrt5*beta", Root5(Fraction(0), Fraction(1)) * BETA.to_root5()
    if target.family in ("series1-ber", "series2-ber"):
        tag = "alpha" if sign == 1 else "-alpha"
        return tag, Root5.of(ALPHA) * sign
    tag = "beta" if sign == 1 else "-beta"
    return tag, Root5.of(BETA) * sign


def _series_terms(target: SeriesTarget, K: int, corrected: bool = False) -> list[mp.mpf]:
    """The first K terms (and the K+1st as a tail probe) of the series."""
    m = target.m
    out: list[mp.mpf] = []
    with mp.workprec(PRECISION_BITS):
        if target.family in ("last1", "last2"):
            t2 = (mp.pi / 5) ** 2
            tp = t2
            for k in range(1, K + 2):
                c = Fraction((-1) ** k, math.factorial(2 * k))
                if target.family == "last2":
                    c *= 2 ** (2 * k + 1)
                out.append(_to_mpf(c) * tp)
                tp *= t2
            return out
        if target.family in ("series1-ber", "series1-ber2"):
            arg = Fraction(5 * m, 2) + Fraction(3, 2)
        else:
            arg = Fraction(5 * m, 2) + 2
        uses_3pi5 = target.family == "series1-ber2" or (target.family == "series2-ber2" and corrected)
        t2 = ((3 * mp.pi / 5) if uses_3pi5 else (mp.pi / 5)) ** 2
        tp = mp.mpf(1)
        for k in range(K + 1):
            c = Fraction((-1) ** k * 2 ** (2 * k + 1), math.factorial(2 * k + 1)) \
                * bernoulli_poly(2 * k + 1, arg)
            out.append(_to_mpf(c) * tp)
            tp *= t2
        return out


@dataclass(frozen=True)
class SeriesOutcome:
    target: SeriesTarget
    terms: int
    tol: float
    expected_symbol: str
    expected: mp.mpf
    partial: mp.mpf
    abs_error: mp.mpf
    tail_bound: mp.mpf
    tail_ok: bool
    passed: bool
    resolution: Optional[str] = None


def _sum_terms(terms: list[mp.mpf]) -> tuple[mp.mpf, mp.mpf]:
    with mp.workprec(PRECISION_BITS):
        partial = mp.fsum(terms[:-1])
        return partial, abs(terms[-1])


def series_verify(target: SeriesTarget, K: int, tol: float) -> SeriesOutcome:
    """Compare the K-term partial sum against the claimed exact limit.

    A tail bound above tol means K was too small for the requested
    tolerance; that is reported separately from a value mismatch.

    The series2-ber2 weights are checked in both printed (25^-k) and
    9^k/25^k forms; the outcome records which one actually holds.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    symbol, exact = series_expected(target)
    with mp.workprec(PRECISION_BITS):
        expected = _to_mpf(exact.a) + _to_mpf(exact.b) * mp.sqrt(5)
        partial, tail = _sum_terms(_series_terms(target, K))
        err = abs(partial - expected)
        resolution = None
        if target.family == "series2-ber2":
            printed_err = err
            partial_corr, tail_corr = _sum_terms(_series_terms(target, K, corrected=True))
            corr_err = abs(partial_corr - expected)
            if printed_err > tol and corr_err <= tol:
                resolution = (
                    f"printed 25^-k weights give {mp.nstr(partial, 12)} (off the claimed "
                    f"limit by {mp.nstr(printed_err, 3)}); the 9^k/25^k weights match "
                    f"{symbol} to {mp.nstr(corr_err, 3)}: the 9^k factor is required")
                partial, tail, err = partial_corr, tail_corr, corr_err
            elif printed_err <= tol:
                resolution = "printed 25^-k weights already match the claimed limit"
        tail_ok = tail < tol
        passed = tail_ok and err <= tol
    return SeriesOutcome(target, K, tol, symbol, expected, partial, err, tail,
                         tail_ok, passed, resolution)


def series_table(target: SeriesTarget, K: int, corrected: bool = False) -> list[tuple[int, mp.mpf, mp.mpf]]:
    """(K', partial sum, |error|) rows for K' = 1..K."""
    _, exact = series_expected(target)
    with mp.workprec(PRECISION_BITS):
        expected = _to_mpf(exact.a) + _to_mpf(exact.b) * mp.sqrt(5)
        terms = _series_terms(target, K, corrected=corrected)
        rows = []
        acc = mp.mpf(0)
        for i in range(K):
            acc += terms[i]
            rows.append((i + 1, acc, abs(acc - expected)))
        return rows
