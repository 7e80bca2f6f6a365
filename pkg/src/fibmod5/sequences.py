"""Arbitrary-precision Fibonacci, Lucas and gibonacci sequences plus binomials.

All sequences are defined for every integer index.  Negative Fibonacci and
Lucas indices use the reflection rules F(-n) = (-1)^(n-1) F(n) and
L(-n) = (-1)^n L(n); gibonacci values are extended backward by running the
recurrence in reverse, since no reflection rule exists for general seeds.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass

_lock = threading.Lock()

_fib_cache: dict[int, int] = {0: 0, 1: 1}
_lucas_cache: dict[int, int] = {0: 2, 1: 1}
_gib_cache: dict[tuple[int, int, int], int] = {}


@dataclass(frozen=True)
class GibonacciParams:
    """Seeds of a generalized Fibonacci sequence: G(0) = a, G(1) = b."""

    a: int
    b: int

    @classmethod
    def parse(cls, text: str) -> "GibonacciParams":
        """Parse an 'a,b' pair, e.g. '3,7' or '-2,5'."""
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'a,b', got {text!r}")
        return cls(int(parts[0].strip()), int(parts[1].strip()))

    def __str__(self) -> str:
        return f"{self.a},{self.b}"


FIBONACCI_SEEDS = GibonacciParams(0, 1)
LUCAS_SEEDS = GibonacciParams(2, 1)


def _extend_forward(cache: dict[int, int], n: int) -> None:
    top = max(k for k in cache if k >= 0)
    a, b = cache[top - 1], cache[top]
    for i in range(top + 1, n + 1):
        a, b = b, a + b
        cache[i] = b


def fib(n: int) -> int:
    """Fibonacci number F(n) for any integer n."""
    if n < 0:
        return -fib(-n) if n % 2 == 0 else fib(-n)
    if n not in _fib_cache:
        with _lock:
            if n not in _fib_cache:
                _extend_forward(_fib_cache, n)
    return _fib_cache[n]


def lucas(n: int) -> int:
    """Lucas number L(n) for any integer n."""
    if n < 0:
        return lucas(-n) if n % 2 == 0 else -lucas(-n)
    if n not in _lucas_cache:
        with _lock:
            if n not in _lucas_cache:
                _extend_forward(_lucas_cache, n)
    return _lucas_cache[n]


def gib(params: GibonacciParams, n: int) -> int:
    """Gibonacci number G(n) with G(0) = params.a, G(1) = params.b."""
    key = (params.a, params.b, n)
    v = _gib_cache.get(key)
    if v is not None:
        return v
    if n >= 0:
        x, y = params.a, params.b
        for _ in range(n):
            x, y = y, x + y
    else:
        x, y = params.a, params.b
        for _ in range(-n):
            x, y = y - x, x
    _gib_cache[key] = x
    return x


def binom(n: int, k: int) -> int:
    """Binomial coefficient, 0 whenever the indices fall outside 0 <= k <= n.

    The zero convention lets summation loops run over uniform index ranges
    without guarding edge terms.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)
