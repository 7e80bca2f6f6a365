"""Registry of the exact binomial identity families and grid verification.

Each family pairs a left-hand binomial summation over Fibonacci, Lucas or
gibonacci numbers with a closed-form right-hand side selected by the residue
of the upper summation limit mod 5.  Verification sweeps an (n, t) grid and
compares both sides as exact rationals; a mismatch is data (a
counterexample), not an exception.

Left-hand sums are evaluated term by term.  For a fixed n the term weights
do not depend on t, so they are built once per (family, n) as integers over
a common denominator and reused across the t sweep.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Optional

from .sequences import GibonacciParams, binom, fib, gib, lucas

Rat = Fraction


class ParameterError(ValueError):
    """Bad arguments (unknown id, out-of-domain n, missing seeds, empty range).

    Distinct from a verification failure: callers map this to a usage error.
    """


class ScaleViolation(AssertionError):
    """A family value fell outside scale * value being an integer."""


# --------------------------------------------------------------------------
# term plans


@dataclass(frozen=True)
class Term:
    weight: int  # numerator over the plan denominator
    seq: str  # "fib", "lucas" or "gib"
    base: int  # sequence subscript before the t offset


@dataclass(frozen=True)
class TermPlan:
    denom: int
    terms: tuple[Term, ...]


TermGen = Callable[[int, int], list[tuple[Rat, str, int]]]

_plan_cache: dict[tuple[str, int, int], TermPlan] = {}


def _build_plan(key: str, n: int, shift: int, gen: TermGen) -> TermPlan:
    ck = (key, n, shift)
    plan = _plan_cache.get(ck)
    if plan is None:
        triples = gen(n, shift)
        denom = math.lcm(*(c.denominator for c, _, _ in triples)) if triples else 1
        terms = tuple(Term(int(c * denom), s, b) for c, s, b in triples)
        plan = TermPlan(denom, terms)
        _plan_cache[ck] = plan
    return plan


def _seq_value(seq: str, idx: int, g: Optional[GibonacciParams]) -> int:
    if seq == "fib":
        return fib(idx)
    if seq == "lucas":
        return lucas(idx)
    assert g is not None
    return gib(g, idx)


def _eval_plan(plan: TermPlan, t_off: int, g: Optional[GibonacciParams]) -> Rat:
    num = 0
    for term in plan.terms:
        num += term.weight * _seq_value(term.seq, term.base + t_off, g)
    return Fraction(num, plan.denom)


# --------------------------------------------------------------------------
# families


Rhs = Callable[[int, int, Optional[GibonacciParams]], Rat]


@dataclass(frozen=True)
class Clause:
    """One LHS = RHS equation; most families have exactly one."""

    label: str
    plan_key: str
    lhs_terms: TermGen
    rhs: Rhs


@dataclass(frozen=True)
class IdentityFamily:
    id: str
    description: str
    anchor: str
    n_min: int
    uses_t: bool
    uses_gibonacci: bool
    scale: int
    clauses: tuple[Clause, ...]
    arm: Callable[[int], str]
    # Mutated copies disable this: a broken side need not stay half-integral.
    check_scale: bool = True

    def eval_lhs(self, n: int, t: int, g: Optional[GibonacciParams] = None,
                 clause: int = 0, shift: int = 0) -> Rat:
        c = self.clauses[clause]
        plan = _build_plan(c.plan_key, n, shift, c.lhs_terms)
        return _eval_plan(plan, t if self.uses_t else 0, g)

    def eval_rhs(self, n: int, t: int, g: Optional[GibonacciParams] = None,
                 clause: int = 0) -> Rat:
        return self.clauses[clause].rhs(n, t, g)


def _sgn(e: int) -> int:
    return -1 if e % 2 else 1


def _arm_035(n: int) -> str:
    r = n % 5
    if r == 0:
        return "n = 0 (mod 5)"
    return "n = 1 or 4 (mod 5)" if r in (1, 4) else "n = 2 or 3 (mod 5)"


def _arm_waring(n: int) -> str:
    r = n % 5
    if r in (0, 3):
        return "n = 0 or 3 (mod 5)"
    return "n = 1 or 2 (mod 5)" if r in (1, 2) else "n = 4 (mod 5)"


def _arm_each(n: int) -> str:
    return f"n = {n % 5} (mod 5)"


def _arm_two(members: tuple[int, ...], text: str) -> Callable[[int], str]:
    def arm(n: int) -> str:
        return text if n % 5 in members else "otherwise"

    return arm


REGISTRY: dict[str, IdentityFamily] = {}


def _register(fam: IdentityFamily) -> None:
    if fam.id in REGISTRY:
        raise ValueError(f"duplicate family id {fam.id}")
    REGISTRY[fam.id] = fam


def _family(fid: str, description: str, anchor: str, *, n_min: int = 1,
            uses_t: bool = True, uses_gib: bool = False, scale: int = 1,
            lhs: TermGen, rhs: Rhs, arm: Callable[[int], str] = _arm_035) -> None:
    clause = Clause("identity", fid, lhs, rhs)
    _register(IdentityFamily(fid, description, anchor, n_min, uses_t, uses_gib,
                             scale, (clause,), arm))


# ---- the 1/k-weighted sums (cos^n expansion) ------------------------------


def _pow1k_terms(seq: str, base_of: Callable[[int, int], int]) -> TermGen:
    def gen(n: int, shift: int) -> list[tuple[Rat, str, int]]:
        return [
            (Fraction(n * _sgn(k - 1), k) * binom(n - k - 1, k - 1), seq, base_of(n, k) + shift)
            for k in range(1, n // 2 + 1)
        ]

    return gen


def _thm1_rhs(seq: str) -> Rhs:
    def rhs(n: int, t: int, g: Optional[GibonacciParams]) -> Rat:
        S = lambda i: _seq_value(seq, i, g)
        r, s = n % 5, _sgn(n)
        if r == 0:
            return Fraction(S(n + t) - 2 * s * S(t))
        if r in (1, 4):
            return Fraction(S(n + t) + s * S(t + 1))
        return Fraction(S(n + t) - s * S(t - 1))

    return rhs


_family(
    "thm1-lucas",
    "n * sum (-1)^(k-1)/k C(n-k-1,k-1) L(n-2k+t) vs L(n+t) minus a mod-5 correction",
    "Theorem 1", lhs=_pow1k_terms("lucas", lambda n, k: n - 2 * k), rhs=_thm1_rhs("lucas"),
)
_family(
    "thm1-fib",
    "n * sum (-1)^(k-1)/k C(n-k-1,k-1) F(n-2k+t) vs F(n+t) minus a mod-5 correction",
    "Theorem 1", lhs=_pow1k_terms("fib", lambda n, k: n - 2 * k), rhs=_thm1_rhs("fib"),
)


def _cor1_f2k_rhs(n: int, t: int, g: Optional[GibonacciParams]) -> Rat:
    r = n % 5
    if r == 0:
        return Fraction(-2 * fib(n))
    return Fraction(-fib(n - 1)) if r in (1, 4) else Fraction(fib(n + 1))


_family(
    "cor1-fib-f2k",
    "n * sum (-1)^(k-1)/k C(n-k-1,k-1) F(2k) vs a single shifted Fibonacci number",
    "Corollary 1", uses_t=False,
    lhs=_pow1k_terms("fib", lambda n, k: 2 * k), rhs=_cor1_f2k_rhs,
)


def _delta_cor1(n: int) -> int:
    r = n % 5
    return 0 if r == 0 else (-1 if r in (1, 4) else 1)


_family(
    "cor1-fib-delta",
    "n * sum (-1)^(k-1)/k C(n-k-1,k-1) F(n-2k+d) = F(n+d) with d picked by n mod 5",
    "Corollary 1", uses_t=False,
    lhs=_pow1k_terms("fib", lambda n, k: n - 2 * k + _delta_cor1(n)),
    rhs=lambda n, t, g: Fraction(fib(n + _delta_cor1(n))),
)

_family(
    "cor2-lucas-m1",
    "n * sum (-1)^(k-1)/k C(n-k-1,k-1) L(n-2k-1) vs L(n-1) plus or minus a small constant",
    "Corollary 2", uses_t=False,
    lhs=_pow1k_terms("lucas", lambda n, k: n - 2 * k - 1),
    rhs=lambda n, t, g: Fraction(lucas(n - 1) - _sgn(n) * 3) if n % 5 in (2, 3)
    else Fraction(lucas(n - 1) + _sgn(n) * 2),
    arm=_arm_two((2, 3), "n = 2 or 3 (mod 5)"),
)
_family(
    "cor2-lucas-p1",
    "n * sum (-1)^(k-1)/k C(n-k-1,k-1) L(n-2k+1) vs L(n+1) plus or minus a small constant",
    "Corollary 2", uses_t=False,
    lhs=_pow1k_terms("lucas", lambda n, k: n - 2 * k + 1),
    rhs=lambda n, t, g: Fraction(lucas(n + 1) + _sgn(n) * 3) if n % 5 in (1, 4)
    else Fraction(lucas(n + 1) - _sgn(n) * 2),
    arm=_arm_two((1, 4), "n = 1 or 4 (mod 5)"),
)
_family(
    "cor2-lucas-0",
    "n * sum (-1)^(k-1)/k C(n-k-1,k-1) L(n-2k) vs L(n) plus or minus a small constant",
    "Corollary 2", uses_t=False,
    lhs=_pow1k_terms("lucas", lambda n, k: n - 2 * k),
    rhs=lambda n, t, g: Fraction(lucas(n) - _sgn(n) * 4) if n % 5 == 0
    else Fraction(lucas(n) + _sgn(n)),
    arm=_arm_two((0,), "n = 0 (mod 5)"),
)


# ---- plain Waring-style sums ----------------------------------------------


def _waring_terms(seq: str, base_of: Callable[[int, int], int], alt: bool = False) -> TermGen:
    def gen(n: int, shift: int) -> list[tuple[Rat, str, int]]:
        return [
            (Fraction(_sgn(n - k) if alt else _sgn(k)) * binom(n - k, k), seq, base_of(n, k) + shift)
            for k in range(0, n // 2 + 1)
        ]

    return gen


def _waring_rhs(seq: str) -> Rhs:
    # The n = 1, 2 (mod 5) sign exponent is floor((n+1)/5) for Lucas but
    # floor(n/5) for Fibonacci as stated; the two agree on those residues.
    def rhs(n: int, t: int, g: Optional[GibonacciParams]) -> Rat:
        S = lambda i: _seq_value(seq, i, g)
        r = n % 5
        if r in (0, 3):
            return Fraction(_sgn((n + 1) // 5) * S(t))
        if r in (1, 2):
            e = (n + 1) // 5 if seq == "lucas" else n // 5
            return Fraction(_sgn(e) * S(t + 1))
        return Fraction(0)

    return rhs


_family(
    "waring1-lucas",
    "sum (-1)^k C(n-k,k) L(n-2k+t) vs a signed L(t) or L(t+1), zero when n = 4 (mod 5)",
    "Theorem 2", lhs=_waring_terms("lucas", lambda n, k: n - 2 * k),
    rhs=_waring_rhs("lucas"), arm=_arm_waring,
)
_family(
    "waring2-fib",
    "sum (-1)^k C(n-k,k) F(n-2k+t) vs a signed F(t) or F(t+1), zero when n = 4 (mod 5)",
    "Theorem 2", lhs=_waring_terms("fib", lambda n, k: n - 2 * k),
    rhs=_waring_rhs("fib"), arm=_arm_waring,
)


def _cor3_rhs(seq: str) -> Rhs:
    def rhs(n: int, t: int, g: Optional[GibonacciParams]) -> Rat:
        S = lambda i: _seq_value(seq, i, g)
        r = n % 5
        if r in (0, 3):
            return Fraction(_sgn((n + 1) // 5) * S(n))
        if r in (1, 2):
            return Fraction(_sgn((n + 1) // 5 + 1) * S(n - 1))
        return Fraction(0)

    return rhs


_family(
    "cor3-lucas-even",
    "sum (-1)^(n-k) C(n-k,k) L(2k) vs a signed L(n) or L(n-1), zero when n = 4 (mod 5)",
    "Corollary 3", uses_t=False,
    lhs=_waring_terms("lucas", lambda n, k: 2 * k, alt=True), rhs=_cor3_rhs("lucas"),
    arm=_arm_waring,
)
_family(
    "cor3-fib-even",
    "sum (-1)^(n-k) C(n-k,k) F(2k) vs a signed F(n) or F(n-1), zero when n = 4 (mod 5)",
    "Corollary 3", uses_t=False,
    lhs=_waring_terms("fib", lambda n, k: 2 * k, alt=True), rhs=_cor3_rhs("fib"),
    arm=_arm_waring,
)

_family(
    "cor4-fib-one",
    "sum (-1)^k C(n-k,k) F(n-2k+1): always a sign, zero when n = 4 (mod 5)",
    "Corollary 4", uses_t=False,
    lhs=_waring_terms("fib", lambda n, k: n - 2 * k + 1),
    rhs=lambda n, t, g: Fraction(0) if n % 5 == 4 else Fraction(_sgn((n + 1) // 5)),
    arm=_arm_two((4,), "n = 4 (mod 5)"),
)


def _delta_cor4(n: int) -> int:
    # Defined for residues 0..3; the residue-4 case vanishes for every
    # subscript choice, so 0 keeps the family total there.
    return 1 if n % 5 in (1, 2) else 0


_family(
    "cor4-fib-zero",
    "sum (-1)^k C(n-k,k) F(n-2k-d) = 0 with d picked by n mod 5",
    "Corollary 4", uses_t=False,
    lhs=_waring_terms("fib", lambda n, k: n - 2 * k - _delta_cor4(n)),
    rhs=lambda n, t, g: Fraction(0), arm=_arm_waring,
)


# ---- n/(n-k)-weighted Waring sums -----------------------------------------


def _nk_terms(seq: str, base_of: Callable[[int, int], int]) -> TermGen:
    def gen(n: int, shift: int) -> list[tuple[Rat, str, int]]:
        return [
            (Fraction(_sgn(n - k) * n, n - k) * binom(n - k, k), seq, base_of(n, k) + shift)
            for k in range(0, n // 2 + 1)
        ]

    return gen


def _th7_rhs(seq: str) -> Rhs:
    def rhs(n: int, t: int, g: Optional[GibonacciParams]) -> Rat:
        S = lambda i: _seq_value(seq, i, g)
        r = n % 5
        if r == 0:
            return Fraction(2 * S(t))
        return Fraction(-S(t + 1)) if r in (1, 4) else Fraction(S(t - 1))

    return rhs


_family(
    "th7-fib",
    "sum (-1)^(n-k) n/(n-k) C(n-k,k) F(n-2k+t) vs 2F(t), -F(t+1) or F(t-1)",
    "Theorem 6", lhs=_nk_terms("fib", lambda n, k: n - 2 * k), rhs=_th7_rhs("fib"),
)
_family(
    "th7-lucas",
    "sum (-1)^(n-k) n/(n-k) C(n-k,k) L(n-2k+t) vs 2L(t), -L(t+1) or L(t-1)",
    "Theorem 6", lhs=_nk_terms("lucas", lambda n, k: n - 2 * k), rhs=_th7_rhs("lucas"),
)

_family(
    "cor5-fib-0",
    "sum (-1)^(n-k) n/(n-k) C(n-k,k) F(n-2k) vs 0, -1 or 1",
    "Corollary 5", uses_t=False,
    lhs=_nk_terms("fib", lambda n, k: n - 2 * k),
    rhs=lambda n, t, g: Fraction((0, -1, 1)[0 if n % 5 == 0 else (1 if n % 5 in (1, 4) else 2)]),
)
_family(
    "cor5-lucas-0",
    "sum (-1)^(n-k) n/(n-k) C(n-k,k) L(n-2k) vs 4 or -1",
    "Corollary 5", uses_t=False,
    lhs=_nk_terms("lucas", lambda n, k: n - 2 * k),
    rhs=lambda n, t, g: Fraction(4 if n % 5 == 0 else -1),
    arm=_arm_two((0,), "n = 0 (mod 5)"),
)
_family(
    "cor5-fib-1",
    "sum (-1)^(n-k) n/(n-k) C(n-k,k) F(n+1-2k) vs 2, -1 or 0",
    "Corollary 5", uses_t=False,
    lhs=_nk_terms("fib", lambda n, k: n + 1 - 2 * k),
    rhs=lambda n, t, g: Fraction((2, -1, 0)[0 if n % 5 == 0 else (1 if n % 5 in (1, 4) else 2)]),
)
_family(
    "cor5-lucas-1",
    "sum (-1)^(n-k) n/(n-k) C(n-k,k) L(n+1-2k) vs 2 or -3",
    "Corollary 5", uses_t=False,
    lhs=_nk_terms("lucas", lambda n, k: n + 1 - 2 * k),
    rhs=lambda n, t, g: Fraction(2 if n % 5 in (0, 2, 3) else -3),
    arm=_arm_two((0, 2, 3), "n = 0, 2 or 3 (mod 5)"),
)


# ---- mixed five-power sums -------------------------------------------------


def _mixed_terms(odd_seq: str, odd_pow: Callable[[int], int],
                 even_seq: str, even_pow: Callable[[int], int]) -> TermGen:
    # First block: k = 1..ceil(n/2) over subscripts 2k-1; second block
    # (subtracted): k = 0..floor(n/2) over subscripts 2k.
    def gen(n: int, shift: int) -> list[tuple[Rat, str, int]]:
        triples: list[tuple[Rat, str, int]] = [
            (Fraction(n, n + 2 * k - 1) * binom(n + 2 * k - 1, n - 2 * k + 1) * 5 ** odd_pow(k),
             odd_seq, 2 * k - 1 + shift)
            for k in range(1, (n + 1) // 2 + 1)
        ]
        triples += [
            (-Fraction(n, n + 2 * k) * binom(n + 2 * k, n - 2 * k) * 5 ** even_pow(k),
             even_seq, 2 * k + shift)
            for k in range(0, n // 2 + 1)
        ]
        return triples

    return gen


def _thm8_rhs(seq: str) -> Rhs:
    def rhs(n: int, t: int, g: Optional[GibonacciParams]) -> Rat:
        S = lambda i: _seq_value(seq, i, g)
        r = n % 5
        if r == 0:
            return Fraction(-S(t))
        return Fraction(S(t + 1), 2) if r in (1, 4) else Fraction(-S(t - 1), 2)

    return rhs


_family(
    "thm8-mixed-a",
    "sum n/(n+2k-1) C(n+2k-1,n-2k+1) 5^k F(2k+t-1) minus sum n/(n+2k) C(n+2k,n-2k) 5^k L(2k+t)",
    "Theorem 8", scale=2,
    lhs=_mixed_terms("fib", lambda k: k, "lucas", lambda k: k), rhs=_thm8_rhs("lucas"),
)
_family(
    "thm8-mixed-b",
    "sum n/(n+2k-1) C(n+2k-1,n-2k+1) 5^(k-1) L(2k+t-1) minus sum n/(n+2k) C(n+2k,n-2k) 5^k F(2k+t)",
    "Theorem 8", scale=2,
    lhs=_mixed_terms("lucas", lambda k: k - 1, "fib", lambda k: k), rhs=_thm8_rhs("fib"),
)


def _cor6_lhs(n: int, shift: int) -> list[tuple[Rat, str, int]]:
    d = _delta_cor1(n)
    return [
        (Fraction(n, n + 2 * k - 1) * binom(n + 2 * k - 1, n - 2 * k + 1) * 5 ** k,
         "lucas", 2 * k + d - 1 + shift)
        for k in range(1, (n + 1) // 2 + 1)
    ]


def _cor6_rhs_terms(n: int, shift: int) -> list[tuple[Rat, str, int]]:
    return [
        (Fraction(n, n + 2 * k) * binom(n + 2 * k, n - 2 * k) * 5 ** (k + 1),
         "fib", 2 * k + _delta_cor1(n) + shift)
        for k in range(0, n // 2 + 1)
    ]


def _cor6_rhs(n: int, t: int, g: Optional[GibonacciParams]) -> Rat:
    plan = _build_plan("cor6-mixed-delta:rhs", n, 0, _cor6_rhs_terms)
    return _eval_plan(plan, 0, g)


_family(
    "cor6-mixed-delta",
    "five-power Lucas sum over 2k+d-1 equals the matching five-power Fibonacci sum over 2k+d",
    "Corollary 6", uses_t=False, scale=2, lhs=_cor6_lhs, rhs=_cor6_rhs,
)


# ---- n/(n+k)- and k/(n+k)-weighted sums ------------------------------------


def _npk_terms(seq: str) -> TermGen:
    def gen(n: int, shift: int) -> list[tuple[Rat, str, int]]:
        return [
            (Fraction(_sgn(n - k) * n, n + k) * binom(n + k, n - k), seq, 2 * k + shift)
            for k in range(0, n + 1)
        ]

    return gen


def _th11_rhs(seq: str) -> Rhs:
    def rhs(n: int, t: int, g: Optional[GibonacciParams]) -> Rat:
        S = lambda i: _seq_value(seq, i, g)
        r = n % 5
        if r == 0:
            return Fraction(S(t))
        return Fraction(S(t - 1), 2) if r in (1, 4) else Fraction(-S(t + 1), 2)

    return rhs


_family(
    "th11-lucas",
    "sum (-1)^(n-k) n/(n+k) C(n+k,n-k) L(2k+t) vs L(t), L(t-1)/2 or -L(t+1)/2",
    "Theorem 9", scale=2, lhs=_npk_terms("lucas"), rhs=_th11_rhs("lucas"),
)
_family(
    "th11-fib",
    "sum (-1)^(n-k) n/(n+k) C(n+k,n-k) F(2k+t) vs F(t), F(t-1)/2 or -F(t+1)/2",
    "Theorem 9", scale=2, lhs=_npk_terms("fib"), rhs=_th11_rhs("fib"),
)


def _delta_cor7(n: int) -> int:
    r = n % 5
    return 0 if r == 0 else (1 if r in (1, 4) else -1)


_family(
    "cor7-fib-zero",
    "sum (-1)^k/(n+k) C(n+k,n-k) F(2k+d) = 0 with d picked by n mod 5",
    "Corollary 7", uses_t=False,
    lhs=lambda n, shift: [
        (Fraction(_sgn(k), n + k) * binom(n + k, n - k), "fib", 2 * k + _delta_cor7(n) + shift)
        for k in range(0, n + 1)
    ],
    rhs=lambda n, t, g: Fraction(0),
)


def _k_npk_terms(seq: str, base_of: Callable[[int, int], int], sign_of: Callable[[int, int], int]) -> TermGen:
    def gen(n: int, shift: int) -> list[tuple[Rat, str, int]]:
        return [
            (Fraction(sign_of(n, k) * k, n + k) * binom(n + k, n - k), seq, base_of(n, k) + shift)
            for k in range(1, n + 1)
        ]

    return gen


def _xyz_rhs(seq: str) -> Rhs:
    def rhs(n: int, t: int, g: Optional[GibonacciParams]) -> Rat:
        S = lambda i: _seq_value(seq, i, g)
        r = n % 5
        if r == 0:
            return Fraction(0)
        if r in (1, 4):
            return Fraction(_sgn(n // 5) * S(t + 2), 2)
        return Fraction(_sgn(n // 5 + 1) * S(t + 1), 2)

    return rhs


_family(
    "xyz123-lucas",
    "sum (-1)^(k-1) k/(n+k) C(n+k,n-k) L(2k+t) vs 0 or a signed L(t+2)/2 or L(t+1)/2",
    "Theorem 10", scale=2,
    lhs=_k_npk_terms("lucas", lambda n, k: 2 * k, lambda n, k: _sgn(k - 1)),
    rhs=_xyz_rhs("lucas"),
)
_family(
    "xyz123-fib",
    "sum (-1)^(k-1) k/(n+k) C(n+k,n-k) F(2k+t) vs 0 or a signed F(t+2)/2 or F(t+1)/2",
    "Theorem 10", scale=2,
    lhs=_k_npk_terms("fib", lambda n, k: 2 * k, lambda n, k: _sgn(k - 1)),
    rhs=_xyz_rhs("fib"),
)


def _delta_cor8(n: int) -> int:
    # Residue 0 vanishes for every subscript choice; 2 keeps the family total.
    return 1 if n % 5 in (2, 3) else 2


_family(
    "cor8-fib-zero",
    "sum (-1)^k k/(n+k) C(n+k,n-k) F(2k-d) = 0 with d picked by n mod 5",
    "Corollary 8", uses_t=False,
    lhs=_k_npk_terms("fib", lambda n, k: 2 * k - _delta_cor8(n), lambda n, k: _sgn(k)),
    rhs=lambda n, t, g: Fraction(0),
)


# ---- equality of two sums (Corollary 9) ------------------------------------


def _cor9_left(seq: str) -> TermGen:
    def gen(n: int, shift: int) -> list[tuple[Rat, str, int]]:
        return [
            (Fraction(_sgn(k)) * binom(n - k - 1, k), seq, n - 2 * k + shift)
            for k in range(0, (n - 1) // 2 + 1)
        ]

    return gen


def _cor9_right(seq: str) -> Rhs:
    def terms(n: int, shift: int) -> list[tuple[Rat, str, int]]:
        r = n % 5
        if r == 0:
            sign, off = 1, 0
        elif r in (1, 4):
            sign, off = 1, -1
        else:
            sign, off = -1, 1
        return [(Fraction(2 * sign * _sgn(k - 1) * k, n + k) * binom(n + k, n - k),
                 seq, 2 * k + off + shift)
                for k in range(1, n + 1)]

    def rhs(n: int, t: int, g: Optional[GibonacciParams]) -> Rat:
        plan = _build_plan(f"cor9:{seq}:rhs", n, 0, terms)
        return _eval_plan(plan, t, g)

    return rhs


_register(IdentityFamily(
    "cor9-equalities",
    "the alternating C(n-k-1,k) sums equal twice the k/(n+k)-weighted sums, "
    "with the subscript pairing picked by n mod 5 (Lucas and Fibonacci clauses)",
    "Corollary 9", 1, True, False, 1,
    (
        Clause("lucas", "cor9:lucas", _cor9_left("lucas"), _cor9_right("lucas")),
        Clause("fib", "cor9:fib", _cor9_left("fib"), _cor9_right("fib")),
    ),
    _arm_035,
))


# ---- plain C(n+k, n-k) sums (non-negative n) --------------------------------


def _thm12_rhs(seq: str) -> Rhs:
    def rhs(n: int, t: int, g: Optional[GibonacciParams]) -> Rat:
        S = lambda i: _seq_value(seq, i, g)
        r = n % 5
        return Fraction((S(t), S(t + 1), 0, -S(t + 1), -S(t))[r])

    return rhs


def _thm12_terms(seq: str) -> TermGen:
    def gen(n: int, shift: int) -> list[tuple[Rat, str, int]]:
        return [
            (Fraction(_sgn(n - k)) * binom(n + k, n - k), seq, 2 * k + shift)
            for k in range(0, n + 1)
        ]

    return gen


_family(
    "thm12-lucas",
    "sum (-1)^(n-k) C(n+k,n-k) L(2k+t) vs one of L(t), L(t+1), 0, -L(t+1), -L(t)",
    "Theorem 12", n_min=0, lhs=_thm12_terms("lucas"), rhs=_thm12_rhs("lucas"),
    arm=_arm_each,
)
_family(
    "thm12-fib",
    "sum (-1)^(n-k) C(n+k,n-k) F(2k+t) vs one of F(t), F(t+1), 0, -F(t+1), -F(t)",
    "Theorem 12", n_min=0, lhs=_thm12_terms("fib"), rhs=_thm12_rhs("fib"),
    arm=_arm_each,
)


# ---- gibonacci generalizations ----------------------------------------------


_family(
    "gib-thm1",
    "n * sum (-1)^(k-1)/k C(n-k-1,k-1) G(n-2k+t) vs G(n+t) minus a mod-5 correction",
    "Theorem 1 (gibonacci)", uses_gib=True,
    lhs=_pow1k_terms("gib", lambda n, k: n - 2 * k), rhs=_thm1_rhs("gib"),
)
_family(
    "gib-th7",
    "sum (-1)^(n-k) n/(n-k) C(n-k,k) G(n-2k+t) vs 2G(t), -G(t+1) or G(t-1)",
    "Theorem 6 (gibonacci)", uses_gib=True,
    lhs=_nk_terms("gib", lambda n, k: n - 2 * k), rhs=_th7_rhs("gib"),
)
_family(
    "gib-th11",
    "sum (-1)^(n-k) n/(n+k) C(n+k,n-k) G(2k+t) vs G(t), G(t-1)/2 or -G(t+1)/2",
    "Theorem 9 (gibonacci)", uses_gib=True, scale=2,
    lhs=_npk_terms("gib"), rhs=_th11_rhs("gib"),
)


# --------------------------------------------------------------------------
# public operations


def list_families() -> list[IdentityFamily]:
    """All registered families, sorted by id."""
    return [REGISTRY[fid] for fid in sorted(REGISTRY)]


def get_family(fid: str) -> IdentityFamily:
    try:
        return REGISTRY[fid]
    except KeyError:
        raise ParameterError(f"unknown family id: {fid}") from None


def _check_point_args(fam: IdentityFamily, n: int, g: Optional[GibonacciParams]) -> None:
    if n < fam.n_min:
        raise ParameterError(f"{fam.id}: n = {n} is outside the domain n >= {fam.n_min}")
    if fam.uses_gibonacci and g is None:
        raise ParameterError(f"{fam.id}: gibonacci seeds required")


def eval_lhs(fam: IdentityFamily, n: int, t: int = 0,
             g: Optional[GibonacciParams] = None, clause: int = 0) -> Rat:
    """Exact value of the family's left-hand summation at one grid point."""
    _check_point_args(fam, n, g)
    return fam.eval_lhs(n, t, g, clause=clause)


def eval_rhs(fam: IdentityFamily, n: int, t: int = 0,
             g: Optional[GibonacciParams] = None, clause: int = 0) -> Rat:
    """Exact value of the closed form (or paired sum) at one grid point."""
    _check_point_args(fam, n, g)
    return fam.eval_rhs(n, t, g, clause=clause)


def term_breakdown(fam: IdentityFamily, n: int, t: int = 0,
                   g: Optional[GibonacciParams] = None,
                   clause: int = 0) -> list[tuple[Rat, str, int, int, Rat]]:
    """Audit rows (coefficient, sequence, index, value, contribution) for one LHS."""
    _check_point_args(fam, n, g)
    c = fam.clauses[clause]
    plan = _build_plan(c.plan_key, n, 0, c.lhs_terms)
    t_off = t if fam.uses_t else 0
    rows = []
    for term in plan.terms:
        idx = term.base + t_off
        value = _seq_value(term.seq, idx, g)
        coef = Fraction(term.weight, plan.denom)
        rows.append((coef, term.seq, idx, value, coef * value))
    return rows


@dataclass(frozen=True)
class Counterexample:
    n: int
    t: int
    clause: str
    lhs: Rat
    rhs: Rat


@dataclass(frozen=True)
class VerificationReport:
    family_id: str
    n_range: tuple[int, int]
    t_range: tuple[int, int]
    gib: Optional[GibonacciParams]
    checked: int
    passed: int
    first_counterexample: Optional[Counterexample]

    @property
    def ok(self) -> bool:
        return self.passed == self.checked


def _scan(fam: IdentityFamily, n_lo: int, n_hi: int, ts: Iterable[int],
          g: Optional[GibonacciParams]) -> tuple[int, int, Optional[Counterexample]]:
    checked = passed = 0
    first: Optional[Counterexample] = None
    for n in range(n_lo, n_hi + 1):
        for t in ts:
            for ci, clause in enumerate(fam.clauses):
                lhs = fam.eval_lhs(n, t, g, clause=ci)
                rhs = clause.rhs(n, t, g)
                if fam.check_scale and (fam.scale % lhs.denominator or fam.scale % rhs.denominator):
                    raise ScaleViolation(
                        f"{fam.id} at (n={n}, t={t}): {lhs} / {rhs} not integral at scale {fam.scale}")
                checked += 1
                if lhs == rhs:
                    passed += 1
                elif first is None:
                    first = Counterexample(n, t, clause.label, lhs, rhs)
    return checked, passed, first


def _scan_chunk(args: tuple[str, int, int, tuple[int, ...], Optional[tuple[int, int]]]):
    fid, n_lo, n_hi, ts, gseed = args
    g = GibonacciParams(*gseed) if gseed is not None else None
    return _scan(REGISTRY[fid], n_lo, n_hi, ts, g)


def verify_family(fam: IdentityFamily, n_range: tuple[int, int],
                  t_range: tuple[int, int], g: Optional[GibonacciParams] = None,
                  workers: int = 1) -> VerificationReport:
    """Check LHS = RHS on the whole grid; n ascending outer, t ascending inner.

    Counterexamples are recorded, not raised; the first one (in iteration
    order) is reported regardless of the worker count.
    """
    n_lo, n_hi = n_range
    t_lo, t_hi = t_range
    if n_lo > n_hi or t_lo > t_hi:
        raise ParameterError(f"{fam.id}: empty range")
    if n_lo < fam.n_min:
        raise ParameterError(f"{fam.id}: n range starts at {n_lo}, domain needs n >= {fam.n_min}")
    if fam.uses_gibonacci and g is None:
        raise ParameterError(f"{fam.id}: gibonacci seeds required")
    ts = tuple(range(t_lo, t_hi + 1)) if fam.uses_t else (0,)

    if workers > 1 and REGISTRY.get(fam.id) is fam and (n_hi - n_lo) >= workers:
        step = (n_hi - n_lo + 1 + workers - 1) // workers
        chunks = [(fam.id, lo, min(lo + step - 1, n_hi), ts,
                   (g.a, g.b) if g else None)
                  for lo in range(n_lo, n_hi + 1, step)]
        checked = passed = 0
        first: Optional[Counterexample] = None
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for c, p, cex in pool.map(_scan_chunk, chunks):
                checked += c
                passed += p
                if first is None and cex is not None:
                    first = cex
    else:
        checked, passed, first = _scan(fam, n_lo, n_hi, ts, g)

    return VerificationReport(fam.id, n_range, t_range, g, checked, passed, first)


# --------------------------------------------------------------------------
# mutation hooks (used by the sensitivity suite to rule out vacuous passes)


def arm_flip_mutant(fam: IdentityFamily, residue: int) -> IdentityFamily:
    """Copy of the family with the RHS negated on one residue class."""

    def flip(rhs: Rhs) -> Rhs:
        def wrapped(n: int, t: int, g: Optional[GibonacciParams]) -> Rat:
            v = rhs(n, t, g)
            return -v if n % 5 == residue else v

        return wrapped

    clauses = tuple(Clause(c.label, c.plan_key, c.lhs_terms, flip(c.rhs)) for c in fam.clauses)
    return IdentityFamily(f"{fam.id}!flip{residue}", fam.description, fam.anchor,
                          fam.n_min, fam.uses_t, fam.uses_gibonacci, fam.scale,
                          clauses, fam.arm, check_scale=False)


def subscript_shift_mutant(fam: IdentityFamily) -> IdentityFamily:
    """Copy of the family with every LHS sequence subscript moved up by one."""

    def shifted(terms: TermGen) -> TermGen:
        return lambda n, shift: terms(n, shift + 1)

    clauses = tuple(Clause(c.label, f"{c.plan_key}!shift", shifted(c.lhs_terms), c.rhs)
                    for c in fam.clauses)
    return IdentityFamily(f"{fam.id}!shift", fam.description, fam.anchor,
                          fam.n_min, fam.uses_t, fam.uses_gibonacci, fam.scale,
                          clauses, fam.arm, check_scale=False)
