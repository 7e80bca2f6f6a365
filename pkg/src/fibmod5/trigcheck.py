"""High-precision numeric verification of the trigonometric identities.

These are the identities at generic angles that the exact catalog cannot
cover: power-reduction expansions, Waring-style sums in sin/cos powers,
the half-angle bridges, the alternating cosecant sum, and the two families
of cosine-ratio sums with Fibonacci or Lucas data.

All arithmetic runs at 300-bit precision; the binomial sums cancel terms as
large as 1e46 near the ends of (0, pi), so the working precision has to
crush that conditioning.  The alternating sums with near-singular
denominators additionally use Neumaier-compensated accumulation.
Tolerances scale linearly with the term count and are deliberately loose
compared to the achieved error.  Guard violations produce skipped records
with a reason, never silent gaps and never failures.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

import mpmath as mp

from .sequences import binom, fib, lucas

PRECISION_BITS = 300
GUARD = mp.mpf("1e-9")

CHECK_IDS = ("cor10", "cosecant-sum", "lemma1", "t-u-trig", "waring-trig", "z1mhbc2")

CHECK_ANCHORS = {
    "lemma1": "Lemma 1",
    "waring-trig": "Lemmas 4 and 5",
    "t-u-trig": "Lemmas 6, 8 and 9",
    "cosecant-sum": "Lemma 11",
    "z1mhbc2": "Theorem 13",
    "cor10": "Corollary 10",
}

CHECK_DESCRIPTIONS = {
    "lemma1": "power-reduction expansions of 2^(n-1)cos^n(x) - cos(nx) and sin(nx)/sin(x)",
    "waring-trig": "Waring sums in cos/sin powers for cos(nx), sin(nx) and the (n+1)x ratios",
    "t-u-trig": "half-angle binomial sums for cos(nx), 2sin(nx)/sin(x) and sin((2n+1)x)/sin(x)",
    "cosecant-sum": "alternating cosecant sum over cos(x) - cos(pi*k/n) poles",
    "z1mhbc2": "alternating cosine-ratio sums with Fibonacci/Lucas numerators, parameter t",
    "cor10": "the four cosine-ratio sums with constant numerators",
}

# Fixed sample abscissas: 12 irrational-looking interior points of (0, pi),
# plus the two quintic angles where the exact layer has the same values.
def sample_points() -> list[mp.mpf]:
    with mp.workprec(PRECISION_BITS):
        pts = [
            1 / mp.sqrt(7),
            mp.sqrt(2) / 2,
            mp.sqrt(3) - 1,
            mp.e / 3,
            mp.atan(2),
            mp.log(3),
            mp.sqrt(5) - 1,
            mp.mpf(4) / mp.pi,
            mp.e - 1,
            mp.sqrt(7) - mp.mpf("0.5"),
            2 * mp.sqrt(2) - 1,
            mp.pi - mp.mpf("0.1"),
        ]
        return pts + [mp.pi / 5, 3 * mp.pi / 5]


@dataclass(frozen=True)
class NumericCheck:
    check_id: str
    n: int
    t: Optional[int]
    x: Optional[mp.mpf]
    lhs: Optional[mp.mpf]
    rhs: Optional[mp.mpf]
    abs_error: Optional[mp.mpf]
    tol: mp.mpf
    passed: Optional[bool]
    skipped: bool = False
    skip_reason: Optional[str] = None


def _record(check_id: str, n: int, lhs: mp.mpf, rhs: mp.mpf, tol: mp.mpf,
            t: Optional[int] = None, x: Optional[mp.mpf] = None) -> NumericCheck:
    err = abs(lhs - rhs)
    return NumericCheck(check_id, n, t, x, lhs, rhs, err, tol, err <= tol)


def _skip(check_id: str, n: int, reason: str, tol: mp.mpf,
          t: Optional[int] = None, x: Optional[mp.mpf] = None) -> NumericCheck:
    return NumericCheck(check_id, n, t, x, None, None, None, tol, None, True, reason)


def _neumaier(terms: Iterable[mp.mpf]) -> mp.mpf:
    total = mp.mpf(0)
    comp = mp.mpf(0)
    for v in terms:
        s = total + v
        if abs(total) >= abs(v):
            comp += (total - s) + v
        else:
            comp += (v - s) + total
        total = s
    return total + comp


def lemma1_check(n: int, x: mp.mpf, tol_base: float = 1e-9) -> tuple[NumericCheck, ...]:
    """The two power-reduction expansions at angle x."""
    if n < 1:
        raise ValueError("n must be positive")
    with mp.workprec(PRECISION_BITS):
        x = mp.mpf(x)
        tol = mp.mpf(tol_base) * n
        c = mp.cos(x)
        out = []
        lhs = mp.fsum((-1) ** (k - 1) * mp.mpf(n) / k * binom(n - k - 1, k - 1)
                      * 2 ** (n - 2 * k - 1) * c ** (n - 2 * k)
                      for k in range(1, n // 2 + 1))
        out.append(_record("lemma1/cos", n, lhs, 2 ** (n - 1) * c ** n - mp.cos(n * x), tol, x=x))
        if abs(mp.sin(x)) <= GUARD:
            out.append(_skip("lemma1/sin", n, "sin(x) within 1e-9 of zero", tol, x=x))
        else:
            lhs = mp.fsum((-1) ** k * binom(n - k - 1, k) * 2 ** (n - 2 * k - 1) * c ** (n - 2 * k - 1)
                          for k in range(0, (n - 1) // 2 + 1))
            out.append(_record("lemma1/sin", n, lhs, mp.sin(n * x) / mp.sin(x), tol, x=x))
        return tuple(out)


def waring_trig_check(n: int, x: mp.mpf, tol_base: float = 1e-9) -> tuple[NumericCheck, ...]:
    """Waring and dual-Waring sums at angle x; parity picks the applicable forms."""
    if n < 1:
        raise ValueError("n must be positive")
    with mp.workprec(PRECISION_BITS):
        x = mp.mpf(x)
        tol = mp.mpf(tol_base) * n
        c, s = mp.cos(x), mp.sin(x)
        out = []
        lhs = mp.fsum((-1) ** k * mp.mpf(n) / (n - k) * binom(n - k, k)
                      * 2 ** (n - 2 * k - 1) * c ** (n - 2 * k)
                      for k in range(0, n // 2 + 1))
        out.append(_record("waring-trig/cos", n, lhs, mp.cos(n * x), tol, x=x))
        if n % 2 == 1:
            lhs = mp.fsum((-1) ** ((n - 1) // 2 - k) * mp.mpf(n) / (n - k) * binom(n - k, k)
                          * 2 ** (n - 2 * k - 1) * s ** (n - 2 * k)
                          for k in range(0, (n - 1) // 2 + 1))
            out.append(_record("waring-trig/sin-odd", n, lhs, mp.sin(n * x), tol, x=x))
        else:
            lhs = mp.fsum((-1) ** (n // 2 - k) * mp.mpf(n) / (n - k) * binom(n - k, k)
                          * 2 ** (n - 2 * k - 1) * s ** (n - 2 * k)
                          for k in range(0, n // 2 + 1))
            out.append(_record("waring-trig/cos-even", n, lhs, mp.cos(n * x), tol, x=x))
        if abs(s) <= GUARD:
            out.append(_skip("waring-trig/dual-cos", n, "sin(x) within 1e-9 of zero", tol, x=x))
        else:
            lhs = mp.fsum((-1) ** k * binom(n - k, k) * 2 ** (n - 2 * k) * c ** (n - 2 * k)
                          for k in range(0, n // 2 + 1))
            out.append(_record("waring-trig/dual-cos", n, lhs, mp.sin((n + 1) * x) / s, tol, x=x))
        if abs(c) <= GUARD:
            out.append(_skip("waring-trig/dual-sin", n, "cos(x) within 1e-9 of zero", tol, x=x))
        elif n % 2 == 1:
            lhs = mp.fsum((-1) ** ((n - 1) // 2 - k) * binom(n - k, k) * 2 ** (n - 2 * k) * s ** (n - 2 * k)
                          for k in range(0, (n - 1) // 2 + 1))
            out.append(_record("waring-trig/dual-sin", n, lhs, mp.sin((n + 1) * x) / c, tol, x=x))
        else:
            lhs = mp.fsum((-1) ** (n // 2 - k) * binom(n - k, k) * 2 ** (n - 2 * k) * s ** (n - 2 * k)
                          for k in range(0, n // 2 + 1))
            out.append(_record("waring-trig/dual-sin", n, lhs, mp.cos((n + 1) * x) / c, tol, x=x))
        return tuple(out)


def t_u_trig_check(n: int, x: mp.mpf, tol_base: float = 1e-9) -> tuple[NumericCheck, ...]:
    """The five half-angle binomial identities at angle x."""
    if n < 1:
        raise ValueError("n must be positive")
    with mp.workprec(PRECISION_BITS):
        x = mp.mpf(x)
        tol = mp.mpf(tol_base) * n
        sh, ch = mp.sin(x / 2), mp.cos(x / 2)
        c = mp.cos(x)
        out = []
        lhs = n * mp.fsum((-1) ** k * mp.mpf(4) ** k / (n + k) * binom(n + k, n - k) * sh ** (2 * k)
                          for k in range(0, n + 1))
        out.append(_record("t-u-trig/cos-sin-half", n, lhs, mp.cos(n * x), tol, x=x))
        lhs = n * mp.fsum((-1) ** (n - k) * mp.mpf(4) ** k / (n + k) * binom(n + k, n - k) * ch ** (2 * k)
                          for k in range(0, n + 1))
        out.append(_record("t-u-trig/cos-cos-half", n, lhs, mp.cos(n * x), tol, x=x))
        if abs(mp.sin(x)) <= GUARD:
            out.append(_skip("t-u-trig/sin-sin-half", n, "sin(x) within 1e-9 of zero", tol, x=x))
            out.append(_skip("t-u-trig/sin-cos-half", n, "sin(x) within 1e-9 of zero", tol, x=x))
            out.append(_skip("t-u-trig/odd-ratio", n, "sin(x) within 1e-9 of zero", tol, x=x))
        else:
            ratio = 2 * mp.sin(n * x) / mp.sin(x)
            lhs = mp.fsum((-1) ** (k - 1) * mp.mpf(4) ** k * k / (n + k) * binom(n + k, n - k)
                          * sh ** (2 * k - 2) for k in range(1, n + 1))
            out.append(_record("t-u-trig/sin-sin-half", n, lhs, ratio, tol, x=x))
            lhs = mp.fsum((-1) ** (n - k) * mp.mpf(4) ** k * k / (n + k) * binom(n + k, n - k)
                          * ch ** (2 * k - 2) for k in range(1, n + 1))
            out.append(_record("t-u-trig/sin-cos-half", n, lhs, ratio, tol, x=x))
            lhs = mp.fsum((-1) ** (n - k) * mp.mpf(4) ** k * binom(n + k, n - k) * c ** (2 * k)
                          for k in range(0, n + 1))
            out.append(_record("t-u-trig/odd-ratio", n, lhs,
                               mp.sin((2 * n + 1) * x) / mp.sin(x), tol, x=x))
        return tuple(out)


def cosecant_sum_check(n: int, x: mp.mpf, tol_base: float = 1e-9) -> tuple[NumericCheck, ...]:
    """Alternating cosecant sum; x must stay clear of the cos(pi*k/n) poles."""
    if n < 1:
        raise ValueError("n must be positive")
    with mp.workprec(PRECISION_BITS):
        x = mp.mpf(x)
        tol = mp.mpf(tol_base) * n
        c = mp.cos(x)
        nodes = [mp.cos(mp.pi * k / n) for k in range(1, n + 1)]
        if min(abs(c - node) for node in nodes) <= GUARD:
            return (_skip("cosecant-sum", n, "cos(x) within 1e-9 of a cos(pi*k/n) node", tol, x=x),)
        if abs(mp.sin(x)) <= GUARD or abs(mp.sin(n * x)) <= GUARD:
            return (_skip("cosecant-sum", n, "sin(x) or sin(nx) within 1e-9 of zero", tol, x=x),)
        lhs = _neumaier((-1) ** k / (c - nodes[k - 1]) for k in range(1, n + 1))
        rhs = (1 / (1 - c) + (-1) ** n / (1 + c)) / 2 - n / (mp.sin(x) * mp.sin(n * x))
        return (_record("cosecant-sum", n, lhs, rhs, tol, x=x),)


def _quintic_denominators(n: int) -> Optional[list[mp.mpf]]:
    """Values of 4cos^2 - 2cos - 1 at the pi*k/n nodes, or None when singular.

    The quadratic vanishes exactly at cos = alpha/2 and cos = beta/2, hit by
    k = n/5 and k = 3n/5; those k exist precisely when 5 divides n.
    """
    dens = []
    for k in range(1, n + 1):
        c = mp.cos(mp.pi * k / n)
        d = 4 * c * c - 2 * c - 1
        if abs(d) <= GUARD:
            return None
        dens.append(d)
    return dens


def z1mhbc2_check(n: int, t: int, tol_base: float = 1e-8) -> tuple[NumericCheck, ...]:
    """The two cosine-ratio sums with Fibonacci/Lucas numerators at parameter t."""
    if n < 1:
        raise ValueError("n must be positive")
    with mp.workprec(PRECISION_BITS):
        tol = mp.mpf(tol_base) * n
        if n % 5 == 0:
            reason = "denominator vanishes at k = n/5 and 3n/5 when n = 0 (mod 5)"
            return (_skip("z1mhbc2/lucas", n, reason, tol, t=t),
                    _skip("z1mhbc2/fib", n, reason, tol, t=t))
        dens = _quintic_denominators(n)
        assert dens is not None
        nodes = [mp.cos(mp.pi * k / n) for k in range(1, n + 1)]
        sign_floor = (-1) ** (n // 5)
        r = n % 5
        out = []

        lhs = _neumaier((-1) ** (k - 1) * (lucas(t - 1) + 2 * lucas(t) * nodes[k - 1]) / dens[k - 1]
                        for k in range(1, n + 1))
        case = 0 if r == 0 else (fib(t + 1) if r in (1, 4) else fib(t))
        rhs = mp.mpf(lucas(t + 2) + (-1) ** n * fib(t - 1)) / 2 - 2 * sign_floor * n * case
        out.append(_record("z1mhbc2/lucas", n, lhs, rhs, tol, t=t))

        lhs = _neumaier((-1) ** (k - 1) * (fib(t - 1) + 2 * fib(t) * nodes[k - 1]) / dens[k - 1]
                        for k in range(1, n + 1))
        case = 0 if r == 0 else (lucas(t + 1) if r in (1, 4) else lucas(t))
        rhs = (mp.mpf(fib(t + 2)) + mp.mpf((-1) ** n * lucas(t - 1)) / 5) / 2 \
            - mp.mpf(2 * sign_floor * n * case) / 5
        out.append(_record("z1mhbc2/fib", n, lhs, rhs, tol, t=t))
        return tuple(out)


def cor10_check(n: int, tol_base: float = 1e-8) -> tuple[NumericCheck, ...]:
    """The four constant-numerator cosine-ratio sums."""
    if n < 1:
        raise ValueError("n must be positive")
    with mp.workprec(PRECISION_BITS):
        tol = mp.mpf(tol_base) * n
        if n % 5 == 0:
            reason = "denominator vanishes at k = n/5 and 3n/5 when n = 0 (mod 5)"
            return tuple(_skip(f"cor10/sum{i}", n, reason, tol) for i in (1, 2, 3, 4))
        dens = _quintic_denominators(n)
        assert dens is not None
        nodes = [mp.cos(mp.pi * k / n) for k in range(1, n + 1)]
        sign_floor = (-1) ** (n // 5)
        r = n % 5
        out = []

        lhs = _neumaier((-1) ** (k - 1) * (4 * nodes[k - 1] - 1) / dens[k - 1] for k in range(1, n + 1))
        rhs = mp.mpf(3 + (-1) ** n) / 2 - 2 * sign_floor * n * (0 if r in (0, 2, 3) else 1)
        out.append(_record("cor10/sum1", n, lhs, rhs, tol))

        lhs = _neumaier((-1) ** (k - 1) / dens[k - 1] for k in range(1, n + 1))
        rhs = mp.mpf(5 - (-1) ** n) / 10 \
            - mp.mpf(2 * sign_floor * n * (0 if r == 0 else (1 if r in (1, 4) else 2))) / 5
        out.append(_record("cor10/sum2", n, lhs, rhs, tol))

        lhs = _neumaier((-1) ** (k - 1) * mp.cos(mp.pi * k / (2 * n)) ** 2 / dens[k - 1]
                        for k in range(1, n + 1))
        rhs = mp.mpf(1) / 2 - mp.mpf(sign_floor * n * (0 if r == 0 else 1)) / 2
        out.append(_record("cor10/sum3", n, lhs, rhs, tol))

        lhs = _neumaier((-1) ** (k - 1) * nodes[k - 1] / dens[k - 1] for k in range(1, n + 1))
        rhs = mp.mpf(5 + (-1) ** n) / 10 \
            - mp.mpf(sign_floor * n * (0 if r == 0 else (3 if r in (1, 4) else 1))) / 5
        out.append(_record("cor10/sum4", n, lhs, rhs, tol))
        return tuple(out)


# --------------------------------------------------------------------------
# sweep drivers


_X_CHECKS: dict[str, Callable[..., tuple[NumericCheck, ...]]] = {
    "lemma1": lemma1_check,
    "waring-trig": waring_trig_check,
    "t-u-trig": t_u_trig_check,
    "cosecant-sum": cosecant_sum_check,
}

_DEFAULT_TOL = {"lemma1": 1e-9, "waring-trig": 1e-9, "t-u-trig": 1e-9,
                "cosecant-sum": 1e-9, "z1mhbc2": 1e-8, "cor10": 1e-8}


def run_check(check_id: str, n_range: tuple[int, int], t_range: tuple[int, int],
              xs: Optional[list[mp.mpf]] = None,
              tol_base: Optional[float] = None) -> list[NumericCheck]:
    """Deterministic sweep of one check id: n ascending, then x or t ascending."""
    if check_id not in CHECK_IDS:
        raise ValueError(f"unknown numeric check id: {check_id}")
    xs = sample_points() if xs is None else xs
    base = _DEFAULT_TOL[check_id] if tol_base is None else tol_base
    results: list[NumericCheck] = []
    for n in range(n_range[0], n_range[1] + 1):
        if check_id in _X_CHECKS:
            for x in xs:
                results.extend(_X_CHECKS[check_id](n, x, base))
        elif check_id == "z1mhbc2":
            for t in range(t_range[0], t_range[1] + 1):
                results.extend(z1mhbc2_check(n, t, base))
        else:
            results.extend(cor10_check(n, base))
    return results
