from fractions import Fraction

import pytest

from fibmod5.chebyshev import (
    cheb_t,
    cheb_t_explicit,
    cheb_u,
    cheb_u_explicit,
    krxoelz_check,
    u_bridge_checks,
)
from fibmod5.golden import ALPHA, BETA, Root5

RATIONAL_POINTS = [
    Fraction(1, 2), Fraction(-1, 2), Fraction(1, 3), Fraction(-2, 5), Fraction(3, 4),
    Fraction(7, 3), Fraction(-5, 8), Fraction(0), Fraction(1), Fraction(-13, 7),
]
GOLDEN_POINTS = [Root5.of(ALPHA) * Fraction(-1, 2), Root5.of(BETA) * Fraction(-1, 2)]


def test_base_cases():
    for x in RATIONAL_POINTS:
        assert cheb_t(0, x) == 1
        assert cheb_t(1, x) == x
        assert cheb_u(0, x) == 1
        assert cheb_u(1, x) == 2 * x
    assert cheb_t(2, Fraction(1, 2)) == Fraction(-1, 2)
    assert cheb_u(2, Fraction(1, 2)) == 0
    assert cheb_u(1, Fraction(3, 4)) == Fraction(3, 2)


def test_rejects_negative_degree():
    with pytest.raises(ValueError):
        cheb_t(-1, Fraction(1, 2))
    with pytest.raises(ValueError):
        cheb_u_explicit(-3, Fraction(1, 2))


def test_explicit_t1_is_identity():
    for x in RATIONAL_POINTS:
        assert cheb_t_explicit(1, x) == x


def test_path_equivalence_rational_and_golden():
    for n in range(0, 31):
        for x in RATIONAL_POINTS + GOLDEN_POINTS:
            assert cheb_t(n, x) == cheb_t_explicit(n, x), (n, x)
            assert cheb_u(n, x) == cheb_u_explicit(n, x), (n, x)


def test_golden_point_lands_on_half_table():
    # T_5(-alpha/2) sits on the n = 0 (mod 5) arm of the exact table.
    assert Root5.of(cheb_t(5, GOLDEN_POINTS[0])) == 1


def test_composition_t_m_of_t_n():
    pts = RATIONAL_POINTS[:5]
    for m in range(0, 7):
        for n in range(0, 7):
            for x in pts:
                assert cheb_t(m, cheb_t(n, x)) == cheb_t(m * n, x)


def test_krxoelz_identity():
    for n in range(1, 26):
        for x in RATIONAL_POINTS[:5] + GOLDEN_POINTS:
            assert krxoelz_check(n, x, "+"), (n, x)
            assert krxoelz_check(n, x, "-"), (n, x)


def test_krxoelz_linear_case():
    assert krxoelz_check(1, Fraction(7, 3), "-")


def test_krxoelz_validates_args():
    with pytest.raises(ValueError):
        krxoelz_check(0, Fraction(1, 2))
    with pytest.raises(ValueError):
        krxoelz_check(2, Fraction(1, 2), sign="*")


def test_u_bridges():
    for n in range(1, 26):
        for x in RATIONAL_POINTS[:5] + GOLDEN_POINTS:
            assert u_bridge_checks(n, x), (n, x)
