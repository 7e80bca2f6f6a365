import math
from fractions import Fraction

import pytest

from fibmod5.chebyshev import cheb_t, cheb_u
from fibmod5.golden import ALPHA, BETA, ONE, Root5, from_int
from fibmod5.quintic import (
    HalfGolden,
    cheb_t_at_minus_alpha_half,
    cheb_t_at_minus_beta_half,
    cos_2npi5,
    cos_npi5,
    mod5,
    numeric_shadow,
    sin_odd_ratio,
    sin_ratio,
    sin_ratio3,
)


def test_mod5_always_non_negative():
    assert [mod5(n) for n in (-7, -5, -1, 0, 3, 12)] == [3, 0, 4, 0, 3, 2]


def test_cos_npi5_table():
    assert cos_npi5(0) == HalfGolden(from_int(2))  # value 1
    assert cos_npi5(1) == HalfGolden(ALPHA)
    assert cos_npi5(3) == HalfGolden(BETA)
    assert cos_npi5(5) == HalfGolden(from_int(-2))  # cos(pi) = -1
    assert cos_npi5(4) == HalfGolden(-ALPHA)


def test_cos_2npi5_table():
    assert cos_2npi5(0) == HalfGolden(from_int(2))
    assert cos_2npi5(1) == HalfGolden(-BETA)
    assert cos_2npi5(7) == HalfGolden(-ALPHA)  # 7 = 2 (mod 5)


def test_sin_ratio_values():
    assert sin_ratio(1) == ONE
    assert sin_ratio(5) == from_int(0)
    assert sin_ratio(7) == -ALPHA
    assert sin_ratio3(1) == ONE
    assert sin_ratio3(2) == BETA
    assert sin_ratio3(10) == from_int(0)
    assert sin_odd_ratio(0) == ONE
    assert sin_odd_ratio(2) == from_int(0)
    assert sin_odd_ratio(8) == -ALPHA


def test_negative_indices_use_floor():
    # floor(-3/5) = -1, and -3 = 2 (mod 5)
    assert sin_ratio(-3) == -ALPHA
    assert sin_ratio3(-3) == -BETA


def test_cheb_tables_reject_negative_n():
    with pytest.raises(ValueError):
        cheb_t_at_minus_alpha_half(-1)
    with pytest.raises(ValueError):
        cheb_t_at_minus_beta_half(-2)


def test_cheb_table_matches_recurrence():
    x_a = Root5.of(ALPHA) * Fraction(-1, 2)
    x_b = Root5.of(BETA) * Fraction(-1, 2)
    for n in range(0, 51):
        assert cheb_t_at_minus_alpha_half(n).to_root5() == Root5.of(cheb_t(n, x_a))
        assert cheb_t_at_minus_beta_half(n).to_root5() == Root5.of(cheb_t(n, x_b))


def test_sin_ratio_u_bridge():
    # sin((n+1)pi/5)/sin(pi/5) equals U_n at cos(pi/5), exactly.
    cos_pi5 = Root5.of(ALPHA) / 2
    for n in range(0, 51):
        assert sin_ratio(n + 1).to_root5() == Root5.of(cheb_u(n, cos_pi5))


def test_periodicity():
    for n in range(0, 31):
        assert cos_npi5(n + 10) == cos_npi5(n)
        assert cos_2npi5(n + 5) == cos_2npi5(n)
        assert sin_ratio(n + 10) == sin_ratio(n)
        assert sin_odd_ratio(n + 5) == sin_odd_ratio(n)


def test_numeric_shadow():
    for n in range(0, 101):
        for label, exact, direct in numeric_shadow(n):
            assert abs(exact - direct) < 1e-12, (label, n)


def test_shadow_spot_values():
    assert abs(cos_npi5(1).to_float() - math.cos(math.pi / 5)) < 1e-15
    assert abs(sin_ratio(7).to_float() + 1.618033988749895) < 1e-12
    assert abs(cos_2npi5(7).to_float() - math.cos(14 * math.pi / 5)) < 1e-15
