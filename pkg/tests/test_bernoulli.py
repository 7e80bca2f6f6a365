from fractions import Fraction

import mpmath as mp
import pytest

from fibmod5.bernoulli import (
    PRECISION_BITS,
    SERIES_IDS,
    SeriesTarget,
    bernoulli_number,
    bernoulli_poly,
    difference_check,
    raabe_check,
    series_expected,
    series_table,
    series_verify,
    sin_ratio_series_partial,
)

RATIONAL_POINTS = [Fraction(0), Fraction(1, 2), Fraction(-2, 3), Fraction(7, 5), Fraction(3)]


def test_bernoulli_numbers():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(2) == Fraction(1, 6)
    assert bernoulli_number(3) == 0
    assert bernoulli_number(12) == Fraction(-691, 2730)


def test_odd_bernoulli_numbers_vanish():
    for k in range(1, 21):
        assert bernoulli_number(2 * k + 1) == 0


def test_bernoulli_poly_at_zero_and_one():
    for n in range(2, 41):
        assert bernoulli_poly(n, 0) == bernoulli_number(n)
        assert bernoulli_poly(n, 1) == bernoulli_number(n)


def test_bernoulli_poly_examples():
    assert bernoulli_poly(3, Fraction(3, 2)) == Fraction(3, 4)
    assert bernoulli_poly(1, Fraction(1, 2)) == 0


def test_odd_poly_at_three_halves_closed_form():
    for k in range(0, 16):
        assert bernoulli_poly(2 * k + 1, Fraction(3, 2)) == Fraction(2 * k + 1, 2 ** (2 * k))


def test_odd_poly_at_one_half_vanishes():
    for k in range(0, 16):
        assert bernoulli_poly(2 * k + 1, Fraction(1, 2)) == 0


def test_raabe():
    assert raabe_check(3, 2, 1)
    assert raabe_check(4, 3, Fraction(2, 5))
    for n in range(0, 13):
        for a in range(1, 5):
            for x in RATIONAL_POINTS:
                assert raabe_check(n, a, x), (n, a, x)


def test_difference():
    assert difference_check(1, 0)
    assert difference_check(3, Fraction(1, 2))
    for n in range(1, 13):
        for x in RATIONAL_POINTS:
            assert difference_check(n, x), (n, x)


def test_input_validation():
    with pytest.raises(ValueError):
        bernoulli_number(-1)
    with pytest.raises(ValueError):
        raabe_check(2, 0, 1)
    with pytest.raises(ValueError):
        difference_check(0, 1)
    with pytest.raises(ValueError):
        sin_ratio_series_partial(1, mp.pi, 10)
    with pytest.raises(ValueError):
        sin_ratio_series_partial(1, mp.mpf("0.5"), 0)
    with pytest.raises(ValueError):
        SeriesTarget("nope")
    with pytest.raises(ValueError):
        SeriesTarget("last1", -1)
    with pytest.raises(ValueError):
        series_verify(SeriesTarget("last1"), 30, 0.0)


def test_sin_ratio_partial_first_term():
    assert sin_ratio_series_partial(1, mp.mpf("0.3"), 1) == 1


def test_sin_ratio_partial_vanishing_argument():
    # x = 0 puts every coefficient at B_{2k+1}(1/2) = 0.
    for K in (1, 7, 40):
        assert sin_ratio_series_partial(0, mp.pi / 5, K) == 0


def test_sin_ratio_partial_alpha_limit():
    with mp.workprec(PRECISION_BITS):
        alpha = (1 + mp.sqrt(5)) / 2
        v = sin_ratio_series_partial(3, mp.pi / 5, 40)
        assert abs(v - alpha) < mp.mpf("1e-15")


def test_theorem_arms_including_unnamed_ones():
    # sin(x*t)/sin(t) at t = pi/5 and 3pi/5 realizes every arm of the two
    # series groups, including the +-1 and 0 limits of the unnamed arms.
    with mp.workprec(PRECISION_BITS):
        alpha = (1 + mp.sqrt(5)) / 2
        beta = (1 - mp.sqrt(5)) / 2
        for m in range(0, 4):
            s = (-1) ** m
            # first group: weights pi^(2k)/25^k
            t = mp.pi / 5
            assert abs(sin_ratio_series_partial(5 * m - 1, t, 45) - (-s)) < 1e-12
            assert abs(sin_ratio_series_partial(5 * m, t, 45) / 2 - 0) < 1e-12
            assert abs(sin_ratio_series_partial(5 * m + 1, t, 45) - s) < 1e-12
            assert abs(sin_ratio_series_partial(5 * m + 2, t, 45) - s * alpha) < 1e-12
            assert abs(sin_ratio_series_partial(5 * m + 3, t, 45) - s * alpha) < 1e-12
            # second group: weights 9^k pi^(2k)/25^k
            t = 3 * mp.pi / 5
            assert abs(sin_ratio_series_partial(5 * m - 1, t, 70) - (-s)) < 1e-12
            assert abs(sin_ratio_series_partial(5 * m, t, 70) / 2 - 0) < 1e-12
            assert abs(sin_ratio_series_partial(5 * m + 1, t, 70) - s) < 1e-12
            assert abs(sin_ratio_series_partial(5 * m + 2, t, 70) - s * beta) < 1e-12
            assert abs(sin_ratio_series_partial(5 * m + 3, t, 70) - s * beta) < 1e-12


def test_series_expected_symbols():
    assert series_expected(SeriesTarget("last1"))[0] == "-beta^2/2"
    assert series_expected(SeriesTarget("last2"))[0] == "sqrt5*beta"
    assert series_expected(SeriesTarget("series1-ber", 0))[0] == "alpha"
    assert series_expected(SeriesTarget("series1-ber", 1))[0] == "-alpha"
    assert series_expected(SeriesTarget("series1-ber2", 2))[0] == "beta"


def test_series_verify_named_families():
    assert series_verify(SeriesTarget("last1"), 30, 1e-12).passed
    assert series_verify(SeriesTarget("last2"), 40, 1e-12).passed
    for m in range(0, 4):
        assert series_verify(SeriesTarget("series1-ber", m), 40, 1e-10).passed
        assert series_verify(SeriesTarget("series2-ber", m), 40, 1e-10).passed
        assert series_verify(SeriesTarget("series1-ber2", m), 70, 1e-10).passed


def test_series2_ber2_discrepancy_resolution():
    out = series_verify(SeriesTarget("series2-ber2", 0), 70, 1e-10)
    assert out.passed
    assert out.resolution is not None and "9^k" in out.resolution
    # the printed 25^-k form lands on alpha, not the claimed beta
    with mp.workprec(PRECISION_BITS):
        alpha = (1 + mp.sqrt(5)) / 2
        printed = sin_ratio_series_partial(3, mp.pi / 5, 70)
        assert abs(printed - alpha) < 1e-12


def test_tail_bound_failure_is_distinct():
    out = series_verify(SeriesTarget("series1-ber2", 3), 10, 1e-10)
    assert not out.tail_ok
    assert not out.passed


def test_monotone_error_decrease():
    # Strict decay until the error saturates at the working-precision floor.
    floor = mp.mpf("1e-50")
    for fam in SERIES_IDS:
        rows = series_table(SeriesTarget(fam, 1), 40,
                            corrected=(fam == "series2-ber2"))
        errs = [r[2] for r in rows]
        assert errs[39] < errs[10], fam
        checkpoints = [errs[i] for i in (10, 15, 20, 25, 30, 35, 39)]
        for a, b in zip(checkpoints, checkpoints[1:]):
            assert b < a or a < floor, fam
