from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from fibmod5.golden import (
    ALPHA,
    BETA,
    ONE,
    ZERO,
    GoldenElement,
    Root5,
    decompose,
    from_int,
    power_alpha,
    power_beta,
)
from fibmod5.sequences import fib, lucas


# Valid (p, q) pairs share parity; build q as p minus an even offset.
elements = st.builds(
    lambda p, half_diff: GoldenElement(p, p - 2 * half_diff),
    st.integers(-10 ** 6, 10 ** 6),
    st.integers(-10 ** 6, 10 ** 6),
)


def test_constants():
    assert ALPHA + BETA == ONE
    assert ALPHA * BETA == from_int(-1)
    assert ALPHA * ALPHA == ALPHA + ONE
    assert ALPHA * ONE == ALPHA
    assert ALPHA + ZERO == ALPHA
    assert ALPHA + ALPHA == GoldenElement(2, 2)


def test_parity_invariant_rejects_bad_pairs():
    with pytest.raises(ValueError):
        GoldenElement(1, 0)
    with pytest.raises(ValueError):
        GoldenElement(0, 3)


@given(elements, elements)
def test_commutativity(x, y):
    assert x + y == y + x
    assert x * y == y * x


@given(elements, elements, elements)
def test_associativity_and_distributivity(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(elements)
def test_parity_closed_under_ops(x):
    for v in (x + x, x * x, -x, x - ALPHA, x * BETA):
        assert (v.p - v.q) % 2 == 0


def test_power_alpha_examples():
    assert power_alpha(0) == GoldenElement(2, 0)  # the pair (2, 0) is the number 1
    assert power_alpha(0) == from_int(1)
    assert power_alpha(1) == ALPHA
    assert power_alpha(-2) == GoldenElement(3, -1)
    assert power_beta(0) == from_int(1)
    assert power_beta(1) == BETA
    assert power_beta(3) == GoldenElement(4, -2)


def test_power_alpha_matches_ring_multiplication():
    acc = from_int(1)
    for r in range(0, 25):
        assert power_alpha(r) == acc
        acc = acc * ALPHA
    acc = from_int(1)
    for r in range(0, 25):
        assert power_beta(r) == acc
        acc = acc * BETA


def test_power_law_additivity():
    for r in range(-20, 21):
        for s in range(-20, 21):
            assert power_alpha(r) * power_alpha(s) == power_alpha(r + s)


def test_binet_forms():
    for r in range(-30, 31):
        assert power_alpha(r) + power_beta(r) == GoldenElement(2 * lucas(r), 0)
        assert power_alpha(r) - power_beta(r) == GoldenElement(0, 2 * fib(r))


def test_decompose():
    assert decompose(ALPHA) == (Fraction(1, 2), Fraction(1, 2))
    assert decompose(GoldenElement(2, 0)) == (Fraction(1), Fraction(0))
    assert decompose(power_alpha(4)) == (Fraction(7, 2), Fraction(3, 2))


def test_root5_field_arithmetic():
    a = Root5(Fraction(1, 2), Fraction(1, 2))  # alpha
    b = Root5(Fraction(1, 2), Fraction(-1, 2))  # beta
    assert a + b == 1
    assert a * b == -1
    assert a * a == a + 1
    assert Root5.of(ALPHA) == a
    assert (a * 2 - 1) * (a * 2 - 1) == 5  # (2 alpha - 1)^2 = 5
    assert a / 2 + a / 2 == a
    assert 3 * a == a * 3


def test_root5_float_shadow():
    assert abs(ALPHA.to_float() - 1.618033988749895) < 1e-12
    assert abs(Root5.of(BETA).to_float() + 0.6180339887498949) < 1e-12
