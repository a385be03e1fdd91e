import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gsp4adj.exactnum import (
    I,
    SQRT2,
    PiQuantity,
    QuadGaussian,
    as_fraction,
    bernoulli,
    fraction_str,
    is_prime,
    pochhammer,
    pochhammer_identity_check,
    prime_divisors,
    primes_up_to,
    reciprocal_factorial,
    valuation,
    xi_even,
    zeta_even_over_pi,
)

fractions = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)
quads = st.builds(QuadGaussian, fractions, fractions, fractions, fractions)


def test_fraction_io():
    assert as_fraction("3/6") == Fraction(1, 2)
    assert fraction_str(5) == "5/1"
    with pytest.raises(TypeError):
        as_fraction(1.5)


def test_units():
    assert I * I == -1
    assert SQRT2 * SQRT2 == 2
    assert (I * SQRT2) ** 2 == -2
    assert (1 + I).inverse() == QuadGaussian(Fraction(1, 2), Fraction(-1, 2))


@given(quads, quads)
def test_field_axioms(a, b):
    assert a * b == b * a
    assert (a + b) - b == a
    if b:
        assert (a / b) * b == a
    assert (a * b).conj() == a.conj() * b.conj()


@given(quads)
def test_inverse(a):
    if a:
        assert a * a.inverse() == 1


def test_pi_quantity():
    q = PiQuantity(Fraction(1, 6), 1) * PiQuantity(Fraction(1, 90), 2)
    assert q == PiQuantity(Fraction(1, 540), 3)
    assert PiQuantity.from_json(q.to_json()) == q
    with pytest.raises(ValueError):
        PiQuantity(1, 1) + PiQuantity(1, 2)
    assert PiQuantity(1, 1).approx(10).startswith("3.14159")


def test_valuation():
    assert valuation(Fraction(50, 3), 5) == 2
    assert valuation(Fraction(3, 25), 5) == -2
    assert valuation(0, 5) == math.inf


def test_primes():
    assert primes_up_to(30) == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert all(is_prime(p) for p in primes_up_to(500))
    assert prime_divisors(2 * 2 * 3 * 691) == [2, 3, 691]


def test_bernoulli_known_values():
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(7) == 0


def test_zeta_and_xi():
    assert zeta_even_over_pi(2) == Fraction(1, 6)
    assert zeta_even_over_pi(6) == Fraction(1, 945)
    with pytest.raises(ValueError):
        zeta_even_over_pi(3)
    assert xi_even(2) == PiQuantity(Fraction(1, 6), 1)
    assert xi_even(4) == PiQuantity(Fraction(1, 90), 2)


def test_reciprocal_factorial_poles():
    assert reciprocal_factorial(-1) == 0
    assert reciprocal_factorial(4) == Fraction(1, 24)


@given(st.integers(-10, 10), st.integers(0, 6), st.integers(0, 6))
def test_pochhammer_identity(b, l, extra):
    assert pochhammer_identity_check(b, l, l + extra)


def test_pochhammer_vanishes_through_zero():
    assert pochhammer(-3, 4) == 0
    assert pochhammer(-4, 4) == 24
