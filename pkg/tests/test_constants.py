from fractions import Fraction
from math import comb, factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsp4adj import constants
from gsp4adj.exactnum import PiQuantity, primes_up_to

weights = st.integers(0, 10).flatmap(lambda k: st.tuples(st.just(k), st.integers(0, k)))


def brute_force_cprime(k, kp):
    """Direct transcription with explicit factorials, skipping terms whose
    shifted index leaves [0, k+k']."""
    d = k + kp
    a = [Fraction(-1), Fraction(-1, 4), Fraction(1, 72), Fraction(-1, 72), Fraction(-1, 576)]
    f = factorial

    def r(i, u, rr):
        return Fraction(f(d + u - i) * f(d + 4 - i) * f(i + rr - u), f(i - u) * f(d - i) * f(d + 4 - i - rr + u))

    total = Fraction(0)
    for rr in range(5):
        for i in range(d + 1):
            for u in range(rr + 1):
                if i - u < 0:
                    continue
                for up in range(rr + 1):
                    j = i - u + up
                    if j > d:
                        continue
                    s = Fraction(f(i - u), f(d - i + u))
                    t = Fraction(f(d + 4 + u - rr - i), f(i + rr - u))
                    total += (-1) ** (rr + u + up) * a[rr] * comb(rr, u) * comb(rr, up) * r(i, u, rr) * r(j, up, rr) * s * t
    return Fraction((-1) ** d * f(d) * f(d + 4), 36) * total


@pytest.mark.parametrize("k,kp,expected", [(0, 0, Fraction(64, 3)), (1, 0, -640), (2, 1, -factorial(7) * factorial(8) // 135)])
def test_cprime_examples(k, kp, expected):
    assert constants.cprime(k, kp) == expected
    assert constants.c_closed(k, kp) == expected


@pytest.mark.parametrize("k,kp", [(0, 0), (1, 1), (3, 0), (4, 2)])
def test_cprime_brute_force(k, kp):
    assert constants.cprime(k, kp) == brute_force_cprime(k, kp)


@given(weights)
def test_closed_form_shape(w):
    k, kp = w
    c = constants.c_closed(k, kp)
    assert (c > 0) == ((k + kp) % 2 == 0)
    num = abs(c) * 135
    assert num.denominator == 1 and num.numerator % (factorial(4) * factorial(5)) == 0


def test_invalid_weights():
    with pytest.raises(ValueError):
        constants.cprime(0, 1)
    with pytest.raises(ValueError):
        constants.simplification_trace(11, 10)


@settings(max_examples=20, deadline=None)
@given(weights)
def test_simplification_trace(w):
    forms = constants.simplification_trace(*w)
    assert len(forms) == 4 and len(set(forms)) == 1


def test_pointwise_example():
    # (2)_4 (2)_4 (1)_0 / (2)_4 = 120
    assert constants.pointwise_sides(1, 0, 0, 0, 0) == (120, 120)


def test_coefficient_triple():
    t = constants.coefficient_triple(1, 0, 0, 0, 0)
    assert (t.r_val, t.s_val, t.t_val) == (1, 1, 120)
    with pytest.raises(ValueError):
        constants.coefficient_triple(1, 0, 0, 1, 1)


def test_alternation_sum():
    assert constants.AlternationTable().weighted_sum() == Fraction(4, 3)


@pytest.mark.parametrize("n,expected", [(1, 1), (2, Fraction(2, 25)), (6, Fraction(3, 1250))])
def test_c_level(n, expected):
    assert constants.c_level(n) == expected


def test_c_level_square_free():
    with pytest.raises(ValueError):
        constants.c_level(12)


@pytest.mark.parametrize("l", primes_up_to(100))
def test_local_factor(l):
    assert constants.ichino_local_factor(l) == Fraction(l, l * l + 1)


def test_local_factor_examples():
    assert constants.ichino_local_factor(2) == Fraction(2, 5)
    assert constants.ichino_local_factor(3) == Fraction(3, 10)
    with pytest.raises(ValueError):
        constants.ichino_local_factor(4)


def test_petersson_norm_constant():
    assert constants.ichino_constant(0, 0) == PiQuantity(2**13 * 27, 9)
    assert constants.global_zeta_factor() == PiQuantity(2**4 * 27 * 5, -6)
    assert constants.archimedean_factor(2, 1) == PiQuantity(Fraction(2**12, 8), 3 * 2 + 1 + 15)


def test_petersson_pairing_constant():
    assert constants.petersson_pairing_constant(0, 0) == PiQuantity(Fraction(64, 405), 3)
    assert constants.petersson_pairing_constant(1, 0) == PiQuantity(Fraction(-128, 27), 3)
    assert constants.petersson_pairing_constant(1, 0, 2) == constants.petersson_pairing_constant(1, 0) * Fraction(1, 5)


def test_main1_constant():
    assert constants.main1_constant(0, 0) == PiQuantity(Fraction(2**13 * 64, 15), 12)


@settings(max_examples=30, deadline=None)
@given(weights, st.sampled_from([1, 2, 3, 5, 6, 7, 10, 30]))
def test_assembly(w, n):
    k, kp = w
    value = constants.main1_constant(k, kp, n)
    assert constants.petersson_pairing_constant(k, kp, n) * constants.ichino_constant(k, kp, n) == value


def test_siegel_volume():
    assert constants.xi(2) == PiQuantity(Fraction(1, 6), 1)
    assert constants.xi(4) == PiQuantity(Fraction(1, 90), 2)
    assert constants.siegel_volume() == PiQuantity(Fraction(1, 270), 3)
    assert constants.siegel_volume() * 2 == PiQuantity(Fraction(1, 135), 3)
