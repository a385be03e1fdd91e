from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsp4adj import modforms
from gsp4adj.modforms import QSeries


def test_eisenstein_coefficients():
    assert modforms.eisenstein(4, 3)[1] == 240
    assert modforms.eisenstein(6, 3)[1] == -504
    e12 = modforms.eisenstein(12, 2)
    assert e12[0] == 1 and e12[1] == Fraction(65520, 691)
    with pytest.raises(ValueError):
        modforms.eisenstein(5, 3)


def test_delta():
    d = modforms.delta(10)
    assert (d[0], d[1], d[2], d[3]) == (0, 1, -24, 252)
    diff = modforms.eisenstein(4, 5) ** 3 - modforms.eisenstein(6, 5) ** 2
    assert diff[0] == 0 and diff[1] == 1728


def test_hecke_on_delta():
    d = modforms.delta(40)
    assert modforms.hecke_operator(d, 12, 2) == d.truncate(20).scale(-24)
    assert modforms.hecke_operator(d, 12, 1) == d
    t6 = modforms.hecke_operator(d, 12, 6)
    t2t3 = modforms.hecke_operator(modforms.hecke_operator(d, 12, 3), 12, 2)
    assert t6 == t2t3.truncate(t6.precision)


def test_hecke_precision_contract():
    with pytest.raises(ValueError, match="precision"):
        modforms.hecke_operator(modforms.delta(10), 12, 3, 5)


@pytest.mark.parametrize("weight,a2", [(12, -24), (16, 216), (18, -528), (20, 456), (22, -288), (26, -48)])
def test_cusp_eigensystems(weight, a2):
    s = modforms.cusp_eigensystems(weight, 40)
    assert s.a(2) == a2
    assert s.check_multiplicative() and s.check_prime_power_recursion()


def test_delta_recursion_example():
    assert modforms.cusp_eigensystems(12, 10).a(4) == 576 - 2048


def test_cusp_weight_restriction():
    with pytest.raises(ValueError):
        modforms.cusp_eigensystems(24, 10)


def test_cusp_dimensions():
    assert [modforms.cusp_dimension(k) for k in (4, 10, 12, 14, 24, 36)] == [0, 0, 1, 0, 2, 3]


def test_echelon_basis_hecke_stable():
    basis = modforms.modular_basis(24, 40)
    for i, f in enumerate(basis):
        assert f[i] == 1 and all(f[j] == 0 for j in range(i))
        image = modforms.hecke_operator(f, 24, 2, 20)
        assert modforms.coordinates_in([g.truncate(20) for g in basis], image) is not None


@settings(max_examples=30)
@given(st.integers(1, 120))
def test_691_congruence_pointwise(n):
    assert (modforms.ramanujan_tau(n, 120) - modforms.sigma(11, n)) % 691 == 0


def test_demo():
    assert modforms.eisenstein_congruence_demo(200) == (691, 200)
    assert modforms.sigma(11, 2) + 24 == 3 * 691
    with pytest.raises(ValueError):
        modforms.eisenstein_congruence_demo(10)


@given(st.lists(st.fractions(max_denominator=9), min_size=1, max_size=6), st.lists(st.fractions(max_denominator=9), min_size=1, max_size=6))
def test_series_product_commutes(a, b):
    assert QSeries(a) * QSeries(b) == QSeries(b) * QSeries(a)
