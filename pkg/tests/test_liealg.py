from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsp4adj import liealg
from gsp4adj.exactnum import I, QuadGaussian
from gsp4adj.liealg import AlgebraicWeight, LieMatrix

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def test_cartan_decomposition():
    report = liealg.cartan_decomposition_report()
    assert len(report) == 12
    assert all(report.values())


def test_root_vectors_are_eigenvectors():
    rv = liealg.build_root_vectors()
    h = rv["T1"] * 2 + rv["T2"] * 5
    for alpha in liealg.NONCOMPACT_ROOTS + liealg.COMPACT_ROOTS:
        assert liealg.verify_root_vector(h, rv[liealg.root_name(alpha)], alpha)


def test_scaled_root_vectors():
    rv = liealg.build_root_vectors(Fraction(3, 2))
    assert rv["X(2,0)"] == liealg.build_root_vectors()["X(2,0)"] * Fraction(3, 2)
    with pytest.raises(ValueError):
        liealg.build_root_vectors(0)


def test_lowering_on_noncompact_roots():
    rv = liealg.build_root_vectors()
    low = liealg.compact_generators()["LOWER"]
    assert low.bracket(rv["X(2,0)"]) == rv["X(1,1)"]
    assert low.bracket(rv["X(1,1)"]) == rv["X(0,2)"] * 2


@settings(max_examples=25)
@given(rationals, rationals)
def test_torus_conjugation(t, tp):
    assert liealg.verify_torus_conjugation(t, tp)


def test_j_is_symplectic():
    assert liealg.in_Sp4(liealg.J_MATRIX)
    assert liealg.J_MATRIX.conj().inverse() == liealg.J_MATRIX


def test_weight_parity():
    with pytest.raises(ValueError):
        AlgebraicWeight(1, 0, 0)


@pytest.mark.parametrize("k,kp", [(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2), (3, 0), (3, 1), (4, 0)])
def test_weyl_dimension_formula(k, kp):
    mod = liealg.weyl_construct(AlgebraicWeight(k, kp, (k + kp) % 2))
    assert mod.dimension == liealg.weyl_dimension(k, kp)


def test_weyl_weights_symmetric():
    mod = liealg.weyl_construct(AlgebraicWeight(2, 1, 1))
    mult = mod.weight_multiset()
    assert all(mult[(a, b)] == mult[(-a, -b)] for a, b in mult)
    assert mult[(2, 1)] == 1


def test_non_dominant_rejected():
    with pytest.raises(ValueError):
        liealg.weyl_construct(AlgebraicWeight(0, 1, 1))


def test_transported_weights():
    mod = liealg.weyl_construct(AlgebraicWeight(1, 0, 1))
    (w,) = mod.vectors_of_weight(1, 0)
    assert liealg.weight_of_transported_vector(mod, w, "J") == liealg.AnalyticWeight(1, 0, 1)
    assert liealg.weight_of_transported_vector(mod, w, "Jbar") == liealg.AnalyticWeight(-1, 0, 1)


@pytest.mark.parametrize("w", [(0, 0, 0), (1, 0, 1), (1, 1, 0), (2, 0, 0)])
def test_norm_pairing_nonzero(w):
    assert liealg.norm_v_pairing(AlgebraicWeight(*w))


def test_matrix_basics():
    m = LieMatrix([[1, 2, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, -2, 1]])
    assert m * m.inverse() == LieMatrix.identity()
    assert (m * I).H() == m.T() * QuadGaussian(0, -1)
