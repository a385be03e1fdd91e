from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gsp4adj import ktypes, linalg
from gsp4adj.ktypes import TauModule, TensorVector
from gsp4adj.liealg import compact_generators


def test_tau_action_examples():
    assert ktypes.tau_action(TauModule(2, 0), "RAISE", 2) == {}
    assert ktypes.tau_action(TauModule(2, 0), "LOWER", 2) == {1: 1}
    assert ktypes.tau_action(TauModule(3, -1), "LOWER", 4) == {3: 1}
    with pytest.raises(IndexError):
        ktypes.tau_action(TauModule(1, 0), "RAISE", 2)
    with pytest.raises(ValueError):
        ktypes.tau_action(TauModule(1, 0), "X", 0)


@given(st.integers(-5, 5), st.integers(0, 10))
def test_tau_commutator(kp, d):
    tau = TauModule(kp + d, kp)
    for s in range(d + 1):
        rl = tau.apply("RAISE", tau.apply("LOWER", {s: Fraction(1)}))
        lr = tau.apply("LOWER", tau.apply("RAISE", {s: Fraction(1)}))
        h = tau.apply("H1", {s: Fraction(1)})
        h2 = tau.apply("H2", {s: Fraction(1)})
        assert rl.get(s, 0) - lr.get(s, 0) == h.get(s, 0) - h2.get(s, 0) == 2 * s - d


def test_adjoint_action_examples():
    gens = compact_generators()
    e1 = TensorVector.basis(0)
    assert not ktypes.adjoint_action_on_tensor(gens["RAISE"], e1)
    w3 = ktypes.adjoint_action_on_tensor(gens["LOWER"], e1)
    assert w3.rational() == [Fraction(x) for x in ktypes.REFERENCE_W[3]]
    for j in range(9):
        image = ktypes.adjoint_action_on_tensor(gens["H1"], TensorVector.basis(j)).rational()
        assert image == [Fraction(ktypes.basis_weight(j)[0]) if i == j else 0 for i in range(9)]


def test_adjoint_action_rejects_noncompact():
    from gsp4adj.liealg import build_root_vectors

    with pytest.raises(ValueError):
        ktypes.adjoint_action_on_tensor(build_root_vectors()["X(2,0)"], TensorVector.basis(0))


def test_adjoint_action_scale_independent():
    gens = compact_generators()
    for j in range(9):
        v = TensorVector.basis(j)
        assert ktypes.adjoint_action_on_tensor(gens["LOWER"], v, scale=Fraction(5, 3)) == ktypes.adjoint_action_on_tensor(gens["LOWER"], v)


def test_projection_properties():
    p = ktypes.projection_onto_31()
    assert linalg.matmul(p, p) == p
    assert linalg.rank(p) == 5
    for name in ktypes.GENERATORS:
        m = ktypes.generator_matrix(name)
        assert linalg.matmul(p, m) == linalg.matmul(m, p)
    assert p[1][1] == Fraction(1, 2) and p[1][3] == Fraction(-1, 4)
    assert p[0] == [1] + [0] * 8


def test_projections_sum_to_identity():
    projs = ktypes.equivariant_projections()
    total = linalg.zeros(9, 9)
    for q in projs:
        total = [[a + b for a, b in zip(r, s)] for r, s in zip(total, q)]
    assert total == linalg.identity(9)


def test_lowering_combinations():
    combos = ktypes.projection_as_lowering_combinations()
    assert combos == ktypes.REFERENCE_LOWERING_COEFFS
    assert combos[3] == (Fraction(1, 4), 1)
    assert combos[8] == (Fraction(1, 24), 4)


@pytest.mark.parametrize("d,i,expected", [(3, 0, 1), (2, 1, -2), (5, 5, -14400)])
def test_pairing_coefficient_examples(d, i, expected):
    assert ktypes.pairing_coefficient(d, i) == expected


@given(st.integers(0, 12).flatmap(lambda d: st.tuples(st.just(d), st.integers(0, d))))
def test_pairing_coefficient_magnitude(di):
    d, i = di
    c = ktypes.pairing_coefficient(d, i)
    assert abs(c) == factorial(i) * factorial(d) // factorial(d - i)
    assert (c > 0) == (i % 2 == 0)


def test_pairing_coefficient_range():
    with pytest.raises(ValueError):
        ktypes.pairing_coefficient(2, 3)


def test_minimal_ktypes():
    assert ktypes.minimal_ktypes(0, 0) == [(3, 3), (3, -1), (1, -3), (-3, -3)]
    with pytest.raises(ValueError):
        ktypes.minimal_ktypes(0, 1)
