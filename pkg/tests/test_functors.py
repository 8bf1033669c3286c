import pytest

from forkalg.functors import (
    FunctorPair,
    adjunction_check,
    bimodule_checks,
    center_vs_presentation,
    presentation_dimension,
    presentation_generators,
    projective_action,
    projective_action_check,
    psi_checks,
    vee_initial,
    weight_drop,
    weight_lift,
)
from forkalg.polyring import LaurentV, quantum_factorial
from forkalg.weights import Weight, b_sequence, block

PAIRS = [(n, k) for n in range(1, 4) for k in range(n)] + [(4, 1), (4, 2)]


def test_lift_and_drop():
    assert weight_lift(Weight.parse("v^^")) == Weight.parse("^^^")
    for n in range(1, 8):
        for k in range(n):
            for lam in block(n, k):
                if not vee_initial(lam):
                    with pytest.raises(ValueError):
                        weight_lift(lam)
                    continue
                up = weight_lift(lam)
                assert up.k == k + 1 and weight_drop(up) == lam
                assert b_sequence(up) == b_sequence(lam)


@pytest.mark.parametrize("n,k", PAIRS)
def test_psi(n, k):
    rep = psi_checks(FunctorPair(n, k))
    assert rep.ok, rep.failures[:3]


def test_psi_sends_idempotents_to_idempotents():
    pair = FunctorPair(4, 2)
    for mu, e in pair.big.idempotents.items():
        if mu.symbols[0] == "^":
            assert pair.psi({e: 1}) == {pair.small.idempotents[weight_drop(mu)]: 1}


@pytest.mark.parametrize("n,k", PAIRS)
def test_bimodules(n, k):
    rep = bimodule_checks(FunctorPair(n, k))
    assert rep.ok, rep.failures[:3]


@pytest.mark.parametrize("n,k", PAIRS)
def test_projective_action_and_adjunction(n, k):
    pair = FunctorPair(n, k)
    assert projective_action_check(pair).ok
    action = projective_action(pair)
    for mu, lam in action.items():
        assert (lam is None) == vee_initial(mu)
    rep = adjunction_check(pair)
    assert rep.ok, rep.failures[:3]
    for (mu, nu), (left, right) in rep.tables["adjunction"].items():
        if vee_initial(mu):
            assert left.is_zero()


def test_presentation_oracles():
    for n in range(1, 6):
        assert presentation_dimension(n, 0).graded_dimension == LaurentV({0: 1})
        # k = n - 1 gives the coinvariant algebra: Poincare polynomial [n]!
        assert presentation_dimension(n, n - 1).graded_dimension == quantum_factorial(n)
    assert presentation_dimension(2, 1).graded_dimension == LaurentV({0: 1, 2: 1})
    assert all(g.is_homogeneous() for g in presentation_generators(4, 2))


@pytest.mark.parametrize("n,k", PAIRS)
def test_centre_matches_presentation(n, k):
    rep = center_vs_presentation(n, k)
    assert rep.ok, rep.failures
    assert rep.tables["center"].coefficient(0) == 1
