import pytest

from forkalg.diagrams import (
    OrientedForkDiagram,
    all_diagrams,
    common_etas,
    degree,
    diagram_to_monomial,
    fork_degree,
    illicit_case_i,
    illicit_generators,
    is_oriented,
    licit_hom_monomials,
    min_max_degree_formula,
    monomial_to_diagram,
    morphism_degree,
    p_monomial,
    pair_exists,
    schubert_polynomial,
    schubert_table,
    underline,
)
from forkalg.polyring import IntPolynomial
from forkalg.quotient import hom_basis
from forkalg.weights import (
    Weight,
    all_permutations,
    b_sequence,
    block,
    compose,
    length,
    length_of,
    longest_element,
    simple_reflection,
)

W = Weight.parse


def spans(lam):
    return [(f.start, f.end) for f in underline(W(lam)).forks]


def test_underline_example():
    assert spans("^^v^^^vv^v") == [(1, 1), (2, 2), (3, 6), (7, 7), (8, 9), (10, 10)]
    assert spans("^^^^") == [(1, 1), (2, 2), (3, 3), (4, 4)]


def test_underline_is_injective():
    ws = block(6, 3)
    assert len({tuple(spans(str(w))) for w in ws}) == len(ws)


def test_orientation_examples():
    assert not is_oriented(W("^v^"), W("v^^"))
    for w in block(5, 2):
        assert is_oriented(w, w)
        assert fork_degree(w, w) == 0


def test_half_and_full_degrees():
    lam = W("^^v^^^v")
    a, b = W("^v^^^^v"), W("v^^v^^^")
    assert fork_degree(a, lam) == 1
    assert fork_degree(b, lam) == 5
    assert degree(a, lam, upper=b) == 6


def test_schubert_table_small():
    s, t = simple_reflection(1, 3), simple_reflection(2, 3)
    table = schubert_table(3)
    assert table[(1, 2, 3)] == (0, 0, 0)
    assert table[s] == (1, 0, 0)
    assert table[t] == (0, 1, 0)
    assert table[compose(s, t)] == (1, 1, 0)
    assert table[compose(t, s)] == (2, 0, 0)
    assert table[longest_element(3)] == (2, 1, 0)


@pytest.mark.parametrize("k", range(1, 6))
def test_schubert_table_is_the_staircase(k):
    table = schubert_table(k)
    stair = {m for m in table.perm_of if all(e <= k - i for i, e in enumerate(m, start=1))}
    assert len(stair) == len(table.perm_of)
    for w, m in table.monomial_of.items():
        assert sum(m) == length(w)


@pytest.mark.parametrize("k", range(1, 5))
def test_schubert_leading_terms(k):
    for w in all_permutations(k):
        assert schubert_polynomial(w).leading_monomial() == schubert_table(k)[w]


def test_polynomials_of_half_diagrams():
    a, lam = W("v^^^v"), W("^v^^v")
    assert p_monomial(a, lam, (2, 1, 3)) == (2, 0, 0, 0, 0)
    c, mu = W("v^^v^"), W("^v^v^")
    assert p_monomial(c, mu, (1, 2, 3)) == (1, 0, 0, 0, 0)
    for w in block(5, 2):
        assert p_monomial(w, w, (1, 2)) == (0,) * 5


@pytest.mark.parametrize("n,k", [(5, 2), (5, 3), (4, 2)])
def test_degree_formula_for_half_diagrams(n, k):
    for lam in block(n, k):
        for eta in block(n, k):
            if not is_oriented(lam, eta):
                continue
            for s in all_permutations(k):
                d = degree(lam, eta, s)
                assert d == length_of(lam) - length_of(eta) + 2 * length(s)
                assert sum(p_monomial(lam, eta, s)) == length(s) + length_of(lam) - length_of(eta)


@pytest.mark.parametrize("n,k", [(6, 3), (5, 2), (6, 2)])
def test_pair_criterion_matches_brute_force(n, k):
    ws = block(n, k)
    for lo in ws:
        for up in ws:
            brute = any(is_oriented(lo, eta) and is_oriented(up, eta) for eta in ws)
            assert pair_exists(lo, up) == brute == bool(common_etas(lo, up))
            assert illicit_case_i(up, lo) == (not brute)


@pytest.mark.parametrize("n", range(1, 6))
def test_dictionary_is_a_degree_preserving_bijection(n):
    for k in range(n + 1):
        ws = block(n, k)
        for lo in ws:
            for up in ws:
                diagrams = all_diagrams(lo, up)
                monos = licit_hom_monomials(up, lo)
                assert len(monos) == len(diagrams)
                assert sorted(diagram_to_monomial(d) for d in diagrams) == sorted(monos)
                hb = hom_basis(b_sequence(up), b_sequence(lo))
                for m in hb.monomials:
                    d = monomial_to_diagram(m, up, lo)
                    if d is None:
                        continue
                    assert diagram_to_monomial(d) == m
                    assert d.degree == morphism_degree(m, up, lo)


@pytest.mark.parametrize("n", range(2, 7))
def test_illicit_generators_are_illicit(n):
    for k in range(n + 1):
        ws = block(n, k)
        for z in ws:
            for zp in ws:
                if illicit_case_i(z, zp):
                    continue
                for g in illicit_generators(z, zp):
                    if g in hom_basis(b_sequence(z), b_sequence(zp)):
                        assert monomial_to_diagram(g, z, zp) is None


@pytest.mark.parametrize("n,k", [(4, 2), (5, 2), (5, 3), (6, 3)])
def test_extreme_degrees(n, k):
    ws = block(n, k)
    for lam in ws:
        for mu in ws:
            degs = [d.degree for d in all_diagrams(lam, mu)]
            if degs:
                assert (min(degs), max(degs)) == min_max_degree_formula(lam, mu)


def test_identity_diagram_and_render():
    lam = W("^v^v")
    d = OrientedForkDiagram(lam, lam, (1, 2), lam)
    assert diagram_to_monomial(d) == (0, 0, 0, 0)
    assert monomial_to_diagram((0, 0, 0, 0), lam, lam) == d
    assert d.degree == 0
    assert len(d.render().splitlines()) == 3


def test_schubert_polynomial_is_a_polynomial():
    assert isinstance(schubert_polynomial((2, 1)), IntPolynomial)
