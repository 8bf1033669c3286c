import json
from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import algebra, small_blocks
from forkalg.algebra import (
    CapExceeded,
    DiagramAlgebra,
    cell_leq,
    check_cellular,
    export_json,
    format_basis_element,
    import_json,
    local_theta_gram,
    parse_basis_element,
    star,
    theta_report,
)
from forkalg.diagrams import OrientedForkDiagram, common_etas, contained_in
from forkalg.weights import Weight, all_permutations, block, is_max_defect

DIMS = {
    3: [1, 9, 28, 6],
    4: [1, 13, 86, 180, 24],
    5: [1, 17, 176, 882, 1320, 120],
}


@pytest.mark.parametrize("n", sorted(DIMS))
def test_dimensions(n):
    assert [len(algebra(n, k)) for k in range(n + 1)] == DIMS[n]


@pytest.mark.parametrize("n,k", small_blocks(5))
def test_dimension_matches_diagram_count(n, k):
    A = algebra(n, k)
    ws = block(n, k)
    assert len(A) == sum(factorial(k) * len(common_etas(lo, up)) for lo in ws for up in ws)
    assert sorted(A.idempotents.values()) == [i for i, d in enumerate(A.degrees) if d == 0]
    assert min(A.degrees) >= 0
    if k == n:
        assert len(A) == factorial(n)


def test_basis_order():
    A = algebra(3, 1)
    keys = [(A.weight_index[d.upper], A.weight_index[d.lower], d.eta.vees, d.sigma) for d in A.basis]
    assert keys == sorted(keys)


def test_cap():
    with pytest.raises(CapExceeded):
        DiagramAlgebra(4, 2, cap=3)
    with pytest.raises(ValueError):
        DiagramAlgebra(3, 4)


@pytest.mark.parametrize("n,k", small_blocks(4))
def test_unit_and_idempotents(n, k):
    A = algebra(n, k)
    u = A.unit()
    for i in range(len(A)):
        assert A.multiply(u, {i: 1}) == {i: 1} == A.multiply({i: 1}, u)
    for lam, e in A.idempotents.items():
        assert A.star_index(e) == e
        for mu, f in A.idempotents.items():
            assert A.multiply_basis(e, f) == ({e: 1} if lam == mu else {})


@pytest.mark.parametrize("n,k", small_blocks(4))
def test_associativity_exhaustive(n, k):
    A = algebra(n, k)
    for i in range(len(A)):
        for j in A.by_lower[A.basis[i].upper]:
            ij = A.multiply_basis(i, j)
            for l in A.by_lower[A.basis[j].upper]:
                assert A.multiply(ij, {l: 1}) == A.multiply({i: 1}, A.multiply_basis(j, l))


@pytest.mark.parametrize("n,k", small_blocks(4))
def test_star_and_grading(n, k):
    A = algebra(n, k)
    for i in range(len(A)):
        assert A.star_index(A.star_index(i)) == i
    for i, j in A.compatible_pairs():
        prod = A.multiply_basis(i, j)
        assert A.star(prod) == A.multiply_basis(A.star_index(j), A.star_index(i))
        assert all(A.degrees[t] == A.degrees[i] + A.degrees[j] for t in prod)
    for i in range(len(A)):
        for j in range(len(A)):
            if A.basis[i].upper != A.basis[j].lower:
                assert A.multiply_basis(i, j) == {}


@given(st.data())
def test_random_triples_in_a_larger_block(data):
    A = algebra(5, 3)
    i = data.draw(st.integers(0, len(A) - 1))
    j = data.draw(st.sampled_from(A.by_lower[A.basis[i].upper]))
    l = data.draw(st.sampled_from(A.by_lower[A.basis[j].upper]))
    assert A.multiply(A.multiply_basis(i, j), {l: 1}) == A.multiply({i: 1}, A.multiply_basis(j, l))
    assert A.star(A.multiply_basis(i, j)) == A.multiply_basis(A.star_index(j), A.star_index(i))


@pytest.mark.parametrize("n,k", small_blocks(4))
def test_products_with_an_identity_middle(n, k):
    """(a lam^e lam)(lam mu^tau d) = (a mu^tau d) when a sits inside mu."""
    A = algebra(n, k)
    ident = tuple(range(1, k + 1))
    for d in A.basis:
        lam, mu = d.lower, d.eta
        for a in A.weights:
            if not contained_in(a, lam) or not contained_in(a, mu):
                continue
            x = A.index[OrientedForkDiagram(a, lam, ident, lam)]
            want = A.index[OrientedForkDiagram(a, mu, d.sigma, d.upper)]
            assert A.multiply_basis(x, A.index[d]) == {want: 1}


def test_basis_text_round_trip():
    A = algebra(4, 2)
    for d in A.basis:
        assert parse_basis_element(format_basis_element(d)) == d
    assert format_basis_element(A.basis[0]).startswith("(lower=")
    with pytest.raises(ValueError):
        parse_basis_element("(lower=^v eta=^v upper=^v)")


def test_star_of_diagram():
    d = algebra(3, 1).basis[5]
    assert star(star(d)) == d and star(d).lower == d.upper


def test_graded_cartan():
    A = algebra(4, 2)
    cart = A.graded_cartan()
    for (lam, mu), c in cart.items():
        assert c == cart[(mu, lam)]
        assert c.at_one() == factorial(2) * len(common_etas(lam, mu))
        if lam == mu:
            assert c.max_degree() == 2 + 2 * lam.symbols[lam.symbols.find("v"):].count("^")
            assert c.coefficient(c.max_degree()) == 1


@pytest.mark.parametrize("n,k", [(3, 2), (4, 1), (4, 2), (4, 3), (3, 3)])
def test_cellular(n, k):
    rep = check_cellular(algebra(n, k))
    assert rep.ok, rep.failures
    assert set(rep.checked) >= {"GC1", "GC2", "GC4", "GC5", "GC6"}


def test_cell_order_is_a_partial_order():
    ws = block(4, 2)
    cells = [(w, s) for w in ws for s in all_permutations(2)]
    for a in cells:
        assert cell_leq(a, a)
        for b in cells:
            if a != b and cell_leq(a, b):
                assert not cell_leq(b, a)


@pytest.mark.parametrize("n,k", small_blocks(4))
def test_theta(n, k):
    A = algebra(n, k)
    rep = theta_report(A)
    assert rep.ok, rep.failures
    for lam in A.weights:
        idx, gram = local_theta_gram(A, lam)
        assert len(idx) == len(gram)


@given(st.data())
def test_theta_is_associative_and_graded(data):
    A = algebra(4, 2)
    top = max(A.degrees)
    y = data.draw(st.integers(0, len(A) - 1))
    z = data.draw(st.integers(0, len(A) - 1))
    w = data.draw(st.integers(0, len(A) - 1))
    assert A.theta({y: 1}, A.multiply_basis(z, w)) == A.theta(A.multiply_basis(y, z), {w: 1})
    if A.degrees[y] + A.degrees[z] != max(A.degrees[A.xi_max(l)] for l in A.max_defect_weights()):
        assert A.theta({y: 1}, {z: 1}) == 0
    assert top >= 0


def test_max_defect_weights():
    A = algebra(4, 2)
    assert A.max_defect_weights() == [w for w in A.weights if is_max_defect(w)]


@pytest.mark.parametrize("n,k", [(1, 1), (1, 0), (3, 2), (4, 2)])
def test_json_round_trip_and_determinism(n, k):
    A = algebra(n, k)
    text = export_json(A)
    again = export_json(DiagramAlgebra(n, k))
    assert text == again
    assert import_json(text).same_as(A)
    data = json.loads(text)
    assert set(data) == {"n", "k", "basis", "products"}
    if (n, k) == (1, 1):
        assert len(data["basis"]) == 1


def test_parallel_build_matches_serial():
    serial = DiagramAlgebra(4, 2)
    serial.build_products(1)
    parallel = DiagramAlgebra(4, 2)
    parallel.build_products(2)
    assert export_json(serial) == export_json(parallel)
