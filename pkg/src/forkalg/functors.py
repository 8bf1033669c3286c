"""The bimodules F_k and E_k between A_{n,k} and A_{n,k+1}, and the centre computation.

F_k is A_k e^v_k (the sum of the projective-injective A_k-modules).  A_{k+1}
acts on the right through psi: keep the part between wedge-initial weights,
flip the first symbol of both weights to a vee, and reread the Hom
monomial in the smaller algebra, where it may have become illicit.
E_k is the same vector space with both actions twisted by star.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement
from typing import Dict, List, Optional, Sequence, Tuple

from .algebra import DiagramAlgebra, Element, add_into, build_algebra
from .diagrams import monomial_to_diagram
from .linalg import rank_of_columns, row_basis
from .polyring import IntPolynomial, LaurentV, Monomial, complete_symmetric
from .weights import DOWN, UP, Weight

Vector = Dict[int, int]


def weight_lift(lam: Weight) -> Weight:
    """lam^(wedge): the leading vee becomes a wedge."""
    if not lam.symbols.startswith(DOWN):
        raise ValueError(f"{lam} does not start with a vee")
    return Weight(UP + lam.symbols[1:])


def weight_drop(mu: Weight) -> Weight:
    """mu^(vee): the leading wedge becomes a vee."""
    if not mu.symbols.startswith(UP):
        raise ValueError(f"{mu} does not start with a wedge")
    return Weight(DOWN + mu.symbols[1:])


def vee_initial(w: Weight) -> bool:
    return w.symbols.startswith(DOWN)


def wedge_initial(w: Weight) -> bool:
    return w.symbols.startswith(UP)


class FunctorPair:
    """A_k = A_{n,k}, A_{k+1} = A_{n,k+1}, and the maps between them."""

    def __init__(self, n: int, k: int, cap: Optional[int] = None):
        if not 0 <= k < n:
            raise ValueError(f"need 0 <= k < n, got n={n}, k={k}")
        self.n, self.k = n, k
        self.small = build_algebra(n, k, cap)
        self.big = build_algebra(n, k + 1, cap)
        self._psi: Dict[int, Optional[int]] = {}
        # F_k = A_k e^v: diagrams whose upper weight starts with a vee
        self.f_basis = [i for i, d in enumerate(self.small.basis) if vee_initial(d.upper)]
        self.f_index = {g: p for p, g in enumerate(self.f_basis)}

    # psi ----------------------------------------------------------------------
    def psi_basis(self, i: int) -> Optional[int]:
        """psi(e^ x e^) for a basis vector x of A_{k+1}, as a basis index of A_k or None."""
        if i in self._psi:
            return self._psi[i]
        d = self.big.basis[i]
        out = None
        if wedge_initial(d.lower) and wedge_initial(d.upper):
            source, target = weight_drop(d.upper), weight_drop(d.lower)
            image = monomial_to_diagram(self.big.monomials[i], source, target)
            out = None if image is None else self.small.index[image]
        self._psi[i] = out
        return out

    def psi(self, x: Element) -> Element:
        out: Element = {}
        for i, c in x.items():
            j = self.psi_basis(i)
            if j is not None:
                add_into(out, {j: c})
        return out

    # F ----------------------------------------------------------------------------
    def f_left(self, a: int, col: int) -> Vector:
        """a . m for a basis vector a of A_k."""
        prod = self.small.multiply_basis(a, self.f_basis[col])
        return {self.f_index[g]: c for g, c in prod.items()}

    def f_right(self, col: int, b: int) -> Vector:
        """m . b for a basis vector b of A_{k+1}."""
        j = self.psi_basis(b)
        if j is None:
            return {}
        prod = self.small.multiply_basis(self.f_basis[col], j)
        return {self.f_index[g]: c for g, c in prod.items()}

    # E: the same space, left A_{k+1} action y -> y b^star, right A_k action y -> a^star y
    def e_left(self, b: int, col: int) -> Vector:
        return self.f_right(col, self.big.star_index(b))

    def e_right(self, col: int, a: int) -> Vector:
        return self.f_left(self.small.star_index(a), col)

    @property
    def f_degrees(self) -> List[int]:
        return [self.small.degrees[g] for g in self.f_basis]


def _act(vec: Vector, fn, *, on_left: bool, x: int) -> Vector:
    out: Vector = {}
    for col, c in vec.items():
        image = fn(x, col) if on_left else fn(col, x)
        add_into(out, image, c)
    return out


@dataclass
class FunctorReport:
    n: int
    k: int
    failures: List[str] = field(default_factory=list)
    checked: Dict[str, int] = field(default_factory=dict)
    tables: Dict[str, object] = field(default_factory=dict)

    def count(self, key: str, amount: int = 1) -> None:
        self.checked[key] = self.checked.get(key, 0) + amount

    @property
    def ok(self) -> bool:
        return not self.failures


def psi_checks(pair: FunctorPair, samples: Optional[int] = None, seed: int = 0) -> FunctorReport:
    """psi is multiplicative, degree preserving, surjective, and sends e_mu to e_{mu^(vee)}."""
    rep = FunctorReport(pair.n, pair.k)
    big, small = pair.big, pair.small
    dom = [i for i, d in enumerate(big.basis) if wedge_initial(d.lower) and wedge_initial(d.upper)]
    for mu in big.weights:
        if wedge_initial(mu):
            if pair.psi_basis(big.idempotents[mu]) != small.idempotents[weight_drop(mu)]:
                rep.failures.append(f"psi(e_{mu}) is not e_{weight_drop(mu)}")
    for i in dom:
        j = pair.psi_basis(i)
        if j is not None and small.degrees[j] != big.degrees[i]:
            rep.failures.append(f"psi changes the degree of basis vector {i}")
    dom_set = set(dom)
    pairs = [(i, j) for i in dom for j in big.by_lower[big.basis[i].upper] if j in dom_set]
    if samples is not None and samples < len(pairs):
        pairs = random.Random(seed).sample(pairs, samples)
    for i, j in pairs:
        lhs = pair.psi(big.multiply_basis(i, j))
        rhs = small.multiply(pair.psi({i: 1}), pair.psi({j: 1}))
        if lhs != rhs:
            rep.failures.append(f"psi(x y) != psi(x) psi(y) for {i}, {j}")
        rep.count("multiplicative")
    image = {pair.psi_basis(i) for i in dom} - {None}
    target = {
        g for g, d in enumerate(small.basis) if vee_initial(d.lower) and vee_initial(d.upper)
    }
    if image != target:
        rep.failures.append(f"psi image has {len(image)} of {len(target)} basis vectors of e^v A_k e^v")
    rep.tables["image_dimension"] = len(image)
    return rep


def bimodule_checks(pair: FunctorPair, samples: Optional[int] = None, seed: int = 0) -> FunctorReport:
    """Commuting actions on F and E, module axioms for the right action, and the kernel of the right action."""
    rep = FunctorReport(pair.n, pair.k)
    big, small = pair.big, pair.small
    rng = random.Random(seed)
    cols = list(range(len(pair.f_basis)))
    triples = [(a, m, b) for m in cols for a in small.by_upper[small.basis[pair.f_basis[m]].lower]
               for b in range(len(big))]
    if samples is not None and samples < len(triples):
        triples = rng.sample(triples, samples)
    for a, m, b in triples:
        lhs = _act(pair.f_left(a, m), pair.f_right, on_left=False, x=b)
        rhs = _act(pair.f_right(m, b), pair.f_left, on_left=True, x=a)
        if lhs != rhs:
            rep.failures.append(f"F: (a m) b != a (m b) for a={a}, m={m}, b={b}")
        lhs = _act(pair.e_left(b, m), pair.e_right, on_left=False, x=a)
        rhs = _act(pair.e_right(m, a), pair.e_left, on_left=True, x=b)
        if lhs != rhs:
            rep.failures.append(f"E: (b m) a != b (m a) for a={a}, m={m}, b={b}")
        rep.count("commutation")
    # right module axiom m (b1 b2) = (m b1) b2 and the ideal A e^v A acting by zero
    pairs = list(big.compatible_pairs())
    if samples is not None and samples < len(pairs):
        pairs = rng.sample(pairs, samples)
    for b1, b2 in pairs:
        prod = big.multiply_basis(b1, b2)
        through_vee = vee_initial(big.basis[b1].upper)
        for m in cols:
            lhs: Vector = {}
            for g, c in prod.items():
                add_into(lhs, pair.f_right(m, g), c)
            rhs = _act(pair.f_right(m, b1), pair.f_right, on_left=False, x=b2)
            if lhs != rhs:
                rep.failures.append(f"F: m (b1 b2) != (m b1) b2 for {b1}, {b2}")
            if through_vee and lhs:
                rep.failures.append(f"F: A e^v A does not act by zero ({b1}, {b2})")
        rep.count("right module", len(cols))
    return rep


def projective_action(pair: FunctorPair) -> Dict[Weight, Optional[Weight]]:
    """F (x) P(mu) = F e_mu; returns lam with F e_mu = P(lam) = A_k e_lam, or None when it is 0."""
    big, small = pair.big, pair.small
    out: Dict[Weight, Optional[Weight]] = {}
    for mu in big.weights:
        e = big.idempotents[mu]
        images = [pair.f_right(m, e) for m in range(len(pair.f_basis))]
        fixed = [m for m, im in enumerate(images) if im == {m: 1}]
        if any(im and im != {m: 1} for m, im in enumerate(images)):
            raise ArithmeticError(f"e_{mu} does not act on F as a projection onto basis vectors")
        uppers = {small.basis[pair.f_basis[m]].upper for m in fixed}
        if not fixed:
            out[mu] = None
            continue
        if len(uppers) != 1:
            raise ArithmeticError(f"F e_{mu} is spread over several projectives")
        lam = uppers.pop()
        if sorted(pair.f_basis[m] for m in fixed) != sorted(small.by_upper[lam]):
            raise ArithmeticError(f"F e_{mu} is not all of A_k e_{lam}")
        out[mu] = lam
    return out


def projective_action_check(pair: FunctorPair) -> FunctorReport:
    rep = FunctorReport(pair.n, pair.k)
    got = projective_action(pair)
    for mu, lam in got.items():
        want = weight_drop(mu) if wedge_initial(mu) else None
        if lam != want:
            rep.failures.append(f"F (x) P({mu}) gave {lam}, expected {want}")
    rep.tables["F_on_projectives"] = got
    return rep


def _graded_rank(vectors: List[Tuple[int, Vector]]) -> LaurentV:
    by_degree: Dict[int, List[Vector]] = {}
    for deg, vec in vectors:
        if vec:
            by_degree.setdefault(deg, []).append(vec)
    out = LaurentV()
    for deg, vecs in by_degree.items():
        out = out + LaurentV.monomial(deg, rank_of_columns(vecs))
    return out


def adjunction_check(pair: FunctorPair) -> FunctorReport:
    """grdim Hom_{A_k}(F (x) P(mu), P(nu)) against grdim Hom_{A_{k+1}}(P(mu), E (x) P(nu)).

    The left side is e_lam A_k e_nu with F (x) P(mu) = P(lam) found by
    projective_action; the right side is e_mu E e_nu, computed as the image of
    the projector y -> e_mu . y . e_nu inside E.
    """
    rep = FunctorReport(pair.n, pair.k)
    big, small = pair.big, pair.small
    cartan = small.graded_cartan()
    action = projective_action(pair)
    degs = pair.f_degrees
    table = {}
    for mu in big.weights:
        for nu in small.weights:
            lam = action[mu]
            left = LaurentV() if lam is None else cartan[(lam, nu)]
            em, en = big.idempotents[mu], small.idempotents[nu]
            vecs = []
            for y in range(len(pair.f_basis)):
                v = _act(pair.e_left(em, y), pair.e_right, on_left=False, x=en)
                vecs.append((degs[y], v))
            right = _graded_rank(vecs)
            table[(mu, nu)] = (left, right)
            if left != right:
                rep.failures.append(f"adjunction mismatch at P({mu}), P({nu}): {left} vs {right}")
            rep.count("pairs")
    rep.tables["adjunction"] = table
    return rep


# centre versus presentation --------------------------------------------------------

def presentation_generators(n: int, k: int) -> List[IntPolynomial]:
    """h_{k+1}(x_S) for |S| <= n-k and h_{n-|S|+1}(x_S) for |S| > n-k."""
    gens = []
    for m in range(1, n + 1):
        degree = k + 1 if m <= n - k else n - m + 1
        for subset in combinations(range(1, n + 1), m):
            gens.append(complete_symmetric(degree, subset, n))
    return gens


def monomials_of_degree(n: int, d: int) -> List[Monomial]:
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    return sorted(out)


@dataclass
class PresentationData:
    n: int
    k: int
    generators: List[IntPolynomial]
    graded_dimension: LaurentV
    vanishing_degree: int


def presentation_dimension(n: int, k: int, max_degree: int = 64) -> PresentationData:
    """grdim C[x]/I_k by degreewise rank, stopping once a whole degree lies in I_k.

    The degree-d part of the ideal is spanned by x_i times a basis of the
    degree d-1 part together with the generators of degree d.
    """
    gens = presentation_generators(n, k)
    by_degree: Dict[int, List[Dict[Monomial, int]]] = {}
    for g in gens:
        by_degree.setdefault(g.degree() // 2, []).append(dict(g.terms))
    total = LaurentV()
    previous: List[Dict[Monomial, int]] = []
    for d in range(max_degree + 1):
        span = list(by_degree.get(d, []))
        for vec in previous:
            for i in range(n):
                span.append({m[:i] + (m[i] + 1,) + m[i + 1:]: a for m, a in vec.items()})
        previous = row_basis(span)
        quotient = len(monomials_of_degree(n, d)) - len(previous)
        if quotient == 0:
            return PresentationData(n, k, gens, total, d)
        total = total + LaurentV.monomial(2 * d, quotient)
    raise ArithmeticError(f"C[x]/I_k did not vanish up to degree {max_degree}")


def center_dimension(alg: DiagramAlgebra, weights: Sequence[Weight], commute_with: Sequence[int]) -> LaurentV:
    """grdim of {z in e A e : z b = b z for all listed b}, e the sum of e_lam over ``weights``.

    A central z commutes with every e_lam, so it lies in the diagonal blocks.
    """
    wset = set(weights)
    variables: Dict[int, List[int]] = {}
    for lam in weights:
        for i in alg.by_pair.get((lam, lam), []):
            variables.setdefault(alg.degrees[i], []).append(i)
    out = LaurentV()
    for deg, idxs in sorted(variables.items()):
        columns = []
        for i in idxs:
            col: Dict[Tuple[int, int], int] = {}
            for b in commute_with:
                bd = alg.basis[b]
                if bd.lower not in wset or bd.upper not in wset:
                    continue
                for g, c in alg.multiply_basis(i, b).items():
                    col[(b, g)] = col.get((b, g), 0) + c
                for g, c in alg.multiply_basis(b, i).items():
                    col[(b, g)] = col.get((b, g), 0) - c
            columns.append({key: c for key, c in col.items() if c})
        kernel = len(idxs) - rank_of_columns(columns)
        if kernel:
            out = out + LaurentV.monomial(deg, kernel)
    return out


def center_vs_presentation(n: int, k: int, cap: Optional[int] = None) -> FunctorReport:
    """Centre of e^v A_k e^v, the bimodule endomorphisms of F, and C[x]/I_k, as graded dimensions.

    Bimodule endomorphisms of F = A_k e^v are right multiplications by
    elements of e^v A_k e^v that commute with psi(A_{k+1}); both that
    commutant and the centre proper are computed.
    """
    pair = FunctorPair(n, k, cap)
    small = pair.small
    vees = [w for w in small.weights if vee_initial(w)]
    block_basis = [
        i for i, d in enumerate(small.basis) if vee_initial(d.lower) and vee_initial(d.upper)
    ]
    psi_images = sorted({pair.psi_basis(i) for i in range(len(pair.big))} - {None})
    centre = center_dimension(small, vees, block_basis)
    endo = center_dimension(small, vees, psi_images)
    pres = presentation_dimension(n, k)
    rep = FunctorReport(n, k)
    rep.tables.update(
        center=centre, bimodule_endomorphisms=endo,
        presentation=pres.graded_dimension, vanishing_degree=pres.vanishing_degree,
    )
    if centre != pres.graded_dimension:
        rep.failures.append(f"centre {centre} differs from presentation {pres.graded_dimension}")
    if endo != centre:
        rep.failures.append(f"End(F) {endo} differs from the centre {centre}")
    return rep
