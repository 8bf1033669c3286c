"""Fork diagrams, Schubert monomials and the monomial dictionary.

Lower fork diagrams are determined by weights: underline(l) has a ray under
each initial wedge and a fork under each maximal run "vee followed by
wedges".  An oriented diagram (underline(mu), eta^sigma, overline(lam)) is
the basis vector of the algebra sending the Soergel module of ``lam`` to the
one of ``mu`` by 1 -> p, where p is the monomial of its lower half.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from .polyring import IntPolynomial, Monomial, demazure
from .quotient import hom_basis
from .weights import (
    Perm,
    Weight,
    all_permutations,
    b_sequence,
    compose,
    inverse,
    lehmer_code,
    length,
    length_of,
    lex_smallest_reduced_word,
    longest_element,
)


# Schubert leading monomials --------------------------------------------------

@dataclass(frozen=True)
class SchubertTable:
    k: int
    monomial_of: Dict[Perm, Monomial]
    perm_of: Dict[Monomial, Perm]

    def __getitem__(self, w: Perm) -> Monomial:
        return self.monomial_of[tuple(w)]


@lru_cache(maxsize=None)
def schubert_table(k: int) -> SchubertTable:
    """S'_w = x^{c} with c the Lehmer code of w; a bijection onto the staircase."""
    if k > 8:
        raise ValueError("Schubert tables are limited to k <= 8")
    mono_of = {w: lehmer_code(w) for w in all_permutations(k)}
    perm_of = {m: w for w, m in mono_of.items()}
    if len(perm_of) != len(mono_of):
        raise ArithmeticError("Schubert leading monomials are not distinct")
    return SchubertTable(k, mono_of, perm_of)


def schubert_polynomial(w: Sequence[int]) -> IntPolynomial:
    """Full Schubert polynomial via Demazure operators on x1^{k-1} x2^{k-2} ..."""
    k = len(w)
    top = IntPolynomial.monomial(tuple(range(k - 1, -1, -1)))
    if k == 0:
        return IntPolynomial.one(0)
    u = compose(inverse(w), longest_element(k))
    f = top
    for i in reversed(lex_smallest_reduced_word(u)):
        f = demazure(i, f)
    return f


# fork diagrams -----------------------------------------------------------------

@dataclass(frozen=True)
class Fork:
    start: int
    end: int
    initial_ray: bool

    @property
    def size(self) -> int:
        return self.end - self.start + 1


@dataclass(frozen=True)
class LowerForkDiagram:
    """underline(weight): the degree-zero lower diagram of a weight."""

    weight: Weight

    @property
    def n(self) -> int:
        return self.weight.n

    @property
    def forks(self) -> Tuple[Fork, ...]:
        out: List[Fork] = []
        vees = self.weight.vees
        first = vees[0] if vees else self.n + 1
        for p in range(1, first):
            out.append(Fork(p, p, True))
        for j, p in enumerate(vees, start=1):
            end = (vees[j] - 1) if j < len(vees) else self.n
            out.append(Fork(p, end, False))
        return tuple(out)

    def render(self, upper: bool = False) -> str:
        """One-line sketch: rays as '|', forks bracketed, e.g. ``| [----] |``."""
        cells = []
        for f in self.forks:
            if f.size == 1:
                cells.append("|")
            else:
                left, right = ("\\", "/") if not upper else ("/", "\\")
                cells.append(left + "-" * (2 * f.size - 3) + right)
        return " ".join(cells)


def underline(weight: Weight) -> LowerForkDiagram:
    return LowerForkDiagram(weight)


def is_oriented(diagram_weight: Weight, eta: Weight) -> bool:
    """underline(diagram_weight) . eta is oriented: vee_i(lam) <= vee_i(eta) < vee_{i+1}(lam)."""
    if diagram_weight.n != eta.n or diagram_weight.k != eta.k:
        return False
    lam, m = diagram_weight, eta.n - eta.k
    return all(lam.vee(i) <= eta.vee(i) < lam.vee(i + 1) for i in range(1, m + 1))


def contained_in(alpha: Weight, lam: Weight) -> bool:
    """alpha is 'inside' lam: underline(alpha) lam is oriented."""
    return is_oriented(alpha, lam)


def pair_exists(lower: Weight, upper: Weight) -> bool:
    """Some eta orients both underline(lower) and overline(upper)."""
    m = lower.n - lower.k
    return all(
        lower.vee(i) < upper.vee(i + 1) and upper.vee(i) < lower.vee(i + 1)
        for i in range(1, m)
    )


def common_etas(lower: Weight, upper: Weight) -> List[Weight]:
    """All eta with underline(lower) eta overline(upper) oriented, in block order."""
    n, m = lower.n, lower.n - lower.k
    ranges = []
    for i in range(1, m + 1):
        lo = max(lower.vee(i), upper.vee(i))
        hi = min(lower.vee(i + 1), upper.vee(i + 1)) - 1
        if lo > hi:
            return []
        ranges.append(range(lo, hi + 1))
    return [Weight.from_vees(n, vs) for vs in product(*ranges)]


def fork_degree(diagram_weight: Weight, eta: Weight) -> int:
    """Sum over forks of (position of the vee inside the fork) - 1."""
    if not is_oriented(diagram_weight, eta):
        raise ValueError(f"underline({diagram_weight}) {eta} is not oriented")
    return sum(e - d for e, d in zip(eta.vees, diagram_weight.vees))


def half_degree(diagram_weight: Weight, eta: Weight, sigma: Sequence[int]) -> int:
    """Degree of an enhanced half diagram: fork degrees + 2 l(sigma)."""
    return fork_degree(diagram_weight, eta) + 2 * length(sigma)


@dataclass(frozen=True, order=True)
class OrientedForkDiagram:
    """(underline(lower) eta^sigma overline(upper))."""

    lower: Weight
    eta: Weight
    sigma: Perm
    upper: Weight

    def __post_init__(self):
        if len(self.sigma) != self.eta.k:
            raise ValueError("sigma must lie in S_k")
        if not (is_oriented(self.lower, self.eta) and is_oriented(self.upper, self.eta)):
            raise ValueError(f"diagram ({self.lower} {self.eta} {self.upper}) is not oriented")

    @property
    def degree(self) -> int:
        return (
            fork_degree(self.lower, self.eta)
            + fork_degree(self.upper, self.eta)
            + 2 * length(self.sigma)
        )

    def render(self) -> str:
        up = underline(self.upper).render(upper=True)
        low = underline(self.lower).render()
        mid = " ".join(self.eta.symbols)
        sig = ",".join(map(str, self.sigma))
        return f"{up}\n{mid}   sigma=({sig})\n{low}"


def degree(lower: Weight, eta: Weight, sigma: Sequence[int] = (), upper: Optional[Weight] = None) -> int:
    """Degree of a lower half (upper=None) or of a full diagram."""
    sigma = tuple(sigma) if sigma else tuple(range(1, eta.k + 1))
    if upper is None:
        return half_degree(lower, eta, sigma)
    return OrientedForkDiagram(lower, eta, sigma, upper).degree


# polynomials attached to half diagrams ---------------------------------------------

def p_monomial(lower: Weight, eta: Weight, sigma: Sequence[int]) -> Monomial:
    """Exponent vector of p = S'_sigma(x at the wedges of eta) * prod_j x_{vee_j(lower)}..x_{vee_j(eta)-1}."""
    if not is_oriented(lower, eta):
        raise ValueError(f"underline({lower}) {eta} is not oriented")
    n = lower.n
    exps = [0] * n
    schub = schubert_table(eta.k)[tuple(sigma)]
    for e, pos in zip(schub, eta.wedges):
        exps[pos - 1] += e
    for a, b in zip(lower.vees, eta.vees):
        for p in range(a, b):
            exps[p - 1] += 1
    return tuple(exps)


def p_polynomial(lower: Weight, eta: Weight, sigma: Sequence[int]) -> IntPolynomial:
    return IntPolynomial.monomial(p_monomial(lower, eta, sigma))


def diagram_to_monomial(d: OrientedForkDiagram) -> Monomial:
    return p_monomial(d.lower, d.eta, d.sigma)


def morphism_degree(mono: Sequence[int], source: Weight, target: Weight) -> int:
    """Degree of 1 -> x^j from C(source) to C(target) with the shifted generators."""
    return 2 * sum(mono) - length_of(target) + length_of(source)


ILLICIT = None


def licit_runs(mono: Sequence[int], source: Weight, target: Weight) -> Optional[Tuple[int, ...]]:
    """Run ends l_j for a Hom monomial, or None if some run reaches too far.

    l_j is maximal with x_{vee_j(target)} ... x_{l_j - 1} dividing the
    monomial; licit means l_j < min(vee_{j+1}(source), vee_{j+1}(target)),
    the sentinel vee_{n-k+1} being n+1.
    """
    n, m = target.n, target.n - target.k
    ends = []
    for j in range(1, m + 1):
        p = target.vee(j)
        while p <= n and mono[p - 1] > 0:
            p += 1
        if p >= min(source.vee(j + 1), target.vee(j + 1)):
            return None
        ends.append(p)
    return tuple(ends)


def monomial_to_diagram(mono: Sequence[int], source: Weight, target: Weight):
    """Inverse dictionary: a Hom monomial C(source) -> C(target) to its diagram, or ILLICIT."""
    mono = tuple(mono)
    ends = licit_runs(mono, source, target)
    if ends is None:
        return ILLICIT
    eta = Weight.from_vees(target.n, ends)
    if not (is_oriented(target, eta) and is_oriented(source, eta)):
        raise ArithmeticError(f"licit monomial {mono} gave an unoriented eta {eta}")
    rest = list(mono)
    for a, b in zip(target.vees, ends):
        for p in range(a, b):
            rest[p - 1] -= 1
    if any(rest[p - 1] for p in eta.vees) or any(e < 0 for e in rest):
        raise ArithmeticError(f"monomial {mono} leaves a factor on a vee of {eta}")
    key = tuple(rest[p - 1] for p in eta.wedges)
    table = schubert_table(eta.k)
    sigma = table.perm_of.get(key)
    if sigma is None:
        raise ArithmeticError(f"monomial {mono} leaves {key}, not a Schubert monomial")
    return OrientedForkDiagram(target, eta, sigma, source)


def licit_hom_monomials(source: Weight, target: Weight) -> List[Monomial]:
    basis = hom_basis(b_sequence(source), b_sequence(target))
    return [m for m in basis.monomials if licit_runs(m, source, target) is not None]


def illicit_case_i(source: Weight, target: Weight) -> bool:
    """Whole Hom space illicit: vee_j(z) >= vee_{j+1}(z') or vee_j(z') >= vee_{j+1}(z) for some j < n-k."""
    m = source.n - source.k
    return any(
        source.vee(j) >= target.vee(j + 1) or target.vee(j) >= source.vee(j + 1)
        for j in range(1, m)
    )


def illicit_generators(source: Weight, target: Weight) -> List[Monomial]:
    """Generating monomials (x_{vee_j(z)} ... x_{beta(j)}) x^c of the illicit part (case ii)."""
    n, m = source.n, source.n - source.k
    bz, bzp = b_sequence(source), b_sequence(target)
    c = [max(b2 - b1, 0) for b1, b2 in zip(bz, bzp)]
    out = []
    for j in range(1, m + 1):
        beta = min(source.vee(j + 1), target.vee(j + 1)) - 1 if j < m else n
        exps = list(c)
        for p in range(source.vee(j), beta + 1):
            exps[p - 1] += 1
        out.append(tuple(exps))
    return out


def all_diagrams(lower: Weight, upper: Weight) -> List[OrientedForkDiagram]:
    perms = all_permutations(lower.k)
    return [
        OrientedForkDiagram(lower, eta, s, upper)
        for eta in common_etas(lower, upper)
        for s in perms
    ]


def min_max_degree_formula(lam: Weight, mu: Weight) -> Tuple[int, int]:
    """Closed forms for the smallest and largest degree in e_lam A e_mu."""
    k, n, m = lam.k, lam.n, lam.n - lam.k
    low = sum(abs(a - b) for a, b in zip(lam.vees, mu.vees))
    high = k * (k - 1)
    for i in range(1, m + 1):
        nxt = min(lam.vee(i + 1), mu.vee(i + 1)) - 1
        high += abs(nxt - lam.vee(i)) + abs(nxt - mu.vee(i))
    return low, high


def max_diagram(lam: Weight) -> OrientedForkDiagram:
    """Each vee at the right end of its fork, sigma the longest element."""
    m = lam.n - lam.k
    eta = Weight.from_vees(lam.n, [lam.vee(i + 1) - 1 for i in range(1, m + 1)])
    return OrientedForkDiagram(lam, eta, longest_element(lam.k), lam)
