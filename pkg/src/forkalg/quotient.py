"""Quotient rings R_b = Z[x1..xn]/I_b with I_b = (h_{b_i}(x1..xi)).

The generator h_{b_i}(x1..xi) has leading term x_i^{b_i} in the fixed
monomial order.  These leading terms are pairwise coprime, so the
generators already form a Groebner basis and the normal-form monomials are
exactly x^j with j_i < b_i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, List, Sequence, Tuple

from .polyring import (
    IntPolynomial,
    LaurentV,
    Monomial,
    complete_symmetric,
    monomial_degree,
    monomial_key,
)


@dataclass(frozen=True)
class BSequence:
    """A sequence of positive integers indexing a quotient ring."""

    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if any(v < 1 for v in self.values):
            raise ValueError(f"b-sequence entries must be positive: {self.values}")

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    @property
    def in_b_prime(self) -> bool:
        """Weakly decreasing with steps of at most one: b_i >= b_{i+1} >= b_i - 1."""
        v = self.values
        return all(v[i] >= v[i + 1] >= v[i] - 1 for i in range(len(v) - 1))

    def in_b(self, k: int) -> bool:
        """Membership in the class of b-sequences of weights with k wedges."""
        v = self.values
        return bool(v) and self.in_b_prime and v[-1] == 1 and v[0] <= k + 1


def _as_bseq(b) -> BSequence:
    return b if isinstance(b, BSequence) else BSequence(tuple(b))


def _tail_of_generator(degree: int, i: int, n: int) -> Dict[Monomial, int]:
    """h_degree(x1..xi) minus its leading term x_i^degree."""
    h = complete_symmetric(degree, range(1, i + 1), n).terms
    lead = [0] * n
    lead[i - 1] = degree
    del h[tuple(lead)]
    return h


class QuotientRing:
    """R/I_b with a memoised monomial normal form."""

    def __init__(self, b):
        self.b = _as_bseq(b)
        self.n = len(self.b)
        self.generators: List[IntPolynomial] = [
            complete_symmetric(bi, range(1, i + 1), self.n)
            for i, bi in enumerate(self.b, start=1)
        ]
        self._tails = [
            _tail_of_generator(bi, i, self.n) for i, bi in enumerate(self.b, start=1)
        ]
        self._memo: Dict[Monomial, Dict[Monomial, int]] = {}
        self._basis: List[Monomial] | None = None

    @property
    def dimension(self) -> int:
        out = 1
        for v in self.b:
            out *= v
        return out

    @property
    def basis(self) -> List[Monomial]:
        """Normal-form monomials x^j, j_i < b_i, in ascending monomial order."""
        if self._basis is None:
            mons = [tuple(j) for j in product(*(range(v) for v in self.b))]
            self._basis = sorted(mons, key=monomial_key)
        return list(self._basis)

    def is_reduced(self, mono: Sequence[int]) -> bool:
        return all(e < v for e, v in zip(mono, self.b))

    def reduce_monomial(self, mono: Monomial) -> Dict[Monomial, int]:
        """Normal form of a single monomial as a term dict."""
        hit = self._memo.get(mono)
        if hit is not None:
            return hit
        # pick the largest variable index exceeding its bound; the rewrite
        # only lowers that variable and raises smaller ones
        offending = [i for i in range(self.n) if mono[i] >= self.b[i]]
        if not offending:
            result = {mono: 1}
        else:
            i = offending[-1]
            rest = list(mono)
            rest[i] -= self.b[i]
            result: Dict[Monomial, int] = {}
            for tail, _ in self._tails[i].items():
                shifted = tuple(a + c for a, c in zip(rest, tail))
                for m, c in self.reduce_monomial(shifted).items():
                    result[m] = result.get(m, 0) - c
            result = {m: c for m, c in result.items() if c}
        self._memo[mono] = result
        return result

    def normal_form(self, p: IntPolynomial) -> IntPolynomial:
        if p.n != self.n:
            raise ValueError(f"polynomial has {p.n} variables, ring has {self.n}")
        out: Dict[Monomial, int] = {}
        for mono, coeff in p.terms.items():
            for m, c in self.reduce_monomial(mono).items():
                out[m] = out.get(m, 0) + coeff * c
        return IntPolynomial(self.n, out)

    def graded_dimension(self) -> LaurentV:
        return LaurentV.from_exponents(monomial_degree(m) for m in self.basis)

    def __repr__(self) -> str:
        return f"QuotientRing(b={self.b.values})"


_RING_CACHE: Dict[Tuple[int, ...], QuotientRing] = {}


def make_quotient(b) -> QuotientRing:
    """Shared quotient ring for a b-sequence (memo tables are reused)."""
    key = _as_bseq(b).values
    ring = _RING_CACHE.get(key)
    if ring is None:
        ring = QuotientRing(key)
        _RING_CACHE[key] = ring
    return ring


def normal_form(p: IntPolynomial, ring: QuotientRing) -> IntPolynomial:
    return ring.normal_form(p)


@dataclass(frozen=True)
class HomBasis:
    """Monomial basis of Hom_R(R_b, R_b'): morphisms 1 -> x^j, c_i <= j_i < b'_i."""

    source: BSequence
    target: BSequence
    lower: Tuple[int, ...] = field(default=())
    monomials: Tuple[Monomial, ...] = field(default=())

    def __contains__(self, mono) -> bool:
        mono = tuple(mono)
        return len(mono) == len(self.target) and all(
            lo <= e < hi for e, lo, hi in zip(mono, self.lower, self.target)
        )

    def __len__(self) -> int:
        return len(self.monomials)

    def graded_dimension(self) -> LaurentV:
        return LaurentV.from_exponents(monomial_degree(m) for m in self.monomials)


def hom_lower_bounds(b, b_prime) -> Tuple[int, ...]:
    """c_i = max(b'_i - b_i, 0)."""
    return tuple(max(bp - bb, 0) for bb, bp in zip(_as_bseq(b), _as_bseq(b_prime)))


def hom_basis(b, b_prime) -> HomBasis:
    b, b_prime = _as_bseq(b), _as_bseq(b_prime)
    if len(b) != len(b_prime):
        raise ValueError("b-sequences of different length")
    lower = hom_lower_bounds(b, b_prime)
    mons = [tuple(j) for j in product(*(range(c, hi) for c, hi in zip(lower, b_prime)))]
    mons.sort(key=monomial_key)
    return HomBasis(b, b_prime, lower, tuple(mons))


def theta_dual(mono: Sequence[int], b, b_prime) -> Monomial:
    """Dual of the morphism R_b -> R_b', 1 -> x^j: the morphism R_b' -> R_b,
    1 -> x^{b - b'} x^j."""
    b, b_prime = _as_bseq(b), _as_bseq(b_prime)
    if tuple(mono) not in hom_basis(b, b_prime):
        raise ValueError(f"{tuple(mono)} is not in the Hom basis for {b.values} -> {b_prime.values}")
    out = tuple(j + bb - bp for j, bb, bp in zip(mono, b, b_prime))
    if out not in hom_basis(b_prime, b):
        raise ArithmeticError("dual monomial left the Hom basis; duality identity violated")
    return out
