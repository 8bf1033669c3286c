"""Hecke algebra of S_n in Soergel's normalisation.

    H_w H_i = H_{w s_i}                          if l(w s_i) > l(w)
    H_w H_i = H_{w s_i} + (v^{-1} - v) H_w       otherwise

The canonical basis is built by the usual induction C_{w'} C_i = C_w + ...,
and a closed formula for C_{w_k z} is provided as an independent check.
"""

from __future__ import annotations

from itertools import product
from math import factorial
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .polyring import LaurentV
from .weights import (
    Perm,
    Weight,
    all_permutations,
    b_sequence,
    coset_permutation,
    compose,
    embed,
    from_word,
    identity,
    length,
    lex_smallest_reduced_word,
    longest_element,
    times_simple,
    vee_distances,
)

_V_INV_MINUS_V = LaurentV({-1: 1, 1: -1})
_V_MINUS_V_INV = LaurentV({1: 1, -1: -1})
_V = LaurentV({1: 1})


class HeckeElement:
    """Finite combination sum c_w H_w with Laurent coefficients."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Perm, LaurentV] | None = None):
        self.n = n
        self._terms = {tuple(w): c for w, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def standard(cls, w: Sequence[int]) -> "HeckeElement":
        return cls(len(w), {tuple(w): LaurentV({0: 1})})

    @classmethod
    def unit(cls, n: int) -> "HeckeElement":
        return cls.standard(identity(n))

    @property
    def terms(self) -> Dict[Perm, LaurentV]:
        return dict(self._terms)

    def coefficient(self, w: Sequence[int]) -> LaurentV:
        return self._terms.get(tuple(w), LaurentV())

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElement(self.n, out)

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + other.scale(LaurentV({0: -1}))

    def scale(self, c: LaurentV) -> "HeckeElement":
        return HeckeElement(self.n, {w: a * c for w, a in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __repr__(self) -> str:
        body = " + ".join(f"({c})H{w}" for w, c in sorted(self._terms.items()))
        return f"HeckeElement({body or '0'})"

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        """General product, expanding the right factor into generators."""
        out = HeckeElement(self.n)
        for w, c in other._terms.items():
            piece = self
            for i in lex_smallest_reduced_word(w):
                piece = mult_right_Hi(piece, i)
            out = out + piece.scale(c)
        return out


def mult_right_Hi(x: HeckeElement, i: int) -> HeckeElement:
    """x * H_i."""
    out: Dict[Perm, LaurentV] = {}
    for w, c in x._terms.items():
        ws = times_simple(w, i)
        out[ws] = out[ws] + c if ws in out else c
        if w[i - 1] > w[i]:
            extra = c * _V_INV_MINUS_V
            out[w] = out[w] + extra if w in out else extra
    return HeckeElement(x.n, out)


def mult_right_Ci(x: HeckeElement, i: int) -> HeckeElement:
    """x * (H_i + v)."""
    return mult_right_Hi(x, i) + x.scale(_V)


class HeckeAlgebra:
    """Memo tables for one value of n (bar images and canonical basis)."""

    def __init__(self, n: int):
        self.n = n
        self._bar: Dict[Perm, HeckeElement] = {identity(n): HeckeElement.unit(n)}
        self._canonical: Dict[Perm, HeckeElement] = {identity(n): HeckeElement.unit(n)}

    def bar_standard(self, w: Perm) -> HeckeElement:
        """bar(H_w) = H_{w^{-1}}^{-1}, via bar(H_i) = H_i + v - v^{-1}."""
        w = tuple(w)
        hit = self._bar.get(w)
        if hit is not None:
            return hit
        word = lex_smallest_reduced_word(w)
        i = word[-1]
        prev = self.bar_standard(times_simple(w, i))
        result = mult_right_Hi(prev, i) + prev.scale(_V_MINUS_V_INV)
        self._bar[w] = result
        return result

    def bar(self, x: HeckeElement) -> HeckeElement:
        out = HeckeElement(self.n)
        for w, c in x._terms.items():
            out = out + self.bar_standard(w).scale(c.bar())
        return out

    def canonical_basis(self, w: Sequence[int]) -> HeckeElement:
        w = tuple(w)
        hit = self._canonical.get(w)
        if hit is not None:
            return hit
        word = lex_smallest_reduced_word(w)
        i = word[-1]
        shorter = times_simple(w, i)
        current = mult_right_Ci(self.canonical_basis(shorter), i)
        # strip degree-zero coefficients below w, longest first
        while True:
            bad = [
                u for u, c in current._terms.items()
                if u != w and c.coefficient(0) != 0
            ]
            if not bad:
                break
            u = max(bad, key=lambda p: (length(p), p))
            mu = current._terms[u].coefficient(0)
            current = current - self.canonical_basis(u).scale(LaurentV({0: mu}))
        self._canonical[w] = current
        return current

    def kl_polynomial(self, y: Sequence[int], w: Sequence[int]) -> LaurentV:
        """Coefficient of H_y in C_w (an element of v Z[v] for y < w)."""
        return self.canonical_basis(w).coefficient(y)


_ALGEBRAS: Dict[int, HeckeAlgebra] = {}


def hecke_algebra(n: int) -> HeckeAlgebra:
    alg = _ALGEBRAS.get(n)
    if alg is None:
        alg = HeckeAlgebra(n)
        _ALGEBRAS[n] = alg
    return alg


def bar(x: HeckeElement) -> HeckeElement:
    return hecke_algebra(x.n).bar(x)


def canonical_basis(w: Sequence[int]) -> HeckeElement:
    return hecke_algebra(len(w)).canonical_basis(w)


def standard_form(x: HeckeElement, y: HeckeElement) -> LaurentV:
    """Symmetric form in which the standard basis is orthonormal."""
    out = LaurentV()
    for w, c in x._terms.items():
        if w in y._terms:
            out = out + c * y._terms[w]
    return out


# the parabolic part ----------------------------------------------------------

def longest_parabolic(n: int, k: int) -> Perm:
    """w_k: the longest element of S_k inside S_n."""
    return embed(longest_element(k), n)


def wk_z(z: Weight) -> Perm:
    return compose(longest_parabolic(z.n, z.k), coset_permutation(z))


def t_vee(top: int, steps: int) -> List[int]:
    """t^vee_{top,l} = s_{top-1} s_{top-2} ... s_{top-l}."""
    return list(range(top - 1, top - 1 - steps, -1))


def explicit_C(n: int, k: int, z: Weight) -> HeckeElement:
    """Closed formula for C_{w_k z}:

    sum over w' in S_k and 0 <= i_j <= z^vee_j of
    v^{l(w_k z) - l(w') - sum i_j} H_{w' t^vee_{k+1,i_{k+1}} ... t^vee_{n,i_n}}.
    """
    if z.n != n or z.k != k:
        raise ValueError("weight not in block (n, k)")
    dist = vee_distances(z)
    top = length(wk_z(z))
    terms: Dict[Perm, LaurentV] = {}
    tails = []
    for idx in product(*(range(d + 1) for d in dist)):
        word: List[int] = []
        for j, i in enumerate(idx, start=k + 1):
            word.extend(t_vee(j, i))
        tails.append((sum(idx), from_word(word, n)))
    for wp in all_permutations(k):
        wp_n = embed(wp, n)
        lw = length(wp)
        for shift, tail in tails:
            key = compose(wp_n, tail)
            if key in terms:
                raise ArithmeticError("closed formula produced a repeated standard element")
            terms[key] = LaurentV({top - lw - shift: 1})
    return HeckeElement(n, terms)


def graded_dim_soergel(n: int, k: int, z: Weight) -> LaurentV:
    """v^{-l(w_k z)} sum_{w'} P_{w', w_k z}(v^2), read off the canonical basis."""
    w = wk_z(z)
    cw = canonical_basis(w)
    total = LaurentV()
    for c in cw.terms.values():
        total = total + c.substitute_square()
    return total.shift(-length(w))


def cor34_count(n: int, k: int, z: Weight, j: int) -> int:
    """k! prod (z^vee_i + 1), with the factor at j+1 replaced by z^vee_{j+1} + 2.

    ``j`` indexes the vee distances as k+1..n; it needs z^vee_j = z^vee_{j+1}.
    """
    dist = vee_distances(z)
    if not k + 1 <= j < n:
        raise ValueError(f"index {j} outside {k + 1}..{n - 1}")
    a, b = dist[j - k - 1], dist[j - k]
    if a != b:
        raise ValueError(f"need z^vee_{j} = z^vee_{j + 1}, got {a} and {b}")
    out = factorial(k)
    for i, d in enumerate(dist, start=k + 1):
        out *= d + 2 if i == j + 1 else d + 1
    return out


def neighbour_a_sequence(z: Weight, j: int) -> Tuple[int, ...]:
    """b-sequence of z with the entry at l = j - z^vee_j raised by one.

    The quotient by these generators has the dimension of C_{s_j w_k z}.
    """
    b = list(b_sequence(z))
    dist = vee_distances(z)
    ell = j - dist[j - z.k - 1]
    b[ell - 1] += 1
    return tuple(b)


def neighbour_permutation(z: Weight, j: int) -> Perm:
    """s_j w_k z as a permutation."""
    n = z.n
    s = tuple(range(1, n + 1))
    s = times_simple(s, j)
    return compose(s, wk_z(z))


def kl_table(n: int, perms: Iterable[Perm] | None = None) -> List[Tuple[Perm, Perm, LaurentV]]:
    """Rows (y, w, coefficient of H_y in C_w) for the requested w (default: all of S_n)."""
    alg = hecke_algebra(n)
    rows = []
    for w in perms if perms is not None else all_permutations(n):
        for y, c in sorted(alg.canonical_basis(w).terms.items()):
            rows.append((y, tuple(w), c))
    return rows


