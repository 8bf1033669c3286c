"""Weights: sequences of wedges and vees, and the permutations they encode.

A weight of length n with k wedges stands for a shortest coset
representative z.  Positions are 1-based.  The symmetric group acts on
sequences from the right: s_i swaps the symbols in positions i and i+1,
and a word s_{i1} s_{i2} ... is applied left to right.

Text form uses ``^`` for a wedge and ``v`` for a vee, e.g. ``^^v^vv^v``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from math import comb
from typing import List, Sequence, Tuple

UP = "^"
DOWN = "v"


# permutations ---------------------------------------------------------------

Perm = Tuple[int, ...]


def identity(m: int) -> Perm:
    return tuple(range(1, m + 1))


def compose(u: Sequence[int], w: Sequence[int]) -> Perm:
    """(u w)(j) = u(w(j)), both in one-line notation."""
    return tuple(u[w[j] - 1] for j in range(len(w)))


def inverse(w: Sequence[int]) -> Perm:
    out = [0] * len(w)
    for j, wj in enumerate(w, start=1):
        out[wj - 1] = j
    return tuple(out)


def simple_reflection(i: int, m: int) -> Perm:
    w = list(range(1, m + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def times_simple(w: Sequence[int], i: int) -> Perm:
    """w s_i: swap the entries in positions i and i+1."""
    out = list(w)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def from_word(word: Sequence[int], m: int) -> Perm:
    """The product s_{i1} s_{i2} ... as a permutation of size m."""
    w = identity(m)
    for i in word:
        w = times_simple(w, i)
    return w


def length(w: Sequence[int]) -> int:
    """Number of inversions."""
    return sum(1 for a in range(len(w)) for b in range(a + 1, len(w)) if w[a] > w[b])


def lehmer_code(w: Sequence[int]) -> Tuple[int, ...]:
    """c_i = #{j > i : w(j) < w(i)}."""
    m = len(w)
    return tuple(sum(1 for j in range(i + 1, m) if w[j] < w[i]) for i in range(m))


def lex_smallest_reduced_word(w: Sequence[int]) -> List[int]:
    """Lexicographically smallest reduced word, built by left descents."""
    word: List[int] = []
    cur = tuple(w)
    m = len(cur)
    while length(cur) > 0:
        inv = inverse(cur)
        for i in range(1, m):
            # i is a left descent of cur iff cur^{-1}(i) > cur^{-1}(i+1)
            if inv[i - 1] > inv[i]:
                word.append(i)
                cur = compose(simple_reflection(i, m), cur)
                break
    return word


def longest_element(m: int) -> Perm:
    return tuple(range(m, 0, -1))


def all_permutations(m: int) -> List[Perm]:
    """S_m in lexicographic one-line order."""
    return [tuple(p) for p in permutations(range(1, m + 1))]


def embed(w: Sequence[int], n: int) -> Perm:
    """View w in S_k as an element of S_n fixing k+1..n."""
    return tuple(w) + tuple(range(len(w) + 1, n + 1))


def bruhat_leq_perm(u: Sequence[int], w: Sequence[int]) -> bool:
    """Tableau criterion for the Bruhat order on S_m."""
    m = len(u)
    for i in range(1, m):
        a = sorted(u[:i])
        b = sorted(w[:i])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def format_perm(w: Sequence[int]) -> str:
    return ",".join(str(x) for x in w)


def parse_perm(text: str) -> Perm:
    text = text.strip()
    if not text:
        return ()
    w = tuple(int(t) for t in text.split(","))
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{text!r} is not a permutation in one-line notation")
    return w


# weights --------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class Weight:
    """A wedge/vee sequence, stored as its text form."""

    symbols: str

    def __post_init__(self):
        if any(c not in (UP, DOWN) for c in self.symbols):
            raise ValueError(f"weights use only '^' and 'v': {self.symbols!r}")

    @classmethod
    def parse(cls, text: str) -> "Weight":
        return cls(text.strip())

    @classmethod
    def from_vees(cls, n: int, vees: Sequence[int]) -> "Weight":
        s = [UP] * n
        for p in vees:
            s[p - 1] = DOWN
        return cls("".join(s))

    @classmethod
    def identity(cls, n: int, k: int) -> "Weight":
        return cls(UP * k + DOWN * (n - k))

    @property
    def n(self) -> int:
        return len(self.symbols)

    @property
    def k(self) -> int:
        return self.symbols.count(UP)

    @property
    def wedges(self) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.symbols, start=1) if c == UP)

    @property
    def vees(self) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.symbols, start=1) if c == DOWN)

    def vee(self, j: int) -> int:
        """Position of the j-th vee, with the sentinel n+1 for j = n-k+1."""
        vs = self.vees
        if j == len(vs) + 1:
            return self.n + 1
        return vs[j - 1]

    def act(self, i: int) -> "Weight":
        """Right action of s_i."""
        s = list(self.symbols)
        s[i - 1], s[i] = s[i], s[i - 1]
        return Weight("".join(s))

    def act_word(self, word: Sequence[int]) -> "Weight":
        w = self
        for i in word:
            w = w.act(i)
        return w

    def __str__(self) -> str:
        return self.symbols

    def __repr__(self) -> str:
        return f"Weight({self.symbols!r})"


def block(n: int, k: int) -> List[Weight]:
    """All weights with k wedges, ordered by ascending vee-position tuples."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return [Weight.from_vees(n, vs) for vs in combinations(range(1, n + 1), n - k)]


def block_size(n: int, k: int) -> int:
    return comb(n, k)


@dataclass(frozen=True)
class Encodings:
    wedge_pos: Tuple[int, ...]
    vee_pos: Tuple[int, ...]
    wedge_dist: Tuple[int, ...]
    vee_dist: Tuple[int, ...]
    b_seq: Tuple[int, ...]


def wedge_distances(w: Weight) -> Tuple[int, ...]:
    """z^wedge_i = (position of the i-th wedge) - i."""
    return tuple(p - i for i, p in enumerate(w.wedges, start=1))


def vee_distances(w: Weight) -> Tuple[int, ...]:
    """z^vee_i = i - (position of the (i-k)-th vee), for i = k+1..n."""
    k = w.k
    return tuple(k + j - p for j, p in enumerate(w.vees, start=1))


def b_sequence(w: Weight) -> Tuple[int, ...]:
    """b_i = 1 + number of wedges strictly to the right of position i."""
    out = []
    right = 0
    for c in reversed(w.symbols):
        out.append(right + 1)
        if c == UP:
            right += 1
    return tuple(reversed(out))


def encodings(w: Weight) -> Encodings:
    return Encodings(w.wedges, w.vees, wedge_distances(w), vee_distances(w), b_sequence(w))


def weight_from_wedge_distances(n: int, dist: Sequence[int]) -> Weight:
    s = [DOWN] * n
    for i, d in enumerate(dist, start=1):
        s[i + d - 1] = UP
    return Weight("".join(s))


def weight_from_vee_distances(n: int, k: int, dist: Sequence[int]) -> Weight:
    return Weight.from_vees(n, [k + j - d for j, d in enumerate(dist, start=1)])


def weight_from_b_sequence(b: Sequence[int], k: int) -> Weight:
    """Position i+1 carries a wedge iff b_i > b_{i+1}; position 1 iff fewer than k wedges follow it.

    b alone does not see the first symbol, hence the explicit k.
    """
    n = len(b)
    s = [UP if b[0] - 1 < k else DOWN]
    for i in range(n - 1):
        s.append(UP if b[i] > b[i + 1] else DOWN)
    w = Weight("".join(s))
    if w.k != k or b_sequence(w) != tuple(b):
        raise ValueError(f"{tuple(b)} is not the b-sequence of a weight with {k} wedges")
    return w


def length_of(w: Weight) -> int:
    """Length of the coset representative: the number of (vee, wedge) pairs
    with the vee to the left."""
    return sum(vee_distances(w))


def wedge_word(w: Weight) -> List[int]:
    """t^wedge_{k, z_k} ... t^wedge_{1, z_1}, with t^wedge_{i,l} = s_i s_{i+1} ... s_{i+l-1}."""
    dist = wedge_distances(w)
    word: List[int] = []
    for i in range(len(dist), 0, -1):
        word.extend(range(i, i + dist[i - 1]))
    return word


def vee_word(w: Weight) -> List[int]:
    """t^vee_{k+1, .} ... t^vee_{n, .}, with t^vee_{k+i,l} = s_{k+i-1} ... s_{k+i-l}."""
    k = w.k
    word: List[int] = []
    for j, d in enumerate(vee_distances(w), start=1):
        top = k + j - 1
        word.extend(range(top, top - d, -1))
    return word


@dataclass(frozen=True)
class ReducedWords:
    wedge_word: Tuple[int, ...]
    vee_word: Tuple[int, ...]


def reduced_words(w: Weight) -> ReducedWords:
    return ReducedWords(tuple(wedge_word(w)), tuple(vee_word(w)))


def coset_permutation(w: Weight) -> Perm:
    """The shortest z with e.z = w: wedges go to 1..k and vees to k+1..n in order."""
    k = w.k
    z = [0] * w.n
    for i, p in enumerate(w.wedges, start=1):
        z[p - 1] = i
    for j, p in enumerate(w.vees, start=1):
        z[p - 1] = k + j
    return tuple(z)


def weight_of_permutation(z: Sequence[int], k: int) -> Weight:
    """e.z where e = wedge^k vee^(n-k); position j gets the symbol at z(j)."""
    return Weight("".join(UP if zj <= k else DOWN for zj in z))


def bruhat_leq(w1: Weight, w2: Weight) -> bool:
    """w1 <= w2 iff every vee of w1 is weakly left of the matching vee of w2."""
    if w1.n != w2.n or w1.k != w2.k:
        raise ValueError("weights lie in different blocks")
    return all(a <= b for a, b in zip(w1.vees, w2.vees))


def defect(w: Weight) -> int:
    """Number of wedges with some vee to their left."""
    first_vee = w.symbols.find(DOWN)
    if first_vee < 0:
        return 0
    return w.symbols[first_vee:].count(UP)


def max_defect(n: int, k: int) -> int:
    return k if k < n else 0


def is_max_defect(w: Weight) -> bool:
    return defect(w) == max_defect(w.n, w.k)


def tilde(w: Weight) -> Weight:
    """Swap the first vee and the first wedge unless w already has maximal defect."""
    if is_max_defect(w):
        return w
    s = list(w.symbols)
    i, j = w.symbols.index(DOWN), w.symbols.index(UP)
    s[i], s[j] = s[j], s[i]
    return Weight("".join(s))


@dataclass(frozen=True, order=True)
class EnhancedWeight:
    weight: Weight
    sigma: Perm

    def __post_init__(self):
        if len(self.sigma) != self.weight.k:
            raise ValueError("sigma must lie in S_k")
