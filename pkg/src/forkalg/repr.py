"""Graded modules over A_{n,k}.

Every module here comes with an explicit basis whose vectors are weight
vectors (e_lam m = m for exactly one lam), so Grothendieck classes can be
read off the labels: [M] = sum_lam grdim(e_lam M) [L(lam)].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, List, Optional, Sequence, Tuple

from .algebra import DiagramAlgebra, Element
from .diagrams import OrientedForkDiagram, contained_in, fork_degree
from .linalg import rank
from .polyring import LaurentV, quantum_factorial
from .weights import (
    Perm,
    Weight,
    all_permutations,
    bruhat_leq,
    is_max_defect,
    length,
    tilde,
)

Vector = Dict[int, int]


class GradedModule:
    """A finite-dimensional graded module given by labels, degrees and an action rule.

    ``rule(x, col)`` returns the image of basis vector ``col`` under the
    algebra basis element ``x`` as a sparse vector over label indices.
    """

    def __init__(
        self,
        alg: DiagramAlgebra,
        name: str,
        labels: Sequence[Hashable],
        degrees: Sequence[int],
        weights: Sequence[Weight],
        rule: Callable[[int, int], Vector],
    ):
        self.alg = alg
        self.name = name
        self.labels = list(labels)
        self.degrees = list(degrees)
        self.weights = list(weights)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        if len(self.index) != len(self.labels):
            raise ValueError(f"{name}: repeated basis labels")
        self._rule = rule
        self._memo: Dict[Tuple[int, int], Vector] = {}

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self) -> str:
        return f"<{self.name}, dim {len(self)}>"

    def act(self, x: int, col: int) -> Vector:
        key = (x, col)
        hit = self._memo.get(key)
        if hit is None:
            hit = {r: c for r, c in self._rule(x, col).items() if c}
            self._memo[key] = hit
        return hit

    def act_vector(self, x: int, vec: Vector) -> Vector:
        out: Vector = {}
        for col, c in vec.items():
            for r, a in self.act(x, col).items():
                v = out.get(r, 0) + a * c
                if v:
                    out[r] = v
                else:
                    out.pop(r, None)
        return out

    def act_element(self, x: Element, vec: Vector) -> Vector:
        out: Vector = {}
        for i, a in x.items():
            for r, c in self.act_vector(i, vec).items():
                v = out.get(r, 0) + a * c
                if v:
                    out[r] = v
                else:
                    out.pop(r, None)
        return out

    def graded_dimension(self) -> LaurentV:
        return LaurentV.from_exponents(self.degrees)

    def grothendieck_class(self) -> Dict[Weight, LaurentV]:
        out: Dict[Weight, LaurentV] = {}
        for w, d in zip(self.weights, self.degrees):
            out[w] = out.get(w, LaurentV()) + LaurentV.monomial(d)
        return {w: c for w, c in out.items() if not c.is_zero()}

    def weight_space(self, lam: Weight) -> List[int]:
        return [i for i, w in enumerate(self.weights) if w == lam]

    # axioms -----------------------------------------------------------------
    def check_module_axioms(self, columns: Optional[Sequence[int]] = None) -> List[str]:
        """x(ym) = (xy)m, idempotents act by the recorded weights, grading respected."""
        alg = self.alg
        problems: List[str] = []
        cols = range(len(self)) if columns is None else columns
        for m in cols:
            wm = self.weights[m]
            for lam, e in alg.idempotents.items():
                expect = {m: 1} if lam == wm else {}
                if self.act(e, m) != expect:
                    problems.append(f"{self.name}: e_{lam} on vector {m}")
            for x in range(len(alg)):
                image = self.act(x, m)
                if alg.basis[x].upper != wm and image:
                    problems.append(f"{self.name}: basis {x} should kill vector {m}")
                for r in image:
                    if self.degrees[r] != self.degrees[m] + alg.degrees[x]:
                        problems.append(f"{self.name}: degree of {x} on {m}")
            for y in alg.by_upper[wm]:
                ym = self.act(y, m)
                for x in alg.by_upper[alg.basis[y].lower]:
                    lhs = self.act_vector(x, ym)
                    rhs = self.act_element(alg.multiply_basis(x, y), {m: 1})
                    if lhs != rhs:
                        problems.append(f"{self.name}: x={x}, y={y}, m={m}")
        return problems

    def positive_part_kills(self, col: int) -> bool:
        alg = self.alg
        return all(
            not self.act(x, col)
            for x in alg.by_upper[self.weights[col]]
            if alg.degrees[x] > 0
        )

    def socle_dimensions(self) -> Dict[int, int]:
        """dim of {m in M_t : A_{>0} m = 0} per degree t.

        The kernel of the stacked action matrix K equals the kernel of the
        Gram matrix K^T K over Q, which is small and square.
        """
        alg = self.alg
        out = {}
        for t in sorted(set(self.degrees)):
            cols = [i for i, d in enumerate(self.degrees) if d == t]
            pos = {c: p for p, c in enumerate(cols)}
            gram = [[0] * len(cols) for _ in cols]
            for x in range(len(alg)):
                if alg.degrees[x] == 0:
                    continue
                rows: Dict[int, List[Tuple[int, int]]] = {}
                for c in cols:
                    for r, a in self.act(x, c).items():
                        rows.setdefault(r, []).append((pos[c], a))
                for entries in rows.values():
                    for p, a in entries:
                        for q, b in entries:
                            gram[p][q] += a * b
            dim = len(cols) - rank(gram, len(cols))
            if dim:
                out[t] = dim
        return out


# the modules ----------------------------------------------------------------

def simple(alg: DiagramAlgebra, lam: Weight) -> GradedModule:
    """L(lam): one vector in degree 0, fixed by e_lam and killed by every other basis vector."""
    e = alg.idempotents[lam]
    return GradedModule(alg, f"L({lam})", [lam], [0], [lam], lambda x, col: {0: 1} if x == e else {})


def semisimple(alg: DiagramAlgebra, weights: Sequence[Weight], shift: int = 0) -> GradedModule:
    """Direct sum of the L(lam)<shift>."""
    idem = {alg.idempotents[w]: i for i, w in enumerate(weights)}

    def rule(x, col):
        return {col: 1} if idem.get(x) == col else {}

    return GradedModule(alg, f"sum L<{shift}>", list(weights), [shift] * len(weights), list(weights), rule)


def projective(alg: DiagramAlgebra, lam: Weight) -> GradedModule:
    """P(lam) = A e_lam with basis the diagrams whose upper weight is lam."""
    labels = list(alg.by_upper[lam])
    local = {g: i for i, g in enumerate(labels)}

    def rule(x, col):
        return {local[g]: c for g, c in alg.multiply_basis(x, labels[col]).items()}

    return GradedModule(
        alg, f"P({lam})", labels,
        [alg.degrees[g] for g in labels],
        [alg.basis[g].lower for g in labels],
        rule,
    )


def lower_weights(alg: DiagramAlgebra, mu: Weight) -> List[Weight]:
    """All c with underline(c) mu oriented, in block order."""
    return [c for c in alg.weights if contained_in(c, mu)]


def standard(alg: DiagramAlgebra, mu: Weight, probe: Optional[Weight] = None) -> GradedModule:
    """Delta(mu) with basis (c mu^tau| and the t-scalars read from products in A.

    The scalars are the coefficients of (a mu^tau' d) in (a lam^sigma b)(c mu^tau d),
    restricted to tau' = tau or l(tau') > l(tau).  ``probe`` is the weight d
    (default mu itself).
    """
    d = mu if probe is None else probe
    if not contained_in(d, mu):
        raise ValueError(f"probe {d} does not orient {mu}")
    perms = all_permutations(alg.k)
    labels = [(c, tau) for c in lower_weights(alg, mu) for tau in perms]
    index = {lab: i for i, lab in enumerate(labels)}

    def rule(x, col):
        c, tau = labels[col]
        xd = alg.basis[x]
        if xd.upper != c or not contained_in(xd.lower, mu):
            return {}
        y = alg.index[OrientedForkDiagram(c, mu, tau, d)]
        out = {}
        lt = length(tau)
        for t, coeff in alg.multiply_basis(x, y).items():
            td = alg.basis[t]
            if td.eta != mu:
                continue
            if td.upper != d or td.lower != xd.lower:
                raise ArithmeticError("product left the expected weight spaces")
            if td.sigma != tau and length(td.sigma) <= lt:
                raise ArithmeticError(
                    f"product has a (a mu^tau' d) term with l(tau') <= l(tau) (x={x}, tau={tau})"
                )
            out[index[(xd.lower, td.sigma)]] = coeff
        return out

    return GradedModule(
        alg, f"Delta({mu})", labels,
        [fork_degree(c, mu) + 2 * length(tau) for c, tau in labels],
        [c for c, _ in labels],
        rule,
    )


def _proper_rule(alg: DiagramAlgebra, mu: Weight, labels, index, key):
    """(a lam^sigma b)(c mu| = (a mu| if b = c = lam, sigma = e and a mu oriented."""
    ident = tuple(range(1, alg.k + 1))

    def rule(x, col):
        c = labels[col] if key is None else labels[col][0]
        xd = alg.basis[x]
        if xd.upper == c and xd.eta == c and xd.sigma == ident and contained_in(xd.lower, mu):
            target = xd.lower if key is None else (xd.lower, key)
            return {index[target]: 1}
        return {}

    return rule


def proper_standard(alg: DiagramAlgebra, mu: Weight) -> GradedModule:
    labels = lower_weights(alg, mu)
    index = {c: i for i, c in enumerate(labels)}
    return GradedModule(
        alg, f"ProperDelta({mu})", labels,
        [fork_degree(c, mu) for c in labels], labels,
        _proper_rule(alg, mu, labels, index, None),
    )


def cell(alg: DiagramAlgebra, mu: Weight, tau: Perm) -> GradedModule:
    """V(mu^tau): the proper standard action, degrees raised by 2 l(tau)."""
    tau = tuple(tau)
    labels = [(c, tau) for c in lower_weights(alg, mu)]
    index = {lab: i for i, lab in enumerate(labels)}
    return GradedModule(
        alg, f"V({mu}^{tau})", labels,
        [fork_degree(c, mu) + 2 * length(tau) for c, _ in labels],
        [c for c, _ in labels],
        _proper_rule(alg, mu, labels, index, tau),
    )


def same_action(m1: GradedModule, m2: GradedModule, mapping: Dict[int, int], shift: int = 0) -> List[str]:
    """Check that ``mapping`` (basis of m1 -> basis of m2) intertwines the actions
    and raises degrees by ``shift``."""
    problems = []
    for a, b in mapping.items():
        if m2.degrees[b] != m1.degrees[a] + shift:
            problems.append(f"degree of {m1.labels[a]}")
    for x in range(len(m1.alg)):
        for a, b in mapping.items():
            lhs = {mapping[r]: c for r, c in m1.act(x, a).items()}
            if lhs != m2.act(x, b):
                problems.append(f"basis element {x} on {m1.labels[a]}")
    return problems


# filtrations -----------------------------------------------------------------

@dataclass
class Layer:
    """One subquotient M(i)/M(i-1) together with the module it should match."""

    label: Hashable
    vectors: List[int]
    target: GradedModule
    to_module: Dict[int, int]
    shift: int
    problems: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems


@dataclass
class Filtration:
    module: GradedModule
    layers: List[Layer]
    verified: bool

    @property
    def ok(self) -> bool:
        return all(layer.ok for layer in self.layers)

    def covers_module(self) -> bool:
        seen = sorted(v for layer in self.layers for v in layer.vectors)
        return seen == list(range(len(self.module)))


def _verify_layers(module: GradedModule, layers: List[Layer]) -> None:
    """Each M(i) is a submodule and M(i)/M(i-1) matches its target through the basis map."""
    alg = module.alg
    below: set = set()
    for layer in layers:
        inside = set(layer.vectors)
        allowed = below | inside
        from_module = {v: t for t, v in layer.to_module.items()}
        for t, v in layer.to_module.items():
            if module.degrees[v] != layer.target.degrees[t] + layer.shift:
                layer.problems.append(f"degree of {module.labels[v]}")
        for v in layer.vectors:
            t = from_module[v]
            for x in range(len(alg)):
                image = module.act(x, v)
                if any(r not in allowed for r in image):
                    layer.problems.append(f"basis element {x} leaves the submodule at {module.labels[v]}")
                top = {from_module[r]: c for r, c in image.items() if r in inside}
                if top != layer.target.act(x, t):
                    layer.problems.append(f"basis element {x} on {module.labels[v]}")
        below = allowed


def anti_bruhat_order(weights: Sequence[Weight]) -> List[Weight]:
    """A listing in which larger weights come first (vee positions summed, descending)."""
    return sorted(weights, key=lambda w: (-sum(w.vees), w))


def standard_filtration(alg: DiagramAlgebra, lam: Weight, verify: bool = True) -> Filtration:
    """M(i) spanned by the (c mu_j^tau overline lam), j <= i; M(i)/M(i-1) = Delta(mu_i)<deg mu_i lam>."""
    P = projective(alg, lam)
    mus = anti_bruhat_order([mu for mu in alg.weights if contained_in(lam, mu)])
    layers = []
    for mu in mus:
        target = standard(alg, mu)
        to_module = {
            t: P.index[alg.index[OrientedForkDiagram(c, mu, tau, lam)]]
            for t, (c, tau) in enumerate(target.labels)
        }
        vectors = [i for i, g in enumerate(P.labels) if alg.basis[g].eta == mu]
        if sorted(to_module.values()) != sorted(vectors):
            raise ArithmeticError(f"layer {mu} of P({lam}) has the wrong size")
        layers.append(Layer(mu, vectors, target, to_module, fork_degree(lam, mu)))
    if verify:
        _verify_layers(P, layers)
    return Filtration(P, layers, verify)


def proper_filtration(alg: DiagramAlgebra, mu: Weight, verify: bool = True) -> Filtration:
    """N(i) spanned by the (c mu^sigma_j|, j <= i, longest sigma first; N(i)/N(i-1) = ProperDelta(mu)<2 l(sigma_i)>."""
    D = standard(alg, mu)
    target = proper_standard(alg, mu)
    sigmas = sorted(all_permutations(alg.k), key=lambda s: (-length(s), s))
    layers = []
    for s in sigmas:
        to_module = {t: D.index[(c, s)] for t, c in enumerate(target.labels)}
        layers.append(Layer(s, sorted(to_module.values()), target, to_module, 2 * length(s)))
    if verify:
        _verify_layers(D, layers)
    return Filtration(D, layers, verify)


def radical_filtration(alg: DiagramAlgebra, mu: Weight, verify: bool = True) -> Filtration:
    """Q(j) = span of vectors of degree >= j; Q(j)/Q(j+1) = sum of L(lam)<j> over deg(lam mu) = j."""
    D = proper_standard(alg, mu)
    layers = []
    for j in sorted(set(D.degrees), reverse=True):
        vectors = [i for i, d in enumerate(D.degrees) if d == j]
        lams = [D.labels[i] for i in vectors]
        target = semisimple(alg, lams)
        to_module = {t: D.index[lam] for t, lam in enumerate(lams)}
        layers.append(Layer(j, vectors, target, to_module, j))
    if verify:
        _verify_layers(D, layers)
    return Filtration(D, layers, verify)


# Grothendieck group ---------------------------------------------------------

Klass = Dict[Weight, LaurentV]


def klass_add(a: Klass, b: Klass, scale: LaurentV = LaurentV({0: 1})) -> Klass:
    out = dict(a)
    for w, c in b.items():
        out[w] = out.get(w, LaurentV()) + c * scale
    return {w: c for w, c in out.items() if not c.is_zero()}


@dataclass
class DecompositionData:
    weights: List[Weight]
    d: Dict[Tuple[Weight, Weight], LaurentV]
    quantum_factorial: LaurentV

    def entry(self, lam: Weight, mu: Weight) -> LaurentV:
        return self.d.get((lam, mu), LaurentV())

    def is_unitriangular(self) -> bool:
        """d_{lam,lam} = 1 and d_{lam,mu} = 0 unless lam <= mu in the Bruhat order."""
        for lam in self.weights:
            if self.entry(lam, lam) != LaurentV({0: 1}):
                return False
            for mu in self.weights:
                if mu != lam and not self.entry(lam, mu).is_zero() and not bruhat_leq(lam, mu):
                    return False
        return True


def decomposition_matrix(alg: DiagramAlgebra) -> DecompositionData:
    """d_{lam,mu} = v^{deg(underline lam mu)} when lam is inside mu."""
    d = {}
    for lam in alg.weights:
        for mu in alg.weights:
            if contained_in(lam, mu):
                d[(lam, mu)] = LaurentV.monomial(fork_degree(lam, mu))
    return DecompositionData(list(alg.weights), d, quantum_factorial(alg.k))


def grothendieck_identities(alg: DiagramAlgebra) -> List[str]:
    """[P(lam)] = sum d [Delta(mu)], [ProperDelta(mu)] = sum d [L(lam)], [Delta(mu)] = [k]_0! [ProperDelta(mu)]."""
    dd = decomposition_matrix(alg)
    problems = []
    std = {mu: standard(alg, mu).grothendieck_class() for mu in alg.weights}
    prop = {mu: proper_standard(alg, mu).grothendieck_class() for mu in alg.weights}
    for lam in alg.weights:
        rhs: Klass = {}
        for mu in alg.weights:
            if not dd.entry(lam, mu).is_zero():
                rhs = klass_add(rhs, std[mu], dd.entry(lam, mu))
        if projective(alg, lam).grothendieck_class() != rhs:
            problems.append(f"[P({lam})] differs from sum d [Delta]")
    for mu in alg.weights:
        rhs = {lam: dd.entry(lam, mu) for lam in alg.weights if not dd.entry(lam, mu).is_zero()}
        if prop[mu] != rhs:
            problems.append(f"[ProperDelta({mu})] differs from sum d [L]")
        if std[mu] != klass_add({}, prop[mu], dd.quantum_factorial):
            problems.append(f"[Delta({mu})] differs from [k]_0! [ProperDelta({mu})]")
    if not dd.is_unitriangular():
        problems.append("decomposition matrix is not unitriangular")
    return problems


def proper_multiplicities(alg: DiagramAlgebra) -> Dict[Tuple[Weight, Weight], LaurentV]:
    """(Delta(mu) : ProperDelta(nu)) read from the proper filtrations."""
    out: Dict[Tuple[Weight, Weight], LaurentV] = {}
    for mu in alg.weights:
        # every layer of the proper filtration of Delta(mu) is a shift of ProperDelta(mu)
        for layer in proper_filtration(alg, mu, verify=False).layers:
            out[(mu, mu)] = out.get((mu, mu), LaurentV()) + LaurentV.monomial(layer.shift)
    return out


@dataclass
class StratificationReport:
    n: int
    k: int
    verified_actions: bool
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def properly_stratified_check(alg: DiagramAlgebra, verify_actions: bool = True) -> StratificationReport:
    """PS1-PS3 through the three filtrations, the multiplicity matrix, and the Grothendieck identities."""
    rep = StratificationReport(alg.n, alg.k, verify_actions)
    fail = rep.failures.append
    for lam in alg.weights:
        F = standard_filtration(alg, lam, verify_actions)
        if not F.covers_module():
            fail(f"standard filtration of P({lam}) misses vectors")
        for layer in F.layers:
            fail_all(rep, layer, f"P({lam})")
        *kernel, top = F.layers
        if top.label != lam or top.shift != 0:
            fail(f"P({lam}) does not end with Delta({lam})<0>")
        for layer in kernel:
            if not (bruhat_leq(lam, layer.label) and layer.label != lam):
                fail(f"PS1: Delta({layer.label}) in P({lam}) is not above {lam}")
            if layer.shift <= 0:
                fail(f"height rule: shift {layer.shift} for Delta({layer.label}) in P({lam})")

        N = proper_filtration(alg, lam, verify_actions)
        for layer in N.layers:
            fail_all(rep, layer, f"Delta({lam})")
        if N.layers[-1].shift != 0 or len(N.layers) != len(all_permutations(alg.k)):
            fail(f"PS2: Delta({lam}) does not end with ProperDelta({lam})<0>")

        Q = radical_filtration(alg, lam, verify_actions)
        for layer in Q.layers:
            fail_all(rep, layer, f"ProperDelta({lam})")
        *rad, head = Q.layers
        if head.label != 0 or head.target.labels != [lam]:
            fail(f"ProperDelta({lam}) does not have head L({lam})")
        for layer in rad:
            for nu in layer.target.labels:
                if not (bruhat_leq(nu, lam) and nu != lam):
                    fail(f"PS3: L({nu}) in rad ProperDelta({lam}) is not below {lam}")

    qf = quantum_factorial(alg.k)
    mult = proper_multiplicities(alg)
    for mu in alg.weights:
        for nu in alg.weights:
            want = qf if mu == nu else LaurentV()
            if mult.get((mu, nu), LaurentV()) != want:
                fail(f"(Delta({mu}) : ProperDelta({nu})) is not [k]_0! delta")
    rep.failures.extend(grothendieck_identities(alg))
    return rep


def fail_all(rep: StratificationReport, layer: Layer, where: str) -> None:
    for p in layer.problems:
        rep.failures.append(f"{where}, layer {layer.label}: {p}")


# self-dual projectives -----------------------------------------------------------

@dataclass
class SelfDualityData:
    weight: Weight
    palindromic: bool
    top_degree: int
    top_weight: Optional[Weight]
    top_in_socle: bool

    @property
    def self_dual(self) -> bool:
        return self.palindromic and self.top_weight == self.weight and self.top_in_socle


def projective_duality_data(alg: DiagramAlgebra, lam: Weight) -> SelfDualityData:
    """Palindromic weight spaces of P(lam) and the weight of its top-degree vector."""
    P = projective(alg, lam)
    top, bottom = max(P.degrees), min(P.degrees)
    pal = True
    for mu in alg.weights:
        g = LaurentV.from_exponents(P.degrees[i] for i in P.weight_space(mu))
        if g.bar().shift(top + bottom) != g:
            pal = False
    tops = [i for i, d in enumerate(P.degrees) if d == top]
    top_weight = P.weights[tops[0]] if len(tops) == 1 else None
    in_socle = len(tops) == 1 and P.positive_part_kills(tops[0])
    return SelfDualityData(lam, pal, top, top_weight, in_socle)


def self_dual_projectives(alg: DiagramAlgebra) -> List[Weight]:
    """lam with P(lam) palindromic and L(lam) sitting in the socle at the top degree."""
    return [lam for lam in alg.weights if projective_duality_data(alg, lam).self_dual]


def socle_contains_tilde(alg: DiagramAlgebra, lam: Weight) -> bool:
    """The top-degree vector of P(lam) has weight tilde(lam) and is killed by A_{>0}."""
    data = projective_duality_data(alg, lam)
    return data.top_weight == tilde(lam) and data.top_in_socle


def expected_self_dual(alg: DiagramAlgebra) -> List[Weight]:
    return [lam for lam in alg.weights if is_max_defect(lam)]
