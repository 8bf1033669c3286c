"""The graded diagram algebra A_{n,k}.

Basis vectors are oriented fork diagrams (underline(a) eta^sigma overline(b)).
A product (a lam^s b)(c mu^t d) vanishes unless b = c; otherwise the two
lower-half monomials are multiplied, reduced in the quotient ring of the
target weight a, and every surviving licit monomial is translated back to a
diagram with lower weight a and upper weight d.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .diagrams import (
    OrientedForkDiagram,
    common_etas,
    contained_in,
    diagram_to_monomial,
    fork_degree,
    max_diagram,
    monomial_to_diagram,
)
from .polyring import LaurentV, Monomial
from .quotient import hom_basis, make_quotient
from .weights import (
    Perm,
    Weight,
    all_permutations,
    b_sequence,
    block,
    bruhat_leq,
    format_perm,
    is_max_defect,
    length,
    parse_perm,
)

DEFAULT_CAP = 7

Element = Dict[int, int]


def size_cap() -> int:
    """Largest n accepted for algebra builds; FORKALG_CAP overrides the default."""
    raw = os.environ.get("FORKALG_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"FORKALG_CAP must be an integer, got {raw!r}") from exc


class CapExceeded(ValueError):
    pass


def add_into(target: Element, source: Mapping[int, int], scale: int = 1) -> None:
    for idx, c in source.items():
        v = target.get(idx, 0) + scale * c
        if v:
            target[idx] = v
        else:
            target.pop(idx, None)


def format_basis_element(d: OrientedForkDiagram) -> str:
    return f"(lower={d.lower} eta={d.eta} sigma={format_perm(d.sigma)} upper={d.upper})"


def parse_basis_element(text: str) -> OrientedForkDiagram:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"basis element must be parenthesised: {text!r}")
    fields = {}
    for part in body[1:-1].split():
        key, sep, value = part.partition("=")
        if not sep:
            raise ValueError(f"expected key=value, got {part!r}")
        fields[key] = value
    missing = {"lower", "eta", "sigma", "upper"} - set(fields)
    if missing:
        raise ValueError(f"basis element lacks {sorted(missing)}")
    return OrientedForkDiagram(
        Weight.parse(fields["lower"]),
        Weight.parse(fields["eta"]),
        parse_perm(fields["sigma"]),
        Weight.parse(fields["upper"]),
    )


class DiagramAlgebra:
    """Basis, grading and memoised structure constants of A_{n,k}."""

    def __init__(self, n: int, k: int, cap: Optional[int] = None):
        cap = size_cap() if cap is None else cap
        if not 0 <= k <= n:
            raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
        if n > cap:
            raise CapExceeded(f"n={n} exceeds the cap {cap}; set FORKALG_CAP to raise it")
        self.n, self.k = n, k
        self.weights: List[Weight] = block(n, k)
        self.weight_index = {w: i for i, w in enumerate(self.weights)}
        perms = all_permutations(k)
        basis: List[OrientedForkDiagram] = []
        for upper in self.weights:
            for lower in self.weights:
                for eta in common_etas(lower, upper):
                    for s in perms:
                        basis.append(OrientedForkDiagram(lower, eta, s, upper))
        self.basis = basis
        self.index = {d: i for i, d in enumerate(basis)}
        self.degrees = [d.degree for d in basis]
        self.monomials: List[Monomial] = [diagram_to_monomial(d) for d in basis]
        self.by_lower: Dict[Weight, List[int]] = {w: [] for w in self.weights}
        self.by_upper: Dict[Weight, List[int]] = {w: [] for w in self.weights}
        self.by_pair: Dict[Tuple[Weight, Weight], List[int]] = {}
        for i, d in enumerate(basis):
            self.by_lower[d.lower].append(i)
            self.by_upper[d.upper].append(i)
            self.by_pair.setdefault((d.lower, d.upper), []).append(i)
        ident = tuple(range(1, k + 1))
        self.idempotents = {w: self.index[OrientedForkDiagram(w, w, ident, w)] for w in self.weights}
        self._products: Dict[Tuple[int, int], Element] = {}
        self._translate: Dict[Tuple[Weight, Weight, Monomial], Optional[int]] = {}

    def __len__(self) -> int:
        return len(self.basis)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    # multiplication ------------------------------------------------------------
    def _to_index(self, mono: Monomial, source: Weight, target: Weight) -> Optional[int]:
        key = (source, target, mono)
        if key in self._translate:
            return self._translate[key]
        d = monomial_to_diagram(mono, source, target)
        idx = None if d is None else self.index[d]
        self._translate[key] = idx
        return idx

    def multiply_basis(self, i: int, j: int) -> Element:
        key = (i, j)
        hit = self._products.get(key)
        if hit is not None:
            return hit
        x, y = self.basis[i], self.basis[j]
        out: Element = {}
        if x.upper == y.lower:
            target, source = x.lower, y.upper
            ring = make_quotient(b_sequence(target))
            mono = tuple(a + b for a, b in zip(self.monomials[i], self.monomials[j]))
            allowed = hom_basis(b_sequence(source), b_sequence(target))
            for m, c in ring.reduce_monomial(mono).items():
                if m not in allowed:
                    raise ArithmeticError(f"reduced product {m} is not a Hom basis monomial")
                idx = self._to_index(m, source, target)
                if idx is not None:
                    out[idx] = out.get(idx, 0) + c
            out = {a: c for a, c in out.items() if c}
        self._products[key] = out
        return out

    def multiply(self, x: Mapping[int, int], y: Mapping[int, int]) -> Element:
        out: Element = {}
        for i, a in x.items():
            upper = self.basis[i].upper
            for j, b in y.items():
                if self.basis[j].lower != upper:
                    continue
                add_into(out, self.multiply_basis(i, j), a * b)
        return out

    def compatible_pairs(self) -> Iterable[Tuple[int, int]]:
        for i, d in enumerate(self.basis):
            for j in self.by_lower[d.upper]:
                yield i, j

    def build_products(self, jobs: int = 1) -> None:
        """Fill the whole structure-constant table, optionally in worker processes."""
        lefts = list(range(len(self.basis)))
        if jobs <= 1 or len(lefts) < 64:
            for i, j in self.compatible_pairs():
                self.multiply_basis(i, j)
            return
        chunks = [lefts[t::jobs] for t in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_product_rows, self.n, self.k, c) for c in chunks]
            for fut in futures:
                for key, val in fut.result():
                    self._products[key] = val

    def product_table(self) -> List[Tuple[int, int, List[Tuple[int, int]]]]:
        self.build_products()
        rows = []
        for i, j in self.compatible_pairs():
            rows.append((i, j, sorted(self.multiply_basis(i, j).items())))
        return rows

    # structure ------------------------------------------------------------------
    def unit(self) -> Element:
        return {idx: 1 for idx in self.idempotents.values()}

    def star_index(self, i: int) -> int:
        d = self.basis[i]
        return self.index[OrientedForkDiagram(d.upper, d.eta, d.sigma, d.lower)]

    def star(self, x: Mapping[int, int]) -> Element:
        return {self.star_index(i): c for i, c in x.items()}

    def element_degree(self, x: Mapping[int, int]) -> Optional[int]:
        degs = {self.degrees[i] for i in x}
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop() if degs else None

    def graded_cartan(self) -> Dict[Tuple[Weight, Weight], LaurentV]:
        """Entry (lam, mu): graded dimension of e_lam A e_mu."""
        out = {}
        for lam in self.weights:
            for mu in self.weights:
                idxs = self.by_pair.get((lam, mu), [])
                out[(lam, mu)] = LaurentV.from_exponents(self.degrees[i] for i in idxs)
        return out

    def max_defect_weights(self) -> List[Weight]:
        return [w for w in self.weights if is_max_defect(w)]

    def xi_max(self, lam: Weight) -> int:
        return self.index[max_diagram(lam)]

    def theta(self, x: Mapping[int, int], y: Mapping[int, int]) -> int:
        """Sum over maximal-defect lam of the xi^max_lam coefficient of e_lam x y e_lam."""
        xy = self.multiply(x, y)
        return sum(xy.get(self.xi_max(lam), 0) for lam in self.max_defect_weights())

    # JSON ------------------------------------------------------------------------
    def to_json_dict(self) -> dict:
        basis = [
            {
                "lower": str(d.lower),
                "eta": str(d.eta),
                "sigma": format_perm(d.sigma),
                "upper": str(d.upper),
                "degree": self.degrees[i],
            }
            for i, d in enumerate(self.basis)
        ]
        products = [[i, j, [[a, c] for a, c in terms]] for i, j, terms in self.product_table()]
        return {"n": self.n, "k": self.k, "basis": basis, "products": products}


def _product_rows(n: int, k: int, lefts: Sequence[int]):
    alg = build_algebra(n, k)
    rows = []
    for i in lefts:
        upper = alg.basis[i].upper
        for j in alg.by_lower[upper]:
            rows.append(((i, j), alg.multiply_basis(i, j)))
    return rows


def build_algebra(n: int, k: int, cap: Optional[int] = None) -> DiagramAlgebra:
    return DiagramAlgebra(n, k, cap)


def multiply(alg: DiagramAlgebra, x: OrientedForkDiagram, y: OrientedForkDiagram) -> Element:
    return alg.multiply_basis(alg.index[x], alg.index[y])


def star(d: OrientedForkDiagram) -> OrientedForkDiagram:
    return OrientedForkDiagram(d.upper, d.eta, d.sigma, d.lower)


def graded_cartan(alg: DiagramAlgebra) -> Dict[Tuple[Weight, Weight], LaurentV]:
    return alg.graded_cartan()


def bilinear_theta(alg: DiagramAlgebra, x: Mapping[int, int], y: Mapping[int, int]) -> int:
    return alg.theta(x, y)


def export_json(alg: DiagramAlgebra) -> str:
    """Canonical JSON text: sorted keys, compact separators, trailing newline."""
    return json.dumps(alg.to_json_dict(), sort_keys=True, separators=(",", ":")) + "\n"


@dataclass
class ImportedAlgebra:
    """Basis and structure constants read back from JSON."""

    n: int
    k: int
    basis: List[OrientedForkDiagram]
    degrees: List[int]
    products: Dict[Tuple[int, int], Dict[int, int]] = field(default_factory=dict)

    def same_as(self, alg: DiagramAlgebra) -> bool:
        if (self.n, self.k) != (alg.n, alg.k):
            return False
        if self.basis != alg.basis or self.degrees != alg.degrees:
            return False
        table = {(i, j): dict(t) for i, j, t in alg.product_table()}
        return table == self.products


def import_json(text: str) -> ImportedAlgebra:
    data = json.loads(text)
    basis = [
        OrientedForkDiagram(
            Weight.parse(b["lower"]), Weight.parse(b["eta"]),
            parse_perm(b["sigma"]), Weight.parse(b["upper"]),
        )
        for b in data["basis"]
    ]
    products = {(i, j): {a: c for a, c in terms} for i, j, terms in data["products"]}
    return ImportedAlgebra(data["n"], data["k"], basis, [b["degree"] for b in data["basis"]], products)


# cellular structure ------------------------------------------------------------

def cell_strictly_above(mu: Weight, tau: Perm, lam: Weight, sigma: Perm) -> bool:
    """mu^tau > lam^sigma: mu > lam in the Bruhat order, or mu = lam and l(tau) > l(sigma)."""
    if mu == lam:
        return length(tau) > length(sigma)
    return bruhat_leq(lam, mu)


def cell_leq(a: Tuple[Weight, Perm], b: Tuple[Weight, Perm]) -> bool:
    """Reflexive closure of the strict cell order."""
    return a == b or cell_strictly_above(b[0], b[1], a[0], a[1])


@dataclass
class CellularReport:
    n: int
    k: int
    failures: Dict[str, List[str]] = field(default_factory=dict)
    checked: Dict[str, int] = field(default_factory=dict)

    def fail(self, axiom: str, message: str) -> None:
        self.failures.setdefault(axiom, []).append(message)

    def count(self, axiom: str, amount: int = 1) -> None:
        self.checked[axiom] = self.checked.get(axiom, 0) + amount

    @property
    def ok(self) -> bool:
        return not self.failures


def cell_index_set(alg: DiagramAlgebra, lam: Weight) -> List[Weight]:
    """I(lam^sigma) = {alpha : alpha inside lam}."""
    return [a for a in alg.weights if contained_in(a, lam)]


def cell_degree(alpha: Weight, lam: Weight, sigma: Perm) -> int:
    """deg_alpha = deg(underline(alpha) lam^sigma) - l(sigma)."""
    return fork_degree(alpha, lam) + length(sigma)


def check_cellular(alg: DiagramAlgebra) -> CellularReport:
    """Verify GC1-GC6 for the cell datum indexed by enhanced weights."""
    rep = CellularReport(alg.n, alg.k)
    perms = all_permutations(alg.k)
    cells = [(lam, s) for lam in alg.weights for s in perms]

    # GC1: the cell order is a partial order
    for a in cells:
        for b in cells:
            if a != b and cell_leq(a, b) and cell_leq(b, a):
                rep.fail("GC1", f"{a} and {b} compare both ways")
            for c in cells:
                if cell_leq(a, b) and cell_leq(b, c) and not cell_leq(a, c):
                    rep.fail("GC1", f"transitivity fails for {a}, {b}, {c}")
    rep.count("GC1", len(cells) ** 3)

    # GC2 and GC3: finite index sets and a bijection onto the basis
    seen = set()
    for lam, s in cells:
        idx_set = cell_index_set(alg, lam)
        rep.count("GC2")
        for alpha in idx_set:
            for beta in idx_set:
                d = OrientedForkDiagram(alpha, lam, s, beta)
                if d not in alg.index:
                    rep.fail("GC3", f"{format_basis_element(d)} missing from the basis")
                elif d in seen:
                    rep.fail("GC3", f"{format_basis_element(d)} hit twice")
                seen.add(d)
                rep.count("GC3")
    if len(seen) != len(alg.basis):
        rep.fail("GC3", f"cell basis has {len(seen)} elements, algebra has {len(alg.basis)}")

    # GC6: degree function
    for i, d in enumerate(alg.basis):
        expect = cell_degree(d.lower, d.eta, d.sigma) + cell_degree(d.upper, d.eta, d.sigma)
        if expect != alg.degrees[i]:
            rep.fail("GC6", f"degree of {format_basis_element(d)}")
        rep.count("GC6")

    # GC4 (anti-automorphism via star), GC6 grading, and GC5 (cell multiplication)
    for i, j in alg.compatible_pairs():
        prod = alg.multiply_basis(i, j)
        lhs = alg.star(prod)
        rhs = alg.multiply_basis(alg.star_index(j), alg.star_index(i))
        if lhs != rhs:
            rep.fail("GC4", f"star fails on pair {i},{j}")
        rep.count("GC4")
        target = alg.degrees[i] + alg.degrees[j]
        if any(alg.degrees[t] != target for t in prod):
            rep.fail("GC6", f"product {i}*{j} is not homogeneous of degree {target}")

    for x in range(len(alg.basis)):
        upper = alg.basis[x].upper
        # group the right factors by cell and upper index j
        by_cell: Dict[Tuple[Weight, Perm], Dict[Weight, Dict[Weight, Element]]] = {}
        for c in alg.by_lower[upper]:
            cd = alg.basis[c]
            cell = (cd.eta, cd.sigma)
            prod = alg.multiply_basis(x, c)
            kept: Element = {}
            for t, coeff in prod.items():
                td = alg.basis[t]
                if cell_strictly_above(td.eta, td.sigma, cd.eta, cd.sigma):
                    continue
                if (td.eta, td.sigma) != cell or td.upper != cd.upper:
                    rep.fail("GC5", f"x={x} times {format_basis_element(cd)} leaves the cell")
                    continue
                kept[alg.weight_index[td.lower]] = coeff
            by_cell.setdefault(cell, {}).setdefault(cd.lower, {})[cd.upper] = kept
            rep.count("GC5")
        for cell, rows in by_cell.items():
            for i_weight, per_j in rows.items():
                values = list(per_j.values())
                if any(v != values[0] for v in values[1:]):
                    rep.fail("GC5", f"r_x depends on j for x={x}, cell {cell}, i={i_weight}")
    return rep


# the bilinear form --------------------------------------------------------------

def local_theta_gram(alg: DiagramAlgebra, lam: Weight) -> Tuple[List[int], List[List[int]]]:
    """Gram matrix of (y, z) -> coefficient of xi^max_lam in yz on e_lam A e_lam."""
    basis = alg.by_pair.get((lam, lam), [])
    xi = alg.xi_max(lam)
    gram = [[alg.multiply_basis(y, z).get(xi, 0) for z in basis] for y in basis]
    return basis, gram


@dataclass
class ThetaReport:
    failures: List[str] = field(default_factory=list)
    blocks: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures


def theta_report(alg: DiagramAlgebra) -> ThetaReport:
    """Symmetry and non-degeneracy on each e_lam A e_lam, and on e_def A x A e_def.

    For lam of maximal defect the local form is theta itself; for other lam
    it uses xi^max_lam in place of the sum over maximal-defect weights.
    """
    from .linalg import rank

    rep = ThetaReport()
    for lam in alg.weights:
        basis, gram = local_theta_gram(alg, lam)
        rep.blocks += 1
        if any(gram[i][j] != gram[j][i] for i in range(len(basis)) for j in range(len(basis))):
            rep.failures.append(f"theta on e_{lam} A e_{lam} is not symmetric")
        if rank(gram, len(basis)) != len(basis):
            rep.failures.append(f"theta on e_{lam} A e_{lam} is degenerate")
        if is_max_defect(lam):
            for i, y in enumerate(basis):
                for j, z in enumerate(basis):
                    if alg.theta({y: 1}, {z: 1}) != gram[i][j]:
                        rep.failures.append(f"local form differs from theta at {lam}")
    for lam in alg.max_defect_weights():
        xi = alg.xi_max(lam)
        for mu in alg.weights:
            ys = alg.by_pair.get((lam, mu), [])
            ts = alg.by_pair.get((mu, lam), [])
            if len(ys) != len(ts):
                rep.failures.append(f"e_{lam} A e_{mu} and e_{mu} A e_{lam} differ in size")
                continue
            if not ys:
                continue
            gram = [[alg.multiply_basis(y, t).get(xi, 0) for t in ts] for y in ys]
            rep.blocks += 1
            if rank(gram, len(ts)) != len(ys):
                rep.failures.append(f"theta degenerate on e_{lam} A e_{mu} x e_{mu} A e_{lam}")
    return rep
