"""Verification suites shared by the CLI and the test-suite.

Each suite takes (n, k) and returns a list of Check records; a suite passes
when every check does.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import factorial, prod
from typing import Callable, Dict, List, Optional

from .algebra import build_algebra, check_cellular, theta_report
from .diagrams import common_etas, licit_hom_monomials, min_max_degree_formula
from .hecke import (
    canonical_basis,
    cor34_count,
    explicit_C,
    graded_dim_soergel,
    neighbour_a_sequence,
    neighbour_permutation,
    wk_z,
)
from .polyring import (
    IntPolynomial,
    LaurentV,
    complete_symmetric,
    demazure,
    p_operator,
)
from .quotient import hom_basis, make_quotient, theta_dual
from .repr import (
    expected_self_dual,
    projective,
    properly_stratified_check,
    proper_standard,
    self_dual_projectives,
    socle_contains_tilde,
    standard,
)
from .weights import b_sequence, block, defect, length, vee_distances

SAMPLE_SIZE = 10_000
EXHAUSTIVE_N = 4


@dataclass
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""


def _check(out: List[Check], suite: str, name: str, failures: List[str], count: Optional[int] = None) -> None:
    detail = "; ".join(failures[:3]) if failures else (f"{count} cases" if count is not None else "")
    out.append(Check(suite, name, not failures, detail))


# polyring --------------------------------------------------------------------------

def random_polynomial(rng: random.Random, n: int, terms: int = 4, max_exp: int = 3) -> IntPolynomial:
    out = {}
    for _ in range(terms):
        mono = tuple(rng.randint(0, max_exp) for _ in range(n))
        out[mono] = out.get(mono, 0) + rng.randint(-3, 3)
    return IntPolynomial(n, out)


def suite_polyring(n: int, k: Optional[int] = None, seed: int = 0) -> List[Check]:
    out: List[Check] = []
    rng = random.Random(seed)
    n = max(n, 2)
    bad: List[str] = []
    for _ in range(30):
        f, g, h = (random_polynomial(rng, n) for _ in range(3))
        if (f * g) * h != f * (g * h) or f * (g + h) != f * g + f * h or f + g != g + f:
            bad.append("ring axiom")
    _check(out, "polyring", "ring axioms", bad, 30)
    bad = []
    for i in range(1, n):
        for _ in range(10):
            f = random_polynomial(rng, n)
            d, p = demazure(i, f), p_operator(i, f)
            xi = IntPolynomial.variable(n, i)
            if p + xi * d != f or p.swap(i) != p or d.swap(i) != d:
                bad.append(f"decomposition at i={i}")
            g = random_polynomial(rng, n)
            sym = g + g.swap(i)
            if demazure(i, sym * f) != sym * demazure(i, f):
                bad.append(f"twisted Leibniz at i={i}")
    _check(out, "polyring", "Demazure identities", bad)
    bad = []
    for top in range(1, n + 1):
        for j in range(0, 7):
            h = complete_symmetric(j, range(1, top + 1), n)
            for split in range(1, top):
                total = IntPolynomial.zero(n)
                for m in range(j + 1):
                    total = total + complete_symmetric(m, range(1, split + 1), n) * complete_symmetric(
                        j - m, range(split + 1, top + 1), n
                    )
                if total != h:
                    bad.append(f"splitting h_{j} at {split}")
            if j >= 1:
                lower = complete_symmetric(j, range(1, top), n)
                xk = IntPolynomial.variable(n, top)
                if lower != h - xk * complete_symmetric(j - 1, range(1, top + 1), n):
                    bad.append(f"recursion h_{j}(x1..x{top - 1})")
            if top < n and j >= 1:
                if demazure(top, h) != complete_symmetric(j - 1, range(1, top + 2), n):
                    bad.append(f"Demazure on h_{j}(x1..x{top})")
    _check(out, "polyring", "complete symmetric identities", bad)
    return out


# quotient and hecke ----------------------------------------------------------------

def _ks(n: int, k: Optional[int]) -> List[int]:
    return list(range(n + 1)) if k is None else [k]


def suite_quotient(n: int, k: Optional[int] = None) -> List[Check]:
    out: List[Check] = []
    bad: List[str] = []
    count = 0
    for kk in _ks(n, k):
        for z in block(n, kk):
            b = b_sequence(z)
            ring = make_quotient(b)
            a = ring.dimension
            c = factorial(kk) * prod(d + 1 for d in vee_distances(z))
            soergel = graded_dim_soergel(n, kk, z)
            if not (a == c == soergel.at_one()):
                bad.append(f"{z}: {a}, {c}, {soergel.at_one()}")
            if ring.graded_dimension().shift(-length(wk_z(z))) != soergel:
                bad.append(f"{z}: graded dimension")
            count += 1
    _check(out, "quotient", "dimension triple and graded refinement", bad, count)
    bad = []
    for kk in _ks(n, k):
        ws = block(n, kk)
        for z in ws:
            for zp in ws:
                b, bp = b_sequence(z), b_sequence(zp)
                fwd, back = hom_basis(b, bp), hom_basis(bp, b)
                shift = 2 * sum(y - x for x, y in zip(b, bp))
                if fwd.graded_dimension() != back.graded_dimension().shift(shift):
                    bad.append(f"Hom duality {z} -> {zp}")
                for m in fwd.monomials:
                    if theta_dual(theta_dual(m, b, bp), bp, b) != m:
                        bad.append(f"Theta not an involution at {z}, {zp}")
                        break
                if len(licit_hom_monomials(z, zp)) != factorial(kk) * len(common_etas(zp, z)):
                    bad.append(f"licit count {z} -> {zp}")
    _check(out, "quotient", "Hom spaces, duality, licit counts", bad)
    return out


def suite_hecke(n: int, k: Optional[int] = None) -> List[Check]:
    out: List[Check] = []
    bad: List[str] = []
    count = 0
    for kk in _ks(n, k):
        for z in block(n, kk):
            w = wk_z(z)
            cw = canonical_basis(w)
            if explicit_C(n, kk, z) != cw:
                bad.append(f"closed formula at {z}")
            if cw.coefficient(tuple(range(1, n + 1))) != LaurentV.monomial(length(w)):
                bad.append(f"coefficient of H_e at {z}")
            count += 1
    _check(out, "hecke", "closed formula for C_{w_k z}", bad, count)
    bad = []
    count = 0
    for kk in _ks(n, k):
        for z in block(n, kk):
            dist = vee_distances(z)
            for j in range(kk + 1, n):
                if dist[j - kk - 1] != dist[j - kk]:
                    continue
                expect = cor34_count(n, kk, z, j)
                terms = len(canonical_basis(neighbour_permutation(z, j)))
                quot = make_quotient(neighbour_a_sequence(z, j)).dimension
                if not (expect == terms == quot):
                    bad.append(f"{z}, j={j}: {expect}, {terms}, {quot}")
                count += 1
    _check(out, "hecke", "neighbour counts", bad, count)
    return out


# algebra-level suites -----------------------------------------------------------------

def suite_algebra(n: int, k: Optional[int] = None, seed: int = 0, jobs: int = 1) -> List[Check]:
    out: List[Check] = []
    rng = random.Random(seed)
    for kk in _ks(n, k):
        A = build_algebra(n, kk)
        A.build_products(jobs)
        tag = f"A_{n},{kk}"
        bad: List[str] = []
        count = 0
        expect = sum(
            factorial(kk) * len(common_etas(lo, up)) for lo in A.weights for up in A.weights
        )
        if expect != len(A):
            bad.append(f"dimension {len(A)} vs {expect}")
        for lam in A.weights:
            for mu in A.weights:
                if len(licit_hom_monomials(mu, lam)) != len(A.by_pair.get((lam, mu), [])):
                    bad.append(f"licit monomials vs diagrams at {lam}, {mu}")
        _check(out, "algebra", f"{tag} dimension", bad)
        bad = []
        unit = A.unit()
        for lam, e in A.idempotents.items():
            for mu, f in A.idempotents.items():
                if A.multiply_basis(e, f) != ({e: 1} if lam == mu else {}):
                    bad.append(f"e_{lam} e_{mu}")
        for i in range(len(A)):
            if A.multiply(unit, {i: 1}) != {i: 1} or A.multiply({i: 1}, unit) != {i: 1}:
                bad.append(f"unit on {i}")
        zero = [i for i, d in enumerate(A.degrees) if d == 0]
        if sorted(zero) != sorted(A.idempotents.values()) or min(A.degrees) < 0:
            bad.append("degree-zero part is not spanned by the idempotents")
        _check(out, "algebra", f"{tag} idempotents and unit", bad)
        bad = []
        if n <= EXHAUSTIVE_N:
            triples = (
                (i, j, l)
                for i in range(len(A))
                for j in A.by_lower[A.basis[i].upper]
                for l in A.by_lower[A.basis[j].upper]
            )
        else:
            triples = []
            for _ in range(SAMPLE_SIZE):
                i = rng.randrange(len(A))
                j = rng.choice(A.by_lower[A.basis[i].upper])
                l = rng.choice(A.by_lower[A.basis[j].upper])
                triples.append((i, j, l))
        for i, j, l in triples:
            if A.multiply(A.multiply_basis(i, j), {l: 1}) != A.multiply({i: 1}, A.multiply_basis(j, l)):
                bad.append(f"({i} {j}) {l}")
            count += 1
        _check(out, "algebra", f"{tag} associativity", bad, count)
        bad = []
        count = 0
        for i, j in A.compatible_pairs():
            prod_ij = A.multiply_basis(i, j)
            if A.star(prod_ij) != A.multiply_basis(A.star_index(j), A.star_index(i)):
                bad.append(f"star on {i}, {j}")
            target = A.degrees[i] + A.degrees[j]
            if any(A.degrees[t] != target for t in prod_ij):
                bad.append(f"grading on {i}, {j}")
            count += 1
        if any(A.star_index(A.star_index(i)) != i for i in range(len(A))):
            bad.append("star is not an involution")
        _check(out, "algebra", f"{tag} star and grading", bad, count)
    return out


def suite_cellular(n: int, k: Optional[int] = None) -> List[Check]:
    out: List[Check] = []
    for kk in _ks(n, k):
        rep = check_cellular(build_algebra(n, kk))
        bad = [f"{ax}: {msgs[0]}" for ax, msgs in sorted(rep.failures.items())]
        _check(out, "cellular", f"A_{n},{kk} GC1-GC6", bad, sum(rep.checked.values()))
    return out


def suite_stratified(n: int, k: Optional[int] = None) -> List[Check]:
    out: List[Check] = []
    for kk in _ks(n, k):
        A = build_algebra(n, kk)
        exhaustive = n <= EXHAUSTIVE_N
        rep = properly_stratified_check(A, verify_actions=exhaustive)
        label = "with verified subquotient actions" if exhaustive else "Grothendieck level"
        _check(out, "stratified", f"A_{n},{kk} filtrations and identities ({label})", rep.failures)
        if exhaustive:
            bad: List[str] = []
            for lam in A.weights:
                for M in (projective(A, lam), standard(A, lam), proper_standard(A, lam)):
                    bad.extend(M.check_module_axioms())
            _check(out, "stratified", f"A_{n},{kk} module axioms", bad)
    return out


def suite_duality(n: int, k: Optional[int] = None) -> List[Check]:
    out: List[Check] = []
    for kk in _ks(n, k):
        A = build_algebra(n, kk)
        tag = f"A_{n},{kk}"
        cartan = A.graded_cartan()
        bad = [f"{l},{m}" for (l, m), c in cartan.items() if c != cartan[(m, l)]]
        _check(out, "duality", f"{tag} Cartan matrix symmetric", bad)
        bad = []
        for lam in A.weights:
            diag = cartan[(lam, lam)]
            top = kk * (kk - 1) + 2 * defect(lam)
            if diag.max_degree() != top or diag.coefficient(top) != 1:
                bad.append(f"top degree at {lam}")
            for mu in A.weights:
                c = cartan[(lam, mu)]
                if c.is_zero():
                    continue
                lo, hi = min_max_degree_formula(lam, mu)
                if (c.min_degree(), c.max_degree()) != (lo, hi) or c.coefficient(lo) != 1 or c.coefficient(hi) != 1:
                    bad.append(f"extreme degrees at {lam}, {mu}")
        _check(out, "duality", f"{tag} extreme degrees", bad)
        rep = theta_report(A)
        _check(out, "duality", f"{tag} theta symmetric and non-degenerate", rep.failures, rep.blocks)
        got, want = self_dual_projectives(A), expected_self_dual(A)
        bad = [] if got == want else [f"got {[str(w) for w in got]}, expected {[str(w) for w in want]}"]
        bad += [f"socle of P({lam})" for lam in A.weights if not socle_contains_tilde(A, lam)]
        _check(out, "duality", f"{tag} self-dual projectives", bad)
    return out


def suite_psi(n: int, k: Optional[int] = None) -> List[Check]:
    from .functors import FunctorPair, psi_checks

    out: List[Check] = []
    for kk in _ks(n, k):
        if kk >= n:
            continue
        pair = FunctorPair(n, kk)
        samples = None if n <= EXHAUSTIVE_N else SAMPLE_SIZE
        rep = psi_checks(pair, samples)
        _check(out, "psi", f"psi A_{n},{kk + 1} -> A_{n},{kk}", rep.failures, sum(rep.checked.values()))
    return out


def suite_functors(n: int, k: Optional[int] = None, center_max_n: int = 4) -> List[Check]:
    from .functors import (
        FunctorPair,
        adjunction_check,
        bimodule_checks,
        center_vs_presentation,
        projective_action_check,
    )

    out: List[Check] = []
    for kk in _ks(n, k):
        if kk >= n:
            continue
        pair = FunctorPair(n, kk)
        tag = f"F_{kk} (n={n})"
        samples = None if n <= EXHAUSTIVE_N else SAMPLE_SIZE
        rep = bimodule_checks(pair, samples)
        _check(out, "functors", f"{tag} bimodule axioms", rep.failures, sum(rep.checked.values()))
        rep = projective_action_check(pair)
        _check(out, "functors", f"{tag} action on projectives", rep.failures)
        rep = adjunction_check(pair)
        _check(out, "functors", f"{tag} adjunction table", rep.failures, rep.checked.get("pairs"))
        if n <= center_max_n:
            rep = center_vs_presentation(n, kk)
            detail = f"centre {rep.tables['center']}, presentation {rep.tables['presentation']}"
            out.append(Check("functors", f"{tag} centre vs C[x]/I_k", rep.ok, "; ".join(rep.failures) or detail))
    return out


SUITES: Dict[str, Callable[..., List[Check]]] = {
    "polyring": suite_polyring,
    "quotient": suite_quotient,
    "hecke": suite_hecke,
    "psi": suite_psi,
    "algebra": suite_algebra,
    "cellular": suite_cellular,
    "stratified": suite_stratified,
    "duality": suite_duality,
    "functors": suite_functors,
}


def run_suite(name: str, n: int, k: Optional[int] = None) -> List[Check]:
    if name == "all":
        out: List[Check] = []
        for suite in SUITES.values():
            out.extend(suite(n, k))
        return out
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES) + ['all']}")
    return SUITES[name](n, k)
