"""How a product of two basis diagrams is computed, step by step, in A_{5,3}.

The product x*y of diagrams C(d) -> C(b) and C(b) -> C(a) is computed by
turning each into a monomial, multiplying, reducing in R_b(a), and decoding
the licit monomials back into diagrams.

    python demos/multiplying_two_diagrams.py
"""

from forkalg import build_algebra
from forkalg.algebra import format_basis_element, parse_basis_element
from forkalg.diagrams import diagram_to_monomial, monomial_to_diagram
from forkalg.quotient import make_quotient
from forkalg.weights import b_sequence


def show(mono):
    return "*".join(f"x{i}^{e}" if e > 1 else f"x{i}" for i, e in enumerate(mono, 1) if e) or "1"


x = parse_basis_element("(lower=v^^^v eta=^v^^v sigma=2,1,3 upper=v^^v^)")
y = parse_basis_element("(lower=v^^v^ eta=^v^v^ sigma=1,2,3 upper=v^v^^)")
a, d = x.lower, y.upper

px, py = diagram_to_monomial(x), diagram_to_monomial(y)
print("x =", format_basis_element(x), "  monomial", show(px))
print("y =", format_basis_element(y), "  monomial", show(py))

prod = tuple(i + j for i, j in zip(px, py))
ring = make_quotient(b_sequence(a))
print(f"\nproduct monomial {show(prod)}, reduced in R_{b_sequence(a)}:")
for mono, c in sorted(ring.reduce_monomial(prod).items()):
    target = monomial_to_diagram(mono, d, a)
    print(f"  {c:+d} {show(mono):12s} ->", format_basis_element(target) if target else "illicit, dropped")

alg = build_algebra(5, 3)
got = alg.multiply_basis(alg.index[x], alg.index[y])
print("\nalgebra product:", ", ".join(f"{c:+d} {format_basis_element(alg.basis[i])}" for i, c in got.items()))

# The same pipeline fed with x1^3*x4 instead of x1^3, for comparison with the
# published version of this calculation (see the README).
print("\nstarting instead from x1^3*x4:")
for mono, c in sorted(ring.reduce_monomial((3, 0, 0, 1, 0)).items()):
    target = monomial_to_diagram(mono, d, a)
    print(f"  {c:+d} {show(mono):12s} ->", format_basis_element(target) if target else "illicit, dropped")
