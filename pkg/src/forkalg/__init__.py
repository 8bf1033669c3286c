"""Exact computations with the graded fork-diagram algebras A_{n,k}.

Submodules: polyring (polynomials, Laurent polynomials, Demazure operators),
quotient (the rings R_b and their Hom spaces), weights, hecke (canonical
basis of the Hecke algebra), diagrams (fork diagrams and the monomial
dictionary), algebra (A_{n,k}, cellularity, the form theta), repr (graded
modules, filtrations, Grothendieck identities), functors (psi, F, E and the
centre), verify (suites used by the CLI and tests) and cli.
"""

from .algebra import DiagramAlgebra, build_algebra, export_json, import_json
from .polyring import IntPolynomial, LaurentV, format_laurent, parse_laurent
from .weights import Weight, block

__all__ = [
    "DiagramAlgebra",
    "IntPolynomial",
    "LaurentV",
    "Weight",
    "block",
    "build_algebra",
    "export_json",
    "format_laurent",
    "import_json",
    "parse_laurent",
]
__version__ = "0.1.0"
