"""Walk through A_{3,1}: weights, basis diagrams, a product, and the graded invariants.

    python demos/tour_of_a_small_block.py
"""

from forkalg import build_algebra, format_laurent
from forkalg.algebra import format_basis_element
from forkalg.functors import center_vs_presentation
from forkalg.repr import decomposition_matrix
from forkalg.weights import encodings

N, K = 3, 1

alg = build_algebra(N, K)
print(f"A_{N},{K} has {len(alg)} basis diagrams over {len(alg.weights)} weights\n")

for w in alg.weights:
    e = encodings(w)
    print(f"  {w}  b-sequence {e.b_seq}  vee distances {e.vee_dist}")

print("\nDiagrams from the second weight to the first, with their degrees:")
lo, up = alg.weights[0], alg.weights[1]
for i in alg.by_pair.get((lo, up), []):
    print(f"  deg {alg.degrees[i]:2d}  {format_basis_element(alg.basis[i])}")
    print("          " + alg.basis[i].render().replace("\n", "\n          "))

# square each positive-degree loop at the middle weight
mid = alg.weights[1]
loops = [i for i in alg.by_pair[(mid, mid)] if alg.degrees[i] > 0]
for i in loops:
    sq = alg.multiply_basis(i, i)
    print(f"\nsquare of {format_basis_element(alg.basis[i])}: {sq or 0}")

print("\nGraded Cartan matrix (rows lower weight, columns upper weight):")
cartan = alg.graded_cartan()
for l in alg.weights:
    print("  " + str(l) + "  " + "  ".join(format_laurent(cartan[(l, m)]).ljust(10) for m in alg.weights))

dec = decomposition_matrix(alg)
print("\nGraded decomposition matrix:")
for l in alg.weights:
    print("  " + str(l) + "  " + "  ".join(format_laurent(dec.entry(l, m)).ljust(6) for m in alg.weights))

rep = center_vs_presentation(N, K)
print("\nCentre of e^v A e^v:", format_laurent(rep.tables["center"]))
print("C[x]/I_k:           ", format_laurent(rep.tables["presentation"]))
