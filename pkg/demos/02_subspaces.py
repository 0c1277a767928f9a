"""
Subspaces, quotients and minimal polynomials
============================================

Subspaces are stored by their reduced row-echelon basis, so equality is
just equality of bases.  Intersections use the Zassenhaus trick, and a
quotient map pushes an operator down to V / W.
"""

from trialg import QQ, Matrix, Subspace, intersect, kernel, min_poly, quotient, rref

M = Matrix(QQ, [[2, 4, 1], [1, 2, 0], [3, 6, 1]])
red, rank, pivots = rref(M)
print("rref:")
print(red.pretty())
print("rank", rank, "pivots", pivots)
print("kernel basis:", [list(map(str, v)) for v in kernel(M).basis])

A = Subspace(QQ, 3, [(1, 0, 0), (0, 1, 0)])
B = Subspace(QQ, 3, [(0, 1, 0), (0, 0, 1)])
print("A ∩ B:", [list(map(str, v)) for v in intersect(A, B).basis], " dim(A + B):", (A + B).dim)

# T = E12 + E23 leaves span(e1) invariant; on the quotient it acts as a 2x2 shift
T = Matrix(QQ, [[0, 1, 0], [0, 0, 1], [0, 0, 0]])
q = quotient(3, Subspace(QQ, 3, [(1, 0, 0)]))
print("induced map on Q^3 / span(e1):")
print(q.induce(T).pretty())

for m in (T, Matrix(QQ, [[0, -1], [1, 0]]), Matrix.identity(QQ, 4)):
    print("min poly:", min_poly(m))
