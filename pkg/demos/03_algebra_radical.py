"""
Generated algebra, radical and semisimple quotient
==================================================

The unital algebra generated by a few matrices is closed up exactly.  Its
Jacobson radical comes from the kernel of the trace form, and the quotient
by the radical is described by structure constants.  The algebra is
triangularizable exactly when that quotient is a product of copies of the
base field.
"""

from trialg import QQ, Matrix, close_algebra, quotient_structure, radical, radical_report, split_as_km

gens = [Matrix.unit(QQ, 3, 0, 0), Matrix.unit(QQ, 3, 0, 1), Matrix.unit(QQ, 3, 1, 2)]
A = close_algebra(gens)
print("algebra dimension:", A.dim)

rad = radical(A)
print("radical dimension:", rad.dim)
for r in rad.basis:
    print(A.element(r).pretty(), end="\n\n")

q = quotient_structure(A, rad)
print("quotient dimension:", q.dim, " split as k^m:", split_as_km(q))

rep = radical_report(close_algebra([Matrix(QQ, [[0, -1], [1, 0]])]))
print("rotation over Q: commutative quotient", rep.quotient_commutative, "but split", rep.split_as_km)
