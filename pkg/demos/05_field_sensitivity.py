"""
The same matrix over two fields
===============================

The rotation [[0, -1], [1, 0]] has minimal polynomial x^2 + 1.  Over Q that
has no roots, so there is no common eigenvector and the quotient of the
generated algebra is a field extension, not Q^m.  Mod 5 it factors as
(x - 2)(x - 3) and the matrix triangularizes with m = 2.
"""

from trialg import GF, QQ, Matrix, check_mccoy, triangularize

for F in (QQ, GF(5)):
    R = Matrix(F, [[0, -1], [1, 0]])
    r = check_mccoy([R])
    v = triangularize([R])
    print(f"over {F}: structural verdict {r.verdict} (m = {r.m}, radical dim {r.radical_dim}), "
          f"constructive verdict {v.outcome.value}")
    if v.ok:
        print(v.triangularization.conjugated[0].pretty())
