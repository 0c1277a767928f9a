"""
Strict triangularization and nilpotent semigroups
=================================================

A set is strictly triangularizable exactly when the semigroup it generates
is nilpotent: every product of n generators is zero.  Here three strictly
upper-triangular 5x5 matrices are disguised by a change of basis and then
recovered; the identity matrix is the obvious failure.
"""

import itertools
import random

from trialg import QQ, Matrix, strict_triangularize
from trialg.instances import conjugate_all, random_invertible, random_upper

rng = random.Random(3)
n = 5
gens = conjugate_all(random_invertible(rng, QQ, n), [random_upper(rng, QQ, n, strict=True) for _ in range(3)])

v = strict_triangularize(gens)
print("verdict:", v.outcome.value)
for c in v.triangularization.conjugated:
    print(c.pretty(), end="\n\n")

zero = 0
for word in itertools.product(gens, repeat=n):
    prod = word[0]
    for w in word[1:]:
        prod = prod @ w
    zero += prod.is_zero()
print(f"{zero} of {3 ** n} products of length {n} are zero")

bad = strict_triangularize([Matrix.identity(QQ, 2)])
print("identity:", bad.outcome.value, "- witness kind", bad.witness.kind)
