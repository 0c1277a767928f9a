"""
Simultaneous triangularization with a certificate
=================================================

Hide a pair of upper-triangular matrices behind a random change of basis,
then recover a common flag.  The result is a certificate (the flag and the
conjugated matrices) that ``verify`` rechecks from scratch.  When no flag
exists, the answer comes with a witness: an invariant subspace whose
quotient has no common eigenvector.
"""

import random

from trialg import QQ, Matrix, triangularize, verify, replay_witness
from trialg.instances import conjugate_all, random_invertible, random_upper

rng = random.Random(1)
S, T = random_upper(rng, QQ, 4), random_upper(rng, QQ, 4)
Q = random_invertible(rng, QQ, 4)
hidden = conjugate_all(Q, [S, T])
print("hidden S:")
print(hidden[0].pretty())

v = triangularize(hidden)
cert = v.triangularization
print("\nverdict:", v.outcome.value)
print("flag basis (columns):")
print(cert.P.pretty())
print("P^-1 S P:")
print(cert.conjugated[0].pretty())
print("diagonal map:", [[str(x) for x in d] for d in cert.diagonal_map])
print("certificate verifies:", verify(cert, hidden))

E12, E21 = Matrix.unit(QQ, 2, 0, 1), Matrix.unit(QQ, 2, 1, 0)
no = triangularize([E12, E21])
print("\n{E12, E21}:", no.outcome.value, "at stage", no.witness.stage,
      "- witness replays:", replay_witness(no.witness))
