"""
Three infinite-dimensional examples at desk scale
=================================================

Operators here act on a space with basis e_1, e_2, ... followed by a
point at infinity.  Each example is checked up to an explicit bound.  A
surviving vector is evidence, never a proof.

* lower-tri: the chain E_{k+1,k} never kills e_1, although every factor is
  nilpotent and E_{n,n-1}...E_21 = E_{n,1}.
* shift: T(e_i) = e_{i-1} kills e_m in exactly m steps.
* non-iso: orthogonal idempotents E_i with E_i(e_inf) = e_i, and the diagonal
  of a*1 + sum a_i E_i.
"""

from trialg.endosim import (
    INF, FinSuppOp, FinVec, bounded_nilpotence_probe, compose, diag_map, idempotent_combination,
    orthogonal_idempotent, shift_operator, subdiagonal_sequence,
)

res = bounded_nilpotence_probe(subdiagonal_sequence(), [FinVec.basis(1)], 1000)
print("lower-tri chain after", res.steps, "steps:", res.witness)

prod = FinSuppOp.unit(2, 1)
for k in range(2, 6):
    prod = compose(FinSuppOp.unit(k + 1, k), prod)
print("E_65 E_54 E_43 E_32 E_21 =", prod)

T = shift_operator()
for m in (1, 4, 9):
    print(f"shift kills e_{m} in", bounded_nilpotence_probe(lambda k: T, [FinVec.basis(m)], 100).steps, "steps")

E1, E2 = orthogonal_idempotent(1), orthogonal_idempotent(2)
print("E1 E1 == E1:", compose(E1, E1) == E1, " E1 E2 == 0:", compose(E1, E2).is_zero())
op = idempotent_combination(10, [1, 2, 3])
print("diag of 10*1 + E1 + 2E2 + 3E3 on (1, 2, 3, 4, inf):", [str(x) for x in diag_map(op, [1, 2, 3, 4, INF])])
