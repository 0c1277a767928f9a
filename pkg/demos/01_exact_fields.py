"""
Exact scalars and polynomial roots
==================================

Everything in trialg is exact: rationals are gmpy2 ``mpq`` values and
prime-field elements are residues.  Roots are found in the field itself,
so the same polynomial can split over F_5 and stay irreducible over Q.
"""

from trialg import GF, QQ, Poly, Scalar, roots_in_field
from trialg.exactfield import splits_into_distinct_linear_factors

# arithmetic never rounds
half, third = Scalar(QQ, "1/2"), Scalar(QQ, "1/3")
print("1/2 + 1/3 =", half + third)
print("2^-1 in F_5 =", Scalar(GF(5), 2).inv())

# x^2 + 1: no rational roots, two roots mod 5
f = [1, 0, 1]
for F in (QQ, GF(5), GF(7)):
    p = Poly(F, f)
    print(f"roots of {p} over {F}: {roots_in_field(p)}  split: {splits_into_distinct_linear_factors(p)}")

# rational root theorem handles fractions and multiplicity
g = Poly.from_roots(QQ, ["2/3", "2/3", "-5"])
print(f"{g} has roots {[(str(r), m) for r, m in roots_in_field(g)]}")
