"""Exact simultaneous triangularization of matrix sets over Q and prime fields."""

from .algebra import (
    AlgebraBasis, RadicalReport, StructureConstants, close_algebra, element_min_poly_in_quotient,
    is_commutative, quotient_structure, radical, radical_report, split_as_km,
)
from .errors import *  # noqa: F401,F403
from .exactfield import GF, QQ, FieldSpec, Poly, Scalar, roots_in_field, splits_into_distinct_linear_factors
from .linalg import Matrix, QuotientMap, Subspace, conjugate, intersect, kernel, min_poly, quotient, rref
from .triangularize import (
    Flag, McCoyReport, Outcome, Triangularization, Verdict, Witness, check_mccoy, common_eigenvector,
    replay_witness, strict_part, strict_triangularize, triangularize, verify,
)

__version__ = "0.1.0"
