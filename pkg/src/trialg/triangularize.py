"""Simultaneous (strict) triangularization with certificates.

Both routes build a flag one quotient at a time.  The general route looks for
a common eigenvector of the induced maps on V / V_k; the strict route absorbs
the whole common kernel of the induced maps.  Failure at any stage is a
certificate: a set that is triangularizable on V stays triangularizable on
every quotient by an invariant subspace.
"""

from dataclasses import dataclass
from enum import Enum

from .algebra import check_generators, close_algebra, radical_report
from .errors import NotTriangularForFlag, ResourceExceeded, Singular
from .exactfield import roots_in_field
from .linalg import Matrix, QuotientMap, Subspace, intersect, kernel, min_poly

DEFAULT_TUPLE_CAP = 10**5


class Outcome(Enum):
    TRIANGULARIZABLE = "triangularizable"
    STRICTLY_TRIANGULARIZABLE = "strictly_triangularizable"
    NOT = "not"


@dataclass(frozen=True)
class Flag:
    field: object
    n: int
    ordered_basis: tuple  # v_1, ..., v_n

    @classmethod
    def from_vectors(cls, field, vectors):
        return cls(field, len(vectors), tuple(tuple(v) for v in vectors))

    @property
    def matrix(self):
        """P with columns v_1..v_n."""
        return Matrix.from_columns(self.field, self.ordered_basis, self.n)

    def subspace(self, k):
        """V_k = span(v_1..v_k)."""
        return Subspace(self.field, self.n, self.ordered_basis[:k])


@dataclass
class Triangularization:
    flag: Flag
    conjugated: list
    strict: bool
    diagonal_map: list  # per generator, the n diagonal entries of P^-1 T P

    @property
    def P(self):
        return self.flag.matrix


@dataclass
class Witness:
    """Stage at which the search came up empty.

    ``subspace`` is the invariant V_k built so far; ``induced`` are the
    generators acting on V / V_k in the quotient's complement coordinates.
    """

    stage: int
    kind: str  # "eigenvector" or "kernel"
    subspace: Subspace
    induced: list


@dataclass
class Verdict:
    outcome: Outcome
    triangularization: Triangularization | None = None
    witness: Witness | None = None

    @property
    def ok(self):
        return self.outcome is not Outcome.NOT


def _eigenvalue_lists(generators):
    return [[r for r, _ in roots_in_field(min_poly(g))] for g in generators]


def common_eigenvector(generators, n=None, field=None, cap=DEFAULT_TUPLE_CAP):
    """First nonzero v with T_i v = lambda_i v for all i, as ``(v, eigentuple)``.

    Eigenvalue tuples are searched in lexicographic order, each coordinate
    ascending; a partial tuple whose kernel intersection is already zero
    prunes its whole subtree.  Returns None if no common eigenvector exists
    over the field.
    """
    generators = list(generators)
    F, n = check_generators(generators, n)
    if not generators:
        e1 = tuple(field.one() if i == 0 else field.zero() for i in range(n))
        return e1, ()
    eig = _eigenvalue_lists(generators)
    if any(not e for e in eig):
        return None
    I = Matrix.identity(F, n)
    visited = 0
    kernels = {}

    def eigenspace(i, lam):
        key = (i, lam)
        if key not in kernels:
            kernels[key] = kernel(generators[i] - I.scale(lam))
        return kernels[key]

    def search(i, space, chosen):
        nonlocal visited
        if i == len(generators):
            return space, chosen
        for lam in eig[i]:
            visited += 1
            if visited > cap:
                raise ResourceExceeded(f"eigenvalue tuple search exceeded cap {cap}")
            s = eigenspace(i, lam) if space is None else intersect(space, eigenspace(i, lam))
            if s.dim == 0:
                continue
            found = search(i + 1, s, chosen + (lam,))
            if found is not None:
                return found
        return None

    found = search(0, None, ())
    if found is None:
        return None
    space, tup = found
    return space.basis[0], tup


def common_kernel(generators, n, field):
    if not generators:
        return Subspace.full(field, n)
    space = kernel(generators[0])
    for g in generators[1:]:
        if space.dim == 0:
            break
        space = intersect(space, kernel(g))
    return space


def _build(generators, strict, n, field, cap):
    generators = list(generators)
    F, n = check_generators(generators, n)
    F = F or field
    if n is None or F is None:
        raise ValueError("n and field are required when there are no generators")
    flag = []
    W = Subspace.zero(F, n)
    while len(flag) < n:
        qm = QuotientMap(n, W)
        induced = [qm.induce(g) for g in generators]
        if strict:
            K = common_kernel(induced, qm.dim, F)
            if K.dim == 0:
                return Verdict(Outcome.NOT, witness=Witness(len(flag), "kernel", W, induced))
            new = [qm.lift(v) for v in K.basis]
        else:
            found = common_eigenvector(induced, qm.dim, F, cap)
            if found is None:
                return Verdict(Outcome.NOT, witness=Witness(len(flag), "eigenvector", W, induced))
            new = [qm.lift(found[0])]
        flag.extend(new)
        W = Subspace(F, n, flag)
    fl = Flag.from_vectors(F, flag)
    P = fl.matrix
    Pinv = P.inverse()
    conj = [Pinv @ g @ P for g in generators]
    tri = Triangularization(fl, conj, strict, [list(c.diagonal()) for c in conj])
    outcome = Outcome.STRICTLY_TRIANGULARIZABLE if strict else Outcome.TRIANGULARIZABLE
    return Verdict(outcome, triangularization=tri)


def triangularize(generators, n=None, field=None, cap=DEFAULT_TUPLE_CAP):
    """Build a flag of common invariant subspaces one dimension at a time."""
    return _build(generators, False, n, field, cap)


def strict_triangularize(generators, n=None, field=None):
    """Strict triangularization through the chain of iterated common kernels.

    Succeeds exactly when the nonunital algebra generated by the inputs is
    nilpotent.
    """
    return _build(generators, True, n, field, None)


def replay_witness(w, cap=DEFAULT_TUPLE_CAP):
    """True when the recorded stage still has no common eigenvector / kernel vector."""
    dim = w.subspace.ambient_dim - w.subspace.dim
    F = w.subspace.field
    if w.kind == "kernel":
        return common_kernel(w.induced, dim, F).dim == 0
    return common_eigenvector(w.induced, dim, F, cap) is None


def verify(t, generators):
    """Recheck a certificate from scratch; False on any violation."""
    try:
        generators = list(generators)
        fl = t.flag
        n = fl.n
        if len(fl.ordered_basis) != n or len(t.conjugated) != len(generators):
            return False
        if len(t.diagonal_map) != len(generators):
            return False
        F = fl.field
        P = fl.matrix
        try:
            Pinv = P.inverse()
        except Singular:
            return False
        for g, c, d in zip(generators, t.conjugated, t.diagonal_map):
            if g.shape != (n, n):
                return False
            conj = Pinv @ g @ P
            if conj != c:
                return False
            if not conj.is_upper_triangular(strict=t.strict):
                return False
            if list(conj.diagonal()) != [F.coerce(x) for x in d]:
                return False
        # direct invariance check T(V_j) inside V_j, independent of P^-1
        for j in range(1, n + 1):
            Vj = fl.subspace(j)
            if Vj.dim != j:
                return False
            for g in generators:
                image = g.apply(fl.ordered_basis[j - 1])
                target = fl.subspace(j - 1) if t.strict else Vj
                if image not in target:
                    return False
        return True
    except Exception:
        return False


@dataclass
class McCoyReport:
    n: int
    algebra_dim: int
    radical_dim: int
    m: int
    commutative: bool
    split: bool
    radical: object  # RadicalReport

    @property
    def verdict(self):
        return self.split


def check_mccoy(generators, n=None, field=None):
    """Structural decision: is A / rad(A) isomorphic to k^m for the unital algebra A?"""
    generators = list(generators)
    F, n = check_generators(generators, n)
    a = close_algebra(generators, unital=True, n=n, field=F or field)
    rep = radical_report(a)
    if rep.split_as_km and rep.m > n:
        raise AssertionError(f"split quotient of dimension {rep.m} exceeds n = {n}")
    return McCoyReport(n, a.dim, rep.radical_dim, rep.m, rep.quotient_commutative, rep.split_as_km, rep)


def strict_part(t, algebra):
    """Coordinates (in ``algebra``'s basis) of the elements with zero diagonal after conjugation."""
    P = t.flag.matrix
    Pinv = P.inverse()
    F = algebra.field
    diags = []
    for b in algebra.elements:
        c = Pinv @ b @ P
        if not c.is_upper_triangular():
            raise NotTriangularForFlag("algebra element is not triangular for this flag")
        diags.append(c.diagonal())
    if not diags:
        return Subspace.zero(F, 0)
    D = Matrix.from_columns(F, diags, algebra.n)
    part = kernel(D)
    for r in part.basis:
        x = algebra.element(r)
        for b in algebra.elements:
            for prod in (x @ b, b @ x):
                co = algebra.coordinates(prod)
                if co is None or co not in part:
                    raise AssertionError("strictly triangular part is not an ideal")
    return part


def generator_products(generators, length):
    """All products of ``length`` generators (prefix-shared)."""
    level = list(generators)
    for _ in range(length - 1):
        level = [g @ w for w in level for g in generators]
    return level


def all_products_vanish(generators, length):
    """Depth-first check that every length-``length`` product is zero."""
    def walk(w, depth):
        if w.is_zero():
            return True
        if depth == length:
            return False
        return all(walk(g @ w, depth + 1) for g in generators)

    return all(walk(g, 1) for g in generators)


__all__ = [
    "Outcome", "Flag", "Triangularization", "Witness", "Verdict", "McCoyReport",
    "common_eigenvector", "common_kernel", "triangularize", "strict_triangularize",
    "replay_witness", "verify", "check_mccoy", "strict_part", "generator_products",
    "all_products_vanish", "DEFAULT_TUPLE_CAP",
]
