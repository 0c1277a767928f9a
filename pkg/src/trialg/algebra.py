"""Matrix algebras generated by a finite set, their radical and semisimple quotient."""

from dataclasses import dataclass, field as dc_field

from .errors import CharacteristicTooSmall, EmptyGenerators, FieldMismatch, NotAnIdeal, NotSquare, SizeMismatch
from .exactfield import splits_into_distinct_linear_factors
from .linalg import Matrix, QuotientMap, Subspace, _rref_rows, kernel, min_poly


def check_generators(generators, n=None):
    """Validate a generator list; returns ``(field, n)``."""
    generators = list(generators)
    if not generators:
        return None, n
    F = generators[0].field
    size = generators[0].rows
    for g in generators:
        if not g.is_square:
            raise NotSquare(f"generator of shape {g.shape}")
        if g.field != F:
            raise FieldMismatch(f"{g.field} vs {F}")
        if g.rows != size:
            raise SizeMismatch(f"{g.rows}x{g.rows} generator among {size}x{size}")
    if n is not None and n != size:
        raise SizeMismatch(f"declared n = {n} but generators are {size}x{size}")
    return F, size


class _Echelon:
    """Running RREF accumulator over vectorised matrices (membership only)."""

    def __init__(self, field):
        self.field = field
        self.rows = []  # (pivot, row with 1 at pivot)

    def residue(self, v):
        p = self.field.p
        v = list(v)
        for c, row in self.rows:
            f = v[c]
            if f:
                if p:
                    v = [(a - f * b) % p for a, b in zip(v, row)]
                else:
                    v = [a - f * b if b else a for a, b in zip(v, row)]
        return v

    def add(self, v):
        r = self.residue(v)
        piv = next((j for j, a in enumerate(r) if a != 0), None)
        if piv is None:
            return False
        inv = self.field.inv(r[piv])
        self.rows.append((piv, [self.field.mul(inv, a) for a in r]))
        return True


@dataclass
class AlgebraBasis:
    n: int
    elements: list
    unital: bool
    field: object
    _solver: tuple = dc_field(default=None, init=False, repr=False, compare=False)

    @property
    def dim(self):
        return len(self.elements)

    def element(self, coords):
        """The matrix sum(c_i * b_i)."""
        F = self.field
        acc = Matrix.zeros(F, self.n)
        for c, b in zip(coords, self.elements):
            if c:
                acc = acc + b.scale(c)
        return acc

    def _build_solver(self):
        F = self.field
        m = self.dim
        rows = [list(b.vectorize()) + [F.one() if i == j else F.zero() for j in range(m)]
                for i, b in enumerate(self.elements)]
        pivots = _rref_rows(F, rows, self.n * self.n)
        self._solver = (pivots, [r[self.n * self.n:] for r in rows])

    def coordinates(self, x):
        """Coordinates of matrix ``x`` in this basis, or None if ``x`` is outside the span."""
        if self._solver is None:
            self._build_solver()
        F = self.field
        pivots, E = self._solver
        v = x.vectorize()
        coords = [F.zero()] * self.dim
        for c, row in zip(pivots, E):
            f = v[c]
            if f:
                coords = [F.add(a, F.mul(f, b)) for a, b in zip(coords, row)]
        if self.element(coords) != x:
            return None
        return tuple(coords)

    def contains(self, x):
        return self.coordinates(x) is not None

    def is_closed(self):
        return all(self.contains(a @ b) for a in self.elements for b in self.elements)


def close_algebra(generators, unital=True, n=None, field=None):
    """Basis of the (unital) subalgebra generated by ``generators``.

    Breadth-first by word length: every newly accepted basis element is
    multiplied on the left by each generator, and independent products are
    appended.  The span of all words is reached when the queue empties.
    ``n`` and ``field`` are only needed when ``generators`` is empty.
    """
    generators = list(generators)
    F, n = check_generators(generators, n)
    if not generators:
        if not unital:
            raise EmptyGenerators("nonunital algebra needs at least one generator")
        if n is None or field is None:
            raise EmptyGenerators("matrix size and field unknown without generators")
        F = field
    acc = _Echelon(F)
    elements = []
    seeds = ([Matrix.identity(F, n)] if unital else []) + generators
    for s in seeds:
        if acc.add(s.vectorize()):
            elements.append(s)
    head = 0
    while head < len(elements):
        x = elements[head]
        head += 1
        for g in generators:
            y = g @ x
            if acc.add(y.vectorize()):
                elements.append(y)
    return AlgebraBasis(n, elements, unital, F)


def _check_char(field, n):
    p = field.characteristic
    if p and p <= n:
        raise CharacteristicTooSmall(
            f"trace-form radical needs characteristic 0 or p > {n}; got p = {p}"
        )


def gram_matrix(a):
    """G[i][j] = trace(b_i b_j), plus a trace row for nonunital algebras."""
    F = a.field
    n = a.n
    vecs = [b.vectorize() for b in a.elements]
    tvecs = [b.T.vectorize() for b in a.elements]
    p = F.p
    z = F.zero()
    rows = []
    for u in vecs:
        row = []
        for w in tvecs:
            s = sum((x * y for x, y in zip(u, w) if x and y), z)
            row.append(s % p if p else s)
        rows.append(tuple(row))
    if not a.unital:
        rows.append(tuple(b.trace() for b in a.elements))
    return Matrix(F, rows, a.dim) if rows else Matrix.zeros(F, 0, a.dim)


def radical(a):
    """Jacobson radical in algebra coordinates: {x : trace(x b) = 0 for every b}.

    Valid in characteristic 0 or p > n; smaller p raises CharacteristicTooSmall.
    """
    _check_char(a.field, a.n)
    if a.dim == 0:
        return Subspace.zero(a.field, 0)
    return kernel(gram_matrix(a))


@dataclass
class StructureConstants:
    """b_i b_j = sum_l table[i][j][l] b_l."""

    field: object
    dim: int
    table: tuple
    identity: tuple | None = None
    labels: tuple = ()

    def mul(self, x, y):
        F = self.field
        out = [F.zero()] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = F.mul(xi, yj)
                out = [F.add(o, F.mul(c, t)) for o, t in zip(out, self.table[i][j])]
        return tuple(out)

    def basis_vector(self, i):
        F = self.field
        return tuple(F.one() if j == i else F.zero() for j in range(self.dim))

    def left_mult_matrix(self, x):
        cols = [self.mul(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def is_associative(self):
        es = [self.basis_vector(i) for i in range(self.dim)]
        return all(self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
                   for a in es for b in es for c in es)

    def to_json(self):
        s = self.field.to_str
        return {
            "dim": self.dim,
            "labels": list(self.labels),
            "identity": None if self.identity is None else [s(x) for x in self.identity],
            "table": [[[s(x) for x in cell] for cell in row] for row in self.table],
        }


def _ideal_check(a, rad):
    for r in rad.basis:
        x = a.element(r)
        for b in a.elements:
            for prod in (x @ b, b @ x):
                c = a.coordinates(prod)
                if c is None or c not in rad:
                    return False
    return True


def quotient_structure(a, rad, check=True):
    """Structure constants of a / rad on the classes of the non-pivot basis elements."""
    if rad.ambient_dim != a.dim:
        raise SizeMismatch(f"subspace of k^{rad.ambient_dim} for a {a.dim}-dimensional algebra")
    if check and not _ideal_check(a, rad):
        raise NotAnIdeal("subspace is not a two-sided ideal of the algebra")
    qm = QuotientMap(a.dim, rad)
    idx = qm.complement_coords
    table = []
    for i in idx:
        row = []
        for j in idx:
            c = a.coordinates(a.elements[i] @ a.elements[j])
            row.append(qm.project(c))
        table.append(tuple(row))
    ident = None
    if a.unital:
        ident = qm.project(a.coordinates(Matrix.identity(a.field, a.n)))
    return StructureConstants(a.field, len(idx), tuple(table), ident, tuple(idx))


def is_commutative(q):
    return all(q.table[i][j] == q.table[j][i] for i in range(q.dim) for j in range(i + 1, q.dim))


def element_min_poly_in_quotient(q, coords):
    """Minimal polynomial of left multiplication by ``coords`` on q."""
    if len(coords) != q.dim:
        raise SizeMismatch(f"{len(coords)} coordinates for a {q.dim}-dimensional algebra")
    coords = tuple(q.field.coerce(c) for c in coords)
    return min_poly(q.left_mult_matrix(coords))


def split_as_km(q):
    """``(True, dim q)`` iff q is commutative and every basis element's minimal
    polynomial splits into distinct linear factors over the base field."""
    if not is_commutative(q):
        return False, None
    for i in range(q.dim):
        if not splits_into_distinct_linear_factors(element_min_poly_in_quotient(q, q.basis_vector(i))):
            return False, None
    return True, q.dim


def structure_radical(q):
    """Trace-form radical of q through its left regular representation."""
    _check_char(q.field, q.dim)
    mats = [q.left_mult_matrix(q.basis_vector(i)) for i in range(q.dim)]
    G = Matrix(q.field, [[(x @ y).trace() for y in mats] for x in mats], q.dim) if mats else None
    return kernel(G) if G is not None else Subspace.zero(q.field, 0)


@dataclass
class RadicalReport:
    algebra: AlgebraBasis
    radical: Subspace
    quotient: StructureConstants
    quotient_commutative: bool
    split_as_km: bool
    m: int

    @property
    def radical_dim(self):
        return self.radical.dim

    def radical_matrices(self):
        return [self.algebra.element(r) for r in self.radical.basis]

    def to_json(self):
        s = self.algebra.field.to_str
        from .jsonio import matrix_to_json
        return {
            "algebra_dim": self.algebra.dim,
            "radical_dim": self.radical.dim,
            "m": self.m,
            "quotient_commutative": self.quotient_commutative,
            "split_as_km": self.split_as_km,
            "radical_basis_coords": [[s(x) for x in r] for r in self.radical.basis],
            "radical_basis_matrices": [matrix_to_json(x) for x in self.radical_matrices()],
            "quotient": self.quotient.to_json(),
        }


def radical_report(a):
    rad = radical(a)
    q = quotient_structure(a, rad)
    comm = is_commutative(q)
    split, _ = split_as_km(q) if comm else (False, None)
    return RadicalReport(a, rad, q, comm, split, a.dim - rad.dim)
