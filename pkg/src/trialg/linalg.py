"""Dense exact matrices, canonical subspaces, quotients and minimal polynomials.

Vectors are tuples of field values.  A :class:`Subspace` always stores its
basis in reduced row-echelon form, so two subspaces are equal as sets exactly
when their stored bases are equal.
"""

from .errors import AmbientMismatch, FieldMismatch, NotSquare, Singular, SizeMismatch
from .exactfield import Poly


class Matrix:
    """Immutable dense matrix over a :class:`~trialg.exactfield.FieldSpec`."""

    __slots__ = ("field", "rows", "cols", "data", "_hash")

    def __init__(self, field, data, cols=None):
        data = tuple(tuple(field.coerce(x) for x in row) for row in data)
        if cols is None:
            if not data:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(data[0])
        if any(len(r) != cols for r in data):
            raise SizeMismatch("ragged matrix rows")
        self.field = field
        self.rows = len(data)
        self.cols = cols
        self.data = data
        self._hash = None

    @classmethod
    def _raw(cls, field, data, cols):
        # trusted constructor: entries already canonical
        m = object.__new__(cls)
        m.field, m.data, m.rows, m.cols, m._hash = field, data, len(data), cols, None
        return m

    @classmethod
    def zeros(cls, field, rows, cols=None):
        cols = rows if cols is None else cols
        z = field.zero()
        return cls._raw(field, tuple((z,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero(), field.one()
        return cls._raw(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def unit(cls, field, n, i, j):
        """Matrix unit E_ij (0-based indices)."""
        z, o = field.zero(), field.one()
        return cls._raw(field, tuple(tuple(o if (r, c) == (i, j) else z for c in range(n)) for r in range(n)), n)

    @classmethod
    def diag(cls, field, values):
        n = len(values)
        z = field.zero()
        vals = [field.coerce(v) for v in values]
        return cls._raw(field, tuple(tuple(vals[i] if i == j else z for j in range(n)) for i in range(n)), n)

    @classmethod
    def from_columns(cls, field, columns, rows=None):
        columns = [tuple(c) for c in columns]
        if rows is None:
            rows = len(columns[0])
        return cls._raw(field, tuple(tuple(c[i] for c in columns) for i in range(rows)), len(columns))

    @classmethod
    def from_vector(cls, field, vec, n):
        """Inverse of :meth:`vectorize` for an n x n matrix."""
        return cls._raw(field, tuple(tuple(vec[i * n:(i + 1) * n]) for i in range(n)), n)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.data)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def vectorize(self):
        return tuple(x for r in self.data for x in r)

    def transpose(self):
        return Matrix._raw(self.field, tuple(zip(*self.data)) if self.rows else (), self.rows)

    T = property(transpose)

    def _same(self, other):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other):
        self._same(other)
        if other.shape != self.shape:
            raise SizeMismatch(f"{self.shape} + {other.shape}")
        add = self.field.add
        return Matrix._raw(self.field, tuple(tuple(add(a, b) for a, b in zip(r, s)) for r, s in zip(self.data, other.data)), self.cols)

    def __sub__(self, other):
        self._same(other)
        if other.shape != self.shape:
            raise SizeMismatch(f"{self.shape} - {other.shape}")
        sub = self.field.sub
        return Matrix._raw(self.field, tuple(tuple(sub(a, b) for a, b in zip(r, s)) for r, s in zip(self.data, other.data)), self.cols)

    def __neg__(self):
        neg = self.field.neg
        return Matrix._raw(self.field, tuple(tuple(neg(a) for a in r) for r in self.data), self.cols)

    def scale(self, c):
        F = self.field
        c = F.coerce(c)
        return Matrix._raw(F, tuple(tuple(F.mul(c, a) for a in r) for r in self.data), self.cols)

    def __matmul__(self, other):
        self._same(other)
        if self.cols != other.rows:
            raise SizeMismatch(f"{self.shape} @ {other.shape}")
        p = self.field.p
        z = self.field.zero()
        cols = other.T.data if other.rows else ((),) * other.cols
        out = []
        for r in self.data:
            row = []
            for c in cols:
                s = sum((a * b for a, b in zip(r, c) if a and b), z)
                row.append(s % p if p else s)
            out.append(tuple(row))
        return Matrix._raw(self.field, tuple(out), other.cols)

    def apply(self, vec):
        if len(vec) != self.cols:
            raise SizeMismatch(f"{self.shape} applied to length {len(vec)}")
        p = self.field.p
        z = self.field.zero()
        out = []
        for r in self.data:
            s = sum((a * b for a, b in zip(r, vec) if a and b), z)
            out.append(s % p if p else s)
        return tuple(out)

    def power(self, k):
        if not self.is_square:
            raise NotSquare(f"power of {self.shape} matrix")
        result = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def trace(self):
        if not self.is_square:
            raise NotSquare(f"trace of {self.shape} matrix")
        F = self.field
        t = F.zero()
        for i in range(self.rows):
            t = F.add(t, self.data[i][i])
        return t

    def diagonal(self):
        return tuple(self.data[i][i] for i in range(min(self.rows, self.cols)))

    def is_zero(self):
        return all(a == 0 for r in self.data for a in r)

    def is_upper_triangular(self, strict=False):
        for i, r in enumerate(self.data):
            upto = i + 1 if strict else i
            if any(r[j] != 0 for j in range(min(upto, self.cols))):
                return False
        return True

    def inverse(self):
        if not self.is_square:
            raise NotSquare(f"inverse of {self.shape} matrix")
        n = self.rows
        F = self.field
        aug = Matrix._raw(F, tuple(r + Matrix.identity(F, n).data[i] for i, r in enumerate(self.data)), 2 * n)
        red, rank, pivots = rref(aug)
        if pivots[:n] != list(range(n)) or rank < n:
            raise Singular("matrix is not invertible")
        return Matrix._raw(F, tuple(r[n:] for r in red.data[:n]), n)

    def det(self):
        if not self.is_square:
            raise NotSquare(f"determinant of {self.shape} matrix")
        F = self.field
        rows = [list(r) for r in self.data]
        n = self.rows
        d = F.one()
        for c in range(n):
            piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
            if piv is None:
                return F.zero()
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                d = F.neg(d)
            d = F.mul(d, rows[c][c])
            inv = F.inv(rows[c][c])
            for i in range(c + 1, n):
                f = F.mul(rows[i][c], inv)
                if f:
                    rows[i] = [F.sub(a, F.mul(f, b)) for a, b in zip(rows[i], rows[c])]
        return d

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.cols == other.cols and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.cols, self.data))
        return self._hash

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in r) for r in self.data)
        return f"Matrix({self.field}, [{body}])"

    def pretty(self):
        cells = [[str(a) for a in r] for r in self.data]
        w = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + " ".join(c.rjust(w) for c in r) + " ]" for r in cells)


def _rref_rows(field, rows, ncols):
    """RREF of a list of mutable rows in place; returns pivot columns."""
    p = field.p
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        if p:
            prow = [a * inv % p for a in rows[r]]
        else:
            prow = [a * inv for a in rows[r]]
        rows[r] = prow
        for i in range(nrows):
            if i != r:
                f = rows[i][c]
                if f:
                    if p:
                        rows[i] = [(a - f * b) % p for a, b in zip(rows[i], prow)]
                    else:
                        rows[i] = [a - f * b if b else a for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m):
    """Reduced row-echelon form: ``(reduced, rank, pivot_cols)``."""
    rows = [list(r) for r in m.data]
    pivots = _rref_rows(m.field, rows, m.cols)
    return Matrix._raw(m.field, tuple(tuple(r) for r in rows), m.cols), len(pivots), pivots


class Subspace:
    """Subspace of field^n held as a canonical RREF basis (tuple of row tuples)."""

    __slots__ = ("field", "ambient_dim", "basis", "pivots")

    def __init__(self, field, ambient_dim, vectors=(), _canonical=False):
        self.field = field
        self.ambient_dim = ambient_dim
        if _canonical:
            self.basis = tuple(vectors)
            self.pivots = [next(j for j, a in enumerate(r) if a != 0) for r in self.basis]
            return
        rows = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise AmbientMismatch(f"vector of length {len(v)} in dimension {ambient_dim}")
            rows.append([field.coerce(a) for a in v])
        pivots = _rref_rows(field, rows, ambient_dim)
        self.basis = tuple(tuple(r) for r in rows[: len(pivots)])
        self.pivots = pivots

    @classmethod
    def zero(cls, field, n):
        return cls(field, n, (), _canonical=True)

    @classmethod
    def full(cls, field, n):
        return cls(field, n, Matrix.identity(field, n).data, _canonical=True)

    @property
    def dim(self):
        return len(self.basis)

    def basis_matrix(self):
        return Matrix._raw(self.field, self.basis, self.ambient_dim)

    def _same(self, other):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        if other.ambient_dim != self.ambient_dim:
            raise AmbientMismatch(f"dimension {self.ambient_dim} vs {other.ambient_dim}")

    def reduce(self, v):
        """Remainder of ``v`` after clearing this subspace's pivot coordinates."""
        p = self.field.p
        v = list(v)
        for row, c in zip(self.basis, self.pivots):
            f = v[c]
            if f:
                if p:
                    v = [(a - f * b) % p for a, b in zip(v, row)]
                else:
                    v = [a - f * b if b else a for a, b in zip(v, row)]
        return tuple(v)

    def coordinates(self, v):
        """Coefficients of ``v`` in the RREF basis, or None if ``v`` is outside."""
        if any(self.reduce(v)):
            return None
        return tuple(v[c] for c in self.pivots)

    def __contains__(self, v):
        return not any(self.reduce(v))

    def contains_subspace(self, other):
        self._same(other)
        return all(v in self for v in other.basis)

    def __add__(self, other):
        self._same(other)
        return Subspace(self.field, self.ambient_dim, self.basis + other.basis)

    def intersect(self, other):
        return intersect(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.field == other.field and self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.field, self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace({self.field}, n={self.ambient_dim}, dim={self.dim})"


def kernel(m):
    """Null space {v : m v = 0} with canonical basis."""
    red, rank, pivots = rref(m)
    F = m.field
    free = [j for j in range(m.cols) if j not in set(pivots)]
    vecs = []
    for f in free:
        v = [F.zero()] * m.cols
        v[f] = F.one()
        for row, c in zip(red.data, pivots):
            v[c] = F.neg(row[f])
        vecs.append(v)
    return Subspace(F, m.cols, vecs)


def subspace_sum_and_intersection(a, b):
    """Zassenhaus: RREF of [[A, A], [B, 0]] gives a + b and a ∩ b together."""
    a._same(b)
    F, n = a.field, a.ambient_dim
    zero = (F.zero(),) * n
    rows = [list(r + r) for r in a.basis] + [list(r + zero) for r in b.basis]
    pivots = _rref_rows(F, rows, 2 * n)
    total, inter = [], []
    for r, c in zip(rows, pivots):
        if c < n:
            total.append(r[:n])
        else:
            inter.append(r[n:])
    return Subspace(F, n, total), Subspace(F, n, inter)


def intersect(a, b):
    return subspace_sum_and_intersection(a, b)[1]


def intersect_all(subspaces, field=None, n=None):
    subspaces = list(subspaces)
    if not subspaces:
        return Subspace.full(field, n)
    out = subspaces[0]
    for s in subspaces[1:]:
        if out.dim == 0:
            break
        out = intersect(out, s)
    return out


class QuotientMap:
    """V -> V/W realised on the complement spanned by W's non-pivot coordinates."""

    def __init__(self, ambient_dim, w):
        if w.ambient_dim != ambient_dim:
            raise AmbientMismatch(f"subspace of dimension {w.ambient_dim} in ambient {ambient_dim}")
        self.field = w.field
        self.ambient_dim = ambient_dim
        self.subspace = w
        pivots = set(w.pivots)
        self.complement_coords = [j for j in range(ambient_dim) if j not in pivots]

    @property
    def dim(self):
        return len(self.complement_coords)

    def complement_basis(self):
        I = Matrix.identity(self.field, self.ambient_dim)
        return [I.data[j] for j in self.complement_coords]

    def project(self, v):
        r = self.subspace.reduce(v)
        return tuple(r[j] for j in self.complement_coords)

    def lift(self, c):
        v = [self.field.zero()] * self.ambient_dim
        for j, a in zip(self.complement_coords, c):
            v[j] = a
        return tuple(v)

    def project_matrix(self):
        cols = [self.project(e) for e in Matrix.identity(self.field, self.ambient_dim).data]
        return Matrix.from_columns(self.field, cols, self.dim) if cols else Matrix.zeros(self.field, self.dim, 0)

    def lift_matrix(self):
        F = self.field
        if not self.dim:
            return Matrix._raw(F, tuple(() for _ in range(self.ambient_dim)), 0)
        return Matrix.from_columns(F, [self.lift(e) for e in Matrix.identity(F, self.dim).data], self.ambient_dim)

    def induce(self, t):
        """Matrix of v + W -> t(v) + W on the complement basis (t must preserve W)."""
        if t.shape != (self.ambient_dim, self.ambient_dim):
            raise SizeMismatch(f"{t.shape} map on a {self.ambient_dim}-dimensional space")
        F = self.field
        if not self.dim:
            return Matrix._raw(F, (), 0)
        cols = [self.project(t.apply(self.lift(e))) for e in Matrix.identity(F, self.dim).data]
        return Matrix.from_columns(F, cols, self.dim)


def quotient(ambient_dim, w):
    return QuotientMap(ambient_dim, w)


class _Independence:
    """Incremental echelon basis that records how each row combines the inputs."""

    def __init__(self, field, n):
        self.field = field
        self.n = n
        self.rows = []  # (pivot, normalised row, combination over inputs)
        self.count = 0

    def reduce(self, v):
        F = self.field
        v = list(v)
        comb = [F.zero()] * self.count
        for piv, row, rc in self.rows:
            f = v[piv]
            if f:
                v = [F.sub(a, F.mul(f, b)) for a, b in zip(v, row)]
                comb = [F.sub(a, F.mul(f, b)) for a, b in zip(comb, rc)]
        return v, comb

    def add(self, v):
        """Insert v; returns None if independent, else coefficients expressing v."""
        F = self.field
        rem, comb = self.reduce(v)
        piv = next((j for j, a in enumerate(rem) if a != 0), None)
        if piv is None:
            # v - sum(comb-reduction) = 0, so v = -comb
            return [F.neg(a) for a in comb]
        inv = F.inv(rem[piv])
        self.count += 1
        comb = comb + [F.one()]
        self.rows = [(p, r, c + [F.zero()]) for p, r, c in self.rows]
        self.rows.append((piv, [F.mul(inv, a) for a in rem], [F.mul(inv, a) for a in comb]))
        return None


def min_poly(m):
    """Monic minimal polynomial as the lcm of the Krylov annihilators of e_1..e_n."""
    if not m.is_square:
        raise NotSquare(f"minimal polynomial of {m.shape} matrix")
    F = m.field
    n = m.rows
    result = Poly(F, [1])
    for e in Matrix.identity(F, n).data:
        chain = _Independence(F, n)
        v = e
        while True:
            coeffs = chain.add(v)
            if coeffs is not None:
                break
            v = m.apply(v)
        local = Poly(F, [F.neg(c) for c in coeffs] + [F.one()])
        result = result.lcm(local)
    return result


def poly_eval_matrix(f, m):
    """Horner evaluation f(m)."""
    F = m.field
    n = m.rows
    acc = Matrix.zeros(F, n)
    for a in reversed(f.coeffs):
        acc = acc @ m + Matrix.identity(F, n).scale(a)
    return acc


def conjugate(p, t):
    """p^{-1} t p."""
    if p.shape != t.shape or not t.is_square:
        raise SizeMismatch(f"conjugating {t.shape} by {p.shape}")
    return p.inverse() @ t @ p
