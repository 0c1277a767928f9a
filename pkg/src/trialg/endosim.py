"""Finitely supported endomorphisms of a space with basis indexed by N followed by a finite tail.

Indices are :class:`OrdIndex` values ``Nat(1) < Nat(2) < ... < Top(0) < Top(1) < ...``.
An operator is ``a * 1 + (finite matrix part)``; the identity multiple lets
operators such as ``a*1 + sum a_i E_i`` be represented exactly.

Topological nilpotence is only ever probed up to an explicit bound: a
surviving vector is a witness, never a proof.
"""

from dataclasses import dataclass, field as dc_field
from functools import total_ordering

from .errors import NotTriangular, ParseError, ZeroVector
from .exactfield import QQ


@total_ordering
@dataclass(frozen=True)
class OrdIndex:
    top: bool
    i: int

    def __post_init__(self):
        if not self.top and self.i < 1:
            raise ValueError("natural indices start at 1")
        if self.top and self.i < 0:
            raise ValueError("tail positions start at 0")

    @property
    def key(self):
        return (1 if self.top else 0, self.i)

    def __lt__(self, other):
        return self.key < other.key

    def __str__(self):
        return f"inf:{self.i}" if self.top else f"n:{self.i}"

    __repr__ = __str__

    @classmethod
    def parse(cls, text):
        try:
            tag, num = str(text).split(":")
            if tag == "n":
                return cls(False, int(num))
            if tag == "inf":
                return cls(True, int(num))
        except ValueError:
            pass
        raise ParseError(f"bad index {text!r}; expected 'n:i' or 'inf:t'")


def Nat(i):
    return OrdIndex(False, i)


def Top(t=0):
    return OrdIndex(True, t)


INF = Top(0)


def _clean(field, entries):
    return {k: field.coerce(v) for k, v in entries.items() if field.coerce(v) != 0}


@dataclass(frozen=True)
class FinVec:
    field: object
    entries: dict = dc_field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", _clean(self.field, self.entries))

    @classmethod
    def basis(cls, idx, field=QQ):
        if isinstance(idx, int):
            idx = Nat(idx)
        return cls(field, {idx: 1})

    def is_zero(self):
        return not self.entries

    def support(self):
        return sorted(self.entries)

    def scale(self, c):
        F = self.field
        return FinVec(F, {k: F.mul(c, v) for k, v in self.entries.items()})

    def __add__(self, other):
        F = self.field
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = F.add(out.get(k, F.zero()), v)
        return FinVec(F, out)

    def __eq__(self, other):
        return isinstance(other, FinVec) and self.field == other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field, frozenset(self.entries.items())))

    def __str__(self):
        if not self.entries:
            return "0"
        return " + ".join(f"{v}*e[{k}]" for k, v in sorted(self.entries.items()))


@dataclass(frozen=True)
class FinSuppOp:
    """``id_scalar * 1`` plus the finitely many entries ``(row, col) -> value``."""

    field: object
    entries: dict = dc_field(default_factory=dict)
    id_scalar: object = 0

    def __post_init__(self):
        object.__setattr__(self, "entries", _clean(self.field, self.entries))
        object.__setattr__(self, "id_scalar", self.field.coerce(self.id_scalar))

    @classmethod
    def unit(cls, row, col, field=QQ):
        """Matrix unit E_{row,col}; plain ints are natural indices."""
        row = Nat(row) if isinstance(row, int) else row
        col = Nat(col) if isinstance(col, int) else col
        return cls(field, {(row, col): 1})

    @classmethod
    def scalar(cls, a, field=QQ):
        return cls(field, {}, a)

    @classmethod
    def zero(cls, field=QQ):
        return cls(field)

    def __eq__(self, other):
        return (isinstance(other, FinSuppOp) and self.field == other.field
                and self.entries == other.entries and self.id_scalar == other.id_scalar)

    def __hash__(self):
        return hash((self.field, frozenset(self.entries.items()), self.id_scalar))

    def __add__(self, other):
        F = self.field
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = F.add(out.get(k, F.zero()), v)
        return FinSuppOp(F, out, F.add(self.id_scalar, other.id_scalar))

    def scale(self, c):
        F = self.field
        c = F.coerce(c)
        return FinSuppOp(F, {k: F.mul(c, v) for k, v in self.entries.items()}, F.mul(c, self.id_scalar))

    def is_zero(self):
        return not self.entries and self.id_scalar == 0

    def indices(self):
        out = set()
        for r, c in self.entries:
            out.update((r, c))
        return out

    def __str__(self):
        parts = [] if self.id_scalar == 0 else [f"{self.id_scalar}*1"]
        parts += [f"{v}*E[{r},{c}]" for (r, c), v in sorted(self.entries.items())]
        return " + ".join(parts) or "0"


def apply(op, v):
    """op(v), exactly.  Non-matrix operators such as the shift are called directly."""
    if not isinstance(op, FinSuppOp):
        return op(v)
    F = op.field
    out = {}
    if op.id_scalar != 0:
        out = {k: F.mul(op.id_scalar, x) for k, x in v.entries.items()}
    for (r, c), a in op.entries.items():
        x = v.entries.get(c)
        if x:
            out[r] = F.add(out.get(r, F.zero()), F.mul(a, x))
    return FinVec(F, out)


def compose(a, b):
    """a ∘ b: (s*1 + A)(t*1 + B) = st*1 + sB + tA + AB."""
    F = a.field
    out = {}

    def bump(key, val):
        out[key] = F.add(out.get(key, F.zero()), val)

    for k, v in b.entries.items():
        if a.id_scalar != 0:
            bump(k, F.mul(a.id_scalar, v))
    for k, v in a.entries.items():
        if b.id_scalar != 0:
            bump(k, F.mul(b.id_scalar, v))
    by_row = {}
    for (r, c), v in b.entries.items():
        by_row.setdefault(r, []).append((c, v))
    for (r, m), x in a.entries.items():
        for c, y in by_row.get(m, ()):
            bump((r, c), F.mul(x, y))
    return FinSuppOp(F, out, F.mul(a.id_scalar, b.id_scalar))


def is_triangular(op):
    return all(r <= c for r, c in op.entries)


def is_strictly_triangular(op):
    return op.id_scalar == 0 and all(r < c for r, c in op.entries)


def diag_map(op, window):
    """Diagonal entries at the window indices (identity part plus explicit (i,i) entries)."""
    if not is_triangular(op):
        raise NotTriangular(f"{op} is not triangular")
    F = op.field
    out = []
    for idx in window:
        idx = Nat(idx) if isinstance(idx, int) else idx
        out.append(F.add(op.id_scalar, op.entries.get((idx, idx), F.zero())))
    return out


@dataclass(frozen=True)
class Killed:
    steps: int


@dataclass(frozen=True)
class Survived:
    start: FinVec
    witness: FinVec
    steps: int


def bounded_nilpotence_probe(seq, window, bound):
    """Iterate v_{k+1} = seq(k)(v_k), k = 1, 2, ..., for each window vector.

    Returns Killed(n), n the largest number of steps any window vector needed
    to reach zero, or Survived for the first window vector still nonzero
    after ``bound`` steps.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    worst = 0
    for v0 in window:
        v = v0
        k = 0
        while not v.is_zero():
            if k == bound:
                return Survived(v0, v, bound)
            k += 1
            v = apply(seq(k), v)
        worst = max(worst, k)
    return Killed(worst)


@dataclass(frozen=True)
class Invariant:
    pass


@dataclass(frozen=True)
class Escapes:
    op: FinSuppOp
    image: FinVec


def _in_span(w, v):
    """Is w a scalar multiple of v (v nonzero)?"""
    if w.is_zero():
        return True
    if set(w.entries) != set(v.entries):
        return False
    F = v.field
    k0 = next(iter(v.entries))
    c = F.div(w.entries[k0], v.entries[k0])
    return all(w.entries[k] == F.mul(c, x) for k, x in v.entries.items())


def one_dim_invariant_probe(generators, v):
    """Invariant() if every generator maps v into span(v), else the first escape."""
    if v.is_zero():
        raise ZeroVector("span of the zero vector is not a line")
    for g in generators:
        image = apply(g, v)
        if not _in_span(image, v):
            return Escapes(g, image)
    return Invariant()


# -- the three scenarios -------------------------------------------------------

def subdiagonal_sequence(field=QQ):
    """k -> E_{k+1,k}: each factor is nilpotent, the chain never dies on e_1."""
    return lambda k: FinSuppOp.unit(k + 1, k, field)


def shift_operator(field=QQ):
    """T(v_i) = v_{i-1}, T(v_1) = 0, as a callable rather than a finite matrix."""
    return _Shift(field)


class _Shift:
    # infinitely supported, so it only acts on vectors; never stored as entries
    def __init__(self, field):
        self.field = field

    def __call__(self, v):
        return FinVec(self.field, {Nat(k.i - 1): x for k, x in v.entries.items()
                                   if not k.top and k.i > 1})

    def truncated(self, size):
        """Finite section acting like the shift on e_1..e_size."""
        return FinSuppOp(self.field, {(Nat(i - 1), Nat(i)): 1 for i in range(2, size + 1)})


def strictly_lower_units(size, field=QQ):
    """All E_{i,j}, i > j, with i <= size, ordered by descending (i, j)."""
    return [FinSuppOp.unit(i, j, field) for i in range(size, 1, -1) for j in range(i - 1, 0, -1)]


def lower_escape(v):
    """The generator E_{n+1,n} (n = top natural support of v) that moves v off its line."""
    nats = [k.i for k in v.entries if not k.top]
    n = max(nats)
    return FinSuppOp.unit(n + 1, n, v.field)


def orthogonal_idempotent(i, field=QQ):
    """E_i with E_i(v_i) = E_i(v_inf) = v_i and zero elsewhere."""
    return FinSuppOp(field, {(Nat(i), Nat(i)): 1, (Nat(i), INF): 1})


def idempotent_combination(a, coeffs, field=QQ):
    """a*1 + sum_i coeffs[i-1] * E_i."""
    op = FinSuppOp.scalar(a, field)
    for i, c in enumerate(coeffs, start=1):
        op = op + orthogonal_idempotent(i, field).scale(c)
    return op


def neumann_partial_sum(x, terms):
    """sum_{i < terms} x^i."""
    F = x.field
    acc = FinSuppOp.zero(F)
    power = FinSuppOp.scalar(1, F)
    for _ in range(terms):
        acc = acc + power
        power = compose(x, power)
    return acc


def geometric_series_check(x, terms, window):
    """(1 - x) * sum_{i<terms} x^i == 1 - x^terms on each window vector."""
    F = x.field
    one = FinSuppOp.scalar(1, F)
    lhs = compose(one + x.scale(-1), neumann_partial_sum(x, terms))
    xn = one
    for _ in range(terms):
        xn = compose(x, xn)
    rhs = one + xn.scale(-1)
    return all(apply(lhs, v) == apply(rhs, v) for v in window)
