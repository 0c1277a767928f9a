"""Exact scalars over Q and prime fields, and univariate polynomials.

Field elements are carried as plain values: ``gmpy2.mpq`` for Q and ``int``
residues in ``[0, p)`` for F_p.  A :class:`FieldSpec` knows how to combine
them.  :class:`Scalar` wraps a value together with its field for standalone
arithmetic with mismatch checking.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import gmpy2
from gmpy2 import mpq

from .errors import DivisionByZero, FieldMismatch, ParseError, ResourceExceeded, ZeroPolynomial

DEFAULT_ROOT_CANDIDATE_CAP = 10**6


@dataclass(frozen=True)
class FieldSpec:
    kind: str  # "Q" or "Fp"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise ValueError("Q carries no modulus")
        elif self.kind == "Fp":
            if self.p is None or self.p < 2 or not gmpy2.is_prime(self.p):
                raise ValueError(f"modulus {self.p!r} is not prime")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def rationals(cls):
        return cls("Q")

    @classmethod
    def prime(cls, p):
        return cls("Fp", int(p))

    @property
    def characteristic(self):
        return 0 if self.p is None else self.p

    @property
    def is_prime_field(self):
        return self.p is not None

    def __str__(self):
        return "Q" if self.p is None else f"F{self.p}"

    # -- element handling -------------------------------------------------

    def coerce(self, x):
        """Canonical field value for an int, Fraction, mpq, Scalar or string."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field} value used in {self}")
            return x.value
        if isinstance(x, str):
            return self.parse(x)
        if self.p is None:
            if isinstance(x, float):
                raise TypeError("floating point values are not exact field elements")
            return mpq(x)
        if isinstance(x, (Fraction, type(mpq()))):
            num, den = int(x.numerator) % self.p, int(x.denominator) % self.p
            if den == 0:
                raise DivisionByZero(f"denominator vanishes mod {self.p}")
            return num * pow(den, -1, self.p) % self.p
        if isinstance(x, bool) or not isinstance(x, (int, type(gmpy2.mpz()))):
            raise TypeError(f"cannot coerce {type(x).__name__} into {self}")
        return int(x) % self.p

    def parse(self, text):
        s = str(text).strip()
        try:
            if "/" in s:
                num_s, den_s = s.split("/")
                num, den = int(num_s), int(den_s)
            else:
                num, den = int(s), 1
        except ValueError:
            raise ParseError(f"not an exact scalar: {text!r}") from None
        if den == 0:
            raise ParseError(f"zero denominator in {text!r}")
        if self.p is None:
            return mpq(num, den)
        if den % self.p == 0:
            raise ParseError(f"denominator of {text!r} vanishes mod {self.p}")
        return num * pow(den, -1, self.p) % self.p

    def to_str(self, x):
        return str(x)

    def zero(self):
        return mpq(0) if self.p is None else 0

    def one(self):
        return mpq(1) if self.p is None else 1

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / a if self.p is None else pow(a, -1, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def sort_key(self, a):
        """Fixed total order: numeric over Q, residue order over F_p."""
        return a

    def elements(self):
        if self.p is None:
            raise ValueError("Q is infinite")
        return range(self.p)

    def to_json(self):
        return {"field": "Q"} if self.p is None else {"field": "Fp", "p": self.p}

    @classmethod
    def from_json(cls, obj):
        try:
            kind = obj["field"]
            if kind == "Q":
                return cls.rationals()
            if kind == "Fp":
                return cls.prime(obj["p"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad field header: {obj!r}") from exc
        raise ParseError(f"bad field header: {obj!r}")

    @classmethod
    def from_string(cls, text):
        """Parse ``Q``, ``F5``, ``Fp:5`` or ``GF(5)``."""
        s = text.strip()
        if s in ("Q", "QQ"):
            return cls.rationals()
        for prefix in ("Fp:", "GF(", "F"):
            if s.startswith(prefix):
                try:
                    return cls.prime(int(s[len(prefix):].rstrip(")")))
                except ValueError as exc:
                    raise ParseError(f"bad field {text!r}: {exc}") from None
        raise ParseError(f"bad field {text!r}")


QQ = FieldSpec.rationals()


def GF(p):
    return FieldSpec.prime(p)


@dataclass(frozen=True)
class Scalar:
    """A field element bound to its field; operators check field agreement."""

    field: FieldSpec
    value: object

    def __post_init__(self):
        object.__setattr__(self, "value", self.field.coerce(self.value))

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other.value
        return self.field.coerce(other)

    def __add__(self, other):
        return Scalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return Scalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Scalar(self.field, self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return Scalar(self.field, self.field.div(self._other(other), self.value))

    def __neg__(self):
        return Scalar(self.field, self.field.neg(self.value))

    def inv(self):
        return Scalar(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return self.value == other.value
        try:
            return self.value == self.field.coerce(other)
        except (TypeError, DivisionByZero):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __lt__(self, other):
        return self.field.sort_key(self.value) < self.field.sort_key(self._other(other))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return self.field.to_str(self.value)

    def __repr__(self):
        return f"Scalar({self.field}, {self})"


class Poly:
    """Univariate polynomial, coefficients lowest degree first, trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        c = [field.coerce(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def x(cls, field):
        return cls(field, [0, 1])

    @classmethod
    def constant(cls, field, a):
        return cls(field, [a])

    @classmethod
    def from_roots(cls, field, roots):
        f = cls(field, [1])
        for r in roots:
            f = f * cls(field, [field.neg(field.coerce(r)), 1])
        return f

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero()

    def monic(self):
        if self.is_zero():
            raise ZeroPolynomial("cannot normalise the zero polynomial")
        li = self.field.inv(self.lead)
        return Poly(self.field, [self.field.mul(li, a) for a in self.coeffs])

    def _check(self, other):
        if not isinstance(other, Poly):
            other = Poly(self.field, [other])
        if other.field != self.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")
        return other

    def __add__(self, other):
        other = self._check(other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (F.zero(),) * (n - len(self.coeffs))
        b = other.coeffs + (F.zero(),) * (n - len(other.coeffs))
        return Poly(F, [F.add(x, y) for x, y in zip(a, b)])

    def __neg__(self):
        return Poly(self.field, [self.field.neg(a) for a in self.coeffs])

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly(F, [])
        out = [F.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = self._check(other)
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        dq = other.degree
        li = F.inv(other.lead)
        quot = [F.zero()] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = F.mul(c, li)
            quot[k - dq] = q
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] = F.sub(rem[k - dq + j], F.mul(q, b))
        return Poly(F, quot), Poly(F, rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        F = self.field
        x = F.coerce(x)
        acc = F.zero()
        for a in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), a)
        return acc

    def gcd(self, other):
        a, b = self, self._check(other)
        while not b.is_zero():
            a, b = b, a % b
        return a if a.is_zero() else a.monic()

    def lcm(self, other):
        other = self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.field, [])
        return ((self * other) // self.gcd(other)).monic()

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        return f"Poly({self.field}, {self})"

    def __str__(self):
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            s = str(a)
            if mono and s == "1":
                s = ""
            elif mono and s == "-1":
                s = "-"
            elif mono:
                s = f"({s})*" if "/" in s or s.startswith("-") else f"{s}*"
            terms.append(s + mono)
        return " + ".join(terms).replace("+ -", "- ")


def _divisors(n, cap):
    n = abs(int(n))
    if isqrt(n) > cap:
        raise ResourceExceeded(f"divisor search for {n} exceeds cap {cap}")
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def _primitive_integer_coeffs(f):
    den = 1
    for a in f.coeffs:
        d = int(a.denominator)
        den = den * d // gcd(den, d)
    ints = [int(a * den) for a in f.coeffs]
    g = 0
    for a in ints:
        g = gcd(g, a)
    return [a // g for a in ints]


def roots_in_field(f, cap=DEFAULT_ROOT_CANDIDATE_CAP):
    """Roots of ``f`` inside its field, as ``(root, multiplicity)`` in ascending order.

    Over Q the rational root theorem is applied to the primitive integer form;
    over F_p every residue is tried.  Multiplicities come from repeated
    division by ``x - r``.
    """
    if f.is_zero():
        raise ZeroPolynomial("roots of the zero polynomial")
    F = f.field
    if F.is_prime_field:
        candidates = [r for r in F.elements() if f(r) == 0]
    else:
        candidates = set()
        if f.coeffs[0] == 0:
            candidates.add(mpq(0))
        # strip the x^k factor so the constant term is nonzero
        k = next(i for i, a in enumerate(f.coeffs) if a != 0)
        g = Poly(F, f.coeffs[k:])
        if g.degree > 0:
            ints = _primitive_integer_coeffs(g)
            ps = _divisors(ints[0], cap)
            qs = _divisors(ints[-1], cap)
            if 2 * len(ps) * len(qs) > cap:
                raise ResourceExceeded(
                    f"{2 * len(ps) * len(qs)} rational root candidates exceed cap {cap}"
                )
            for p_ in ps:
                for q_ in qs:
                    for r in (mpq(p_, q_), mpq(-p_, q_)):
                        if r not in candidates and g(r) == 0:
                            candidates.add(r)
        candidates = sorted(candidates)
    out = []
    for r in candidates:
        lin = Poly(F, [F.neg(r), 1])
        mult, g = 0, f
        while True:
            q, rem = divmod(g, lin)
            if not rem.is_zero():
                break
            mult, g = mult + 1, q
        out.append((r, mult))
    return out


def splits_into_distinct_linear_factors(f, cap=DEFAULT_ROOT_CANDIDATE_CAP):
    roots = roots_in_field(f, cap)
    return len(roots) == f.degree and all(m == 1 for _, m in roots)
