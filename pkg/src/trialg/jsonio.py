"""JSON encodings for matrices, problem documents, certificates and operators.

Scalars are strings: ``"p/q"`` or ``"n"`` over Q, decimal residues over F_p.
A field header is ``{"field": "Q"}`` or ``{"field": "Fp", "p": 5}``.
"""

import json
from dataclasses import dataclass

from .errors import ParseError
from .exactfield import FieldSpec
from .linalg import Matrix, Subspace
from .triangularize import Flag, Triangularization, Witness


def matrix_to_json(m):
    s = m.field.to_str
    return {"rows": m.rows, "cols": m.cols, "entries": [[s(x) for x in r] for r in m.data]}


def matrix_from_json(obj, field):
    try:
        rows, cols, entries = obj["rows"], obj["cols"], obj["entries"]
    except (KeyError, TypeError):
        raise ParseError(f"matrix object needs rows, cols, entries: {obj!r}") from None
    if not isinstance(entries, list) or len(entries) != rows or any(
            not isinstance(r, list) or len(r) != cols for r in entries):
        raise ParseError(f"entries do not match declared shape {rows}x{cols}")
    return Matrix(field, [[_scalar(field, x) for x in r] for r in entries], cols)


def _scalar(field, x):
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ParseError(f"scalar must be a string or integer, got {x!r}")
    return field.parse(str(x))


def vector_to_json(field, v):
    return [field.to_str(x) for x in v]


def vector_from_json(field, v):
    return tuple(_scalar(field, x) for x in v)


@dataclass
class ProblemDoc:
    field: FieldSpec
    n: int
    generators: list
    unital: bool = True
    strict: bool = False
    bound: int = 1000

    def to_json(self):
        out = dict(self.field.to_json())
        out["n"] = self.n
        out["generators"] = [matrix_to_json(g) for g in self.generators]
        out["options"] = {"unital": self.unital, "strict": self.strict, "bound": self.bound}
        return out

    def dumps(self):
        return dumps(self.to_json())


def parse_problem(obj, field_override=None):
    """Build a ProblemDoc from a decoded JSON object (or JSON text)."""
    if isinstance(obj, (str, bytes)):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict):
        raise ParseError("problem document must be a JSON object")
    field = field_override or FieldSpec.from_json(obj)
    gens_raw = obj.get("generators")
    if not isinstance(gens_raw, list):
        raise ParseError("'generators' must be a list of matrices")
    gens = [matrix_from_json(g, field) for g in gens_raw]
    n = obj.get("n")
    if n is None:
        if not gens:
            raise ParseError("'n' is required when there are no generators")
        n = gens[0].rows
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError(f"'n' must be a positive integer, got {n!r}")
    for g in gens:
        if g.shape != (n, n):
            raise ParseError(f"generator of shape {g.shape} in a document with n = {n}")
    opts = obj.get("options", {}) or {}
    if not isinstance(opts, dict):
        raise ParseError("'options' must be an object")
    bound = opts.get("bound", 1000)
    if not isinstance(bound, int) or bound < 1:
        raise ParseError(f"bound must be a positive integer, got {bound!r}")
    return ProblemDoc(field, n, gens, bool(opts.get("unital", True)), bool(opts.get("strict", False)), bound)


def triangularization_to_json(t):
    s = t.flag.field.to_str
    return {
        "flag": matrix_to_json(t.flag.matrix),
        "ordered_basis": [vector_to_json(t.flag.field, v) for v in t.flag.ordered_basis],
        "conjugated": [matrix_to_json(c) for c in t.conjugated],
        "strict": t.strict,
        "diagonal_map": [[s(x) for x in d] for d in t.diagonal_map],
    }


def triangularization_from_json(obj, field):
    try:
        P = matrix_from_json(obj["flag"], field)
        if not P.is_square:
            raise ParseError("flag matrix must be square")
        flag = Flag.from_vectors(field, P.columns())
        conj = [matrix_from_json(c, field) for c in obj["conjugated"]]
        diag = [[_scalar(field, x) for x in d] for d in obj["diagonal_map"]]
        return Triangularization(flag, conj, bool(obj["strict"]), diag)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from None


def witness_to_json(w):
    F = w.subspace.field
    return {
        "stage": w.stage,
        "kind": w.kind,
        "ambient_dim": w.subspace.ambient_dim,
        "subspace_basis": [vector_to_json(F, v) for v in w.subspace.basis],
        "induced": [matrix_to_json(m) for m in w.induced],
    }


def witness_from_json(obj, field):
    try:
        n = obj["ambient_dim"]
        basis = [vector_from_json(field, v) for v in obj["subspace_basis"]]
        induced = [matrix_from_json(m, field) for m in obj["induced"]]
        return Witness(obj["stage"], obj["kind"], Subspace(field, n, basis), induced)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed witness: {exc}") from None


def finsupp_to_json(op):
    s = op.field.to_str
    return {
        "id_scalar": s(op.id_scalar),
        "entries": [{"row": str(r), "col": str(c), "val": s(v)} for (r, c), v in sorted(op.entries.items())],
    }


def finsupp_from_json(obj, field):
    from .endosim import FinSuppOp, OrdIndex
    try:
        entries = {}
        for e in obj.get("entries", []):
            key = (OrdIndex.parse(e["row"]), OrdIndex.parse(e["col"]))
            entries[key] = _scalar(field, e["val"])
        return FinSuppOp(field, entries, _scalar(field, obj.get("id_scalar", "0")))
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"malformed operator: {exc}") from None


def dumps(obj):
    """Canonical JSON text: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"

