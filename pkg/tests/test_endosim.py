import random

import pytest
from hypothesis import given, settings, strategies as st

from trialg.endosim import (
    INF, Escapes, FinSuppOp, FinVec, Invariant, Killed, Nat, OrdIndex, Survived, Top, apply,
    bounded_nilpotence_probe, compose, diag_map, geometric_series_check, idempotent_combination, is_strictly_triangular,
    is_triangular, lower_escape, one_dim_invariant_probe, orthogonal_idempotent, shift_operator,
    strictly_lower_units, subdiagonal_sequence,
)
from trialg.errors import NotTriangular, ParseError, ZeroVector
from trialg.exactfield import GF, QQ
from trialg.jsonio import finsupp_from_json, finsupp_to_json
from trialg.scenarios import demo_lower_tri, demo_non_iso, demo_shift

e = FinVec.basis
E = FinSuppOp.unit


def test_ordindex_order_and_parse():
    assert Nat(1) < Nat(2) < Nat(10**6) < Top(0) < Top(1)
    assert sorted([Top(1), Nat(3), INF, Nat(1)]) == [Nat(1), Nat(3), Top(0), Top(1)]
    assert OrdIndex.parse("n:3") == Nat(3) and OrdIndex.parse("inf:0") == INF
    assert str(Nat(4)) == "n:4"
    with pytest.raises(ParseError):
        OrdIndex.parse("x:1")
    with pytest.raises(ValueError):
        Nat(0)


def test_finvec_canonical_form():
    v = FinVec(QQ, {Nat(1): 0, Nat(2): 3})
    assert v.entries == {Nat(2): 3}
    assert (v + v.scale(-1)).is_zero()


def test_apply_examples():
    assert apply(E(2, 1), e(1)) == e(2)
    v = FinVec(QQ, {Nat(1): 2, INF: -1})
    assert apply(FinSuppOp.scalar(1), v) == v
    assert apply(shift_operator(), e(3)) == e(2)
    assert apply(shift_operator(), e(1)).is_zero()


def test_compose_examples():
    for n in (3, 5, 20):
        prod = E(2, 1)
        for k in range(2, n):
            prod = compose(E(k + 1, k), prod)
        assert prod == E(n, 1)
    assert compose(E(1, 2), FinSuppOp.zero()).is_zero()
    E1, E2 = orthogonal_idempotent(1), orthogonal_idempotent(2)
    assert compose(E1, E2).is_zero() and compose(E1, E1) == E1


def test_compose_with_identity_parts():
    # (2*1 + E12)(3*1 + E21) = 6*1 + 2 E21 + 3 E12 + E11
    got = compose(FinSuppOp.scalar(2) + E(1, 2), FinSuppOp.scalar(3) + E(2, 1))
    want = FinSuppOp(QQ, {(Nat(2), Nat(1)): 2, (Nat(1), Nat(2)): 3, (Nat(1), Nat(1)): 1}, 6)
    assert got == want


def test_triangularity_examples():
    assert is_triangular(E(1, 2)) and is_strictly_triangular(E(1, 2))
    Ei = orthogonal_idempotent(3)
    assert is_triangular(Ei) and not is_strictly_triangular(Ei)
    assert not is_triangular(E(2, 1))
    assert not is_strictly_triangular(FinSuppOp.scalar(1))


def test_probe_examples():
    res = bounded_nilpotence_probe(subdiagonal_sequence(), [e(1)], 50)
    assert isinstance(res, Survived) and res.witness == e(51)
    T = shift_operator()
    for m in range(1, 8):
        assert bounded_nilpotence_probe(lambda k: T, [e(m)], 100) == Killed(m)
    assert bounded_nilpotence_probe(lambda k: T, [e(m) for m in range(1, 8)], 100) == Killed(7)
    assert bounded_nilpotence_probe(lambda k: FinSuppOp.zero(), [e(1)], 5) == Killed(1)
    with pytest.raises(ValueError):
        bounded_nilpotence_probe(lambda k: T, [e(1)], 0)


def test_lower_chain_survives_every_bound_up_to_1000():
    # one long run: the chain vector after k steps is e_{k+1}, so every N <= 1000 survives with e_{N+1}
    seq = subdiagonal_sequence()
    v = e(1)
    for N in range(1, 1001):
        v = apply(seq(N), v)
        assert v == e(N + 1)
    for N in (1, 2, 17, 999, 1000):
        res = bounded_nilpotence_probe(seq, [e(1)], N)
        assert isinstance(res, Survived) and res.witness == e(N + 1) and res.steps == N


def test_one_dim_probe_examples():
    diag_ops = [FinSuppOp(QQ, {(Nat(i), Nat(i)): i}) for i in range(1, 5)]
    assert one_dim_invariant_probe(diag_ops, e(2)) == Invariant()
    assert one_dim_invariant_probe([], e(2)) == Invariant()
    v = FinVec(QQ, {Nat(1): 1, Nat(3): 7})
    res = one_dim_invariant_probe(strictly_lower_units(4), v)
    assert isinstance(res, Escapes) and res.op == E(4, 3) and res.image == FinVec(QQ, {Nat(4): 7})
    assert lower_escape(v) == E(4, 3)
    with pytest.raises(ZeroVector):
        one_dim_invariant_probe([], FinVec(QQ))


def test_strictly_lower_family_always_escapes():
    rng = random.Random(3)
    for _ in range(50):
        top = rng.randint(1, 8)
        coeffs = {Nat(i): rng.randint(-3, 3) for i in range(1, top)}
        coeffs[Nat(top)] = rng.choice([-2, -1, 1, 2, 5])
        v = FinVec(QQ, coeffs)
        res = one_dim_invariant_probe(strictly_lower_units(top + 1), v)
        assert isinstance(res, Escapes)


def test_diag_map_examples():
    op = idempotent_combination(5, [1, 2, 3])
    assert diag_map(op, [1, 2, 3, INF]) == [6, 7, 8, 5]
    assert diag_map(FinSuppOp.scalar(1), [1, 2, INF]) == [1, 1, 1]
    with pytest.raises(NotTriangular):
        diag_map(E(2, 1), [1])


# -- properties ---------------------------------------------------------------

IDX = [Nat(i) for i in range(1, 6)] + [Top(0), Top(1)]
idx = st.sampled_from(IDX)
vals = st.integers(-4, 4)


def ops(triangular=None):
    def build(entries, a):
        if triangular == "strict":
            entries = {(r, c): v for (r, c), v in entries.items() if r < c}
            a = 0
        elif triangular:
            entries = {(r, c): v for (r, c), v in entries.items() if r <= c}
        return FinSuppOp(QQ, entries, a)
    return st.builds(build, st.dictionaries(st.tuples(idx, idx), vals, max_size=6), vals)


@settings(max_examples=100, deadline=None)
@given(a=ops(), b=ops(), c=ops())
def test_compose_associative(a, b, c):
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@settings(max_examples=100, deadline=None)
@given(a=ops(), b=ops(), v=st.dictionaries(idx, vals, max_size=4))
def test_apply_respects_composition_and_linearity(a, b, v):
    v = FinVec(QQ, v)
    assert apply(compose(a, b), v) == apply(a, apply(b, v))
    assert apply(a + b, v) == apply(a, v) + apply(b, v)


@settings(max_examples=100, deadline=None)
@given(a=ops("strict"), b=ops("strict"))
def test_strictly_triangular_closed_under_products(a, b):
    assert is_strictly_triangular(compose(a, b))


@settings(max_examples=100, deadline=None)
@given(a=ops(True), b=ops(True))
def test_diag_map_additive_and_multiplicative(a, b):
    assert is_triangular(compose(a, b))
    da, db = diag_map(a, IDX), diag_map(b, IDX)
    assert diag_map(compose(a, b), IDX) == [x * y for x, y in zip(da, db)]
    assert diag_map(a + b, IDX) == [x + y for x, y in zip(da, db)]


def test_idempotent_relations():
    Es = [orthogonal_idempotent(i) for i in range(1, 8)]
    for i, Ei in enumerate(Es):
        for j, Ej in enumerate(Es):
            assert compose(Ei, Ej) == (Ei if i == j else FinSuppOp.zero())


def test_idempotents_over_fp():
    F = GF(7)
    E1 = orthogonal_idempotent(1, F)
    assert compose(E1, E1) == E1
    assert diag_map(idempotent_combination(6, [3], F), [1, INF]) == [2, 6]


def test_geometric_series_windows():
    rng = random.Random(4)
    window = [FinVec.basis(i) for i in range(1, 6)] + [FinVec(QQ, {INF: 1})]
    for _ in range(30):
        S = FinSuppOp(QQ, {(Nat(i), Nat(j)): rng.randint(-2, 2) for i in range(1, 5) for j in range(1, 5)})
        T = FinSuppOp(QQ, {(Nat(i), INF): rng.randint(-2, 2) for i in range(1, 5)}, rng.randint(-1, 1))
        assert geometric_series_check(compose(S, T), rng.randint(1, 6), window)


def test_finsupp_json_roundtrip():
    op = idempotent_combination("1/2", [1, -3])
    js = finsupp_to_json(op)
    assert js["id_scalar"] == "1/2"
    assert {"row": "n:1", "col": "inf:0", "val": "1"} in js["entries"]
    assert finsupp_from_json(js, QQ) == op


def test_scenarios():
    lt = demo_lower_tri(bound=1000)
    assert lt["ok"] and lt["probe"]["witness_index"] == 1001
    sh = demo_shift()
    assert sh["ok"] and [k["killed_in"] for k in sh["kills"]] == list(range(1, 11))
    ni = demo_non_iso()
    assert ni["ok"] and ni["trials"] == 100
