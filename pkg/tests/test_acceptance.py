"""Acceptance criteria, one test each.  The terminal summary prints a PASS/FAIL line per criterion.

Run just this suite with ``pytest tests/test_acceptance.py -v``.
"""

import functools
import io
import json
import os
import pathlib
import random
import subprocess
import sys

import pytest

from trialg import jsonio
from trialg.algebra import close_algebra, radical
from trialg.cli import main
from trialg.exactfield import GF, QQ
from trialg.instances import FAMILIES, conjugate_all, random_instance, random_invertible, random_upper
from trialg.linalg import Matrix, Subspace
from trialg.scenarios import demo_lower_tri, demo_non_iso, demo_shift
from trialg.triangularize import (
    Flag, Triangularization, all_products_vanish, check_mccoy, strict_part, strict_triangularize, triangularize, verify,
)

HERE = pathlib.Path(__file__).parent
acceptance = pytest.mark.acceptance


@functools.lru_cache(maxsize=None)
def mccoy_corpus():
    """500 instances: n in 2..5, Q and F_7, the four families, each run through both deciders."""
    rng = random.Random(20240601)
    out = []
    for k in range(500):
        field = QQ if k % 2 == 0 else GF(7)
        n = 2 + (k // 2) % 4
        family = FAMILIES[(k // 8) % 4]
        gens = random_instance(rng, field, n, family)
        out.append((family, field, n, gens, triangularize(gens), check_mccoy(gens)))
    return out


@functools.lru_cache(maxsize=None)
def levitzki_corpus():
    rng = random.Random(777)
    out = []
    for _ in range(200):
        field = rng.choice([QQ, GF(7), GF(11)])
        n = rng.randint(2, 6)
        g = rng.randint(1, 3)
        Q = random_invertible(rng, field, n)
        gens = conjugate_all(Q, [random_upper(rng, field, n, strict=True) for _ in range(g)])
        out.append((n, gens, strict_triangularize(gens)))
    return out


@acceptance("1. constructive verdict equals structural verdict on 500 instances")
def test_criterion_1_mccoy_equivalence():
    corpus = mccoy_corpus()
    assert len(corpus) == 500
    mismatches = [(fam, str(F), n) for fam, F, n, _, v, r in corpus if v.ok != r.verdict]
    assert mismatches == []
    # the corpus should exercise both answers in every family that can produce them
    assert {v.ok for *_, v, _ in corpus} == {True, False}


@acceptance("2. Levitzki: 200 strictly-upper conjugates strictly triangularize, length-n products vanish")
def test_criterion_2_levitzki():
    corpus = levitzki_corpus()
    assert len(corpus) == 200
    for n, gens, v in corpus:
        assert v.ok and verify(v.triangularization, gens)
        assert all_products_vanish(gens, n)


def power_span_dims(mats, n):
    """dim span(M^k) for k = 1..n, M^k the products of k elements of mats."""
    if not mats:
        return [0]
    F, size = mats[0].field, mats[0].rows
    level = mats
    dims = []
    for _ in range(n):
        span = Subspace(F, size * size, [m.vectorize() for m in level])
        dims.append(span.dim)
        level = [Matrix(F, [b[i * size:(i + 1) * size] for i in range(size)]) @ m
                 for b in span.basis for m in mats]
    return dims


@acceptance("3. strict part equals trace-form radical; radical elements satisfy x^n = 0")
def test_criterion_3_radical_identity():
    checked = 0
    for _, F, n, gens, v, _ in mccoy_corpus():
        if not v.ok:
            continue
        a = close_algebra(gens, unital=True)
        rad = radical(a)
        assert strict_part(v.triangularization, a) == rad
        mats = [a.element(r) for r in rad.basis]
        # rad^n = 0 as a space of products, so x^n = 0 for every x in the radical
        assert power_span_dims(mats, n)[-1] == 0
        for x in mats:
            assert x.power(n).is_zero()
        checked += 1
    assert checked > 0


@acceptance("4. m <= n on every split instance")
def test_criterion_4_m_bound():
    split = [(n, r.m) for _, _, n, _, _, r in mccoy_corpus() if r.verdict]
    assert split
    assert [s for s in split if s[1] > s[0]] == []


def _rational_roots_of_x2_plus_1():
    # rational root theorem by hand: candidates +-1
    return [c for c in (1, -1) if c * c + 1 == 0]


@acceptance("5. rotation: NO over Q, YES with m = 2 over F_5 (goldened reports)")
def test_criterion_5_field_sensitivity():
    assert _rational_roots_of_x2_plus_1() == []
    assert [x for x in range(5) if (x * x + 1) % 5 == 0] == [2, 3]
    rot = HERE / "data" / "rotation.json"
    for field, code_expected in (("Q", 1), ("F5", 0)):
        for cmd in ("mccoy", "triangularize"):
            out = io.StringIO()
            code = main([cmd, "--json", "--field", field, str(rot)], stdout=out)
            assert code == code_expected
            assert out.getvalue() == (HERE / "golden" / f"rotation_{cmd}_{field}.json").read_text()
    r_q = check_mccoy([Matrix(QQ, [[0, -1], [1, 0]])])
    r_5 = check_mccoy([Matrix(GF(5), [[0, -1], [1, 0]])])
    assert not r_q.verdict and r_q.commutative
    assert r_5.verdict and r_5.m == 2


@acceptance("6. diagonal of a product is the product of diagonals on 200 triangular pairs")
def test_criterion_6_diagonal_homomorphism():
    rng = random.Random(66)
    for k in range(200):
        F = QQ if k % 2 else GF(7)
        n = rng.randint(1, 6)
        S, T = random_upper(rng, F, n), random_upper(rng, F, n)
        assert list((S @ T).diagonal()) == [F.mul(a, b) for a, b in zip(S.diagonal(), T.diagonal())]
        # the same through a hidden basis: the certificate's diagonal map is multiplicative
        Q = random_invertible(rng, F, n)
        hs, ht = conjugate_all(Q, [S, T])
        t = triangularize([hs, ht, hs @ ht]).triangularization
        ds, dt, dst = t.diagonal_map
        assert list(dst) == [F.mul(a, b) for a, b in zip(ds, dt)]


@acceptance("7. infinite-dimensional goldens: lower-tri, shift, non-iso")
def test_criterion_7_infinite_goldens():
    lt = demo_lower_tri(bound=1000)
    assert lt["probe"]["result"] == "survived" and lt["probe"]["witness_index"] == 1001
    assert lt["probe"]["witness"] == {"n:1001": "1"}
    assert lt["ok"]
    sh = demo_shift()
    assert all(k["killed_in"] == k["m"] for k in sh["kills"]) and sh["ok"]
    ni = demo_non_iso(trials=100)
    assert ni["relations_ok"] and ni["diag_ok"] and ni["trials"] == 100


def _tampered(t, gens, kind):
    """A modified copy of certificate t, or None when this tampering would not change anything."""
    F = t.flag.field
    if kind == "swap_flag":
        basis = list(t.flag.ordered_basis)
        if len(basis) < 2:
            return None
        basis[0], basis[-1] = basis[-1], basis[0]
        fl = Flag.from_vectors(F, basis)
        P = fl.matrix
        conj = [P.inverse() @ g @ P for g in gens]
        if all(c.is_upper_triangular() for c in conj):
            return None
        return Triangularization(fl, conj, t.strict, [list(c.diagonal()) for c in conj])
    if kind == "diag_edit":
        dm = [list(d) for d in t.diagonal_map]
        dm[0][-1] = F.add(dm[0][-1], F.one())
        return Triangularization(t.flag, t.conjugated, t.strict, dm)
    if kind == "row_swap":
        c = t.conjugated[0]
        if c.rows < 2 or c.data[0] == c.data[-1]:
            return None
        rows = [list(r) for r in c.data]
        rows[0], rows[-1] = rows[-1], rows[0]
        return Triangularization(t.flag, [Matrix(F, rows)] + list(t.conjugated[1:]), t.strict, t.diagonal_map)
    raise ValueError(kind)


@acceptance("8. verify accepts every emitted certificate and rejects 50 tampered ones")
def test_criterion_8_certificate_soundness():
    emitted = [(g, v.triangularization) for *_, g, v, _ in mccoy_corpus() if v.ok]
    emitted += [(g, v.triangularization) for _, g, v in levitzki_corpus()]
    assert all(verify(t, g) for g, t in emitted)
    kinds = ["swap_flag", "diag_edit", "row_swap"]
    tampered = []
    i = 0
    for g, t in emitted:
        bad = _tampered(t, g, kinds[i % 3])
        if bad is not None:
            tampered.append((kinds[i % 3], g, bad))
            i += 1
        if len(tampered) == 50:
            break
    assert len(tampered) == 50
    assert {k for k, *_ in tampered} == set(kinds)
    rejected = [not verify(bad, g) for _, g, bad in tampered]
    assert all(rejected), f"{rejected.count(False)} tampered certificates accepted"


def _cli_bytes(argv, stdin_text, hashseed):
    env = dict(os.environ, PYTHONHASHSEED=str(hashseed))
    proc = subprocess.run([sys.executable, "-m", "trialg"] + argv, input=stdin_text, capture_output=True,
                          text=True, env=env)
    return proc.returncode, proc.stdout


@acceptance("9. identical inputs give byte-identical JSON reports across runs")
def test_criterion_9_determinism():
    rng = random.Random(9)
    docs = []
    for k, family in enumerate(FAMILIES):
        F = QQ if k % 2 else GF(7)
        gens = random_instance(rng, F, 3, family)
        docs.append(jsonio.dumps(jsonio.ProblemDoc(F, 3, gens).to_json()))
    runs = []
    for doc in docs:
        for cmd in (["triangularize"], ["triangularize", "--strict"], ["mccoy"], ["radical"], ["closure"]):
            runs.append((cmd + ["--json"], doc))
    runs.append((["demo", "non-iso", "--json"], ""))
    runs.append((["demo", "lower-tri", "--bound", "50", "--json"], ""))
    for argv, doc in runs:
        first = _cli_bytes(argv, doc, 1)
        second = _cli_bytes(argv, doc, 2)
        assert first == second, argv
        assert first[1].strip(), argv
        json.loads(first[1])
