import io
import json
import pathlib
import subprocess
import sys

import pytest

from trialg import jsonio
from trialg.cli import main, run
from trialg.exactfield import GF, QQ
from trialg.jsonio import ProblemDoc, parse_problem
from trialg.linalg import Matrix

HERE = pathlib.Path(__file__).parent
GOLDEN = HERE / "golden"
ROTATION = HERE / "data" / "rotation.json"


def doc_text(field, gens, **opts):
    return jsonio.dumps(ProblemDoc(field, gens[0].rows if gens else opts.pop("n"), gens, **opts).to_json())


def invoke(argv, stdin_text=""):
    out = io.StringIO()
    code = main(argv, stdin=io.StringIO(stdin_text), stdout=out)
    return code, out.getvalue()


def invoke_json(argv, stdin_text=""):
    code, text = invoke(argv + ["--json"], stdin_text)
    return code, json.loads(text)


E12 = Matrix.unit(QQ, 2, 0, 1)
E21 = Matrix.unit(QQ, 2, 1, 0)


def test_strict_single_unit_yes():
    code, rep = invoke_json(["triangularize", "--strict"], doc_text(QQ, [E12]))
    assert code == 0 and rep["verdict"] == "yes" and rep["certificate"]["strict"]


def test_matrix_units_no_with_stage_zero_witness():
    code, rep = invoke_json(["triangularize"], doc_text(QQ, [E12, E21]))
    assert code == 1 and rep["witness"]["stage"] == 0 and rep["certificate"] is None


def test_malformed_entry_exit_2():
    bad = '{"field": "Q", "n": 1, "generators": [{"rows": 1, "cols": 1, "entries": [["1/0"]]}]}'
    code, rep = invoke_json(["triangularize"], bad)
    assert code == 2 and rep["error"] == "ParseError"


def test_other_errors_exit_2():
    assert invoke(["triangularize"], "not json")[0] == 2
    assert invoke(["triangularize", str(HERE / "no_such_file.json")])[0] == 2
    assert invoke(["bogus-command"])[0] == 2
    mismatch = '{"field": "Q", "n": 2, "generators": [{"rows": 1, "cols": 1, "entries": [["1"]]}]}'
    assert invoke(["triangularize"], mismatch)[0] == 2


def test_mccoy_rotation_goldens():
    for field, code_expected in (("Q", 1), ("F5", 0)):
        code, text = invoke(["mccoy", "--json", "--field", field, str(ROTATION)])
        assert code == code_expected
        assert text == (GOLDEN / f"rotation_mccoy_{field}.json").read_text()
    rep = json.loads((GOLDEN / "rotation_mccoy_Q.json").read_text())
    assert rep["verdict"] == "no" and rep["message"] == "quotient commutative but not split over Q"
    rep = json.loads((GOLDEN / "rotation_mccoy_F5.json").read_text())
    assert rep["verdict"] == "yes" and rep["m"] == 2 and rep["agrees_with_triangularize"]


def test_triangularize_rotation_goldens():
    for field, code_expected in (("Q", 1), ("F5", 0)):
        code, text = invoke(["triangularize", "--json", "--field", field, str(ROTATION)])
        assert code == code_expected
        assert text == (GOLDEN / f"rotation_triangularize_{field}.json").read_text()


def test_rotation_f5_eigenvector_by_hand():
    # x^2 + 1 = (x - 2)(x - 3) mod 5, so (1, 3) is an eigenvector for 2: R(1,3) = (-3, 1) = (2, 1) = 2(1, 3)
    rep = json.loads((GOLDEN / "rotation_triangularize_F5.json").read_text())
    assert rep["certificate"]["ordered_basis"][0] == ["1", "3"]
    assert rep["certificate"]["diagonal_map"] == [["2", "3"]]


def test_char_guard_exit_2():
    F2 = GF(2)
    code, rep = invoke_json(["mccoy"], doc_text(F2, [Matrix.unit(F2, 3, 0, 1)]))
    assert code == 2 and rep["message"].startswith("characteristic guard")


def test_radical_and_closure_commands():
    ups = [Matrix.unit(QQ, 2, 0, 0), Matrix.unit(QQ, 2, 0, 1)]
    code, rep = invoke_json(["radical"], doc_text(QQ, ups))
    assert code == 0 and rep["algebra_dim"] == 3 and rep["radical_dim"] == 1 and rep["m"] == 2
    code, rep = invoke_json(["closure"], doc_text(QQ, [E12]))
    assert code == 0 and rep["dim"] == 2 and rep["unital"]
    code, rep = invoke_json(["closure", "--nonunital"], doc_text(QQ, [E12]))
    assert rep["dim"] == 1 and not rep["unital"]


def test_verify_roundtrip(tmp_path):
    A = Matrix(QQ, [[1, 1, 0], [0, 2, 1], [1, 0, 3]])
    B = Matrix(QQ, [[2, 0, 0], [1, 2, 0], [0, 0, 2]])
    for gens in ([Matrix(QQ, [[1, 2], [0, 3]]), E12], [E12, E21], [A], [B]):
        code, text = invoke(["triangularize", "--json"], doc_text(QQ, gens))
        path = tmp_path / "rep.json"
        path.write_text(text)
        vcode, vrep = invoke_json(["verify", str(path)])
        assert vcode == 0 and vrep["valid"]
    # tamper with a certificate: swap the conjugated rows of the first generator
    code, text = invoke(["triangularize", "--json"], doc_text(QQ, [Matrix(QQ, [[1, 2], [0, 3]])]))
    rep = json.loads(text)
    rep["certificate"]["conjugated"][0]["entries"].reverse()
    vcode, vrep = invoke_json(["verify"], json.dumps(rep))
    assert vcode == 1 and not vrep["valid"]
    # tamper with a witness: claim the rotation has no eigenvector over F5
    rep = json.loads((GOLDEN / "rotation_triangularize_Q.json").read_text())
    rep["field"], rep["p"] = "Fp", 5
    vcode, vrep = invoke_json(["verify"], json.dumps(rep))
    assert vcode == 1


def test_verify_requires_payload():
    assert invoke(["verify"], json.dumps(ProblemDoc(QQ, 2, [E12]).to_json()))[0] == 2


def test_problem_doc_roundtrip():
    docs = [
        ProblemDoc(QQ, 2, [Matrix(QQ, [["1/2", -3], [0, "7/5"]])], unital=False, strict=True, bound=7),
        ProblemDoc(GF(7), 3, [Matrix.unit(GF(7), 3, 2, 0), Matrix.identity(GF(7), 3)]),
        ProblemDoc(QQ, 4, []),
    ]
    for d in docs:
        assert parse_problem(d.to_json()) == d
        assert parse_problem(jsonio.dumps(d.to_json())) == d


def test_field_override_reinterprets_entries():
    d = parse_problem(ROTATION.read_text(), field_override=GF(5))
    assert d.field == GF(5) and d.generators[0] == Matrix(GF(5), [[0, 4], [1, 0]])


def test_text_output_and_timing():
    code, text = invoke(["triangularize"], doc_text(QQ, [E12]))
    assert code == 0 and text.startswith("verdict: yes")
    code, rep = invoke_json(["triangularize", "--timing"], doc_text(QQ, [E12]))
    assert "timing_s" in rep
    code, rep = invoke_json(["triangularize"], doc_text(QQ, [E12]))
    assert "timing_s" not in rep


@pytest.mark.parametrize("name", ["lower-tri", "shift", "non-iso"])
def test_demos(name):
    code, rep = invoke_json(["demo", name])
    assert code == 0 and rep["ok"]
    if name == "lower-tri":
        assert rep["probe"]["result"] == "survived" and rep["probe"]["witness_index"] == 1001
    if name == "shift":
        assert [k["killed_in"] for k in rep["kills"]] == [k["m"] for k in rep["kills"]]


def test_demo_bound_flag():
    code, rep = invoke_json(["demo", "lower-tri", "--bound", "25"])
    assert code == 0 and rep["probe"]["witness_index"] == 26


def test_exit_code_contract_is_total():
    inputs = ["", "{}", "[]", '{"field": "Q"}', '{"field": "Fp", "p": 4, "n": 1, "generators": []}',
              '{"field": "Q", "n": 1, "generators": [{"rows": 1, "cols": 1, "entries": [[true]]}]}']
    for cmd in ("triangularize", "mccoy", "radical", "closure", "verify"):
        for text in inputs:
            code = invoke([cmd], text)[0]
            assert code in (0, 1, 2)


def test_console_entry_point_subprocess():
    proc = subprocess.run([sys.executable, "-m", "trialg", "mccoy", "--json", "--field", "F5", str(ROTATION)],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert proc.stdout == (GOLDEN / "rotation_mccoy_F5.json").read_text()


def test_run_returns_report_object():
    rep, code, as_json = run(["demo", "shift", "--json"])
    assert code == 0 and as_json and rep["command"] == "demo"
