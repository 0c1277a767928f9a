"""Command-line front end.

    trialg triangularize [--strict] [doc.json]
    trialg mccoy [doc.json]
    trialg radical [doc.json]
    trialg closure [--nonunital] [doc.json]
    trialg demo {lower-tri,non-iso,shift}
    trialg verify report.json

Input documents are read from the file argument or stdin.  Exit codes:
0 = yes / valid, 1 = no / rejected, 2 = error.
"""

import argparse
import json
import sys
import time

from . import jsonio
from .algebra import close_algebra, radical_report
from .errors import CharacteristicTooSmall, ParseError, TrialgError
from .exactfield import FieldSpec
from .scenarios import DEMOS, run_demo
from .triangularize import check_mccoy, replay_witness, strict_triangularize, triangularize, verify

EXIT_YES, EXIT_NO, EXIT_ERROR = 0, 1, 2


def _doc_header(command, doc):
    return {"command": command, **doc.field.to_json(), "n": doc.n,
            "generators": [jsonio.matrix_to_json(g) for g in doc.generators]}


def cmd_triangularize(doc, strict=None):
    strict = doc.strict if strict is None else strict
    run = strict_triangularize if strict else triangularize
    v = run(doc.generators, n=doc.n, field=doc.field)
    rep = _doc_header("triangularize", doc)
    rep["strict"] = strict
    rep["outcome"] = v.outcome.value
    if v.ok:
        # never report success without an independent re-check
        if not verify(v.triangularization, doc.generators):
            raise AssertionError("engine produced a certificate that does not verify")
        rep["verdict"] = "yes"
        rep["certificate"] = jsonio.triangularization_to_json(v.triangularization)
        rep["witness"] = None
        return rep, EXIT_YES
    rep["verdict"] = "no"
    rep["certificate"] = None
    rep["witness"] = jsonio.witness_to_json(v.witness)
    return rep, EXIT_NO


def _mccoy_message(r, field):
    if r.split:
        return f"quotient splits as {field}^{r.m}"
    if r.commutative:
        return f"quotient commutative but not split over {field}"
    return "quotient not commutative"


def cmd_mccoy(doc):
    r = check_mccoy(doc.generators, n=doc.n, field=doc.field)
    tri = triangularize(doc.generators, n=doc.n, field=doc.field)
    rep = _doc_header("mccoy", doc)
    rep.update({
        "algebra_dim": r.algebra_dim,
        "radical_dim": r.radical_dim,
        "m": r.m,
        "quotient_commutative": r.commutative,
        "split_as_km": r.split,
        "verdict": "yes" if r.split else "no",
        "message": _mccoy_message(r, doc.field),
        "agrees_with_triangularize": tri.ok == r.split,
    })
    return rep, EXIT_YES if r.split else EXIT_NO


def cmd_radical(doc):
    a = close_algebra(doc.generators, unital=True, n=doc.n, field=doc.field)
    rep = _doc_header("radical", doc)
    rep.update(radical_report(a).to_json())
    return rep, EXIT_YES


def cmd_closure(doc, nonunital=False):
    unital = doc.unital and not nonunital
    a = close_algebra(doc.generators, unital=unital, n=doc.n, field=doc.field)
    rep = _doc_header("closure", doc)
    rep.update({"unital": unital, "dim": a.dim, "basis": [jsonio.matrix_to_json(b) for b in a.elements]})
    return rep, EXIT_YES


def cmd_demo(name, bound=1000):
    rep = run_demo(name, bound=bound)
    rep["command"] = "demo"
    return rep, EXIT_YES if rep["ok"] else EXIT_NO


def cmd_verify(report):
    """Re-check a triangularize report without trusting the engine that produced it."""
    if not isinstance(report, dict):
        raise ParseError("report must be a JSON object")
    doc = jsonio.parse_problem(report)
    out = {"command": "verify"}
    if report.get("certificate"):
        t = jsonio.triangularization_from_json(report["certificate"], doc.field)
        ok = verify(t, doc.generators)
        out.update({"kind": "certificate", "valid": ok})
    elif report.get("witness"):
        w = jsonio.witness_from_json(report["witness"], doc.field)
        ok = replay_witness(w) and _witness_matches(w, doc)
        out.update({"kind": "witness", "valid": ok})
    else:
        raise ParseError("report carries neither a certificate nor a witness")
    return out, EXIT_YES if out["valid"] else EXIT_NO


def _witness_matches(w, doc):
    # the recorded stage must really be an invariant subspace with the stated induced maps
    from .linalg import QuotientMap
    for g in doc.generators:
        if any(g.apply(v) not in w.subspace for v in w.subspace.basis):
            return False
    qm = QuotientMap(doc.n, w.subspace)
    return [qm.induce(g) for g in doc.generators] == list(w.induced)


def _render_text(rep):
    lines = []
    cmd = rep.get("command")
    if "error" in rep:
        lines.append(f"error ({rep['error']}): {rep['message']}")
    elif cmd == "triangularize":
        lines.append(f"verdict: {rep['verdict']} ({rep['outcome']})")
        if rep["certificate"]:
            lines.append("flag P (columns v_1..v_n):")
            lines += ["  " + " ".join(r) for r in rep["certificate"]["flag"]["entries"]]
            for i, c in enumerate(rep["certificate"]["conjugated"]):
                lines.append(f"P^-1 T{i + 1} P:")
                lines += ["  " + " ".join(r) for r in c["entries"]]
        else:
            w = rep["witness"]
            lines.append(f"no common {'kernel vector' if w['kind'] == 'kernel' else 'eigenvector'} "
                         f"at stage {w['stage']} (invariant subspace of dim {len(w['subspace_basis'])})")
    elif cmd == "mccoy":
        lines.append(f"verdict: {rep['verdict']} -- {rep['message']}")
        lines.append(f"algebra dim {rep['algebra_dim']}, radical dim {rep['radical_dim']}, m = {rep['m']}")
        lines.append(f"agrees with triangularize: {rep['agrees_with_triangularize']}")
    elif cmd == "radical":
        lines.append(f"algebra dim {rep['algebra_dim']}, radical dim {rep['radical_dim']}, m = {rep['m']}")
        lines.append(f"quotient commutative: {rep['quotient_commutative']}, split: {rep['split_as_km']}")
    elif cmd == "closure":
        lines.append(f"{'unital' if rep['unital'] else 'nonunital'} algebra of dimension {rep['dim']}")
    elif cmd == "demo":
        lines.append(f"demo {rep['demo']}: {'all checks passed' if rep['ok'] else 'CHECK FAILED'}")
        if rep["demo"] == "lower-tri":
            p = rep["probe"]
            lines.append(f"  probe {p['result']} after {p['steps']} steps, witness {p.get('witness')}")
        elif rep["demo"] == "shift":
            lines += [f"  e_{k['m']} killed in {k['killed_in']} steps" for k in rep["kills"]]
        else:
            lines.append(f"  {rep['relations_checked']} idempotent relations, {rep['trials']} diag_map trials")
    elif cmd == "verify":
        lines.append(f"{rep['kind']}: {'valid' if rep['valid'] else 'REJECTED'}")
    return "\n".join(lines) + "\n"


def build_parser():
    ap = argparse.ArgumentParser(prog="trialg", description="Exact simultaneous triangularization of matrix sets.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="override the document field: Q, F5, Fp:5")
    common.add_argument("--bound", type=int, default=None, help="probe bound N for demos")
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--timing", action="store_true", help="include wall time in the report")
    sub = ap.add_subparsers(dest="command", required=True)
    p = sub.add_parser("triangularize", parents=[common])
    p.add_argument("--strict", action="store_true")
    p.add_argument("input", nargs="?")
    for name in ("mccoy", "radical"):
        sub.add_parser(name, parents=[common]).add_argument("input", nargs="?")
    p = sub.add_parser("closure", parents=[common])
    p.add_argument("--nonunital", action="store_true")
    p.add_argument("input", nargs="?")
    sub.add_parser("demo", parents=[common]).add_argument("name", choices=sorted(DEMOS))
    sub.add_parser("verify", parents=[common]).add_argument("input", nargs="?")
    return ap


def _read(path, stdin):
    if path and path != "-":
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    return stdin.read()


def _load_json(text):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def run(argv, stdin=None):
    """Run one command; returns ``(report, exit_code, as_json)``."""
    stdin = sys.stdin if stdin is None else stdin
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_ERROR
        return {"error": "UsageError", "message": "bad arguments"}, (EXIT_ERROR if code else 0), False
    as_json = args.json
    t0 = time.perf_counter()
    try:
        override = FieldSpec.from_string(args.field) if args.field else None
        if args.command == "demo":
            rep, code = cmd_demo(args.name, bound=args.bound or 1000)
        elif args.command == "verify":
            rep, code = cmd_verify(_load_json(_read(args.input, stdin)))
        else:
            doc = jsonio.parse_problem(_load_json(_read(args.input, stdin)), field_override=override)
            if args.bound is not None:
                doc.bound = args.bound
            if args.command == "triangularize":
                rep, code = cmd_triangularize(doc, strict=args.strict or doc.strict)
            elif args.command == "mccoy":
                rep, code = cmd_mccoy(doc)
            elif args.command == "radical":
                rep, code = cmd_radical(doc)
            else:
                rep, code = cmd_closure(doc, nonunital=args.nonunital)
    except CharacteristicTooSmall as exc:
        rep, code = {"command": args.command, "error": "CharacteristicTooSmall",
                     "message": f"characteristic guard: {exc}"}, EXIT_ERROR
    except (TrialgError, OSError, ValueError) as exc:
        rep, code = {"command": args.command, "error": type(exc).__name__, "message": str(exc)}, EXIT_ERROR
    except Exception as exc:  # exit-code contract is total
        rep, code = {"command": args.command, "error": type(exc).__name__, "message": str(exc)}, EXIT_ERROR
    if args.timing:
        rep["timing_s"] = round(time.perf_counter() - t0, 6)
    return rep, code, as_json


def main(argv=None, stdin=None, stdout=None):
    stdout = sys.stdout if stdout is None else stdout
    rep, code, as_json = run(sys.argv[1:] if argv is None else argv, stdin)
    if as_json:
        stdout.write(jsonio.dumps(rep))
    else:
        stdout.write(_render_text(rep))
    return code


if __name__ == "__main__":
    sys.exit(main())
