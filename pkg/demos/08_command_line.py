"""
Driving the command-line tool
=============================

The ``trialg`` command reads a JSON problem document and writes a report.
This script builds a document, runs a few subcommands in-process and
verifies a report the way an outside tool would.

Equivalent shell usage::

    trialg triangularize problem.json --json > report.json
    trialg verify report.json
    trialg mccoy --field F5 problem.json
    trialg demo lower-tri --bound 1000
"""

import io
import json

from trialg import QQ, Matrix
from trialg.cli import main
from trialg.jsonio import ProblemDoc, dumps

doc = ProblemDoc(QQ, 2, [Matrix(QQ, [[0, -1], [1, 0]])])
text = dumps(doc.to_json())
print(text)


def run(*argv, stdin=text):
    out = io.StringIO()
    code = main(list(argv), stdin=io.StringIO(stdin), stdout=out)
    return code, out.getvalue()


for argv in (["mccoy"], ["mccoy", "--field", "F5"], ["triangularize", "--field", "F5"]):
    code, out = run(*argv)
    print("$ trialg", " ".join(argv), f"-> exit {code}")
    print(out)

code, report = run("triangularize", "--field", "F5", "--json")
code, out = run("verify", stdin=report)
print("verify ->", code, out.strip())
print("certificate flag:", json.loads(report)["certificate"]["ordered_basis"])
