"""Drives the knotscope CLI: exit codes, corpus override and report schema."""
import csv
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, CORPUS = sys.argv[1], sys.argv[2]
failures = []


def run(*args, env=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env)


def expect(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


schema = json.loads(run("schema", "print").stdout)
jsonschema.Draft202012Validator.check_schema(schema)
validator = jsonschema.Draft202012Validator(schema)

with open(CORPUS, newline="") as f:
    names = [row["name"] for row in csv.DictReader(f)]
for name in names:
    p = run("analyze", "--name", name, "--json")
    expect(p.returncode == 0, f"analyze {name} exit {p.returncode}")
    errors = list(validator.iter_errors(json.loads(p.stdout)))
    expect(not errors, f"{name} report: {errors[:1]}")

trefoil = "[[1,5,2,4],[3,1,4,6],[5,3,6,2]]"
report = json.loads(run("analyze", "--pd", trefoil, "--json").stdout)
expect(not list(validator.iter_errors(report)), "pd report validates")
expect(run("analyze", "--pd", "[[1,2,3]]").returncode == 2, "malformed pd exits 2")
expect(run("analyze", "--name", "no_such_knot").returncode == 2, "unknown name exits 2")
expect(run("analyze").returncode == 2, "analyze without input exits 2")
expect(run("theorem", "--pd", trefoil).returncode == 0, "theorem exits 0")
expect(json.loads(run("theorem", "--pd", trefoil).stdout)["verdict"] == "confirmed-T(3,2)", "theorem verdict")
expect(run("theorem", "--pd", "[[1,3,2,4],[3,1,4,2]]").returncode == 2, "theorem on a link exits 2")
desum = run("desum", "--pd", "[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]", "--circle", "1")
expect(desum.returncode == 0 and "left" in json.loads(desum.stdout), "desum figure-eight")
expect(run("desum", "--pd", trefoil, "--circle", "0").returncode == 2, "desum of a non-nested circle exits 2")

full = run("corpus", "run", CORPUS)
expect(full.returncode == 0 and full.stdout.endswith("failures 0\n"), "bundled corpus passes")
expect(run("corpus", "run", CORPUS, "--jobs", "8").stdout == full.stdout, "jobs 8 matches jobs 1")
expect(run("corpus", "run", CORPUS, "--check", "bogus").returncode == 2, "unknown check exits 2")
expect(run("corpus", "run", "/nonexistent.csv").returncode == 2, "missing corpus exits 2")

with tempfile.TemporaryDirectory() as tmp:
    bad = os.path.join(tmp, "bad.csv")
    with open(bad, "w") as f:
        f.write("name,pd\n3_1,\"%s\"\nbroken,\"[[1,5,2],[3,1,4,6],[5,3,6,2]]\"\n" % trefoil)
    expect(run("corpus", "run", bad).returncode == 2, "corrupted row exits 2 without --lenient")
    lenient = run("corpus", "run", bad, "--lenient")
    expect(lenient.returncode == 0 and "skipped 1" in lenient.stdout, "lenient run lists one skipped row")

    wrong = os.path.join(tmp, "wrong.csv")
    with open(wrong, "w") as f:
        f.write("name,pd,alexander,signature,genus,fibered\n3_1,\"%s\",1 -1 1,2,1,Y\n" % trefoil)
    expect(run("corpus", "run", wrong).returncode == 1, "reference mismatch exits 1")

    with open(os.path.join(tmp, os.path.basename(CORPUS)), "w") as f:
        f.write("name,pd\nonly_here,\"%s\"\n" % trefoil)
    env = dict(os.environ, KNOTSCOPE_CORPUS_DIR=tmp)
    expect(run("analyze", "--name", "only_here", env=env).returncode == 0, "corpus dir override")
    expect(run("analyze", "--name", "3_1", env=env).returncode == 2, "override hides the bundled corpus")

print(f"{len(names)} reports validated, {len(failures)} failures")
sys.exit(1 if failures else 0)
