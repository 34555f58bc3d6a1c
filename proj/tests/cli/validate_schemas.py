"""Runs the pfjet CLI and validates its JSON reports against schemas/."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

BINARY = pathlib.Path(sys.argv[1])
SCHEMAS = pathlib.Path(sys.argv[2])

failures = []


def run(args, expect_code=0):
    proc = subprocess.run([str(BINARY), *args], capture_output=True, text=True, timeout=600)
    if proc.returncode != expect_code:
        failures.append(f"{' '.join(args)}: exit {proc.returncode}, expected {expect_code}\n{proc.stderr}")
    return proc


def check(schema_name, args, expect_code=0):
    proc = run([*args, "--format", "json"], expect_code)
    try:
        doc = json.loads(proc.stdout)
    except json.JSONDecodeError as err:
        failures.append(f"{' '.join(args)}: output is not JSON ({err})")
        return None
    schema = json.loads((SCHEMAS / f"{schema_name}.schema.json").read_text())
    try:
        jsonschema.validate(doc, schema)
    except jsonschema.ValidationError as err:
        failures.append(f"{' '.join(args)}: {schema_name} schema violation: {err.message}")
    return doc


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)
    gens = tmp / "gens.txt"
    basis = tmp / "basis.txt"
    sat = tmp / "sat.txt"

    run(["gen", "--n", "6", "--k", "2", "--r", "2", "-o", str(gens)])
    doc = check("gb", ["gb", str(gens), "--field", "p:32003", "-o", str(basis)])
    if doc and doc["basis_size"] != 61:
        failures.append(f"gb basis size {doc['basis_size']}, expected 61")

    doc = check("hilbert", ["hilbert", str(basis)])
    if doc and (doc["codimension"] != 12 or doc["multiplicity"] != 196):
        failures.append(f"hilbert codim/multiplicity {doc['codimension']}/{doc['multiplicity']}")

    doc = check("gb", ["saturate", str(gens), "--by", "x[5,6,0]", "--field", "p:32003", "-o", str(sat)])
    if doc and doc["basis_size"] != 52:
        failures.append(f"saturation basis size {doc['basis_size']}, expected 52")
    doc = check("hilbert", ["hilbert", str(sat)])
    if doc and doc["h_vector"] != [1, 12, 48, 74, 48, 12, 1]:
        failures.append(f"saturation h-vector {doc['h_vector']}")

    doc = check("predict", ["predict", "--n", "8", "--k", "6", "--r", "2"])
    if doc and (doc["component_count_lower_bound"] != 4 or not doc["component_count_exact"]):
        failures.append("predict (8,6,2) component bound")
    doc = check("predict", ["predict", "--n", "10", "--k", "2", "--r", "3"])
    if doc and doc["predicted_codim"] is not None:
        failures.append("predict (10,2,3) should have no prediction")

    doc = check("verify", ["verify-paper", "--all", "--field", "p:32003"])
    if doc and doc["status"] != "pass":
        failures.append("verify-paper --all did not pass")
    doc = check("verify", ["verify-paper", "I_2^{6,2}", "--time-limit", "0"], expect_code=3)
    if doc and doc["status"] != "inconclusive":
        failures.append("zero time limit should be inconclusive")

    for k in (2, 5):
        doc = check("witness", ["witness", "--k", str(k)])
        if doc and (not doc["on_variety"] or doc["z0_condition"] is not False):
            failures.append(f"crux witness k={k}")
    doc = check("witness", ["witness", "--k", "3", "--point", "u56", "--seed", "7", "--field", "p:32003"])
    if doc and (not doc["on_variety"] or doc["z0_condition"] is not True):
        failures.append("u56 sample")

    doc = check("bench", ["bench", "--suite", "paper", "--fields", "p:32003,q", "--strategies", "normal,normal-reversed"])
    if doc and not doc["initial_ideals_consistent"]:
        failures.append("bench initial ideals differ across fields/strategies")
    doc = check("bench", ["bench", "--suite", ""])
    if doc and doc["rows"]:
        failures.append("empty suite should give no rows")

    run(["gb", str(tmp / "missing.txt")], expect_code=2)
    run(["gb", str(gens), "--field", "p:100"], expect_code=1)
    run(["verify-paper", "no-such-case"], expect_code=1)

for f in failures:
    print("FAIL:", f)
print(f"{'ok' if not failures else 'failed'}: {len(failures)} problem(s)")
sys.exit(1 if failures else 0)
