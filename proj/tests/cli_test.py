"""End-to-end checks of the eigsum command-line tool.

Usage: cli_test.py <eigsum binary> <report schema>
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

BIN = sys.argv[1]
SCHEMA = json.loads(Path(sys.argv[2]).read_text())
failures = []


def run(*args, expect=0):
    p = subprocess.run([BIN, *args], capture_output=True, text=True)
    if p.returncode != expect:
        failures.append(f"{args}: exit {p.returncode}, expected {expect}\n{p.stderr}")
    return p


def check(cond, what):
    if not cond:
        failures.append(what)


def validator(ref=None):
    schema = SCHEMA if ref is None else {"$defs": SCHEMA["$defs"], "$ref": f"#/$defs/{ref}"}
    return jsonschema.Draft202012Validator(schema)


with tempfile.TemporaryDirectory() as tmp:
    tmp = Path(tmp)

    def gen(name, *args):
        path = tmp / name
        run("gen", *args, "--out", str(path))
        return str(path)

    # gen
    check(run("gen", "path", "3").stdout == "3 2\n0 1\n1 2\n", "gen path 3 text")
    check(run("gen", "join", "5", "2").stdout.splitlines()[0] == "5 7", "gen join 5 2 has 7 edges")
    check(run("gen", "complete", "4").stdout.splitlines()[0] == "4 6", "gen complete 4 has 6 edges")
    r1 = run("gen", "random", "20", "--prob", "0.3", "--seed", "5").stdout
    r2 = run("gen", "random", "20", "--prob", "0.3", "--seed", "5").stdout
    check(r1 == r2, "random generator is seed-deterministic")
    run("gen", "join", "5", expect=2)
    run("gen", "bogus", "5", expect=2)

    k4 = gen("k4.txt", "complete", "4")
    star4 = gen("s4.txt", "star", "4")
    star5 = gen("s5.txt", "star", "5")
    k5 = gen("k5.txt", "complete", "5")
    p50 = gen("p50.txt", "path", "50")
    c8 = gen("c8.txt", "cycle", "8")
    j62 = gen("j62.txt", "join", "6", "2")
    rnd = gen("rnd.txt", "random", "30", "--prob", "0.2", "--seed", "9")
    lat = gen("lat.txt", "lattice", "80", "--nu", "2", "--seed", "3")

    # spectrum
    rows = run("spectrum", k4).stdout.splitlines()
    check(rows[0] == "index,value", "spectrum header")
    vals = [float(r.split(",")[1]) for r in rows[1:]]
    check(abs(vals[0]) < 1e-9 and all(abs(v - 4) < 1e-9 for v in vals[1:]), "K4 laplacian 0,4,4,4")
    vals = [float(r.split(",")[1]) for r in run("spectrum", star4, "--kind", "adjacency").stdout.splitlines()[1:]]
    check(abs(vals[0] - 3 ** 0.5) < 1e-9 and abs(vals[3] + 3 ** 0.5) < 1e-9, "star_4 adjacency")
    check(len(run("spectrum", "--file", k4, "--kind", "normalized").stdout.splitlines()) == 5, "normalized rows")
    bad = tmp / "bad.txt"
    bad.write_text("3 2\n0 1\n1 1\n")
    p = run("spectrum", str(bad), expect=2)
    check("3" in p.stderr, "parse error names the line")
    run("spectrum", str(tmp / "missing.txt"), expect=2)

    # bounds
    report_v = validator("boundReport")
    out = json.loads(run("bounds", "all", "--file", k4).stdout)
    for r in out:
        report_v.validate(r)
        check(r["holds"], f"K4 {r['name']} holds")
        if r["name"].startswith(("fiedler", "pair_sum")):
            check(r["verdict"] == "EQUALITY", f"K4 {r['name']} equality")
    out = json.loads(run("bounds", "laplacian-pairs", "--file", star5, "--k", "2").stdout)
    check(len(out) == 1 and out[0]["verdict"] == "EQUALITY", "star_5 laplacian-pairs equality")
    out = json.loads(run("bounds", "all", "--file", rnd, "--squares", "--paper-verbatim").stdout)
    check(all(r["holds"] for r in out if r["asserted"]), "random graph asserted reports hold")
    for r in out:
        report_v.validate(r)
    pairs = tmp / "pairs.txt"
    pairs.write_text("0 1\n1 0\n0 2\n2 0\n1 2\n")
    out = json.loads(run("bounds", "laplacian-pairs", "--file", star5, "--k", "2", "--pairs-file", str(pairs)).stdout)
    check(out[0]["pairs"][0] == [0, 1], "explicit pairs echoed")
    run("bounds", "laplacian-pairs", "--file", star5, "--k", "3", "--pairs-file", str(pairs), expect=2)
    run("bounds", "lsum", "--file", k4, "--L", "9", expect=2)
    csv = run("bounds", "fiedler", "--file", k4, "--format", "csv").stdout
    check(csv.startswith("name,params,bound,measured,slack,verdict,asserted,tolerance\n"), "csv header")
    run("bounds", "all", "--file", k4, "--tolerance", "-1", expect=2)

    # lattice check
    out = json.loads(run("lattice", "check", lat).stdout)
    for r in out:
        report_v.validate(r)
    check(all(r["holds"] for r in out if r["asserted"]), "lattice suite holds")

    # embed-cert
    verdict_v = validator("embedVerdict")
    out = json.loads(run("embed-cert", k5, "--max-dim", "2").stdout)
    for v in out:
        verdict_v.validate(v)
    check(out[0]["verdict"] == "EXCLUDED", "K5 excluded at nu=1")
    check(json.loads(run("embed-cert", p50).stdout)[0]["verdict"] == "NOT-EXCLUDED", "P50 not excluded at nu=1")
    check(json.loads(run("embed-cert", c8).stdout)[1]["verdict"] == "NOT-EXCLUDED", "C8 not excluded at nu=2")
    dis = tmp / "dis.txt"
    dis.write_text("4 2\n0 1\n2 3\n")
    p = run("embed-cert", str(dis), expect=2)
    check("connected" in p.stderr, "disconnected input message")

    # report
    a = run("report", j62).stdout
    b = run("report", j62).stdout
    check(a == b, "report output is byte-identical across runs")
    doc = json.loads(a)
    validator().validate(doc)
    names = [r["name"] for r in doc["reports"]]
    check("trace_identity" in names and "trace_square_identity" in names, "report has trace checks")
    tr = next(r for r in doc["reports"] if r["name"] == "trace_identity")
    check(abs(tr["bound"] - 2 * 9) < 1e-12, "join(6,2) trace p(2n-p-1) = 18")
    check(len(doc["manifest"]["input_digest"]) == 16, "manifest digest")
    # Reformatting the input does not change the digest.
    noisy = tmp / "noisy.txt"
    noisy.write_text("# comment\n" + Path(j62).read_text().replace("\n", "   \n"))
    doc2 = json.loads(run("report", str(noisy)).stdout)
    check(doc2["manifest"]["input_digest"] == doc["manifest"]["input_digest"], "digest of canonical input")
    validator().validate(json.loads(run("report", rnd, "--compact").stdout))
    check(run("report", j62, "--format", "csv").stdout.startswith("# tool_version="), "csv manifest header")
    outfile = tmp / "r.json"
    run("report", j62, "--out", str(outfile))
    written = json.loads(outfile.read_text())
    check(written["reports"] == doc["reports"], "--out writes the same reports")

for f in failures:
    print("FAIL:", f)
print(f"{'OK' if not failures else 'FAILED'}: cli_test")
sys.exit(1 if failures else 0)
